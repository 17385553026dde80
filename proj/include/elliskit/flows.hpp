#pragma once

// Finite flows: a group acting on 0..n-1, optionally with extra
// non-invertible maps standing in for limit points of the enveloping
// semigroup.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "elliskit/algebra.hpp"
#include "elliskit/check.hpp"

namespace elliskit {

using Point = std::uint32_t;
using Map = std::vector<Point>;  // a self-map of the point set

struct TransformationGenerators {
  std::size_t degree = 0;
  std::vector<Map> maps;
};

class Flow {
 public:
  // Group acting through the images of its generators (in the order of
  // group->generators()). The action of every element is derived along the
  // breadth-first spanning tree and every edge x -> x*s is checked, which
  // proves action(gh) = action(g) action(h) for all pairs.
  static Flow from_generator_images(std::shared_ptr<FiniteGroup const> group, std::size_t points,
                                    std::vector<Map> const& generator_images,
                                    std::vector<Map> transformations = {});

  // Group acting by one explicit map per element; every pair (g, h) and
  // point x is checked.
  static Flow from_element_maps(std::shared_ptr<FiniteGroup const> group, std::size_t points,
                                std::vector<Map> const& element_maps,
                                std::vector<Map> transformations = {});

  static Flow natural(std::shared_ptr<FiniteGroup const> group);
  // Left translation of the group on itself; point g is element g.
  static Flow regular(std::shared_ptr<FiniteGroup const> group);
  // Left multiplication on the left cosets gH, numbered by smallest member.
  static Flow coset_action(std::shared_ptr<FiniteGroup const> group, Subgroup const& h);
  // Trivial group plus the given maps.
  static Flow from_transformations(TransformationGenerators const& gens);

  FiniteGroup const& group() const noexcept { return *group_; }
  std::shared_ptr<FiniteGroup const> group_ptr() const noexcept { return group_; }
  std::size_t points() const noexcept { return points_; }
  Point act(Elem g, Point x) const noexcept { return action_[g * points_ + x]; }
  std::span<Point const> action_map(Elem g) const {
    return {action_.data() + static_cast<std::size_t>(g) * points_, points_};
  }
  std::vector<Map> const& transformations() const noexcept { return transformations_; }

  // Generator images of the group followed by the transformations: the maps
  // whose composition closure is the enveloping semigroup.
  std::vector<Map> acting_maps() const;

  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const { return orbits().size() == 1; }
  bool is_free() const;
  Subgroup stabilizer(Point x) const;
  // Elements mapping the set onto itself.
  Subgroup setwise_stabilizer(std::vector<Point> const& set) const;

 private:
  Flow() = default;
  void set_transformations(std::vector<Map> maps);

  std::shared_ptr<FiniteGroup const> group_;
  std::size_t points_ = 0;
  std::vector<Point> action_;
  std::vector<Map> transformations_;
};

struct Ambit {
  std::shared_ptr<Flow const> flow;
  Point basepoint = 0;
};

// Validates that every point is reachable from the basepoint under the
// monoid generated by the acting maps.
Ambit make_ambit(std::shared_ptr<Flow const> flow, Point basepoint);

Flow product_flow(std::vector<Flow> const& flows, Caps const& caps = default_caps());
Flow disjoint_union_flow(std::vector<Flow> const& flows);

constexpr std::uint32_t kIdentityTransformation = static_cast<std::uint32_t>(-1);

struct FlowMorphism {
  Ambit source;
  Ambit target;
  std::vector<Point> point_map;
  // Source group element -> target group element. Empty means the groups are
  // the same and the correspondence is the identity.
  std::vector<Elem> group_map;
  // Source transformation -> target transformation index, or
  // kIdentityTransformation when it maps to the identity. Empty means
  // index-for-index.
  std::vector<std::uint32_t> transformation_map;

  Elem map_element(Elem g) const { return group_map.empty() ? g : group_map[g]; }
};

CheckList check_morphism(FlowMorphism const& m);

// Projection of product_flow({a, b}) onto its first or second factor, with
// the given ambits' basepoints.
FlowMorphism product_projection(std::shared_ptr<Flow const> product, Ambit const& factor_a,
                                Ambit const& factor_b, std::size_t which);

struct IndependenceResult {
  bool found = false;
  std::vector<Elem> witness;            // g_1 .. g_k
  std::vector<std::vector<Point>> sets; // g_i U
  std::size_t distinct_translates = 0;
  std::size_t families_examined = 0;
  std::string certificate;
};

bool is_independent_family(std::size_t points, std::vector<std::vector<Point>> const& sets);

IndependenceResult independent_translates(Flow const& flow, std::vector<Point> const& u,
                                          std::size_t k, Caps const& caps = default_caps());

}  // namespace elliskit
