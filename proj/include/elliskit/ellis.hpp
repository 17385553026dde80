#pragma once

// Enveloping semigroups of finite flows and their minimal-ideal structure.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "elliskit/algebra.hpp"
#include "elliskit/check.hpp"
#include "elliskit/flows.hpp"

namespace elliskit {

using SIdx = std::uint32_t;  // element index in an EllisSemigroup

class EllisSemigroup {
 public:
  // Breadth-first closure of the acting maps under composition, starting
  // from the identity map (element 0). Element i+1.. are numbered in
  // discovery order extending each element on the right by the generators.
  static EllisSemigroup compute(Flow const& flow, Caps const& caps = default_caps());
  static EllisSemigroup from_maps(std::size_t points, std::vector<Map> const& generators,
                                  Caps const& caps = default_caps());

  std::size_t size() const noexcept { return count_; }
  std::size_t points() const noexcept { return points_; }
  SIdx identity() const noexcept { return 0; }
  std::span<Point const> element(SIdx i) const {
    return {maps_.data() + static_cast<std::size_t>(i) * points_, points_};
  }
  Point apply(SIdx f, Point x) const noexcept { return maps_[f * points_ + x]; }

  // a * b is the map x -> a(b(x)).
  SIdx mul(SIdx a, SIdx b) const;
  std::optional<SIdx> find(std::span<Point const> map) const;
  bool has_table() const noexcept { return !table_.empty(); }

  std::vector<SIdx> const& generator_images() const noexcept { return gen_images_; }
  // right_[f * gens + s] = f * gen_s
  SIdx right_by_generator(SIdx f, std::size_t s) const { return right_[f * gen_count() + s]; }
  SIdx left_by_generator(std::size_t s, SIdx f) const { return left_[f * gen_count() + s]; }
  std::size_t gen_count() const noexcept { return gen_images_.size(); }

  bool is_idempotent(SIdx f) const { return mul(f, f) == f; }
  bool is_bijective(SIdx f) const;

 private:
  std::size_t points_ = 0;
  std::size_t count_ = 0;
  std::vector<Point> maps_;
  std::unordered_map<Map, SIdx, boost::hash<Map>> index_;
  std::vector<SIdx> gen_images_;
  std::vector<SIdx> right_;
  std::vector<SIdx> left_;
  std::vector<SIdx> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<SIdx> table_;
};

struct MinimalIdeal {
  std::vector<SIdx> members;      // sorted
  std::vector<SIdx> idempotents;  // sorted
  bool contains(SIdx f) const;
};

// Sink strongly connected components of the left Cayley graph f -> s*f.
std::vector<MinimalIdeal> minimal_left_ideals(EllisSemigroup const& s);

// The six clauses of the minimal ideal/idempotent fact, checked on one
// semigroup: ideal property and M = S s = M s, disjoint decomposition into
// the groups uM, group axioms of uM with identity u, s u = s, and the
// isomorphisms s -> v s v between all ideal groups.
CheckList check_ideal_structure(EllisSemigroup const& s, std::vector<MinimalIdeal> const& ideals);

struct IdealGroup {
  std::size_t ideal = 0;       // index into the list of minimal ideals
  SIdx idempotent = 0;
  std::vector<SIdx> members;   // uM, sorted; group element i is members[i]
  FiniteGroup group_view;
  std::optional<Elem> local(SIdx f) const;
};

IdealGroup ideal_group(EllisSemigroup const& s, std::vector<MinimalIdeal> const& ideals,
                       std::size_t ideal, SIdx u);

// s -> v s v from uM to vN, as local indices of the two group views.
std::vector<Elem> ideal_group_isomorphism(EllisSemigroup const& s, IdealGroup const& from,
                                          IdealGroup const& to);

// a o B: limits of nets pi_{g_i} b_i with pi_{g_i} -> a and b_i in B. In
// the discrete topology a net converges to a exactly when it is eventually
// a, so the limits are the products a b.
std::vector<SIdx> circ(EllisSemigroup const& s, SIdx a, std::vector<SIdx> const& b);

// u (u o A) intersected with uM, for A a subset of uM given as semigroup
// elements.
std::vector<SIdx> tau_closure(EllisSemigroup const& s, IdealGroup const& g,
                              std::vector<SIdx> const& a);

// Intersection of tau-closures of the tau-neighbourhoods of u, as a
// subgroup of g.group_view.
Subgroup h_subgroup(EllisSemigroup const& s, IdealGroup const& g);

struct EpimorphismReport {
  std::vector<SIdx> map;  // source element -> target element
  CheckList checks;
  std::vector<std::pair<std::size_t, std::size_t>> ideal_pairs;
  std::vector<std::pair<SIdx, SIdx>> idempotent_pairs;
  bool valid() const { return all_passed(checks); }
};

// phi_*(f)(phi(z)) = phi(f(z)).
EpimorphismReport induced_epimorphism(FlowMorphism const& m, EllisSemigroup const& src,
                                      EllisSemigroup const& dst);

struct TowerLevelReport {
  std::size_t ellis_size = 0;
  std::size_t ideal_count = 0;
  std::size_t idempotent_count = 0;
  std::size_t ideal_group_order = 0;
  SIdx chain_idempotent = 0;
};

struct TowerReport {
  std::vector<TowerLevelReport> levels;
  CheckList checks;
  bool coherent() const { return all_passed(checks); }
};

// connecting[i] maps levels[i + 1] onto levels[i].
TowerReport check_tower(std::vector<Ambit> const& levels,
                        std::vector<FlowMorphism> const& connecting,
                        Caps const& caps = default_caps());

// E(G1 x G2, X1 x X2) against E(G1, X1) x E(G2, X2) through the two
// coordinate projections.
CheckList check_product_ellis(Flow const& a, Flow const& b, Caps const& caps = default_caps());

}  // namespace elliskit
