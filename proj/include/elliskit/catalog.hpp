#pragma once

// Seeded random instances for the verification suites. Every instance draws
// from its own generator seeded by (seed, index), so instances do not depend
// on how many were drawn before them or on which worker draws them.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "elliskit/algebra.hpp"
#include "elliskit/flows.hpp"
#include "elliskit/relations.hpp"
#include "elliskit/structured.hpp"

namespace elliskit {

using Rng = std::mt19937_64;

Rng instance_rng(std::uint64_t seed, std::size_t index);

struct CatalogGroup {
  std::string name;
  std::shared_ptr<FiniteGroup const> group;
};

// Cyclic groups up to order 12, dihedral groups up to order 12, S3, S4, Q8,
// and direct products of two of these, all of order at most max_order.
std::vector<CatalogGroup> group_catalog(std::size_t max_order);

CatalogGroup random_group(Rng& rng, std::size_t max_order);

// Uniform choice from a vector; the vector must be nonempty.
template <class T>
T const& pick(Rng& rng, std::vector<T> const& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Left action on G/K for a random K of index at most max_points.
Flow random_coset_flow(Rng& rng, std::shared_ptr<FiniteGroup const> const& g, std::size_t max_points,
                       Subgroup* k_out = nullptr, Caps const& caps = default_caps());

// Disjoint union of one to three coset actions, at most max_points in all.
Flow random_group_flow(Rng& rng, std::shared_ptr<FiniteGroup const> const& g, std::size_t max_points,
                       Caps const& caps = default_caps());

// One to max_gens random self-maps of at most max_points points, acting
// through the trivial group.
Flow random_transformation_flow(Rng& rng, std::size_t max_points, std::size_t max_gens);

// Finest invariant equivalence relation relating each given pair.
EquivRelation invariant_closure(Flow const& flow, std::vector<std::pair<Point, Point>> const& pairs);

// Invariant closure of zero to three random pairs.
EquivRelation random_invariant_relation(Rng& rng, Flow const& flow);

// Union/intersection closure of a few random subsets.
Lattice random_lattice(Rng& rng, Ground ground, std::size_t points, Caps const& caps = default_caps());

// Every transitive and two-orbit action of every catalog group of order at
// most max_order on at most max_points points, one flow per conjugacy
// class of point stabilisers (per orbit).
std::vector<std::shared_ptr<Flow const>> small_actions(std::size_t max_order, std::size_t max_points,
                                                       Caps const& caps = default_caps());

}  // namespace elliskit
