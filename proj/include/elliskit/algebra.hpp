#pragma once

// Finite groups given by multiplication tables, together with the
// subgroup/quotient algebra consumed by the dynamics and relations modules.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "elliskit/caps.hpp"

namespace elliskit {

using Elem = std::uint32_t;
using Perm = std::vector<std::uint32_t>;

class FiniteGroup {
 public:
  FiniteGroup() = default;  // the trivial group

  // Validates the table exhaustively: identity and inverses by scan, then
  // associativity (all triples for small tables, Light's test over a
  // generating set otherwise; both are complete).
  static FiniteGroup from_table(std::vector<std::vector<Elem>> const& table);

  // Closure of the generators under composition. Elements are numbered in
  // breadth-first discovery order starting from the identity, extending each
  // element by the generators in input order. Products compose right to
  // left: (p * q)(x) = p(q(x)).
  static FiniteGroup from_permutations(std::size_t degree,
                                       std::vector<Perm> const& generators,
                                       Caps const& caps = default_caps());

  static FiniteGroup trivial();

  std::size_t order() const noexcept { return n_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a * n_ + b]; }
  Elem inverse(Elem a) const noexcept { return inverse_[a]; }
  Elem conjugate(Elem g, Elem h) const noexcept {  // g h g^-1
    return mul(mul(g, h), inverse(g));
  }
  std::size_t element_order(Elem a) const;

  // A generating set; the given generators for permutation groups, a greedy
  // canonical one otherwise.
  std::vector<Elem> const& generators() const noexcept { return gens_; }

  // Permutation representation, present for groups built from permutations
  // and for the named groups (their natural action).
  bool has_permutation_rep() const noexcept { return perm_set_; }
  std::size_t degree() const noexcept { return degree_; }
  std::span<std::uint32_t const> permutation(Elem a) const {
    return {perms_.data() + static_cast<std::size_t>(a) * degree_, degree_};
  }
  std::optional<Elem> find_permutation(std::span<std::uint32_t const> perm) const;

  std::vector<std::vector<Elem>> table() const;

  bool operator==(FiniteGroup const& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

  // Attaches a natural permutation representation (one image vector per
  // element, all of length degree). Used by the named-group builders.
  void set_permutation_rep(std::size_t degree, std::vector<std::uint32_t> flat_images);
  void set_generators(std::vector<Elem> gens) { gens_ = std::move(gens); }

 private:
  void compute_generators();

  std::size_t n_ = 1;
  std::vector<Elem> table_{0};
  std::vector<Elem> inverse_{0};
  Elem identity_ = 0;
  std::vector<Elem> gens_;
  std::size_t degree_ = 0;
  std::vector<std::uint32_t> perms_;
  bool perm_set_ = false;

  friend FiniteGroup direct_product(FiniteGroup const&, FiniteGroup const&);
  friend FiniteGroup table_group_unchecked(std::size_t, std::vector<Elem>);
};

// Builds a group from a flat table already known to satisfy the axioms
// (products of validated groups, affine constructions). Identity/inverse
// tables are still located by scan.
FiniteGroup table_group_unchecked(std::size_t n, std::vector<Elem> flat);

// Direct product A x B; element (a, b) has index a * |B| + b.
FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

// A subgroup stored as a sorted member list plus a membership mask over the
// parent's elements. The parent is passed alongside explicitly.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Elem> members);

  std::vector<Elem> const& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem g) const noexcept { return g < mask_.size() && mask_[g]; }
  bool operator==(Subgroup const& other) const { return members_ == other.members_; }
  bool operator<(Subgroup const& other) const {
    if (order() != other.order()) {
      return order() < other.order();
    }
    return members_ < other.members_;
  }
  bool is_subset_of(Subgroup const& other) const;

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

struct GroupQuotient {
  Subgroup normal_subgroup;
  std::vector<std::vector<Elem>> cosets;  // ordered by smallest member
  std::vector<std::size_t> coset_of;      // element -> coset index
  FiniteGroup group;                      // coset i is element i
};

Subgroup subgroup_generated(FiniteGroup const& g, std::vector<Elem> const& seeds);
Subgroup whole_group(FiniteGroup const& g);
Subgroup trivial_subgroup(FiniteGroup const& g);
bool is_subgroup(FiniteGroup const& g, std::vector<Elem> const& members);
bool is_normal(FiniteGroup const& g, Subgroup const& h);

// Every subgroup exactly once, sorted by (order, member list).
std::vector<Subgroup> enumerate_subgroups(FiniteGroup const& g,
                                          Caps const& caps = default_caps());

Subgroup normal_core(FiniteGroup const& g, Subgroup const& h);
Subgroup intersect(FiniteGroup const& g, Subgroup const& a, Subgroup const& b);
// The subgroup AB, defined when one factor normalises the other.
Subgroup product_subgroup(FiniteGroup const& g, Subgroup const& a, Subgroup const& b);

GroupQuotient quotient_group(FiniteGroup const& g, Subgroup const& n);

struct IsomorphismVerdict {
  bool isomorphic = false;
  std::vector<Elem> map;    // A element -> B element when isomorphic
  std::string certificate;  // distinguishing invariant or search certificate
};

IsomorphismVerdict are_isomorphic(FiniteGroup const& a, FiniteGroup const& b,
                                  Caps const& caps = default_caps());

bool is_homomorphism(FiniteGroup const& a, FiniteGroup const& b, std::vector<Elem> const& map);

// Named builders. Canonical element orders:
//  cyclic(n): element k is rotation by k of the n-gon's vertices.
//  symmetric(n): discovery order from generators (0 1), (0 1 ... n-1).
//  dihedral(n): order 2n, discovery order from rotation x->x+1, reflection x->-x.
//  affine(q, dim): pairs (v, M), index v * |GL| + m where vectors are listed
//    with the first coordinate most significant and invertible matrices in
//    row-major lexicographic order of their entries; (v,M)(w,N) = (v+Mw, MN).
//    Natural action on F_q^dim is w -> v + M w.
FiniteGroup cyclic_group(std::size_t n, Caps const& caps = default_caps());
FiniteGroup symmetric_group(std::size_t n, Caps const& caps = default_caps());
FiniteGroup dihedral_group(std::size_t n, Caps const& caps = default_caps());
FiniteGroup affine_group(std::size_t q, std::size_t dim, Caps const& caps = default_caps());
FiniteGroup quaternion_group();

struct NamedGroupSpec {
  std::string name;  // cyclic | symmetric | dihedral | affine | quaternion
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t dim = 0;
};

FiniteGroup named_group(NamedGroupSpec const& spec, Caps const& caps = default_caps());

// Finite field helpers used by the affine builder and the affine fixtures.
namespace gf {
std::size_t add(std::size_t q, std::size_t a, std::size_t b);
std::size_t mul(std::size_t q, std::size_t a, std::size_t b);
}  // namespace gf

// Coordinates of the affine group's elements, for fixtures that select
// subgroups and supports by linear-algebra predicates.
struct AffineCoordinates {
  std::size_t q = 0;
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> vectors;   // index -> coordinates
  std::vector<std::vector<std::size_t>> matrices;  // index -> row-major entries
  std::size_t vector_index(std::vector<std::size_t> const& v) const;
  Elem element(std::size_t vector_idx, std::size_t matrix_idx) const {
    return static_cast<Elem>(vector_idx * matrices.size() + matrix_idx);
  }
  std::size_t vector_of(Elem e) const { return e / matrices.size(); }
  std::size_t matrix_of(Elem e) const { return e % matrices.size(); }
  std::vector<std::size_t> apply(std::size_t matrix_idx, std::vector<std::size_t> const& v) const;
  std::size_t identity_matrix() const;
};

AffineCoordinates affine_coordinates(std::size_t q, std::size_t dim);

}  // namespace elliskit
