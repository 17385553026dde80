#pragma once

// Invariant equivalence relations on finite G-sets: H_E, E_H, R_{H,X~},
// maximal witnesses, orbitality and weak orbitality.

#include <optional>
#include <string>
#include <vector>

#include "elliskit/algebra.hpp"
#include "elliskit/check.hpp"
#include "elliskit/flows.hpp"

namespace elliskit {

// A partition of 0..n-1. Classes are kept canonical: each sorted, ordered by
// smallest member, so equal relations compare equal.
class EquivRelation {
 public:
  EquivRelation() = default;
  static EquivRelation from_classes(std::size_t points, std::vector<std::vector<Point>> const& classes);
  // Points with equal labels are related.
  static EquivRelation from_labels(std::vector<std::uint32_t> const& labels);
  static EquivRelation equality(std::size_t points);
  static EquivRelation total(std::size_t points);

  std::size_t points() const noexcept { return class_of_.size(); }
  std::vector<std::vector<Point>> const& classes() const noexcept { return classes_; }
  std::size_t class_of(Point x) const { return class_of_[x]; }
  bool related(Point a, Point b) const { return class_of_[a] == class_of_[b]; }
  std::vector<Point> const& class_containing(Point x) const { return classes_[class_of_[x]]; }
  bool refines(EquivRelation const& coarser) const;

  bool operator==(EquivRelation const& o) const { return classes_ == o.classes_; }

 private:
  std::vector<std::vector<Point>> classes_;
  std::vector<std::size_t> class_of_;
};

// A binary relation on 0..n-1 as a bit matrix.
class PairRelation {
 public:
  explicit PairRelation(std::size_t points = 0) : n_(points), bits_(points * points, false) {}
  std::size_t points() const noexcept { return n_; }
  bool test(Point a, Point b) const { return bits_[a * n_ + b]; }
  void set(Point a, Point b) { bits_[a * n_ + b] = true; }
  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool operator==(PairRelation const& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  static PairRelation of(EquivRelation const& e);

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

struct InvarianceVerdict {
  bool invariant = true;
  std::string witness;  // "g=.. x1=.. x2=.." when not invariant
};

InvarianceVerdict check_invariance(Flow const& flow, EquivRelation const& e);

// H_E = {g : g x E x for all x}. Throws NotInvariant for non-invariant E,
// TheoremViolation if the result is not normal.
Subgroup kernel_group(Flow const& flow, EquivRelation const& e);

// Partition into H-orbits.
EquivRelation orbit_relation(Flow const& flow, Subgroup const& h);

struct WitnessPair {
  Subgroup subgroup;
  std::vector<Point> support;  // sorted
};

struct RRelation {
  PairRelation pairs;
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  std::optional<EquivRelation> relation;  // present when an equivalence
  bool is_equivalence() const { return relation.has_value(); }
};

// Smallest invariant relation containing (x~, h x~) for x~ in X~, h in H:
// the G-translates of those seed pairs, collected by a worklist over the
// group generators.
RRelation r_relation(Flow const& flow, WitnessPair const& w);

// Union of g^-1 H g x0 over g with g x0 in X~.
std::vector<Point> class_formula(Flow const& flow, WitnessPair const& w, Point x0);

// {x : x E h x for all h in H}
std::vector<Point> maximal_support(Flow const& flow, EquivRelation const& e, Subgroup const& h);
// {g : x~ E g x~ for all x~ in X~}
Subgroup maximal_subgroup(Flow const& flow, EquivRelation const& e, std::vector<Point> const& support);

bool is_witness(Flow const& flow, EquivRelation const& e, WitnessPair const& w);

// Alternates the two operators from w to a fixpoint. Throws NotAWitness
// unless E = R_{H,X~}.
WitnessPair maximal_witnesses(Flow const& flow, EquivRelation const& e, WitnessPair const& w);

// No strictly larger subgroup (resp. support) keeps E = R. Larger
// witnesses only enlarge R, so single-element extensions suffice.
bool is_maximal_pair(Flow const& flow, EquivRelation const& e, WitnessPair const& w);

struct OrbitalVerdict {
  bool orbital = false;
  Subgroup h_e;
  std::string witness;  // pair related by E but not by E_{H_E}
};

OrbitalVerdict is_orbital(Flow const& flow, EquivRelation const& e);

struct WeakOrbitalVerdict {
  bool weakly_orbital = false;
  std::optional<WitnessPair> witness;
  std::size_t subgroups_examined = 0;
  std::string certificate;
};

// E is weakly orbital iff E = R_{H, X~'_H} for some subgroup H, where X~'_H
// is the maximal support; a witness (H, X~) can always be replaced by
// (H, X~'_H) without changing R. Subgroups are tried in canonical order.
WeakOrbitalVerdict is_weakly_orbital(Flow const& flow, EquivRelation const& e,
                                     Caps const& caps = default_caps());

struct FreeCorrespondence {
  std::vector<std::pair<Subgroup, EquivRelation>> pairs;  // N -> E_N over normal N
  CheckList checks;
};

FreeCorrespondence free_action_correspondence(Flow const& flow, Caps const& caps = default_caps());

// All invariant equivalence relations, by enumerating set partitions.
std::vector<EquivRelation> enumerate_invariant_relations(Flow const& flow,
                                                         Caps const& caps = default_caps());

std::string points_text(std::vector<Point> const& pts);

}  // namespace elliskit
