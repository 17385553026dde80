#pragma once

// Pseudo-closed lattices on G, X and their products, agreeable actions, and
// finite checks of the closedness-transfer theorems for orbital and weakly
// orbital relations.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elliskit/algebra.hpp"
#include "elliskit/check.hpp"
#include "elliskit/flows.hpp"
#include "elliskit/relations.hpp"

namespace elliskit {

// Product indices are row-major: (g, x) -> g * |X| + x, (x1, x2) -> x1 * |X|
// + x2, ((x1, x2), (x3, x4)) -> (x1 * |X| + x2) * |X|^2 + x3 * |X| + x4.
enum class Ground { G, X, GX, XX, XXXX, XG };

std::string_view ground_name(Ground g);
Ground parse_ground(std::string_view name);

// A finite family of subsets closed under union and intersection, containing
// the empty set and the ground. Stored as the least member containing each
// point; the members are then exactly the unions of these principal sets.
class Lattice {
 public:
  Lattice() = default;
  static Lattice discrete(Ground ground, std::size_t points);
  static Lattice indiscrete(Ground ground, std::size_t points, Caps const& caps = default_caps());
  // principal[p] must contain p and be closed: q in principal[p] implies
  // principal[q] is a subset of principal[p].
  static Lattice from_principal(Ground ground, std::vector<std::vector<Point>> principal,
                                Caps const& caps = default_caps());

  Ground ground() const noexcept { return ground_; }
  std::size_t points() const noexcept { return principal_.size(); }
  std::vector<Point> const& principal(Point p) const { return principal_[p]; }
  bool is_discrete() const;

  // Edges whose reflexive-transitive closure is the containment preorder
  // p -> principal(p); a set is a member iff it is closed along them.
  std::vector<Point> const& cover(Point p) const { return cover_[p]; }

  bool contains(std::vector<bool> const& set) const;
  bool contains_points(std::vector<Point> const& set) const;
  // Every member, sorted. Throws SizeCapExceeded past caps.lattice_sets.
  std::vector<std::vector<Point>> members(Caps const& caps = default_caps()) const;

  bool operator==(Lattice const& o) const { return ground_ == o.ground_ && principal_ == o.principal_; }

 private:
  Ground ground_ = Ground::X;
  std::vector<std::vector<Point>> principal_;
  std::vector<std::vector<Point>> cover_;

  void build_cover();
};

struct LatticeBuild {
  Lattice lattice;
  std::vector<std::vector<Point>> added;  // sets the completion had to add
};

// Without auto_complete, throws NotALattice naming a missing set or a pair
// whose union or intersection is absent.
LatticeBuild make_lattice(Ground ground, std::size_t points, std::vector<std::vector<Point>> const& sets,
                          bool auto_complete, Caps const& caps = default_caps());

// Union/intersection closure of the rectangles A_i x B_j.
Lattice product_lattice(Lattice const& a, Lattice const& b, Ground result, Caps const& caps = default_caps());

struct StructuredInstance {
  std::shared_ptr<Flow const> flow;
  Lattice g, x, gx, xx, xxxx, xg;
  EquivRelation e;
};

// Missing product lattices default to the product lattices of g and x (and
// xx for the fourth power).
StructuredInstance make_instance(std::shared_ptr<Flow const> flow, Lattice g, Lattice x, EquivRelation e,
                                 std::optional<Lattice> xx = std::nullopt, Caps const& caps = default_caps());

struct AgreeabilityVerdict {
  CheckList axioms;  // one entry per axiom, in order
  bool agreeable() const { return all_passed(axioms); }
};

AgreeabilityVerdict is_agreeable(StructuredInstance const& inst);

struct Condition {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct TheoremReport {
  std::vector<Condition> conditions;  // the equivalent conditions, in order
  std::vector<Condition> extra;       // informative, not part of the equivalence
  CheckList lemma_checks;             // stabiliser and fix-set closedness
  bool equivalent = false;
  bool consistent() const { return equivalent && all_passed(lemma_checks); }
};

// Conditions without the preconditions, so that instances outside the
// theorems' hypotheses can still be evaluated.
TheoremReport evaluate_thm_orb(StructuredInstance const& inst, Caps const& caps = default_caps());
TheoremReport evaluate_thm_worb(StructuredInstance const& inst, Caps const& caps = default_caps());

// Throw NotAgreeable, NotOrbital or NotWeaklyOrbital when the hypotheses
// fail.
TheoremReport verify_thm_orb(StructuredInstance const& inst, Caps const& caps = default_caps());
TheoremReport verify_thm_worb(StructuredInstance const& inst, Caps const& caps = default_caps());

// The pair relation of E as a point set of X^2.
std::vector<bool> relation_set(EquivRelation const& e);

}  // namespace elliskit
