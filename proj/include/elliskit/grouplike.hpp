#pragma once

// Group-like relations on finite ambits and the identification of X/E with
// a coset space of the Ellis-group quotient G^ = uM / Core(H(uM) D).

#include <optional>
#include <string>
#include <vector>

#include "elliskit/algebra.hpp"
#include "elliskit/check.hpp"
#include "elliskit/ellis.hpp"
#include "elliskit/flows.hpp"
#include "elliskit/relations.hpp"

namespace elliskit {

struct GroupLikeCertificate {
  bool group_like = false;
  std::string refutation;
  // Group on the E-classes: class index i is element i, [x0] the identity.
  FiniteGroup quotient;
  // g -> class of g x0
  std::vector<std::size_t> orbit_class;
  // K = {g : g x0 E x0}
  Subgroup kernel;
};

// Throws NotEquivalence if e does not live on the ambit's points.
GroupLikeCertificate check_group_like(Ambit const& ambit, EquivRelation const& e);

struct OrbitMapReport {
  std::vector<std::size_t> r;  // semigroup element -> class
  CheckList checks;            // surjective, homomorphism, idempotents in kernel
};

// r(f) = [f(x0)]_E. Requires a group-like certificate for the target group.
OrbitMapReport orbit_map_r(Ambit const& ambit, EquivRelation const& e, GroupLikeCertificate const& cert,
                           EllisSemigroup const& s);

struct DReport {
  Subgroup d;  // subgroup of g.group_view
  Check kernel_equiv;
};

// D = {f in uM : f(x0) = u(x0)}, checked against
// f1(x0) = f2(x0) <=> f1^-1 f2 in D on all pairs.
DReport compute_D(EllisSemigroup const& s, IdealGroup const& g, Ambit const& ambit);

struct GHat {
  Subgroup d;
  Subgroup h_um;
  Subgroup h_um_d;
  Subgroup core;  // Core(H(uM) D)
  GroupQuotient quotient;
};

GHat compute_ghat(EllisSemigroup const& s, IdealGroup const& g, Ambit const& ambit);

struct DominationWitness {
  Ambit source;            // (Z, z0)
  EquivRelation f;         // on Z
  FlowMorphism morphism;   // Z -> X
  EquivRelation e;         // on X
};

struct DominationVerdict {
  CheckList checks;
  std::vector<std::size_t> induced;  // F-class -> E-class
  bool dominates() const { return all_passed(checks); }
};

DominationVerdict check_domination(DominationWitness const& w);

// Regular G-ambit at e, mapped to (X, x0) by g -> g x0, with F the coset
// relation of N = Core_G(Stab_G [x0]_E). N is normal, so F is group-like,
// and it is the largest such coset relation refining E pulled back to G.
DominationWitness default_domination(Ambit const& ambit, EquivRelation const& e);

struct IdentificationReport {
  DominationVerdict domination;
  std::size_t ellis_size = 0;
  std::size_t ideal_count = 0;
  SIdx idempotent = 0;
  std::size_t um_order = 0;
  GHat ghat;
  // Action of G^ on X/E: action[c][k] is the class of coset c applied to
  // class k.
  std::vector<std::vector<std::size_t>> action;
  Subgroup stabilizer;                        // H <= G^, the stabiliser of [x0]
  std::vector<std::vector<Elem>> h_cosets;    // left cosets of H in G^
  std::vector<std::size_t> coset_to_class;    // bijection G^/H -> X/E
  CheckList checks;
  bool valid() const { return all_passed(checks); }
};

// Throws NotWeaklyGroupLike when no domination witness is supplied and the
// default one fails.
IdentificationReport identify_quotient(Ambit const& ambit, EquivRelation const& e,
                                       std::optional<DominationWitness> const& witness = std::nullopt,
                                       Caps const& caps = default_caps());

struct ProperWitness {
  FiniteGroup cover;             // G~
  std::vector<Point> fiber_map;  // g~ -> [g~]_=
};

struct ProperWitnessVerdict {
  CheckList checks;           // homomorphism, surjective, pseudocompleteness
  std::vector<Point> f0;      // {[g1^-1 g2] : g1 = g2}
  bool valid() const { return all_passed(checks); }
};

ProperWitnessVerdict check_proper_witness(Ambit const& ambit, EquivRelation const& e,
                                          ProperWitness const& pw);

struct UniformWitnessFamily {
  std::vector<PairRelation> members;
  std::vector<std::size_t> successor;  // D_i -> D_successor[i]
};

CheckList check_uniform_witness(Ambit const& ambit, EquivRelation const& e,
                                UniformWitnessFamily const& fam, ProperWitness const& pw);

// On the regular ambit of g, D_k = {(x, y) : x^-1 y is a word of length
// <= k in s}, for k up to the diameter L of <s>, with D_k' = D_min(2k+2, L).
UniformWitnessFamily word_length_family(FiniteGroup const& g, std::vector<Elem> const& s);

}  // namespace elliskit
