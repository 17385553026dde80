#pragma once

// Bundled fixtures: the worked examples (run by `elliskit example <name>`)
// and the catalog of structured scenarios.

#include <memory>
#include <string>
#include <vector>

#include "elliskit/flows.hpp"
#include "elliskit/relations.hpp"
#include "elliskit/report.hpp"
#include "elliskit/structured.hpp"

namespace elliskit {

std::vector<std::string> example_names();

// Throws UnknownExample.
Report run_example(std::string const& name, Caps const& caps = default_caps());

// Affine group of F_2^3 on itself by left translation, with the two
// witness pairs (H1, X1) = (plane translations, normaliser side) and
// (H2, X2) = (line translations, larger support).
struct AffinePairsFixture {
  std::shared_ptr<Flow const> flow;
  WitnessPair first;
  WitnessPair second;
};
AffinePairsFixture affine_pairs_fixture(Caps const& caps = default_caps());

// Two copies G, G' of the affine group of F_2^3 under left translation,
// with E the left cosets of plane translations on G and of line translations
// on G', and the witness (line translations, {0'} u {0} x A).
struct WorbUnionFixture {
  std::shared_ptr<Flow const> flow;
  EquivRelation e;
  WitnessPair witness;
  std::size_t copy_size = 0;  // points of G; G' follows
};
WorbUnionFixture worb_union_fixture(Caps const& caps = default_caps());

struct NamedScenario {
  std::string name;
  StructuredInstance instance;
};

// Hand-built scenarios: discrete lattices, orbit-union lattices with the
// indiscrete lattice on G, and lattices pulled back from a normal subgroup.
std::vector<NamedScenario> structured_catalog(Caps const& caps = default_caps());

// S3 on two copies of itself (a limit level and a tail level) with
// E = R_{H, X~} for H = {e, (0 1)}, X~ = {((0 1 2), limit), (e, tail)}, and an
// X^2 lattice in which each tail pair has the matching limit pair in its
// closure.
StructuredInstance worb_counterexample_scenario(Caps const& caps = default_caps());

}  // namespace elliskit
