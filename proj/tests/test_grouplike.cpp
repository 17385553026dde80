#include "doctest.h"

#include "elliskit/catalog.hpp"
#include "elliskit/error.hpp"
#include "elliskit/grouplike.hpp"

using namespace elliskit;

namespace {

std::shared_ptr<FiniteGroup const> share(FiniteGroup g) { return std::make_shared<FiniteGroup const>(std::move(g)); }

Ambit ambit_of(Flow f, Point x0) { return make_ambit(std::make_shared<Flow const>(std::move(f)), x0); }

// [g x0][h x0] = [g h x0] is well defined.
bool product_well_defined(Ambit const& a, EquivRelation const& e) {
  Flow const& f = *a.flow;
  auto const& g = f.group();
  for (Elem g1 = 0; g1 < g.order(); ++g1) {
    for (Elem g2 = 0; g2 < g.order(); ++g2) {
      if (!e.related(f.act(g1, a.basepoint), f.act(g2, a.basepoint))) continue;
      for (Elem h1 = 0; h1 < g.order(); ++h1) {
        for (Elem h2 = 0; h2 < g.order(); ++h2) {
          if (e.related(f.act(h1, a.basepoint), f.act(h2, a.basepoint)) &&
              !e.related(f.act(g.mul(g1, h1), a.basepoint), f.act(g.mul(g2, h2), a.basepoint))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool has_check(CheckList const& cs, std::string const& name, bool passed) {
  for (auto const& c : cs) {
    if (c.name == name) return c.passed == passed;
  }
  return false;
}

}  // namespace

TEST_CASE("group-like relations") {
  auto s3 = share(symmetric_group(3));
  auto nat = ambit_of(Flow::natural(s3), 0);
  CHECK(check_group_like(nat, EquivRelation::total(3)).group_like);
  auto eq = check_group_like(nat, EquivRelation::equality(3));
  CHECK_FALSE(eq.group_like);
  CHECK_FALSE(eq.refutation.empty());

  auto reg = ambit_of(Flow::regular(s3), s3->identity());
  CHECK(check_group_like(reg, EquivRelation::equality(6)).group_like);

  try {
    check_group_like(nat, EquivRelation::equality(4));
    FAIL("expected NotEquivalence");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotEquivalence);
  }
}

TEST_CASE("group-likeness matches the well-definedness oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    auto g = random_group(rng, 12).group;
    auto f = std::make_shared<Flow const>(random_coset_flow(rng, g, 6));
    auto a = make_ambit(f, static_cast<Point>(rng() % f->points()));
    auto e = random_invariant_relation(rng, *f);
    auto cert = check_group_like(a, e);
    CAPTURE(seed);
    CHECK(cert.group_like == product_well_defined(a, e));
    if (!cert.group_like) continue;
    CHECK(cert.quotient.order() == e.classes().size());
    CHECK(cert.orbit_class[g->identity()] == e.class_of(a.basepoint));
    for (Elem x = 0; x < g->order(); ++x) {
      CHECK(cert.orbit_class[x] == e.class_of(f->act(x, a.basepoint)));
      for (Elem y = 0; y < g->order(); ++y) {
        CHECK(cert.orbit_class[g->mul(x, y)] ==
              cert.quotient.mul(static_cast<Elem>(cert.orbit_class[x]), static_cast<Elem>(cert.orbit_class[y])));
      }
    }
    auto s = EllisSemigroup::compute(*f);
    CHECK(all_passed(orbit_map_r(a, e, cert, s).checks));
  }
}

TEST_CASE("D and the identification of X/E") {
  auto s3 = share(symmetric_group(3));
  auto nat = ambit_of(Flow::natural(s3), 0);
  auto s = EllisSemigroup::compute(*nat.flow);
  auto ideals = minimal_left_ideals(s);
  REQUIRE(ideals.size() == 1);
  auto ig = ideal_group(s, ideals, 0, ideals[0].idempotents.front());
  auto d = compute_D(s, ig, nat);
  CHECK(d.d.order() == 2);
  CHECK(d.kernel_equiv.passed);

  auto id = identify_quotient(nat, EquivRelation::equality(3));
  CHECK(id.valid());
  CHECK(id.ghat.quotient.group.order() == 6);
  CHECK(id.stabilizer.order() == 2);
  CHECK(id.h_cosets.size() == 3);

  auto z4 = share(cyclic_group(4));
  Flow r4 = Flow::regular(z4);
  auto e = orbit_relation(r4, subgroup_generated(*z4, {2}));
  auto id4 = identify_quotient(ambit_of(r4, 0), e);
  CHECK(id4.valid());
  CHECK(id4.h_cosets.size() == 2);
  CHECK(id4.ghat.quotient.group.order() == 2 * id4.stabilizer.order());
}

TEST_CASE("identification on random coset ambits") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed + 100);
    auto g = random_group(rng, 12).group;
    auto f = std::make_shared<Flow const>(random_coset_flow(rng, g, 6));
    auto a = make_ambit(f, 0);
    auto e = random_invariant_relation(rng, *f);
    auto id = identify_quotient(a, e);
    CAPTURE(seed);
    CHECK(id.valid());
    CHECK(id.h_cosets.size() == e.classes().size());
    CHECK(id.stabilizer.order() * e.classes().size() == id.ghat.quotient.group.order());
    std::set<std::size_t> hit(id.coset_to_class.begin(), id.coset_to_class.end());
    CHECK(hit.size() == e.classes().size());
  }
}

TEST_CASE("proper witnesses") {
  auto s3 = share(symmetric_group(3));
  auto nat = ambit_of(Flow::natural(s3), 0);
  ProperWitness pw{symmetric_group(3), {}};
  for (Elem g = 0; g < 6; ++g) {
    pw.fiber_map.push_back(s3->permutation(g)[0]);
  }
  // Equality is not group-like here, so the homomorphism clause has no
  // target group; the other clauses still hold.
  auto v = check_proper_witness(nat, EquivRelation::equality(3), pw);
  CHECK_FALSE(v.valid());
  CHECK(has_check(v.checks, "homomorphism", false));
  CHECK(has_check(v.checks, "surjective", true));
  CHECK(has_check(v.checks, "pseudocompleteness", true));
  CHECK(v.f0 == std::vector<Point>{0});

  // Total relation: the cover maps onto the one-element quotient.
  ProperWitness onto{symmetric_group(3), std::vector<Point>(6, 0)};
  auto vt = check_proper_witness(nat, EquivRelation::total(3), onto);
  CHECK(has_check(vt.checks, "surjective", false));
  auto reg = ambit_of(Flow::regular(s3), s3->identity());
  ProperWitness self{symmetric_group(3), {0, 1, 2, 3, 4, 5}};
  CHECK(check_proper_witness(reg, EquivRelation::equality(6), self).valid());
}

TEST_CASE("word-length uniform witnesses") {
  auto z6 = share(cyclic_group(6));
  auto fam = word_length_family(*z6, {1, 5});
  REQUIRE(fam.members.size() == 4);  // diameter 3
  CHECK(fam.successor == std::vector<std::size_t>{2, 3, 3, 3});
  auto reg = ambit_of(Flow::regular(z6), 0);
  ProperWitness pw{cyclic_group(6), {0, 1, 2, 3, 4, 5}};
  CHECK(all_passed(check_uniform_witness(reg, EquivRelation::total(6), fam, pw)));
  // D_k grows by one step in each direction.
  for (std::size_t k = 0; k < fam.members.size(); ++k) {
    std::size_t deg = 0;
    for (Point y = 0; y < 6; ++y) deg += fam.members[k].test(0, y);
    CHECK(deg == std::min<std::size_t>(2 * k + 1, 6));
  }

  // Transpositions generate S3 and are closed under conjugation, so the
  // translation clause holds.
  auto s3 = share(symmetric_group(3));
  std::vector<Elem> transp;
  for (Elem g = 0; g < 6; ++g) {
    auto p = s3->permutation(g);
    int fixed = 0;
    for (std::uint32_t x = 0; x < 3; ++x) fixed += p[x] == x;
    if (fixed == 1) transp.push_back(g);
  }
  auto fs = word_length_family(*s3, transp);
  ProperWitness ps{symmetric_group(3), {0, 1, 2, 3, 4, 5}};
  CHECK(all_passed(check_uniform_witness(ambit_of(Flow::regular(s3), s3->identity()), EquivRelation::total(6), fs, ps)));

  // A successor that is too small breaks D o D in D'.
  auto broken = fam;
  broken.successor = {0, 1, 2, 3};
  CHECK(has_check(check_uniform_witness(reg, EquivRelation::total(6), broken, pw), "D_circ_D_in_successor", false));
  // Union must be E.
  CHECK(has_check(check_uniform_witness(reg, EquivRelation::equality(6), fam, pw), "union_is_E", false));
}
