#include "doctest.h"

#include "elliskit/catalog.hpp"
#include "elliskit/error.hpp"
#include "elliskit/examples.hpp"
#include "elliskit/relations.hpp"
#include "oracles.hpp"

using namespace elliskit;

namespace {

std::shared_ptr<FiniteGroup const> share(FiniteGroup g) { return std::make_shared<FiniteGroup const>(std::move(g)); }

EquivRelation right_cosets(FiniteGroup const& g, Subgroup const& h) {
  std::vector<std::uint32_t> labels(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    Elem lo = a;
    for (Elem k : h.members()) {
      lo = std::min(lo, g.mul(k, a));
    }
    labels[a] = lo;
  }
  return EquivRelation::from_labels(labels);
}

// E-classes as a pair oracle: (x, y) related by the smallest invariant
// relation containing the seeds, closed by brute-force iteration.
std::set<std::pair<Point, Point>> invariant_pairs(Flow const& f, std::vector<std::pair<Point, Point>> seeds) {
  std::set<std::pair<Point, Point>> out;
  for (auto const& [x, y] : seeds) {
    for (Elem g = 0; g < f.group().order(); ++g) {
      out.emplace(f.act(g, x), f.act(g, y));
    }
  }
  return out;
}

bool transitive(std::set<std::pair<Point, Point>> const& r) {
  for (auto const& [a, b] : r) {
    for (auto const& [c, d] : r) {
      if (b == c && !r.count({a, d})) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("relations and invariance") {
  auto s3 = share(symmetric_group(3));
  Flow reg = Flow::regular(s3);
  CHECK(check_invariance(reg, EquivRelation::equality(6)).invariant);
  CHECK(check_invariance(reg, EquivRelation::total(6)).invariant);
  auto t = subgroup_generated(*s3, {*s3->find_permutation(std::vector<std::uint32_t>{1, 0, 2})});
  auto rc = right_cosets(*s3, t);
  auto v = check_invariance(reg, rc);
  CHECK_FALSE(v.invariant);
  CHECK_FALSE(v.witness.empty());

  try {
    EquivRelation::from_classes(3, {{0, 1}, {1, 2}});
    FAIL("expected NotAPartition");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotAPartition);
  }
}

TEST_CASE("kernel groups") {
  auto s3 = share(symmetric_group(3));
  Flow nat = Flow::natural(s3);
  CHECK(kernel_group(nat, EquivRelation::equality(3)).order() == 1);
  CHECK(kernel_group(nat, EquivRelation::total(3)).order() == 6);
  auto z4 = share(cyclic_group(4));
  Flow r4 = Flow::regular(z4);
  auto e = orbit_relation(r4, subgroup_generated(*z4, {2}));
  CHECK(kernel_group(r4, e).members() == std::vector<Elem>{0, 2});
  auto t = subgroup_generated(*s3, {*s3->find_permutation(std::vector<std::uint32_t>{1, 0, 2})});
  try {
    kernel_group(Flow::regular(s3), right_cosets(*s3, t));
    FAIL("expected NotInvariant");
  } catch (Error const& ex) {
    CHECK(ex.code() == ErrorCode::NotInvariant);
  }
}

TEST_CASE("orbit relations") {
  auto s3 = share(symmetric_group(3));
  Flow reg = Flow::regular(s3);
  CHECK(orbit_relation(reg, trivial_subgroup(*s3)) == EquivRelation::equality(6));
  CHECK(orbit_relation(reg, whole_group(*s3)) == EquivRelation::total(6));
  auto a3 = subgroup_generated(*s3, {*s3->find_permutation(std::vector<std::uint32_t>{1, 2, 0})});
  auto e = orbit_relation(reg, a3);
  CHECK(e.classes().size() == 2);
  CHECK(e.classes()[0].size() == 3);
  CHECK(check_invariance(reg, e).invariant);

  // Normal implies invariant; on free actions invariant implies normal.
  for (auto const& c : group_catalog(12)) {
    Flow f = Flow::regular(c.group);
    for (auto const& h : enumerate_subgroups(*c.group)) {
      bool inv = check_invariance(f, orbit_relation(f, h)).invariant;
      CAPTURE(c.name);
      CHECK(inv == is_normal(*c.group, h));
      CHECK(kernel_group(f, EquivRelation::equality(f.points())).order() == 1);
    }
  }
}

TEST_CASE("R relations") {
  auto s3 = share(symmetric_group(3));
  Flow nat = Flow::natural(s3);
  // E orbital with H = H_E and X~ = X
  auto z4 = share(cyclic_group(4));
  Flow r4 = Flow::regular(z4);
  auto e = orbit_relation(r4, subgroup_generated(*z4, {2}));
  auto r = r_relation(r4, {kernel_group(r4, e), {0, 1, 2, 3}});
  REQUIRE(r.is_equivalence());
  CHECK(*r.relation == e);

  // Transitive flow, X~ = {x}, H = Stab{[x]_E} gives E back.
  for (auto const& c : group_catalog(12)) {
    Rng rng(c.group->order());
    Subgroup k;
    auto f = std::make_shared<Flow const>(random_coset_flow(rng, c.group, 6, &k));
    for (auto const& ee : enumerate_invariant_relations(*f)) {
      auto const& cls = ee.class_containing(0);
      auto stab = f->setwise_stabilizer(cls);
      auto rr = r_relation(*f, {stab, {0}});
      CAPTURE(c.name);
      REQUIRE(rr.is_equivalence());
      CHECK(*rr.relation == ee);
    }
  }
}

TEST_CASE("R relation transitivity verdict matches a pair oracle") {
  bool saw_intransitive = false;
  for (auto const& f : small_actions(24, 6)) {
    auto subs = enumerate_subgroups(f->group());
    for (auto const& h : subs) {
      for (Point x = 0; x < f->points(); ++x) {
        std::vector<std::pair<Point, Point>> seeds;
        for (Elem k : h.members()) {
          seeds.emplace_back(x, f->act(k, x));
        }
        auto pairs = invariant_pairs(*f, seeds);
        auto r = r_relation(*f, {h, {x}});
        for (Point a = 0; a < f->points(); ++a) {
          for (Point b = 0; b < f->points(); ++b) {
            CHECK(r.pairs.test(a, b) == (pairs.count({a, b}) > 0));
          }
        }
        bool tr = transitive(pairs);
        CHECK(r.transitive == tr);
        saw_intransitive = saw_intransitive || !tr;
      }
    }
  }
  CHECK(saw_intransitive);
}

TEST_CASE("class formula") {
  auto s3 = share(symmetric_group(3));
  Flow nat = Flow::natural(s3);
  auto t01 = subgroup_generated(*s3, {*s3->find_permutation(std::vector<std::uint32_t>{1, 0, 2})});
  auto r = r_relation(nat, {t01, {0}});
  for (Point x = 0; x < 3; ++x) {
    auto cf = class_formula(nat, {t01, {0}}, x);
    std::vector<Point> cls;
    for (Point y = 0; y < 3; ++y) {
      if (r.pairs.test(x, y)) {
        cls.push_back(y);
      }
    }
    CHECK(cf == cls);
  }

  // X~ not reachable from x0: empty union, and R not reflexive there.
  Flow two = disjoint_union_flow({nat, nat});
  CHECK(class_formula(two, {t01, {0}}, 4).empty());
  CHECK_FALSE(r_relation(two, {t01, {0}}).reflexive);

  // X~ = X and H normal gives the H-orbit.
  auto a3 = subgroup_generated(*s3, {*s3->find_permutation(std::vector<std::uint32_t>{1, 2, 0})});
  Flow reg = Flow::regular(s3);
  std::vector<Point> all{0, 1, 2, 3, 4, 5};
  for (Point x = 0; x < 6; ++x) {
    CHECK(class_formula(reg, {a3, all}, x) == orbit_relation(reg, a3).class_containing(x));
  }
}

TEST_CASE("maximal witnesses") {
  auto z4 = share(cyclic_group(4));
  Flow r4 = Flow::regular(z4);
  auto e = orbit_relation(r4, subgroup_generated(*z4, {2}));
  WitnessPair w{kernel_group(r4, e), {0, 1, 2, 3}};
  auto m = maximal_witnesses(r4, e, w);
  CHECK(m.subgroup == w.subgroup);
  CHECK(m.support == w.support);
  CHECK(is_maximal_pair(r4, e, m));

  try {
    maximal_witnesses(r4, e, {trivial_subgroup(*z4), {0}});
    FAIL("expected NotAWitness");
  } catch (Error const& ex) {
    CHECK(ex.code() == ErrorCode::NotAWitness);
  }

  // Fixpoint and saturation, against the two operator formulas evaluated
  // directly on random catalog actions.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    auto g = random_group(rng, 12).group;
    auto f = std::make_shared<Flow const>(random_coset_flow(rng, g, 6));
    auto ee = random_invariant_relation(rng, *f);
    auto w0 = is_weakly_orbital(*f, ee);
    REQUIRE(w0.witness);
    auto mw = maximal_witnesses(*f, ee, *w0.witness);
    CHECK(is_witness(*f, ee, mw));
    std::vector<Point> sup;
    for (Point x = 0; x < f->points(); ++x) {
      bool all = true;
      for (Elem h : mw.subgroup.members()) {
        all = all && ee.related(x, f->act(h, x));
      }
      if (all) sup.push_back(x);
    }
    CHECK(sup == mw.support);
    std::vector<Elem> hs;
    for (Elem a = 0; a < g->order(); ++a) {
      bool all = true;
      for (Point x : mw.support) {
        all = all && ee.related(x, f->act(a, x));
      }
      if (all) hs.push_back(a);
    }
    CHECK(hs == mw.subgroup.members());
    for (Point x : mw.support) {
      for (Point y : ee.class_containing(x)) {
        CHECK(std::binary_search(mw.support.begin(), mw.support.end(), y));
      }
    }
  }
}

TEST_CASE("orbital decisions") {
  // Rotations of a square acting on its vertices, E = opposite vertices.
  auto z4 = share(cyclic_group(4));
  Flow sq = Flow::regular(z4);
  auto opp = EquivRelation::from_classes(4, {{0, 2}, {1, 3}});
  CHECK(is_orbital(sq, opp).orbital);

  // Commutative transitive flows: every invariant relation is orbital.
  for (auto const& c : group_catalog(12)) {
    auto const& g = *c.group;
    bool abelian = true;
    for (Elem a = 0; a < g.order() && abelian; ++a) {
      for (Elem b = 0; b < g.order() && abelian; ++b) {
        abelian = g.mul(a, b) == g.mul(b, a);
      }
    }
    if (!abelian) continue;
    Rng rng(7);
    Flow f = random_coset_flow(rng, c.group, 6);
    for (auto const& e : enumerate_invariant_relations(f)) {
      CHECK(is_orbital(f, e).orbital);
      CHECK(is_weakly_orbital(f, e).weakly_orbital);
    }
  }
}

TEST_CASE("orbital decisions agree with brute force") {
  for (auto const& f : small_actions(8, 5)) {
    auto subs = enumerate_subgroups(f->group());
    std::size_t n = f->points();
    std::size_t count = 0;
    oracle::partitions(n, [&](std::vector<std::uint32_t> const& labels) {
      if (!oracle::invariant_labels(*f, labels)) return;
      ++count;
      auto e = EquivRelation::from_labels(labels);
      bool orb = false, worb = false, normal_witness = false, full_witness = false;
      for (auto const& h : subs) {
        orb = orb || orbit_relation(*f, h) == e;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          std::vector<Point> sup;
          for (Point x = 0; x < n; ++x) {
            if (mask >> x & 1u) sup.push_back(x);
          }
          auto r = r_relation(*f, {h, sup});
          if (r.is_equivalence() && *r.relation == e) {
            worb = true;
            normal_witness = normal_witness || is_normal(f->group(), h);
            full_witness = full_witness || sup.size() == n;
          }
        }
      }
      CHECK(is_orbital(*f, e).orbital == orb);
      CHECK(is_weakly_orbital(*f, e).weakly_orbital == worb);
      CHECK((!orb || normal_witness));
      CHECK(orb == full_witness);
      if (f->is_transitive()) {
        CHECK(worb);
      }
    });
    CHECK(count == enumerate_invariant_relations(*f).size());
  }
}

TEST_CASE("weak orbitality of the two-copy affine example") {
  auto fx = worb_union_fixture();
  CHECK(is_witness(*fx.flow, fx.e, fx.witness));
  CHECK_FALSE(is_orbital(*fx.flow, fx.e).orbital);
}

TEST_CASE("free action correspondence") {
  auto z4 = share(cyclic_group(4));
  auto c4 = free_action_correspondence(Flow::regular(z4));
  CHECK(c4.pairs.size() == 3);
  CHECK(all_passed(c4.checks));
  auto s3 = share(symmetric_group(3));
  auto cs = free_action_correspondence(Flow::regular(s3));
  std::set<std::size_t> orders;
  for (auto const& [n, e] : cs.pairs) {
    orders.insert(n.order());
  }
  CHECK(orders == std::set<std::size_t>{1, 3, 6});
  CHECK(all_passed(cs.checks));
  auto triv = free_action_correspondence(Flow::regular(share(FiniteGroup::trivial())));
  CHECK(triv.pairs.size() == 1);
  try {
    free_action_correspondence(Flow::natural(s3));
    FAIL("expected NotFree");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotFree);
  }
}
