#include "doctest.h"

#include <random>

#include "elliskit/catalog.hpp"
#include "elliskit/ellis.hpp"
#include "elliskit/error.hpp"
#include "oracles.hpp"

using namespace elliskit;

namespace {

std::shared_ptr<FiniteGroup const> share(FiniteGroup g) { return std::make_shared<FiniteGroup const>(std::move(g)); }

std::set<Map> elements(EllisSemigroup const& s) {
  std::set<Map> out;
  for (SIdx i = 0; i < s.size(); ++i) {
    auto m = s.element(i);
    out.emplace(m.begin(), m.end());
  }
  return out;
}

SIdx idx(EllisSemigroup const& s, Map const& m) { return *s.find(m); }

// swap and constant-to-0 on two points
Flow swap_const() { return Flow::from_transformations({2, {{1, 0}, {0, 0}}}); }

std::vector<SIdx> sorted(std::vector<SIdx> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TEST_CASE("enveloping semigroups") {
  auto s3 = EllisSemigroup::compute(Flow::natural(share(symmetric_group(3))));
  CHECK(s3.size() == 6);
  for (SIdx i = 0; i < s3.size(); ++i) {
    CHECK(s3.is_bijective(i));
  }

  auto sc = EllisSemigroup::compute(swap_const());
  CHECK(elements(sc) == std::set<Map>{{0, 1}, {1, 0}, {0, 0}, {1, 1}});

  auto triv = EllisSemigroup::compute(Flow::from_generator_images(share(FiniteGroup::trivial()), 4, {}));
  CHECK(triv.size() == 1);

  Caps tiny;
  tiny.closure = 3;
  try {
    EllisSemigroup::compute(Flow::natural(share(symmetric_group(3))), tiny);
    FAIL("expected ClosureCapExceeded");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::ClosureCapExceeded);
  }
}

TEST_CASE("enveloping semigroup matches the monoid closure oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    Flow f = random_transformation_flow(rng, 5, 3);
    auto s = EllisSemigroup::compute(f);
    CHECK(elements(s) == oracle::monoid(f.points(), f.acting_maps()));
    // one-step stability and a · b = a after b
    std::uniform_int_distribution<SIdx> any(0, static_cast<SIdx>(s.size() - 1));
    for (int i = 0; i < 20; ++i) {
      SIdx a = any(rng), b = any(rng);
      auto ma = s.element(a), mb = s.element(b);
      auto ab = oracle::compose(Map(ma.begin(), ma.end()), Map(mb.begin(), mb.end()));
      CHECK(s.find(ab) == s.mul(a, b));
    }
  }
}

TEST_CASE("minimal left ideals") {
  auto s3 = EllisSemigroup::compute(Flow::natural(share(symmetric_group(3))));
  auto i3 = minimal_left_ideals(s3);
  REQUIRE(i3.size() == 1);
  CHECK(i3[0].members.size() == 6);
  CHECK(i3[0].idempotents == std::vector<SIdx>{s3.identity()});

  auto sc = EllisSemigroup::compute(swap_const());
  auto ic = minimal_left_ideals(sc);
  REQUIRE(ic.size() == 1);
  SIdx c0 = idx(sc, {0, 0}), c1 = idx(sc, {1, 1});
  CHECK(ic[0].members == sorted({c0, c1}));
  CHECK(ic[0].idempotents == sorted({c0, c1}));

  // Two isolated blocks: collapse-to-0 on {0,1} and the identity on {2}
  // plus a map moving 2 to either block end. Left ideals S f are computed
  // brute force and compared.
  Flow two = Flow::from_transformations({4, {{0, 0, 2, 3}, {0, 1, 3, 3}, {1, 1, 2, 2}}});
  auto s = EllisSemigroup::compute(two);
  auto got = minimal_left_ideals(s);
  std::set<std::set<Map>> got_sets;
  for (auto const& m : got) {
    std::set<Map> ms;
    for (SIdx f : m.members) {
      auto e = s.element(f);
      ms.emplace(e.begin(), e.end());
    }
    got_sets.insert(ms);
  }
  CHECK(got_sets == oracle::minimal_ideals(elements(s)));
  CHECK(got_sets.size() == got.size());
}

TEST_CASE("minimal ideals agree with brute force on random flows") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    Rng rng(seed);
    Flow f = random_transformation_flow(rng, 5, 3);
    auto s = EllisSemigroup::compute(f);
    if (s.size() > 200) {
      continue;
    }
    auto got = minimal_left_ideals(s);
    std::set<std::set<Map>> got_sets;
    for (auto const& m : got) {
      std::set<Map> ms;
      for (SIdx x : m.members) {
        auto e = s.element(x);
        ms.emplace(e.begin(), e.end());
      }
      got_sets.insert(ms);
      for (SIdx x : m.members) {
        CHECK(m.contains(x));
        CHECK(s.is_idempotent(x) == std::binary_search(m.idempotents.begin(), m.idempotents.end(), x));
      }
    }
    CHECK(got_sets == oracle::minimal_ideals(elements(s)));
    CHECK(all_passed(check_ideal_structure(s, got)));
  }
}

TEST_CASE("ideal groups and the vsv isomorphism") {
  auto sc = EllisSemigroup::compute(swap_const());
  auto ic = minimal_left_ideals(sc);
  SIdx c0 = idx(sc, {0, 0}), c1 = idx(sc, {1, 1});
  auto g0 = ideal_group(sc, ic, 0, c0);
  CHECK(g0.members == std::vector<SIdx>{c0});
  CHECK(g0.group_view.order() == 1);
  auto g1 = ideal_group(sc, ic, 0, c1);
  auto iso = ideal_group_isomorphism(sc, g0, g1);
  CHECK(iso == std::vector<Elem>{0});
  CHECK(ideal_group_isomorphism(sc, g0, g0) == std::vector<Elem>{0});

  try {
    ideal_group(sc, ic, 0, idx(sc, {1, 0}));
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK((e.code() == ErrorCode::NotIdempotent || e.code() == ErrorCode::NotInIdeal));
  }

  auto s3 = EllisSemigroup::compute(Flow::natural(share(symmetric_group(3))));
  auto i3 = minimal_left_ideals(s3);
  auto g3 = ideal_group(s3, i3, 0, s3.identity());
  CHECK(are_isomorphic(g3.group_view, symmetric_group(3)).isomorphic);

  // Several idempotents in one ideal: constant maps on three points with a
  // permutation; all ideal groups are trivial and vsv is a bijection.
  auto sk = EllisSemigroup::compute(Flow::from_transformations({3, {{1, 2, 0}, {0, 0, 1}}}));
  auto ik = minimal_left_ideals(sk);
  for (std::size_t a = 0; a < ik.size(); ++a) {
    for (SIdx u : ik[a].idempotents) {
      for (std::size_t b = 0; b < ik.size(); ++b) {
        for (SIdx v : ik[b].idempotents) {
          auto gu = ideal_group(sk, ik, a, u);
          auto gv = ideal_group(sk, ik, b, v);
          auto m = ideal_group_isomorphism(sk, gu, gv);
          CHECK(is_homomorphism(gu.group_view, gv.group_view, m));
          CHECK(std::set<Elem>(m.begin(), m.end()).size() == m.size());
        }
      }
    }
  }
}

TEST_CASE("circ calculus") {
  auto sc = EllisSemigroup::compute(swap_const());
  SIdx sw = idx(sc, {1, 0}), c0 = idx(sc, {0, 0}), c1 = idx(sc, {1, 1});
  CHECK(circ(sc, sw, {c0}) == std::vector<SIdx>{c1});
  CHECK(circ(sc, sc.identity(), {c0, sw}) == sorted({c0, sw}));
  CHECK(circ(sc, sw, {}).empty());

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    auto s = EllisSemigroup::compute(random_transformation_flow(rng, 4, 3));
    std::uniform_int_distribution<SIdx> any(0, static_cast<SIdx>(s.size() - 1));
    SIdx a = any(rng), b = any(rng), c = any(rng);
    std::vector<SIdx> B, C;
    for (SIdx x = 0; x < s.size(); ++x) {
      if (rng() % 2) B.push_back(x);
      if (rng() % 2) C.push_back(x);
    }
    // (a o B) c = a o (B c)
    auto lhs = circ(s, a, B);
    for (auto& x : lhs) x = s.mul(x, c);
    std::vector<SIdx> bc;
    for (SIdx x : B) bc.push_back(s.mul(x, c));
    CHECK(sorted(lhs) == sorted(circ(s, a, bc)));
    // a o (b o B) within (a b) o B
    auto left = sorted(circ(s, a, circ(s, b, B)));
    auto right = sorted(circ(s, s.mul(a, b), B));
    CHECK(std::includes(right.begin(), right.end(), left.begin(), left.end()));
    // a B within a o B
    auto aob = sorted(circ(s, a, B));
    for (SIdx x : B) {
      CHECK(std::binary_search(aob.begin(), aob.end(), s.mul(a, x)));
    }
    // unions
    auto bu = B;
    bu.insert(bu.end(), C.begin(), C.end());
    auto un = circ(s, a, B);
    auto cc = circ(s, a, C);
    un.insert(un.end(), cc.begin(), cc.end());
    CHECK(sorted(circ(s, a, bu)) == sorted(un));
  }
}

TEST_CASE("tau closure and H(uM)") {
  auto s3 = EllisSemigroup::compute(Flow::natural(share(symmetric_group(3))));
  auto i3 = minimal_left_ideals(s3);
  auto g3 = ideal_group(s3, i3, 0, s3.identity());
  CHECK(tau_closure(s3, g3, {}).empty());
  CHECK(sorted(tau_closure(s3, g3, g3.members)) == g3.members);
  CHECK(sorted(tau_closure(s3, g3, {g3.members[3]})) == std::vector<SIdx>{g3.members[3]});
  auto h = h_subgroup(s3, g3);
  CHECK(h.order() == 1);
  CHECK(is_normal(g3.group_view, h));

  auto triv = EllisSemigroup::compute(Flow::from_generator_images(share(FiniteGroup::trivial()), 2, {}));
  auto it = minimal_left_ideals(triv);
  CHECK(h_subgroup(triv, ideal_group(triv, it, 0, 0)).order() == 1);

  // Finite discreteness: the closure is the identity on subsets of uM.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    auto g = random_group(rng, 12).group;
    auto s = EllisSemigroup::compute(random_group_flow(rng, g, 6));
    auto ideals = minimal_left_ideals(s);
    auto ig = ideal_group(s, ideals, 0, ideals[0].idempotents[0]);
    std::vector<SIdx> a;
    for (SIdx x : ig.members) {
      if (rng() % 2) a.push_back(x);
    }
    CHECK(sorted(tau_closure(s, ig, a)) == a);
    auto hh = h_subgroup(s, ig);
    CHECK(hh.order() == 1);
    CHECK(is_normal(ig.group_view, hh));
  }
}

TEST_CASE("induced epimorphisms") {
  auto s3 = share(symmetric_group(3));
  auto reg = std::make_shared<Flow const>(Flow::regular(s3));
  auto nat = std::make_shared<Flow const>(Flow::natural(s3));
  FlowMorphism ev{make_ambit(reg, s3->identity()), make_ambit(nat, 0), {}, {}, {}};
  for (Elem g = 0; g < 6; ++g) {
    ev.point_map.push_back(s3->permutation(g)[0]);
  }
  auto sr = EllisSemigroup::compute(*reg);
  auto sn = EllisSemigroup::compute(*nat);
  auto r = induced_epimorphism(ev, sr, sn);
  CHECK(r.valid());
  // phi_*(f)(phi(z)) = phi(f(z)) on every pair
  for (SIdx f = 0; f < sr.size(); ++f) {
    for (Point z = 0; z < reg->points(); ++z) {
      CHECK(sn.apply(r.map[f], ev.point_map[z]) == ev.point_map[sr.apply(f, z)]);
    }
  }
  FlowMorphism id{make_ambit(nat, 0), make_ambit(nat, 0), {0, 1, 2}, {}, {}};
  auto ri = induced_epimorphism(id, sn, sn);
  CHECK(ri.valid());
  for (SIdx f = 0; f < sn.size(); ++f) {
    CHECK(ri.map[f] == f);
  }
}

TEST_CASE("product enveloping semigroups") {
  auto c3 = share(cyclic_group(3));
  auto s3 = share(symmetric_group(3));
  CHECK(all_passed(check_product_ellis(Flow::regular(c3), Flow::natural(s3))));
  CHECK(all_passed(check_product_ellis(swap_const(), Flow::regular(c3))));
  // |E(product)| = |E(a)| |E(b)| for transformation pairs, counted by the
  // monoid oracle on the product maps.
  Flow a = swap_const();
  Flow b = Flow::from_transformations({3, {{1, 2, 0}, {0, 0, 1}}});
  Flow p = product_flow({a, b});
  CHECK(oracle::monoid(p.points(), p.acting_maps()).size() ==
        oracle::monoid(2, a.acting_maps()).size() * oracle::monoid(3, b.acting_maps()).size());
  CHECK(all_passed(check_product_ellis(a, b)));
}
