#include "doctest.h"

#include <random>

#include "elliskit/catalog.hpp"
#include "elliskit/ellis.hpp"
#include "elliskit/error.hpp"
#include "elliskit/flows.hpp"
#include "oracles.hpp"

using namespace elliskit;

namespace {

ErrorCode code_of(std::function<void()> const& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::shared_ptr<FiniteGroup const> share(FiniteGroup g) { return std::make_shared<FiniteGroup const>(std::move(g)); }

// Points reachable from x0 under the acting maps.
std::set<Point> reachable(Flow const& f, Point x0) {
  std::set<Point> seen{x0};
  std::vector<Point> stack{x0};
  auto maps = f.acting_maps();
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (auto const& m : maps) {
      if (seen.insert(m[x]).second) {
        stack.push_back(m[x]);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("flow construction") {
  auto s3 = share(symmetric_group(3));
  auto nat = Flow::natural(s3);
  CHECK(nat.points() == 3);
  CHECK(nat.is_transitive());

  auto triv = share(FiniteGroup::trivial());
  auto id5 = Flow::from_generator_images(triv, 5, {});
  CHECK(id5.points() == 5);
  CHECK(id5.orbits().size() == 5);

  // Z/2 with a 3-cycle as the generator image: the square is not the identity.
  auto z2 = share(cyclic_group(2));
  CHECK(code_of([&] { Flow::from_generator_images(z2, 3, {{1, 2, 0}}); }) == ErrorCode::NotAnAction);
}

TEST_CASE("group flows act by a homomorphism into bijections") {
  for (auto const& c : group_catalog(12)) {
    Rng rng(3);
    Flow f = random_group_flow(rng, c.group, 6);
    auto const& g = f.group();
    bool ok = true;
    for (Elem a = 0; a < g.order() && ok; ++a) {
      std::set<Point> image;
      for (Point x = 0; x < f.points(); ++x) {
        image.insert(f.act(a, x));
        for (Elem b = 0; b < g.order() && ok; ++b) {
          ok = f.act(g.mul(a, b), x) == f.act(a, f.act(b, x));
        }
      }
      ok = ok && image.size() == f.points();
    }
    CAPTURE(c.name);
    CHECK(ok);
    for (Point x = 0; x < f.points(); ++x) {
      CHECK(f.act(g.identity(), x) == x);
    }
  }
}

TEST_CASE("ambits") {
  auto s3 = share(symmetric_group(3));
  auto nat = std::make_shared<Flow const>(Flow::natural(s3));
  CHECK(make_ambit(nat, 0).basepoint == 0);

  auto triv2 = std::make_shared<Flow const>(Flow::from_generator_images(share(cyclic_group(2)), 2, {{0, 1}}));
  try {
    make_ambit(triv2, 0);
    FAIL("expected OrbitNotDense");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::OrbitNotDense);
    CHECK(std::string(e.what()).find('1') != std::string::npos);
  }
  auto reg = std::make_shared<Flow const>(Flow::regular(s3));
  CHECK_NOTHROW(make_ambit(reg, s3->identity()));
}

TEST_CASE("make_ambit accepts exactly the full-reach basepoints") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    auto f = std::make_shared<Flow const>(random_transformation_flow(rng, 5, 2));
    for (Point x = 0; x < f->points(); ++x) {
      bool full = reachable(*f, x).size() == f->points();
      bool accepted = true;
      try {
        make_ambit(f, x);
      } catch (Error const&) {
        accepted = false;
      }
      CHECK(accepted == full);
    }
  }
}

TEST_CASE("products and unions") {
  auto z2 = share(cyclic_group(2));
  auto z3 = share(cyclic_group(3));
  auto s3 = share(symmetric_group(3));
  Flow a = Flow::regular(z2);
  Flow b = Flow::regular(z3);
  Flow ab = product_flow({a, b});
  CHECK(ab.points() == 6);
  CHECK(are_isomorphic(ab.group(), cyclic_group(6)).isomorphic);
  // row-major: (x, y) -> x * 3 + y, acting coordinatewise
  for (Elem g = 0; g < ab.group().order(); ++g) {
    Elem g1 = g / 3, g2 = g % 3;
    for (Point x = 0; x < 2; ++x) {
      for (Point y = 0; y < 3; ++y) {
        CHECK(ab.act(g, x * 3 + y) == a.act(g1, x) * 3 + b.act(g2, y));
      }
    }
  }
  Flow sp = product_flow({Flow::natural(s3), a});
  CHECK(sp.group().order() == 12);
  CHECK(sp.points() == 6);
  CHECK(product_flow({a}).points() == 2);

  Flow u = disjoint_union_flow({Flow::natural(s3), Flow::regular(s3)});
  CHECK(u.points() == 9);
  CHECK(u.orbits().size() == 2);
  CHECK_FALSE(u.is_transitive());
  CHECK(disjoint_union_flow({a, a}).orbits().size() == 2);
  CHECK(disjoint_union_flow({a}).points() == 2);
  CHECK(code_of([&] { disjoint_union_flow({a, b}); }) == ErrorCode::GroupMismatch);
}

TEST_CASE("morphisms") {
  auto s3 = share(symmetric_group(3));
  auto reg = std::make_shared<Flow const>(Flow::regular(s3));
  auto nat = std::make_shared<Flow const>(Flow::natural(s3));
  FlowMorphism id{make_ambit(nat, 0), make_ambit(nat, 0), {0, 1, 2}, {}, {}};
  CHECK(all_passed(check_morphism(id)));

  FlowMorphism ev{make_ambit(reg, s3->identity()), make_ambit(nat, 0), {}, {}, {}};
  for (Elem g = 0; g < 6; ++g) {
    ev.point_map.push_back(s3->permutation(g)[0]);
  }
  CHECK(all_passed(check_morphism(ev)));

  FlowMorphism bad = id;
  bad.point_map = {0, 0, 0};
  auto checks = check_morphism(bad);
  CHECK_FALSE(all_passed(checks));

  // Projections of a product are morphisms.
  auto z2 = share(cyclic_group(2));
  auto a = make_ambit(std::make_shared<Flow const>(Flow::regular(z2)), 0);
  auto b = make_ambit(nat, 0);
  auto p = std::make_shared<Flow const>(product_flow({*a.flow, *b.flow}));
  CHECK(all_passed(check_morphism(product_projection(p, a, b, 0))));
  CHECK(all_passed(check_morphism(product_projection(p, a, b, 1))));
}

TEST_CASE("towers") {
  std::vector<Ambit> levels;
  for (std::size_t n : {1, 3, 6}) {
    levels.push_back(make_ambit(std::make_shared<Flow const>(Flow::regular(share(cyclic_group(n)))), 0));
  }
  std::vector<FlowMorphism> conn;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    FlowMorphism m{levels[i + 1], levels[i], {}, {}, {}};
    for (Point x = 0; x < levels[i + 1].flow->points(); ++x) {
      m.point_map.push_back(static_cast<Point>(x % levels[i].flow->points()));
      m.group_map.push_back(static_cast<Elem>(x % levels[i].flow->points()));
    }
    conn.push_back(m);
  }
  auto t = check_tower(levels, conn);
  CHECK(t.coherent());
  REQUIRE(t.levels.size() == 3);
  CHECK(t.levels[0].ideal_group_order == 1);
  CHECK(t.levels[1].ideal_group_order == 3);
  CHECK(t.levels[2].ideal_group_order == 6);

  CHECK(check_tower({levels[1]}, {}).coherent());

  auto broken = conn;
  broken[1].point_map = {0, 2, 1, 0, 2, 1};
  CHECK(code_of([&] { check_tower(levels, broken); }) == ErrorCode::IncompatibleTower);
}

TEST_CASE("independent translates") {
  auto s3 = share(symmetric_group(3));
  Flow nat = Flow::natural(s3);
  auto one = independent_translates(nat, {0}, 1);
  CHECK(one.found);

  auto r = independent_translates(nat, {0}, 2);
  // {g0, g'0} cells: need a point in neither, in exactly one each, in both
  // (impossible for distinct singletons).
  CHECK_FALSE(r.found);

  // Cross-check the search against exhaustive enumeration over G^k on
  // small flows.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    auto g = random_group(rng, 8).group;
    Flow f = random_group_flow(rng, g, 6);
    std::vector<Point> u;
    for (Point x = 0; x < f.points(); ++x) {
      if (rng() % 2) {
        u.push_back(x);
      }
    }
    if (u.empty() || u.size() == f.points()) {
      continue;
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      auto res = independent_translates(f, u, k);
      bool exists = false;
      std::vector<Elem> idx(k, 0);
      while (!exists) {
        std::vector<std::vector<Point>> sets;
        for (Elem e : idx) {
          std::vector<Point> s;
          for (Point x : u) {
            s.push_back(f.act(e, x));
          }
          std::sort(s.begin(), s.end());
          sets.push_back(s);
        }
        // every sign pattern inhabited
        bool all_cells = true;
        for (std::uint32_t pat = 0; pat < (1u << k) && all_cells; ++pat) {
          bool inhabited = false;
          for (Point x = 0; x < f.points() && !inhabited; ++x) {
            bool match = true;
            for (std::size_t i = 0; i < k; ++i) {
              bool in = std::binary_search(sets[i].begin(), sets[i].end(), x);
              match = match && in == bool(pat >> i & 1u);
            }
            inhabited = match;
          }
          all_cells = inhabited;
        }
        exists = all_cells;
        std::size_t j = 0;
        while (j < k && ++idx[j] == g->order()) {
          idx[j++] = 0;
        }
        if (j == k) {
          break;
        }
      }
      CHECK(res.found == exists);
      if (res.found) {
        CHECK(is_independent_family(f.points(), res.sets));
      }
    }
  }
}
