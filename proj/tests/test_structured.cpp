#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "elliskit/catalog.hpp"
#include "elliskit/error.hpp"
#include "elliskit/examples.hpp"
#include "elliskit/structured.hpp"

using namespace elliskit;

namespace {

using Set = std::vector<Point>;

Set sorted_union(Set a, Set const& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Set sorted_intersection(Set const& a, Set const& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Union/intersection closure by iteration to a fixpoint.
std::set<Set> closure(std::set<Set> sets) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Set> cur(sets.begin(), sets.end());
    for (auto const& a : cur) {
      for (auto const& b : cur) {
        grew = sets.insert(sorted_union(a, b)).second || grew;
        grew = sets.insert(sorted_intersection(a, b)).second || grew;
      }
    }
  }
  return sets;
}

ErrorCode code_of(std::function<void()> const& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("discrete and indiscrete lattices") {
  auto d = Lattice::discrete(Ground::X, 3);
  CHECK(d.is_discrete());
  CHECK(d.members().size() == 8);
  auto i = Lattice::indiscrete(Ground::X, 3);
  CHECK_FALSE(i.is_discrete());
  CHECK(i.members() == std::vector<Set>{{}, {0, 1, 2}});
  CHECK(i.contains_points({}));
  CHECK_FALSE(i.contains_points({1}));
  CHECK(Lattice::discrete(Ground::X, 0).members().size() == 1);
}

TEST_CASE("make_lattice") {
  CHECK(code_of([] { make_lattice(Ground::X, 3, {{}, {0}, {1}, {0, 1, 2}}, false); }) == ErrorCode::NotALattice);
  auto b = make_lattice(Ground::X, 3, {{0}, {1}}, true);
  CHECK(b.lattice.contains_points({0, 1}));
  CHECK(b.lattice.contains_points({}));
  CHECK(b.lattice.contains_points({0, 1, 2}));
  CHECK(std::find(b.added.begin(), b.added.end(), Set{0, 1}) != b.added.end());
  auto ok = make_lattice(Ground::X, 2, {{}, {0}, {0, 1}}, false);
  CHECK(ok.added.empty());
  CHECK(ok.lattice.principal(1) == Set{0, 1});
  CHECK(ok.lattice.principal(0) == Set{0});

  // principal[1] is not inside principal[0] although 1 is.
  CHECK(code_of([] { Lattice::from_principal(Ground::X, {{0, 1}, {1, 2}, {2}}); }) == ErrorCode::NotALattice);
  CHECK(code_of([] { Lattice::from_principal(Ground::X, {{1}, {1}}); }) == ErrorCode::NotALattice);
}

TEST_CASE("product lattices match the rectangle closure") {
  auto a = make_lattice(Ground::X, 2, {{}, {0}, {0, 1}}, false).lattice;
  auto b = make_lattice(Ground::X, 2, {{}, {1}, {0, 1}}, false).lattice;
  auto p = product_lattice(a, b, Ground::XX);
  CHECK(p.members().size() == 6);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    auto la = random_lattice(rng, Ground::G, 1 + rng() % 3);
    auto lb = random_lattice(rng, Ground::X, 1 + rng() % 3);
    std::set<Set> rects;
    std::size_t const nb = lb.points();
    for (auto const& s : la.members()) {
      for (auto const& t : lb.members()) {
        Set r;
        for (Point x : s) {
          for (Point y : t) r.push_back(static_cast<Point>(x * nb + y));
        }
        std::sort(r.begin(), r.end());
        rects.insert(r);
      }
    }
    auto want = closure(rects);
    auto got = product_lattice(la, lb, Ground::GX).members();
    CAPTURE(seed);
    CHECK(std::set<Set>(got.begin(), got.end()) == want);
  }
}

TEST_CASE("lattice membership through cover edges") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    std::size_t n = 1 + rng() % 7;
    auto l = random_lattice(rng, Ground::X, n);
    auto members = l.members();
    std::set<Set> mset(members.begin(), members.end());
    CHECK(mset.count(Set{}));
    Set all(n);
    std::iota(all.begin(), all.end(), 0u);
    CHECK(mset.count(all));
    for (auto const& a : members) {
      for (auto const& b : members) {
        CHECK(mset.count(sorted_union(a, b)));
        CHECK(mset.count(sorted_intersection(a, b)));
      }
    }
    for (Point p = 0; p < n; ++p) {
      Set meet = all;
      for (auto const& m : members) {
        if (std::binary_search(m.begin(), m.end(), p)) meet = sorted_intersection(meet, m);
      }
      CHECK(meet == l.principal(p));
      for (Point q : l.cover(p)) {
        auto const& pp = l.principal(p);
        CHECK(std::binary_search(pp.begin(), pp.end(), q));
      }
    }
    // contains against the naive down-set test on every subset
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> in(n);
      for (Point x = 0; x < n; ++x) in[x] = mask >> x & 1u;
      bool naive = true;
      for (Point x = 0; x < n && naive; ++x) {
        if (!in[x]) continue;
        for (Point y : l.principal(x)) naive = naive && in[y];
      }
      CHECK(l.contains(in) == naive);
    }
  }
}

TEST_CASE("agreeability") {
  auto triv = std::make_shared<FiniteGroup const>(FiniteGroup::trivial());
  auto f = std::make_shared<Flow const>(Flow::from_generator_images(triv, 3, {}));
  auto g1 = Lattice::discrete(Ground::G, 1);
  auto inst = make_instance(f, g1, Lattice::discrete(Ground::X, 3), EquivRelation::equality(3));
  CHECK(is_agreeable(inst).agreeable());

  // With a coarser X lattice the fix-set axiom can fail even for the
  // trivial group.
  auto coarse = make_instance(f, g1, Lattice::indiscrete(Ground::X, 3), EquivRelation::equality(3));
  CHECK_FALSE(is_agreeable(coarse).agreeable());
}

TEST_CASE("structured catalog") {
  auto cat = structured_catalog();
  CHECK(cat.size() >= 10);
  for (auto const& sc : cat) {
    CAPTURE(sc.name);
    REQUIRE(is_agreeable(sc.instance).agreeable());
    if (is_weakly_orbital(*sc.instance.flow, sc.instance.e).weakly_orbital) {
      CHECK(evaluate_thm_worb(sc.instance).consistent());
    }
    if (is_orbital(*sc.instance.flow, sc.instance.e).orbital) {
      CHECK(evaluate_thm_orb(sc.instance).consistent());
      CHECK_NOTHROW(verify_thm_orb(sc.instance));
    } else {
      CHECK(code_of([&] { verify_thm_orb(sc.instance); }) == ErrorCode::NotOrbital);
    }
  }
}

TEST_CASE("counterexample scenario lies outside the hypotheses") {
  auto inst = worb_counterexample_scenario();
  CHECK_FALSE(is_agreeable(inst).agreeable());
  CHECK(code_of([&] { verify_thm_worb(inst); }) == ErrorCode::NotAgreeable);
  auto r = evaluate_thm_worb(inst);
  CHECK(all_passed(r.lemma_checks));
  bool classes_closed = false;
  for (auto const& c : r.extra) {
    if (c.name == "classes_pseudo_closed") classes_closed = c.holds;
  }
  CHECK(classes_closed);
}
