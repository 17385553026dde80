#include "doctest.h"

#include <random>

#include "elliskit/algebra.hpp"
#include "elliskit/catalog.hpp"
#include "elliskit/error.hpp"
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

Elem perm(FiniteGroup const& g, std::vector<std::uint32_t> p) { return *g.find_permutation(p); }

}  // namespace

TEST_CASE("group from table") {
  auto t = FiniteGroup::from_table({{0}});
  CHECK(t.order() == 1);
  auto z2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inverse(1) == 1);

  // mul(a, a) = a for both elements: 0 is the identity, 1 has no inverse.
  auto c = code_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); });
  CHECK((c == ErrorCode::NoInverse || c == ErrorCode::NotAssociative));
  // Latin square with identity 0 but not associative.
  std::vector<std::vector<Elem>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(code_of([&] { FiniteGroup::from_table(loop); }) == ErrorCode::NotAssociative);
}

TEST_CASE("group from permutations") {
  auto s3 = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == oracle::perm_closure(3, {{1, 0, 2}, {1, 2, 0}}).size());
  CHECK(s3.order() == 6);
  CHECK(FiniteGroup::from_permutations(4, {{1, 0, 3, 2}}).order() == 2);
  CHECK(code_of([] { FiniteGroup::from_permutations(2, {{0, 0}}); }) == ErrorCode::NotBijective);

  // Products compose right to left.
  Elem a = perm(s3, {1, 0, 2});
  Elem b = perm(s3, {1, 2, 0});
  auto pa = s3.permutation(a);
  auto pb = s3.permutation(b);
  auto ab = s3.permutation(s3.mul(a, b));
  for (std::uint32_t x = 0; x < 3; ++x) {
    CHECK(ab[x] == pa[pb[x]]);
  }
}

TEST_CASE("subgroup generation") {
  auto s3 = symmetric_group(3);
  CHECK(subgroup_generated(s3, {}).order() == 1);
  Elem t01 = perm(s3, {1, 0, 2});
  Elem t12 = perm(s3, {0, 2, 1});
  CHECK(subgroup_generated(s3, {t01}).order() == 2);
  CHECK(subgroup_generated(s3, {t01, t12}).order() == 6);
}

TEST_CASE("subgroup enumeration") {
  auto z4 = cyclic_group(4);
  auto subs = enumerate_subgroups(z4);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].order() == 1);
  CHECK(subs[1].order() == 2);
  CHECK(subs[2].order() == 4);

  auto s3 = symmetric_group(3);
  std::map<std::size_t, int> by_order;
  for (auto const& h : enumerate_subgroups(s3)) {
    by_order[h.order()]++;
  }
  CHECK(by_order == std::map<std::size_t, int>{{1, 1}, {2, 3}, {3, 1}, {6, 1}});
  CHECK(enumerate_subgroups(FiniteGroup::trivial()).size() == 1);

  Caps small;
  small.enumeration_order = 10;
  CHECK(code_of([&] { enumerate_subgroups(symmetric_group(4), small); }) == ErrorCode::GroupTooLarge);
}

TEST_CASE("subgroup enumeration matches subset filtering") {
  for (auto const& c : group_catalog(16)) {
    auto const& g = *c.group;
    auto subs = enumerate_subgroups(g);
    std::set<std::vector<Elem>> got;
    for (auto const& h : subs) {
      got.insert(h.members());
    }
    CAPTURE(c.name);
    CHECK(got.size() == subs.size());
    CHECK(got == oracle::all_subgroups(g));
    CHECK(std::is_sorted(subs.begin(), subs.end()));
  }
}

TEST_CASE("normal core") {
  auto s3 = symmetric_group(3);
  auto stab = subgroup_generated(s3, {perm(s3, {0, 2, 1})});
  CHECK(normal_core(s3, stab).order() == 1);
  auto a3 = subgroup_generated(s3, {perm(s3, {1, 2, 0})});
  CHECK(normal_core(s3, a3) == a3);
  CHECK(normal_core(s3, trivial_subgroup(s3)).order() == 1);

  // Largest normal subgroup inside H, against conjugate intersection.
  for (auto const& c : group_catalog(24)) {
    auto const& g = *c.group;
    auto subs = enumerate_subgroups(g);
    for (auto const& h : subs) {
      auto k = normal_core(g, h);
      CAPTURE(c.name);
      CHECK(k.members() == oracle::core(g, h.members()));
      CHECK(is_normal(g, k));
      CHECK(k.is_subset_of(h));
      for (auto const& n : subs) {
        if (n.is_subset_of(h) && oracle::is_normal_set(g, n.members())) {
          CHECK(n.is_subset_of(k));
        }
      }
    }
  }
}

TEST_CASE("quotient groups") {
  auto z4 = cyclic_group(4);
  CHECK(quotient_group(z4, whole_group(z4)).group.order() == 1);
  auto two = subgroup_generated(z4, {2});
  CHECK(quotient_group(z4, two).group.order() == 2);
  auto s3 = symmetric_group(3);
  CHECK(code_of([&] { quotient_group(s3, subgroup_generated(s3, {perm(s3, {1, 0, 2})})); }) ==
        ErrorCode::NotNormal);

  for (auto const& c : group_catalog(24)) {
    auto const& g = *c.group;
    for (auto const& n : enumerate_subgroups(g)) {
      if (!is_normal(g, n)) {
        continue;
      }
      auto q = quotient_group(g, n);
      CHECK(q.group.order() * n.order() == g.order());
      std::vector<Elem> proj(g.order());
      for (Elem a = 0; a < g.order(); ++a) {
        proj[a] = static_cast<Elem>(q.coset_of[a]);
      }
      CHECK(is_homomorphism(g, q.group, proj));
    }
  }
}

TEST_CASE("isomorphism") {
  auto z4 = cyclic_group(4);
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  auto r = are_isomorphic(z4, v4);
  CHECK_FALSE(r.isomorphic);
  CHECK_FALSE(r.certificate.empty());

  auto s3 = symmetric_group(3);
  auto self = are_isomorphic(s3, s3);
  CHECK(self.isomorphic);
  CHECK(is_homomorphism(s3, s3, self.map));

  auto d3 = dihedral_group(3);
  auto sd = are_isomorphic(s3, d3);
  REQUIRE(sd.isomorphic);
  CHECK(is_homomorphism(s3, d3, sd.map));
  CHECK(std::set<Elem>(sd.map.begin(), sd.map.end()).size() == 6);
}

TEST_CASE("isomorphism agrees with generator-image search") {
  auto cat = group_catalog(12);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto const& a = cat[rng() % cat.size()];
    auto const& b = cat[rng() % cat.size()];
    if (a.group->order() != b.group->order()) {
      continue;
    }
    CAPTURE(a.name);
    CAPTURE(b.name);
    auto v = are_isomorphic(*a.group, *b.group);
    CHECK(v.isomorphic == oracle::isomorphic(*a.group, *b.group));
    CHECK(v.isomorphic == are_isomorphic(*b.group, *a.group).isomorphic);
    if (v.isomorphic) {
      CHECK(is_homomorphism(*a.group, *b.group, v.map));
    }
  }
}

TEST_CASE("named groups") {
  CHECK(named_group({"cyclic", 5}).order() == 5);
  CHECK(named_group({"symmetric", 3}).order() == 6);
  CHECK(named_group({"dihedral", 4}).order() == 8);
  CHECK(quaternion_group().order() == 8);
  CHECK(code_of([] { named_group({"affine", 0, 5, 2}); }) == ErrorCode::UnsupportedParameters);

  // |F_2^3| times the number of invertible 3x3 matrices over F_2, counted
  // by determinant over all 512 matrices.
  std::size_t invertible = 0;
  for (std::uint32_t m = 0; m < 512; ++m) {
    auto e = [&](int i, int j) { return static_cast<int>(m >> (3 * i + j) & 1u); };
    int det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
              e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    invertible += (det % 2 != 0);
  }
  auto aff = affine_group(2, 3);
  CHECK(aff.order() == 8 * invertible);
  CHECK(aff.order() == 1344);

  // (v, M)(w, N) = (v + M w, M N)
  auto c = affine_coordinates(2, 3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Elem a = static_cast<Elem>(rng() % aff.order());
    Elem b = static_cast<Elem>(rng() % aff.order());
    Elem ab = aff.mul(a, b);
    auto mw = c.apply(c.matrix_of(a), c.vectors[c.vector_of(b)]);
    auto const& v = c.vectors[c.vector_of(a)];
    std::vector<std::size_t> sum(3);
    for (int k = 0; k < 3; ++k) {
      sum[k] = (v[k] + mw[k]) % 2;
    }
    CHECK(c.vectors[c.vector_of(ab)] == sum);
    for (auto const& w : c.vectors) {
      CHECK(c.apply(c.matrix_of(ab), w) == c.apply(c.matrix_of(a), c.apply(c.matrix_of(b), w)));
    }
  }
}

TEST_CASE("every catalog group satisfies the axioms exhaustively") {
  for (auto const& c : group_catalog(24)) {
    auto const& g = *c.group;
    CAPTURE(c.name);
    bool ok = true;
    for (Elem a = 0; a < g.order() && ok; ++a) {
      ok = g.mul(a, g.identity()) == a && g.mul(g.identity(), a) == a && g.mul(a, g.inverse(a)) == g.identity();
      for (Elem b = 0; b < g.order() && ok; ++b) {
        for (Elem x = 0; x < g.order() && ok; ++x) {
          ok = g.mul(g.mul(a, b), x) == g.mul(a, g.mul(b, x));
        }
      }
    }
    CHECK(ok);
  }
}
