#include "elliskit/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/pending/disjoint_sets.hpp>

#include "elliskit/error.hpp"

namespace elliskit {

Rng instance_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::vector<CatalogGroup> group_catalog(std::size_t max_order) {
  std::vector<CatalogGroup> base;
  auto add = [&](std::string name, FiniteGroup g) {
    base.push_back({std::move(name), std::make_shared<FiniteGroup const>(std::move(g))});
  };
  for (std::size_t n = 1; n <= 12; ++n) {
    add("C" + std::to_string(n), cyclic_group(n));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    add("D" + std::to_string(n), dihedral_group(n));
  }
  add("S3", symmetric_group(3));
  add("S4", symmetric_group(4));
  add("Q8", quaternion_group());

  std::vector<CatalogGroup> out;
  for (auto const& b : base) {
    if (b.group->order() <= max_order) {
      out.push_back(b);
    }
  }
  std::size_t const singles = out.size();
  for (std::size_t i = 0; i < singles; ++i) {
    for (std::size_t j = i; j < singles; ++j) {
      auto const& a = out[i];
      auto const& b = out[j];
      if (a.group->order() < 2 || b.group->order() < 2 || a.group->order() * b.group->order() > max_order) {
        continue;
      }
      out.push_back({a.name + "x" + b.name, std::make_shared<FiniteGroup const>(direct_product(*a.group, *b.group))});
    }
  }
  return out;
}

CatalogGroup random_group(Rng& rng, std::size_t max_order) {
  auto cat = group_catalog(max_order);
  if (cat.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no catalog group of order <= " + std::to_string(max_order));
  }
  return pick(rng, cat);
}

namespace {

std::vector<Subgroup> subgroups_of_index_at_most(FiniteGroup const& g, std::size_t max_index, Caps const& caps) {
  std::vector<Subgroup> out;
  for (auto const& h : enumerate_subgroups(g, caps)) {
    if (g.order() / h.order() <= max_index) {
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace

Flow random_coset_flow(Rng& rng, std::shared_ptr<FiniteGroup const> const& g, std::size_t max_points,
                       Subgroup* k_out, Caps const& caps) {
  auto subs = subgroups_of_index_at_most(*g, max_points, caps);
  Subgroup const& k = pick(rng, subs);
  if (k_out) {
    *k_out = k;
  }
  return Flow::coset_action(g, k);
}

Flow random_group_flow(Rng& rng, std::shared_ptr<FiniteGroup const> const& g, std::size_t max_points,
                       Caps const& caps) {
  std::size_t const parts = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<Flow> flows;
  std::size_t used = 0;
  for (std::size_t i = 0; i < parts && used < max_points; ++i) {
    auto subs = subgroups_of_index_at_most(*g, max_points - used, caps);
    Flow f = Flow::coset_action(g, pick(rng, subs));
    used += f.points();
    flows.push_back(std::move(f));
  }
  return flows.size() == 1 ? flows.front() : disjoint_union_flow(flows);
}

Flow random_transformation_flow(Rng& rng, std::size_t max_points, std::size_t max_gens) {
  std::size_t const n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(max_points, 1))(rng);
  std::size_t const k = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(max_gens, 1))(rng);
  std::uniform_int_distribution<Point> pt(0, static_cast<Point>(n - 1));
  TransformationGenerators gens{n, {}};
  for (std::size_t i = 0; i < k; ++i) {
    Map m(n);
    for (auto& v : m) {
      v = pt(rng);
    }
    gens.maps.push_back(std::move(m));
  }
  return Flow::from_transformations(gens);
}

EquivRelation invariant_closure(Flow const& flow, std::vector<std::pair<Point, Point>> const& pairs) {
  std::size_t const n = flow.points();
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> ds(rank.data(), parent.data());
  for (std::size_t x = 0; x < n; ++x) {
    ds.make_set(x);
  }
  // Merging (x, y) forces (s x, s y) for every generator s; a worklist of
  // merged pairs reaches the invariant closure.
  std::vector<std::pair<Point, Point>> work(pairs.begin(), pairs.end());
  auto const& gens = flow.group().generators();
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (ds.find_set(x) == ds.find_set(y)) {
      continue;
    }
    ds.union_set(x, y);
    for (Elem s : gens) {
      work.emplace_back(flow.act(s, x), flow.act(s, y));
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = static_cast<std::uint32_t>(ds.find_set(x));
  }
  return EquivRelation::from_labels(labels);
}

EquivRelation random_invariant_relation(Rng& rng, Flow const& flow) {
  std::size_t const n = flow.points();
  std::size_t const k = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  std::uniform_int_distribution<Point> pt(0, static_cast<Point>(n - 1));
  std::vector<std::pair<Point, Point>> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    pairs.emplace_back(pt(rng), pt(rng));
  }
  return invariant_closure(flow, pairs);
}

Lattice random_lattice(Rng& rng, Ground ground, std::size_t points, Caps const& caps) {
  std::size_t const k = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<Point>> sets;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Point> s;
    for (Point p = 0; p < points; ++p) {
      if (coin(rng)) {
        s.push_back(p);
      }
    }
    sets.push_back(std::move(s));
  }
  return make_lattice(ground, points, sets, true, caps).lattice;
}

std::vector<std::shared_ptr<Flow const>> small_actions(std::size_t max_order, std::size_t max_points,
                                                       Caps const& caps) {
  std::vector<std::shared_ptr<FiniteGroup const>> groups;
  for (auto const& c : group_catalog(max_order)) {
    bool dup = std::any_of(groups.begin(), groups.end(),
                           [&](auto const& g) { return are_isomorphic(*g, *c.group, caps).isomorphic; });
    if (!dup) {
      groups.push_back(c.group);
    }
  }
  std::vector<std::shared_ptr<Flow const>> out;
  for (auto const& g : groups) {
    // One representative per conjugacy class of subgroups.
    std::vector<Subgroup> reps;
    std::set<std::vector<Elem>> seen;
    for (auto const& h : enumerate_subgroups(*g, caps)) {
      if (g->order() / h.order() > max_points || seen.count(h.members())) {
        continue;
      }
      reps.push_back(h);
      for (Elem a = 0; a < g->order(); ++a) {
        std::vector<Elem> conj;
        for (Elem x : h.members()) {
          conj.push_back(g->conjugate(a, x));
        }
        std::sort(conj.begin(), conj.end());
        seen.insert(conj);
      }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      Flow a = Flow::coset_action(g, reps[i]);
      out.push_back(std::make_shared<Flow const>(a));
      for (std::size_t j = i; j < reps.size(); ++j) {
        if (a.points() + g->order() / reps[j].order() <= max_points) {
          out.push_back(std::make_shared<Flow const>(disjoint_union_flow({a, Flow::coset_action(g, reps[j])})));
        }
      }
    }
  }
  return out;
}

}  // namespace elliskit
