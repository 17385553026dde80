#include "elliskit/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "elliskit/error.hpp"

namespace elliskit {

namespace {

constexpr std::size_t kFullAssocLimit = 128;

std::string perm_text(std::span<std::uint32_t const> p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << (i ? "," : "") << p[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

FiniteGroup table_group_unchecked(std::size_t n, std::vector<Elem> flat) {
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.identity_ = 0;
  for (Elem e = 0; e < n; ++e) {
    if (g.table_[e * n + e] == e) {
      g.identity_ = e;
      break;
    }
  }
  g.inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.table_[a * n + b] == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  g.compute_generators();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elem>> const& table) {
  std::size_t const n = table.size();
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty multiplication table");
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(r) + " has length " +
                                                  std::to_string(table[r].size()) +
                                                  ", expected " + std::to_string(n));
    }
    for (Elem v : table[r]) {
      if (v >= n) {
        throw Error(ErrorCode::InvalidArgument,
                    "entry " + std::to_string(v) + " in row " + std::to_string(r) + " out of range");
      }
      flat.push_back(v);
    }
  }

  auto at = [&](Elem a, Elem b) { return flat[a * n + b]; };

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      ok = at(e, a) == a && at(a, e) == a;
    }
    if (ok) {
      identity = e;
    }
  }
  if (!identity) {
    throw Error(ErrorCode::NoIdentity, "no two-sided identity in table of order " + std::to_string(n));
  }
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) {
      found = at(a, b) == *identity && at(b, a) == *identity;
    }
    if (!found) {
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
    }
  }

  auto fail_assoc = [](Elem a, Elem b, Elem c) {
    throw Error(ErrorCode::NotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                               ")*" + std::to_string(c) + " != " +
                                               std::to_string(a) + "*(" + std::to_string(b) +
                                               "*" + std::to_string(c) + ")");
  };

  FiniteGroup g = table_group_unchecked(n, flat);
  if (n <= kFullAssocLimit) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            fail_assoc(a, b, c);
          }
        }
      }
    }
  } else {
    // Light's test: the elements b with (ab)c = a(bc) for all a, c form a
    // sub-magma, so checking a magma generating set is complete.
    for (Elem b : g.gens_) {
      for (Elem a = 0; a < n; ++a) {
        for (Elem c = 0; c < n; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            fail_assoc(a, b, c);
          }
        }
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           std::vector<Perm> const& generators,
                                           Caps const& caps) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto const& p = generators[i];
    bool ok = p.size() == degree;
    std::vector<bool> seen(degree, false);
    for (std::size_t x = 0; ok && x < p.size(); ++x) {
      ok = p[x] < degree && !seen[p[x]];
      if (ok) {
        seen[p[x]] = true;
      }
    }
    if (!ok) {
      throw Error(ErrorCode::NotBijective, "generator " + std::to_string(i) + " " + perm_text(p) +
                                               " is not a bijection of 0.." +
                                               std::to_string(degree == 0 ? 0 : degree - 1));
    }
  }

  std::vector<std::uint32_t> perms;
  std::unordered_map<Perm, Elem, boost::hash<Perm>> index;
  std::vector<Elem> parent;
  std::vector<std::size_t> parent_gen;
  std::vector<std::vector<Elem>> right;  // right[x][s] = x * gen_s

  Perm id(degree);
  for (std::size_t x = 0; x < degree; ++x) {
    id[x] = static_cast<std::uint32_t>(x);
  }
  index.emplace(id, 0);
  perms.insert(perms.end(), id.begin(), id.end());
  parent.push_back(0);
  parent_gen.push_back(0);

  std::size_t const k = generators.size();
  Perm q(degree);
  for (Elem cur = 0; cur < index.size(); ++cur) {
    right.emplace_back(k);
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t x = 0; x < degree; ++x) {
        q[x] = perms[cur * degree + generators[s][x]];
      }
      auto [it, inserted] = index.emplace(q, static_cast<Elem>(index.size()));
      if (inserted) {
        if (index.size() > caps.max_group_order) {
          throw Error(ErrorCode::GroupTooLarge, "permutation closure exceeds " +
                                                    std::to_string(caps.max_group_order) +
                                                    " elements");
        }
        perms.insert(perms.end(), q.begin(), q.end());
        parent.push_back(cur);
        parent_gen.push_back(s);
      }
      right[cur][s] = it->second;
    }
  }

  std::size_t const n = index.size();
  std::vector<Elem> flat(n * n);
  for (Elem a = 0; a < n; ++a) {
    flat[a * n] = a;
    for (Elem b = 1; b < n; ++b) {
      // b = parent(b) * gen, so a*b = (a*parent(b)) * gen.
      flat[a * n + b] = right[flat[a * n + parent[b]]][parent_gen[b]];
    }
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.identity_ = 0;
  g.inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.table_[a * n + b] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  g.gens_.clear();
  for (std::size_t s = 0; s < k; ++s) {
    g.gens_.push_back(right[0][s]);
  }
  g.degree_ = degree;
  g.perms_ = std::move(perms);
  g.perm_set_ = true;
  return g;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup{}; }

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) {
    ++k;
  }
  return k;
}

std::optional<Elem> FiniteGroup::find_permutation(std::span<std::uint32_t const> perm) const {
  if (!perm_set_ || perm.size() != degree_) {
    return std::nullopt;
  }
  for (Elem a = 0; a < n_; ++a) {
    auto p = permutation(a);
    if (std::equal(p.begin(), p.end(), perm.begin())) {
      return a;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    t[a].assign(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
  }
  return t;
}

void FiniteGroup::set_permutation_rep(std::size_t degree, std::vector<std::uint32_t> flat_images) {
  if (flat_images.size() != degree * n_) {
    throw Error(ErrorCode::InvalidArgument, "permutation representation has wrong size");
  }
  degree_ = degree;
  perms_ = std::move(flat_images);
  perm_set_ = true;
}

void FiniteGroup::compute_generators() {
  // Greedy: repeatedly add the smallest element outside the sub-magma
  // generated so far. Magma closure (not group closure) keeps this usable
  // by Light's associativity test on unvalidated tables.
  gens_.clear();
  std::vector<bool> in(n_, false);
  std::vector<Elem> members;
  in[identity_] = true;
  members.push_back(identity_);
  for (Elem cand = 0; cand < n_; ++cand) {
    if (in[cand]) {
      continue;
    }
    gens_.push_back(cand);
    std::deque<Elem> fresh{cand};
    in[cand] = true;
    members.push_back(cand);
    while (!fresh.empty()) {
      Elem x = fresh.front();
      fresh.pop_front();
      std::size_t const count = members.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (Elem y : {mul(x, members[i]), mul(members[i], x)}) {
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
            fresh.push_back(y);
          }
        }
      }
    }
  }
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  std::size_t const na = a.order();
  std::size_t const nb = b.order();
  std::size_t const n = na * nb;
  std::vector<Elem> flat(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      flat[x * n + y] = static_cast<Elem>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
    }
  }
  FiniteGroup g = table_group_unchecked(n, std::move(flat));
  std::vector<Elem> gens;
  for (Elem s : a.generators()) {
    gens.push_back(static_cast<Elem>(s * nb + b.identity()));
  }
  for (Elem s : b.generators()) {
    gens.push_back(static_cast<Elem>(a.identity() * nb + s));
  }
  g.gens_ = std::move(gens);
  if (a.has_permutation_rep() && b.has_permutation_rep()) {
    std::size_t const da = a.degree();
    std::size_t const db = b.degree();
    std::vector<std::uint32_t> images;
    images.reserve(n * (da + db));
    for (Elem x = 0; x < n; ++x) {
      for (auto v : a.permutation(x / nb)) {
        images.push_back(v);
      }
      for (auto v : b.permutation(x % nb)) {
        images.push_back(static_cast<std::uint32_t>(v + da));
      }
    }
    g.set_permutation_rep(da + db, std::move(images));
  }
  return g;
}

Subgroup::Subgroup(std::size_t parent_order, std::vector<Elem> members)
    : members_(std::move(members)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem m : members_) {
    mask_[m] = true;
  }
}

bool Subgroup::is_subset_of(Subgroup const& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elem m) { return other.contains(m); });
}

Subgroup subgroup_generated(FiniteGroup const& g, std::vector<Elem> const& seeds) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem s : seeds) {
      Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g.order(), std::move(members));
}

Subgroup whole_group(FiniteGroup const& g) {
  std::vector<Elem> all(g.order());
  for (Elem i = 0; i < g.order(); ++i) {
    all[i] = i;
  }
  return Subgroup(g.order(), std::move(all));
}

Subgroup trivial_subgroup(FiniteGroup const& g) { return Subgroup(g.order(), {g.identity()}); }

bool is_subgroup(FiniteGroup const& g, std::vector<Elem> const& members) {
  if (members.empty()) {
    return false;
  }
  std::vector<bool> in(g.order(), false);
  for (Elem m : members) {
    if (m >= g.order()) {
      return false;
    }
    in[m] = true;
  }
  if (!in[g.identity()]) {
    return false;
  }
  for (Elem a : members) {
    if (!in[g.inverse(a)]) {
      return false;
    }
    for (Elem b : members) {
      if (!in[g.mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_normal(FiniteGroup const& g, Subgroup const& h) {
  std::vector<Elem> conj = g.generators();
  for (Elem s : conj) {
    for (Elem x : h.members()) {
      if (!h.contains(g.conjugate(s, x))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Subgroup> enumerate_subgroups(FiniteGroup const& g, Caps const& caps) {
  if (g.order() > caps.enumeration_order) {
    throw Error(ErrorCode::GroupTooLarge, "subgroup enumeration limited to order " +
                                              std::to_string(caps.enumeration_order) + ", got " +
                                              std::to_string(g.order()));
  }
  std::size_t const n = g.order();
  // One generator per cyclic subgroup; every subgroup is a join of these.
  std::vector<Elem> cyclic_gens;
  std::set<std::vector<Elem>> cyclic_seen;
  for (Elem x = 0; x < n; ++x) {
    if (x == g.identity()) {
      continue;
    }
    auto c = subgroup_generated(g, {x});
    if (cyclic_seen.insert(c.members()).second) {
      cyclic_gens.push_back(x);
    }
  }

  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> found;
  std::vector<std::vector<Elem>> seeds_of;
  auto add = [&](Subgroup s, std::vector<Elem> seeds) {
    if (seen.insert(s.members()).second) {
      found.push_back(std::move(s));
      seeds_of.push_back(std::move(seeds));
    }
  };
  add(trivial_subgroup(g), {});
  Subgroup const whole = whole_group(g);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem c : cyclic_gens) {
      if (found[i].contains(c)) {
        continue;
      }
      std::vector<Elem> seeds = seeds_of[i];
      seeds.push_back(c);
      if (found[i].order() * 2 > n) {
        add(whole, std::move(seeds));
      } else {
        auto s = subgroup_generated(g, seeds);
        add(std::move(s), std::move(seeds));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Subgroup normal_core(FiniteGroup const& g, Subgroup const& h) {
  std::vector<Elem> core;
  for (Elem x : h.members()) {
    bool all = true;
    for (Elem a = 0; a < g.order() && all; ++a) {
      all = h.contains(g.mul(g.mul(g.inverse(a), x), a));
    }
    if (all) {
      core.push_back(x);
    }
  }
  return Subgroup(g.order(), std::move(core));
}

Subgroup intersect(FiniteGroup const& g, Subgroup const& a, Subgroup const& b) {
  std::vector<Elem> both;
  for (Elem x : a.members()) {
    if (b.contains(x)) {
      both.push_back(x);
    }
  }
  return Subgroup(g.order(), std::move(both));
}

Subgroup product_subgroup(FiniteGroup const& g, Subgroup const& a, Subgroup const& b) {
  std::vector<Elem> prod;
  for (Elem x : a.members()) {
    for (Elem y : b.members()) {
      prod.push_back(g.mul(x, y));
    }
  }
  Subgroup s(g.order(), std::move(prod));
  if (!is_subgroup(g, s.members())) {
    throw Error(ErrorCode::NotNormal, "product of subgroups of orders " + std::to_string(a.order()) +
                                          " and " + std::to_string(b.order()) +
                                          " is not a subgroup");
  }
  return s;
}

GroupQuotient quotient_group(FiniteGroup const& g, Subgroup const& n) {
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem x : n.members()) {
      if (!n.contains(g.conjugate(a, x))) {
        throw Error(ErrorCode::NotNormal, "conjugate of " + std::to_string(x) + " by " +
                                              std::to_string(a) + " leaves the subgroup");
      }
    }
  }
  GroupQuotient q;
  q.normal_subgroup = n;
  std::size_t const none = static_cast<std::size_t>(-1);
  q.coset_of.assign(g.order(), none);
  for (Elem a = 0; a < g.order(); ++a) {
    if (q.coset_of[a] != none) {
      continue;
    }
    std::vector<Elem> coset;
    for (Elem x : n.members()) {
      coset.push_back(g.mul(a, x));
    }
    std::sort(coset.begin(), coset.end());
    for (Elem y : coset) {
      q.coset_of[y] = q.cosets.size();
    }
    q.cosets.push_back(std::move(coset));
  }
  std::size_t const m = q.cosets.size();
  std::vector<Elem> flat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      flat[i * m + j] = static_cast<Elem>(q.coset_of[g.mul(q.cosets[i][0], q.cosets[j][0])]);
    }
  }
  q.group = table_group_unchecked(m, std::move(flat));
  return q;
}

bool is_homomorphism(FiniteGroup const& a, FiniteGroup const& b, std::vector<Elem> const& map) {
  if (map.size() != a.order()) {
    return false;
  }
  for (Elem x = 0; x < a.order(); ++x) {
    if (map[x] >= b.order()) {
      return false;
    }
  }
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace elliskit
