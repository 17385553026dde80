#include "elliskit/ellis.hpp"

#include <algorithm>
#include <set>

#include "elliskit/error.hpp"

namespace elliskit {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

EllisSemigroup EllisSemigroup::compute(Flow const& flow, Caps const& caps) {
  return from_maps(flow.points(), flow.acting_maps(), caps);
}

EllisSemigroup EllisSemigroup::from_maps(std::size_t points, std::vector<Map> const& generators,
                                         Caps const& caps) {
  EllisSemigroup s;
  s.points_ = points;
  std::size_t const k = generators.size();
  Map id(points);
  for (Point x = 0; x < points; ++x) {
    id[x] = x;
  }
  s.index_.emplace(id, 0);
  s.maps_ = id;
  s.parent_.push_back(0);
  s.parent_gen_.push_back(0);
  Map q(points);
  for (SIdx cur = 0; cur < s.index_.size(); ++cur) {
    for (std::size_t g = 0; g < k; ++g) {
      for (Point x = 0; x < points; ++x) {
        q[x] = s.maps_[cur * points + generators[g][x]];
      }
      auto [it, inserted] = s.index_.emplace(q, static_cast<SIdx>(s.index_.size()));
      if (inserted) {
        if (s.index_.size() > caps.closure) {
          throw Error(ErrorCode::ClosureCapExceeded,
                      "enveloping semigroup exceeds " + std::to_string(caps.closure) +
                          " elements (" + std::to_string(s.index_.size()) + " found so far)");
        }
        s.maps_.insert(s.maps_.end(), q.begin(), q.end());
        s.parent_.push_back(cur);
        s.parent_gen_.push_back(static_cast<std::uint32_t>(g));
      }
      s.right_.push_back(it->second);
    }
  }
  s.count_ = s.index_.size();
  for (std::size_t g = 0; g < k; ++g) {
    s.gen_images_.push_back(s.right_[0 * k + g]);
  }
  std::size_t const n = s.count_;
  if (n <= kTableLimit) {
    s.table_.resize(n * n);
    for (SIdx a = 0; a < n; ++a) {
      s.table_[a * n] = a;
      for (SIdx b = 1; b < n; ++b) {
        // b = parent(b) * gen, so a * b = (a * parent(b)) * gen.
        s.table_[a * n + b] = s.right_[s.table_[a * n + s.parent_[b]] * k + s.parent_gen_[b]];
      }
    }
  }
  s.left_.resize(n * k);
  for (SIdx f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < k; ++g) {
      s.left_[f * k + g] = s.mul(s.gen_images_[g], f);
    }
  }
  return s;
}

SIdx EllisSemigroup::mul(SIdx a, SIdx b) const {
  if (!table_.empty()) {
    return table_[a * count_ + b];
  }
  Map q(points_);
  for (Point x = 0; x < points_; ++x) {
    q[x] = apply(a, apply(b, x));
  }
  return index_.at(q);
}

std::optional<SIdx> EllisSemigroup::find(std::span<Point const> map) const {
  Map q(map.begin(), map.end());
  auto it = index_.find(q);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool EllisSemigroup::is_bijective(SIdx f) const {
  std::vector<bool> seen(points_, false);
  for (Point x = 0; x < points_; ++x) {
    Point y = apply(f, x);
    if (seen[y]) {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

bool MinimalIdeal::contains(SIdx f) const {
  return std::binary_search(members.begin(), members.end(), f);
}

std::vector<MinimalIdeal> minimal_left_ideals(EllisSemigroup const& s) {
  std::size_t const n = s.size();
  std::size_t const k = s.gen_count();
  std::uint32_t const unvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, unvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<SIdx> stack;
  std::vector<std::vector<SIdx>> comps;
  std::uint32_t counter = 0;

  // Iterative Tarjan; frame = (vertex, next generator to explore).
  std::vector<std::pair<SIdx, std::size_t>> frames;
  for (SIdx root = 0; root < n; ++root) {
    if (index[root] != unvisited) {
      continue;
    }
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < k) {
        SIdx w = s.left_by_generator(next++, v);
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      SIdx const done = v;
      frames.pop_back();
      if (!frames.empty()) {
        SIdx parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<SIdx> c;
        SIdx w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = static_cast<std::uint32_t>(comps.size());
          c.push_back(w);
        } while (w != done);
        comps.push_back(std::move(c));
      }
    }
  }

  std::vector<MinimalIdeal> out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool sink = true;
    for (SIdx v : comps[c]) {
      for (std::size_t g = 0; g < k && sink; ++g) {
        sink = comp[s.left_by_generator(g, v)] == c;
      }
      if (!sink) {
        break;
      }
    }
    if (!sink) {
      continue;
    }
    MinimalIdeal m;
    m.members = comps[c];
    std::sort(m.members.begin(), m.members.end());
    for (SIdx f : m.members) {
      if (s.is_idempotent(f)) {
        m.idempotents.push_back(f);
      }
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](MinimalIdeal const& a, MinimalIdeal const& b) { return a.members < b.members; });
  return out;
}

std::optional<Elem> IdealGroup::local(SIdx f) const {
  auto it = std::lower_bound(members.begin(), members.end(), f);
  if (it == members.end() || *it != f) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - members.begin());
}

IdealGroup ideal_group(EllisSemigroup const& s, std::vector<MinimalIdeal> const& ideals,
                       std::size_t ideal, SIdx u) {
  if (ideal >= ideals.size()) {
    throw Error(ErrorCode::InvalidArgument, "no minimal ideal " + std::to_string(ideal));
  }
  MinimalIdeal const& m = ideals[ideal];
  if (!m.contains(u)) {
    throw Error(ErrorCode::NotInIdeal, "element " + std::to_string(u) + " is not in ideal " +
                                           std::to_string(ideal));
  }
  if (!s.is_idempotent(u)) {
    throw Error(ErrorCode::NotIdempotent, "element " + std::to_string(u) + " is not idempotent");
  }
  IdealGroup g;
  g.ideal = ideal;
  g.idempotent = u;
  for (SIdx x : m.members) {
    g.members.push_back(s.mul(u, x));
  }
  std::sort(g.members.begin(), g.members.end());
  g.members.erase(std::unique(g.members.begin(), g.members.end()), g.members.end());

  std::size_t const n = g.members.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto loc = g.local(s.mul(g.members[i], g.members[j]));
      if (!loc) {
        throw Error(ErrorCode::TheoremViolation, "uM not closed under products");
      }
      flat[i * n + j] = *loc;
    }
  }
  // Associative (composition), left identity u and left inverses suffice.
  Elem const lu = *g.local(u);
  for (std::size_t i = 0; i < n; ++i) {
    if (flat[lu * n + i] != i) {
      throw Error(ErrorCode::TheoremViolation,
                  "u is not a left identity on " + std::to_string(g.members[i]));
    }
    bool inv = false;
    for (std::size_t j = 0; j < n && !inv; ++j) {
      inv = flat[j * n + i] == lu;
    }
    if (!inv) {
      throw Error(ErrorCode::TheoremViolation,
                  "no left inverse for " + std::to_string(g.members[i]) + " in uM");
    }
  }
  for (SIdx x : m.members) {
    if (s.mul(x, u) != x) {
      throw Error(ErrorCode::TheoremViolation,
                  "s u != s for s = " + std::to_string(x) + ", u = " + std::to_string(u));
    }
  }
  g.group_view = table_group_unchecked(n, std::move(flat));
  return g;
}

std::vector<Elem> ideal_group_isomorphism(EllisSemigroup const& s, IdealGroup const& from,
                                          IdealGroup const& to) {
  SIdx const v = to.idempotent;
  std::size_t const n = from.members.size();
  std::vector<Elem> map(n);
  std::vector<bool> hit(to.members.size(), false);
  if (to.members.size() != n) {
    throw Error(ErrorCode::IsomorphismViolated, "ideal groups have orders " + std::to_string(n) +
                                                    " and " + std::to_string(to.members.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    SIdx img = s.mul(s.mul(v, from.members[i]), v);
    auto loc = to.local(img);
    if (!loc) {
      throw Error(ErrorCode::IsomorphismViolated,
                  "v s v leaves vN for s = " + std::to_string(from.members[i]));
    }
    if (hit[*loc]) {
      throw Error(ErrorCode::IsomorphismViolated, "s -> v s v is not injective");
    }
    hit[*loc] = true;
    map[i] = *loc;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (map[from.group_view.mul(a, b)] != to.group_view.mul(map[a], map[b])) {
        throw Error(ErrorCode::IsomorphismViolated,
                    "pair (" + std::to_string(from.members[a]) + ", " +
                        std::to_string(from.members[b]) + ")");
      }
    }
  }
  return map;
}

std::vector<SIdx> circ(EllisSemigroup const& s, SIdx a, std::vector<SIdx> const& b) {
  // Approximants are all of EL; the smallest neighbourhood of a is {a}, and
  // every finite set is closed, so the intersection over neighbourhoods of
  // the closures of {gamma b} is attained at the neighbourhood {a}.
  std::vector<SIdx> const nbhd{a};
  std::set<SIdx> limits;
  for (SIdx gamma : nbhd) {
    for (SIdx x : b) {
      limits.insert(s.mul(gamma, x));
    }
  }
  return {limits.begin(), limits.end()};
}

std::vector<SIdx> tau_closure(EllisSemigroup const& s, IdealGroup const& g,
                              std::vector<SIdx> const& a) {
  SIdx const u = g.idempotent;
  std::set<SIdx> out;
  for (SIdx x : circ(s, u, a)) {
    SIdx y = s.mul(u, x);
    if (g.local(y)) {
      out.insert(y);
    }
  }
  return {out.begin(), out.end()};
}

Subgroup h_subgroup(EllisSemigroup const& s, IdealGroup const& g) {
  // The smallest tau-open set containing u is {x : u in cl{x}}; closure is
  // monotone, so the intersection of closures of neighbourhoods of u is the
  // closure of that set.
  std::vector<SIdx> nbhd;
  for (SIdx x : g.members) {
    auto cl = tau_closure(s, g, {x});
    if (std::binary_search(cl.begin(), cl.end(), g.idempotent)) {
      nbhd.push_back(x);
    }
  }
  std::vector<Elem> members;
  for (SIdx x : tau_closure(s, g, nbhd)) {
    members.push_back(*g.local(x));
  }
  return Subgroup(g.group_view.order(), std::move(members));
}

CheckList check_ideal_structure(EllisSemigroup const& s, std::vector<MinimalIdeal> const& ideals) {
  CheckList out;
  std::size_t const n = s.size();

  Check exist{"minimal_ideal_exists", !ideals.empty(), ideals.empty() ? "no minimal ideal" : ""};
  out.push_back(exist);

  // (1)-(2): S M in M, and M = S a = M a for every a in M.
  Check ideal{"ideal_equals_Sa_and_Ma", true, ""};
  for (std::size_t i = 0; i < ideals.size() && ideal.passed; ++i) {
    auto const& m = ideals[i];
    for (SIdx a : m.members) {
      std::set<SIdx> sa;
      std::set<SIdx> ma;
      for (SIdx x = 0; x < n; ++x) {
        sa.insert(s.mul(x, a));
      }
      for (SIdx x : m.members) {
        ma.insert(s.mul(x, a));
      }
      std::vector<SIdx> sav(sa.begin(), sa.end());
      std::vector<SIdx> mav(ma.begin(), ma.end());
      if (sav != m.members || mav != m.members) {
        ideal = {ideal.name, false, "ideal " + std::to_string(i) + ", a = " + std::to_string(a)};
        break;
      }
    }
  }
  out.push_back(ideal);

  // (3): M is the disjoint union of the uM over idempotents u in M.
  Check decomp{"disjoint_union_of_uM", true, ""};
  std::vector<std::vector<IdealGroup>> groups(ideals.size());
  try {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      std::vector<int> cover(n, 0);
      for (SIdx u : ideals[i].idempotents) {
        groups[i].push_back(ideal_group(s, ideals, i, u));
        for (SIdx x : groups[i].back().members) {
          ++cover[x];
        }
      }
      for (SIdx x : ideals[i].members) {
        if (cover[x] != 1) {
          decomp = {decomp.name, false,
                    "element " + std::to_string(x) + " lies in " + std::to_string(cover[x]) +
                        " groups uM"};
          break;
        }
      }
      if (ideals[i].idempotents.empty()) {
        decomp = {decomp.name, false, "ideal " + std::to_string(i) + " has no idempotent"};
      }
    }
  } catch (Error const& e) {
    // (4) and (5) failures surface from ideal_group.
    decomp = {decomp.name, false, e.what()};
  }
  out.push_back(decomp);

  // (4): uM is a group with identity u (verified inside ideal_group, and
  // re-checked here through the group view).
  Check grp{"uM_group_with_identity_u", decomp.passed, decomp.passed ? "" : "not evaluated"};
  for (auto const& gs : groups) {
    for (auto const& g : gs) {
      auto lu = g.local(g.idempotent);
      if (!lu || g.group_view.identity() != *lu) {
        grp = {grp.name, false, "identity of uM is not u = " + std::to_string(g.idempotent)};
      }
    }
  }
  out.push_back(grp);

  // (5): s u = s for s in M and idempotent u in M.
  Check right_id{"su_equals_s", true, ""};
  for (auto const& m : ideals) {
    for (SIdx u : m.idempotents) {
      for (SIdx x : m.members) {
        if (s.mul(x, u) != x) {
          right_id = {right_id.name, false, "s = " + std::to_string(x) + ", u = " + std::to_string(u)};
        }
      }
    }
  }
  out.push_back(right_id);

  // (6): all ideal groups isomorphic via s -> v s v.
  Check iso{"ideal_groups_isomorphic_vsv", decomp.passed, decomp.passed ? "" : "not evaluated"};
  if (decomp.passed) {
    std::vector<IdealGroup const*> all;
    for (auto const& gs : groups) {
      for (auto const& g : gs) {
        all.push_back(&g);
      }
    }
    try {
      for (auto const* a : all) {
        for (auto const* b : all) {
          ideal_group_isomorphism(s, *a, *b);
        }
      }
    } catch (Error const& e) {
      iso = {iso.name, false, e.what()};
    }
  }
  out.push_back(iso);
  return out;
}

}  // namespace elliskit
