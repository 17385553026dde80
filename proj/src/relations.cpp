#include "elliskit/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/pending/disjoint_sets.hpp>

#include "elliskit/error.hpp"

namespace elliskit {

std::string points_text(std::vector<Point> const& pts) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << (i ? "," : "") << pts[i];
  }
  os << '}';
  return os.str();
}

EquivRelation EquivRelation::from_classes(std::size_t points,
                                          std::vector<std::vector<Point>> const& classes) {
  std::size_t const none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(points, none);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw Error(ErrorCode::NotAPartition, "class " + std::to_string(c) + " is empty");
    }
    for (Point p : classes[c]) {
      if (p >= points) {
        throw Error(ErrorCode::NotAPartition, "point " + std::to_string(p) + " out of range");
      }
      if (owner[p] != none) {
        throw Error(ErrorCode::NotAPartition, "point " + std::to_string(p) + " lies in classes " +
                                                  std::to_string(owner[p]) + " and " +
                                                  std::to_string(c));
      }
      owner[p] = c;
    }
  }
  for (Point p = 0; p < points; ++p) {
    if (owner[p] == none) {
      throw Error(ErrorCode::NotAPartition, "point " + std::to_string(p) + " is in no class");
    }
  }
  std::vector<std::uint32_t> labels(owner.begin(), owner.end());
  return from_labels(labels);
}

EquivRelation EquivRelation::from_labels(std::vector<std::uint32_t> const& labels) {
  EquivRelation e;
  std::map<std::uint32_t, std::size_t> remap;
  e.class_of_.resize(labels.size());
  for (Point p = 0; p < labels.size(); ++p) {
    auto [it, inserted] = remap.emplace(labels[p], e.classes_.size());
    if (inserted) {
      e.classes_.emplace_back();
    }
    e.classes_[it->second].push_back(p);
    e.class_of_[p] = it->second;
  }
  return e;
}

EquivRelation EquivRelation::equality(std::size_t points) {
  std::vector<std::uint32_t> labels(points);
  std::iota(labels.begin(), labels.end(), 0u);
  return from_labels(labels);
}

EquivRelation EquivRelation::total(std::size_t points) {
  return from_labels(std::vector<std::uint32_t>(points, 0));
}

bool EquivRelation::refines(EquivRelation const& coarser) const {
  for (auto const& c : classes_) {
    for (Point p : c) {
      if (!coarser.related(c.front(), p)) {
        return false;
      }
    }
  }
  return true;
}

bool PairRelation::is_reflexive() const {
  for (Point a = 0; a < n_; ++a) {
    if (!test(a, a)) {
      return false;
    }
  }
  return true;
}

bool PairRelation::is_symmetric() const {
  for (Point a = 0; a < n_; ++a) {
    for (Point b = a + 1; b < n_; ++b) {
      if (test(a, b) != test(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool PairRelation::is_transitive() const {
  if (!is_symmetric()) {
    for (Point a = 0; a < n_; ++a) {
      for (Point b = 0; b < n_; ++b) {
        if (!test(a, b)) {
          continue;
        }
        for (Point c = 0; c < n_; ++c) {
          if (test(b, c) && !test(a, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }
  // A symmetric relation is transitive iff each connected component that
  // carries a pair is a complete graph with loops.
  std::vector<std::size_t> rank(n_), parent(n_);
  boost::disjoint_sets<std::size_t*, std::size_t*> ds(rank.data(), parent.data());
  for (Point a = 0; a < n_; ++a) {
    ds.make_set(a);
  }
  std::vector<std::size_t> pairs_in(n_, 0);
  for (Point a = 0; a < n_; ++a) {
    for (Point b = 0; b < n_; ++b) {
      if (test(a, b)) {
        ds.union_set(a, b);
      }
    }
  }
  std::vector<std::size_t> size(n_, 0);
  for (Point a = 0; a < n_; ++a) {
    ++size[ds.find_set(a)];
  }
  for (Point a = 0; a < n_; ++a) {
    for (Point b = 0; b < n_; ++b) {
      if (test(a, b)) {
        ++pairs_in[ds.find_set(a)];
      }
    }
  }
  for (Point r = 0; r < n_; ++r) {
    if (pairs_in[r] != 0 && pairs_in[r] != size[r] * size[r]) {
      return false;
    }
  }
  return true;
}

PairRelation PairRelation::of(EquivRelation const& e) {
  PairRelation r(e.points());
  for (auto const& c : e.classes()) {
    for (Point a : c) {
      for (Point b : c) {
        r.set(a, b);
      }
    }
  }
  return r;
}

InvarianceVerdict check_invariance(Flow const& flow, EquivRelation const& e) {
  if (e.points() != flow.points()) {
    throw Error(ErrorCode::InvalidArgument, "relation has " + std::to_string(e.points()) +
                                                " points, flow has " + std::to_string(flow.points()));
  }
  // Invariance under a generating set implies invariance under the group.
  std::vector<Elem> gens = flow.group().generators();
  for (Elem g : gens) {
    for (auto const& c : e.classes()) {
      Point first = flow.act(g, c.front());
      for (Point x : c) {
        if (!e.related(first, flow.act(g, x))) {
          return {false, "g=" + std::to_string(g) + " x1=" + std::to_string(c.front()) +
                             " x2=" + std::to_string(x)};
        }
      }
    }
  }
  return {};
}

Subgroup kernel_group(Flow const& flow, EquivRelation const& e) {
  auto inv = check_invariance(flow, e);
  if (!inv.invariant) {
    throw Error(ErrorCode::NotInvariant, inv.witness);
  }
  std::vector<Elem> members;
  for (Elem g = 0; g < flow.group().order(); ++g) {
    bool fixes = true;
    for (Point x = 0; x < flow.points() && fixes; ++x) {
      fixes = e.related(flow.act(g, x), x);
    }
    if (fixes) {
      members.push_back(g);
    }
  }
  Subgroup h(flow.group().order(), std::move(members));
  if (!is_normal(flow.group(), h)) {
    throw Error(ErrorCode::TheoremViolation, "H_E of an invariant relation is not normal");
  }
  return h;
}

EquivRelation orbit_relation(Flow const& flow, Subgroup const& h) {
  std::uint32_t const none = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(flow.points(), none);
  for (Point x = 0; x < flow.points(); ++x) {
    if (label[x] != none) {
      continue;
    }
    for (Elem g : h.members()) {
      label[flow.act(g, x)] = x;
    }
  }
  return EquivRelation::from_labels(label);
}

RRelation r_relation(Flow const& flow, WitnessPair const& w) {
  std::size_t const n = flow.points();
  RRelation r{PairRelation(n), false, false, false, std::nullopt};
  std::vector<std::pair<Point, Point>> work;
  for (Point xt : w.support) {
    for (Elem h : w.subgroup.members()) {
      Point y = flow.act(h, xt);
      if (!r.pairs.test(xt, y)) {
        r.pairs.set(xt, y);
        work.emplace_back(xt, y);
      }
    }
  }
  auto const& gens = flow.group().generators();
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (Elem g : gens) {
      Point ga = flow.act(g, a);
      Point gb = flow.act(g, b);
      if (!r.pairs.test(ga, gb)) {
        r.pairs.set(ga, gb);
        work.emplace_back(ga, gb);
      }
    }
  }
  r.reflexive = r.pairs.is_reflexive();
  r.symmetric = r.pairs.is_symmetric();
  r.transitive = r.pairs.is_transitive();
  if (r.reflexive && r.symmetric && r.transitive) {
    std::uint32_t const none = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> label(n, none);
    for (Point a = 0; a < n; ++a) {
      if (label[a] != none) {
        continue;
      }
      for (Point b = 0; b < n; ++b) {
        if (r.pairs.test(a, b)) {
          label[b] = a;
        }
      }
    }
    r.relation = EquivRelation::from_labels(label);
  }
  return r;
}

std::vector<Point> class_formula(Flow const& flow, WitnessPair const& w, Point x0) {
  FiniteGroup const& g = flow.group();
  std::vector<bool> in_support(flow.points(), false);
  for (Point p : w.support) {
    in_support[p] = true;
  }
  std::vector<bool> hit(flow.points(), false);
  for (Elem a = 0; a < g.order(); ++a) {
    if (!in_support[flow.act(a, x0)]) {
      continue;
    }
    for (Elem h : w.subgroup.members()) {
      hit[flow.act(g.mul(g.mul(g.inverse(a), h), a), x0)] = true;
    }
  }
  std::vector<Point> out;
  for (Point p = 0; p < flow.points(); ++p) {
    if (hit[p]) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<Point> maximal_support(Flow const& flow, EquivRelation const& e, Subgroup const& h) {
  std::vector<Point> out;
  for (Point x = 0; x < flow.points(); ++x) {
    bool ok = true;
    for (Elem g : h.members()) {
      if (!e.related(x, flow.act(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(x);
    }
  }
  return out;
}

Subgroup maximal_subgroup(Flow const& flow, EquivRelation const& e, std::vector<Point> const& support) {
  std::vector<Elem> members;
  for (Elem g = 0; g < flow.group().order(); ++g) {
    bool ok = true;
    for (Point x : support) {
      if (!e.related(x, flow.act(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      members.push_back(g);
    }
  }
  return Subgroup(flow.group().order(), std::move(members));
}

bool is_witness(Flow const& flow, EquivRelation const& e, WitnessPair const& w) {
  auto r = r_relation(flow, w);
  return r.relation && *r.relation == e;
}

WitnessPair maximal_witnesses(Flow const& flow, EquivRelation const& e, WitnessPair const& w) {
  if (!is_witness(flow, e, w)) {
    throw Error(ErrorCode::NotAWitness, "E != R_{H,X~} for the given pair");
  }
  WitnessPair cur = w;
  while (true) {
    WitnessPair next;
    next.support = maximal_support(flow, e, cur.subgroup);
    next.subgroup = maximal_subgroup(flow, e, next.support);
    if (next.support == cur.support && next.subgroup == cur.subgroup) {
      break;
    }
    cur = std::move(next);
  }
  if (!is_subgroup(flow.group(), cur.subgroup.members()) || !is_witness(flow, e, cur)) {
    throw Error(ErrorCode::TheoremViolation, "maximalisation left the set of witnesses");
  }
  return cur;
}

bool is_maximal_pair(Flow const& flow, EquivRelation const& e, WitnessPair const& w) {
  if (!is_witness(flow, e, w)) {
    return false;
  }
  for (Point x = 0; x < flow.points(); ++x) {
    if (std::binary_search(w.support.begin(), w.support.end(), x)) {
      continue;
    }
    WitnessPair bigger{w.subgroup, w.support};
    bigger.support.insert(std::upper_bound(bigger.support.begin(), bigger.support.end(), x), x);
    if (is_witness(flow, e, bigger)) {
      return false;
    }
  }
  for (Elem g = 0; g < flow.group().order(); ++g) {
    if (w.subgroup.contains(g)) {
      continue;
    }
    auto seeds = w.subgroup.members();
    seeds.push_back(g);
    WitnessPair bigger{subgroup_generated(flow.group(), seeds), w.support};
    if (is_witness(flow, e, bigger)) {
      return false;
    }
  }
  return true;
}

OrbitalVerdict is_orbital(Flow const& flow, EquivRelation const& e) {
  OrbitalVerdict v;
  v.h_e = kernel_group(flow, e);
  EquivRelation eh = orbit_relation(flow, v.h_e);
  v.orbital = eh == e;
  if (!v.orbital) {
    for (auto const& c : e.classes()) {
      for (Point x : c) {
        if (!eh.related(c.front(), x)) {
          v.witness = "x1=" + std::to_string(c.front()) + " x2=" + std::to_string(x) +
                      " related by E but not by E_{H_E}";
          return v;
        }
      }
    }
  }
  return v;
}

WeakOrbitalVerdict is_weakly_orbital(Flow const& flow, EquivRelation const& e, Caps const& caps) {
  auto inv = check_invariance(flow, e);
  if (!inv.invariant) {
    throw Error(ErrorCode::NotInvariant, inv.witness);
  }
  WeakOrbitalVerdict v;
  for (auto const& h : enumerate_subgroups(flow.group(), caps)) {
    ++v.subgroups_examined;
    WitnessPair w{h, maximal_support(flow, e, h)};
    if (is_witness(flow, e, w)) {
      v.weakly_orbital = true;
      v.witness = std::move(w);
      v.certificate = "E = R_{H,X~} with |H| = " + std::to_string(h.order()) + ", |X~| = " +
                      std::to_string(v.witness->support.size());
      return v;
    }
  }
  v.certificate = "no subgroup among " + std::to_string(v.subgroups_examined) +
                  " witnesses E with its maximal support";
  return v;
}

FreeCorrespondence free_action_correspondence(Flow const& flow, Caps const& caps) {
  FiniteGroup const& g = flow.group();
  for (Elem a = 0; a < g.order(); ++a) {
    if (a == g.identity()) {
      continue;
    }
    for (Point x = 0; x < flow.points(); ++x) {
      if (flow.act(a, x) == x) {
        throw Error(ErrorCode::NotFree, "g=" + std::to_string(a) + " fixes x=" + std::to_string(x));
      }
    }
  }
  FreeCorrespondence fc;
  Check back{"H_of_E_N_equals_N", true, ""};
  Check inj{"injective", true, ""};
  for (auto const& n : enumerate_subgroups(g, caps)) {
    if (!is_normal(g, n)) {
      continue;
    }
    EquivRelation en = orbit_relation(flow, n);
    if (!(kernel_group(flow, en) == n)) {
      back = {back.name, false, "N of order " + std::to_string(n.order())};
    }
    for (auto const& [m, em] : fc.pairs) {
      if (em == en) {
        inj = {inj.name, false, "two normal subgroups give the same relation"};
      }
    }
    fc.pairs.emplace_back(n, std::move(en));
  }
  fc.checks.push_back(back);
  fc.checks.push_back(inj);

  Check surj{"every_orbital_relation_arises", true, ""};
  if (flow.points() <= caps.relation_points) {
    for (auto const& e : enumerate_invariant_relations(flow, caps)) {
      if (!is_orbital(flow, e).orbital) {
        continue;
      }
      bool found = std::any_of(fc.pairs.begin(), fc.pairs.end(),
                               [&](auto const& p) { return p.second == e; });
      if (!found) {
        surj = {surj.name, false, "orbital relation with " + std::to_string(e.classes().size()) +
                                      " classes has no normal subgroup"};
      }
    }
  } else {
    surj.witness = "skipped: more than " + std::to_string(caps.relation_points) + " points";
  }
  fc.checks.push_back(surj);
  return fc;
}

std::vector<EquivRelation> enumerate_invariant_relations(Flow const& flow, Caps const& caps) {
  std::size_t const n = flow.points();
  if (n > caps.relation_points) {
    throw Error(ErrorCode::SizeCapExceeded, "relation enumeration limited to " +
                                                std::to_string(caps.relation_points) + " points");
  }
  std::vector<EquivRelation> out;
  if (n == 0) {
    return out;
  }
  // Restricted growth strings: label[i] <= 1 + max(label[0..i)).
  std::vector<std::uint32_t> label(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);
  while (true) {
    auto e = EquivRelation::from_labels(label);
    if (check_invariance(flow, e).invariant) {
      out.push_back(std::move(e));
    }
    std::size_t i = n - 1;
    while (i > 0 && label[i] == prefix_max[i - 1] + 1) {
      --i;
    }
    if (i == 0) {
      break;
    }
    ++label[i];
    prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      label[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

}  // namespace elliskit
