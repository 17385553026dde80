#include "elliskit/structured.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "elliskit/error.hpp"

namespace elliskit {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

// Reusable membership marks for repeated down-set tests on one ground.
class Marks {
 public:
  explicit Marks(std::size_t n) : stamp_(n, 0) {}
  void next() { ++cur_; }
  void mark(Point p) { stamp_[p] = cur_; }
  bool has(Point p) const { return stamp_[p] == cur_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t cur_ = 0;
};

// Marks must hold exactly the members of set.
bool is_down_set(Lattice const& l, std::vector<Point> const& set, Marks const& marks) {
  for (Point p : set) {
    for (Point q : l.cover(p)) {
      if (!marks.has(q)) {
        return false;
      }
    }
  }
  return true;
}

class SetTester {
 public:
  explicit SetTester(Lattice const& l) : l_(l), marks_(l.points()) {}
  bool operator()(std::vector<Point> const& set) {
    marks_.next();
    for (Point p : set) {
      marks_.mark(p);
    }
    return is_down_set(l_, set, marks_);
  }

 private:
  Lattice const& l_;
  Marks marks_;
};

void check_cap(std::size_t total, Caps const& caps) {
  // principal sets are stored explicitly; keep them within a fixed multiple
  // of the product-points cap
  if (total > caps.product_points * 1000) {
    throw Error(ErrorCode::SizeCapExceeded, "lattice needs " + num(total) + " stored entries");
  }
}

std::string set_text(std::vector<Point> const& s) { return points_text(s); }

}  // namespace

std::string_view ground_name(Ground g) {
  switch (g) {
    case Ground::G: return "G";
    case Ground::X: return "X";
    case Ground::GX: return "GxX";
    case Ground::XX: return "X2";
    case Ground::XXXX: return "X2x2";
    case Ground::XG: return "XxG";
  }
  return "?";
}

Ground parse_ground(std::string_view name) {
  for (Ground g : {Ground::G, Ground::X, Ground::GX, Ground::XX, Ground::XXXX, Ground::XG}) {
    if (ground_name(g) == name) {
      return g;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ground '" + std::string(name) + "'");
}

Lattice Lattice::discrete(Ground ground, std::size_t points) {
  Lattice l;
  l.ground_ = ground;
  l.principal_.resize(points);
  l.cover_.resize(points);
  for (Point p = 0; p < points; ++p) {
    l.principal_[p] = {p};
  }
  return l;
}

Lattice Lattice::indiscrete(Ground ground, std::size_t points, Caps const& caps) {
  check_cap(points * points, caps);
  Lattice l;
  l.ground_ = ground;
  std::vector<Point> all(points);
  for (Point p = 0; p < points; ++p) {
    all[p] = p;
  }
  l.principal_.assign(points, all);
  l.cover_.resize(points);
  for (Point p = 0; p + 1 < points; ++p) {
    l.cover_[p] = {p + 1};
  }
  if (points > 1) {
    l.cover_[points - 1] = {0};
  }
  return l;
}

Lattice Lattice::from_principal(Ground ground, std::vector<std::vector<Point>> principal, Caps const& caps) {
  std::size_t total = 0;
  for (auto& s : principal) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    total += s.size();
  }
  check_cap(total, caps);
  Lattice l;
  l.ground_ = ground;
  l.principal_ = std::move(principal);
  l.build_cover();
  return l;
}

// Validates closedness while building the cover edges. Points with equal
// principal sets form a class and are joined in a cycle; the rest of
// principal(p) is reached through a greedy choice of strictly smaller
// principal sets, each checked to lie inside principal(p). By induction on
// size this proves q in principal(p) implies principal(q) in principal(p).
void Lattice::build_cover() {
  std::size_t const n = principal_.size();
  std::unordered_map<std::vector<Point>, std::uint32_t, boost::hash<std::vector<Point>>> ids;
  std::vector<std::uint32_t> id(n);
  for (Point p = 0; p < n; ++p) {
    auto const& s = principal_[p];
    if (!std::binary_search(s.begin(), s.end(), p)) {
      throw Error(ErrorCode::NotALattice, "least set of point " + num(p) + " does not contain it");
    }
    if (s.back() >= n) {
      throw Error(ErrorCode::NotALattice, "point " + num(s.back()) + " outside the ground");
    }
    id[p] = ids.emplace(s, static_cast<std::uint32_t>(ids.size())).first->second;
  }
  cover_.assign(n, {});
  Marks inside(n), covered(n);
  std::vector<Point> lower;
  for (Point p = 0; p < n; ++p) {
    auto const& s = principal_[p];
    inside.next();
    covered.next();
    lower.clear();
    std::vector<Point> cls;
    for (Point q : s) {
      inside.mark(q);
      if (principal_[q].size() > s.size() || (principal_[q].size() == s.size() && id[q] != id[p])) {
        throw Error(ErrorCode::NotALattice, "least set of point " + num(p) + " is not closed at " + num(q));
      }
      if (principal_[q].size() == s.size()) {
        cls.push_back(q);
      } else {
        lower.push_back(q);
      }
    }
    if (cls.size() > 1) {
      auto it = std::upper_bound(cls.begin(), cls.end(), p);
      cover_[p].push_back(it == cls.end() ? cls.front() : *it);
    }
    std::stable_sort(lower.begin(), lower.end(),
                     [&](Point a, Point b) { return principal_[a].size() > principal_[b].size(); });
    for (Point q : lower) {
      if (covered.has(q)) {
        continue;
      }
      cover_[p].push_back(q);
      for (Point r : principal_[q]) {
        if (!inside.has(r)) {
          throw Error(ErrorCode::NotALattice, "least set of point " + num(p) + " is not closed at " + num(q));
        }
        covered.mark(r);
      }
    }
  }
}

bool Lattice::is_discrete() const {
  return std::all_of(principal_.begin(), principal_.end(), [](auto const& s) { return s.size() == 1; });
}

bool Lattice::contains(std::vector<bool> const& set) const {
  for (Point p = 0; p < points(); ++p) {
    if (!set[p]) {
      continue;
    }
    for (Point q : cover_[p]) {
      if (!set[q]) {
        return false;
      }
    }
  }
  return true;
}

bool Lattice::contains_points(std::vector<Point> const& set) const {
  std::vector<bool> mask(points(), false);
  for (Point p : set) {
    mask[p] = true;
  }
  return contains(mask);
}

std::vector<std::vector<Point>> Lattice::members(Caps const& caps) const {
  // Unions of principal sets, grown breadth-first from the empty set.
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(points(), false)};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Point p = 0; p < points(); ++p) {
      if (queue[i][p]) {
        continue;
      }
      auto next = queue[i];
      for (Point q : principal_[p]) {
        next[q] = true;
      }
      if (seen.insert(next).second) {
        if (seen.size() > caps.lattice_sets) {
          throw Error(ErrorCode::SizeCapExceeded, "lattice has more than " + num(caps.lattice_sets) + " sets");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<std::vector<Point>> out;
  for (auto const& m : seen) {
    std::vector<Point> s;
    for (Point p = 0; p < points(); ++p) {
      if (m[p]) {
        s.push_back(p);
      }
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

LatticeBuild make_lattice(Ground ground, std::size_t points, std::vector<std::vector<Point>> const& sets,
                          bool auto_complete, Caps const& caps) {
  std::vector<std::vector<bool>> masks;
  std::set<std::vector<bool>> given;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<bool> m(points, false);
    for (Point p : sets[i]) {
      if (p >= points) {
        throw Error(ErrorCode::InvalidArgument, "set " + num(i) + " has point " + num(p) + " outside the ground");
      }
      m[p] = true;
    }
    masks.push_back(m);
    given.insert(m);
  }
  if (!auto_complete) {
    if (!given.count(std::vector<bool>(points, false))) {
      throw Error(ErrorCode::NotALattice, "empty set missing");
    }
    if (!given.count(std::vector<bool>(points, true))) {
      throw Error(ErrorCode::NotALattice, "ground set missing");
    }
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        std::vector<bool> u(points), n(points);
        for (std::size_t p = 0; p < points; ++p) {
          u[p] = masks[i][p] || masks[j][p];
          n[p] = masks[i][p] && masks[j][p];
        }
        if (!given.count(u)) {
          throw Error(ErrorCode::NotALattice, "union of sets " + num(i) + " and " + num(j) + " missing");
        }
        if (!given.count(n)) {
          throw Error(ErrorCode::NotALattice, "intersection of sets " + num(i) + " and " + num(j) + " missing");
        }
      }
    }
  }

  // Least member containing p: intersection of the given sets (and the
  // ground) that contain p.
  std::vector<std::vector<Point>> principal(points);
  for (Point p = 0; p < points; ++p) {
    std::vector<bool> acc(points, true);
    for (auto const& m : masks) {
      if (m[p]) {
        for (std::size_t q = 0; q < points; ++q) {
          acc[q] = acc[q] && m[q];
        }
      }
    }
    for (Point q = 0; q < points; ++q) {
      if (acc[q]) {
        principal[p].push_back(q);
      }
    }
  }
  LatticeBuild out{Lattice::from_principal(ground, std::move(principal), caps), {}};
  if (auto_complete) {
    for (auto const& m : out.lattice.members(caps)) {
      std::vector<bool> mask(points, false);
      for (Point p : m) {
        mask[p] = true;
      }
      if (!given.count(mask)) {
        out.added.push_back(m);
      }
    }
  }
  return out;
}

Lattice product_lattice(Lattice const& a, Lattice const& b, Ground result, Caps const& caps) {
  std::size_t const na = a.points();
  std::size_t const nb = b.points();
  if (na * nb > caps.product_points * caps.product_points) {
    throw Error(ErrorCode::SizeCapExceeded, "product ground has " + num(na * nb) + " points");
  }
  std::size_t total = 0;
  for (Point i = 0; i < na; ++i) {
    for (Point j = 0; j < nb; ++j) {
      total += a.principal(i).size() * b.principal(j).size();
    }
  }
  check_cap(total, caps);
  std::vector<std::vector<Point>> principal(na * nb);
  for (Point i = 0; i < na; ++i) {
    for (Point j = 0; j < nb; ++j) {
      auto& s = principal[i * nb + j];
      for (Point p : a.principal(i)) {
        for (Point q : b.principal(j)) {
          s.push_back(static_cast<Point>(p * nb + q));
        }
      }
    }
  }
  return Lattice::from_principal(result, std::move(principal), caps);
}

StructuredInstance make_instance(std::shared_ptr<Flow const> flow, Lattice g, Lattice x, EquivRelation e,
                                 std::optional<Lattice> xx, Caps const& caps) {
  std::size_t const n = flow->points();
  if (g.points() != flow->group().order() || x.points() != n || e.points() != n) {
    throw Error(ErrorCode::InvalidArgument, "lattice or relation sizes do not match the flow");
  }
  if (xx && xx->points() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "X^2 lattice has the wrong size");
  }
  StructuredInstance inst;
  inst.flow = std::move(flow);
  inst.gx = product_lattice(g, x, Ground::GX, caps);
  inst.xg = product_lattice(x, g, Ground::XG, caps);
  inst.xx = xx ? *xx : product_lattice(x, x, Ground::XX, caps);
  inst.xxxx = product_lattice(inst.xx, inst.xx, Ground::XXXX, caps);
  inst.g = std::move(g);
  inst.x = std::move(x);
  inst.e = std::move(e);
  return inst;
}

namespace {

// Axiom 1 on one product ground A x B: sections of each principal set, in
// both coordinates, lie in the factor lattices.
void check_sections(Lattice const& ab, Lattice const& a, Lattice const& b, Check& c) {
  std::size_t const nb = b.points();
  SetTester in_a(a), in_b(b);
  std::vector<std::vector<Point>> by_a(a.points()), by_b(nb);
  std::vector<Point> touched_a, touched_b;
  for (Point p = 0; p < ab.points() && c.passed; ++p) {
    for (Point i : touched_a) {
      by_a[i].clear();
    }
    for (Point j : touched_b) {
      by_b[j].clear();
    }
    touched_a.clear();
    touched_b.clear();
    for (Point q : ab.principal(p)) {
      Point i = static_cast<Point>(q / nb);
      Point j = static_cast<Point>(q % nb);
      if (by_a[i].empty()) {
        touched_a.push_back(i);
      }
      if (by_b[j].empty()) {
        touched_b.push_back(j);
      }
      by_a[i].push_back(j);
      by_b[j].push_back(i);
    }
    for (Point i : touched_a) {
      if (!in_b(by_a[i])) {
        c = {c.name, false, std::string(ground_name(ab.ground())) + ": section at first coordinate " + num(i) +
                                " of the least set of " + num(p)};
        return;
      }
    }
    for (Point j : touched_b) {
      if (!in_a(by_b[j])) {
        c = {c.name, false, std::string(ground_name(ab.ground())) + ": section at second coordinate " +
                                num(j) + " of the least set of " + num(p)};
        return;
      }
    }
  }
}

void check_products(Lattice const& ab, Lattice const& a, Lattice const& b, Check& c) {
  std::size_t const nb = b.points();
  SetTester in_ab(ab);
  std::vector<Point> s;
  for (Point i = 0; i < a.points() && c.passed; ++i) {
    for (Point j = 0; j < nb; ++j) {
      s.clear();
      for (Point p : a.principal(i)) {
        for (Point q : b.principal(j)) {
          s.push_back(static_cast<Point>(p * nb + q));
        }
      }
      if (!in_ab(s)) {
        c = {c.name, false, std::string(ground_name(ab.ground())) + ": product of the least sets of " + num(i) +
                                " and " + num(j)};
        return;
      }
    }
  }
}

}  // namespace

AgreeabilityVerdict is_agreeable(StructuredInstance const& inst) {
  Flow const& flow = *inst.flow;
  std::size_t const n = flow.points();
  std::size_t const ng = flow.group().order();
  AgreeabilityVerdict v;

  Check sections{"axiom1_sections", true, ""};
  check_sections(inst.gx, inst.g, inst.x, sections);
  check_sections(inst.xg, inst.x, inst.g, sections);
  check_sections(inst.xx, inst.x, inst.x, sections);
  check_sections(inst.xxxx, inst.xx, inst.xx, sections);
  v.axioms.push_back(sections);

  Check products{"axiom2_products", true, ""};
  check_products(inst.gx, inst.g, inst.x, products);
  check_products(inst.xg, inst.x, inst.g, products);
  check_products(inst.xx, inst.x, inst.x, products);
  check_products(inst.xxxx, inst.xx, inst.xx, products);
  v.axioms.push_back(products);

  // Preimages commute with unions, so least sets suffice for axioms 3 and 4;
  // images do too, which covers 5 and 6.
  Check action{"axiom3_action_continuous", true, ""};
  {
    SetTester in_gx(inst.gx);
    std::vector<bool> target(n);
    std::vector<Point> pre;
    for (Point x = 0; x < n && action.passed; ++x) {
      std::fill(target.begin(), target.end(), false);
      for (Point y : inst.x.principal(x)) {
        target[y] = true;
      }
      pre.clear();
      for (Elem g = 0; g < ng; ++g) {
        for (Point y = 0; y < n; ++y) {
          if (target[flow.act(g, y)]) {
            pre.push_back(static_cast<Point>(g * n + y));
          }
        }
      }
      if (!in_gx(pre)) {
        action = {action.name, false, "preimage of the least set of " + num(x)};
      }
    }
  }
  v.axioms.push_back(action);

  Check graph{"axiom4_graph_continuous", true, ""};
  {
    SetTester in_x(inst.x);
    std::vector<bool> target(n * n);
    std::vector<Point> pre;
    for (Elem g = 0; g < ng && graph.passed; ++g) {
      for (Point q = 0; q < n * n; ++q) {
        std::fill(target.begin(), target.end(), false);
        for (Point r : inst.xx.principal(q)) {
          target[r] = true;
        }
        pre.clear();
        for (Point x = 0; x < n; ++x) {
          if (target[x * n + flow.act(g, x)]) {
            pre.push_back(x);
          }
        }
        if (!in_x(pre)) {
          graph = {graph.name, false, "g=" + num(g) + ": preimage of the least set of pair (" + num(q / n) + ", " +
                                          num(q % n) + ")"};
          break;
        }
      }
    }
  }
  v.axioms.push_back(graph);

  Check proj{"axiom5_projection_on_EG_closed", true, ""};
  {
    // E_G: ((x1, x2), (g x1, g x2)).
    std::size_t const n2 = n * n;
    std::vector<bool> eg(n2 * n2, false);
    for (Point q = 0; q < n2; ++q) {
      for (Elem g = 0; g < ng; ++g) {
        eg[q * n2 + flow.act(g, q / n) * n + flow.act(g, q % n)] = true;
      }
    }
    SetTester in_xx(inst.xx);
    std::vector<Point> img;
    for (Point p = 0; p < n2 * n2 && proj.passed; ++p) {
      img.clear();
      for (Point r : inst.xxxx.principal(p)) {
        if (eg[r]) {
          img.push_back(static_cast<Point>(r / n2));
        }
      }
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!in_xx(img)) {
        proj = {proj.name, false, "image of the least set of " + num(p) + " met with E_G"};
      }
    }
  }
  v.axioms.push_back(proj);

  Check orbit{"axiom6_orbit_map_closed", true, ""};
  {
    SetTester in_xx(inst.xx);
    std::vector<Point> img;
    for (Point p = 0; p < n * ng && orbit.passed; ++p) {
      img.clear();
      for (Point r : inst.xg.principal(p)) {
        Point x = static_cast<Point>(r / ng);
        Elem g = static_cast<Elem>(r % ng);
        img.push_back(x * n + flow.act(g, x));
      }
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!in_xx(img)) {
        orbit = {orbit.name, false, "image of the least set of (" + num(p / ng) + ", " + num(p % ng) + ")"};
      }
    }
  }
  v.axioms.push_back(orbit);
  return v;
}

std::vector<bool> relation_set(EquivRelation const& e) {
  std::size_t const n = e.points();
  std::vector<bool> s(n * n, false);
  for (auto const& cls : e.classes()) {
    for (Point a : cls) {
      for (Point b : cls) {
        s[a * n + b] = true;
      }
    }
  }
  return s;
}

namespace {

std::vector<bool> subgroup_set(Subgroup const& h, std::size_t order) {
  std::vector<bool> s(order, false);
  for (Elem g : h.members()) {
    s[g] = true;
  }
  return s;
}

Condition classes_closed(StructuredInstance const& inst) {
  Condition c{"classes_pseudo_closed", true, ""};
  for (auto const& cls : inst.e.classes()) {
    if (!inst.x.contains_points(cls)) {
      c.holds = false;
      c.detail = "class " + set_text(cls);
      break;
    }
  }
  return c;
}

// Lemma checks: Stab{[x]} is pseudo-closed when [x] is, and {x : x E hx}
// is pseudo-closed when E is.
CheckList psclsd_checks(StructuredInstance const& inst, bool e_closed) {
  Flow const& flow = *inst.flow;
  auto const& e = inst.e;
  std::size_t const ng = flow.group().order();
  CheckList out;
  Check stab{"stabiliser_of_closed_class_closed", true, ""};
  for (auto const& cls : e.classes()) {
    if (!inst.x.contains_points(cls)) {
      continue;
    }
    Point x = cls.front();
    std::vector<bool> s(ng, false);
    for (Elem g = 0; g < ng; ++g) {
      s[g] = e.related(x, flow.act(g, x));
    }
    if (!inst.g.contains(s)) {
      stab = {stab.name, false, "class of " + num(x)};
      break;
    }
  }
  out.push_back(stab);
  Check fix{"fix_set_closed", true, ""};
  if (e_closed) {
    for (Elem h = 0; h < ng; ++h) {
      std::vector<bool> s(flow.points(), false);
      for (Point x = 0; x < flow.points(); ++x) {
        s[x] = e.related(x, flow.act(h, x));
      }
      if (!inst.x.contains(s)) {
        fix = {fix.name, false, "h=" + num(h)};
        break;
      }
    }
  }
  out.push_back(fix);
  return out;
}

bool all_or_none(std::vector<Condition> const& cs) {
  return std::all_of(cs.begin(), cs.end(), [](auto const& c) { return c.holds; }) ||
         std::none_of(cs.begin(), cs.end(), [](auto const& c) { return c.holds; });
}

}  // namespace

TheoremReport evaluate_thm_orb(StructuredInstance const& inst, Caps const& caps) {
  Flow const& flow = *inst.flow;
  std::size_t const ng = flow.group().order();
  TheoremReport rep;
  bool e_closed = inst.xx.contains(relation_set(inst.e));
  rep.conditions.push_back({"E_pseudo_closed", e_closed, ""});
  rep.conditions.push_back(classes_closed(inst));
  Subgroup he = kernel_group(flow, inst.e);
  rep.conditions.push_back({"H_E_pseudo_closed", inst.g.contains(subgroup_set(he, ng)), points_text(he.members())});
  Condition c4{"E_is_E_H_for_closed_H", false, ""};
  for (auto const& h : enumerate_subgroups(flow.group(), caps)) {
    if (inst.g.contains(subgroup_set(h, ng)) && orbit_relation(flow, h) == inst.e) {
      c4.holds = true;
      c4.detail = points_text(h.members());
      break;
    }
  }
  rep.conditions.push_back(c4);
  rep.lemma_checks = psclsd_checks(inst, e_closed);
  rep.equivalent = all_or_none(rep.conditions);
  return rep;
}

TheoremReport evaluate_thm_worb(StructuredInstance const& inst, Caps const& caps) {
  Flow const& flow = *inst.flow;
  auto const& e = inst.e;
  std::size_t const ng = flow.group().order();
  TheoremReport rep;
  bool e_closed = inst.xx.contains(relation_set(e));
  Condition classes = classes_closed(inst);

  // For each H the witnesses X~ form a down-closed family under inclusion
  // below the maximal support X'_H, and R grows with X~. So some closed X~
  // works with H iff the largest closed subset of X'_H does.
  Condition closed_support{"witness_with_closed_support", false, ""};
  Condition both_closed{"witness_with_closed_H_and_support", false, ""};
  Condition maximal{"maximal_witnesses_closed", true, ""};
  Condition some_h_closed{"witness_with_closed_H", false, ""};
  for (auto const& h : enumerate_subgroups(flow.group(), caps)) {
    auto sup = maximal_support(flow, e, h);
    if (!is_witness(flow, e, {h, sup})) {
      continue;
    }
    bool h_closed = inst.g.contains(subgroup_set(h, ng));
    if (h_closed && !some_h_closed.holds) {
      some_h_closed = {some_h_closed.name, true, points_text(h.members())};
    }
    // X'_H is a maximal witness; H is one exactly when it is the maximal
    // subgroup for X'_H.
    if (maximal.holds && !inst.x.contains_points(sup)) {
      maximal = {maximal.name, false, "support " + set_text(sup)};
    }
    if (maximal.holds && maximal_subgroup(flow, e, sup) == h && !h_closed) {
      maximal = {maximal.name, false, "subgroup " + points_text(h.members())};
    }
    std::vector<bool> in_sup(flow.points(), false);
    for (Point x : sup) {
      in_sup[x] = true;
    }
    std::vector<Point> interior;
    for (Point x : sup) {
      auto const& p = inst.x.principal(x);
      if (std::all_of(p.begin(), p.end(), [&](Point y) { return in_sup[y]; })) {
        interior.push_back(x);
      }
    }
    if (is_witness(flow, e, {h, interior})) {
      if (!closed_support.holds) {
        closed_support = {closed_support.name, true, points_text(h.members()) + " / " + set_text(interior)};
      }
      if (h_closed && !both_closed.holds) {
        both_closed = {both_closed.name, true, points_text(h.members()) + " / " + set_text(interior)};
      }
    }
  }

  rep.conditions.push_back({"E_pseudo_closed", e_closed, ""});
  rep.conditions.push_back({"classes_closed_and_weakly_orbital_by_closed", classes.holds && closed_support.holds,
                            closed_support.detail});
  rep.conditions.push_back({"E_is_R_for_closed_H_and_support", both_closed.holds, both_closed.detail});
  rep.conditions.push_back(maximal);
  rep.extra.push_back(classes);
  rep.extra.push_back({"classes_closed_and_closed_H", classes.holds && some_h_closed.holds, some_h_closed.detail});
  rep.lemma_checks = psclsd_checks(inst, e_closed);
  rep.equivalent = all_or_none(rep.conditions);
  return rep;
}

TheoremReport verify_thm_orb(StructuredInstance const& inst, Caps const& caps) {
  auto ag = is_agreeable(inst);
  if (!ag.agreeable()) {
    for (auto const& c : ag.axioms) {
      if (!c.passed) {
        throw Error(ErrorCode::NotAgreeable, c.name + ": " + c.witness);
      }
    }
  }
  auto orb = is_orbital(*inst.flow, inst.e);
  if (!orb.orbital) {
    throw Error(ErrorCode::NotOrbital, orb.witness);
  }
  return evaluate_thm_orb(inst, caps);
}

TheoremReport verify_thm_worb(StructuredInstance const& inst, Caps const& caps) {
  auto ag = is_agreeable(inst);
  if (!ag.agreeable()) {
    for (auto const& c : ag.axioms) {
      if (!c.passed) {
        throw Error(ErrorCode::NotAgreeable, c.name + ": " + c.witness);
      }
    }
  }
  auto w = is_weakly_orbital(*inst.flow, inst.e, caps);
  if (!w.weakly_orbital) {
    throw Error(ErrorCode::NotWeaklyOrbital, w.certificate);
  }
  return evaluate_thm_worb(inst, caps);
}

}  // namespace elliskit
