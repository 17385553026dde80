#include "elliskit/grouplike.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <tuple>

#include "elliskit/error.hpp"

namespace elliskit {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

void require_points(Flow const& flow, EquivRelation const& e) {
  if (e.points() != flow.points()) {
    throw Error(ErrorCode::NotEquivalence, "relation has " + num(e.points()) + " points, flow has " +
                                               num(flow.points()));
  }
}

}  // namespace

GroupLikeCertificate check_group_like(Ambit const& ambit, EquivRelation const& e) {
  Flow const& flow = *ambit.flow;
  require_points(flow, e);
  FiniteGroup const& g = flow.group();
  Point const x0 = ambit.basepoint;
  std::size_t const m = e.classes().size();

  GroupLikeCertificate cert;
  cert.orbit_class.resize(g.order());
  std::size_t const none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rep(m, none);
  for (Elem a = 0; a < g.order(); ++a) {
    std::size_t c = e.class_of(flow.act(a, x0));
    cert.orbit_class[a] = c;
    if (rep[c] == none) {
      rep[c] = a;
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (rep[c] == none) {
      cert.refutation = "class of " + num(e.classes()[c].front()) + " contains no g x0";
      return cert;
    }
  }

  for (Elem a = 0; a < g.order(); ++a) {
    Elem b = static_cast<Elem>(rep[cert.orbit_class[a]]);
    if (a == b) {
      continue;
    }
    for (Point x = 0; x < flow.points(); ++x) {
      if (!e.related(flow.act(a, x), flow.act(b, x))) {
        cert.refutation = "g=" + num(a) + " g'=" + num(b) + " x=" + num(x) +
                          ": g x0 ~ g' x0 but g x !~ g' x";
        return cert;
      }
    }
  }
  auto inv = check_invariance(flow, e);
  if (!inv.invariant) {
    cert.refutation = "E is not invariant: " + inv.witness;
    return cert;
  }

  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table[a][b] = static_cast<Elem>(e.class_of(flow.act(static_cast<Elem>(rep[a]), e.classes()[b].front())));
    }
  }
  try {
    cert.quotient = FiniteGroup::from_table(table);
  } catch (Error const& err) {
    cert.refutation = std::string("operation on X/E is not a group: ") + err.what();
    return cert;
  }
  std::size_t const id_class = e.class_of(x0);
  if (cert.quotient.identity() != id_class) {
    throw Error(ErrorCode::TheoremViolation, "identity of X/E is not [x0]");
  }

  std::vector<Elem> k;
  for (Elem a = 0; a < g.order(); ++a) {
    if (cert.orbit_class[a] == id_class) {
      k.push_back(a);
    }
  }
  cert.kernel = Subgroup(g.order(), k);
  if (!(cert.kernel == kernel_group(flow, e)) || !is_normal(g, cert.kernel)) {
    throw Error(ErrorCode::TheoremViolation, "stabiliser of [x0] differs from H_E or is not normal");
  }
  cert.group_like = true;
  return cert;
}

OrbitMapReport orbit_map_r(Ambit const& ambit, EquivRelation const& e, GroupLikeCertificate const& cert,
                           EllisSemigroup const& s) {
  require_points(*ambit.flow, e);
  OrbitMapReport rep;
  Point const x0 = ambit.basepoint;
  rep.r.resize(s.size());
  for (SIdx f = 0; f < s.size(); ++f) {
    rep.r[f] = e.class_of(s.apply(f, x0));
  }

  Check surj{"surjective", true, ""};
  std::vector<bool> hit(e.classes().size(), false);
  for (auto c : rep.r) {
    hit[c] = true;
  }
  for (std::size_t c = 0; c < hit.size(); ++c) {
    if (!hit[c]) {
      surj = {surj.name, false, "class " + num(c) + " not hit"};
      break;
    }
  }
  rep.checks.push_back(surj);

  Check hom{"homomorphism", true, ""};
  if (!cert.group_like) {
    hom = {hom.name, false, "E is not group-like: " + cert.refutation};
  } else {
    for (SIdx f = 0; f < s.size() && hom.passed; ++f) {
      for (std::size_t k = 0; k < s.gen_count(); ++k) {
        SIdx gen = s.generator_images()[k];
        auto want = cert.quotient.mul(static_cast<Elem>(rep.r[f]), static_cast<Elem>(rep.r[gen]));
        if (rep.r[s.right_by_generator(f, k)] != want) {
          hom = {hom.name, false, "(" + num(f) + ", " + num(gen) + ")"};
          break;
        }
      }
    }
  }
  rep.checks.push_back(hom);

  Check idem{"idempotents_in_kernel", true, ""};
  std::size_t const id_class = e.class_of(x0);
  for (auto const& mi : minimal_left_ideals(s)) {
    for (SIdx u : mi.idempotents) {
      if (rep.r[u] != id_class) {
        idem = {idem.name, false, "idempotent " + num(u) + " maps to class " + num(rep.r[u])};
      }
    }
  }
  rep.checks.push_back(idem);
  return rep;
}

DReport compute_D(EllisSemigroup const& s, IdealGroup const& g, Ambit const& ambit) {
  Point const x0 = ambit.basepoint;
  Point const ux0 = s.apply(g.idempotent, x0);
  FiniteGroup const& v = g.group_view;
  std::vector<Elem> d;
  for (Elem i = 0; i < g.members.size(); ++i) {
    if (s.apply(g.members[i], x0) == ux0) {
      d.push_back(i);
    }
  }
  if (!is_subgroup(v, d)) {
    throw Error(ErrorCode::TheoremViolation, "D is not a subgroup of uM");
  }
  DReport rep{Subgroup(v.order(), d), {"D_kernel_equiv", true, ""}};
  for (Elem a = 0; a < v.order() && rep.kernel_equiv.passed; ++a) {
    for (Elem b = 0; b < v.order(); ++b) {
      bool same = s.apply(g.members[a], x0) == s.apply(g.members[b], x0);
      if (same != rep.d.contains(v.mul(v.inverse(a), b))) {
        rep.kernel_equiv = {rep.kernel_equiv.name, false, "f1=" + num(g.members[a]) + " f2=" + num(g.members[b])};
        break;
      }
    }
  }
  return rep;
}

GHat compute_ghat(EllisSemigroup const& s, IdealGroup const& g, Ambit const& ambit) {
  FiniteGroup const& v = g.group_view;
  GHat out;
  out.d = compute_D(s, g, ambit).d;
  out.h_um = h_subgroup(s, g);
  out.h_um_d = product_subgroup(v, out.h_um, out.d);
  out.core = normal_core(v, out.h_um_d);
  out.quotient = quotient_group(v, out.core);
  return out;
}

DominationVerdict check_domination(DominationWitness const& w) {
  DominationVerdict out;
  for (auto c : check_morphism(w.morphism)) {
    c.name = "morphism_" + c.name;
    out.checks.push_back(c);
  }
  if (!all_passed(out.checks)) {
    return out;
  }
  auto cert = check_group_like(w.source, w.f);
  Check gl{"F_group_like", cert.group_like, cert.group_like ? "" : cert.refutation};
  out.checks.push_back(gl);
  if (!gl.passed) {
    return out;
  }

  // E|_Z: z ~ z' iff phi(z) E phi(z').
  auto const& pm = w.morphism.point_map;
  Check refine{"F_refines_E_on_Z", true, ""};
  std::size_t const fc = w.f.classes().size();
  out.induced.assign(fc, 0);
  for (std::size_t c = 0; c < fc; ++c) {
    auto const& cls = w.f.classes()[c];
    out.induced[c] = w.e.class_of(pm[cls.front()]);
    for (Point z : cls) {
      if (w.e.class_of(pm[z]) != out.induced[c]) {
        refine = {refine.name, false, "z=" + num(cls.front()) + " z'=" + num(z)};
      }
    }
  }
  out.checks.push_back(refine);

  // Invariance under a generating set of Z/F gives invariance under all of
  // it.
  Check inv{"E_on_Z_mod_F_left_invariant", true, ""};
  if (refine.passed) {
    std::size_t const none = static_cast<std::size_t>(-1);
    for (Elem a : cert.quotient.generators()) {
      std::vector<std::size_t> image(w.e.classes().size(), none);
      for (std::size_t b = 0; b < fc && inv.passed; ++b) {
        std::size_t to = out.induced[cert.quotient.mul(a, static_cast<Elem>(b))];
        std::size_t& slot = image[out.induced[b]];
        if (slot == none) {
          slot = to;
        } else if (slot != to) {
          inv = {inv.name, false, "a=" + num(a) + " b=" + num(b)};
        }
      }
    }
  } else {
    inv = {inv.name, false, "F does not refine E|_Z"};
  }
  out.checks.push_back(inv);
  return out;
}

DominationWitness default_domination(Ambit const& ambit, EquivRelation const& e) {
  Flow const& flow = *ambit.flow;
  require_points(flow, e);
  auto gp = flow.group_ptr();
  FiniteGroup const& g = *gp;
  Point const x0 = ambit.basepoint;
  std::vector<Elem> stab;
  for (Elem a = 0; a < g.order(); ++a) {
    if (e.related(flow.act(a, x0), x0)) {
      stab.push_back(a);
    }
  }
  if (!is_subgroup(g, stab)) {
    throw Error(ErrorCode::NotWeaklyGroupLike, "stabiliser of [x0]_E is not a subgroup; E is not invariant");
  }
  Subgroup n = normal_core(g, Subgroup(g.order(), stab));
  auto z = std::make_shared<Flow const>(Flow::regular(gp));
  Ambit source{z, g.identity()};
  std::vector<std::uint32_t> labels(g.order());
  auto q = quotient_group(g, n);
  for (Elem a = 0; a < g.order(); ++a) {
    labels[a] = static_cast<std::uint32_t>(q.coset_of[a]);
  }
  FlowMorphism m;
  m.source = source;
  m.target = ambit;
  m.point_map.resize(g.order());
  for (Elem a = 0; a < g.order(); ++a) {
    m.point_map[a] = flow.act(a, x0);
  }
  // The regular flow has no transformations to carry over.
  return {source, EquivRelation::from_labels(labels), m, e};
}

IdentificationReport identify_quotient(Ambit const& ambit, EquivRelation const& e,
                                       std::optional<DominationWitness> const& witness, Caps const& caps) {
  Flow const& flow = *ambit.flow;
  require_points(flow, e);
  IdentificationReport rep;
  if (witness) {
    rep.domination = check_domination(*witness);
    if (!rep.domination.dominates()) {
      std::string why;
      for (auto const& c : rep.domination.checks) {
        if (!c.passed) {
          why = c.name + " (" + c.witness + ")";
          break;
        }
      }
      throw Error(ErrorCode::NotWeaklyGroupLike, "supplied domination witness fails: " + why);
    }
  } else {
    rep.domination = check_domination(default_domination(ambit, e));
    if (!rep.domination.dominates()) {
      std::string why;
      for (auto const& c : rep.domination.checks) {
        if (!c.passed) {
          why = c.name + " (" + c.witness + ")";
          break;
        }
      }
      throw Error(ErrorCode::NotWeaklyGroupLike, "regular ambit does not dominate E: " + why);
    }
  }

  auto s = EllisSemigroup::compute(flow, caps);
  auto ideals = minimal_left_ideals(s);
  SIdx const u = ideals.front().idempotents.front();
  auto g = ideal_group(s, ideals, 0, u);
  rep.ellis_size = s.size();
  rep.ideal_count = ideals.size();
  rep.idempotent = u;
  rep.um_order = g.members.size();

  auto dr = compute_D(s, g, ambit);
  rep.checks.push_back(dr.kernel_equiv);
  rep.ghat = compute_ghat(s, g, ambit);
  auto const& q = rep.ghat.quotient;
  FiniteGroup const& gh = q.group;
  std::size_t const m = e.classes().size();
  Point const x0 = ambit.basepoint;

  // (fD').[x] = [f(x)], checked on every representative and every point.
  Check wd{"action_well_defined", true, ""};
  rep.action.assign(gh.order(), std::vector<std::size_t>(m));
  for (std::size_t c = 0; c < gh.order(); ++c) {
    SIdx f0 = g.members[q.cosets[c].front()];
    for (std::size_t k = 0; k < m; ++k) {
      rep.action[c][k] = e.class_of(s.apply(f0, e.classes()[k].front()));
    }
    for (Elem li : q.cosets[c]) {
      SIdx f = g.members[li];
      for (Point x = 0; x < flow.points() && wd.passed; ++x) {
        if (e.class_of(s.apply(f, x)) != rep.action[c][e.class_of(x)]) {
          wd = {wd.name, false, "f=" + num(f) + " x=" + num(x)};
        }
      }
    }
  }
  rep.checks.push_back(wd);

  std::size_t const id_class = e.class_of(x0);
  std::vector<Elem> h;
  for (Elem c = 0; c < gh.order(); ++c) {
    if (rep.action[c][id_class] == id_class) {
      h.push_back(c);
    }
  }
  if (!is_subgroup(gh, h)) {
    throw Error(ErrorCode::TheoremViolation, "stabiliser of [x0] in G^ is not a subgroup");
  }
  rep.stabilizer = Subgroup(gh.order(), h);

  // Left cosets aH, ordered by smallest member.
  std::vector<bool> seen(gh.order(), false);
  for (Elem a = 0; a < gh.order(); ++a) {
    if (seen[a]) {
      continue;
    }
    std::vector<Elem> coset;
    for (Elem b : h) {
      coset.push_back(gh.mul(a, b));
      seen[coset.back()] = true;
    }
    std::sort(coset.begin(), coset.end());
    rep.h_cosets.push_back(coset);
  }

  Check fib{"fibres_are_left_cosets_of_H", true, ""};
  for (auto const& coset : rep.h_cosets) {
    std::size_t cls = rep.action[coset.front()][id_class];
    rep.coset_to_class.push_back(cls);
    for (Elem a : coset) {
      if (rep.action[a][id_class] != cls) {
        fib = {fib.name, false, "coset of " + num(coset.front()) + " splits at " + num(a)};
      }
    }
  }
  rep.checks.push_back(fib);

  Check bij{"bijection_ghat_mod_H_to_X_mod_E", true, ""};
  {
    std::set<std::size_t> img(rep.coset_to_class.begin(), rep.coset_to_class.end());
    if (img.size() != rep.coset_to_class.size()) {
      bij = {bij.name, false, "two cosets of H map to the same class"};
    } else if (img.size() != m) {
      bij = {bij.name, false, num(m - img.size()) + " classes missed"};
    }
  }
  rep.checks.push_back(bij);

  Check card{"cardinality", m * rep.stabilizer.order() == gh.order(), ""};
  if (!card.passed) {
    card.witness = num(m) + " * " + num(rep.stabilizer.order()) + " != " + num(gh.order());
  }
  rep.checks.push_back(card);

  // g -> u pi_g u, then to its coset.
  FiniteGroup const& grp = flow.group();
  Check eq{"G_equivariant", true, ""};
  for (Elem a = 0; a < grp.order() && eq.passed; ++a) {
    auto pi = s.find(flow.action_map(a));
    if (!pi) {
      throw Error(ErrorCode::TheoremViolation, "pi_g missing from the enveloping semigroup");
    }
    auto loc = g.local(s.mul(u, s.mul(*pi, u)));
    if (!loc) {
      throw Error(ErrorCode::TheoremViolation, "u pi_g u is not in uM");
    }
    std::size_t c = q.coset_of[*loc];
    for (Point x = 0; x < flow.points(); ++x) {
      if (rep.action[c][e.class_of(x)] != e.class_of(flow.act(a, x))) {
        eq = {eq.name, false, "g=" + num(a) + " x=" + num(x)};
        break;
      }
    }
  }
  rep.checks.push_back(eq);

  // The orbit map on uM factors through uM / H(uM)D.
  Check fac{"factorisation_through_H_uM_D", true, ""};
  {
    FiniteGroup const& v = g.group_view;
    for (Elem a = 0; a < v.order() && fac.passed; ++a) {
      for (Elem b : rep.ghat.h_um_d.members()) {
        Elem ab = v.mul(a, b);
        if (!e.related(s.apply(g.members[a], x0), s.apply(g.members[ab], x0))) {
          fac = {fac.name, false, "f=" + num(g.members[a]) + " k=" + num(g.members[b])};
          break;
        }
      }
    }
  }
  rep.checks.push_back(fac);

  // G / Stab_G [x0]_E <-> X/E through g -> [g x0].
  Check toy{"G_mod_stabiliser_bijection", true, ""};
  {
    std::size_t stab = 0;
    std::vector<bool> hit(m, false);
    for (Elem a = 0; a < grp.order(); ++a) {
      std::size_t c = e.class_of(flow.act(a, x0));
      hit[c] = true;
      stab += c == id_class;
    }
    if (std::count(hit.begin(), hit.end(), true) != static_cast<long>(m)) {
      toy = {toy.name, false, "G x0 misses a class"};
    } else if (stab * m != grp.order()) {
      toy = {toy.name, false, "index " + num(grp.order() / std::max<std::size_t>(stab, 1)) + " != " + num(m)};
    }
  }
  rep.checks.push_back(toy);
  return rep;
}

ProperWitnessVerdict check_proper_witness(Ambit const& ambit, EquivRelation const& e,
                                          ProperWitness const& pw) {
  Flow const& flow = *ambit.flow;
  require_points(flow, e);
  ProperWitnessVerdict out;
  FiniteGroup const& cv = pw.cover;
  if (pw.fiber_map.size() != cv.order()) {
    out.checks.push_back({"shape", false, "fiber_map has " + num(pw.fiber_map.size()) + " entries for a cover of order " +
                                             num(cv.order())});
    return out;
  }
  for (Point p : pw.fiber_map) {
    if (p >= flow.points()) {
      out.checks.push_back({"shape", false, "fiber_map value " + num(p) + " out of range"});
      return out;
    }
  }

  auto cert = check_group_like(ambit, e);
  Check hom{"homomorphism", true, ""};
  if (!cert.group_like) {
    hom = {hom.name, false, "E is not group-like: " + cert.refutation};
  } else {
    auto qr = [&](Elem a) { return static_cast<Elem>(e.class_of(pw.fiber_map[a])); };
    if (qr(cv.identity()) != cert.quotient.identity()) {
      hom = {hom.name, false, "identity of the cover misses [x0]"};
    }
    for (Elem a = 0; a < cv.order() && hom.passed; ++a) {
      for (Elem s : cv.generators()) {
        if (qr(cv.mul(a, s)) != cert.quotient.mul(qr(a), qr(s))) {
          hom = {hom.name, false, "(" + num(a) + ", " + num(s) + ")"};
          break;
        }
      }
    }
  }
  out.checks.push_back(hom);

  std::vector<std::vector<Elem>> fibre(flow.points());
  for (Elem a = 0; a < cv.order(); ++a) {
    fibre[pw.fiber_map[a]].push_back(a);
  }
  Check surj{"surjective", true, ""};
  for (Point p = 0; p < flow.points(); ++p) {
    if (fibre[p].empty()) {
      surj = {surj.name, false, "point " + num(p) + " not hit"};
      break;
    }
  }
  out.checks.push_back(surj);

  Check pc{"pseudocompleteness", true, ""};
  if (surj.passed) {
    FiniteGroup const& grp = flow.group();
    Point const x0 = ambit.basepoint;
    std::set<std::tuple<Point, Point, Point>> done;  // (g x0, p, g p) already settled
    for (Elem g = 0; g < grp.order() && pc.passed; ++g) {
      Point gx0 = flow.act(g, x0);
      for (Point p = 0; p < flow.points() && pc.passed; ++p) {
        Point gp = flow.act(g, p);
        if (!done.emplace(gx0, p, gp).second) {
          continue;
        }
        bool ok = false;
        for (Elem a : fibre[gx0]) {
          for (Elem b : fibre[p]) {
            if (pw.fiber_map[cv.mul(a, b)] == gp) {
              ok = true;
              break;
            }
          }
          if (ok) {
            break;
          }
        }
        if (!ok) {
          pc = {pc.name, false, "g=" + num(g) + " p=" + num(p)};
        }
      }
    }
  } else {
    pc = {pc.name, false, "fiber_map not surjective"};
  }
  out.checks.push_back(pc);

  std::set<Point> f0;
  for (auto const& fb : fibre) {
    for (Elem a : fb) {
      for (Elem b : fb) {
        f0.insert(pw.fiber_map[cv.mul(cv.inverse(a), b)]);
      }
    }
  }
  out.f0.assign(f0.begin(), f0.end());
  return out;
}

CheckList check_uniform_witness(Ambit const& ambit, EquivRelation const& e,
                                UniformWitnessFamily const& fam, ProperWitness const& pw) {
  Flow const& flow = *ambit.flow;
  require_points(flow, e);
  std::size_t const n = flow.points();
  CheckList out;
  Check shape{"shape", true, ""};
  if (fam.members.empty() || fam.successor.size() != fam.members.size()) {
    shape = {shape.name, false, "need one successor per member"};
  }
  for (std::size_t i = 0; i < fam.members.size() && shape.passed; ++i) {
    if (fam.members[i].points() != n || fam.successor[i] >= fam.members.size()) {
      shape = {shape.name, false, "member " + num(i)};
    }
  }
  if (pw.fiber_map.size() != pw.cover.order()) {
    shape = {shape.name, false, "fiber_map does not match the cover"};
  }
  out.push_back(shape);
  if (!shape.passed) {
    return out;
  }

  Check sym{"symmetric", true, ""};
  Check diag{"contains_diagonal", true, ""};
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    if (sym.passed && !fam.members[i].is_symmetric()) {
      sym = {sym.name, false, "member " + num(i)};
    }
    if (diag.passed && !fam.members[i].is_reflexive()) {
      diag = {diag.name, false, "member " + num(i)};
    }
  }
  out.push_back(sym);
  out.push_back(diag);

  Check uni{"union_is_E", true, ""};
  for (Point a = 0; a < n && uni.passed; ++a) {
    for (Point b = 0; b < n; ++b) {
      bool in = std::any_of(fam.members.begin(), fam.members.end(),
                            [&](PairRelation const& d) { return d.test(a, b); });
      if (in != e.related(a, b)) {
        uni = {uni.name, false, "(" + num(a) + ", " + num(b) + ")"};
        break;
      }
    }
  }
  out.push_back(uni);

  Check comp{"D_circ_D_in_successor", true, ""};
  for (std::size_t i = 0; i < fam.members.size() && comp.passed; ++i) {
    auto const& d = fam.members[i];
    auto const& dp = fam.members[fam.successor[i]];
    std::vector<std::vector<Point>> adj(n);
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        if (d.test(a, b)) {
          adj[a].push_back(b);
        }
      }
    }
    for (Point a = 0; a < n && comp.passed; ++a) {
      for (Point b : adj[a]) {
        for (Point c : adj[b]) {
          if (!dp.test(a, c)) {
            comp = {comp.name, false, "member " + num(i) + ": (" + num(a) + ", " + num(c) + ")"};
            break;
          }
        }
        if (!comp.passed) {
          break;
        }
      }
    }
  }
  out.push_back(comp);

  Check tr{"translation", true, ""};
  FiniteGroup const& cv = pw.cover;
  Point const x0 = ambit.basepoint;
  for (std::size_t i = 0; i < fam.members.size() && tr.passed; ++i) {
    auto const& d = fam.members[i];
    auto const& dp = fam.members[fam.successor[i]];
    for (Elem a = 0; a < cv.order() && tr.passed; ++a) {
      if (!d.test(x0, pw.fiber_map[a])) {
        continue;
      }
      for (Elem b = 0; b < cv.order(); ++b) {
        if (!dp.test(pw.fiber_map[b], pw.fiber_map[cv.mul(a, b)])) {
          tr = {tr.name, false, "member " + num(i) + ": g~=" + num(a) + " g~'=" + num(b)};
          break;
        }
      }
    }
  }
  out.push_back(tr);
  return out;
}

UniformWitnessFamily word_length_family(FiniteGroup const& g, std::vector<Elem> const& s) {
  std::size_t const n = g.order();
  std::size_t const none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, none);
  std::deque<Elem> queue{g.identity()};
  dist[g.identity()] = 0;
  std::size_t diameter = 0;
  while (!queue.empty()) {
    Elem a = queue.front();
    queue.pop_front();
    diameter = std::max(diameter, dist[a]);
    for (Elem t : s) {
      Elem b = g.mul(a, t);
      if (dist[b] == none) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  UniformWitnessFamily fam;
  for (std::size_t k = 0; k <= diameter; ++k) {
    PairRelation d(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        std::size_t w = dist[g.mul(g.inverse(x), y)];
        if (w != none && w <= k) {
          d.set(x, y);
        }
      }
    }
    fam.members.push_back(std::move(d));
    fam.successor.push_back(std::min(2 * k + 2, diameter));
  }
  return fam;
}

}  // namespace elliskit
