#include "elliskit/examples.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "elliskit/ellis.hpp"
#include "elliskit/error.hpp"
#include "elliskit/grouplike.hpp"
#include "elliskit/instance_io.hpp"

namespace elliskit {

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

Check expect(std::string name, bool ok, std::string const& detail = "") {
  return {std::move(name), ok, ok ? "" : detail};
}

std::size_t matrix_index(AffineCoordinates const& c, std::vector<std::size_t> const& entries) {
  auto it = std::find(c.matrices.begin(), c.matrices.end(), entries);
  if (it == c.matrices.end()) {
    throw Error(ErrorCode::InvalidArgument, "matrix is not invertible");
  }
  return static_cast<std::size_t>(it - c.matrices.begin());
}

// Elements (v, I) with v in the given set of vectors.
Subgroup translations(FiniteGroup const& g, AffineCoordinates const& c,
                      bool (*keep)(std::vector<std::size_t> const&)) {
  std::vector<Elem> m;
  for (std::size_t v = 0; v < c.vectors.size(); ++v) {
    if (keep(c.vectors[v])) {
      m.push_back(c.element(v, c.identity_matrix()));
    }
  }
  std::sort(m.begin(), m.end());
  return Subgroup(g.order(), m);
}

bool in_plane(std::vector<std::size_t> const& v) { return v[2] == 0; }
bool on_line(std::vector<std::size_t> const& v) { return v[1] == 0 && v[2] == 0; }

std::size_t matrix_inverse(FiniteGroup const& g, AffineCoordinates const& c, std::size_t m) {
  return c.matrix_of(g.inverse(c.element(0, m)));
}

// ---- s3-stabilizer --------------------------------------------------------

Report s3_stabilizer(Caps const& caps) {
  Report r;
  r.command = "example s3-stabilizer";
  auto g = std::make_shared<FiniteGroup const>(symmetric_group(3, caps));
  auto f = std::make_shared<Flow const>(Flow::natural(g));
  Ambit a = make_ambit(f, 0);
  auto s = EllisSemigroup::compute(*f, caps);
  auto ideals = minimal_left_ideals(s);
  r.add(expect("ellis_size_6", s.size() == 6, num(s.size())));
  r.add(expect("one_minimal_ideal", ideals.size() == 1, num(ideals.size())));
  r.add(expect("ideal_is_whole_semigroup", ideals.front().members.size() == s.size()));
  r.add(expect("unique_idempotent", ideals.front().idempotents.size() == 1,
               num(ideals.front().idempotents.size())));
  r.add_all(check_ideal_structure(s, ideals), "ideal_structure_");
  SIdx u = ideals.front().idempotents.front();
  auto ig = ideal_group(s, ideals, 0, u);
  auto iso = are_isomorphic(ig.group_view, *g, caps);
  r.add(expect("ellis_group_isomorphic_to_S3", iso.isomorphic, iso.certificate));

  auto d = compute_D(s, ig, a);
  r.add(d.kernel_equiv);
  std::vector<std::vector<Point>> d_maps;
  bool d_is_stab = d.d.order() == 2;
  for (Elem i : d.d.members()) {
    auto m = s.element(ig.members[i]);
    d_maps.emplace_back(m.begin(), m.end());
    d_is_stab = d_is_stab && m[0] == 0;
  }
  r.add(expect("D_is_point_stabiliser_of_order_2", d_is_stab, num(d.d.order())));
  r.add(expect("D_not_normal", !is_normal(ig.group_view, d.d)));
  auto gh = compute_ghat(s, ig, a);
  r.add(expect("H_uM_trivial", gh.h_um.order() == 1, num(gh.h_um.order())));
  r.add(expect("core_D_trivial", gh.core.order() == 1, num(gh.core.order())));
  auto giso = are_isomorphic(gh.quotient.group, *g, caps);
  r.add(expect("ghat_isomorphic_to_S3", giso.isomorphic, giso.certificate));

  auto e = EquivRelation::equality(3);
  auto id = identify_quotient(a, e, std::nullopt, caps);
  r.add_all(id.checks, "identify_");
  r.add(expect("three_classes", e.classes().size() == 3 && id.coset_to_class.size() == 3));
  std::vector<Elem> d_image;
  for (Elem i : d.d.members()) {
    d_image.push_back(static_cast<Elem>(gh.quotient.coset_of[i]));
  }
  std::sort(d_image.begin(), d_image.end());
  r.add(expect("stabiliser_in_ghat_is_image_of_D", id.stabilizer.members() == d_image));

  r.structures["ellis_size"] = s.size();
  r.structures["D_maps"] = d_maps;
  r.structures["ghat_order"] = gh.quotient.group.order();
  r.structures["H_order"] = id.stabilizer.order();
  r.structures["classes"] = e.classes();
  r.structures["coset_to_class"] = id.coset_to_class;
  return r;
}

// ---- affine-f2 -------------------------------------------------------------

Report affine_f2(Caps const& caps) {
  Report r;
  r.command = "example affine-f2";
  auto fx = affine_pairs_fixture(caps);
  Flow const& f = *fx.flow;
  auto r1 = r_relation(f, fx.first);
  auto r2 = r_relation(f, fx.second);
  r.add(expect("R1_is_equivalence", r1.is_equivalence()));
  r.add(expect("R2_is_equivalence", r2.is_equivalence()));
  bool same = r1.is_equivalence() && r2.is_equivalence() && *r1.relation == *r2.relation;
  r.add(expect("R1_equals_R2", same));
  if (!same) {
    return r;
  }
  auto const& e = *r1.relation;
  auto m1 = maximal_witnesses(f, e, fx.first);
  auto m2 = maximal_witnesses(f, e, fx.second);
  r.add(expect("pair1_fixpoint", m1.subgroup == fx.first.subgroup && m1.support == fx.first.support));
  r.add(expect("pair2_fixpoint", m2.subgroup == fx.second.subgroup && m2.support == fx.second.support));
  bool h_strict = fx.second.subgroup.is_subset_of(fx.first.subgroup) &&
                  fx.second.subgroup.order() < fx.first.subgroup.order();
  bool x_strict = std::includes(fx.second.support.begin(), fx.second.support.end(), fx.first.support.begin(),
                                fx.first.support.end()) &&
                  fx.first.support.size() < fx.second.support.size();
  r.add(expect("H2_strictly_inside_H1", h_strict));
  r.add(expect("X1_strictly_inside_X2", x_strict));
  auto orb = is_orbital(f, e);
  r.structures["group_order"] = f.group().order();
  r.structures["class_size"] = e.classes().front().size();
  r.structures["class_count"] = e.classes().size();
  r.structures["H1_order"] = fx.first.subgroup.order();
  r.structures["H2_order"] = fx.second.subgroup.order();
  r.structures["X1_size"] = fx.first.support.size();
  r.structures["X2_size"] = fx.second.support.size();
  r.structures["orbital"] = orb.orbital;
  r.structures["H_E_order"] = orb.h_e.order();
  return r;
}

// ---- worb-union-f2 ---------------------------------------------------------

Report worb_union_f2(Caps const& caps) {
  Report r;
  r.command = "example worb-union-f2";
  auto fx = worb_union_fixture(caps);
  Flow const& f = *fx.flow;
  r.add(expect("E_invariant", check_invariance(f, fx.e).invariant));
  r.add(expect("E_is_R_H_Xtilde", is_witness(f, fx.e, fx.witness)));
  auto orb = is_orbital(f, fx.e);
  r.add(expect("E_not_orbital", !orb.orbital));

  // Class of the identity is the union of a^-1 l over a in A.
  Point x0 = fx.witness.support[0];
  auto cf = class_formula(f, fx.witness, x0);
  r.add(expect("class_formula_matches", cf == fx.e.class_containing(x0), points_text(cf)));

  // The action is free, so a witness meeting G and G' once each at g, g'
  // forces [g] = H1 g and [g'] = H1 g'; H1 = {k : k g E g} then has the
  // size of the class at g.
  std::set<std::size_t> sizes_g, sizes_gp;
  FiniteGroup const& g = f.group();
  for (Point x = 0; x < f.points(); ++x) {
    std::size_t forced = 0;
    for (Elem k = 0; k < g.order(); ++k) {
      forced += fx.e.related(f.act(k, x), x);
    }
    (x < fx.copy_size ? sizes_g : sizes_gp).insert(forced);
  }
  bool cert = sizes_g == std::set<std::size_t>{4} && sizes_gp == std::set<std::size_t>{2};
  r.add(expect("no_one_point_per_orbit_witness", cert, "forced subgroup orders do not conflict"));
  r.structures["points"] = f.points();
  r.structures["witness_support"] = fx.witness.support;
  r.structures["H_order"] = fx.witness.subgroup.order();
  r.structures["forced_order_on_G"] = std::vector<std::size_t>(sizes_g.begin(), sizes_g.end());
  r.structures["forced_order_on_G_prime"] = std::vector<std::size_t>(sizes_gp.begin(), sizes_gp.end());
  return r;
}

// ---- product-demo ----------------------------------------------------------

Report product_demo(Caps const& caps) {
  Report r;
  r.command = "example product-demo";
  auto c3 = std::make_shared<FiniteGroup const>(cyclic_group(3, caps));
  auto s3 = std::make_shared<FiniteGroup const>(symmetric_group(3, caps));
  Flow a = Flow::regular(c3);
  Flow b = Flow::natural(s3);
  r.add_all(check_product_ellis(a, b, caps), "C3_regular_x_S3_natural_");
  Flow t = Flow::from_transformations({3, {{0, 0, 1}, {1, 2, 2}}});
  Flow c = Flow::regular(std::make_shared<FiniteGroup const>(cyclic_group(2, caps)));
  r.add_all(check_product_ellis(t, c, caps), "transformations_x_C2_regular_");
  auto sa = EllisSemigroup::compute(a, caps);
  auto sb = EllisSemigroup::compute(b, caps);
  auto st = EllisSemigroup::compute(t, caps);
  r.structures["sizes"] = {{"C3_regular", sa.size()}, {"S3_natural", sb.size()}, {"transformations", st.size()}};
  return r;
}

// ---- tower-demo ------------------------------------------------------------

Report tower_demo(Caps const& caps) {
  Report r;
  r.command = "example tower-demo";
  std::vector<Ambit> levels;
  for (std::size_t n : {1, 3, 6}) {
    auto g = std::make_shared<FiniteGroup const>(cyclic_group(n, caps));
    levels.push_back(make_ambit(std::make_shared<Flow const>(Flow::regular(g)), 0));
  }
  std::vector<FlowMorphism> conn;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    FlowMorphism m;
    m.source = levels[i + 1];
    m.target = levels[i];
    std::size_t const mod = levels[i].flow->points();
    for (Point x = 0; x < levels[i + 1].flow->points(); ++x) {
      m.point_map.push_back(static_cast<Point>(x % mod));
      m.group_map.push_back(static_cast<Elem>(x % mod));
    }
    conn.push_back(std::move(m));
  }
  auto t = check_tower(levels, conn, caps);
  r.add_all(t.checks);
  json lv = json::array();
  for (auto const& l : t.levels) {
    lv.push_back({{"ellis_size", l.ellis_size},
                  {"ideal_count", l.ideal_count},
                  {"idempotent_count", l.idempotent_count},
                  {"ideal_group_order", l.ideal_group_order}});
  }
  r.structures["levels"] = lv;
  return r;
}

// ---- cube-independence -----------------------------------------------------

Report cube_independence(Caps const& caps) {
  Report r;
  r.command = "example cube-independence";
  // Points are bit vectors v = v1 + 2 v2 + 4 v3 of {0,1}^3.
  std::vector<std::vector<std::uint32_t>> gens(3, std::vector<std::uint32_t>(8));
  for (std::uint32_t v = 0; v < 8; ++v) {
    gens[0][v] = v ^ 1u;
    gens[1][v] = ((v << 1) | (v >> 2)) & 7u;
    gens[2][v] = (v & 4u) | ((v & 1u) << 1) | ((v & 2u) >> 1);
  }
  auto g = std::make_shared<FiniteGroup const>(FiniteGroup::from_permutations(8, gens, caps));
  Flow f = Flow::natural(g);
  std::vector<Point> u;
  for (Point v = 0; v < 8; ++v) {
    if ((v & 1u) == 0) {
      u.push_back(v);
    }
  }
  r.add(expect("group_order_48", g->order() == 48, num(g->order())));
  auto three = independent_translates(f, u, 3, caps);
  r.add(expect("three_translates_independent", three.found && is_independent_family(8, three.sets)));
  auto four = independent_translates(f, u, 4, caps);
  r.add(expect("four_exhausted", !four.found, four.certificate));
  r.structures["U"] = u;
  r.structures["witness"] = three.witness;
  r.structures["sets"] = three.sets;
  r.structures["distinct_translates"] = three.distinct_translates;
  r.structures["k4_certificate"] = four.certificate;
  return r;
}

Lattice orbit_lattice(Flow const& f, Ground ground, Caps const& caps) {
  std::vector<std::vector<Point>> principal(f.points());
  for (auto const& o : f.orbits()) {
    for (Point x : o) {
      principal[x] = o;
    }
  }
  return Lattice::from_principal(ground, std::move(principal), caps);
}

// G lattice: unions of cosets of normal n; X lattice: unions of n-orbits.
std::pair<Lattice, Lattice> normal_lattices(Flow const& f, Subgroup const& n, Caps const& caps) {
  FiniteGroup const& g = f.group();
  std::vector<std::vector<Point>> pg(g.order()), px(f.points());
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem k : n.members()) {
      pg[a].push_back(g.mul(a, k));
    }
  }
  for (Point x = 0; x < f.points(); ++x) {
    for (Elem k : n.members()) {
      px[x].push_back(f.act(k, x));
    }
  }
  return {Lattice::from_principal(Ground::G, std::move(pg), caps),
          Lattice::from_principal(Ground::X, std::move(px), caps)};
}

}  // namespace

AffinePairsFixture affine_pairs_fixture(Caps const& caps) {
  auto g = std::make_shared<FiniteGroup const>(affine_group(2, 3, caps));
  auto c = affine_coordinates(2, 3);
  AffinePairsFixture fx;
  fx.flow = std::make_shared<Flow const>(Flow::regular(g));
  fx.first.subgroup = translations(*g, c, in_plane);
  fx.second.subgroup = translations(*g, c, on_line);
  std::vector<std::size_t> const e1{1, 0, 0};
  for (std::size_t m = 0; m < c.matrices.size(); ++m) {
    std::size_t minv = matrix_inverse(*g, c, m);
    // M^-1 P = P, tested on the plane's vectors
    bool normalises = true;
    for (auto const& v : c.vectors) {
      if (in_plane(v) && !in_plane(c.apply(minv, v))) {
        normalises = false;
      }
    }
    bool line_into_plane = in_plane(c.apply(minv, e1));
    for (std::size_t v = 0; v < c.vectors.size(); ++v) {
      if (normalises) {
        fx.first.support.push_back(c.element(v, m));
      }
      if (line_into_plane) {
        fx.second.support.push_back(c.element(v, m));
      }
    }
  }
  std::sort(fx.first.support.begin(), fx.first.support.end());
  std::sort(fx.second.support.begin(), fx.second.support.end());
  return fx;
}

WorbUnionFixture worb_union_fixture(Caps const& caps) {
  auto g = std::make_shared<FiniteGroup const>(affine_group(2, 3, caps));
  auto c = affine_coordinates(2, 3);
  Flow reg = Flow::regular(g);
  WorbUnionFixture fx;
  fx.copy_size = g->order();
  fx.flow = std::make_shared<Flow const>(disjoint_union_flow({reg, reg}));
  Subgroup plane = translations(*g, c, in_plane);
  Subgroup line = translations(*g, c, on_line);
  std::vector<std::uint32_t> labels(2 * g->order());
  for (Elem a = 0; a < g->order(); ++a) {
    Elem lo_plane = a;
    Elem lo_line = a;
    for (Elem h : plane.members()) {
      lo_plane = std::min(lo_plane, g->mul(a, h));
    }
    for (Elem h : line.members()) {
      lo_line = std::min(lo_line, g->mul(a, h));
    }
    labels[a] = lo_plane;
    labels[g->order() + a] = static_cast<std::uint32_t>(g->order() + lo_line);
  }
  fx.e = EquivRelation::from_labels(labels);
  // A = {I, a1, a2}: a1 swaps e1 and e2, a2 sends e1 to e1 + e2; both are
  // involutions, so a^-1 e1 runs over e1, e2, e1 + e2.
  std::size_t const id = c.identity_matrix();
  std::size_t const a1 = matrix_index(c, {0, 1, 0, 1, 0, 0, 0, 0, 1});
  std::size_t const a2 = matrix_index(c, {1, 0, 0, 1, 1, 0, 0, 0, 1});
  std::size_t const zero = c.vector_index({0, 0, 0});
  fx.witness.subgroup = line;
  fx.witness.support = {c.element(zero, id), c.element(zero, a1), c.element(zero, a2),
                        static_cast<Point>(g->order() + c.element(zero, id))};
  std::sort(fx.witness.support.begin(), fx.witness.support.end());
  return fx;
}

std::vector<NamedScenario> structured_catalog(Caps const& caps) {
  std::vector<NamedScenario> out;
  auto s3 = std::make_shared<FiniteGroup const>(symmetric_group(3, caps));
  auto z6 = std::make_shared<FiniteGroup const>(cyclic_group(6, caps));
  auto d4 = std::make_shared<FiniteGroup const>(dihedral_group(4, caps));

  auto nat = std::make_shared<Flow const>(Flow::natural(s3));
  auto reg = std::make_shared<Flow const>(Flow::regular(s3));
  auto mixed = std::make_shared<Flow const>(disjoint_union_flow({*nat, *reg}));
  auto z6reg = std::make_shared<Flow const>(Flow::regular(z6));
  auto d4reg = std::make_shared<Flow const>(Flow::regular(d4));

  auto discrete = [&](std::string name, std::shared_ptr<Flow const> f, EquivRelation e) {
    out.push_back({std::move(name), make_instance(f, Lattice::discrete(Ground::G, f->group().order()),
                                                  Lattice::discrete(Ground::X, f->points()), std::move(e),
                                                  std::nullopt, caps)});
  };
  auto coarse = [&](std::string name, std::shared_ptr<Flow const> f, EquivRelation e) {
    out.push_back({std::move(name), make_instance(f, Lattice::indiscrete(Ground::G, f->group().order(), caps),
                                                  orbit_lattice(*f, Ground::X, caps), std::move(e), std::nullopt,
                                                  caps)});
  };
  auto pulled = [&](std::string name, std::shared_ptr<Flow const> f, Subgroup const& n, EquivRelation e) {
    auto [lg, lx] = normal_lattices(*f, n, caps);
    out.push_back({std::move(name), make_instance(f, std::move(lg), std::move(lx), std::move(e), std::nullopt, caps)});
  };
  auto left_cosets = [](Flow const& f, Subgroup const& h) {
    FiniteGroup const& g = f.group();
    std::vector<std::uint32_t> labels(g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      Elem lo = a;
      for (Elem k : h.members()) {
        lo = std::min(lo, g.mul(a, k));
      }
      labels[a] = lo;
    }
    return EquivRelation::from_labels(labels);
  };

  Subgroup t01 = subgroup_generated(*s3, {*s3->find_permutation(std::vector<std::uint32_t>{1, 0, 2})});
  Subgroup a3 = subgroup_generated(*s3, {*s3->find_permutation(std::vector<std::uint32_t>{1, 2, 0})});

  discrete("s3-natural-equality-discrete", nat, EquivRelation::equality(3));
  discrete("s3-natural-total-discrete", nat, EquivRelation::total(3));
  discrete("s3-regular-left-cosets-discrete", reg, left_cosets(*reg, t01));
  discrete("s3-mixed-orbits-discrete", mixed, orbit_relation(*mixed, whole_group(*s3)));
  discrete("s3-mixed-a3-orbits-discrete", mixed, orbit_relation(*mixed, a3));
  coarse("z6-regular-coarse-total", z6reg, EquivRelation::total(6));
  coarse("z6-regular-coarse-pairs", z6reg,
         orbit_relation(*z6reg, subgroup_generated(*z6, {3})));
  coarse("s3-mixed-coarse-orbits", mixed, orbit_relation(*mixed, whole_group(*s3)));
  coarse("s3-mixed-coarse-equality", mixed, EquivRelation::equality(mixed->points()));
  pulled("s3-regular-a3-cosets", reg, a3, left_cosets(*reg, a3));
  pulled("s3-regular-a3-equality", reg, a3, EquivRelation::equality(6));
  pulled("s3-regular-a3-left-cosets-of-transposition", reg, a3, left_cosets(*reg, t01));
  Subgroup centre = normal_core(*d4, whole_group(*d4));
  for (auto const& h : enumerate_subgroups(*d4, caps)) {
    if (h.order() == 2 && is_normal(*d4, h)) {
      centre = h;
    }
  }
  for (auto const& h : enumerate_subgroups(*d4, caps)) {
    if (h.order() == 4 && centre.is_subset_of(h)) {
      pulled("d4-regular-centre-cosets-of-order4-" + points_text(h.members()), d4reg, centre, left_cosets(*d4reg, h));
    }
    if (h.order() == 2 && !is_normal(*d4, h)) {
      pulled("d4-regular-centre-left-cosets-" + points_text(h.members()), d4reg, centre, left_cosets(*d4reg, h));
    }
  }
  return out;
}

StructuredInstance worb_counterexample_scenario(Caps const& caps) {
  auto s3 = std::make_shared<FiniteGroup const>(symmetric_group(3, caps));
  Flow reg = Flow::regular(s3);
  auto f = std::make_shared<Flow const>(disjoint_union_flow({reg, reg}));
  std::size_t const n = 6;
  Elem const t01 = *s3->find_permutation(std::vector<std::uint32_t>{1, 0, 2});
  Elem const c012 = *s3->find_permutation(std::vector<std::uint32_t>{1, 2, 0});
  WitnessPair w{subgroup_generated(*s3, {t01}), {c012, static_cast<Point>(n + s3->identity())}};
  std::sort(w.support.begin(), w.support.end());
  auto rr = r_relation(*f, w);
  if (!rr.is_equivalence()) {
    throw Error(ErrorCode::TheoremViolation, "counterexample relation is not an equivalence");
  }
  // Points 0..5 are the limit level, 6..11 the tail level. The closure of a
  // tail pair contains the limit pair over it.
  std::size_t const m = 2 * n;
  std::vector<std::vector<Point>> principal(m * m);
  for (Point p = 0; p < m * m; ++p) {
    principal[p] = {p};
    Point a = static_cast<Point>(p / m);
    Point b = static_cast<Point>(p % m);
    if (a >= n && b >= n) {
      principal[p].push_back(static_cast<Point>((a - n) * m + (b - n)));
    }
  }
  Lattice xx = Lattice::from_principal(Ground::XX, std::move(principal), caps);
  return make_instance(f, Lattice::discrete(Ground::G, s3->order()), Lattice::discrete(Ground::X, m),
                       *rr.relation, xx, caps);
}

std::vector<std::string> example_names() {
  return {"s3-stabilizer", "affine-f2", "worb-union-f2", "product-demo", "tower-demo", "cube-independence"};
}

Report run_example(std::string const& name, Caps const& caps) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  if (name == "s3-stabilizer") {
    r = s3_stabilizer(caps);
  } else if (name == "affine-f2") {
    r = affine_f2(caps);
  } else if (name == "worb-union-f2") {
    r = worb_union_f2(caps);
  } else if (name == "product-demo") {
    r = product_demo(caps);
  } else if (name == "tower-demo") {
    r = tower_demo(caps);
  } else if (name == "cube-independence") {
    r = cube_independence(caps);
  } else {
    std::string known;
    for (auto const& n : example_names()) {
      known += (known.empty() ? "" : ", ") + n;
    }
    throw Error(ErrorCode::UnknownExample, "'" + name + "' (known: " + known + ")");
  }
  r.timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace elliskit
