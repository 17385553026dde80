#include "elliskit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "elliskit/catalog.hpp"
#include "elliskit/ellis.hpp"
#include "elliskit/error.hpp"
#include "elliskit/examples.hpp"
#include "elliskit/grouplike.hpp"
#include "elliskit/instance_io.hpp"
#include "elliskit/relations.hpp"
#include "elliskit/structured.hpp"

namespace elliskit {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

struct Outcome {
  CheckList checks;
  json instance;
  std::map<std::string, std::size_t> tallies;
};

using InstanceFn = std::function<Outcome(std::size_t index)>;

Check check(std::string name, bool ok, std::string const& witness = "") {
  return {std::move(name), ok, ok ? "" : witness};
}

std::vector<SIdx> sorted(std::vector<SIdx> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<SIdx> random_subset(Rng& rng, std::vector<SIdx> const& from) {
  std::bernoulli_distribution coin(0.5);
  std::vector<SIdx> out;
  for (SIdx f : from) {
    if (coin(rng)) {
      out.push_back(f);
    }
  }
  return out;
}

std::string idx_text(std::vector<SIdx> const& v) {
  return points_text(std::vector<Point>(v.begin(), v.end()));
}

// ---- ellis -----------------------------------------------------------------

Flow random_small_flow(Rng& rng, SuiteConfig const& cfg, std::size_t max_points) {
  if (std::bernoulli_distribution(0.5)(rng)) {
    return random_transformation_flow(rng, max_points, 3);
  }
  // Redraw until the acting maps number at most three.
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto g = random_group(rng, cfg.max_group_order);
    if (g.group->generators().size() <= 3) {
      return random_group_flow(rng, g.group, max_points, cfg.caps);
    }
  }
  return random_transformation_flow(rng, max_points, 3);
}

Outcome ellis_instance(Rng& rng, SuiteConfig const& cfg) {
  Outcome out;
  Flow f = random_small_flow(rng, cfg, cfg.max_points);
  out.instance = to_json(f);
  auto s = EllisSemigroup::compute(f, cfg.caps);
  auto ideals = minimal_left_ideals(s);
  out.checks = check_ideal_structure(s, ideals);

  std::vector<SIdx> all(s.size());
  for (SIdx i = 0; i < s.size(); ++i) {
    all[i] = i;
  }
  std::uniform_int_distribution<SIdx> any(0, static_cast<SIdx>(s.size() - 1));
  bool right_ok = true, assoc_ok = true, ideal_ok = true;
  std::string witness;
  for (int trial = 0; trial < 8; ++trial) {
    SIdx a = any(rng), b = any(rng), c = any(rng);
    auto B = random_subset(rng, all);
    // (a o B) c = a o (B c)
    auto lhs = circ(s, a, B);
    for (auto& x : lhs) {
      x = s.mul(x, c);
    }
    std::vector<SIdx> bc;
    for (SIdx x : B) {
      bc.push_back(s.mul(x, c));
    }
    if (sorted(lhs) != sorted(circ(s, a, bc))) {
      right_ok = false;
      witness = "a=" + std::to_string(a) + " c=" + std::to_string(c) + " B=" + idx_text(B);
    }
    // a o (b o B) = (a b) o B
    if (sorted(circ(s, a, circ(s, b, B))) != sorted(circ(s, s.mul(a, b), B))) {
      assoc_ok = false;
      witness = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " B=" + idx_text(B);
    }
    // B inside a minimal ideal M gives a o B inside M
    auto const& m = ideals[trial % ideals.size()];
    auto bm = random_subset(rng, m.members);
    for (SIdx x : circ(s, a, bm)) {
      if (!m.contains(x)) {
        ideal_ok = false;
        witness = "a=" + std::to_string(a) + " B=" + idx_text(bm) + " leaves the ideal at " + std::to_string(x);
      }
    }
  }
  out.checks.push_back(check("circ_right_multiplication", right_ok, witness));
  out.checks.push_back(check("circ_composition", assoc_ok, witness));
  out.checks.push_back(check("circ_preserves_minimal_ideal", ideal_ok, witness));

  bool tau_empty = true, tau_ext = true, tau_idem = true, tau_union = true, h_trivial = true;
  std::string tw;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    for (SIdx u : ideals[k].idempotents) {
      auto ig = ideal_group(s, ideals, k, u);
      if (!tau_closure(s, ig, {}).empty()) {
        tau_empty = false;
        tw = "u=" + std::to_string(u);
      }
      for (int trial = 0; trial < 3; ++trial) {
        auto a = random_subset(rng, ig.members);
        auto b = random_subset(rng, ig.members);
        auto ca = sorted(tau_closure(s, ig, a));
        if (!std::includes(ca.begin(), ca.end(), a.begin(), a.end())) {
          tau_ext = false;
          tw = "u=" + std::to_string(u) + " A=" + idx_text(a);
        }
        if (sorted(tau_closure(s, ig, ca)) != ca) {
          tau_idem = false;
          tw = "u=" + std::to_string(u) + " A=" + idx_text(a);
        }
        auto ab = sorted([&] {
          auto v = a;
          v.insert(v.end(), b.begin(), b.end());
          return v;
        }());
        auto cb = tau_closure(s, ig, b);
        auto cu = ca;
        cu.insert(cu.end(), cb.begin(), cb.end());
        if (sorted(tau_closure(s, ig, ab)) != sorted(cu)) {
          tau_union = false;
          tw = "u=" + std::to_string(u) + " A=" + idx_text(a) + " B=" + idx_text(b);
        }
      }
      auto h = h_subgroup(s, ig);
      if (h.order() != 1) {
        h_trivial = false;
        tw = "u=" + std::to_string(u) + " |H(uM)|=" + std::to_string(h.order());
      }
    }
  }
  out.checks.push_back(check("tau_closure_of_empty", tau_empty, tw));
  out.checks.push_back(check("tau_closure_extensive", tau_ext, tw));
  out.checks.push_back(check("tau_closure_idempotent", tau_idem, tw));
  out.checks.push_back(check("tau_closure_preserves_unions", tau_union, tw));
  out.checks.push_back(check("H_uM_trivial", h_trivial, tw));
  out.tallies["ellis_size_" + std::to_string(s.size() < 10 ? 0 : s.size() < 100 ? 10 : 100) + "_plus"] = 1;
  out.tallies[f.group().order() > 1 ? "group_flows" : "transformation_flows"] = 1;
  return out;
}

// ---- grouplike ---------------------------------------------------------------

Outcome grouplike_instance(Rng& rng, SuiteConfig const& cfg) {
  Outcome out;
  // A transitive ambit G/K and E the orbits of a normal M containing K, so
  // X/E = G/M is a group.
  std::shared_ptr<FiniteGroup const> g;
  std::vector<std::pair<Subgroup, Subgroup>> choices;  // (M, K)
  for (int attempt = 0; attempt < 16 && choices.empty(); ++attempt) {
    g = random_group(rng, cfg.max_group_order).group;
    auto subs = enumerate_subgroups(*g, cfg.caps);
    for (auto const& m : subs) {
      if (!is_normal(*g, m)) {
        continue;
      }
      for (auto const& k : subs) {
        if (k.is_subset_of(m) && g->order() / k.order() <= cfg.max_points) {
          choices.emplace_back(m, k);
        }
      }
    }
  }
  if (choices.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no transitive action within max_points");
  }
  auto const& [m, k] = pick(rng, choices);
  auto flow = std::make_shared<Flow const>(Flow::coset_action(g, k));
  Point x0 = 0;
  while (!(flow->stabilizer(x0) == k)) {
    ++x0;
  }
  Ambit ambit = make_ambit(flow, x0);
  EquivRelation e = orbit_relation(*flow, m);
  out.instance = to_json(ambit);
  out.instance["relation"] = to_json(e);
  out.instance["normal_subgroup"] = to_json(m);

  auto cert = check_group_like(ambit, e);
  out.checks.push_back(check("group_like", cert.group_like, cert.refutation));
  auto id = identify_quotient(ambit, e, std::nullopt, cfg.caps);
  for (auto const& c : id.checks) {
    if (c.name != "cardinality") {
      out.checks.push_back(c);
    }
  }
  std::size_t const classes = e.classes().size();
  std::size_t const ghat = id.ghat.quotient.group.order();
  std::size_t const expected = cfg.inject_fault ? ghat + 1 : ghat;
  out.checks.push_back(check("cardinality", classes * id.stabilizer.order() == expected,
                             "|X/E|=" + std::to_string(classes) + " |H|=" + std::to_string(id.stabilizer.order()) +
                                 " |G^|=" + std::to_string(ghat)));
  if (cert.group_like) {
    auto s = EllisSemigroup::compute(*flow, cfg.caps);
    out.checks.push_back(
        check("quotient_order_matches", cert.quotient.order() == classes, std::to_string(cert.quotient.order())));
    for (auto c : orbit_map_r(ambit, e, cert, s).checks) {
      c.name = "r_" + c.name;
      out.checks.push_back(std::move(c));
    }
  }
  out.tallies[is_normal(*g, k) ? "normal_stabiliser" : "non_normal_stabiliser"] = 1;
  return out;
}

// ---- orbital -----------------------------------------------------------------

// Independent oracles: every subgroup against E = E_H, and every pair
// (H, X~) over all subsets X~ against E = R_{H,X~}.
struct BruteForce {
  bool orbital = false;
  bool weakly_orbital = false;
};

BruteForce brute_force(Flow const& f, EquivRelation const& e, std::vector<Subgroup> const& subs) {
  BruteForce b;
  std::size_t const n = f.points();
  for (auto const& h : subs) {
    if (orbit_relation(f, h) == e) {
      b.orbital = true;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << n) && !b.weakly_orbital; ++mask) {
      WitnessPair w{h, {}};
      for (Point x = 0; x < n; ++x) {
        if (mask >> x & 1u) {
          w.support.push_back(x);
        }
      }
      auto r = r_relation(f, w);
      b.weakly_orbital = r.is_equivalence() && *r.relation == e;
    }
  }
  return b;
}

Outcome orbital_instance(std::shared_ptr<Flow const> const& f, SuiteConfig const& cfg) {
  Outcome out;
  out.instance = to_json(*f);
  auto subs = enumerate_subgroups(f->group(), cfg.caps);
  auto relations = enumerate_invariant_relations(*f, cfg.caps);
  bool orb_agree = true, worb_agree = true, max_ok = true;
  std::string ow, ww, mw;
  for (auto const& e : relations) {
    auto oracle = brute_force(*f, e, subs);
    auto orb = is_orbital(*f, e);
    auto worb = is_weakly_orbital(*f, e, cfg.caps);
    std::string const rel = to_json(e).dump();
    if (orb.orbital != oracle.orbital) {
      orb_agree = false;
      ow = rel;
    }
    if (worb.weakly_orbital != oracle.weakly_orbital) {
      worb_agree = false;
      ww = rel;
    }
    if (worb.witness) {
      auto mx = maximal_witnesses(*f, e, *worb.witness);
      auto again = maximal_witnesses(*f, e, mx);
      if (!is_witness(*f, e, mx) || !(again.subgroup == mx.subgroup) || again.support != mx.support) {
        max_ok = false;
        mw = rel;
      }
    }
    ++out.tallies["relations"];
    out.tallies["orbital"] += oracle.orbital;
    out.tallies["weakly_orbital"] += oracle.weakly_orbital;
  }
  out.checks.push_back(check("is_orbital_matches_brute_force", orb_agree, ow));
  out.checks.push_back(check("is_weakly_orbital_matches_brute_force", worb_agree, ww));
  out.checks.push_back(check("maximal_witnesses_fixpoint", max_ok, mw));
  return out;
}

// ---- structured --------------------------------------------------------------

Outcome structured_instance(StructuredInstance const& inst, SuiteConfig const& cfg) {
  Outcome out;
  out.instance = to_json(inst, cfg.caps);
  auto ag = is_agreeable(inst);
  if (!ag.agreeable()) {
    out.tallies["not_agreeable"] = 1;
    return out;
  }
  out.tallies["agreeable"] = 1;
  auto orb = is_orbital(*inst.flow, inst.e);
  auto worb = is_weakly_orbital(*inst.flow, inst.e, cfg.caps);
  auto add = [&](std::string const& name, TheoremReport const& r) {
    std::string w;
    for (auto const& c : r.conditions) {
      w += c.name + "=" + (c.holds ? "1" : "0") + " ";
    }
    out.checks.push_back(check(name + "_equivalence", r.equivalent, w));
    for (auto c : r.lemma_checks) {
      c.name = name + "_" + c.name;
      out.checks.push_back(std::move(c));
    }
  };
  if (orb.orbital) {
    out.tallies["orbital"] = 1;
    add("thm_orb", evaluate_thm_orb(inst, cfg.caps));
  }
  if (worb.weakly_orbital) {
    out.tallies["weakly_orbital"] = 1;
    add("thm_worb", evaluate_thm_worb(inst, cfg.caps));
  }
  return out;
}

StructuredInstance random_structured(Rng& rng, SuiteConfig const& cfg) {
  std::size_t const pts = std::min<std::size_t>(cfg.max_points, 4);
  auto g = random_group(rng, std::min<std::size_t>(cfg.max_group_order, 8)).group;
  auto f = std::make_shared<Flow const>(random_group_flow(rng, g, pts, cfg.caps));
  // Discrete lattices half the time so that agreeable instances occur.
  bool discrete = std::bernoulli_distribution(0.5)(rng);
  Lattice lg = discrete ? Lattice::discrete(Ground::G, g->order())
                        : random_lattice(rng, Ground::G, g->order(), cfg.caps);
  Lattice lx = discrete ? Lattice::discrete(Ground::X, f->points())
                        : random_lattice(rng, Ground::X, f->points(), cfg.caps);
  auto e = random_invariant_relation(rng, *f);
  return make_instance(f, std::move(lg), std::move(lx), std::move(e), std::nullopt, cfg.caps);
}

// ---- product -----------------------------------------------------------------

Outcome product_instance(Rng& rng, SuiteConfig const& cfg) {
  Outcome out;
  std::size_t const pts = std::min<std::size_t>(cfg.max_points, 4);
  Flow a = random_small_flow(rng, cfg, pts);
  Flow b = random_small_flow(rng, cfg, pts);
  out.instance = {{"first", to_json(a)}, {"second", to_json(b)}};
  out.checks = check_product_ellis(a, b, cfg.caps);
  return out;
}

// ---- driver ------------------------------------------------------------------

std::vector<Outcome> run_pool(std::size_t n, std::size_t threads, InstanceFn const& fn) {
  std::vector<Outcome> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (std::exception const& ex) {
        results[i] = Outcome{};
        results[i].checks.push_back({"no_exception", false, ex.what()});
      }
    }
  };
  std::size_t const t = std::max<std::size_t>(1, std::min(threads, n));
  std::vector<std::jthread> pool;
  for (std::size_t i = 1; i < t; ++i) {
    pool.emplace_back(worker);
  }
  worker();
  return results;
}

}  // namespace

std::vector<std::string> suite_names() { return {"ellis", "grouplike", "orbital", "structured", "product"}; }

Report run_suite(SuiteConfig const& cfg) {
  auto start = std::chrono::steady_clock::now();
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + cfg.suite + "'");
  }
  InstanceFn fn;
  std::vector<std::shared_ptr<Flow const>> actions;
  std::vector<NamedScenario> scenarios;
  if (cfg.suite == "ellis") {
    fn = [&](std::size_t i) {
      auto rng = instance_rng(cfg.seed, i);
      return ellis_instance(rng, cfg);
    };
  } else if (cfg.suite == "grouplike") {
    fn = [&](std::size_t i) {
      auto rng = instance_rng(cfg.seed, i);
      return grouplike_instance(rng, cfg);
    };
  } else if (cfg.suite == "orbital") {
    // The first instances enumerate the small-action catalog; later ones are
    // random group flows.
    if (cfg.instances > 0) {
      actions = small_actions(cfg.max_group_order, cfg.max_points, cfg.caps);
    }
    fn = [&](std::size_t i) {
      if (i < actions.size()) {
        return orbital_instance(actions[i], cfg);
      }
      auto rng = instance_rng(cfg.seed, i);
      auto g = random_group(rng, cfg.max_group_order).group;
      return orbital_instance(std::make_shared<Flow const>(random_group_flow(rng, g, cfg.max_points, cfg.caps)), cfg);
    };
  } else if (cfg.suite == "structured") {
    if (cfg.instances > 0) {
      scenarios = structured_catalog(cfg.caps);
    }
    fn = [&](std::size_t i) {
      if (i < scenarios.size()) {
        auto out = structured_instance(scenarios[i].instance, cfg);
        out.instance = {{"name", scenarios[i].name}};
        return out;
      }
      auto rng = instance_rng(cfg.seed, i);
      return structured_instance(random_structured(rng, cfg), cfg);
    };
  } else {
    fn = [&](std::size_t i) {
      auto rng = instance_rng(cfg.seed, i);
      return product_instance(rng, cfg);
    };
  }

  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  auto results = run_pool(cfg.instances, threads, fn);

  Report r;
  r.command = "verify --suite " + cfg.suite;
  r.seed = cfg.seed;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;  // name -> (passed, failed)
  std::map<std::string, std::size_t> tallies;
  json counterexamples = json::array();
  std::size_t failing = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto const& o = results[i];
    json failed = json::array();
    for (auto const& c : o.checks) {
      auto& slot = counts[c.name];
      (c.passed ? slot.first : slot.second)++;
      if (!c.passed) {
        failed.push_back({{"name", c.name}, {"witness", c.witness}});
      }
    }
    for (auto const& [k, v] : o.tallies) {
      tallies[k] += v;
    }
    if (!failed.empty()) {
      ++failing;
      if (counterexamples.size() < kMaxCounterexamples) {
        counterexamples.push_back({{"index", i}, {"instance", o.instance}, {"failed", failed}});
      }
    }
  }
  for (auto const& [name, pf] : counts) {
    r.add({name, pf.second == 0,
           pf.second == 0 ? "" : std::to_string(pf.second) + " of " + std::to_string(pf.first + pf.second) +
                                     " instances failed"});
  }
  json cj = json::object();
  for (auto const& [name, pf] : counts) {
    cj[name] = {{"passed", pf.first}, {"failed", pf.second}};
  }
  r.structures["suite"] = cfg.suite;
  r.structures["instances"] = cfg.instances;
  r.structures["max_points"] = cfg.max_points;
  r.structures["max_group_order"] = cfg.max_group_order;
  if (cfg.suite == "orbital") {
    r.structures["catalog_actions"] = actions.size();
  } else if (cfg.suite == "structured") {
    r.structures["catalog_scenarios"] = scenarios.size();
  }
  r.structures["failing_instances"] = failing;
  r.structures["checks"] = cj;
  r.structures["tallies"] = tallies;
  r.structures["counterexamples"] = counterexamples;
  r.timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.timing["threads"] = threads;
  return r;
}

}  // namespace elliskit
