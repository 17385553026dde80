// elliskit command line: analysis of instance files, bundled examples and
// seeded verification suites. Exit codes: 0 passed or pure analysis, 1 a
// verified property failed, 2 bad input.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "elliskit/ellis.hpp"
#include "elliskit/error.hpp"
#include "elliskit/examples.hpp"
#include "elliskit/grouplike.hpp"
#include "elliskit/instance_io.hpp"
#include "elliskit/relations.hpp"
#include "elliskit/report.hpp"
#include "elliskit/structured.hpp"
#include "elliskit/suites.hpp"

using namespace elliskit;

namespace {

enum class Mode { Analysis, Verification };

struct Options {
  std::string format = "text";
  std::string path;
  std::string relation_path;
  bool decide_weak = false;
  std::optional<std::size_t> max_group_order;
  std::string example;
  SuiteConfig suite;
};

Check ok(std::string name, bool passed, std::string witness = "") {
  return {std::move(name), passed, passed ? "" : std::move(witness)};
}

InstanceFile load(std::string const& path, Caps const& caps) { return parse_instance_file(path, caps); }

std::shared_ptr<Flow const> flow_of(InstanceFile const& f) {
  if (f.ambit) {
    return f.ambit->flow;
  }
  if (!f.flow) {
    throw Error(ErrorCode::ValidationError, "expected a flow or ambit file, got " + std::string(kind_name(f.kind)));
  }
  return f.flow;
}

EquivRelation load_relation(std::string const& path, Flow const& flow) {
  auto e = relation_from_json(read_json_file(path));
  if (e.points() != flow.points()) {
    throw Error(ErrorCode::ValidationError, "relation has " + std::to_string(e.points()) + " points, flow has " +
                                                std::to_string(flow.points()));
  }
  return e;
}

json ellis_structures(EllisSemigroup const& s, std::vector<MinimalIdeal> const& ideals) {
  json ij = json::array();
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    auto const& m = ideals[k];
    auto ig = ideal_group(s, ideals, k, m.idempotents.front());
    ij.push_back({{"size", m.members.size()},
                  {"idempotents", m.idempotents},
                  {"ideal_group_order", ig.members.size()},
                  {"H_uM_order", h_subgroup(s, ig).order()}});
  }
  return {{"ellis_size", s.size()}, {"minimal_ideals", ij}};
}

void add_ellis(Report& r, Flow const& flow, Caps const& caps) {
  auto s = EllisSemigroup::compute(flow, caps);
  auto ideals = minimal_left_ideals(s);
  r.add_all(check_ideal_structure(s, ideals), "ideal_structure_");
  r.structures["ellis"] = ellis_structures(s, ideals);
}

json identification_json(IdentificationReport const& id) {
  return {{"ellis_size", id.ellis_size},
          {"ideal_count", id.ideal_count},
          {"ideal_group_order", id.um_order},
          {"D", id.ghat.d.members()},
          {"H_uM", id.ghat.h_um.members()},
          {"core", id.ghat.core.members()},
          {"ghat_order", id.ghat.quotient.group.order()},
          {"H", id.stabilizer.members()},
          {"coset_to_class", id.coset_to_class}};
}

// Group-like verdict and quotient identification. The verdict itself is
// analysis; the identification checks are verified properties.
void add_grouplike(Report& r, Ambit const& ambit, EquivRelation const& e, Caps const& caps) {
  auto inv = check_invariance(*ambit.flow, e);
  r.structures["invariant"] = inv.invariant;
  if (!inv.invariant) {
    r.structures["invariance_refutation"] = inv.witness;
    return;
  }
  auto cert = check_group_like(ambit, e);
  r.structures["group_like"] = cert.group_like;
  if (!cert.group_like) {
    r.structures["group_like_refutation"] = cert.refutation;
  } else {
    r.structures["quotient_order"] = cert.quotient.order();
  }
  try {
    auto id = identify_quotient(ambit, e, std::nullopt, caps);
    r.structures["weakly_group_like"] = true;
    r.add_all(id.checks, "identify_");
    r.structures["identification"] = identification_json(id);
  } catch (Error const& ex) {
    if (ex.code() != ErrorCode::NotWeaklyGroupLike) {
      throw;
    }
    r.structures["weakly_group_like"] = false;
    r.structures["weakly_group_like_refutation"] = ex.what();
  }
}

void add_orbital(Report& r, Flow const& flow, EquivRelation const& e, bool decide_weak, Caps const& caps) {
  auto inv = check_invariance(flow, e);
  r.structures["invariant"] = inv.invariant;
  if (!inv.invariant) {
    r.structures["invariance_refutation"] = inv.witness;
    return;
  }
  auto orb = is_orbital(flow, e);
  r.structures["orbital"] = orb.orbital;
  r.structures["H_E"] = orb.h_e.members();
  if (!orb.orbital) {
    r.structures["orbital_refutation"] = orb.witness;
  }
  if (!decide_weak) {
    return;
  }
  auto w = is_weakly_orbital(flow, e, caps);
  r.structures["weakly_orbital"] = w.weakly_orbital;
  r.structures["subgroups_examined"] = w.subgroups_examined;
  if (w.witness) {
    auto mx = maximal_witnesses(flow, e, *w.witness);
    r.add(ok("maximal_witnesses_is_witness", is_witness(flow, e, mx)));
    r.structures["maximal_witness"] = {{"subgroup", mx.subgroup.members()}, {"support", mx.support}};
  } else {
    r.structures["weak_orbital_certificate"] = w.certificate;
  }
}

int emit(Report const& r, Options const& o, Mode mode) {
  std::cout << (o.format == "json" ? r.dump() : r.text());
  if (mode == Mode::Analysis) {
    return 0;
  }
  return r.all_passed() ? 0 : 1;
}

int cmd_analyze(Options const& o) {
  Caps const& caps = default_caps();
  auto file = load(o.path, caps);
  auto flow = flow_of(file);
  Report r;
  r.command = "analyze " + o.path;
  r.structures["points"] = flow->points();
  r.structures["group_order"] = flow->group().order();
  add_ellis(r, *flow, caps);
  if (o.relation_path.empty()) {
    return emit(r, o, Mode::Verification);
  }
  auto e = load_relation(o.relation_path, *flow);
  r.structures["classes"] = e.classes();
  std::optional<Ambit> ambit = file.ambit;
  if (!ambit && flow->is_transitive()) {
    ambit = make_ambit(flow, 0);
  }
  if (ambit) {
    add_grouplike(r, *ambit, e, caps);
  }
  add_orbital(r, *flow, e, true, caps);
  return emit(r, o, Mode::Verification);
}

int cmd_ellis(Options const& o) {
  auto file = load(o.path, default_caps());
  auto flow = flow_of(file);
  Report r;
  r.command = "ellis " + o.path;
  add_ellis(r, *flow, default_caps());
  return emit(r, o, Mode::Verification);
}

int cmd_grouplike(Options const& o) {
  auto file = load(o.path, default_caps());
  if (!file.ambit) {
    throw Error(ErrorCode::ValidationError, "grouplike needs an ambit file (with a basepoint)");
  }
  auto e = load_relation(o.relation_path, *file.ambit->flow);
  Report r;
  r.command = "grouplike " + o.path;
  add_grouplike(r, *file.ambit, e, default_caps());
  return emit(r, o, Mode::Verification);
}

int cmd_orbital(Options const& o) {
  Caps caps = default_caps();
  auto file = load(o.path, caps);
  auto flow = flow_of(file);
  if (o.max_group_order) {
    if (flow->group().order() > *o.max_group_order) {
      throw Error(ErrorCode::GroupTooLarge, "group of order " + std::to_string(flow->group().order()) +
                                                " exceeds --max-group-order " + std::to_string(*o.max_group_order));
    }
    caps.enumeration_order = *o.max_group_order;
  }
  auto e = load_relation(o.relation_path, *flow);
  Report r;
  r.command = "orbital " + o.path;
  add_orbital(r, *flow, e, o.decide_weak, caps);
  return emit(r, o, Mode::Verification);
}

int cmd_structured(Options const& o) {
  Caps const& caps = default_caps();
  auto inst = scenario_from_json(read_json_file(o.path), caps);
  Report r;
  r.command = "structured " + o.path;
  auto ag = is_agreeable(inst);
  r.structures["agreeable"] = ag.agreeable();
  json axioms = json::object();
  for (auto const& c : ag.axioms) {
    axioms[c.name] = c.passed ? json("holds") : json(c.witness);
  }
  r.structures["axioms"] = axioms;
  auto orb = is_orbital(*inst.flow, inst.e);
  auto worb = is_weakly_orbital(*inst.flow, inst.e, caps);
  r.structures["orbital"] = orb.orbital;
  r.structures["weakly_orbital"] = worb.weakly_orbital;
  auto conditions = [](TheoremReport const& t) {
    json j = json::object();
    for (auto const& c : t.conditions) {
      j[c.name] = c.holds;
    }
    for (auto const& c : t.extra) {
      j[c.name] = c.holds;
    }
    return j;
  };
  // The equivalences are theorems only for agreeable instances; otherwise
  // the conditions are reported as analysis.
  for (auto const& [name, applies, eval] :
       {std::tuple{"thm_orb", orb.orbital, &evaluate_thm_orb}, std::tuple{"thm_worb", worb.weakly_orbital, &evaluate_thm_worb}}) {
    if (!applies) {
      continue;
    }
    auto t = eval(inst, caps);
    r.structures[name] = conditions(t);
    if (ag.agreeable()) {
      r.add(ok(std::string(name) + "_equivalence", t.equivalent));
      r.add_all(t.lemma_checks, std::string(name) + "_");
    }
  }
  return emit(r, o, Mode::Verification);
}

int cmd_verify(Options const& o) {
  Report r = run_suite(o.suite);
  return emit(r, o, Mode::Verification);
}

int cmd_example(Options const& o) {
  Report r = run_example(o.example);
  return emit(r, o, Mode::Verification);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enveloping semigroups, group-like quotients and orbital relations of finite flows"};
  app.require_subcommand(1);
  Options o;
  o.suite.caps = default_caps();
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Full pipeline on one flow or ambit");
  analyze->add_option("flow", o.path, "Flow or ambit JSON file")->required();
  analyze->add_option("--relation", o.relation_path, "Relation JSON file");
  format(analyze);

  auto* ellis = app.add_subcommand("ellis", "Enveloping semigroup and minimal ideals");
  ellis->add_option("flow", o.path, "Flow JSON file")->required();
  format(ellis);

  auto* grouplike = app.add_subcommand("grouplike", "Group-like verdict and quotient identification");
  grouplike->add_option("ambit", o.path, "Ambit JSON file")->required();
  grouplike->add_option("--relation", o.relation_path, "Relation JSON file")->required();
  format(grouplike);

  auto* orbital = app.add_subcommand("orbital", "Orbital and weakly orbital verdicts");
  orbital->add_option("flow", o.path, "Flow JSON file")->required();
  orbital->add_option("--relation", o.relation_path, "Relation JSON file")->required();
  orbital->add_flag("--decide-weak", o.decide_weak, "Also decide weak orbitality");
  orbital->add_option("--max-group-order", o.max_group_order, "Largest group whose subgroups are enumerated");
  format(orbital);

  auto* structured = app.add_subcommand("structured", "Agreeability and closedness-transfer conditions");
  structured->add_option("scenario", o.path, "Scenario JSON file")->required();
  format(structured);

  auto* verify = app.add_subcommand("verify", "Seeded verification suite");
  verify->add_option("--suite", o.suite.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--instances", o.suite.instances, "Number of instances");
  verify->add_option("--seed", o.suite.seed, "Seed");
  verify->add_option("--max-points", o.suite.max_points, "Largest phase space");
  verify->add_option("--max-group-order", o.suite.max_group_order, "Largest group");
  verify->add_option("--threads", o.suite.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--inject-fault", o.suite.inject_fault, "Corrupt the grouplike cardinality check (self-test)");
  format(verify);

  auto* example = app.add_subcommand("example", "Run a bundled example");
  example->add_option("name", o.example, "Example name")->required();
  format(example);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*ellis) return cmd_ellis(o);
    if (*grouplike) return cmd_grouplike(o);
    if (*orbital) return cmd_orbital(o);
    if (*structured) return cmd_structured(o);
    if (*verify) return cmd_verify(o);
    return cmd_example(o);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TheoremViolation ? 1 : 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
