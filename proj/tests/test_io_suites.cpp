#include "doctest.h"

#include "elliskit/catalog.hpp"
#include "elliskit/error.hpp"
#include "elliskit/examples.hpp"
#include "elliskit/instance_io.hpp"
#include "elliskit/suites.hpp"

using namespace elliskit;

namespace {

std::string data(std::string const& name) { return std::string(ELLISKIT_TEST_DATA) + "/" + name; }

ErrorCode code_of(std::function<void()> const& f, std::string* what = nullptr) {
  try {
    f();
  } catch (Error const& e) {
    if (what) *what = e.what();
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("instance files") {
  auto amb = parse_instance_file(data("s3_natural_ambit.json"));
  CHECK(amb.kind == InstanceKind::Ambit);
  REQUIRE(amb.ambit);
  CHECK(amb.ambit->flow->group().order() == 6);
  CHECK(amb.ambit->flow->points() == 3);

  auto rel = parse_instance_file(data("z4_cosets.json"));
  CHECK(rel.kind == InstanceKind::Relation);
  CHECK(rel.relation->classes().size() == 2);

  std::string what;
  CHECK(code_of([] { parse_instance_file(data("malformed.json")); }, &what) == ErrorCode::ParseError);
  CHECK(what.find("line 4") != std::string::npos);
  CHECK(code_of([] { parse_instance_file(data("bad_partition.json")); }, &what) == ErrorCode::ValidationError);
  CHECK(what.find("NotAPartition") != std::string::npos);

  auto lat = parse_instance_file(data("lattice_incomplete.json"));
  REQUIRE(lat.lattice);
  CHECK_FALSE(lat.lattice->added.empty());
  CHECK(lat.lattice->lattice.contains_points({0, 1}));
}

TEST_CASE("round trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    auto g = random_group(rng, 12).group;
    Flow f = random_group_flow(rng, g, 6);
    auto back = flow_from_json(to_json(f));
    CHECK(same_flow(f, back));
    auto e = random_invariant_relation(rng, f);
    CHECK(relation_from_json(to_json(e)) == e);
    auto l = random_lattice(rng, Ground::X, f.points());
    CHECK(lattice_from_json(to_json(l)).lattice == l);
    CHECK(group_from_json(to_json(*g)).order() == g->order());
  }
  for (auto const& sc : structured_catalog()) {
    auto back = scenario_from_json(to_json(sc.instance));
    CAPTURE(sc.name);
    CHECK(same_flow(*back.flow, *sc.instance.flow));
    CHECK(back.e == sc.instance.e);
    CHECK(back.g == sc.instance.g);
    CHECK(back.x == sc.instance.x);
    CHECK(back.xx == sc.instance.xx);
  }
}

TEST_CASE("suites are deterministic and thread-count independent") {
  for (auto const& name : suite_names()) {
    SuiteConfig cfg;
    cfg.suite = name;
    cfg.instances = 15;
    cfg.seed = 5;
    cfg.max_group_order = 8;
    cfg.threads = 1;
    auto a = run_suite(cfg);
    cfg.threads = 3;
    auto b = run_suite(cfg);
    CAPTURE(name);
    CHECK(a.all_passed());
    CHECK(a.dump(false) == b.dump(false));
    CHECK(a.seed == std::optional<std::uint64_t>(5));
    cfg.seed = 6;
    CHECK(run_suite(cfg).dump(false) != a.dump(false));
  }
  SuiteConfig bad;
  bad.suite = "nope";
  CHECK(code_of([&] { run_suite(bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("suite edge cases") {
  SuiteConfig cfg;
  cfg.suite = "orbital";
  cfg.instances = 0;
  auto r = run_suite(cfg);
  CHECK(r.all_passed());

  cfg.suite = "grouplike";
  cfg.instances = 10;
  cfg.inject_fault = true;
  CHECK_FALSE(run_suite(cfg).all_passed());
}

TEST_CASE("instance seeding is per index") {
  auto a = instance_rng(3, 7);
  auto b = instance_rng(3, 7);
  CHECK(a() == b());
  CHECK(instance_rng(3, 7)() != instance_rng(3, 8)());
  CHECK(instance_rng(3, 7)() != instance_rng(4, 7)());
}

TEST_CASE("examples") {
  for (auto const& name : example_names()) {
    auto r = run_example(name);
    CAPTURE(name);
    CHECK(r.all_passed());
    CHECK(r.to_json(false).count("timing") == 0);
  }
  CHECK(code_of([] { run_example("nope"); }) == ErrorCode::UnknownExample);
}
