#include "elliskit/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "elliskit/error.hpp"

namespace elliskit {

namespace {

[[noreturn]] void invalid(std::string const& msg) { throw Error(ErrorCode::ValidationError, msg); }

json const& need(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    invalid(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t count_field(json const& j, char const* key) {
  auto const& v = need(j, key);
  if (!v.is_number_unsigned()) {
    invalid(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::vector<std::uint32_t>> rows(json const& j, char const* what) {
  if (!j.is_array()) {
    invalid(std::string(what) + " must be an array of arrays");
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto const& r : j) {
    if (!r.is_array()) {
      invalid(std::string(what) + " must be an array of arrays");
    }
    std::vector<std::uint32_t> row;
    for (auto const& v : r) {
      if (!v.is_number_unsigned()) {
        invalid(std::string(what) + " entries must be non-negative integers");
      }
      row.push_back(v.get<std::uint32_t>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Module errors become ValidationError; parse and validation errors pass
// through.
template <class F>
auto validated(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (Error const& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) {
      throw;
    }
    invalid(e.what());
  } catch (json::exception const& e) {
    invalid(e.what());
  }
}

}  // namespace

std::string_view kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::Group: return "group";
    case InstanceKind::Flow: return "flow";
    case InstanceKind::Ambit: return "ambit";
    case InstanceKind::Relation: return "relation";
    case InstanceKind::Lattice: return "lattice";
    case InstanceKind::Scenario: return "scenario";
  }
  return "?";
}

json parse_json_text(std::string const& text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      line += text[i] == '\n';
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + e.what());
  }
}

json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

FiniteGroup group_from_json(json const& j, Caps const& caps) {
  return validated([&] {
    std::string kind = need(j, "kind").get<std::string>();
    if (kind == "permutation") {
      std::size_t deg = count_field(j, "degree");
      return FiniteGroup::from_permutations(deg, rows(need(j, "generators"), "generators"), caps);
    }
    if (kind == "table") {
      auto mul = rows(need(j, "mul"), "mul");
      auto g = FiniteGroup::from_table(mul);
      if (j.contains("permutations")) {
        auto perms = rows(j.at("permutations"), "permutations");
        std::size_t deg = perms.empty() ? 0 : perms.front().size();
        if (perms.size() != g.order()) {
          invalid("need one permutation per element");
        }
        std::vector<std::uint32_t> flat;
        for (auto const& p : perms) {
          if (p.size() != deg) {
            invalid("permutations of unequal degree");
          }
          flat.insert(flat.end(), p.begin(), p.end());
        }
        g.set_permutation_rep(deg, std::move(flat));
      }
      if (j.contains("generators")) {
        std::vector<Elem> gens;
        for (auto const& v : j.at("generators")) {
          if (!v.is_number_unsigned() || v.get<std::size_t>() >= g.order()) {
            invalid("generator out of range");
          }
          gens.push_back(v.get<Elem>());
        }
        if (subgroup_generated(g, gens).order() != g.order()) {
          invalid("generators do not generate the group");
        }
        g.set_generators(std::move(gens));
      }
      return g;
    }
    if (kind == "named") {
      NamedGroupSpec spec;
      spec.name = need(j, "name").get<std::string>();
      spec.n = j.value("n", std::size_t{0});
      spec.q = j.value("q", std::size_t{0});
      spec.dim = j.value("dim", std::size_t{0});
      return named_group(spec, caps);
    }
    invalid("unknown group kind '" + kind + "'");
  });
}

Flow flow_from_json(json const& j, Caps const& caps) {
  return validated([&] {
    std::vector<Map> trans;
    if (j.contains("transformations")) {
      trans = rows(j.at("transformations"), "transformations");
    }
    std::size_t points = count_field(j, "points");
    if (!j.contains("group")) {
      return Flow::from_transformations({points, trans});
    }
    auto g = std::make_shared<FiniteGroup const>(group_from_json(j.at("group"), caps));
    auto const& action = need(j, "action");
    std::vector<Map> images;
    if (action.is_string()) {
      std::string a = action.get<std::string>();
      if (a == "regular") {
        if (points != g->order()) {
          invalid("regular action needs points = group order");
        }
        Flow f = Flow::regular(g);
        for (Elem s : g->generators()) {
          images.emplace_back(f.action_map(s).begin(), f.action_map(s).end());
        }
      } else if (a == "natural") {
        if (!g->has_permutation_rep() || g->degree() != points) {
          invalid("natural action needs a permutation representation of degree " + std::to_string(points));
        }
        for (Elem s : g->generators()) {
          images.emplace_back(g->permutation(s).begin(), g->permutation(s).end());
        }
      } else {
        invalid("unknown action '" + a + "'");
      }
    } else {
      images = rows(need(action, "generator_images"), "generator_images");
    }
    return Flow::from_generator_images(g, points, images, trans);
  });
}

Ambit ambit_from_json(json const& j, Caps const& caps) {
  auto f = std::make_shared<Flow const>(flow_from_json(j, caps));
  return validated([&] { return make_ambit(f, static_cast<Point>(count_field(j, "basepoint"))); });
}

EquivRelation relation_from_json(json const& j) {
  return validated([&] { return EquivRelation::from_classes(count_field(j, "points"), rows(need(j, "classes"), "classes")); });
}

LatticeBuild lattice_from_json(json const& j, std::optional<std::size_t> points, Caps const& caps) {
  return validated([&] {
    Ground ground = parse_ground(need(j, "ground").get<std::string>());
    std::optional<std::size_t> n = points;
    if (j.contains("points")) {
      n = count_field(j, "points");
    }
    auto const& sets = need(j, "sets");
    if (sets.is_string()) {
      if (!n) {
        invalid("lattice needs 'points'");
      }
      std::string s = sets.get<std::string>();
      if (s == "discrete") {
        return LatticeBuild{Lattice::discrete(ground, *n), {}};
      }
      if (s == "indiscrete") {
        return LatticeBuild{Lattice::indiscrete(ground, *n, caps), {}};
      }
      invalid("unknown lattice shorthand '" + s + "'");
    }
    auto list = rows(sets, "sets");
    if (!n) {
      std::size_t m = 0;
      for (auto const& s : list) {
        for (auto p : s) {
          m = std::max<std::size_t>(m, p + 1);
        }
      }
      n = m;
    }
    return make_lattice(ground, *n, list, j.value("auto_complete", false), caps);
  });
}

StructuredInstance scenario_from_json(json const& j, Caps const& caps) {
  auto f = std::make_shared<Flow const>(flow_from_json(need(j, "flow"), caps));
  auto e = relation_from_json(need(j, "relation"));
  return validated([&] {
    std::size_t const n = f->points();
    std::size_t const ng = f->group().order();
    json lat = j.value("lattices", json::object());
    Lattice g = lat.contains("G") ? lattice_from_json(lat.at("G"), ng, caps).lattice : Lattice::discrete(Ground::G, ng);
    Lattice x = lat.contains("X") ? lattice_from_json(lat.at("X"), n, caps).lattice : Lattice::discrete(Ground::X, n);
    std::optional<Lattice> xx;
    if (lat.contains("X2")) {
      xx = lattice_from_json(lat.at("X2"), n * n, caps).lattice;
    }
    if (g.ground() != Ground::G || x.ground() != Ground::X || (xx && xx->ground() != Ground::XX)) {
      invalid("scenario lattices must be on grounds G, X and X2");
    }
    return make_instance(f, std::move(g), std::move(x), e, std::move(xx), caps);
  });
}

InstanceFile parse_instance(json const& j, Caps const& caps) {
  InstanceFile out;
  if (!j.is_object()) {
    invalid("instance must be a JSON object");
  }
  if (j.contains("lattices") || (j.contains("flow") && j.contains("relation"))) {
    out.kind = InstanceKind::Scenario;
    out.scenario = scenario_from_json(j, caps);
    out.flow = out.scenario->flow;
  } else if (j.contains("ground")) {
    out.kind = InstanceKind::Lattice;
    out.lattice = lattice_from_json(j, std::nullopt, caps);
  } else if (j.contains("classes")) {
    out.kind = InstanceKind::Relation;
    out.relation = relation_from_json(j);
  } else if (j.contains("basepoint")) {
    out.kind = InstanceKind::Ambit;
    out.ambit = ambit_from_json(j, caps);
    out.flow = out.ambit->flow;
  } else if (j.contains("points")) {
    out.kind = InstanceKind::Flow;
    out.flow = std::make_shared<Flow const>(flow_from_json(j, caps));
  } else if (j.contains("kind")) {
    out.kind = InstanceKind::Group;
    out.group = std::make_shared<FiniteGroup const>(group_from_json(j, caps));
  } else {
    invalid("cannot tell which kind of instance this is");
  }
  if (out.flow) {
    out.group = out.flow->group_ptr();
  }
  return out;
}

InstanceFile parse_instance_file(std::string const& path, Caps const& caps) {
  return parse_instance(read_json_file(path), caps);
}

json to_json(FiniteGroup const& g) {
  if (g.has_permutation_rep()) {
    json gens = json::array();
    std::vector<std::vector<std::uint32_t>> perms;
    for (Elem s : g.generators()) {
      perms.emplace_back(g.permutation(s).begin(), g.permutation(s).end());
      gens.push_back(perms.back());
    }
    // The permutation form reproduces the element numbering only when the
    // group was built from these generators.
    try {
      auto h = FiniteGroup::from_permutations(g.degree(), perms);
      if (h == g && h.generators() == g.generators()) {
        return {{"kind", "permutation"}, {"degree", g.degree()}, {"generators", gens}};
      }
    } catch (Error const&) {
    }
  }
  // Generator images in a flow refer to this generating set, so it is kept.
  json out = {{"kind", "table"}, {"mul", g.table()}, {"generators", g.generators()}};
  if (g.has_permutation_rep()) {
    json perms = json::array();
    for (Elem a = 0; a < g.order(); ++a) {
      perms.push_back(std::vector<std::uint32_t>(g.permutation(a).begin(), g.permutation(a).end()));
    }
    out["permutations"] = perms;
  }
  return out;
}

json to_json(Flow const& f) {
  json images = json::array();
  for (Elem s : f.group().generators()) {
    images.push_back(Map(f.action_map(s).begin(), f.action_map(s).end()));
  }
  json out = {{"group", to_json(f.group())},
              {"points", f.points()},
              {"action", {{"generator_images", images}}}};
  if (!f.transformations().empty()) {
    out["transformations"] = f.transformations();
  }
  return out;
}

json to_json(Ambit const& a) {
  json out = to_json(*a.flow);
  out["basepoint"] = a.basepoint;
  return out;
}

json to_json(EquivRelation const& e) { return {{"points", e.points()}, {"classes", e.classes()}}; }

json to_json(Lattice const& l, Caps const& caps) {
  json out = {{"ground", std::string(ground_name(l.ground()))}, {"points", l.points()}};
  if (l.is_discrete()) {
    out["sets"] = "discrete";
  } else if (l.points() > 0 && l.principal(0).size() == l.points() && l == Lattice::indiscrete(l.ground(), l.points(), caps)) {
    out["sets"] = "indiscrete";
  } else {
    out["sets"] = l.members(caps);
  }
  out["auto_complete"] = false;
  return out;
}

json to_json(StructuredInstance const& s, Caps const& caps) {
  json lat = {{"G", to_json(s.g, caps)}, {"X", to_json(s.x, caps)}};
  if (!(s.xx == product_lattice(s.x, s.x, Ground::XX, caps))) {
    lat["X2"] = to_json(s.xx, caps);
  }
  return {{"flow", to_json(*s.flow)}, {"relation", to_json(s.e)}, {"lattices", lat}};
}

json to_json(Subgroup const& h) { return h.members(); }

bool same_flow(Flow const& a, Flow const& b) {
  if (a.points() != b.points() || !(a.group() == b.group()) || a.transformations() != b.transformations()) {
    return false;
  }
  for (Elem g = 0; g < a.group().order(); ++g) {
    if (!std::equal(a.action_map(g).begin(), a.action_map(g).end(), b.action_map(g).begin())) {
      return false;
    }
  }
  return true;
}

}  // namespace elliskit
