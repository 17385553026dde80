#pragma once

// JSON instance files. Groups, flows, ambits, relations, lattices and
// structured scenarios, each parsed through its module's validating
// constructor.
//
//   group     {"kind":"permutation","degree":n,"generators":[[...]]}
//             {"kind":"table","mul":[[...]],"generators":[...]}  generators optional
//             {"kind":"named","name":"affine","q":2,"dim":3}
//   flow      {"group":..., "points":n,
//              "action":"natural"|"regular"|{"generator_images":[[...]]},
//              "transformations":[[...]]}
//   ambit     flow fields plus "basepoint"
//   relation  {"points":n,"classes":[[...]]}
//   lattice   {"ground":"X","points":n,"sets":[[...]]|"discrete"|"indiscrete",
//              "auto_complete":bool}
//   scenario  {"flow":..., "relation":..., "lattices":{"G":...,"X":...,"X2":...}}

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"

#include "elliskit/algebra.hpp"
#include "elliskit/flows.hpp"
#include "elliskit/relations.hpp"
#include "elliskit/structured.hpp"

namespace elliskit {

using json = nlohmann::json;

enum class InstanceKind { Group, Flow, Ambit, Relation, Lattice, Scenario };

std::string_view kind_name(InstanceKind k);

struct InstanceFile {
  InstanceKind kind = InstanceKind::Group;
  std::shared_ptr<FiniteGroup const> group;
  std::shared_ptr<Flow const> flow;
  std::optional<Ambit> ambit;
  std::optional<EquivRelation> relation;
  std::optional<LatticeBuild> lattice;
  std::optional<StructuredInstance> scenario;
};

// Throws ParseError with the line of malformed JSON, ValidationError when
// the content is rejected (the message carries the module's error).
json read_json_file(std::string const& path);
json parse_json_text(std::string const& text);

InstanceFile parse_instance(json const& j, Caps const& caps = default_caps());
InstanceFile parse_instance_file(std::string const& path, Caps const& caps = default_caps());

FiniteGroup group_from_json(json const& j, Caps const& caps = default_caps());
Flow flow_from_json(json const& j, Caps const& caps = default_caps());
Ambit ambit_from_json(json const& j, Caps const& caps = default_caps());
EquivRelation relation_from_json(json const& j);
// points is used when the file does not say; ground_points supplies the
// default for scenarios.
LatticeBuild lattice_from_json(json const& j, std::optional<std::size_t> points = std::nullopt,
                               Caps const& caps = default_caps());
StructuredInstance scenario_from_json(json const& j, Caps const& caps = default_caps());

json to_json(FiniteGroup const& g);
json to_json(Flow const& f);
json to_json(Ambit const& a);
json to_json(EquivRelation const& e);
json to_json(Lattice const& l, Caps const& caps = default_caps());
json to_json(StructuredInstance const& s, Caps const& caps = default_caps());
json to_json(Subgroup const& h);

bool same_flow(Flow const& a, Flow const& b);

}  // namespace elliskit
