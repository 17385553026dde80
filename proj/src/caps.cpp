#include "elliskit/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "elliskit/error.hpp"

namespace elliskit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::NotAnAction: return "NotAnAction";
    case ErrorCode::OrbitNotDense: return "OrbitNotDense";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::IncompatibleTower: return "IncompatibleTower";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::IsomorphismViolated: return "IsomorphismViolated";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotAWitness: return "NotAWitness";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::NotEquivalence: return "NotEquivalence";
    case ErrorCode::NotWeaklyGroupLike: return "NotWeaklyGroupLike";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotAgreeable: return "NotAgreeable";
    case ErrorCode::NotOrbital: return "NotOrbital";
    case ErrorCode::NotWeaklyOrbital: return "NotWeaklyOrbital";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

void Caps::apply_overrides(std::string const& spec) {
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) {
      continue;
    }
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "malformed cap override '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoul(item.substr(eq + 1));
    } catch (std::exception const&) {
      throw Error(ErrorCode::InvalidArgument, "malformed cap value in '" + item + "'");
    }
    if (key == "max_group_order") {
      max_group_order = value;
    } else if (key == "enumeration_order") {
      enumeration_order = value;
    } else if (key == "isomorphism_order") {
      isomorphism_order = value;
    } else if (key == "closure") {
      closure = value;
    } else if (key == "product_points") {
      product_points = value;
    } else if (key == "independence_k") {
      independence_k = value;
    } else if (key == "lattice_sets") {
      lattice_sets = value;
    } else if (key == "relation_points") {
      relation_points = value;
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown cap '" + key + "'");
    }
  }
}

Caps const& default_caps() {
  static Caps const caps = [] {
    Caps c;
    if (char const* env = std::getenv("ELLISKIT_CAPS")) {
      c.apply_overrides(env);
    }
    return c;
  }();
  return caps;
}

}  // namespace elliskit
