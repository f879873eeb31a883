#include "loctk/error.hpp"

namespace loctk {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_a_poset: return "NotAPoset";
    case Errc::not_a_lattice: return "NotALattice";
    case Errc::not_distributive: return "NotDistributive";
    case Errc::not_join_preserving: return "NotJoinPreserving";
    case Errc::not_meet_preserving: return "NotMeetPreserving";
    case Errc::endpoint_violation: return "EndpointViolation";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::not_square: return "NotSquare";
    case Errc::not_boolean: return "NotBoolean";
    case Errc::not_directed: return "NotDirected";
    case Errc::incoherent_system: return "IncoherentSystem";
    case Errc::not_a_point_image: return "NotAPointImage";
    case Errc::invalid_preinterpretation: return "InvalidPreinterpretation";
    case Errc::bad_join_entry: return "BadJoinEntry";
    case Errc::not_a_ring: return "NotARing";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::unresolved_reference: return "UnresolvedReference";
    case Errc::invalid_declaration: return "InvalidDeclaration";
    case Errc::resource_cap: return "ResourceCap";
    case Errc::shadow_mismatch: return "ShadowMismatch";
    case Errc::characterization_mismatch: return "CharacterizationMismatch";
  }
  return "Unknown";
}

ToolError::ToolError(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code),
      detail_(msg) {}

int ToolError::exit_code() const {
  switch (code_) {
    case Errc::resource_cap:
      return 3;
    case Errc::shadow_mismatch:
    case Errc::characterization_mismatch:
      return 1;
    default:
      return 2;
  }
}

void fail(Errc code, const std::string& msg) { throw ToolError(code, msg); }

Limits& limits() {
  static Limits l;
  return l;
}

}  // namespace loctk
