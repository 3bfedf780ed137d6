#include "posetdim/errors.hpp"

namespace posetdim {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_element: return "DuplicateElement";
    case errc::unknown_element: return "UnknownElement";
    case errc::relation_cycle: return "RelationCycle";
    case errc::element_collision: return "ElementCollision";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::not_unicycle: return "NotUnicycle";
    case errc::invalid_decomposition: return "InvalidDecomposition";
    case errc::not_a_tree: return "NotATree";
    case errc::no_minimum: return "NoMinimum";
    case errc::not_extremal: return "NotExtremal";
    case errc::invalid_tree: return "InvalidTree";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::invalid_size: return "InvalidSize";
    case errc::out_of_range: return "OutOfRange";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::invalid_model: return "InvalidModel";
    case errc::unsupported_class: return "UnsupportedClass";
    case errc::parse_error: return "ParseError";
  }
  return "Error";
}

error::error(errc code, const std::string& message, int line)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      line_(line) {}

void raise(errc code, const std::string& message, int line) {
  throw error(code, message, line);
}

}  // namespace posetdim
