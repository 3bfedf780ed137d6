#pragma once

#include <stdexcept>
#include <string>

namespace posetdim {

enum class errc {
  duplicate_element,
  unknown_element,
  relation_cycle,
  element_collision,
  size_limit_exceeded,
  not_unicycle,
  invalid_decomposition,
  not_a_tree,
  no_minimum,
  not_extremal,
  invalid_tree,
  precondition_violated,
  invalid_size,
  out_of_range,
  cap_exceeded,
  invalid_model,
  unsupported_class,
  parse_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message, int line = 0);

  errc code() const { return code_; }
  // 1-based input line for parse errors, 0 elsewhere.
  int line() const { return line_; }

private:
  errc code_;
  int line_;
};

[[noreturn]] void raise(errc code, const std::string& message, int line = 0);

}  // namespace posetdim
