#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace patfolio {

enum class ErrorCode {
  parse,
  invalid_spec,
  invalid_symbol,
  unknown_class,
  format,
  range,
  name_conflict,
  level_conflict,
  invalid_name,
  empty_portfolio,
  shape,
  domain,
  undefined_correlation,
  undefined_cosine,
  degenerate_graph,
  unknown_name,
  argument,
  locked,
  io,
};

// Stable, machine-readable spelling used as the CLI error prefix.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace patfolio
