#include "patfolio/error.hpp"

namespace patfolio {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::invalid_spec: return "invalid-spec";
    case ErrorCode::invalid_symbol: return "invalid-symbol";
    case ErrorCode::unknown_class: return "unknown-class";
    case ErrorCode::format: return "format-error";
    case ErrorCode::range: return "range-error";
    case ErrorCode::name_conflict: return "name-conflict";
    case ErrorCode::level_conflict: return "level-conflict";
    case ErrorCode::invalid_name: return "invalid-name";
    case ErrorCode::empty_portfolio: return "empty-portfolio";
    case ErrorCode::shape: return "shape-error";
    case ErrorCode::domain: return "domain-error";
    case ErrorCode::undefined_correlation: return "undefined-correlation";
    case ErrorCode::undefined_cosine: return "undefined-cosine";
    case ErrorCode::degenerate_graph: return "degenerate-graph";
    case ErrorCode::unknown_name: return "unknown-name";
    case ErrorCode::argument: return "argument-error";
    case ErrorCode::locked: return "store-locked";
    case ErrorCode::io: return "io-error";
  }
  return "error";
}

}  // namespace patfolio
