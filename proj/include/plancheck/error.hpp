#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plancheck {

enum class ErrorKind {
  syntax_error,
  recursion_error,
  unknown_construct,
  proposition_mismatch,
  too_many_env_props,
  formula_too_large,
  unmapped_api,
  inline_depth_exceeded,
  backend_unavailable,
  unparseable_answer,
  dimension_mismatch,
  degenerate_labels,
  degenerate_calibration,
  missing_pair,
  empty_stream,
  invalid_argument,
  format_error,
  io_error,
};

std::string_view to_string(ErrorKind kind);

struct SourcePos {
  int line = 0;
  int column = 0;

  // Positions are diagnostic metadata; they never take part in structural
  // equality of the trees that carry them.
  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

/// Every failure raised by the library. `kind()` names the failure class
/// (SyntaxError, FormulaTooLarge, ...); parse failures also carry a position.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourcePos> pos = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

 private:
  ErrorKind kind_;
  std::optional<SourcePos> pos_;
};

}  // namespace plancheck
