#include "plancheck/error.hpp"

namespace plancheck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::recursion_error: return "RecursionError";
    case ErrorKind::unknown_construct: return "UnknownConstruct";
    case ErrorKind::proposition_mismatch: return "PropositionMismatch";
    case ErrorKind::too_many_env_props: return "TooManyEnvProps";
    case ErrorKind::formula_too_large: return "FormulaTooLarge";
    case ErrorKind::unmapped_api: return "UnmappedApi";
    case ErrorKind::inline_depth_exceeded: return "InlineDepthExceeded";
    case ErrorKind::backend_unavailable: return "BackendUnavailable";
    case ErrorKind::unparseable_answer: return "UnparseableAnswer";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::degenerate_labels: return "DegenerateLabels";
    case ErrorKind::degenerate_calibration: return "DegenerateCalibration";
    case ErrorKind::missing_pair: return "MissingPair";
    case ErrorKind::empty_stream: return "EmptyStream";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::format_error: return "FormatError";
    case ErrorKind::io_error: return "IoError";
  }
  return "Error";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message,
                     const std::optional<SourcePos>& pos) {
  std::string out(to_string(kind));
  if (pos) {
    out += " at " + std::to_string(pos->line) + ":" + std::to_string(pos->column);
  }
  out += ": " + message;
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<SourcePos> pos)
    : std::runtime_error(decorate(kind, message, pos)), kind_(kind), pos_(pos) {}

}  // namespace plancheck
