#include "patrolgame/error.hpp"

namespace patrolgame {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::BracketError: return "BracketError";
    case ErrorCode::InfeasibleTau: return "InfeasibleTau";
    case ErrorCode::TrivialGame: return "TrivialGame";
    case ErrorCode::BudgetOutOfRange: return "BudgetOutOfRange";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::InvalidStart: return "InvalidStart";
    case ErrorCode::SearchSpaceExceeded: return "SearchSpaceExceeded";
  }
  return "Unknown";
}

}  // namespace patrolgame
