#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace monocrem {

/// Every failure the library can signal. The names double as the machine
/// readable "code" field of CLI error reports.
enum class errc {
  mixed_degrees,
  duplicate_monomial,
  empty_set,
  length_mismatch,
  degenerate_result,
  not_squarefree,
  not_square,
  bad_minor_size,
  dimension_mismatch,
  too_large,
  not_normalized,
  not_cohesive,
  too_few_monomials,
  not_subset,
  wrong_degree,
  not_an_edge,
  collapse_collision,
  not_db,
  not_permutation,
  empty_result,
  family_required,
  syntax_error,
  index_out_of_range,
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::mixed_degrees: return "MixedDegrees";
    case errc::duplicate_monomial: return "DuplicateMonomial";
    case errc::empty_set: return "EmptySet";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::degenerate_result: return "DegenerateResult";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::not_square: return "NotSquare";
    case errc::bad_minor_size: return "BadMinorSize";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::too_large: return "TooLarge";
    case errc::not_normalized: return "NotNormalized";
    case errc::not_cohesive: return "NotCohesive";
    case errc::too_few_monomials: return "TooFewMonomials";
    case errc::not_subset: return "NotSubset";
    case errc::wrong_degree: return "WrongDegree";
    case errc::not_an_edge: return "NotAnEdge";
    case errc::collapse_collision: return "CollapseCollision";
    case errc::not_db: return "NotDB";
    case errc::not_permutation: return "NotPermutation";
    case errc::empty_result: return "EmptyResult";
    case errc::family_required: return "FamilyRequired";
    case errc::syntax_error: return "SyntaxError";
    case errc::index_out_of_range: return "IndexOutOfRange";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(errc code, const std::string& message, std::size_t position)
      : std::runtime_error(message), code_(code), position_(position) {}

  errc code() const noexcept { return code_; }
  /// Byte offset into the input text, present for parse errors only.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  errc code_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace monocrem
