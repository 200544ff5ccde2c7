#pragma once

#include <stdexcept>
#include <string>

namespace zps {

// Failure taxonomy shared by the library and the CLI exit-code mapping.
enum class errc {
  composite_modulus_base,
  overflow,
  zero_input,
  digit_out_of_range,
  wrong_length,
  dimension_mismatch,
  ring_mismatch,
  shape_error,
  too_large,
  too_few_words,
  base_not_mrd,
  missing_zero,
  parse_error,
  duplicate_word,
  not_a_clique,
  not_maximum,
  unclassifiable_set,
  bad_parameters,
  field_mismatch,
  division_by_zero,
  internal,
};

inline const char* errc_name(errc kind) noexcept {
  switch (kind) {
    case errc::composite_modulus_base: return "CompositeModulusBase";
    case errc::overflow: return "Overflow";
    case errc::zero_input: return "ZeroInput";
    case errc::digit_out_of_range: return "DigitOutOfRange";
    case errc::wrong_length: return "WrongLength";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::shape_error: return "ShapeError";
    case errc::too_large: return "TooLarge";
    case errc::too_few_words: return "TooFewWords";
    case errc::base_not_mrd: return "BaseNotMRD";
    case errc::missing_zero: return "MissingZero";
    case errc::parse_error: return "ParseError";
    case errc::duplicate_word: return "DuplicateWord";
    case errc::not_a_clique: return "NotAClique";
    case errc::not_maximum: return "NotMaximum";
    case errc::unclassifiable_set: return "UnclassifiableSet";
    case errc::bad_parameters: return "BadParameters";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}

  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

}  // namespace zps
