#pragma once

#include <stdexcept>
#include <string>

namespace latdec {

/// Every failure the library can report. Codes are stable so callers can
/// dispatch without parsing messages.
enum class Errc {
  duplicate_name,
  empty_atom_set,
  size_cap_exceeded,
  cycle_detected,
  unknown_point,
  lattice_mismatch,
  trivial_lattice,
  join_not_top,
  overlapping_blocks,
  zero_block,
  duplicate_block,
  modular_law_violation,
  negative_value,
  missing_element,
  weight_sum_not_one,
  not_boolean,
  not_isotone,
  not_additive,
  zero_block_valuation,
  domain_mismatch,
  payoff_count_mismatch,
  not_a_refinement,
  nonpositive_scale,
  nonpositive_total,
  nonpositive_parameter,
  empty_support,
  invalid_distribution,
  invalid_rational,
  budget_exceeded,
  parse_error,
  unknown_name,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_name: return "duplicate_name";
    case Errc::empty_atom_set: return "empty_atom_set";
    case Errc::size_cap_exceeded: return "size_cap_exceeded";
    case Errc::cycle_detected: return "cycle_detected";
    case Errc::unknown_point: return "unknown_point";
    case Errc::lattice_mismatch: return "lattice_mismatch";
    case Errc::trivial_lattice: return "trivial_lattice";
    case Errc::join_not_top: return "join_not_top";
    case Errc::overlapping_blocks: return "overlapping_blocks";
    case Errc::zero_block: return "zero_block";
    case Errc::duplicate_block: return "duplicate_block";
    case Errc::modular_law_violation: return "modular_law_violation";
    case Errc::negative_value: return "negative_value";
    case Errc::missing_element: return "missing_element";
    case Errc::weight_sum_not_one: return "weight_sum_not_one";
    case Errc::not_boolean: return "not_boolean";
    case Errc::not_isotone: return "not_isotone";
    case Errc::not_additive: return "not_additive";
    case Errc::zero_block_valuation: return "zero_block_valuation";
    case Errc::domain_mismatch: return "domain_mismatch";
    case Errc::payoff_count_mismatch: return "payoff_count_mismatch";
    case Errc::not_a_refinement: return "not_a_refinement";
    case Errc::nonpositive_scale: return "nonpositive_scale";
    case Errc::nonpositive_total: return "nonpositive_total";
    case Errc::nonpositive_parameter: return "nonpositive_parameter";
    case Errc::empty_support: return "empty_support";
    case Errc::invalid_distribution: return "invalid_distribution";
    case Errc::invalid_rational: return "invalid_rational";
    case Errc::budget_exceeded: return "budget_exceeded";
    case Errc::parse_error: return "parse_error";
    case Errc::unknown_name: return "unknown_name";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  Errc code() const noexcept { return code_; }

  /// The message without the code prefix, for re-wrapping with context.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace latdec
