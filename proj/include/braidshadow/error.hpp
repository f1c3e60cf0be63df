#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidshadow {

enum class Errc {
  degree_mismatch,
  invalid_permutation,
  size_cap_exceeded,
  domain_mismatch,
  not_in_group,
  braid_relation_violated,
  kernel_not_in_pb3,
  not_in_commutator_form,
  candidate_cap_exceeded,
  source_target_mismatch,
  unit_inverse_missing,
  not_contained,
  not_a_shadow,
  non_isolated,
  internal_inconsistency,
  parse_error,
  schema_mismatch,
  io_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  // Usage and IO problems (bad files, bad schema) as opposed to mathematical
  // failures such as a violated braid relation or an exceeded cap.
  bool is_input_error() const noexcept {
    return code_ == Errc::parse_error || code_ == Errc::schema_mismatch ||
           code_ == Errc::io_error || code_ == Errc::invalid_permutation;
  }

private:
  Errc code_;
};

}  // namespace braidshadow
