#include "braidshadow/config.hpp"
#include "braidshadow/error.hpp"

namespace braidshadow {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::degree_mismatch: return "degree-mismatch";
    case Errc::invalid_permutation: return "invalid-permutation";
    case Errc::size_cap_exceeded: return "size-cap-exceeded";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::not_in_group: return "not-in-group";
    case Errc::braid_relation_violated: return "braid-relation-violated";
    case Errc::kernel_not_in_pb3: return "kernel-not-in-PB3";
    case Errc::not_in_commutator_form: return "f-not-in-commutator-form";
    case Errc::candidate_cap_exceeded: return "candidate-cap-exceeded";
    case Errc::source_target_mismatch: return "source-target-mismatch";
    case Errc::unit_inverse_missing: return "unit-inverse-missing";
    case Errc::not_contained: return "not-contained";
    case Errc::not_a_shadow: return "not-a-shadow";
    case Errc::non_isolated: return "non-isolated";
    case Errc::internal_inconsistency: return "internal-inconsistency";
    case Errc::parse_error: return "parse-error";
    case Errc::schema_mismatch: return "schema-mismatch";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

Config& config() noexcept {
  static Config instance;
  return instance;
}

}  // namespace braidshadow
