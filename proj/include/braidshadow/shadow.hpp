#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "braidshadow/group.hpp"
#include "braidshadow/nfi.hpp"
#include "braidshadow/word.hpp"

namespace braidshadow {

namespace detail {
struct SourceCell;
}

/// A GT-shadow [m, f] with a given target N.
///
/// m is kept as a residue in [0, N_ord). f is carried both as a word in x, y
/// that lies literally in [F2, F2] and as the element f N_F2 of the target's
/// F2 quotient. Two shadows are equal when they share the target presentation
/// (content id), the residue m and the element f N_F2.
class GtShadow {
public:
  GtShadow() = default;
  GtShadow(NfiSubgroup target, std::int64_t m, FreeWord f_word, Permutation f_elt);

  const NfiSubgroup& target() const noexcept { return target_; }
  std::int64_t m() const noexcept { return m_; }
  const FreeWord& f_word() const noexcept { return f_word_; }
  const Permutation& f_elt() const noexcept { return f_elt_; }

  /// ker T_{m,f}; computed once and shared between copies.
  const NfiSubgroup& source() const;

  friend bool operator==(const GtShadow& a, const GtShadow& b);

private:
  NfiSubgroup target_;
  std::int64_t m_ = 0;
  FreeWord f_word_{Alphabet::F2};
  Permutation f_elt_;
  std::shared_ptr<detail::SourceCell> source_;
};

/// Both hexagon relations modulo N, evaluated in B3/N.
bool check_hexagons(const NfiSubgroup& n, std::int64_t m, const FreeWord& f);

/// f θ(f) ∈ N_F2 and τ²(y^m f) τ(y^m f) y^m f ∈ N_F2.
/// Throws Errc::not_in_commutator_form unless f has zero exponent sums.
bool check_simplified_hexagons(const NfiSubgroup& n, std::int64_t m, const FreeWord& f);

/// Whether E_{m,f}(x), E_{m,f}(y) generate F2/N_F2.
bool f2_part_onto(const NfiSubgroup& n, std::int64_t m, const FreeWord& f);
/// Whether T_{m,f}(σ1), T_{m,f}(σ2) generate B3/N.
bool b3_part_onto(const NfiSubgroup& n, std::int64_t m, const FreeWord& f);

bool is_unit_mod(std::int64_t a, std::uint64_t modulus);
/// a⁻¹ mod modulus; throws Errc::unit_inverse_missing.
std::int64_t unit_inverse(std::int64_t a, std::uint64_t modulus);
std::int64_t mod_floor(std::int64_t a, std::uint64_t modulus);

bool is_shadow(const NfiSubgroup& n, std::int64_t m, const FreeWord& f);

/// Validating constructor: throws Errc::not_a_shadow.
GtShadow make_shadow(const NfiSubgroup& n, std::int64_t m, const FreeWord& f);

GtShadow identity_shadow(const NfiSubgroup& n);

/// T_{m,f}: σ1 ↦ σ1^{2m+1} N, σ2 ↦ f⁻¹ σ2^{2m+1} f N.
GenHom t_hom(const GtShadow& s);

const NfiSubgroup& shadow_source(const GtShadow& s);

/// GT(N) in order: m ascending over units, then f in commutator-table order.
/// Memoised by content id. Throws Errc::candidate_cap_exceeded.
const std::vector<GtShadow>& enumerate_shadows(const NfiSubgroup& n);
/// Uncached OpenMP filter over the candidate grid.
std::vector<GtShadow> enumerate_shadows_parallel(const NfiSubgroup& n);
/// Uncached single-threaded reference.
std::vector<GtShadow> enumerate_shadows_serial(const NfiSubgroup& n);
void clear_shadow_memo();

/// s1 ∘ s2, defined when the source of s1 equals the target of s2 (kernels).
/// Throws Errc::source_target_mismatch.
GtShadow compose_shadows(const GtShadow& s1, const GtShadow& s2);

/// The inverse morphism, with target = source(s).
GtShadow invert_shadow(const GtShadow& s);

/// Image of an F2 word under E_{m,f}, evaluated in the F2 quotient of `n`.
/// Equals T^{F2}_{m,f}(w).
Permutation e_image(const NfiSubgroup& n, std::int64_t m, const Permutation& f_elt,
                    const FreeWord& w);

/// Canonical word (commutator-table representative) of an element of the
/// commutator subgroup of n's F2 quotient. Throws Errc::internal_inconsistency
/// when the element is not there.
const FreeWord& canonical_f_word(const NfiSubgroup& n, const Permutation& f_elt);

}  // namespace braidshadow
