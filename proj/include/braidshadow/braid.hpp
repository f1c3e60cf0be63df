#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

#include "braidshadow/word.hpp"

namespace braidshadow {

// Common constant words.
FreeWord word_x();      // x = x12
FreeWord word_y();      // y = x23
FreeWord word_z();      // z = y⁻¹x⁻¹
FreeWord word_sigma1();
FreeWord word_sigma2();
FreeWord word_delta();  // Δ = σ1σ2σ1
FreeWord word_c();      // c = Δ²

/// Substitutes x ↦ x_image, y ↦ y_image into an F2 word and reduces.
FreeWord f2_endo_apply(const FreeWord& w, const FreeWord& x_image, const FreeWord& y_image);

/// θ: x ↦ y, y ↦ x.
FreeWord theta(const FreeWord& w);
/// τ: x ↦ y, y ↦ y⁻¹x⁻¹.
FreeWord tau(const FreeWord& w);

/// E_{m,f}: x ↦ x^{2m+1}, y ↦ f⁻¹ y^{2m+1} f. m may be negative.
FreeWord e_endo(std::int64_t m, const FreeWord& f, const FreeWord& w);

/// (m1, f1) • (m2, f2) = (2 m1 m2 + m1 + m2, f1 · E_{m1,f1}(f2)).
std::pair<std::int64_t, FreeWord> bullet_monoid(std::int64_t m1, const FreeWord& f1,
                                               std::int64_t m2, const FreeWord& f2);

/// x ↦ σ1², y ↦ σ2².
FreeWord embed_f2_in_b3(const FreeWord& w);

/// Coset representatives of PB3 in B3, in this fixed order.
enum class Coset : std::uint8_t { e, s1, s2, s1s2, s2s1, delta };
inline constexpr std::size_t kCosetCount = 6;

FreeWord transversal_word(Coset s);
std::string_view coset_name(Coset s);

/// The unique decomposition w = f2_part · c^c_exponent · transversal(coset)
/// with f2_part a reduced word in x, y.
struct B3NormalForm {
  FreeWord f2_part{Alphabet::F2};
  std::int64_t c_exponent = 0;
  Coset coset = Coset::e;

  friend bool operator==(const B3NormalForm&, const B3NormalForm&) = default;
};

B3NormalForm b3_normal_form(const FreeWord& w);

/// Rebuilds a B3 word from a normal form.
FreeWord reassemble(const B3NormalForm& nf);

/// Multiplies a normal form on the right by one B3 letter.
void push_letter(B3NormalForm& nf, Letter letter);

/// Exact equality in B3 through the faithful Artin action on F3:
/// σi sends a_i ↦ a_i a_{i+1} a_i⁻¹ and a_{i+1} ↦ a_i.
bool artin_equal(const FreeWord& u, const FreeWord& v);

/// Images of a1, a2, a3 under the automorphism of w.
std::array<FreeWord, 3> artin_action(const FreeWord& w);

}  // namespace braidshadow
