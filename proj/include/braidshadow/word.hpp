#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidshadow {

/// Which generators a word is written in.
///
///   B3      σ1, σ2            text: a b (inverses A B)
///   F2      x = σ1², y = σ2²  text: x y (inverses X Y)
///   F3      a1, a2, a3 (free group acted on by B3; used by the equality oracle)
///   PB3     x12, x23, c
///   Generic generator indices of an arbitrary generated group
enum class Alphabet : std::uint8_t { B3, F2, F3, PB3, Generic };

struct Letter {
  std::uint8_t gen = 0;
  std::int8_t sign = 1;

  Letter inverse() const noexcept { return {gen, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(Alphabet alphabet) : alphabet_(alphabet) {}
  /// Stores the letters as given; use reduce_word() to freely reduce.
  FreeWord(Alphabet alphabet, std::vector<Letter> letters)
      : alphabet_(alphabet), letters_(std::move(letters)) {}

  static FreeWord generator(Alphabet alphabet, std::uint8_t gen, int sign = 1);

  Alphabet alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool is_reduced() const noexcept;
  FreeWord inverse() const;
  /// Reduced w^k; negative k gives powers of the inverse.
  FreeWord pow(std::int64_t k) const;
  /// Sum of the signs of all occurrences of `gen`.
  std::int64_t exponent_sum(std::uint8_t gen) const noexcept;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
  Alphabet alphabet_ = Alphabet::F2;
  std::vector<Letter> letters_;
};

/// Free reduction (cancels adjacent g g⁻¹ pairs). Idempotent.
FreeWord reduce_word(const FreeWord& w);

/// Reduced concatenation. Throws Errc::domain_mismatch on differing alphabets.
FreeWord operator*(const FreeWord& u, const FreeWord& v);

/// Appends `suffix` to `acc` in place, cancelling at the seam.
void append_reduced(std::vector<Letter>& acc, const std::vector<Letter>& suffix);
void append_reduced(std::vector<Letter>& acc, Letter letter);

/// Text form: a/b/A/B for B3 and x/y/X/Y for F2; the empty word is "".
/// Other alphabets get a debugging form.
std::string to_text(const FreeWord& w);

/// Parses the B3 or F2 text form. Rejects characters outside the alphabet
/// with Errc::parse_error. The result is freely reduced.
FreeWord parse_word(Alphabet alphabet, std::string_view text);

/// True iff w lies in the commutator subgroup of the free group, i.e. every
/// generator has exponent sum zero.
bool in_commutator_subgroup(const FreeWord& w) noexcept;

}  // namespace braidshadow
