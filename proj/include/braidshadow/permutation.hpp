#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace braidshadow {

/// A bijection of {0, ..., n-1}.
///
/// Products read left to right: `p * q` applies p first, then q, so that
/// `(p * q)[i] == q[p[i]]`. Word evaluation everywhere in the library uses the
/// same convention, which makes evaluation a homomorphism from words to
/// permutations.
class Permutation {
public:
  using Point = std::uint16_t;

  Permutation() = default;

  /// Throws Errc::invalid_permutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Cycle notation with 0-based points, e.g. "(0 1)(2 3 4)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation perm_compose(const Permutation& p, const Permutation& q);
  friend Permutation direct_sum(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// Product p·q (apply p, then q). Throws Errc::degree_mismatch.
Permutation perm_compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return perm_compose(p, q);
}

/// Smallest k >= 1 with p^k = identity (the lcm of the cycle lengths).
std::uint64_t perm_order(const Permutation& p);

/// p^k for any integer k, negative exponents included.
Permutation perm_pow(const Permutation& p, std::int64_t k);

/// The permutation acting as p on the first block and as q on a second,
/// disjoint block of points.
Permutation direct_sum(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace braidshadow
