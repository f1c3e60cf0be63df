#include "braidshadow/permutation.hpp"

#include <numeric>
#include <sstream>

#include "braidshadow/error.hpp"

namespace braidshadow {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(Errc::invalid_permutation, "image array is not a bijection");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    std::vector<Point> pts(cycle);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] >= degree) throw Error(Errc::invalid_permutation, "cycle point out of range");
      images[pts[i]] = pts[(i + 1) % pts.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out << ' ';
      out << i;
      first = false;
      i = images_[i];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(Errc::degree_mismatch, "cannot compose permutations of degree " +
                                           std::to_string(p.degree()) + " and " +
                                           std::to_string(q.degree()));
  }
  std::vector<Permutation::Point> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = q.images_[p.images_[i]];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

std::uint64_t perm_order(const Permutation& p) {
  std::vector<bool> done(p.degree(), false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t i = start; !done[i]; i = p[i]) {
      done[i] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation perm_pow(const Permutation& p, std::int64_t k) {
  const auto order = static_cast<std::int64_t>(perm_order(p));
  std::int64_t e = k % order;
  if (e < 0) e += order;
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  const std::size_t n = p.degree();
  std::vector<Permutation::Point> images(n + q.degree());
  for (std::size_t i = 0; i < n; ++i) images[i] = p[i];
  for (std::size_t i = 0; i < q.degree(); ++i) {
    images[n + i] = static_cast<Permutation::Point>(n + q[i]);
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace braidshadow
