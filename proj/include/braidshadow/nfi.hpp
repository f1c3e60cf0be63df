#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidshadow/group.hpp"
#include "braidshadow/permutation.hpp"

namespace braidshadow {

/// Finite quotients attached to N = ker(φ) for φ: B3 → S_n.
struct QuotientData {
  GeneratedGroup b3_quotient;    // ≅ B3/N, words in σ1, σ2
  GeneratedGroup pb3_quotient;   // ≅ PB3/N, words in x12, x23, c
  GeneratedGroup f2_quotient;    // ≅ F2/N_F2, words in x, y
  GeneratedGroup f2_commutator;  // [F2/N_F2, F2/N_F2], words literally in [F2, F2]
  std::uint64_t n_ord = 1;       // lcm of the orders of x12 N, x23 N, c N
  std::size_t index_pb3 = 1;     // |PB3 : N|
  std::size_t index_f2 = 1;      // |F2 : N_F2|

  // Images of the distinguished elements.
  Permutation x;  // φ(σ1²)
  Permutation y;  // φ(σ2²)
  Permutation c;  // φ((σ1σ2σ1)²)
};

namespace detail {
struct NfiState;
}

/// A finite-index normal subgroup N ≤ PB3 of B3, stored as the kernel of an
/// explicit homomorphism B3 → S_n. Cheap to copy; quotient data is computed
/// once on first use and shared between copies.
class NfiSubgroup {
public:
  NfiSubgroup() = default;

  const GenHom& hom() const;
  const Permutation& sigma1() const { return hom().images[0]; }
  const Permutation& sigma2() const { return hom().images[1]; }
  std::size_t degree() const { return hom().degree(); }
  const std::string& label() const;
  /// Hash of the pair of image arrays; identifies the presentation, not the kernel.
  const std::string& content_id() const;

  const QuotientData& quotient() const;
  /// |B3 : N| without forcing the rest of the quotient data.
  std::size_t index_b3() const;

  NfiSubgroup with_label(std::string label) const;

  bool valid() const noexcept { return state_ != nullptr; }

private:
  friend NfiSubgroup new_nfi(std::pair<Permutation, Permutation>, std::string);
  friend NfiSubgroup unchecked_nfi(std::pair<Permutation, Permutation>, std::string);
  std::shared_ptr<detail::NfiState> state_;
};

/// The standard map ρ: σ1 ↦ (0 1), σ2 ↦ (1 2) onto S3.
GenHom rho_hom();

/// Validates the braid relation and ker ≤ PB3 (Errc::braid_relation_violated,
/// Errc::kernel_not_in_pb3, Errc::degree_mismatch).
NfiSubgroup new_nfi(std::pair<Permutation, Permutation> images, std::string label);

/// Skips validation. For callers that already hold a certificate.
NfiSubgroup unchecked_nfi(std::pair<Permutation, Permutation> images, std::string label);

/// PB3 itself, realised by ρ.
NfiSubgroup pb3_object();

const QuotientData& quotient_data(const NfiSubgroup& n);

/// N ≤ H.
bool nfi_contains(const NfiSubgroup& n, const NfiSubgroup& h);
bool nfi_equal(const NfiSubgroup& n, const NfiSubgroup& k);

/// Intersection of kernels, realised on the disjoint union of the domains.
/// Orbits that repeat an earlier action are dropped.
NfiSubgroup nfi_intersect(std::span<const NfiSubgroup> list);

/// The F2-restriction x ↦ φ(σ1²), y ↦ φ(σ2²); its kernel is N_F2.
GenHom f2_restriction(const NfiSubgroup& n);

/// Normal core of ker ψ̃ where ψ̃: PB3 → G sends x12 ↦ ψ(x), x23 ↦ ψ(y),
/// c ↦ 1, realised as the action of B3 on the cosets of ker ψ̃.
/// Guarantees N_F2 ≤ ker ψ.
NfiSubgroup from_f2_quotient(const Permutation& psi_x, const Permutation& psi_y);

/// Every distinct kernel coming from pairs (p, q) in S_n, n ≤ max_degree, with
/// pqp = qpq, each paired with ρ. Sorted by (index_pb3, content_id).
/// Runs the pair scan in parallel; the result does not depend on thread count.
std::vector<NfiSubgroup> catalog_search(int max_degree);
/// Single-threaded reference for catalog_search.
std::vector<NfiSubgroup> catalog_search_serial(int max_degree);

/// Canonical relabelling of the orbits of ⟨p, q⟩: the distinct orbit actions
/// (fixed points dropped) in a canonical form, concatenated. The kernel of the
/// result equals the kernel of (p, q) whenever (p, q) moves some point.
std::pair<Permutation, Permutation> canonical_orbit_pair(const Permutation& p,
                                                         const Permutation& q);

}  // namespace braidshadow
