#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "braidshadow/nfi.hpp"
#include "braidshadow/shadow.hpp"

namespace braidshadow {

/// One connected component of the groupoid of GT-shadows.
struct ComponentReport {
  /// Distinct kernels, in discovery order; objects[0] is the starting object.
  std::vector<NfiSubgroup> objects;
  /// (source index, target index) ↦ morphisms, each with target objects[target].
  std::map<std::pair<std::size_t, std::size_t>, std::vector<GtShadow>> morphisms;
  bool isolated = true;
  /// Intersection of all objects.
  NfiSubgroup diamond;

  /// Index of the object whose kernel equals `k`, if any.
  std::optional<std::size_t> find(const NfiSubgroup& k) const;
  std::size_t morphism_count() const;
};

ComponentReport connected_component(const NfiSubgroup& n);

/// Every GT-shadow with target N is settled (its source is N).
bool is_isolated(const NfiSubgroup& n);

/// Intersection of the objects of the component of N. The result is checked
/// to be isolated and contained in N (Errc::internal_inconsistency otherwise).
NfiSubgroup diamond(const NfiSubgroup& n);
NfiSubgroup diamond(const ComponentReport& component);

/// R_{N,H}: the same pair read modulo H. Throws Errc::not_contained.
GtShadow reduce_shadow(const GtShadow& s, const NfiSubgroup& h);

/// Image of R_{N,H} on all of GT(N), deduplicated, in GT(H) order.
std::vector<GtShadow> reduction_image(const NfiSubgroup& n, const NfiSubgroup& h);

/// Whether s (target H) lies in the image of R_{N,H}. Requires N ≤ H.
bool survives(const GtShadow& s, const NfiSubgroup& n);

struct FakeCertificate {
  NfiSubgroup witness;                // N ≤ target with s outside the image
  std::vector<GtShadow> reduce_image; // the full image R_{N,H}(GT(N))
};

/// One-sided answer: either a certificate of fakeness, or the list of
/// subgroups into which the shadow was seen to survive.
struct GenuinenessVerdict {
  std::optional<FakeCertificate> fake;
  std::vector<NfiSubgroup> checked;

  bool is_fake() const noexcept { return fake.has_value(); }
};

GenuinenessVerdict genuine_to_depth(const GtShadow& s, std::span<const NfiSubgroup> catalog);

/// Recomputes the reduction image for the witness and checks the certificate.
bool verify_fake_certificate(const GtShadow& s, const FakeCertificate& cert);

struct MainLineEdge {
  std::size_t finer = 0;    // N
  std::size_t coarser = 0;  // H, with N ≤ H
  /// table[i] = index in groups[coarser] of R_{N,H}(groups[finer][i]).
  std::vector<std::size_t> table;
};

struct MainLineDiagram {
  std::vector<NfiSubgroup> objects;
  std::vector<std::vector<GtShadow>> groups;
  std::vector<MainLineEdge> edges;
  /// Compatible families: limit[k][i] indexes groups[i].
  std::vector<std::vector<std::size_t>> limit;
};

/// The Main Line diagram over a finite list of isolated objects and its limit.
/// Throws Errc::non_isolated.
MainLineDiagram main_line_limit(std::span<const NfiSubgroup> catalog);

}  // namespace braidshadow
