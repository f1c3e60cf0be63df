#include "braidshadow/nfi.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "braidshadow/braid.hpp"
#include "braidshadow/config.hpp"
#include "braidshadow/error.hpp"

namespace braidshadow {

namespace detail {

struct QuotientCell {
  std::once_flag data_once;
  std::unique_ptr<QuotientData> data;
  std::once_flag index_once;
  std::size_t index_b3 = 0;
};

struct NfiState {
  GenHom hom;
  std::string label;
  std::string content_id;
  std::shared_ptr<QuotientCell> cell;
};

}  // namespace detail

namespace {

using Point = Permutation::Point;
using ImagePair = std::pair<std::vector<Point>, std::vector<Point>>;

std::string hash_pair(const Permutation& a, const Permutation& b) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(a.degree());
  for (auto v : a.images()) mix(v);
  for (auto v : b.images()) mix(v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const detail::NfiState& state_of(const std::shared_ptr<detail::NfiState>& s) {
  if (!s) throw Error(Errc::internal_inconsistency, "use of an empty NfiSubgroup");
  return *s;
}

std::vector<Point> to_points(std::span<const Point> images) {
  return {images.begin(), images.end()};
}

// Transitive action of (p, q) on `orbit`, relabelled by breadth-first search
// from `start`, applying p before q at each point.
ImagePair relabel_orbit(const Permutation& p, const Permutation& q,
                        const std::vector<Point>& orbit, Point start,
                        std::vector<int>& label_scratch) {
  const std::size_t k = orbit.size();
  std::vector<Point> order;
  order.reserve(k);
  order.push_back(start);
  label_scratch[start] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Permutation* g : {&p, &q}) {
      const Point next = (*g)[order[head]];
      if (label_scratch[next] < 0) {
        label_scratch[next] = static_cast<int>(order.size());
        order.push_back(next);
      }
    }
  }
  ImagePair out{std::vector<Point>(k), std::vector<Point>(k)};
  for (std::size_t i = 0; i < k; ++i) {
    out.first[i] = static_cast<Point>(label_scratch[p[order[i]]]);
    out.second[i] = static_cast<Point>(label_scratch[q[order[i]]]);
  }
  for (Point v : order) label_scratch[v] = -1;
  return out;
}

std::vector<std::vector<Point>> orbits(const Permutation& p, const Permutation& q) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orbit{static_cast<Point>(s)};
    seen[s] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Permutation* g : {&p, &q}) {
        const Point next = (*g)[orbit[head]];
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

// Canonical forms of the distinct nontrivial orbit actions, sorted.
std::vector<ImagePair> canonical_orbits(const Permutation& p, const Permutation& q) {
  std::vector<int> scratch(p.degree(), -1);
  std::set<std::pair<std::size_t, ImagePair>> forms;
  for (const auto& orbit : orbits(p, q)) {
    if (orbit.size() == 1) continue;
    ImagePair best;
    bool have = false;
    for (Point s : orbit) {
      ImagePair cand = relabel_orbit(p, q, orbit, s, scratch);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    }
    forms.emplace(orbit.size(), std::move(best));
  }
  std::vector<ImagePair> out;
  for (auto& f : forms) out.push_back(f.second);
  return out;
}

ImagePair concatenate(const std::vector<ImagePair>& blocks) {
  ImagePair out;
  for (const auto& b : blocks) {
    const auto shift = static_cast<Point>(out.first.size());
    for (Point v : b.first) out.first.push_back(static_cast<Point>(v + shift));
    for (Point v : b.second) out.second.push_back(static_cast<Point>(v + shift));
  }
  return out;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<Point> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Distinct canonical presentations of (p, q) ⊕ ρ over all braid pairs of S_n.
std::set<ImagePair> scan_degree(int n, bool parallel) {
  const auto perms = symmetric_group(n);
  const auto rho = rho_hom();
  const auto count = static_cast<std::int64_t>(perms.size());
  std::vector<std::set<ImagePair>> partial(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    const Permutation& p = perms[static_cast<std::size_t>(i)];
    auto& local = partial[static_cast<std::size_t>(i)];
    for (const auto& q : perms) {
      if (p * q * p != q * p * q) continue;
      auto pair = canonical_orbit_pair(direct_sum(p, rho.images[0]), direct_sum(q, rho.images[1]));
      local.emplace(to_points(pair.first.images()), to_points(pair.second.images()));
    }
  }
  std::set<ImagePair> merged;
  for (auto& s : partial) merged.merge(s);
  return merged;
}

std::vector<NfiSubgroup> catalog_impl(int max_degree, bool parallel) {
  if (max_degree < 1) throw Error(Errc::domain_mismatch, "catalog degree must be at least 1");
  if (max_degree > config().max_catalog_degree) {
    throw Error(Errc::size_cap_exceeded,
                "catalog degree " + std::to_string(max_degree) + " exceeds max_catalog_degree=" +
                    std::to_string(config().max_catalog_degree));
  }
  std::set<ImagePair> presentations;
  for (int n = 1; n <= max_degree; ++n) presentations.merge(scan_degree(n, parallel));

  std::vector<NfiSubgroup> candidates;
  candidates.reserve(presentations.size());
  for (const auto& [a, b] : presentations) {
    candidates.push_back(unchecked_nfi({Permutation(a), Permutation(b)}, ""));
  }
  const auto count = static_cast<std::int64_t>(candidates.size());
  std::vector<std::string> failures(candidates.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      candidates[static_cast<std::size_t>(i)].quotient();
    } catch (const Error& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw Error(Errc::size_cap_exceeded, "catalog quotient failed: " + f);
  }

  using Key = std::tuple<std::size_t, std::uint64_t, std::size_t>;
  std::map<Key, std::vector<NfiSubgroup>> buckets;
  std::vector<NfiSubgroup> kept;
  for (const auto& cand : candidates) {
    const auto& q = cand.quotient();
    auto& bucket = buckets[Key{q.index_pb3, q.n_ord, q.index_f2}];
    bool dup = false;
    for (const auto& rep : bucket) {
      if (nfi_equal(rep, cand)) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    bucket.push_back(cand);
    kept.push_back(cand);
  }
  std::sort(kept.begin(), kept.end(), [](const NfiSubgroup& a, const NfiSubgroup& b) {
    const auto ia = a.quotient().index_pb3;
    const auto ib = b.quotient().index_pb3;
    if (ia != ib) return ia < ib;
    return a.content_id() < b.content_id();
  });
  std::vector<NfiSubgroup> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "cat%03zu", i);
    out.push_back(kept[i].with_label(buf));
  }
  return out;
}

std::unique_ptr<QuotientData> compute_quotient(const GenHom& hom) {
  auto q = std::make_unique<QuotientData>();
  const Permutation& g1 = hom.images[0];
  const Permutation& g2 = hom.images[1];
  q->x = g1 * g1;
  q->y = g2 * g2;
  const Permutation delta = g1 * g2 * g1;
  q->c = delta * delta;
  q->b3_quotient = generate_group(hom.images, Alphabet::B3);
  const std::vector<Permutation> pb3_gens{q->x, q->y, q->c};
  q->pb3_quotient = generate_group(pb3_gens, Alphabet::PB3);
  const std::vector<Permutation> f2_gens{q->x, q->y};
  q->f2_quotient = generate_group(f2_gens, Alphabet::F2);
  q->f2_commutator = commutator_subgroup(q->f2_quotient);
  q->n_ord = std::lcm(std::lcm(perm_order(q->x), perm_order(q->y)), perm_order(q->c));
  q->index_pb3 = q->pb3_quotient.order();
  q->index_f2 = q->f2_quotient.order();
  return q;
}

}  // namespace

const GenHom& NfiSubgroup::hom() const { return state_of(state_).hom; }
const std::string& NfiSubgroup::label() const { return state_of(state_).label; }
const std::string& NfiSubgroup::content_id() const { return state_of(state_).content_id; }

const QuotientData& NfiSubgroup::quotient() const {
  const auto& st = state_of(state_);
  std::call_once(st.cell->data_once, [&st] { st.cell->data = compute_quotient(st.hom); });
  return *st.cell->data;
}

std::size_t NfiSubgroup::index_b3() const {
  const auto& st = state_of(state_);
  std::call_once(st.cell->index_once, [&st] {
    st.cell->index_b3 = st.cell->data ? st.cell->data->b3_quotient.order()
                                      : group_order(st.hom.images);
  });
  return st.cell->index_b3;
}

NfiSubgroup NfiSubgroup::with_label(std::string label) const {
  const auto& st = state_of(state_);
  NfiSubgroup out;
  out.state_ = std::make_shared<detail::NfiState>(
      detail::NfiState{st.hom, std::move(label), st.content_id, st.cell});
  return out;
}

GenHom rho_hom() {
  return GenHom{Domain::B3, {Permutation({1, 0, 2}), Permutation({0, 2, 1})}};
}

NfiSubgroup unchecked_nfi(std::pair<Permutation, Permutation> images, std::string label) {
  if (images.first.degree() != images.second.degree()) {
    throw Error(Errc::degree_mismatch, "sigma1 and sigma2 images differ in degree");
  }
  NfiSubgroup out;
  auto st = std::make_shared<detail::NfiState>();
  st->content_id = hash_pair(images.first, images.second);
  st->hom = GenHom{Domain::B3, {std::move(images.first), std::move(images.second)}};
  st->label = std::move(label);
  st->cell = std::make_shared<detail::QuotientCell>();
  out.state_ = std::move(st);
  return out;
}

NfiSubgroup new_nfi(std::pair<Permutation, Permutation> images, std::string label) {
  NfiSubgroup n = unchecked_nfi(std::move(images), std::move(label));
  if (n.degree() == 0) throw Error(Errc::degree_mismatch, "images must have positive degree");
  if (!n.hom().is_well_defined()) {
    throw Error(Errc::braid_relation_violated, "images do not satisfy g1 g2 g1 = g2 g1 g2");
  }
  if (!kernel_contained(n.hom(), rho_hom(), n.index_b3())) {
    throw Error(Errc::kernel_not_in_pb3, "kernel is not contained in PB3");
  }
  return n;
}

NfiSubgroup pb3_object() {
  auto rho = rho_hom();
  return new_nfi({rho.images[0], rho.images[1]}, "PB3");
}

const QuotientData& quotient_data(const NfiSubgroup& n) { return n.quotient(); }

namespace {

// Containment answers keyed by the exact image arrays of both presentations.
using ContainmentKey = std::pair<std::vector<Permutation>, std::vector<Permutation>>;

std::mutex& containment_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<ContainmentKey, bool>& containment_memo() {
  static std::map<ContainmentKey, bool> table;
  return table;
}

}  // namespace

bool nfi_contains(const NfiSubgroup& n, const NfiSubgroup& h) {
  if (n.index_b3() % h.index_b3() != 0) return false;
  ContainmentKey key{n.hom().images, h.hom().images};
  {
    std::lock_guard lock(containment_mutex());
    auto it = containment_memo().find(key);
    if (it != containment_memo().end()) return it->second;
  }
  const bool result = kernel_contained(n.hom(), h.hom(), n.index_b3());
  std::lock_guard lock(containment_mutex());
  containment_memo().emplace(std::move(key), result);
  return result;
}

bool nfi_equal(const NfiSubgroup& n, const NfiSubgroup& k) {
  if (n.content_id() == k.content_id() && n.hom().images == k.hom().images) return true;
  // Equal finite indices plus one containment force equality.
  return n.index_b3() == k.index_b3() && nfi_contains(n, k);
}

NfiSubgroup nfi_intersect(std::span<const NfiSubgroup> list) {
  if (list.empty()) throw Error(Errc::domain_mismatch, "intersection of an empty list");
  std::set<std::pair<std::size_t, ImagePair>> seen;
  std::vector<ImagePair> blocks;
  for (const auto& n : list) {
    for (auto& form : canonical_orbits(n.sigma1(), n.sigma2())) {
      const std::size_t size = form.first.size();
      if (seen.emplace(size, form).second) blocks.push_back(std::move(form));
    }
  }
  ImagePair joined = concatenate(blocks);
  if (joined.first.empty()) {
    return new_nfi({list.front().sigma1(), list.front().sigma2()}, "");
  }
  std::string label;
  for (const auto& n : list) {
    if (!label.empty()) label += " & ";
    label += n.label().empty() ? n.content_id() : n.label();
  }
  return new_nfi({Permutation(std::move(joined.first)), Permutation(std::move(joined.second))},
                 list.size() == 1 ? label : "(" + label + ")");
}

GenHom f2_restriction(const NfiSubgroup& n) {
  const auto& g1 = n.sigma1();
  const auto& g2 = n.sigma2();
  return GenHom{Domain::F2, {g1 * g1, g2 * g2}};
}

NfiSubgroup from_f2_quotient(const Permutation& psi_x, const Permutation& psi_y) {
  const std::vector<Permutation> gens{psi_x, psi_y};
  const GeneratedGroup g = generate_group(gens, Alphabet::F2);
  const WordEvaluator psi(gens);
  const std::size_t order = g.order();
  const std::size_t degree = order * kCosetCount;
  if (degree > 0xffff) throw Error(Errc::size_cap_exceeded, "coset action too large");

  // Point (k, s) is the coset of ker ψ̃ containing h·t_s where ψ̃(h) = g.elements()[k].
  std::array<std::vector<Point>, 2> images{std::vector<Point>(degree), std::vector<Point>(degree)};
  for (std::size_t s = 0; s < kCosetCount; ++s) {
    for (std::uint8_t gen = 0; gen < 2; ++gen) {
      B3NormalForm nf;
      nf.coset = static_cast<Coset>(s);
      push_letter(nf, Letter{gen, 1});
      const Permutation step = psi(nf.f2_part);
      const auto next = static_cast<std::size_t>(nf.coset);
      for (std::size_t k = 0; k < order; ++k) {
        const std::size_t target = *g.index_of(g.elements()[k] * step);
        images[gen][k * kCosetCount + s] = static_cast<Point>(target * kCosetCount + next);
      }
    }
  }
  return new_nfi({Permutation(std::move(images[0])), Permutation(std::move(images[1]))},
                 "core(" + psi_x.to_cycle_string() + "," + psi_y.to_cycle_string() + ")");
}

std::pair<Permutation, Permutation> canonical_orbit_pair(const Permutation& p,
                                                         const Permutation& q) {
  if (p.degree() != q.degree()) throw Error(Errc::degree_mismatch, "pair differs in degree");
  ImagePair joined = concatenate(canonical_orbits(p, q));
  if (joined.first.empty()) return {Permutation::identity(1), Permutation::identity(1)};
  return {Permutation(std::move(joined.first)), Permutation(std::move(joined.second))};
}

std::vector<NfiSubgroup> catalog_search(int max_degree) { return catalog_impl(max_degree, true); }

std::vector<NfiSubgroup> catalog_search_serial(int max_degree) {
  return catalog_impl(max_degree, false);
}

}  // namespace braidshadow
