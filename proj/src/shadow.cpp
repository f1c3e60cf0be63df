#include "braidshadow/shadow.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "braidshadow/braid.hpp"
#include "braidshadow/config.hpp"
#include "braidshadow/error.hpp"

namespace braidshadow {

namespace detail {

struct SourceCell {
  std::once_flag once;
  NfiSubgroup source;
};

}  // namespace detail

namespace {

void require_f2(const FreeWord& f) {
  if (f.alphabet() != Alphabet::F2) throw Error(Errc::domain_mismatch, "f must be a word in x, y");
}

Permutation odd_power(const Permutation& p, std::int64_t m) { return perm_pow(p, 2 * m + 1); }

// The images of σ1 and σ2 under T_{m,f}, for F the image of f in B3/N.
std::pair<Permutation, Permutation> t_images(const NfiSubgroup& n, std::int64_t m,
                                             const Permutation& f) {
  return {odd_power(n.sigma1(), m), f.inverse() * odd_power(n.sigma2(), m) * f};
}

// Per-target data reused across the candidate grid.
struct Grid {
  const QuotientData* q = nullptr;
  std::vector<std::int64_t> units;
  Permutation x, y, z;
  // Images of each commutator element's word under θ, τ and τ².
  std::vector<Permutation> f_theta, f_tau, f_tau2;
};

Grid make_grid(const NfiSubgroup& n) {
  Grid g;
  g.q = &n.quotient();
  const auto n_ord = g.q->n_ord;
  for (std::uint64_t m = 0; m < n_ord; ++m) {
    if (is_unit_mod(static_cast<std::int64_t>(2 * m + 1), n_ord)) {
      g.units.push_back(static_cast<std::int64_t>(m));
    }
  }
  const std::size_t candidates = g.units.size() * g.q->f2_commutator.order();
  if (candidates > config().max_candidates) {
    throw Error(Errc::candidate_cap_exceeded,
                std::to_string(candidates) + " candidates for " + n.label() +
                    " exceed max_candidates=" + std::to_string(config().max_candidates));
  }
  g.x = g.q->x;
  g.y = g.q->y;
  g.z = g.y.inverse() * g.x.inverse();
  const WordEvaluator theta_eval({g.y, g.x});
  const WordEvaluator tau_eval({g.y, g.z});
  const WordEvaluator tau2_eval({g.z, g.x});
  for (const auto& w : g.q->f2_commutator.words()) {
    g.f_theta.push_back(theta_eval(w));
    g.f_tau.push_back(tau_eval(w));
    g.f_tau2.push_back(tau2_eval(w));
  }
  return g;
}

bool simplified_at(const Grid& g, std::int64_t m, std::size_t k) {
  const Permutation& f = g.q->f2_commutator.elements()[k];
  if (!(f * g.f_theta[k]).is_identity()) return false;
  const Permutation w = perm_pow(g.y, m) * f;
  const Permutation tw = perm_pow(g.z, m) * g.f_tau[k];
  const Permutation ttw = perm_pow(g.x, m) * g.f_tau2[k];
  return (ttw * tw * w).is_identity();
}

bool f2_onto_elt(const QuotientData& q, std::int64_t m, const Permutation& f) {
  const std::vector<Permutation> gens{odd_power(q.x, m), f.inverse() * odd_power(q.y, m) * f};
  return group_order(gens) == q.index_f2;
}

bool passes(const Grid& g, std::int64_t m, std::size_t k) {
  return simplified_at(g, m, k) && f2_onto_elt(*g.q, m, g.q->f2_commutator.elements()[k]);
}

std::vector<GtShadow> collect(const NfiSubgroup& n, const Grid& g,
                              const std::vector<char>& keep) {
  std::vector<GtShadow> out;
  const std::size_t width = g.q->f2_commutator.order();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!keep[i]) continue;
    const std::size_t k = i % width;
    out.emplace_back(n, g.units[i / width], g.q->f2_commutator.words()[k],
                     g.q->f2_commutator.elements()[k]);
  }
  return out;
}

std::string source_label(const GtShadow& s, const NfiSubgroup& src) {
  if (src.hom().images == s.target().hom().images) return s.target().label();
  return "src:" + src.content_id();
}

}  // namespace

GtShadow::GtShadow(NfiSubgroup target, std::int64_t m, FreeWord f_word, Permutation f_elt)
    : target_(std::move(target)),
      m_(m),
      f_word_(std::move(f_word)),
      f_elt_(std::move(f_elt)),
      source_(std::make_shared<detail::SourceCell>()) {}

const NfiSubgroup& GtShadow::source() const {
  if (!source_) throw Error(Errc::internal_inconsistency, "use of an empty GtShadow");
  std::call_once(source_->once, [this] {
    const GenHom t = t_hom(*this);
    NfiSubgroup src = unchecked_nfi({t.images[0], t.images[1]}, "");
    source_->source = src.with_label(source_label(*this, src));
  });
  return source_->source;
}

bool operator==(const GtShadow& a, const GtShadow& b) {
  return a.m_ == b.m_ && a.f_elt_ == b.f_elt_ &&
         a.target_.content_id() == b.target_.content_id() &&
         a.target_.hom().images == b.target_.hom().images;
}

std::int64_t mod_floor(std::int64_t a, std::uint64_t modulus) {
  const auto md = static_cast<std::int64_t>(modulus);
  const std::int64_t r = a % md;
  return r < 0 ? r + md : r;
}

bool is_unit_mod(std::int64_t a, std::uint64_t modulus) {
  if (modulus == 1) return true;
  return std::gcd(static_cast<std::uint64_t>(mod_floor(a, modulus)), modulus) == 1;
}

std::int64_t unit_inverse(std::int64_t a, std::uint64_t modulus) {
  if (!is_unit_mod(a, modulus)) {
    throw Error(Errc::unit_inverse_missing,
                std::to_string(a) + " is not a unit modulo " + std::to_string(modulus));
  }
  if (modulus == 1) return 0;
  std::int64_t old_r = mod_floor(a, modulus);
  std::int64_t r = static_cast<std::int64_t>(modulus);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  return mod_floor(old_s, modulus);
}

bool check_hexagons(const NfiSubgroup& n, std::int64_t m, const FreeWord& f) {
  require_f2(f);
  const auto& q = n.quotient();
  const Permutation& g1 = n.sigma1();
  const Permutation& g2 = n.sigma2();
  const Permutation fe = evaluate(f, std::vector<Permutation>{q.x, q.y});
  const Permutation fi = fe.inverse();
  const Permutation cm = perm_pow(q.c, m);
  const Permutation a1 = odd_power(g2, m);
  const Permutation s1 = odd_power(g1, m);
  const bool hex1 = s1 * fi * a1 * fe == fi * g1 * g2 * perm_pow(q.x, -m) * cm;
  const bool hex2 = fi * a1 * fe * s1 == g2 * g1 * perm_pow(q.y, -m) * cm * fe;
  return hex1 && hex2;
}

bool check_simplified_hexagons(const NfiSubgroup& n, std::int64_t m, const FreeWord& f) {
  require_f2(f);
  if (!in_commutator_subgroup(f)) {
    throw Error(Errc::not_in_commutator_form, "word " + to_text(f) + " has nonzero exponent sum");
  }
  const auto& q = n.quotient();
  const Permutation& x = q.x;
  const Permutation& y = q.y;
  const Permutation z = y.inverse() * x.inverse();
  const Permutation fe = evaluate(f, std::vector<Permutation>{x, y});
  const Permutation f_theta = evaluate(f, std::vector<Permutation>{y, x});
  if (!(fe * f_theta).is_identity()) return false;
  // y^m f, then its images under τ (x ↦ y, y ↦ z) and τ² (x ↦ z, y ↦ x).
  const Permutation w = perm_pow(y, m) * fe;
  const Permutation tw = perm_pow(z, m) * evaluate(f, std::vector<Permutation>{y, z});
  const Permutation ttw = perm_pow(x, m) * evaluate(f, std::vector<Permutation>{z, x});
  return (ttw * tw * w).is_identity();
}

bool f2_part_onto(const NfiSubgroup& n, std::int64_t m, const FreeWord& f) {
  require_f2(f);
  const auto& q = n.quotient();
  return f2_onto_elt(q, m, evaluate(f, std::vector<Permutation>{q.x, q.y}));
}

bool b3_part_onto(const NfiSubgroup& n, std::int64_t m, const FreeWord& f) {
  require_f2(f);
  const auto& q = n.quotient();
  const auto [t1, t2] = t_images(n, m, evaluate(f, std::vector<Permutation>{q.x, q.y}));
  const std::vector<Permutation> gens{t1, t2};
  return group_order(gens) == q.b3_quotient.order();
}

bool is_shadow(const NfiSubgroup& n, std::int64_t m, const FreeWord& f) {
  require_f2(f);
  const auto& q = n.quotient();
  if (!is_unit_mod(2 * m + 1, q.n_ord)) return false;
  if (!q.f2_commutator.contains(evaluate(f, std::vector<Permutation>{q.x, q.y}))) return false;
  return check_hexagons(n, m, f) && f2_part_onto(n, m, f);
}

GtShadow make_shadow(const NfiSubgroup& n, std::int64_t m, const FreeWord& f) {
  if (!is_shadow(n, m, f)) {
    throw Error(Errc::not_a_shadow,
                "[" + std::to_string(m) + ", " + to_text(f) + "] is not a GT-shadow for " +
                    n.label());
  }
  const auto& q = n.quotient();
  const Permutation fe = evaluate(f, std::vector<Permutation>{q.x, q.y});
  FreeWord word = in_commutator_subgroup(f) ? reduce_word(f) : canonical_f_word(n, fe);
  return GtShadow(n, mod_floor(m, q.n_ord), std::move(word), fe);
}

GtShadow identity_shadow(const NfiSubgroup& n) {
  return GtShadow(n, 0, FreeWord(Alphabet::F2), Permutation::identity(n.degree()));
}

GenHom t_hom(const GtShadow& s) {
  const NfiSubgroup& n = s.target();
  const auto [t1, t2] = t_images(n, s.m(), s.f_elt());
  if (t1 * t2 * t1 != t2 * t1 * t2) {
    throw Error(Errc::internal_inconsistency, "T_{m,f} violates the braid relation");
  }
  const Permutation td = t1 * t2 * t1;
  if (td * td != odd_power(n.quotient().c, s.m())) {
    throw Error(Errc::internal_inconsistency, "T_{m,f}(c) differs from c^{2m+1}");
  }
  return GenHom{Domain::B3, {t1, t2}};
}

const NfiSubgroup& shadow_source(const GtShadow& s) { return s.source(); }

std::vector<GtShadow> enumerate_shadows_serial(const NfiSubgroup& n) {
  const Grid g = make_grid(n);
  const std::size_t width = g.q->f2_commutator.order();
  std::vector<char> keep(g.units.size() * width, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = passes(g, g.units[i / width], i % width);
  return collect(n, g, keep);
}

std::vector<GtShadow> enumerate_shadows_parallel(const NfiSubgroup& n) {
  const Grid g = make_grid(n);
  const std::size_t width = g.q->f2_commutator.order();
  std::vector<char> keep(g.units.size() * width, 0);
  const auto total = static_cast<std::int64_t>(keep.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto u = static_cast<std::size_t>(i);
    keep[u] = passes(g, g.units[u / width], u % width);
  }
  return collect(n, g, keep);
}

namespace {

std::mutex& memo_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::string, std::shared_ptr<const std::vector<GtShadow>>>& memo() {
  static std::map<std::string, std::shared_ptr<const std::vector<GtShadow>>> table;
  return table;
}

}  // namespace

const std::vector<GtShadow>& enumerate_shadows(const NfiSubgroup& n) {
  const std::string key = n.content_id();
  {
    std::lock_guard lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return *it->second;
  }
  auto computed = std::make_shared<const std::vector<GtShadow>>(enumerate_shadows_parallel(n));
  std::lock_guard lock(memo_mutex());
  auto [it, inserted] = memo().emplace(key, std::move(computed));
  return *it->second;
}

void clear_shadow_memo() {
  std::lock_guard lock(memo_mutex());
  memo().clear();
}

Permutation e_image(const NfiSubgroup& n, std::int64_t m, const Permutation& f_elt,
                    const FreeWord& w) {
  require_f2(w);
  const auto& q = n.quotient();
  const WordEvaluator eval(
      {odd_power(q.x, m), f_elt.inverse() * odd_power(q.y, m) * f_elt});
  return eval(w);
}

const FreeWord& canonical_f_word(const NfiSubgroup& n, const Permutation& f_elt) {
  const auto& comm = n.quotient().f2_commutator;
  auto idx = comm.index_of(f_elt);
  if (!idx) {
    throw Error(Errc::internal_inconsistency,
                "element " + f_elt.to_cycle_string() + " is not in the commutator subgroup");
  }
  return comm.words()[*idx];
}

GtShadow compose_shadows(const GtShadow& s1, const GtShadow& s2) {
  if (!nfi_equal(s1.source(), s2.target())) {
    throw Error(Errc::source_target_mismatch,
                "source of the first shadow differs from the target of the second");
  }
  const NfiSubgroup& n = s1.target();
  const auto n_ord = n.quotient().n_ord;
  const std::int64_t m = mod_floor(2 * s1.m() * s2.m() + s1.m() + s2.m(), n_ord);
  const Permutation f = s1.f_elt() * e_image(n, s1.m(), s1.f_elt(), s2.f_word());
  return GtShadow(n, m, canonical_f_word(n, f), f);
}

GtShadow invert_shadow(const GtShadow& s) {
  const NfiSubgroup& n = s.target();
  const NfiSubgroup& k = s.source();
  const auto n_ord = n.quotient().n_ord;
  const std::int64_t inv = unit_inverse(2 * s.m() + 1, n_ord);
  const std::int64_t m = mod_floor(-mod_floor(inv * mod_floor(s.m(), n_ord), n_ord), n_ord);

  // Isomorphism table F2/K_F2 → F2/N_F2; look up the preimage of f⁻¹.
  const Permutation wanted = s.f_elt().inverse();
  const auto& kq = k.quotient();
  const WordEvaluator eval({odd_power(n.quotient().x, s.m()),
                            s.f_elt().inverse() * odd_power(n.quotient().y, s.m()) * s.f_elt()});
  for (std::size_t i = 0; i < kq.f2_quotient.order(); ++i) {
    if (eval(kq.f2_quotient.words()[i]) == wanted) {
      const Permutation& e = kq.f2_quotient.elements()[i];
      return GtShadow(k, m, canonical_f_word(k, e), e);
    }
  }
  throw Error(Errc::internal_inconsistency, "f^-1 has no preimage under T^{F2}_{m,f}");
}

}  // namespace braidshadow
