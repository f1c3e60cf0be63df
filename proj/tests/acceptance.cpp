// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "braidshadow/braid.hpp"
#include "braidshadow/config.hpp"
#include "braidshadow/error.hpp"
#include "braidshadow/groupoid.hpp"
#include "braidshadow/io.hpp"

using namespace braidshadow;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetTrivial = 1.0;
constexpr double kBudgetOracle = 60.0;
constexpr double kBudgetSuite = 600.0;

constexpr int kOracleWords = 10'000;
constexpr std::size_t kOracleMaxLength = 40;
constexpr int kAutomorphismWords = 1'000;
constexpr std::size_t kAutomorphismMaxLength = 40;
constexpr int kSmallCatalogDegree = 4;
constexpr int kWideCatalogDegree = 6;
// Degree 7 is the smallest catalog with non-isolated objects.
constexpr int kDiamondCatalogDegree = 7;

struct PinnedKernel {
  const char* label;
  const char* content_id;
  std::size_t gt_count;
};

constexpr PinnedKernel kPinnedDegree4[] = {
    {"cat000", "d6750ede230e0aa0", 1}, {"cat001", "12432a2e1d4ec024", 2},
    {"cat002", "e305a1da102af1e5", 2}, {"cat003", "c9d8e52796c0bd84", 2},
    {"cat004", "29777b127ee0c4a4", 6},
};

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// Equality of morphisms across presentations: f N_F2 is compared through the
// word, since two presentations of one kernel label its elements differently.
bool same(const GtShadow& a, const GtShadow& b) {
  if (a.m() != b.m() || !nfi_equal(a.target(), b.target())) return false;
  const auto& q = b.target().quotient();
  return evaluate(a.f_word(), std::vector<Permutation>{q.x, q.y}) == b.f_elt();
}

FreeWord random_word(std::mt19937_64& rng, Alphabet alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> letters(len(rng));
  for (auto& l : letters) {
    const int v = pick(rng);
    l = Letter{static_cast<std::uint8_t>(v & 1), static_cast<std::int8_t>(v & 2 ? -1 : 1)};
  }
  return FreeWord(alphabet, std::move(letters));
}

const std::vector<NfiSubgroup>& small_catalog() {
  static const auto cat = catalog_search(kSmallCatalogDegree);
  return cat;
}

const std::vector<NfiSubgroup>& wide_catalog() {
  static const auto cat = catalog_search(kWideCatalogDegree);
  return cat;
}

const std::vector<NfiSubgroup>& diamond_catalog() {
  static const auto cat = [] {
    Config c = config();
    c.max_catalog_degree = kDiamondCatalogDegree;
    ScopedConfig scoped(c);
    return catalog_search(kDiamondCatalogDegree);
  }();
  return cat;
}

// The degree-6 catalog together with the distinct pairwise intersections of
// its objects; the intersections supply containment chains and depth.
const std::vector<NfiSubgroup>& closed_corpus() {
  static const auto corpus = [] {
    const auto& cat = wide_catalog();
    std::vector<NfiSubgroup> out(cat.begin(), cat.end());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        const std::vector<NfiSubgroup> pair{cat[i], cat[j]};
        const auto meet = nfi_intersect(pair);
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const NfiSubgroup& k) { return nfi_equal(k, meet); });
        if (!seen) out.push_back(meet);
      }
    }
    return out;
  }();
  return corpus;
}

Outcome trivial_quotient() {
  Outcome o;
  const auto pb3 = pb3_object();
  const auto& gt = enumerate_shadows(pb3);
  o.require(gt.size() == 1, "GT(PB3) has " + std::to_string(gt.size()) + " elements");
  if (!gt.empty()) {
    o.require(gt[0].m() == 0 && gt[0].f_word().empty(), "the only shadow is not [0, 1]");
  }
  o.require(is_isolated(pb3), "PB3 is not isolated");
  o.detail = o.pass ? "GT(PB3) = {[0, 1]}, isolated" : o.detail;
  return o;
}

Outcome oracle_soundness() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < kOracleWords && o.pass; ++i) {
    const auto w = random_word(rng, Alphabet::B3, kOracleMaxLength);
    o.require(artin_equal(reassemble(b3_normal_form(w)), w),
              "normal form of " + to_text(w) + " does not reassemble");
  }
  for (int i = 0; i < kAutomorphismWords && o.pass; ++i) {
    const auto w = reduce_word(random_word(rng, Alphabet::F2, kAutomorphismMaxLength));
    o.require(theta(theta(w)) == w, "theta^2 moves " + to_text(w));
    o.require(tau(tau(tau(w))) == w, "tau^3 moves " + to_text(w));
  }
  if (o.pass) {
    o.detail = std::to_string(kOracleWords) + " B3 words, " + std::to_string(kAutomorphismWords) +
               " F2 words";
  }
  return o;
}

template <typename Fn>
std::size_t for_each_candidate(const std::vector<NfiSubgroup>& objects, Fn&& fn) {
  std::size_t count = 0;
  for (const auto& n : objects) {
    const auto& q = n.quotient();
    for (std::uint64_t m = 0; m < q.n_ord; ++m) {
      const auto mm = static_cast<std::int64_t>(m);
      for (const auto& w : q.f2_commutator.words()) {
        fn(n, mm, w);
        ++count;
      }
    }
  }
  return count;
}

Outcome hexagon_equivalence() {
  Outcome o;
  const std::size_t count =
      for_each_candidate(small_catalog(), [&](const NfiSubgroup& n, std::int64_t m,
                                              const FreeWord& f) {
        o.require(check_hexagons(n, m, f) == check_simplified_hexagons(n, m, f),
                  "disagreement on " + n.label() + " m=" + std::to_string(m) + " f=" + to_text(f));
      });
  if (o.pass) o.detail = std::to_string(count) + " candidates on the degree<=4 catalog";
  return o;
}

Outcome surjectivity_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  for_each_candidate(small_catalog(), [&](const NfiSubgroup& n, std::int64_t m,
                                          const FreeWord& f) {
    if (!is_unit_mod(2 * m + 1, n.quotient().n_ord) || !check_hexagons(n, m, f)) return;
    ++checked;
    o.require(f2_part_onto(n, m, f) == b3_part_onto(n, m, f),
              "disagreement on " + n.label() + " m=" + std::to_string(m));
  });
  if (o.pass) o.detail = std::to_string(checked) + " charming GT-pairs";
  return o;
}

// Every morphism of the components reached from `starts`, keyed by target.
std::vector<ComponentReport> components_of(const std::vector<NfiSubgroup>& starts) {
  std::vector<ComponentReport> out;
  for (const auto& n : starts) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const ComponentReport& r) { return r.find(n).has_value(); });
    if (!seen) out.push_back(connected_component(n));
  }
  return out;
}

Outcome groupoid_axioms() {
  Outcome o;
  std::vector<NfiSubgroup> starts = small_catalog();
  for (const auto& n : diamond_catalog()) {
    if (!is_isolated(n)) starts.push_back(n);
  }
  std::size_t triples = 0, morphisms = 0;
  for (const auto& comp : components_of(starts)) {
    std::vector<GtShadow> all;
    for (const auto& [key, list] : comp.morphisms) all.insert(all.end(), list.begin(), list.end());
    morphisms += all.size();
    auto in_groupoid = [&](const GtShadow& s) {
      return std::any_of(all.begin(), all.end(), [&](const GtShadow& t) { return same(s, t); });
    };
    for (const auto& s : all) {
      o.require(same(compose_shadows(identity_shadow(s.target()), s), s), "left identity fails");
      o.require(same(compose_shadows(s, identity_shadow(s.source())), s), "right identity fails");
      const auto inv = invert_shadow(s);
      const auto a = compose_shadows(s, inv);
      const auto b = compose_shadows(inv, s);
      o.require(a.m() == 0 && a.f_elt().is_identity(), "s o s^-1 is not the identity");
      o.require(b.m() == 0 && b.f_elt().is_identity(), "s^-1 o s is not the identity");
      o.require(in_groupoid(inv), "inverse leaves the component");
    }
    for (const auto& s1 : all) {
      for (const auto& s2 : all) {
        if (!nfi_equal(s1.source(), s2.target())) continue;
        const auto s12 = compose_shadows(s1, s2);
        o.require(in_groupoid(s12), "composition leaves the component");
        for (const auto& s3 : all) {
          if (!nfi_equal(s2.source(), s3.target())) continue;
          ++triples;
          o.require(same(compose_shadows(s12, s3), compose_shadows(s1, compose_shadows(s2, s3))),
                    "associativity fails in the component of " + comp.objects[0].label());
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(morphisms) + " morphisms, " + std::to_string(triples) +
               " composable triples (degree<=4 catalog plus the degree-7 non-isolated components)";
  }
  return o;
}

Outcome morphism_invariants() {
  Outcome o;
  std::vector<NfiSubgroup> objects = wide_catalog();
  for (const auto& n : diamond_catalog()) {
    if (!is_isolated(n)) objects.push_back(n);
  }
  std::size_t count = 0;
  for (const auto& n : objects) {
    const auto& q = n.quotient();
    const std::vector<Permutation> xy{q.x, q.y}, yx{q.y, q.x};
    for (const auto& s : enumerate_shadows(n)) {
      ++count;
      const auto& f = s.f_word();
      o.require((evaluate(f, xy) * evaluate(f, yx)).is_identity(), "f theta(f) not in N_F2");
      const auto& kq = s.source().quotient();
      o.require(kq.n_ord == q.n_ord, "K_ord differs from N_ord");
      o.require(s.source().index_b3() == n.index_b3(), "|B3/K| differs from |B3/N|");
      o.require(kq.index_f2 == q.index_f2, "|F2:K_F2| differs from |F2:N_F2|");
      const auto inv = invert_shadow(s);
      o.require(mod_floor((2 * s.m() + 1) * (2 * inv.m() + 1), 2 * q.n_ord) ==
                    mod_floor(1, 2 * q.n_ord),
                "(2m+1)(2m'+1) is not 1 mod 2 N_ord");
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " shadows over the degree<=6 catalog and more";
  return o;
}

Outcome reduction_functoriality() {
  Outcome o;
  const auto& cat = closed_corpus();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = 0; j < cat.size(); ++j) {
      if (i != j && nfi_contains(cat[i], cat[j])) edges.emplace_back(i, j);
    }
  }
  std::size_t chains = 0, homs = 0;
  for (const auto& [i, j] : edges) {
    for (const auto& [j2, k] : edges) {
      if (j2 != j) continue;
      ++chains;
      for (const auto& s : enumerate_shadows(cat[i])) {
        o.require(same(reduce_shadow(reduce_shadow(s, cat[j]), cat[k]), reduce_shadow(s, cat[k])),
                  "composed reductions differ from the direct one");
      }
    }
    if (!is_isolated(cat[i]) || !is_isolated(cat[j])) continue;
    ++homs;
    const auto& gt = enumerate_shadows(cat[i]);
    for (const auto& s : gt) {
      for (const auto& t : gt) {
        o.require(same(reduce_shadow(compose_shadows(s, t), cat[j]),
                       compose_shadows(reduce_shadow(s, cat[j]), reduce_shadow(t, cat[j]))),
                  "reduction table is not a homomorphism");
      }
    }
  }
  o.require(chains > 0, "no containment chains in the corpus");
  if (o.pass) {
    o.detail = std::to_string(chains) + " chains, " + std::to_string(homs) + " isolated edges over " +
               std::to_string(cat.size()) + " objects (degree<=6 catalog and pairwise intersections)";
  }
  return o;
}

Outcome diamond_properties() {
  Outcome o;
  const auto& cat = diamond_catalog();
  std::size_t non_isolated = 0;
  for (const auto& n : cat) {
    if (is_isolated(n)) continue;
    ++non_isolated;
    const auto report = connected_component(n);
    const auto& d = report.diamond;
    o.require(is_isolated(d), "diamond of " + n.label() + " is not isolated");
    for (const auto& k : report.objects) {
      o.require(nfi_contains(d, k), "diamond of " + n.label() + " is not below every object");
    }
    o.require(nfi_equal(diamond(d), d), "diamond of " + n.label() + " is not idempotent");
  }
  o.require(non_isolated > 0, "no non-isolated catalog objects to test");
  // Pairwise intersections in the degree-7 catalog pass max_group_size, so
  // the intersection clause runs over the degree-6 catalog, all of it isolated.
  const auto& wide = wide_catalog();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < wide.size(); ++i) {
    o.require(is_isolated(wide[i]), wide[i].label() + " is not isolated");
    for (std::size_t j = i + 1; j < wide.size(); ++j) {
      const std::vector<NfiSubgroup> pair{wide[i], wide[j]};
      const auto meet = nfi_intersect(pair);
      o.require(is_isolated(meet), meet.label() + " is not isolated");
      ++pairs;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(non_isolated) + " non-isolated objects (degree<=7), " +
               std::to_string(pairs) + " isolated pairs (degree<=6)";
  }
  return o;
}

Outcome f2_quotient_contract() {
  Outcome o;
  std::size_t count = 0;
  for (int degree = 2; degree <= 3; ++degree) {
    std::vector<Permutation::Point> pts(static_cast<std::size_t>(degree));
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<Permutation::Point>(i);
    do perms.emplace_back(pts);
    while (std::next_permutation(pts.begin(), pts.end()));
    for (const auto& px : perms) {
      for (const auto& py : perms) {
        ++count;
        const auto n = from_f2_quotient(px, py);
        o.require(kernel_contained(f2_restriction(n), GenHom{Domain::F2, {px, py}}),
                  "N_F2 is not inside ker psi");
        o.require(is_isolated(diamond(n)), "diamond of " + n.label() + " is not isolated");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " maps into S2 and S3";
  return o;
}

std::string catalog_json(int threads, bool serial) {
  omp_set_num_threads(threads);
  clear_shadow_memo();
  const auto cat = serial ? catalog_search_serial(kSmallCatalogDegree)
                          : catalog_search(kSmallCatalogDegree);
  return io::dump(io::catalog_to_json(cat, kSmallCatalogDegree));
}

Outcome determinism() {
  Outcome o;
  const int saved = omp_get_max_threads();
  const std::string one = catalog_json(1, false);
  const std::string four = catalog_json(4, false);
  const std::string serial = catalog_json(1, true);
  omp_set_num_threads(saved);
  o.require(one == four, "JSON differs between 1 and 4 threads");
  o.require(one == serial, "JSON differs between parallel and serial search");
  const auto& cat = small_catalog();
  o.require(cat.size() == std::size(kPinnedDegree4),
            "catalog has " + std::to_string(cat.size()) + " kernels");
  for (std::size_t i = 0; i < cat.size() && i < std::size(kPinnedDegree4); ++i) {
    const auto& pin = kPinnedDegree4[i];
    o.require(cat[i].label() == pin.label && cat[i].content_id() == pin.content_id,
              "kernel " + std::to_string(i) + " is " + cat[i].content_id());
    o.require(enumerate_shadows(cat[i]).size() == pin.gt_count,
              "|GT(" + cat[i].label() + ")| changed");
  }
  if (o.pass) o.detail = "5 pinned kernels, |GT| = 1 2 2 2 6, identical JSON";
  return o;
}

Outcome genuineness_harness() {
  Outcome o;
  const auto& corpus = closed_corpus();
  std::size_t fakes = 0, verdicts = 0, rejected = 0;
  for (const auto& h : corpus) {
    o.require(!genuine_to_depth(identity_shadow(h), corpus).is_fake(),
              "identity of " + h.label() + " reported fake");
    for (const auto& s : enumerate_shadows(h)) {
      ++verdicts;
      const auto verdict = genuine_to_depth(s, corpus);
      if (verdict.is_fake()) {
        ++fakes;
        o.require(verify_fake_certificate(s, *verdict.fake), "certificate does not verify");
        continue;
      }
      // The checker must refuse certificates built from subgroups s survives into.
      for (const auto& n : verdict.checked) {
        const FakeCertificate honest_image{n, reduction_image(n, h)};
        o.require(!verify_fake_certificate(s, honest_image), "surviving shadow certified fake");
        auto trimmed = honest_image;
        trimmed.reduce_image.erase(
            std::remove_if(trimmed.reduce_image.begin(), trimmed.reduce_image.end(),
                           [&](const GtShadow& t) { return t.m() == s.m() && t.f_elt() == s.f_elt(); }),
            trimmed.reduce_image.end());
        o.require(!verify_fake_certificate(s, trimmed), "tampered certificate accepted");
        rejected += 2;
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(verdicts) + " verdicts over " + std::to_string(corpus.size()) +
               " objects, " + std::to_string(fakes) + " fake (all verified), " +
               std::to_string(rejected) + " bogus certificates rejected";
  }
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double budget;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "trivial quotient", kBudgetTrivial, trivial_quotient},
      {2, "oracle soundness", kBudgetOracle, oracle_soundness},
      {3, "hexagon equivalence", kBudgetSuite, hexagon_equivalence},
      {4, "surjectivity equivalence", kBudgetSuite, surjectivity_equivalence},
      {5, "groupoid axioms", kBudgetSuite, groupoid_axioms},
      {6, "morphism invariants", kBudgetSuite, morphism_invariants},
      {7, "reduction functoriality", kBudgetSuite, reduction_functoriality},
      {8, "diamond", kBudgetSuite, diamond_properties},
      {9, "from_f2_quotient contract", kBudgetSuite, f2_quotient_contract},
      {10, "determinism and regression", kBudgetSuite, determinism},
      {11, "finite-depth genuineness", kBudgetSuite, genuineness_harness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(c.budget) + " s budget";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  %s: %s (%.2f s)\n", c.number, o.pass ? "PASS" : "FAIL",
                c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
