#include <gtest/gtest.h>

#include "braidshadow/config.hpp"
#include "braidshadow/error.hpp"
#include "braidshadow/groupoid.hpp"

using namespace braidshadow;

namespace {

const std::vector<NfiSubgroup>& catalog6() {
  static const auto cat = catalog_search(6);
  return cat;
}

const std::vector<NfiSubgroup>& non_isolated() {
  static const auto list = [] {
    Config c = config();
    c.max_catalog_degree = 7;
    ScopedConfig scoped(c);
    std::vector<NfiSubgroup> out;
    for (const auto& n : catalog_search(7)) {
      if (!is_isolated(n)) out.push_back(n);
    }
    return out;
  }();
  return list;
}

bool same(const GtShadow& a, const GtShadow& b) { return a.m() == b.m() && a.f_elt() == b.f_elt(); }

// (N, H) pairs of catalog objects with N strictly below H.
std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& cat = catalog6();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = 0; j < cat.size(); ++j) {
      if (i != j && nfi_contains(cat[i], cat[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

TEST(Component, Pb3IsASingleIsolatedObject) {
  const auto report = connected_component(pb3_object());
  EXPECT_TRUE(report.isolated);
  ASSERT_EQ(report.objects.size(), 1u);
  EXPECT_EQ(report.morphism_count(), 1u);
  EXPECT_TRUE(nfi_equal(report.diamond, pb3_object()));
  EXPECT_EQ(report.diamond.label(), "PB3");
}

TEST(Component, DegreeSixCatalogIsIsolated) {
  for (const auto& n : catalog6()) {
    EXPECT_TRUE(is_isolated(n)) << n.label();
    EXPECT_TRUE(nfi_equal(diamond(n), n));
  }
}

TEST(Component, NonIsolatedFixturesExist) {
  EXPECT_EQ(non_isolated().size(), 2u);
}

TEST(Component, NonIsolatedComponentsAreSymmetric) {
  for (const auto& n : non_isolated()) {
    const auto report = connected_component(n);
    EXPECT_FALSE(report.isolated);
    ASSERT_GE(report.objects.size(), 2u);
    const auto gt_size = enumerate_shadows(n).size();
    for (std::size_t i = 0; i < report.objects.size(); ++i) {
      const auto& k = report.objects[i];
      EXPECT_EQ(k.index_b3(), n.index_b3());
      EXPECT_EQ(k.quotient().n_ord, n.quotient().n_ord);
      EXPECT_EQ(enumerate_shadows(k).size(), gt_size);
      for (std::size_t j = 0; j < report.objects.size(); ++j) {
        auto a = report.morphisms.find({i, j});
        auto b = report.morphisms.find({j, i});
        const std::size_t ca = a == report.morphisms.end() ? 0 : a->second.size();
        const std::size_t cb = b == report.morphisms.end() ? 0 : b->second.size();
        EXPECT_EQ(ca, cb) << i << " " << j;
        if (a == report.morphisms.end()) continue;
        for (const auto& s : a->second) {
          EXPECT_TRUE(nfi_equal(s.source(), report.objects[i]));
          EXPECT_TRUE(nfi_equal(s.target(), report.objects[j]));
        }
      }
    }
    for (std::size_t i = 0; i < report.objects.size(); ++i) {
      for (std::size_t j = i + 1; j < report.objects.size(); ++j) {
        EXPECT_FALSE(nfi_equal(report.objects[i], report.objects[j]));
      }
    }
  }
}

TEST(Diamond, IsolatedContainedAndIdempotent) {
  for (const auto& n : non_isolated()) {
    const auto report = connected_component(n);
    const auto& d = report.diamond;
    EXPECT_TRUE(is_isolated(d));
    EXPECT_EQ(d.index_b3(), 882u);
    for (const auto& k : report.objects) EXPECT_TRUE(nfi_contains(d, k));
    EXPECT_TRUE(nfi_equal(diamond(d), d));
    // Largest such subgroup: anything isolated below every object lies below d.
    std::vector<NfiSubgroup> all(report.objects.begin(), report.objects.end());
    EXPECT_TRUE(nfi_equal(nfi_intersect(all), d));
  }
}

TEST(Reduce, ToItselfAndToPb3) {
  for (const auto& n : catalog6()) {
    for (const auto& s : enumerate_shadows(n)) {
      const auto same_level = reduce_shadow(s, n);
      EXPECT_TRUE(same(same_level, s));
      const auto top = reduce_shadow(s, pb3_object());
      EXPECT_EQ(top.m(), 0);
      EXPECT_TRUE(top.f_elt().is_identity());
    }
  }
}

TEST(Reduce, RejectsNonContainment) {
  const auto& cat = catalog6();
  const auto pb3 = pb3_object();
  const auto& big = cat.back();
  try {
    reduce_shadow(identity_shadow(pb3), big);
    FAIL() << "expected not_contained";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_contained);
  }
}

TEST(Reduce, FunctorialOnChains) {
  const auto& cat = catalog6();
  const auto pairs = strict_pairs();
  int chains = 0;
  for (const auto& [i, j] : pairs) {
    for (const auto& [j2, k] : pairs) {
      if (j2 != j) continue;
      ++chains;
      for (const auto& s : enumerate_shadows(cat[i])) {
        const auto direct = reduce_shadow(s, cat[k]);
        const auto stepwise = reduce_shadow(reduce_shadow(s, cat[j]), cat[k]);
        EXPECT_TRUE(same(direct, stepwise));
      }
    }
  }
  EXPECT_GT(chains, 0);
}

TEST(Reduce, IsAHomomorphismOnIsolatedObjects) {
  const auto& cat = catalog6();
  for (const auto& [i, j] : strict_pairs()) {
    const auto& gt = enumerate_shadows(cat[i]);
    for (const auto& s : gt) {
      for (const auto& t : gt) {
        const auto lhs = reduce_shadow(compose_shadows(s, t), cat[j]);
        const auto rhs =
            compose_shadows(reduce_shadow(s, cat[j]), reduce_shadow(t, cat[j]));
        EXPECT_TRUE(same(lhs, rhs));
      }
    }
  }
}

TEST(Survives, AgreesWithReductionImage) {
  const auto& cat = catalog6();
  for (const auto& [i, j] : strict_pairs()) {
    const auto image = reduction_image(cat[i], cat[j]);
    for (const auto& s : enumerate_shadows(cat[j])) {
      const bool in_image =
          std::any_of(image.begin(), image.end(), [&](const GtShadow& t) { return same(s, t); });
      EXPECT_EQ(survives(s, cat[i]), in_image);
    }
  }
}

TEST(Genuine, IdentityIsNeverFake) {
  const auto& cat = catalog6();
  for (const auto& h : cat) {
    const auto verdict = genuine_to_depth(identity_shadow(h), cat);
    EXPECT_FALSE(verdict.is_fake());
    for (const auto& n : verdict.checked) EXPECT_TRUE(nfi_contains(n, h));
  }
}

TEST(Genuine, EmptyCatalogGivesNoVerdict) {
  const auto& h = catalog6().back();
  const auto verdict = genuine_to_depth(enumerate_shadows(h).back(), {});
  EXPECT_FALSE(verdict.is_fake());
  EXPECT_TRUE(verdict.checked.empty());
}

TEST(Genuine, CertificatesVerifyAndBogusOnesFail) {
  const auto& cat = catalog6();
  int fakes = 0;
  for (const auto& h : cat) {
    for (const auto& s : enumerate_shadows(h)) {
      const auto verdict = genuine_to_depth(s, cat);
      if (!verdict.is_fake()) continue;
      ++fakes;
      EXPECT_TRUE(verify_fake_certificate(s, *verdict.fake));
      EXPECT_FALSE(survives(s, verdict.fake->witness));
      auto bogus = *verdict.fake;
      bogus.reduce_image.push_back(s);
      EXPECT_FALSE(verify_fake_certificate(s, bogus));
      // The identity always survives, so it cannot be certified fake.
      EXPECT_FALSE(verify_fake_certificate(identity_shadow(h), *verdict.fake));
    }
  }
  const auto& h = cat.back();
  const FakeCertificate wrong_witness{pb3_object(), {identity_shadow(h)}};
  if (!nfi_equal(h, pb3_object())) {
    EXPECT_FALSE(verify_fake_certificate(enumerate_shadows(h).back(), wrong_witness));
  }
  RecordProperty("fake_shadows", fakes);
}

TEST(MainLine, SingletonAndTwoChain) {
  const std::vector<NfiSubgroup> single{pb3_object()};
  EXPECT_EQ(main_line_limit(single).limit.size(), 1u);
  for (const auto& n : catalog6()) {
    const std::vector<NfiSubgroup> two{pb3_object(), n};
    const auto d = main_line_limit(two);
    EXPECT_EQ(d.limit.size(), enumerate_shadows(n).size());
  }
}

TEST(MainLine, MatchesBruteForceFamilies) {
  const auto& cat = catalog6();
  for (std::size_t a = 0; a < cat.size(); ++a) {
    for (std::size_t b = a + 1; b < cat.size(); ++b) {
      for (std::size_t c = b + 1; c < cat.size(); ++c) {
        const std::vector<NfiSubgroup> objs{cat[a], cat[b], cat[c]};
        const auto d = main_line_limit(objs);
        std::vector<std::vector<std::size_t>> brute;
        const auto& g0 = d.groups[0];
        const auto& g1 = d.groups[1];
        const auto& g2 = d.groups[2];
        for (std::size_t i = 0; i < g0.size(); ++i) {
          for (std::size_t j = 0; j < g1.size(); ++j) {
            for (std::size_t k = 0; k < g2.size(); ++k) {
              const std::vector<const GtShadow*> fam{&g0[i], &g1[j], &g2[k]};
              bool ok = true;
              for (std::size_t u = 0; u < 3 && ok; ++u) {
                for (std::size_t v = 0; v < 3 && ok; ++v) {
                  if (u == v || !nfi_contains(objs[u], objs[v])) continue;
                  ok = same(reduce_shadow(*fam[u], objs[v]), *fam[v]);
                }
              }
              if (ok) brute.push_back({i, j, k});
            }
          }
        }
        EXPECT_EQ(d.limit, brute);
      }
    }
  }
}

TEST(MainLine, RejectsNonIsolatedObjects) {
  const std::vector<NfiSubgroup> list{non_isolated().front()};
  try {
    main_line_limit(list);
    FAIL() << "expected non_isolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_isolated);
  }
}

TEST(Isolation, ClosedUnderIntersection) {
  const auto& cat = catalog6();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      const std::vector<NfiSubgroup> pair{cat[i], cat[j]};
      const auto meet = nfi_intersect(pair);
      EXPECT_TRUE(is_isolated(meet)) << meet.label();
    }
  }
}
