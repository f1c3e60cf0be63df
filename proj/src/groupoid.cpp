#include "braidshadow/groupoid.hpp"

#include <algorithm>
#include <deque>

#include "braidshadow/error.hpp"

namespace braidshadow {

namespace {

// Position of each shadow of a group by (m, f N_F2).
class ShadowIndex {
public:
  explicit ShadowIndex(const std::vector<GtShadow>& group) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      index_.emplace(Key{group[i].m(), group[i].f_elt()}, i);
    }
  }

  std::optional<std::size_t> find(const GtShadow& s) const {
    auto it = index_.find(Key{s.m(), s.f_elt()});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

private:
  using Key = std::pair<std::int64_t, Permutation>;
  std::map<Key, std::size_t> index_;
};

}  // namespace

std::optional<std::size_t> ComponentReport::find(const NfiSubgroup& k) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (nfi_equal(objects[i], k)) return i;
  }
  return std::nullopt;
}

std::size_t ComponentReport::morphism_count() const {
  std::size_t total = 0;
  for (const auto& [key, list] : morphisms) total += list.size();
  return total;
}

ComponentReport connected_component(const NfiSubgroup& n) {
  ComponentReport report;
  report.objects.push_back(n);
  for (std::size_t i = 0; i < report.objects.size(); ++i) {
    const NfiSubgroup target = report.objects[i];
    for (const auto& s : enumerate_shadows(target)) {
      const NfiSubgroup& src = s.source();
      auto j = report.find(src);
      if (!j) {
        j = report.objects.size();
        report.objects.push_back(src.with_label(n.label() + ".K" + std::to_string(*j)));
      }
      report.morphisms[{*j, i}].push_back(s);
    }
  }
  report.isolated = report.objects.size() == 1;
  report.diamond = diamond(report);
  return report;
}

bool is_isolated(const NfiSubgroup& n) {
  for (const auto& s : enumerate_shadows(n)) {
    if (!nfi_equal(s.source(), n)) return false;
  }
  return true;
}

NfiSubgroup diamond(const ComponentReport& component) {
  if (component.objects.empty()) throw Error(Errc::internal_inconsistency, "empty component");
  const NfiSubgroup& start = component.objects.front();
  NfiSubgroup running = start;
  for (std::size_t i = 1; i < component.objects.size(); ++i) {
    const NfiSubgroup& k = component.objects[i];
    if (nfi_contains(running, k)) continue;
    const std::vector<NfiSubgroup> pair{running, k};
    running = nfi_intersect(pair);
  }
  running = running.with_label(component.isolated ? start.label()
                                                  : "diamond(" + start.label() + ")");
  if (!nfi_contains(running, start) || !is_isolated(running)) {
    throw Error(Errc::internal_inconsistency, "diamond of " + start.label() + " is not isolated");
  }
  return running;
}

NfiSubgroup diamond(const NfiSubgroup& n) { return connected_component(n).diamond; }

GtShadow reduce_shadow(const GtShadow& s, const NfiSubgroup& h) {
  const NfiSubgroup& n = s.target();
  if (!nfi_contains(n, h)) {
    throw Error(Errc::not_contained, n.label() + " is not contained in " + h.label());
  }
  const auto& hq = h.quotient();
  if (n.quotient().n_ord % hq.n_ord != 0) {
    throw Error(Errc::internal_inconsistency, "H_ord does not divide N_ord");
  }
  const Permutation f = evaluate(s.f_word(), std::vector<Permutation>{hq.x, hq.y});
  return GtShadow(h, mod_floor(s.m(), hq.n_ord), canonical_f_word(h, f), f);
}

std::vector<GtShadow> reduction_image(const NfiSubgroup& n, const NfiSubgroup& h) {
  const auto& target_group = enumerate_shadows(h);
  const ShadowIndex index(target_group);
  std::vector<bool> hit(target_group.size(), false);
  for (const auto& s : enumerate_shadows(n)) {
    const GtShadow r = reduce_shadow(s, h);
    auto i = index.find(r);
    if (!i) throw Error(Errc::internal_inconsistency, "reduction left GT(H)");
    hit[*i] = true;
  }
  std::vector<GtShadow> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(target_group[i]);
  }
  return out;
}

bool survives(const GtShadow& s, const NfiSubgroup& n) {
  const NfiSubgroup& h = s.target();
  if (!nfi_contains(n, h)) {
    throw Error(Errc::not_contained, n.label() + " is not contained in " + h.label());
  }
  for (const auto& t : enumerate_shadows(n)) {
    const GtShadow r = reduce_shadow(t, h);
    if (r.m() == s.m() && r.f_elt() == s.f_elt()) return true;
  }
  return false;
}

GenuinenessVerdict genuine_to_depth(const GtShadow& s, std::span<const NfiSubgroup> catalog) {
  GenuinenessVerdict verdict;
  const NfiSubgroup& h = s.target();
  for (const auto& n : catalog) {
    if (!nfi_contains(n, h)) continue;
    std::vector<GtShadow> image = reduction_image(n, h);
    const bool found = std::any_of(image.begin(), image.end(), [&](const GtShadow& t) {
      return t.m() == s.m() && t.f_elt() == s.f_elt();
    });
    if (!found) {
      verdict.fake = FakeCertificate{n, std::move(image)};
      return verdict;
    }
    verdict.checked.push_back(n);
  }
  return verdict;
}

bool verify_fake_certificate(const GtShadow& s, const FakeCertificate& cert) {
  const NfiSubgroup& h = s.target();
  if (!nfi_contains(cert.witness, h)) return false;
  std::vector<GtShadow> image;
  const auto target_group = enumerate_shadows_serial(h);
  const ShadowIndex index(target_group);
  std::vector<bool> hit(target_group.size(), false);
  for (const auto& t : enumerate_shadows_serial(cert.witness)) {
    auto i = index.find(reduce_shadow(t, h));
    if (!i) return false;
    hit[*i] = true;
  }
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) image.push_back(target_group[i]);
  }
  if (image.size() != cert.reduce_image.size()) return false;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i].m() != cert.reduce_image[i].m() ||
        image[i].f_elt() != cert.reduce_image[i].f_elt()) {
      return false;
    }
  }
  return std::none_of(image.begin(), image.end(), [&](const GtShadow& t) {
    return t.m() == s.m() && t.f_elt() == s.f_elt();
  });
}

MainLineDiagram main_line_limit(std::span<const NfiSubgroup> catalog) {
  MainLineDiagram d;
  d.objects.assign(catalog.begin(), catalog.end());
  for (const auto& n : d.objects) {
    if (!is_isolated(n)) throw Error(Errc::non_isolated, n.label() + " is not isolated");
    d.groups.push_back(enumerate_shadows(n));
  }
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    for (std::size_t j = 0; j < d.objects.size(); ++j) {
      if (i == j || !nfi_contains(d.objects[i], d.objects[j])) continue;
      MainLineEdge edge{i, j, {}};
      const ShadowIndex index(d.groups[j]);
      for (const auto& s : d.groups[i]) {
        auto k = index.find(reduce_shadow(s, d.objects[j]));
        if (!k) throw Error(Errc::internal_inconsistency, "reduction left GT(H)");
        edge.table.push_back(*k);
      }
      d.edges.push_back(std::move(edge));
    }
  }

  // Extend partial families one object at a time, keeping only those
  // compatible with every edge between already assigned objects.
  std::vector<std::vector<std::size_t>> partial{{}};
  for (std::size_t k = 0; k < d.objects.size(); ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& fam : partial) {
      for (std::size_t choice = 0; choice < d.groups[k].size(); ++choice) {
        bool ok = true;
        for (const auto& e : d.edges) {
          if (e.finer == k && e.coarser < k) ok = e.table[choice] == fam[e.coarser];
          else if (e.coarser == k && e.finer < k) ok = e.table[fam[e.finer]] == choice;
          if (!ok) break;
        }
        if (!ok) continue;
        auto extended = fam;
        extended.push_back(choice);
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  d.limit = d.objects.empty() ? std::vector<std::vector<std::size_t>>{} : std::move(partial);
  return d;
}

}  // namespace braidshadow
