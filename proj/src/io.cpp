#include "braidshadow/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "braidshadow/error.hpp"

namespace braidshadow::io {

namespace {

Json images_json(const Permutation& p) {
  Json arr = Json::array();
  for (auto v : p.images()) arr.push_back(v);
  return arr;
}

Permutation permutation_from_json(const Json& arr, std::size_t degree, const char* key) {
  if (!arr.is_array()) throw Error(Errc::schema_mismatch, std::string(key) + " must be an array");
  if (arr.size() != degree) {
    throw Error(Errc::schema_mismatch, std::string(key) + " has length " +
                                           std::to_string(arr.size()) + ", expected degree " +
                                           std::to_string(degree));
  }
  std::vector<Permutation::Point> images;
  images.reserve(degree);
  for (const auto& v : arr) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() >= static_cast<std::int64_t>(degree)) {
      throw Error(Errc::invalid_permutation,
                  std::string(key) + " entries must be integers in [0, degree)");
    }
    images.push_back(static_cast<Permutation::Point>(v.get<std::int64_t>()));
  }
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    throw Error(Errc::invalid_permutation, std::string(key) + " is not a bijection");
  }
}

std::size_t gt_count(const NfiSubgroup& n) { return enumerate_shadows(n).size(); }

}  // namespace

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, origin + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(path.string() + std::string(text)));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error(Errc::io_error, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::io_error, "cannot rename into " + path.string());
  }
}

Json subgroup_to_json(const NfiSubgroup& n) {
  return Json{{"schema", kSchemaVersion},
              {"label", n.label()},
              {"degree", n.degree()},
              {"sigma1", images_json(n.sigma1())},
              {"sigma2", images_json(n.sigma2())}};
}

NfiSubgroup subgroup_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::schema_mismatch, "subgroup document must be an object");
  static const std::vector<std::string> kKeys{"schema", "label", "degree", "sigma1", "sigma2"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw Error(Errc::schema_mismatch, "unknown field \"" + key + "\"");
    }
  }
  for (const auto& key : kKeys) {
    if (!doc.contains(key)) throw Error(Errc::schema_mismatch, "missing field \"" + key + "\"");
  }
  if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != kSchemaVersion) {
    throw Error(Errc::schema_mismatch, "expected schema " + std::to_string(kSchemaVersion) +
                                           ", found " + doc["schema"].dump());
  }
  if (!doc["label"].is_string()) throw Error(Errc::schema_mismatch, "label must be a string");
  if (!doc["degree"].is_number_integer() || doc["degree"].get<std::int64_t>() < 1 ||
      doc["degree"].get<std::int64_t>() > 0xffff) {
    throw Error(Errc::schema_mismatch, "degree must be a positive integer");
  }
  const auto degree = doc["degree"].get<std::size_t>();
  Permutation s1 = permutation_from_json(doc["sigma1"], degree, "sigma1");
  Permutation s2 = permutation_from_json(doc["sigma2"], degree, "sigma2");
  return new_nfi({std::move(s1), std::move(s2)}, doc["label"].get<std::string>());
}

NfiSubgroup load_subgroup(const std::filesystem::path& path) {
  return subgroup_from_json(read_json_file(path));
}

void save_subgroup(const std::filesystem::path& path, const NfiSubgroup& n) {
  write_file_atomic(path, dump(subgroup_to_json(n)));
}

Json quotient_summary(const NfiSubgroup& n) {
  const auto& q = n.quotient();
  return Json{{"label", n.label()},
              {"content_id", n.content_id()},
              {"degree", n.degree()},
              {"n_ord", q.n_ord},
              {"index_b3", q.b3_quotient.order()},
              {"index_pb3", q.index_pb3},
              {"index_f2", q.index_f2},
              {"commutator_order", q.f2_commutator.order()}};
}

std::string default_source_label(const GtShadow& s) {
  const NfiSubgroup& src = s.source();
  if (nfi_equal(src, s.target())) return s.target().label();
  return "src:" + src.content_id();
}

Json shadow_to_json(const GtShadow& s, const std::string& source_label) {
  return Json{{"m", s.m()},
              {"f", to_text(s.f_word())},
              {"f_perm", images_json(s.f_elt())},
              {"source_label", source_label}};
}

Json shadow_set_to_json(const NfiSubgroup& n, std::span<const GtShadow> shadows) {
  Json list = Json::array();
  for (const auto& s : shadows) list.push_back(shadow_to_json(s, default_source_label(s)));
  return Json{{"target", n.label()}, {"n_ord", n.quotient().n_ord}, {"shadows", std::move(list)}};
}

Json component_to_json(const ComponentReport& report) {
  // Objects are listed by (index_pb3, content_id); morphism keys use that order.
  std::vector<std::size_t> order(report.objects.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& na = report.objects[a];
    const auto& nb = report.objects[b];
    const auto ia = na.quotient().index_pb3;
    const auto ib = nb.quotient().index_pb3;
    if (ia != ib) return ia < ib;
    return na.content_id() < nb.content_id();
  });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  Json objects = Json::array();
  for (std::size_t i : order) {
    Json entry = subgroup_to_json(report.objects[i]);
    entry["summary"] = quotient_summary(report.objects[i]);
    objects.push_back(std::move(entry));
  }
  std::map<std::pair<std::size_t, std::size_t>, Json> sorted;
  for (const auto& [key, list] : report.morphisms) {
    const std::string src_label = report.objects[key.first].label();
    Json shadows = Json::array();
    for (const auto& s : list) shadows.push_back(shadow_to_json(s, src_label));
    sorted[{rank[key.first], rank[key.second]}] =
        Json{{"source", rank[key.first]}, {"target", rank[key.second]},
             {"count", list.size()}, {"shadows", std::move(shadows)}};
  }
  Json morphisms = Json::array();
  for (auto& [key, doc] : sorted) morphisms.push_back(std::move(doc));
  return Json{{"schema", kSchemaVersion},
              {"start", report.objects.front().label()},
              {"isolated", report.isolated},
              {"object_count", report.objects.size()},
              {"morphism_count", report.morphism_count()},
              {"objects", std::move(objects)},
              {"morphisms", std::move(morphisms)},
              {"diamond", subgroup_to_json(report.diamond)}};
}

Json mainline_to_json(const MainLineDiagram& d) {
  Json objects = Json::array();
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    objects.push_back(Json{{"label", d.objects[i].label()},
                           {"content_id", d.objects[i].content_id()},
                           {"gt_count", d.groups[i].size()}});
  }
  Json edges = Json::array();
  for (const auto& e : d.edges) {
    edges.push_back(Json{{"finer", e.finer}, {"coarser", e.coarser}, {"table", e.table}});
  }
  return Json{{"schema", kSchemaVersion},
              {"objects", std::move(objects)},
              {"edges", std::move(edges)},
              {"limit_size", d.limit.size()},
              {"limit", d.limit}};
}

Json catalog_to_json(std::span<const NfiSubgroup> catalog, int max_degree) {
  Json objects = Json::array();
  for (const auto& n : catalog) {
    Json entry = subgroup_to_json(n);
    Json summary = quotient_summary(n);
    summary["gt_count"] = gt_count(n);
    entry["summary"] = std::move(summary);
    objects.push_back(std::move(entry));
  }
  return Json{{"schema", kSchemaVersion},
              {"max_degree", max_degree},
              {"count", catalog.size()},
              {"objects", std::move(objects)}};
}

Json verdict_to_json(const GtShadow& s, const GenuinenessVerdict& verdict) {
  Json checked = Json::array();
  for (const auto& n : verdict.checked) checked.push_back(n.label());
  Json doc{{"target", s.target().label()},
           {"shadow", shadow_to_json(s, default_source_label(s))},
           {"verdict", verdict.is_fake() ? "fake" : "not-fake-to-depth"},
           {"checked", std::move(checked)}};
  if (verdict.fake) {
    Json image = Json::array();
    for (const auto& t : verdict.fake->reduce_image) {
      image.push_back(shadow_to_json(t, default_source_label(t)));
    }
    doc["witness"] = subgroup_to_json(verdict.fake->witness);
    doc["reduce_image"] = std::move(image);
  }
  return doc;
}

}  // namespace braidshadow::io
