#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidshadow/groupoid.hpp"
#include "braidshadow/nfi.hpp"
#include "braidshadow/shadow.hpp"

namespace braidshadow::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Parses JSON text; errors become Errc::parse_error with the location.
Json parse_json(std::string_view text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);
/// Writes through a temporary file and a rename. Throws Errc::io_error.
void write_file_atomic(const std::filesystem::path& path, std::string_view text);

/// {"schema":1,"label":str,"degree":n,"sigma1":[...],"sigma2":[...]}
Json subgroup_to_json(const NfiSubgroup& n);
/// Strict: unknown or missing keys are rejected (Errc::schema_mismatch), the
/// pair goes through new_nfi.
NfiSubgroup subgroup_from_json(const Json& doc);
NfiSubgroup load_subgroup(const std::filesystem::path& path);
void save_subgroup(const std::filesystem::path& path, const NfiSubgroup& n);

/// Invariants shown by `info` and attached to catalog entries.
Json quotient_summary(const NfiSubgroup& n);

/// {"m":int,"f":"word","f_perm":[...],"source_label":str}
Json shadow_to_json(const GtShadow& s, const std::string& source_label);
/// "src:<content id>" unless the source equals the target, which gives the target label.
std::string default_source_label(const GtShadow& s);

/// {"target":label,"n_ord":k,"shadows":[...]}
Json shadow_set_to_json(const NfiSubgroup& n, std::span<const GtShadow> shadows);
Json component_to_json(const ComponentReport& report);
Json mainline_to_json(const MainLineDiagram& diagram);
Json catalog_to_json(std::span<const NfiSubgroup> catalog, int max_degree);
Json verdict_to_json(const GtShadow& s, const GenuinenessVerdict& verdict);

}  // namespace braidshadow::io
