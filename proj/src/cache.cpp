#include "braidshadow/cache.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "braidshadow/error.hpp"

namespace braidshadow {

std::string ResultCache::make_key(const std::vector<std::string>& parts) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::string_view s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;  // separator
    h *= 1099511628211ULL;
  };
  mix("schema=" + std::to_string(io::kSchemaVersion));
  for (const auto& p : parts) mix(p);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<io::Json> ResultCache::get(const std::string& key) const {
  if (!dir_) return std::nullopt;
  const auto path = *dir_ / (key + ".json");
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    io::Json entry = io::read_json_file(path);
    if (!entry.is_object() || entry.value("key", "") != key || !entry.contains("payload")) {
      return std::nullopt;
    }
    return entry["payload"];
  } catch (const Error&) {
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, const io::Json& payload) const {
  if (!dir_) return;
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  io::Json entry{{"key", key},
                 {"created_at", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                 {"payload", payload}};
  io::write_file_atomic(*dir_ / (key + ".json"), io::dump(entry));
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("BRAIDSHADOW_CACHE"); env && *env) return env;
  return ".braidshadow-cache";
}

}  // namespace braidshadow
