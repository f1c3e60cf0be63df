#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "braidshadow/io.hpp"

namespace braidshadow {

/// Content-addressed store of JSON results. Entries live in
/// <dir>/<key>.json as {"key", "created_at", "payload"}; writes are atomic.
class ResultCache {
public:
  /// A disabled cache never hits and never writes.
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const noexcept { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& dir() const noexcept { return dir_; }

  /// Hash of the schema version and the given parts, as 16 hex digits.
  static std::string make_key(const std::vector<std::string>& parts);

  /// Unreadable or malformed entries count as misses.
  std::optional<io::Json> get(const std::string& key) const;
  void put(const std::string& key, const io::Json& payload) const;

private:
  std::optional<std::filesystem::path> dir_;
};

/// --cache-dir, else $BRAIDSHADOW_CACHE, else ".braidshadow-cache".
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace braidshadow
