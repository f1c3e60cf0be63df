#pragma once

#include <cstddef>

namespace braidshadow {

/// Process-wide resource limits. Set them before starting any parallel work;
/// the library only reads them.
struct Config {
  std::size_t max_group_size = 100'000;
  std::size_t max_candidates = 2'000'000;
  int max_catalog_degree = 6;
};

Config& config() noexcept;

/// Restores the previous configuration on scope exit.
class ScopedConfig {
public:
  explicit ScopedConfig(const Config& replacement) : saved_(config()) { config() = replacement; }
  ~ScopedConfig() { config() = saved_; }
  ScopedConfig(const ScopedConfig&) = delete;
  ScopedConfig& operator=(const ScopedConfig&) = delete;

private:
  Config saved_;
};

}  // namespace braidshadow
