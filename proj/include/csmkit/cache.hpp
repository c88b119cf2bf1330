#pragma once

// Directory of JSON documents keyed by (kind, type label, n, w, v).
// Single writer, last write wins.

#include <filesystem>
#include <optional>
#include <string>

namespace csmkit {

struct CacheKey {
  std::string kind;
  std::string type_label;
  int n = 0;
  std::string w;
  std::string v;
};

class ResultCache {
 public:
  static constexpr const char* kEnvVar = "CSMKIT_CACHE_DIR";
  static constexpr const char* kDefaultDir = ".csmkit-cache";

  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  // Directory from CSMKIT_CACHE_DIR, else .csmkit-cache under the working directory.
  static ResultCache from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const;

  std::optional<std::string> load(const CacheKey& key) const;
  void store(const CacheKey& key, const std::string& document) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace csmkit
