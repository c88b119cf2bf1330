#include "csmkit/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "csmkit/error.hpp"

namespace csmkit {

namespace {

// Keeps file names portable: anything outside [A-Za-z0-9.-] becomes '_'.
std::string sanitize(const std::string& part) {
  std::string out = part.empty() ? "_" : part;
  for (char& c : out) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '.' || c == '-';
    if (!keep) c = '_';
  }
  return out;
}

}  // namespace

ResultCache ResultCache::from_environment() {
  if (const char* dir = std::getenv(kEnvVar); dir != nullptr && *dir != '\0') return ResultCache(dir);
  return ResultCache(std::filesystem::current_path() / kDefaultDir);
}

std::filesystem::path ResultCache::path_for(const CacheKey& key) const {
  return dir_ / sanitize(key.kind) /
         (sanitize(key.type_label) + "__n" + std::to_string(key.n) + "__w" + sanitize(key.w) + "__v" +
          sanitize(key.v) + ".json");
}

std::optional<std::string> ResultCache::load(const CacheKey& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ResultCache::store(const CacheKey& key, const std::string& document) const {
  const auto path = path_for(key);
  std::filesystem::create_directories(path.parent_path());
  // Write then rename so readers never see a partial file.
  const auto tmp = std::filesystem::path(path).concat(".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << document;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace csmkit
