// On-disk cache of tables, simple registries and projective covers:
// <root>/<p>/<n>/{monoid,simples,pims}.json, each file carrying a schema id
// and a checksum of its payload.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "deltafn/context.hpp"

namespace deltafn {

inline constexpr const char* kCacheSchema = "deltafn.cache/1";
inline constexpr const char* kCacheDirEnv = "DELTAFN_CACHE_DIR";

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// $DELTAFN_CACHE_DIR when set, else ./cache.
std::filesystem::path default_cache_dir();
std::filesystem::path cache_path(const std::filesystem::path& root, int p, int n);

enum class CacheState { Missing, Valid, Corrupt };
struct CacheStatus {
  CacheState state = CacheState::Missing;
  std::string message;
  bool has_pims = false;
};
CacheStatus check_cache(const std::filesystem::path& root, int p, int n);

/// Build simples (and PIMs when feasible) of ctx and write them. Returns false
/// when a valid cache was already present and nothing was written.
bool write_cache(Context& ctx, const std::filesystem::path& root);
/// Install cached registries into ctx. Throws CacheError when missing or corrupt.
void load_cache(Context& ctx, const std::filesystem::path& root);

}  // namespace deltafn
