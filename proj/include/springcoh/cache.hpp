#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "springcoh/groebner.hpp"
#include "springcoh/inverse_system.hpp"
#include "springcoh/partition.hpp"

namespace springcoh {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheDirEnv = "SPRINGCOH_CACHE_DIR";

/// Content-addressed store for Groebner bases and catalecticant tables.
/// Entries are written to a temporary file and renamed into place, so
/// concurrent writers of one key leave exactly one complete file.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, int schema_version = kCacheSchemaVersion);

  /// The flag wins over the environment variable; neither means no cache.
  static std::optional<Cache> configure(const std::optional<std::string>& flag);

  const std::filesystem::path& dir() const { return dir_; }
  int schema_version() const { return schema_; }

  /// SHA-256 hex digest of (schema, n, sigma, kind, order).
  std::string key(const Partition& sigma, std::string_view kind, std::string_view order) const;
  std::filesystem::path path_for(const std::string& key) const;

  bool store(const std::string& key, const std::string& payload) const;
  /// Payload of a valid entry. Missing, corrupt or wrong-version entries
  /// yield nullopt; the latter two are logged as warnings.
  std::optional<std::string> load(const std::string& key) const;

  std::optional<GroebnerBasis> load_basis(const Partition& sigma, std::string_view kind) const;
  void store_basis(const Partition& sigma, std::string_view kind, const GroebnerBasis& gb) const;
  std::optional<BigradedTable> load_table(const Partition& sigma) const;
  void store_table(const Partition& sigma, const BigradedTable& table) const;

  struct Info {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
  };
  Info info() const;

 private:
  std::string header() const;
  std::filesystem::path dir_;
  int schema_;
};

std::string sha256_hex(std::string_view data);

}  // namespace springcoh
