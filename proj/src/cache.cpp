#include "springcoh/cache.hpp"

#include <openssl/evp.h>
#include <spdlog/spdlog.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "springcoh/json_io.hpp"

namespace springcoh {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return out.str();
}

Cache::Cache(fs::path dir, int schema_version) : dir_(std::move(dir)), schema_(schema_version) {
  fs::create_directories(dir_);
}

std::optional<Cache> Cache::configure(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return Cache(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return Cache(env);
  return std::nullopt;
}

std::string Cache::key(const Partition& sigma, std::string_view kind, std::string_view order) const {
  std::ostringstream material;
  material << "schema=" << schema_ << ";n=" << sigma.n() << ";sigma=" << sigma.to_string() << ";kind=" << kind
           << ";order=" << order;
  return sha256_hex(material.str());
}

fs::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".entry"); }

std::string Cache::header() const { return "springcoh-cache " + std::to_string(schema_); }

bool Cache::store(const std::string& key, const std::string& payload) const {
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
           << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      spdlog::warn("cache: cannot write {}", tmp.string());
      return false;
    }
    out << header() << "\n" << "key " << key << "\n" << payload;
    if (!out.flush()) {
      spdlog::warn("cache: short write to {}", tmp.string());
      return false;
    }
  }
  std::error_code ec;
  fs::rename(tmp, path_for(key), ec);
  if (ec) {
    spdlog::warn("cache: rename failed for {}: {}", key, ec.message());
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

std::optional<std::string> Cache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != header()) {
    spdlog::warn("cache: entry {} has schema header '{}', expected '{}'; recomputing", key, line, header());
    return std::nullopt;
  }
  if (!std::getline(in, line) || line != "key " + key) {
    spdlog::warn("cache: entry {} is corrupt (key line mismatch); recomputing", key);
    return std::nullopt;
  }
  std::ostringstream rest;
  rest << in.rdbuf();
  return rest.str();
}

std::optional<GroebnerBasis> Cache::load_basis(const Partition& sigma, std::string_view kind) const {
  const std::string k = key(sigma, kind, "grevlex");
  auto payload = load(k);
  if (!payload) return std::nullopt;
  try {
    GroebnerBasis gb = GroebnerBasis::deserialize(*payload);
    if (gb.ring().n() != sigma.n() || !gb.self_check(16)) {
      spdlog::warn("cache: basis {} failed re-verification; recomputing", k);
      return std::nullopt;
    }
    return gb;
  } catch (const std::exception& e) {
    spdlog::warn("cache: basis {} unreadable ({}); recomputing", k, e.what());
    return std::nullopt;
  }
}

void Cache::store_basis(const Partition& sigma, std::string_view kind, const GroebnerBasis& gb) const {
  store(key(sigma, kind, gb.order().descriptor()), gb.serialize());
}

std::optional<BigradedTable> Cache::load_table(const Partition& sigma) const {
  const std::string k = key(sigma, "bigraded-table", "none");
  auto payload = load(k);
  if (!payload) return std::nullopt;
  try {
    auto table = nlohmann::json::parse(*payload).get<BigradedTable>();
    const auto deg = sigma.degrees();
    if (table.d1 != deg.d1 || table.d2 != deg.d2) {
      spdlog::warn("cache: table {} has wrong bounds; recomputing", k);
      return std::nullopt;
    }
    return table;
  } catch (const std::exception& e) {
    spdlog::warn("cache: table {} unreadable ({}); recomputing", k, e.what());
    return std::nullopt;
  }
}

void Cache::store_table(const Partition& sigma, const BigradedTable& table) const {
  store(key(sigma, "bigraded-table", "none"), nlohmann::json(table).dump() + "\n");
}

Cache::Info Cache::info() const {
  Info info;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() != ".entry") continue;
    ++info.entries;
    info.bytes += entry.file_size();
  }
  return info;
}

}  // namespace springcoh
