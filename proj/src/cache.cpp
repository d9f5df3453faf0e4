#include "permring/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace permring {

std::string checksum(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) std::cerr << "warning: cache directory " << dir_ << " unusable: " << ec.message() << "\n";
}

std::filesystem::path DiskCache::path_for(const std::string& key) const { return dir_ / (checksum(key) + ".json"); }

std::optional<Json> DiskCache::load(const std::string& key) const {
  const auto path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("version").get<int>() != kVersion || j.at("key").get<std::string>() != key)
      throw std::runtime_error("version or key mismatch");
    const Json& payload = j.at("payload");
    if (j.at("checksum").get<std::string>() != checksum(payload.dump()))
      throw std::runtime_error("checksum mismatch");
    return payload;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring cache entry " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void DiskCache::store(const std::string& key, const Json& payload) const {
  Json j = {{"version", kVersion}, {"key", key}, {"checksum", checksum(payload.dump())}, {"payload", payload}};
  const auto path = path_for(key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) {
      std::cerr << "warning: could not write cache entry " << path << "\n";
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::cerr << "warning: could not write cache entry " << path << ": " << ec.message() << "\n";
}

}  // namespace permring
