#pragma once

#include "permring/serialize.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace permring {

/// On-disk JSON cache. Each entry records the code version, its key and a
/// checksum of the payload; anything that fails to match is ignored with a
/// warning on stderr and recomputed by the caller.
class DiskCache {
 public:
  static constexpr int kVersion = 1;

  explicit DiskCache(std::filesystem::path dir);

  std::optional<Json> load(const std::string& key) const;
  /// Best effort: write failures are reported and otherwise ignored.
  void store(const std::string& key, const Json& payload) const;

  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

/// 64-bit FNV-1a, hex encoded.
std::string checksum(const std::string& bytes);

}  // namespace permring
