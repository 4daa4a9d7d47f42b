#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "weyl/orbit.hpp"
#include "weyl/store.hpp"

namespace fixtures {

inline const weyl::RootSystemData& system(const std::string& name) {
  static std::map<std::string, weyl::RootSystemData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, weyl::RootSystemData::builtin(name)).first;
  return it->second;
}

/// Full group, built once per process with the serial kernel.
inline const std::vector<weyl::Level>& group(const std::string& name) {
  static std::map<std::string, std::vector<weyl::Level>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, weyl::generate_group(system(name), weyl::Kernel::serial)).first;
  return it->second;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("weylsnow_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fixtures
