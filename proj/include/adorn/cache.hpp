#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "adorn/derived.hpp"

namespace adorn {

// Stage cache backed by one JSON file per key in a directory. Unreadable
// or malformed files count as misses.
class FileStageCache : public StageCache {
 public:
  explicit FileStageCache(std::filesystem::path dir);

  std::optional<CachedStage> load(const std::string& key) override;
  void store(const std::string& key, const CachedStage& stage) override;

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace adorn
