#include "adorn/cache.hpp"

#include <fstream>

#include "adorn/errors.hpp"
#include "adorn/report.hpp"

namespace adorn {

FileStageCache::FileStageCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InvalidArgument("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::optional<CachedStage> FileStageCache::load(const std::string& key) {
  std::ifstream in(dir_ / (key + ".json"));
  if (!in) return std::nullopt;
  try {
    const report::json j = report::json::parse(in);
    return CachedStage{report::presentation_from(j.at("presentation")), j.at("partially_simplified").get<bool>(),
                       j.at("index").get<std::size_t>()};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void FileStageCache::store(const std::string& key, const CachedStage& stage) {
  const report::json j = {{"key", key},
                          {"presentation", report::to_json(stage.presentation)},
                          {"partially_simplified", stage.partially_simplified},
                          {"index", stage.index}};
  // write then rename so concurrent readers never see a partial file
  const auto final_path = dir_ / (key + ".json");
  const auto tmp = dir_ / (key + ".json.tmp");
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(2) << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
}

}  // namespace adorn
