#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "jring/symfun.hpp"

namespace jring::cli {

// One JSON file per (n, l) at <dir>/M_<n>_<l>.json. Writes go to a unique
// temporary file in the same directory followed by rename, so readers see
// either the old file or the complete new one.
class JsonFileStore : public MatrixStore {
 public:
  explicit JsonFileStore(std::filesystem::path dir);

  std::optional<TransitionMatrix> load(int n, int length) override;
  void save(const TransitionMatrix& matrix) override;

  std::filesystem::path path_for(int n, int length) const;
  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// The flag value, else $JRING_CACHE when set and nonempty, else nullopt.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

}  // namespace jring::cli
