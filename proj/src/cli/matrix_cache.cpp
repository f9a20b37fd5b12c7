#include "jring/cli/matrix_cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "jring/cli/json_io.hpp"

namespace jring::cli {

namespace fs = std::filesystem;

JsonFileStore::JsonFileStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path JsonFileStore::path_for(int n, int length) const {
  return dir_ / ("M_" + std::to_string(n) + "_" + std::to_string(length) + ".json");
}

std::optional<TransitionMatrix> JsonFileStore::load(int n, int length) {
  std::ifstream in(path_for(n, length));
  if (!in) return std::nullopt;
  const auto parsed = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) return std::nullopt;
  return matrix_from_json(parsed, n, length);
}

void JsonFileStore::save(const TransitionMatrix& matrix) {
  static std::atomic<unsigned long> counter{0};
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path target = path_for(matrix.degree(), matrix.length());
  const fs::path temp = target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                        std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) return;
    out << matrix_to_json(matrix).dump() << "\n";
    if (!out.flush()) {
      fs::remove(temp, ec);
      return;
    }
  }
  // A cache that cannot be written only costs recomputation.
  fs::rename(temp, target, ec);
  if (ec) fs::remove(temp, ec);
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("JRING_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

}  // namespace jring::cli
