#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "jring/invariants.hpp"
#include "jring/series.hpp"

namespace jring::cli {

enum class Format { text, json, latex };

std::optional<Format> parse_format(std::string_view name);

// Terms in canonical partition order; x_lambda written with ascending indices,
// e.g. x_1x_3 for lambda = (3,1). Coefficient 1 is omitted on non-constant terms.
std::string render_polynomial(const XPolynomial& p, Format format);
// g(0,2) in text, g_{(0,2)} in LaTeX; the empty label is written as ().
std::string render_label(const Composition& beta, Format format);
std::string render_combination(const JCombination& c, Format format);
// 1 + t + t^2 + 2 t^4 ... up to the order; "t^{12}" style exponents in LaTeX.
std::string render_series(const TruncatedSeries& s, Format format);

// What one command prints. JSON documents carry a single value; text and
// LaTeX documents carry lines.
class OutputDocument {
 public:
  explicit OutputDocument(Format format) : format_(format) {}

  Format format() const { return format_; }
  bool is_json() const { return format_ == Format::json; }

  void add_line(std::string line) { lines_.push_back(std::move(line)); }
  void set_json(nlohmann::json value) { json_ = std::move(value); }

  const nlohmann::json& json() const { return json_; }
  const std::vector<std::string>& lines() const { return lines_; }

  // Compact JSON or the lines, newline-terminated.
  std::string str() const;

 private:
  Format format_;
  nlohmann::json json_;
  std::vector<std::string> lines_;
};

}  // namespace jring::cli
