#include "jring/cli/format.hpp"

#include <map>

namespace jring::cli {

namespace {

std::string braced(long value, Format format) {
  const std::string s = std::to_string(value);
  if (s.size() == 1) return s;
  return format == Format::latex ? "{" + s + "}" : s;
}

std::string monomial(const Partition& lambda, Format format) {
  std::map<int, int> powers;
  for (int part : lambda.parts()) ++powers[part];
  std::string out;
  for (const auto& [index, exponent] : powers) {
    out += "x_" + (format == Format::latex ? braced(index, format) : std::to_string(index));
    if (exponent > 1) out += "^" + braced(exponent, format);
  }
  return out;
}

std::string magnitude(const Rational& c, Format format) {
  if (is_integral(c)) return to_string(c);
  if (format == Format::latex)
    return "\\frac{" + to_string(Integer(c.get_num())) + "}{" + to_string(Integer(c.get_den())) + "}";
  return to_string(c);
}

// Joins signed terms as "a - b + c"; a leading minus has no space.
void append_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty())
    out = (negative ? "-" : "") + body;
  else
    out += (negative ? " - " : " + ") + body;
}

std::string scaled(const std::string& coeff, const std::string& body) {
  if (body.empty()) return coeff;
  if (coeff == "1") return body;
  return coeff + " " + body;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  return std::nullopt;
}

std::string render_polynomial(const XPolynomial& p, Format format) {
  std::string out;
  for (const auto& [lambda, c] : p.terms()) {
    const Rational abs_c = abs(c);
    append_term(out, c < 0, scaled(magnitude(abs_c, format), monomial(lambda, format)));
  }
  return out.empty() ? "0" : out;
}

std::string render_label(const Composition& beta, Format format) {
  return format == Format::latex ? "g_{" + to_string(beta) + "}" : "g" + to_string(beta);
}

std::string render_combination(const JCombination& c, Format format) {
  std::string out;
  for (const auto& [beta, coeff] : c.terms()) {
    const Integer abs_c = abs(coeff);
    append_term(out, coeff < 0, scaled(to_string(abs_c), render_label(beta, format)));
  }
  return out.empty() ? "0" : out;
}

std::string render_series(const TruncatedSeries& s, Format format) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    const Integer& c = s[n];
    if (c == 0) continue;
    std::string power;
    if (n == 1) power = "t";
    if (n > 1) power = "t^" + braced(n, format);
    const Integer abs_c = abs(c);
    append_term(out, c < 0, scaled(to_string(abs_c), power));
  }
  if (out.empty()) out = "0";
  return out + (format == Format::latex ? " + \\cdots" : " + ...");
}

std::string OutputDocument::str() const {
  if (is_json()) return json_.dump() + "\n";
  std::string out;
  for (const auto& line : lines_) out += line + "\n";
  return out;
}

}  // namespace jring::cli
