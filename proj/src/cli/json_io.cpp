#include "jring/cli/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace jring::cli {

using nlohmann::json;

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::string coeff_string(const json& term) {
  if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string())
    throw std::invalid_argument("term needs a string \"coeff\"");
  return term["coeff"].get<std::string>();
}

}  // namespace

json to_json(const Composition& beta) {
  return json(std::vector<int>(beta.entries().begin(), beta.entries().end()));
}

json to_json(const Partition& lambda) {
  return json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

json to_json(const XPolynomial& p) {
  json out = json::array();
  for (const auto& [lambda, c] : p.terms())
    out.push_back({{"partition", to_json(lambda)}, {"coeff", to_string(c)}});
  return out;
}

json to_json(const JCombination& c) {
  json out = json::array();
  for (const auto& [beta, coeff] : c.terms())
    out.push_back({{"beta", to_json(beta)}, {"coeff", to_string(coeff)}});
  return out;
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) {
    if (!c.fits_slong_p()) throw std::range_error("series coefficient exceeds 64 bits");
    coeffs.push_back(c.get_si());
  }
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Relation& r) {
  json out = json::array();
  for (const auto& [monomial, c] : r.terms) {
    json factors = json::array();
    for (const auto& beta : monomial) factors.push_back(to_json(beta));
    out.push_back({{"monomial", factors}, {"coeff", to_string(c)}});
  }
  return out;
}

Composition composition_from_json(const json& j) { return Composition(int_array(j, "beta")); }

Partition partition_from_json(const json& j) {
  auto parts = int_array(j, "partition");
  return Partition(std::move(parts));
}

XPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  XPolynomial out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("partition"))
      throw std::invalid_argument("term needs \"partition\"");
    out.add_term(partition_from_json(term["partition"]), parse_rational(coeff_string(term)));
  }
  return out;
}

JCombination combination_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("combination must be an array");
  JCombination out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("beta")) throw std::invalid_argument("term needs \"beta\"");
    out.add_term(composition_from_json(term["beta"]), parse_integer(coeff_string(term)));
  }
  return out;
}

TruncatedSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_integer() || !j["coeffs"].is_array())
    throw std::invalid_argument("series needs integer \"order\" and array \"coeffs\"");
  const int order = j["order"].get<int>();
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_number_integer()) throw std::invalid_argument("series coefficients must be integers");
    coeffs.emplace_back(c.get<long>());
  }
  if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("series needs order + 1 coefficients");
  return TruncatedSeries(order, std::move(coeffs));
}

json matrix_to_json(const TransitionMatrix& m) {
  json lambdas = json::array();
  for (const auto& lambda : m.lambdas()) lambdas.push_back(to_json(lambda));
  json betas = json::array();
  for (const auto& beta : m.betas()) betas.push_back(to_json(beta));
  json rows = json::array();
  for (std::size_t r = 0; r < m.lambdas().size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.betas().size(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"version", TransitionCache::kVersion},
          {"n", m.degree()},
          {"ell", m.length()},
          {"lambdas", lambdas},
          {"betas", betas},
          {"matrix", rows}};
}

std::optional<TransitionMatrix> matrix_from_json(const json& j, int n, int length) {
  try {
    if (!j.is_object() || j.at("version") != TransitionCache::kVersion || j.at("n") != n ||
        j.at("ell") != length)
      return std::nullopt;
    const auto lambdas = enumerate_partitions(n, length);
    const auto betas = enumerate_compositions(n, length);
    const json& jl = j.at("lambdas");
    const json& jb = j.at("betas");
    const json& rows = j.at("matrix");
    if (jl.size() != lambdas.size() || jb.size() != betas.size() || rows.size() != lambdas.size())
      return std::nullopt;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      if (partition_from_json(jl[i]) != lambdas[i]) return std::nullopt;
    for (std::size_t i = 0; i < betas.size(); ++i)
      if (composition_from_json(jb[i]) != betas[i]) return std::nullopt;
    std::vector<Integer> entries;
    entries.reserve(lambdas.size() * betas.size());
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != betas.size()) return std::nullopt;
      for (const auto& v : row) entries.push_back(parse_integer(v.get<std::string>()));
    }
    return TransitionMatrix(n, length, lambdas, betas, std::move(entries));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace jring::cli
