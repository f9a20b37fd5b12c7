#pragma once

#include "json.hpp"

#include "jring/analysis.hpp"
#include "jring/invariants.hpp"
#include "jring/series.hpp"
#include "jring/symfun.hpp"

namespace jring::cli {

// [beta_1, ..., beta_l] and [lambda_1, ...] (descending).
nlohmann::json to_json(const Composition& beta);
nlohmann::json to_json(const Partition& lambda);
// [{"partition": [...], "coeff": "p/q"}] in canonical order.
nlohmann::json to_json(const XPolynomial& p);
// [{"beta": [...], "coeff": "c"}] in canonical order.
nlohmann::json to_json(const JCombination& c);
// {"order": N, "coeffs": [...]}; throws std::range_error past 64 bits.
nlohmann::json to_json(const TruncatedSeries& s);
// [{"monomial": [[...], ...], "coeff": "p/q"}]
nlohmann::json to_json(const Relation& r);

// Inverses. All throw std::invalid_argument on malformed input.
Composition composition_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);
XPolynomial polynomial_from_json(const nlohmann::json& j);
JCombination combination_from_json(const nlohmann::json& j);
TruncatedSeries series_from_json(const nlohmann::json& j);

// Cache payload: version, n, ell, lambdas, betas, matrix rows of decimal strings.
nlohmann::json matrix_to_json(const TransitionMatrix& m);
// nullopt unless the payload has the current version and exactly the
// canonical index lists and shape for its (n, ell).
std::optional<TransitionMatrix> matrix_from_json(const nlohmann::json& j, int n, int length);

}  // namespace jring::cli
