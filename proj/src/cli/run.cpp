#include "jring/cli/run.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "jring/analysis.hpp"
#include "jring/cli/format.hpp"
#include "jring/cli/json_io.hpp"
#include "jring/cli/matrix_cache.hpp"
#include "jring/cli/verify.hpp"
#include "jring/invariants.hpp"

namespace jring::cli {

namespace {

using nlohmann::json;

constexpr int kRelationDegreeCap = 14;

// Bad user input detected after CLI11 parsing; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw UsageError(std::string("invalid ") + what + " '" + text + "'");
    out.push_back(value);
  }
  if (out.empty() || text.back() == ',') throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  return out;
}

Composition parse_beta(const std::string& text) {
  if (text == "empty") return Composition::empty();
  const auto values = parse_list(text, "beta");
  std::vector<int> entries;
  for (long v : values) {
    if (v < 0 || v > 1000) throw UsageError("invalid beta '" + text + "'");
    entries.push_back(static_cast<int>(v));
  }
  try {
    return Composition(std::move(entries));
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid beta '" + text + "': the last entry must be positive");
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void emit_polynomial(OutputDocument& doc, const XPolynomial& p) {
  if (doc.is_json())
    doc.set_json(to_json(p));
  else
    doc.add_line(render_polynomial(p, doc.format()));
}

void emit_combination(OutputDocument& doc, const JCombination& c) {
  if (doc.is_json())
    doc.set_json(to_json(c));
  else
    doc.add_line(render_combination(c, doc.format()));
}

std::string render_generator_monomial(const GeneratorMonomial& m, Format format) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!out.empty()) out += " ";
    out += render_label(m[i], format);
    if (j - i > 1) {
      const std::string e = std::to_string(j - i);
      out += "^" + (format == Format::latex && e.size() > 1 ? "{" + e + "}" : e);
    }
    i = j;
  }
  return out;
}

std::string render_relation(const Relation& r, Format format) {
  std::string out;
  for (const auto& [m, c] : r.terms) {
    const Rational a = abs(c);
    std::string coeff = to_string(a);
    if (format == Format::latex && !is_integral(a))
      coeff = "\\frac{" + to_string(Integer(a.get_num())) + "}{" + to_string(Integer(a.get_den())) + "}";
    std::string body = render_generator_monomial(m, format);
    if (coeff != "1") body = coeff + " " + body;
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out + " = 0";
}

std::string render_chern_key(const std::vector<int>& exps, Format format) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += " ";
    const std::string e = std::to_string(exps[i]);
    out += "e_" + std::to_string(i + 2);
    if (exps[i] > 1) out += "^" + (format == Format::latex && e.size() > 1 ? "{" + e + "}" : e);
  }
  return out;
}

void emit_dims(OutputDocument& doc, const DimensionTable& table) {
  const int n_max = table.n_max;
  if (doc.is_json()) {
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
      std::vector<int> cells;
      for (int l = 1; l <= n; ++l) cells.push_back(table.cell(n, l));
      rows.push_back({{"n", n}, {"dims", cells}, {"total", table.total(n)}});
    }
    doc.set_json({{"n_max", n_max}, {"rows", rows}, {"agree", table.agree()}});
    return;
  }
  auto pad = [](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  if (doc.format() == Format::latex) {
    doc.add_line("\\begin{tabular}{c|" + std::string(static_cast<std::size_t>(n_max), 'c') + "|c}");
    std::string header = "$n \\backslash \\ell$";
    for (int l = 1; l <= n_max; ++l) header += " & " + std::to_string(l);
    doc.add_line(header + " & total \\\\ \\hline");
    for (int n = 1; n <= n_max; ++n) {
      std::string row = std::to_string(n);
      for (int l = 1; l <= n_max; ++l) row += " & " + (l <= n ? std::to_string(table.cell(n, l)) : "");
      doc.add_line(row + " & " + std::to_string(table.total(n)) + " \\\\");
    }
    doc.add_line("\\end{tabular}");
    return;
  }
  std::string header = pad("n", 3) + " |";
  for (int l = 1; l <= n_max; ++l) header += pad(std::to_string(l), 3);
  doc.add_line(header + " | total");
  for (int n = 1; n <= n_max; ++n) {
    std::string row = pad(std::to_string(n), 3) + " |";
    for (int l = 1; l <= n_max; ++l) row += pad(l <= n ? std::to_string(table.cell(n, l)) : "", 3);
    doc.add_line(row + " | " + pad(std::to_string(table.total(n)), 5));
  }
}

// Attaches the on-disk store for the duration of one invocation. The memo is
// cleared on both ends so every lookup consults the store.
class CacheScope {
 public:
  explicit CacheScope(const std::optional<std::filesystem::path>& dir) : active_(dir.has_value()) {
    if (!active_) return;
    transition_cache().clear();
    transition_cache().set_store(std::make_shared<JsonFileStore>(*dir));
  }
  ~CacheScope() {
    if (!active_) return;
    transition_cache().set_store(nullptr);
    transition_cache().clear();
  }
  CacheScope(const CacheScope&) = delete;
  CacheScope& operator=(const CacheScope&) = delete;

 private:
  bool active_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the ring J of invariant polynomials", "jring"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string cache_flag;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--cache-dir", cache_flag, "Transition-matrix cache directory (else $JRING_CACHE)");

  int n = 0, ell = 0, max_degree = 0, max_n = 0, order = 0, degree = 0;
  bool zero_only = false;
  std::string beta_a, beta_b, method = "tilde", which, k_list;

  auto* basis = app.add_subcommand("basis", "List g_beta for beta in B_n^(l)");
  basis->add_option("--n", n, "Weight")->required()->check(CLI::Range(1, 60));
  basis->add_option("--ell", ell, "Length")->required()->check(CLI::Range(1, 60));
  basis->add_flag("--zero-only", zero_only, "Restrict to B(0)");

  auto* poly = app.add_subcommand("poly", "Print g_beta");
  poly->add_option("beta", beta_a, "Label, e.g. 0,2 or empty")->required();

  auto* product = app.add_subcommand("product", "Expand g_beta g_beta' over the basis");
  product->add_option("beta", beta_a)->required();
  product->add_option("beta_prime", beta_b)->required();

  auto* lift = app.add_subcommand("lift", "Lift of g_beta to a series with dF = F");
  lift->add_option("beta", beta_a)->required();
  lift->add_option("--max-degree", max_degree)->required()->check(CLI::Range(1, 60));
  lift->add_option("--method", method)->check(CLI::IsMember({"tilde", "exp"}));

  auto* chern = app.add_subcommand("chern", "ch-series coefficients at e_1 = 0, or at numeric k");
  auto* chern_ell = chern->add_option("--ell", ell, "Formal length")->check(CLI::Range(2, 30));
  auto* chern_k = chern->add_option("--k", k_list, "Comma-separated integers");
  chern_ell->excludes(chern_k);
  chern->add_option("--max-degree", max_degree)->required()->check(CLI::Range(1, 60));

  auto* dims = app.add_subcommand("dims", "Table of dim J_n^(l)");
  dims->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 40));

  auto* series = app.add_subcommand("series", "Poincare series J(t) or J^(l)(t)");
  series->add_option("--which", which)->required()->check(CLI::IsMember({"J", "Jl"}));
  series->add_option("--ell", ell)->check(CLI::Range(0, 200));
  series->add_option("--order", order)->required()->check(CLI::Range(1, 200));

  auto* generators = app.add_subcommand("generators", "Leading-term generator candidates");
  generators->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 30));

  auto* relations = app.add_subcommand("relations", "Relations among generator candidates");
  relations->add_option("--degree", degree)->required()->check(CLI::Range(1, kRelationDegreeCap));

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 20));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "jring: " << e.what() << "\n";
    return 2;
  }

  OutputDocument doc(*parse_format(format_name));
  const Format format = doc.format();
  int status = 0;
  try {
    CacheScope cache(resolve_cache_dir(cache_flag.empty() ? std::nullopt
                                                          : std::optional<std::string>(cache_flag)));
    if (*basis) {
      require(ell <= n, "--ell must not exceed --n");
      json items = json::array();
      for (const auto& beta : enumerate_compositions(n, ell)) {
        if (zero_only && !beta.in_zero_set()) continue;
        const auto g = g_poly(beta);
        if (doc.is_json())
          items.push_back({{"beta", to_json(beta)}, {"polynomial", to_json(g)}});
        else
          doc.add_line(render_label(beta, format) + " = " + render_polynomial(g, format));
      }
      if (doc.is_json()) doc.set_json(items);
    } else if (*poly) {
      emit_polynomial(doc, g_poly(parse_beta(beta_a)));
    } else if (*product) {
      emit_combination(doc, structure_constants(parse_beta(beta_a), parse_beta(beta_b)));
    } else if (*lift) {
      const auto beta = parse_beta(beta_a);
      require(beta.in_zero_set(), "lift needs beta in B(0)");
      require(max_degree >= beta.weight(), "--max-degree is below the weight of beta");
      if (method == "tilde")
        emit_polynomial(doc, lift_tilde(beta, max_degree));
      else {
        require(!beta.is_empty(), "the exponential lift needs a label of positive weight");
        emit_polynomial(doc, lift_exp(g_poly(beta), max_degree));
      }
    } else if (*chern) {
      require(chern_ell->count() + chern_k->count() == 1, "chern needs exactly one of --ell or --k");
      if (chern_k->count() > 0) {
        const auto k = parse_list(k_list, "k");
        emit_polynomial(doc, ch_numeric(k, max_degree));
      } else {
        json items = json::array();
        for (const auto& [exps, g] : chern_coefficients(ell, max_degree)) {
          if (doc.is_json())
            items.push_back({{"exponents", exps}, {"polynomial", to_json(g)}});
          else
            doc.add_line(render_chern_key(exps, format) + ": " + render_polynomial(g, format));
        }
        if (doc.is_json()) doc.set_json(items);
      }
    } else if (*dims) {
      const auto table = dimension_table(max_n, Execution::parallel);
      emit_dims(doc, table);
      for (const auto& m : table.mismatches) err << "jring: mismatch " << m << "\n";
      if (!table.agree()) status = 1;
    } else if (*series) {
      std::optional<int> length;
      if (which == "Jl") {
        require(series->count("--ell") > 0, "--which Jl needs --ell");
        length = ell;
      }
      const auto s = poincare_series(order, length);
      if (doc.is_json())
        doc.set_json(to_json(s));
      else
        doc.add_line(render_series(s, format));
    } else if (*generators) {
      json items = json::array();
      for (const auto& beta : generator_candidates(max_n)) {
        if (doc.is_json())
          items.push_back(to_json(beta));
        else
          doc.add_line(render_label(beta, format));
      }
      if (doc.is_json()) doc.set_json(items);
    } else if (*relations) {
      const auto found = find_relations(degree, generator_candidates(degree));
      json items = json::array();
      for (const auto& r : found) {
        if (doc.is_json())
          items.push_back(to_json(r));
        else
          doc.add_line(render_relation(r, format));
      }
      if (doc.is_json()) doc.set_json(items);
    } else if (*verify) {
      const auto results = run_verify(max_n);
      bool all = true;
      json suites = json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        if (doc.is_json())
          suites.push_back({{"name", r.name}, {"passed", r.passed}});
        else
          doc.add_line((r.passed ? "PASS " : "FAIL ") + r.name);
      }
      if (doc.is_json()) doc.set_json({{"passed", all}, {"suites", suites}});
      if (!all) status = 1;
    }
  } catch (const UsageError& e) {
    err << "jring: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "jring: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "jring: " << e.what() << "\n";
    return 1;
  }
  out << doc.str();
  return status;
}

}  // namespace jring::cli
