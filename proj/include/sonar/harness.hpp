#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sonar/classic.hpp"
#include "sonar/error.hpp"
#include "sonar/field.hpp"
#include "sonar/fold.hpp"
#include "sonar/io.hpp"
#include "sonar/number_theory.hpp"
#include "sonar/verify.hpp"

namespace sonar {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den) {
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{num, den} : Rational{num / g, den / g};
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct ComparisonRow {
  std::string construction;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational density;
  bool verified = false;

  std::string params_string() const { return Provenance{construction, params}.params_string(); }

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> skipped;
};

/// Element and coefficient choices for the sweep. Anything not overridden
/// uses the smallest primitive element / smallest irreducible polynomial.
struct ComparisonConfig {
  std::int64_t quad_a = 1, quad_b = 0, quad_c = 0;
  std::int64_t welch_s = 0;
  /// overrides[construction][p or q] = {{"theta", 6}, {"alpha", 6}}
  std::map<std::string, std::map<std::int64_t, std::map<std::string, std::int64_t>>> overrides;

  std::optional<std::int64_t> override_for(const std::string& construction, std::int64_t key,
                                           const std::string& param) const {
    auto c = overrides.find(construction);
    if (c == overrides.end()) return std::nullopt;
    auto k = c->second.find(key);
    if (k == c->second.end()) return std::nullopt;
    auto v = k->second.find(param);
    if (v == k->second.end()) return std::nullopt;
    return v->second;
  }
};

inline ComparisonConfig comparison_config_from_json(const io::Json& j) {
  ComparisonConfig cfg;
  try {
    if (j.contains("quadratic")) {
      const auto& q = j.at("quadratic");
      cfg.quad_a = q.value("a", cfg.quad_a);
      cfg.quad_b = q.value("b", cfg.quad_b);
      cfg.quad_c = q.value("c", cfg.quad_c);
    }
    if (j.contains("welch_s")) cfg.welch_s = j.at("welch_s").get<std::int64_t>();
    if (j.contains("overrides")) {
      for (const auto& [name, by_key] : j.at("overrides").items())
        for (const auto& [key, params] : by_key.items())
          for (const auto& [param, value] : params.items())
            cfg.overrides[name][std::stoll(key)][param] = value.get<std::int64_t>();
    }
  } catch (const io::Json::exception& e) {
    throw Error(Errc::Parse, std::string("bad comparison config: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(Errc::Parse, "override keys must be integers");
  }
  return cfg;
}

/// (m, n) each construction must produce for parameter x (p or q).
inline std::pair<std::int64_t, std::int64_t> expected_dimensions(const std::string& construction,
                                                                  std::int64_t x) {
  if (construction == "quadratic") return {x, x + 1};
  if (construction == "shift") return {x - 1, x};
  if (construction == "welch-exp") return {x, x};
  if (construction == "welch-exp-short") return {x, x - 1};
  if (construction == "welch-log") return {x - 1, x - 1};
  if (construction == "golomb") return {x - 1, x - 2};
  if (construction == "bose-fold") return {x - 1, x};
  if (construction == "ruzsa-fold-mod-p") return {x - 1, x - 1};
  if (construction == "ruzsa-fold-mod-p-minus-1") return {x, x - 1};
  throw Error(Errc::InvalidArgument, "unknown construction " + construction);
}

namespace detail {

inline ComparisonRow make_row(const SonarSeq& seq, std::int64_t x) {
  ComparisonRow row;
  row.construction = seq.provenance().construction;
  const bool folded = row.construction != "quadratic";
  for (const auto& kv : seq.provenance().params) {
    if (kv.first == "m" || kv.first == "index_origin" || (folded && kv.first == "b")) continue;
    row.params.push_back(kv);
  }
  row.m = seq.m();
  row.n = seq.n();
  row.density = Rational::reduced(row.n, row.m);
  row.verified = check_modular(seq, seq.m()).pass;
  const auto [em, en] = expected_dimensions(row.construction, x);
  if (!row.verified || em != row.m || en != row.n)
    throw Error(Errc::InternalInvariant, row.construction + " " + row.params_string() +
                                             " failed verification or its dimension contract");
  return row;
}

inline FieldElem elem(std::int64_t v) { return FieldElem{static_cast<std::uint64_t>(v)}; }

}  // namespace detail

/// Runs every construction for each prime p <= p_max and prime power
/// q <= q_max and verifies each result. Rows are sorted by
/// (construction, m, n, params); constructions whose preconditions do not
/// hold are listed in `skipped`.
inline ComparisonTable run_comparison(std::int64_t p_max, std::int64_t q_max,
                                      const ComparisonConfig& cfg = {}) {
  if (p_max < 3 || q_max < 3) throw Error(Errc::InvalidArgument, "bounds must be >= 3");
  ComparisonTable table;
  auto add = [&](std::int64_t x, const std::string& name, const std::function<SonarSeq()>& build) {
    try {
      table.rows.push_back(detail::make_row(build(), x));
    } catch (const Error& e) {
      if (e.code() == Errc::InternalInvariant) throw;
      table.skipped.push_back(name + " at " + std::to_string(x) + ": " + e.what());
    }
  };

  for (std::int64_t p = 2; p <= p_max; ++p) {
    if (!nt::is_prime(p)) continue;
    const Field f(p, 1);
    const auto g = static_cast<std::int64_t>(f.primitive().value);
    auto pick = [&](const std::string& c, const std::string& param) {
      return cfg.override_for(c, p, param).value_or(g);
    };
    add(p, "quadratic", [&] { return quadratic(p, cfg.quad_a, cfg.quad_b, cfg.quad_c); });
    add(p, "welch-exp", [&] { return welch_exp(p, pick("welch-exp", "alpha"), cfg.welch_s); });
    add(p, "welch-exp-short", [&] { return welch_exp_short(p, pick("welch-exp-short", "alpha")); });
    add(p, "welch-log", [&] { return welch_log(p, pick("welch-log", "alpha")); });
    add(p, "ruzsa-fold-mod-p",
        [&] { return sonar_from_ruzsa_mod_p(p, pick("ruzsa-fold-mod-p", "theta")); });
    add(p, "ruzsa-fold-mod-p-minus-1",
        [&] { return sonar_from_ruzsa_mod_p_minus_1(p, pick("ruzsa-fold-mod-p-minus-1", "theta")); });
  }

  for (std::int64_t q = 2; q <= q_max; ++q) {
    const auto pp = nt::prime_power(q);
    if (!pp) continue;
    const Field small(pp->p, pp->r);
    const Field big(pp->p, 2 * pp->r);
    auto pick = [&](const std::string& c, const std::string& param, FieldElem fallback) {
      return detail::elem(cfg.override_for(c, q, param).value_or(static_cast<std::int64_t>(fallback.value)));
    };
    add(q, "shift", [&] {
      return shift(Embedding(small, big), pick("shift", "alpha", big.primitive()),
                   pick("shift", "beta", small.primitive()));
    });
    add(q, "golomb", [&] {
      return golomb(small, pick("golomb", "alpha", small.primitive()),
                    pick("golomb", "beta", small.primitive()));
    });
    add(q, "bose-fold", [&] {
      return sonar_from_bose(big, pick("bose-fold", "theta", big.primitive()),
                             pick("bose-fold", "alpha", canonical_bose_alpha(big)));
    });
  }

  std::sort(table.rows.begin(), table.rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    return std::tie(a.construction, a.m, a.n, a.params) < std::tie(b.construction, b.m, b.n, b.params);
  });
  return table;
}

enum class ExportFormat { Csv, Json };

inline std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "construction,params,m,n,density,verified\n";
  for (const auto& r : rows)
    out << r.construction << ",\"" << r.params_string() << "\"," << r.m << ',' << r.n << ','
        << r.density.str() << ',' << (r.verified ? "true" : "false") << '\n';
  return out.str();
}

inline io::Json rows_to_json(const std::vector<ComparisonRow>& rows) {
  io::Json arr = io::Json::array();
  for (const auto& r : rows) {
    io::Json params = io::Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    arr.push_back(io::Json{{"construction", r.construction},
                           {"params", params},
                           {"m", r.m},
                           {"n", r.n},
                           {"density", {{"num", r.density.num}, {"den", r.density.den}}},
                           {"verified", r.verified}});
  }
  return arr;
}

inline std::vector<ComparisonRow> rows_from_json(const io::Json& j) {
  std::vector<ComparisonRow> rows;
  try {
    for (const auto& e : j) {
      ComparisonRow r;
      r.construction = e.at("construction").get<std::string>();
      for (const auto& [k, v] : e.at("params").items()) r.params.emplace_back(k, v.get<std::int64_t>());
      r.m = e.at("m").get<std::int64_t>();
      r.n = e.at("n").get<std::int64_t>();
      r.density = {e.at("density").at("num").get<std::int64_t>(), e.at("density").at("den").get<std::int64_t>()};
      r.verified = e.at("verified").get<bool>();
      rows.push_back(std::move(r));
    }
  } catch (const io::Json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
  return rows;
}

inline std::string render(const std::vector<ComparisonRow>& rows, ExportFormat format) {
  return format == ExportFormat::Csv ? to_csv(rows) : rows_to_json(rows).dump(2) + "\n";
}

inline void export_rows(const std::vector<ComparisonRow>& rows, ExportFormat format, const std::string& path) {
  io::write_text(path, render(rows, format));
}

}  // namespace sonar
