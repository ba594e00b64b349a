// Copyright 2026 The hzknots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "checks.hpp"
#include "hzknots/analysis/analysis.hpp"
#include "hzknots/io/poly_expr.hpp"
#include "hzknots/zeros/zeros.hpp"
#include "pool.hpp"

namespace hzknots::cli {

namespace {

// Result of one batch item, in input order.
struct Item {
  Json json;
  std::string text;
  int code = kOk;
};

std::vector<KnotFamily> parse_ids(const std::vector<std::string>& ids, const RunConfig& config) {
  std::vector<KnotFamily> out;
  for (const auto& id : ids) {
    try {
      out.push_back(parse_family_id(id, config.extrapolate));
    } catch (const std::invalid_argument& e) {
      throw UsageError(id + ": " + e.what());
    }
  }
  return out;
}

HomflyOptions homfly_options(const RunConfig& config) { return {config.sign, config.extrapolate}; }

Json rf_json(const RationalFunc& f) { return {{"num", f.num().to_string()}, {"den", f.den().to_string()}}; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Runs `work` per family on the pool. Errors become per-item results so one
// bad member does not hide the others.
template <class F>
Outcome run_batch(const std::string& command, const std::vector<KnotFamily>& families, const RunConfig& config, F work) {
  const auto items = checks::ordered_map<Item>(families.size(), config.jobs, [&](std::size_t i) {
    Item item;
    try {
      item = work(families[i]);
    } catch (const NonConvergence& e) {
      item.code = kNonConvergence;
      item.json = {{"error", e.what()}};
      item.text = std::string("  error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
      item.code = kFailure;
      item.json = {{"error", e.what()}};
      item.text = std::string("  error: ") + e.what() + "\n";
    }
    Json tagged = {{"id", families[i].to_id()}};
    tagged.update(item.json);
    item.json = std::move(tagged);
    item.text = families[i].to_id() + "\n" + item.text;
    return item;
  });
  Outcome out;
  out.json = {{"command", command}, {"results", Json::array()}};
  for (const auto& item : items) {
    out.json["results"].push_back(item.json);
    out.text += item.text;
    out.exit_code = std::max(out.exit_code, item.code);
  }
  return out;
}

struct ZResult {
  HZFunction z;
  std::vector<std::string> routes;
  std::optional<bool> match;
};

ZResult compute_z(const KnotFamily& family, Routes routes, const RunConfig& config, HomflyRegistry& registry) {
  const bool pipeline = routes.pipeline || !routes.closed_form;
  ZResult out;
  std::optional<HZFunction> closed;
  if (routes.closed_form) {
    closed = family_hz_closed(family, config.extrapolate);
    if (config.sign < 0) closed->value = -closed->value;
    out.routes.push_back("closed_form");
  }
  if (pipeline) {
    out.z = hz_pipeline(family, registry);
    out.routes.push_back("pipeline");
    if (closed) out.match = out.z.value == closed->value;
  } else {
    out.z = *closed;
  }
  return out;
}

// Adds route information; a mismatch is an identity failure in strict mode.
void add_routes(Item& item, const ZResult& r, const RunConfig& config) {
  item.json["source"] = r.z.source;
  item.json["routes"] = r.routes;
  if (r.match) {
    item.json["match"] = *r.match;
    item.text += std::string("  closed form vs pipeline: ") + (*r.match ? "match" : "MISMATCH") + "\n";
    if (!*r.match && config.strict) item.code = kIdentity;
  }
}

std::string factor_text(const BasisFactor& f) {
  std::string s = std::string("(1 ") + (f.sign > 0 ? "-" : "+") + " lambda";
  if (f.k != 0) s += "*q^" + std::to_string(f.k);
  s += ")";
  if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  return s;
}

Json factors_json(const std::vector<BasisFactor>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back({{"sign", f.sign}, {"k", f.k}, {"multiplicity", f.multiplicity}});
  return out;
}

std::string factors_text(const std::vector<BasisFactor>& factors) {
  if (factors.empty()) return "none";
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : " ") + factor_text(f);
  return s;
}

void add_factorization(Item& item, const FactoredForm& f) {
  item.json["factorization"] = {
      {"fully_factorized", f.fully_factorized},
      {"prefactor", {{"coeff", to_string(f.coeff)}, {"q_exp", f.q_exp}, {"lambda_exp", f.lambda_exp}}},
      {"num_factors", factors_json(f.num_factors)},
      {"den_factors", factors_json(f.den_factors)},
      {"residual", f.residual.to_string()},
      {"den_residual", f.den_residual.to_string()},
  };
  std::ostringstream t;
  t << "  fully_factorized: " << yes_no(f.fully_factorized) << "\n"
    << "  prefactor: " << to_string(f.coeff) << "*q^" << f.q_exp << "*lambda^" << f.lambda_exp << "\n"
    << "  numerator factors: " << factors_text(f.num_factors) << "\n"
    << "  denominator factors: " << factors_text(f.den_factors) << "\n";
  if (!f.residual.is_constant()) t << "  residual: " << f.residual.to_string() << "\n";
  item.text += t.str();
}

}  // namespace

Outcome cmd_homfly(const std::vector<std::string>& ids, const RunConfig& config) {
  HomflyRegistry registry(homfly_options(config));
  return run_batch("homfly", parse_ids(ids, config), config, [&](const KnotFamily& f) {
    const HomflyPair h = registry.get(f);
    Item item;
    item.json = {{"normalized", h.normalized.to_string()}, {"unnormalized", h.unnormalized.to_string()}};
    item.text = "  normalized: " + h.normalized.to_string() + "\n  unnormalized: " + h.unnormalized.to_string() + "\n";
    return item;
  });
}

Outcome cmd_hz(const std::vector<std::string>& ids, Routes routes, bool check_factorized, const RunConfig& config) {
  HomflyRegistry registry(homfly_options(config));
  return run_batch("hz", parse_ids(ids, config), config, [&](const KnotFamily& f) {
    const ZResult r = compute_z(f, routes, config, registry);
    Item item;
    item.json["z"] = rf_json(r.z.value);
    item.text = "  Z = " + r.z.value.to_string() + "\n";
    add_routes(item, r, config);
    if (check_factorized) add_factorization(item, factorize(r.z));
    return item;
  });
}

Outcome cmd_expand(const std::vector<std::string>& ids, Routes routes, const RunConfig& config) {
  HomflyRegistry registry(homfly_options(config));
  return run_batch("expand", parse_ids(ids, config), config, [&](const KnotFamily& f) {
    const ZResult r = compute_z(f, routes, config, registry);
    const ExpansionReport e = expand_at_1(r.z, config.order);
    Item item;
    Json coeffs = Json::object();
    std::ostringstream t;
    for (const auto& [exp, c] : e.coeffs) {
      coeffs[std::to_string(exp)] = to_string(c);
      t << "  a_" << exp << " = " << to_string(c) << "\n";
    }
    item.json = {{"max_exp", e.max_exp},
                 {"coeffs", coeffs},
                 {"odd_coeff_max_abs", to_string(e.odd_coeff_max_abs)},
                 {"denominator_lcm", e.denominator_lcm.get_str()},
                 {"odd_modulus", e.odd_modulus.get_str()}};
    t << "  odd coefficients max |a|: " << to_string(e.odd_coeff_max_abs) << "\n"
      << "  denominator lcm " << e.denominator_lcm.get_str() << ", odd part " << e.odd_modulus.get_str() << "\n";
    std::optional<BigRational> closed;
    try {
      if (f.is_twisted()) closed = a2_closed_form(f);
    } catch (const std::invalid_argument&) {
    }
    if (closed) {
      const BigRational a2 = *closed;
      const bool match = a2 == e.a(-2);
      item.json["a2_closed_form"] = to_string(a2);
      item.json["a2_match"] = match;
      t << "  a_-2 closed form: " << to_string(a2) << (match ? " (match)" : " (MISMATCH)") << "\n";
      if (!match && config.strict) item.code = kIdentity;
    }
    item.text = t.str();
    add_routes(item, r, config);
    return item;
  });
}

Outcome cmd_residues(const std::vector<std::string>& ids, Routes routes, const RunConfig& config) {
  HomflyRegistry registry(homfly_options(config));
  return run_batch("residues", parse_ids(ids, config), config, [&](const KnotFamily& f) {
    const ZResult r = compute_z(f, routes, config, registry);
    const ResidueReport rep = lambda_residues(r.z);
    Item item;
    Json poles = Json::array();
    std::ostringstream t;
    for (const auto& p : rep.poles) {
      poles.push_back({{"sign", p.sign}, {"k", p.k}, {"order", p.order}, {"residue", rf_json(p.residue)}});
      t << "  pole lambda = " << (p.sign < 0 ? "-" : "") << "q^" << -p.k << " (order " << p.order
        << "): " << p.residue.to_string() << "\n";
    }
    item.json = {{"poles", poles},
                 {"finite_sum", rf_json(rep.finite_sum)},
                 {"infinity_residue", rf_json(rep.infinity_residue)},
                 {"finite_sum_is_one", rep.finite_sum_is_one},
                 {"total_is_zero", rep.total_is_zero},
                 {"q_poles_at_roots_of_unity", rep.q_poles_at_roots_of_unity}};
    t << "  finite_sum: " << rep.finite_sum.to_string() << "\n"
      << "  infinity: " << rep.infinity_residue.to_string() << "\n"
      << "  total_is_zero: " << yes_no(rep.total_is_zero) << "\n"
      << "  q_poles_at_roots_of_unity: " << yes_no(rep.q_poles_at_roots_of_unity) << "\n";
    bool ok = rep.finite_sum_is_one && rep.total_is_zero;
    if (f.is_twisted()) {
      const Lambda2Check l2 = lambda2_partial_residue_check(f, config.extrapolate);
      item.json["lambda2"] = {{"factorized_sum", rf_json(l2.factorized_sum)},
                              {"correction_sum", rf_json(l2.correction_sum)},
                              {"pass", l2.pass}};
      t << "  lambda^2 split: factorized part " << l2.factorized_sum.to_string() << ", correction "
        << l2.correction_sum.to_string() << "\n";
      ok = ok && l2.pass;
    }
    item.text = t.str();
    if (!ok && config.strict) item.code = kIdentity;
    add_routes(item, r, config);
    return item;
  });
}

Outcome cmd_zeros(const std::vector<std::string>& ids, Routes routes, const RunConfig& config) {
  const auto families = parse_ids(ids, config);
  if ((!config.csv_path.empty() || !config.svg_path.empty()) && families.size() != 1)
    throw UsageError("--csv and --svg take a single family id");
  ZeroOptions options;
  options.precision_bits = config.precision_bits;
  options.circle_tol = config.circle_tol;
  options.pair_tol = config.pair_tol;
  HomflyRegistry registry(homfly_options(config));
  return run_batch("zeros", families, config, [&](const KnotFamily& f) {
    const ZResult r = compute_z(f, routes, config, registry);
    const ZeroSet s = zero_set(r.z, options);
    Item item;
    Json roots = Json::array();
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
      const Root& root = s.roots[i];
      roots.push_back({{"re", root.value.re.to_string(20)},
                       {"im", root.value.im.to_string(20)},
                       {"modulus", abs(root.value).to_string(20)},
                       {"class", to_string(s.classes[i])},
                       {"multiplicity", root.multiplicity},
                       {"error_radius", root.error_radius.to_string(3)},
                       {"residual", root.residual.to_string(3)}});
    }
    Json counts = Json::object();
    std::string count_text;
    for (RootClass c : {RootClass::OnCircle, RootClass::ConformalPair, RootClass::RealNegative, RootClass::Unclassified}) {
      counts[to_string(c)] = s.count(c);
      count_text += (count_text.empty() ? "" : ", ") + to_string(c) + " " + std::to_string(s.count(c));
    }
    const std::string product = s.roots.empty() ? "1" : s.product_of_moduli.to_string(20);
    item.json = {{"polynomial", s.polynomial.to_string()},
                 {"degree", s.root_count()},
                 {"counts", counts},
                 {"product_of_moduli", product},
                 {"exact_endpoint_check", s.exact_endpoint_check},
                 {"classified", s.classified},
                 {"min_spacing", s.min_spacing},
                 {"roots", roots}};
    std::ostringstream t;
    t << "  degree " << s.root_count() << ": " << count_text << "\n"
      << "  product of moduli: " << product << "\n"
      << "  exact endpoint check: " << yes_no(s.exact_endpoint_check) << "\n"
      << "  min spacing: " << s.min_spacing << "\n";
    item.text = t.str();
    add_routes(item, r, config);
    auto write = [&](const std::string& path, PlotFormat format) {
      if (path.empty()) return;
      std::ofstream file(path, std::ios::binary);
      if (!file || !(file << emit_plot(s, format))) throw std::runtime_error("cannot write " + path);
      item.text += "  wrote " + path + "\n";
    };
    write(config.csv_path, PlotFormat::Csv);
    write(config.svg_path, PlotFormat::Svg);
    return item;
  });
}

namespace {

struct IngestLine {
  int line = 0;
  std::string name;
  LaurentPoly normalized;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Outcome cmd_ingest(const std::string& path, const RunConfig& config) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);

  Outcome out;
  out.json = {{"command", "ingest"}, {"results", Json::array()}, {"errors", Json::array()}};
  std::vector<IngestLine> lines;
  std::string errors_text;
  std::string raw;
  for (int number = 1; std::getline(file, raw); ++number) {
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto colon = raw.find(':');
    std::string message;
    std::size_t column = 1;
    if (colon == std::string::npos) {
      message = "expected 'name : polynomial'";
    } else if (trim(std::string_view(raw).substr(0, colon)).empty()) {
      message = "empty knot name";
    } else {
      try {
        lines.push_back({number, trim(std::string_view(raw).substr(0, colon)), parse_poly(raw.substr(colon + 1))});
        continue;
      } catch (const ParseError& e) {
        message = e.what();
        column = colon + 2 + e.position();
      }
    }
    out.json["errors"].push_back({{"line", number}, {"column", column}, {"message", message}});
    errors_text += path + ":" + std::to_string(number) + ":" + std::to_string(column) + ": " + message + "\n";
    if (config.strict) {
      out.text = errors_text;
      out.exit_code = kUsage;
      return out;
    }
  }

  const auto rows = checks::ordered_map<Item>(lines.size(), config.jobs, [&](std::size_t i) {
    const IngestLine& l = lines[i];
    Item item;
    item.json = {{"line", l.line}, {"name", l.name}};
    try {
      const HZTableResult r = hz_from_table(l.normalized, config.sign, l.name);
      const bool factorized = factorize(r.hz).fully_factorized;
      item.json["fully_factorized"] = factorized;
      item.json["z"] = rf_json(r.hz.value);
      item.json["warnings"] = r.warnings;
      item.text = std::to_string(l.line) + "\t" + l.name + "\t" + yes_no(factorized) + "\t" + r.hz.value.to_string() + "\n";
      for (const auto& w : r.warnings) item.text += "\twarning: " + w + "\n";
    } catch (const std::exception& e) {
      item.json["error"] = e.what();
      item.text = std::to_string(l.line) + "\t" + l.name + "\terror\t" + e.what() + "\n";
      item.code = kFailure;
    }
    return item;
  });
  out.text = "line\tname\tfully_factorized\tZ\n";
  for (const auto& row : rows) {
    out.json["results"].push_back(row.json);
    out.text += row.text;
    out.exit_code = std::max(out.exit_code, row.code);
  }
  out.text += errors_text;
  return out;
}

Outcome cmd_verify(const std::string& suite, bool quick, const RunConfig& config) {
  std::vector<std::string> suites = checks::suite_names();
  if (suite != "all") {
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) throw UsageError("unknown suite '" + suite + "'");
    suites = {suite};
  }
  checks::Ranges ranges = quick ? checks::Ranges::quick() : checks::Ranges::full();
  ranges.precision_bits = config.precision_bits;
  ranges.jobs = config.jobs;

  Outcome out;
  Json list = Json::array();
  bool pass = true;
  for (const auto& name : suites) {
    const auto results = checks::run_suite(name, ranges);
    pass = pass && checks::all_pass(results);
    for (const auto& c : results) {
      list.push_back({{"suite", name}, {"name", c.name}, {"pass", c.pass}, {"required", c.required}, {"detail", c.detail}});
      out.text += std::string(!c.required ? "info" : (c.pass ? "PASS" : "FAIL")) + " " + name + "/" + c.name + ": " + c.detail + "\n";
    }
  }
  out.json = {{"command", "verify"}, {"suite", suite}, {"quick", quick}, {"pass", pass}, {"checks", list}};
  out.text += pass ? "all checks pass\n" : "some checks fail\n";
  out.exit_code = pass ? kOk : kIdentity;
  return out;
}

}  // namespace hzknots::cli
