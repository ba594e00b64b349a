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

#include "checks.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hzknots/algebra/gcd.hpp"
#include "hzknots/analysis/analysis.hpp"
#include "hzknots/homfly/jones.hpp"
#include "hzknots/io/poly_expr.hpp"
#include "hzknots/zeros/zeros.hpp"
#include "pool.hpp"

namespace hzknots::checks {

namespace {

const FamilyId kTwisted[] = {FamilyId::Fam_2k_2,        FamilyId::Fam_2k1_2,      FamilyId::Fam_2k1_1_2,
                             FamilyId::Fam_2k2_3,       FamilyId::Pretzel_2_3_2k1, FamilyId::App_2k_1_1_2,
                             FamilyId::App_2_2km1_1_2, FamilyId::App_4_2k2,       FamilyId::App_2k2_1_3};

std::vector<KnotFamily> torus_knots(int max_m, int max_n) {
  std::vector<KnotFamily> out;
  for (int m = 2; m <= max_m; ++m)
    for (int n = m + 1; n <= max_n; ++n)
      if (std::gcd(m, n) == 1) out.push_back(KnotFamily::torus(m, n));
  return out;
}

// Collects failures and a pass count for one criterion.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    if (failures_.size() < kShown) failures_.push_back(what);
    ++failed_;
  }
  void note(const std::string& text) { notes_.push_back(text); }

  Check done(bool required = true) const {
    std::ostringstream out;
    if (total_ > 0) out << total_ - failed_ << "/" << total_ << " ok";
    if (failed_ > 0) {
      out << "; failing:";
      for (const auto& f : failures_) out << " " << f;
      if (failed_ > failures_.size()) out << " ...";
    }
    for (const auto& n : notes_) out << (out.tellp() > 0 ? "; " : "") << n;
    return {name_, failed_ == 0, required, out.str()};
  }

 private:
  static constexpr std::size_t kShown = 12;
  std::string name_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

bool is_twisted_in_range(const KnotFamily& f) { return f.is_twisted() && f.k >= (f.id == FamilyId::Pretzel_2_3_2k1 ? 0 : 1); }

// Compresses per-family failure lists, e.g. "fam:2k2 k=1..12 (negated)".
class FamilyFailures {
 public:
  void add(const KnotFamily& f, const std::string& tag) { by_family_[family_prefix(f.id) + tag].push_back(f.k); }
  void flush(Tally& tally) const {
    for (const auto& [key, ks] : by_family_) {
      std::string range = std::to_string(ks.front());
      if (ks.size() > 1) range += ".." + std::to_string(ks.back()) + " (" + std::to_string(ks.size()) + " members)";
      tally.note(key + " k=" + range);
    }
  }
  bool empty() const { return by_family_.empty(); }

 private:
  std::map<std::string, std::vector<int>> by_family_;
};

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass || !c.required; });
}

Ranges Ranges::quick() {
  Ranges r;
  r.torus_m = 3;
  r.torus_n = 7;
  r.k_max = 4;
  r.zero_torus_m = 3;
  r.zero_torus_n = 11;
  r.zero_pretzel_k = 10;
  r.zero_family_k = 4;
  return r;
}

std::vector<Member> build_corpus(const Ranges& ranges) {
  std::vector<KnotFamily> knots = torus_knots(ranges.torus_m, ranges.torus_n);
  for (FamilyId id : kTwisted)
    for (int k = min_twist(id); k <= ranges.k_max; ++k) knots.push_back(KnotFamily::twisted(id, k));
  HomflyRegistry registry;
  return ordered_map<Member>(knots.size(), ranges.jobs, [&](std::size_t i) {
    const KnotFamily& f = knots[i];
    return Member{f, registry.get(f).unnormalized, hz_pipeline(f, registry), family_hz_closed(f)};
  });
}

bool expected_factorized(const KnotFamily& family) {
  if (family.is_torus() || family.id == FamilyId::Pretzel_2_3_2k1 || family.id == FamilyId::Unknot) return true;
  // 5_2 = [3 2] = [2 3]
  return (family.id == FamilyId::Fam_2k1_2 && family.k == 1) || (family.id == FamilyId::Fam_2k2_3 && family.k == 0);
}

Check torus_oracle(const std::vector<Member>& corpus) {
  Tally t("torus HZ oracle");
  for (const auto& m : corpus) {
    if (!m.family.is_torus()) continue;
    const HZFunction z = hz_transform(torus_explicit_symbolic(m.family.m, m.family.n));
    t.expect(z.value == m.closed.value, m.family.to_id());
    t.expect(m.pipeline.value == m.closed.value, m.family.to_id() + "(recursion)");
  }
  return t.done();
}

Check family_oracles(const std::vector<Member>& corpus) {
  Tally t("family HZ oracles");
  for (const auto& m : corpus)
    if (is_twisted_in_range(m.family)) t.expect(m.pipeline.value == m.closed.value, m.family.to_id());
  return t.done();
}

Check factorization_census(const std::vector<Member>& corpus) {
  Tally t("factorizability census");
  std::vector<std::string> factorized;
  for (const auto& m : corpus) {
    const bool got = factorize(m.pipeline).fully_factorized;
    t.expect(got == expected_factorized(m.family), m.family.to_id() + (got ? "(factorized)" : "(not factorized)"));
    if (got && !m.family.is_torus() && m.family.id != FamilyId::Pretzel_2_3_2k1) factorized.push_back(m.family.to_id());
  }
  std::string list;
  for (const auto& id : factorized) list += (list.empty() ? "" : ", ") + id;
  if (!list.empty()) t.note("factorized outside torus/Pretzel: " + list);
  return t.done();
}

Check a2_identities(const std::vector<Member>& corpus) {
  Tally t("a_{-2} identities");
  FamilyFailures negated;
  for (const auto& m : corpus) {
    if (!is_twisted_in_range(m.family)) continue;
    const ExpansionReport e = expand_at_1(m.pipeline, 11);
    const BigRational expected = a2_closed_form(m.family);
    const bool ok = e.a(-2) == expected;
    t.expect(ok, m.family.to_id() + " (" + to_string(e.a(-2)) + " vs " + to_string(expected) + ")");
    if (!ok && e.a(-2) == -expected) negated.add(m.family, " negated");
    t.expect(e.odd_coeff_max_abs == 0, m.family.to_id() + "(odd coefficient)");
  }
  const BigRational anchor = expand_at_1(family_hz_closed(KnotFamily::twisted(FamilyId::Pretzel_2_3_2k1, 0)), 11).a(-2);
  t.expect(anchor == BigRational(13, 35), "5_2 anchor " + to_string(anchor));
  negated.flush(t);
  return t.done();
}

Check residue_identities(const std::vector<Member>& corpus) {
  Tally t("residue identities");
  int cyclotomic = 0;
  for (const auto& m : corpus) {
    const ResidueReport r = lambda_residues(m.pipeline);
    t.expect(r.finite_sum_is_one, m.family.to_id() + "(finite sum)");
    t.expect(r.total_is_zero, m.family.to_id() + "(total)");
    t.expect(r.infinity_residue == RationalFunc(LaurentPoly::constant(-1)).embed(r.infinity_residue.variables()),
             m.family.to_id() + "(infinity)");
    cyclotomic += r.q_poles_at_roots_of_unity ? 1 : 0;
    if (m.family.is_twisted()) t.expect(lambda2_partial_residue_check(m.family).pass, m.family.to_id() + "(lambda^2 part)");
  }
  t.note("q-poles at roots of unity for " + std::to_string(cyclotomic) + "/" + std::to_string(corpus.size()));
  return t.done();
}

Check symmetry_suite(const std::vector<Member>& corpus) {
  Tally t("symmetry suite");
  for (const auto& m : corpus)
    for (const auto& c : symmetry_checks(m.pipeline))
      if (c.required) t.expect(c.pass, m.family.to_id() + "(" + c.name + ")");
  for (const auto& s : lambda_power_specializations())
    t.expect(s.pass, s.label + (s.matches_negated ? "(negated)" : "(mismatch)"));
  return t.done();
}

namespace {

struct ZeroItem {
  std::string label;
  HZFunction z;
  KnotFamily family;
  bool circle = false;  // all roots required on |q| = 1
};

struct ZeroOutcome {
  std::string label;
  KnotFamily family;
  bool circle = false;
  bool converged = true;
  std::string error;
  double worst = 0;
  bool endpoint = false;
  bool product_one = false;
  int real_negative = 0;
  int conformal = 0;
  int degree = 0;
};

}  // namespace

Check zero_structure(const Ranges& ranges) {
  std::vector<ZeroItem> items;
  for (const auto& f : torus_knots(ranges.zero_torus_m, ranges.zero_torus_n))
    items.push_back({f.to_id(), family_hz_closed(f), f, true});
  for (int k = 0; k <= ranges.zero_pretzel_k; ++k) {
    const auto f = KnotFamily::twisted(FamilyId::Pretzel_2_3_2k1, k);
    items.push_back({f.to_id(), family_hz_closed(f), f, true});
  }
  for (FamilyId id : kTwisted) {
    if (id == FamilyId::Pretzel_2_3_2k1) continue;
    for (int k = min_twist(id); k <= ranges.zero_family_k; ++k) {
      const auto f = KnotFamily::twisted(id, k);
      items.push_back({f.to_id(), family_hz_closed(f), f, false});
    }
  }
  ZeroOptions options;
  options.precision_bits = ranges.precision_bits;
  const auto prec = static_cast<mpfr_prec_t>(ranges.precision_bits);
  const MpReal one(1.0, prec), tol(ranges.root_tol, prec);
  const auto results = ordered_map<ZeroOutcome>(items.size(), ranges.jobs, [&](std::size_t i) {
    const ZeroItem& item = items[i];
    ZeroOutcome out;
    out.label = item.label;
    out.family = item.family;
    out.circle = item.circle;
    try {
      const ZeroSet s = zero_set(item.z, options);
      MpReal worst(0.0, prec);
      for (const auto& r : s.roots) {
        MpReal d = abs(abs(r.value) - one);
        if (d > worst) worst = d;
      }
      out.worst = worst.to_double();
      out.endpoint = s.exact_endpoint_check;
      out.product_one = s.roots.empty() || abs(s.product_of_moduli - one) < tol;
      out.real_negative = s.count(RootClass::RealNegative);
      out.conformal = s.count(RootClass::ConformalPair);
      out.degree = s.root_count();
    } catch (const NonConvergence& e) {
      out.converged = false;
      out.error = e.what();
    }
    return out;
  });

  Tally t("zero-locus structure");
  double worst = 0;
  int max_degree = 0;
  std::string fig8_pairs;  // k:count
  for (const auto& r : results) {
    t.expect(r.converged, r.label + "(no convergence)");
    if (!r.converged) continue;
    max_degree = std::max(max_degree, r.degree);
    if (r.circle) {
      worst = std::max(worst, r.worst);
      t.expect(r.worst < ranges.root_tol, r.label + "(off circle " + std::to_string(r.worst) + ")");
    }
    t.expect(r.endpoint, r.label + "(endpoints)");
    t.expect(r.product_one, r.label + "(product of moduli)");
    const int k = r.family.k;
    if (r.family.id == FamilyId::Fam_2k_2) {
      if (r.conformal > 0) fig8_pairs += (fig8_pairs.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(r.conformal / 2);
      t.expect(r.real_negative == 2, r.label + "(real pairs " + std::to_string(r.real_negative / 2) + ")");
    }
    if (r.family.id == FamilyId::Fam_2k1_1_2)
      t.expect(r.real_negative == (k <= 2 ? 2 : 0), r.label + "(real pairs " + std::to_string(r.real_negative / 2) + ")");
  }
  std::ostringstream note;
  note << "max ||r|-1| on torus/Pretzel " << worst << " (tol " << ranges.root_tol << "), max degree " << max_degree << ", "
       << ranges.precision_bits << " bits; other conformal pairs in fam:2k2 (k:pairs) "
       << (fig8_pairs.empty() ? "none" : fig8_pairs);
  t.note(note.str());
  return t.done();
}

Check jones_crosscheck(const Ranges& ranges) {
  Tally t("Jones cross-check");
  int corrected = 0, total = 0;
  for (const auto& f : torus_knots(ranges.jones_m, ranges.jones_n)) {
    const LaurentPoly v = jones(f);
    t.expect(jones_torus_recursion(f.m, f.n, JonesExponent::NPlusOne) == v, f.to_id());
    corrected += jones_torus_recursion(f.m, f.n, JonesExponent::NMinusOne) == v ? 1 : 0;
    ++total;
  }
  t.note("exponent (m+1)(n-1) variant agrees " + std::to_string(corrected) + "/" + std::to_string(total));
  return t.done();
}

Check series_consistency(const std::vector<Member>& corpus) {
  Tally t("series consistency");
  for (const auto& m : corpus) {
    const auto s = lambda_series(m.pipeline.value, 5);
    t.expect(s[0].is_zero(), m.family.to_id() + "(lambda^0)");
    for (int N = 0; N <= 5; ++N)
      t.expect(s[static_cast<std::size_t>(N)] == RationalFunc(bar_at(m.bar, N)), m.family.to_id() + "(N=" + std::to_string(N) + ")");
  }
  return t.done();
}

namespace {

std::vector<Check> algebra_suite() {
  const Variables q{"q"};
  std::vector<Check> out;
  const RationalFunc t23 = RationalFunc::reduce(parse_poly("1 - q^9", q), parse_poly("(1 - q)*(1 - q^3)*(1 - q^5)", q));
  out.push_back({"reduce", t23 == RationalFunc::reduce(parse_poly("1 + q^3 + q^6", q), parse_poly("(1 - q)*(1 - q^5)", q)),
                 true, t23.to_string()});
  const LaurentPoly g = poly_gcd(parse_poly("1 - q^6", q), parse_poly("q^-2 - q^2", q));
  out.push_back({"gcd", g == parse_poly("1 - q^2", q), true, g.to_string()});

  Tally rt("render/parse round trip");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> e(-5, 5), c(-9, 9), d(1, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<LaurentPoly::Term> terms;
    for (int j = 0; j < 5; ++j) {
      BigRational x(c(rng), d(rng));
      x.canonicalize();
      terms.push_back({{e(rng), e(rng)}, x});
    }
    const LaurentPoly p(kHomflyVars, std::move(terms));
    rt.expect(parse_poly(p.to_string()) == p, p.to_string());
  }
  out.push_back(rt.done());

  Tally field("field identities");
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly a = parse_poly("1 - q^" + std::to_string(i % 7 + 1), q) * parse_poly(std::to_string(i + 2) + " + q", q);
    const RationalFunc f = RationalFunc::reduce(a, parse_poly("1 + q^" + std::to_string(i % 5), q));
    field.expect(f * (RationalFunc(LaurentPoly::constant(1, q)) / f) == RationalFunc(LaurentPoly::constant(1, q)), f.to_string());
    field.expect(f - f == RationalFunc(LaurentPoly(q)), f.to_string());
  }
  out.push_back(field.done());
  return out;
}

std::vector<Check> homfly_suite(const Ranges& ranges) {
  std::vector<Check> out;
  HomflyRegistry registry;
  const LaurentPoly trefoil = registry.get(KnotFamily::torus(2, 3)).normalized;
  out.push_back({"trefoil", trefoil.to_string() == "-1*v^4 + 2*v^2 + 1*v^2*z^2", true, trefoil.to_string()});
  Tally ex("explicit torus formula");
  for (const auto& f : torus_knots(3, ranges.jones_n))
    ex.expect(homfly_torus_explicit(f.m, f.n).normalized == registry.get(f).normalized, f.to_id());
  out.push_back(ex.done());
  Tally unit("knot polynomials at v = 1");
  for (FamilyId id : kTwisted)
    for (int k = min_twist(id); k <= ranges.k_max; ++k) {
      const KnotFamily f = KnotFamily::twisted(id, k);
      // H(1, z) is the Conway polynomial, which is 1 at z = 0 for knots.
      const LaurentPoly c = registry.get(f).normalized.evaluate(0, 1);
      unit.expect(c.evaluate(0, 0) == LaurentPoly::constant(1), f.to_id());
    }
  out.push_back(unit.done());
  out.push_back(jones_crosscheck(ranges));
  return out;
}

std::vector<Check> analysis_extras(const std::vector<Member>& corpus) {
  Tally limits("q-limits");
  std::vector<std::string> finite;
  for (const auto& m : corpus)
    for (const auto& c : symmetry_checks(m.pipeline, m.family)) {
      if (c.name != "q-limits") continue;
      if (c.required) limits.expect(c.pass, m.family.to_id());
      else if (c.pass) finite.push_back(m.family.to_id());
    }
  limits.note(std::to_string(finite.size()) + " other members with limits 1/lambda, lambda");
  std::vector<Check> out{limits.done()};

  Tally odd("odd denominator moduli");
  std::map<FamilyId, std::vector<BigRational>> a2;
  for (const auto& m : corpus)
    if (is_twisted_in_range(m.family)) a2[m.family.id].push_back(expand_at_1(m.pipeline, 2).a(-2));
  for (const auto& [id, values] : a2) odd.note(family_prefix(id) + " " + common_odd_modulus(values).get_str());
  out.push_back(odd.done(false));
  return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"algebra", "homfly", "hz", "analysis", "zeros"}; }

std::vector<Check> run_suite(const std::string& suite, const Ranges& ranges) {
  if (suite == "algebra") return algebra_suite();
  if (suite == "homfly") return homfly_suite(ranges);
  if (suite == "zeros") return {zero_structure(ranges)};
  if (suite == "hz") {
    const auto corpus = build_corpus(ranges);
    return {torus_oracle(corpus), family_oracles(corpus), factorization_census(corpus)};
  }
  if (suite == "analysis") {
    const auto corpus = build_corpus(ranges);
    std::vector<Check> out{a2_identities(corpus), residue_identities(corpus), symmetry_suite(corpus), series_consistency(corpus)};
    for (auto& c : analysis_extras(corpus)) out.push_back(std::move(c));
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace hzknots::checks
