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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hzknots/zeros/zeros.hpp"

namespace hzknots {

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::OnCircle:
      return "on_circle";
    case RootClass::ConformalPair:
      return "conformal_pair";
    case RootClass::RealNegative:
      return "real_negative";
    case RootClass::Unclassified:
      break;
  }
  return "unclassified";
}

int ZeroSet::root_count() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

int ZeroSet::count(RootClass c) const {
  int n = 0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (classes[i] == c) n += roots[i].multiplicity;
  return n;
}

int ZeroSet::real_root_count(double tol) const {
  int n = 0;
  for (const auto& r : roots)
    if (std::abs(r.value.im.to_double()) < tol) n += r.multiplicity;
  return n;
}

ZeroSet classify(const LaurentPoly& p, std::vector<Root> roots, const ZeroOptions& options) {
  const int prec = options.precision_bits;
  ZeroSet out;
  out.polynomial = p;
  out.roots = std::move(roots);
  const std::size_t n = out.roots.size();
  out.classes.assign(n, RootClass::Unclassified);
  out.partner.assign(n, -1);

  const MpReal one(1.0, prec), circle_tol(options.circle_tol, prec), pair_tol(options.pair_tol, prec);
  std::vector<MpReal> modulus;
  for (const auto& r : out.roots) modulus.push_back(abs(r.value));
  for (std::size_t i = 0; i < n; ++i)
    if (abs(modulus[i] - one) < circle_tol) out.classes[i] = RootClass::OnCircle;

  for (std::size_t i = 0; i < n; ++i) {
    if (out.classes[i] != RootClass::Unclassified || out.partner[i] >= 0) continue;
    const MpReal m2 = modulus[i] * modulus[i];
    const MpComplex target{out.roots[i].value.re / m2, out.roots[i].value.im / m2};  // 1 / conj(z)
    int best = -1;
    MpReal best_dist(prec);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || out.classes[j] != RootClass::Unclassified || out.partner[j] >= 0) continue;
      MpReal d = abs(out.roots[j].value - target);
      if (best < 0 || d < best_dist) {
        best = static_cast<int>(j);
        best_dist = std::move(d);
      }
    }
    if (best < 0 || !(best_dist < pair_tol)) continue;
    const auto j = static_cast<std::size_t>(best);
    out.partner[i] = best;
    out.partner[j] = static_cast<int>(i);
    auto negative_real = [&](const MpComplex& z) { return abs(z.im) < pair_tol && z.re.sign() < 0; };
    const RootClass c = negative_real(out.roots[i].value) && negative_real(out.roots[j].value)
                            ? RootClass::RealNegative
                            : RootClass::ConformalPair;
    out.classes[i] = out.classes[j] = c;
  }
  out.classified = std::none_of(out.classes.begin(), out.classes.end(),
                                [](RootClass c) { return c == RootClass::Unclassified; });

  out.product_of_moduli = one;
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < out.roots[i].multiplicity; ++k) out.product_of_moduli *= modulus[i];

  const LaurentPoly q = p.embed({"q"});
  out.exact_endpoint_check = !q.is_zero() && abs(q.coefficient({q.max_exponent(0), 0})) ==
                                                 abs(q.coefficient({q.min_exponent(0), 0}));

  out.min_spacing = 0;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(out.roots[i].value.re.to_double() - out.roots[j].value.re.to_double(),
                                  out.roots[i].value.im.to_double() - out.roots[j].value.im.to_double());
      if (first || d < out.min_spacing) out.min_spacing = d;
      first = false;
    }
  return out;
}

ZeroSet zero_set(const HZFunction& z, const ZeroOptions& options) {
  const LaurentPoly p = zero_polynomial(z);
  if (p.max_exponent(0) < 1) return classify(p, {}, options);
  return classify(p, find_roots(p, options), options);
}

namespace {

std::string num12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const char* fill(RootClass c) {
  switch (c) {
    case RootClass::OnCircle:
      return "#1f77b4";
    case RootClass::ConformalPair:
      return "#d62728";
    case RootClass::RealNegative:
      return "#2ca02c";
    case RootClass::Unclassified:
      break;
  }
  return "#7f7f7f";
}

}  // namespace

std::string emit_plot(const ZeroSet& zeros, PlotFormat format) {
  std::ostringstream out;
  if (format == PlotFormat::Csv) {
    out << "re,im,modulus,class\n";
    for (std::size_t i = 0; i < zeros.roots.size(); ++i) {
      const auto& r = zeros.roots[i];
      const std::string row = r.value.re.to_string(20) + "," + r.value.im.to_string(20) + "," +
                              abs(r.value).to_string(20) + "," + to_string(zeros.classes[i]) + "\n";
      for (int k = 0; k < r.multiplicity; ++k) out << row;
    }
    return out.str();
  }
  constexpr double kSize = 600, kCenter = 300, kScale = 250, kMargin = 4;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n"
      << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n"
      << "<line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#cccccc\"/>\n"
      << "<line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#cccccc\"/>\n"
      << "<circle cx=\"300\" cy=\"300\" r=\"250\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t i = 0; i < zeros.roots.size(); ++i) {
    const auto& z = zeros.roots[i].value;
    const double x = std::clamp(kCenter + kScale * z.re.to_double(), kMargin, kSize - kMargin);
    const double y = std::clamp(kCenter - kScale * z.im.to_double(), kMargin, kSize - kMargin);
    out << "<circle cx=\"" << num12(x) << "\" cy=\"" << num12(y) << "\" r=\"3\" fill=\"" << fill(zeros.classes[i])
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hzknots
