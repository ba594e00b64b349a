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

#include "hzknots/algebra/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hzknots {

std::string MpReal::to_string(int digits) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

MpComplex unit_root(const MpReal& theta) { return {cos(theta), sin(theta)}; }

namespace {

void check_point(const LaurentPoly& p, const MpComplex& point) {
  if (p.num_variables() > 1) throw std::invalid_argument("eval_complex needs a univariate polynomial");
  if (point.re.is_zero() && point.im.is_zero() && p.min_exponent(0) < 0)
    throw std::domain_error("evaluation at 0 with negative exponents");
}

}  // namespace

MpComplex eval_complex(const LaurentPoly& p, const MpComplex& point) {
  check_point(p, point);
  const mpfr_prec_t prec = point.re.precision();
  MpComplex acc{MpReal(prec), MpReal(prec)};
  if (p.is_zero()) return acc;
  // Terms are sorted by exponent; Horner from the top with gap powers.
  const auto& terms = p.terms();
  int prev = terms.back().exp[0];
  for (std::size_t i = terms.size(); i-- > 0;) {
    const int e = terms[i].exp[0];
    for (int s = e; s < prev; ++s) acc *= point;
    acc.re += MpReal(terms[i].coeff, prec);
    prev = e;
  }
  const int low = terms.front().exp[0];
  if (low > 0)
    for (int s = 0; s < low; ++s) acc *= point;
  if (low < 0) {
    const MpComplex one{MpReal(1.0, prec), MpReal(prec)};
    MpComplex inv = one / point;
    for (int s = low; s < 0; ++s) acc *= inv;
  }
  return acc;
}

MpReal eval_complex_error_bound(const LaurentPoly& p, const MpComplex& point) {
  check_point(p, point);
  const mpfr_prec_t prec = point.re.precision();
  const MpReal r = abs(point);
  MpReal sum(prec);
  for (const auto& t : p.terms()) {
    MpReal term = abs(MpReal(t.coeff, prec));
    mpfr_pow_si(term.raw(), r.raw(), t.exp[0], MPFR_RNDU);
    term *= abs(MpReal(t.coeff, prec));
    sum += term;
  }
  const int degree = p.is_zero() ? 0 : p.max_exponent(0) - p.min_exponent(0);
  return sum * MpReal::pow2(2 - static_cast<long>(prec), prec) * MpReal(static_cast<double>(std::max(degree, 1)), prec);
}

}  // namespace hzknots
