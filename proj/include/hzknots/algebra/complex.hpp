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

#pragma once

#include <cmath>

#include "hzknots/algebra/laurent_poly.hpp"
#include "hzknots/algebra/mp_real.hpp"

namespace hzknots {

/// Minimal complex arithmetic over a real type (std::complex is only
/// specified for the built-in floating types).
template <class Real>
struct Complex {
  Real re;
  Real im;

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  friend Real abs(const Complex& a) {
    using std::hypot;
    return hypot(a.re, a.im);
  }
  friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
};

using MpComplex = Complex<MpReal>;

/// e^{i theta} at the given precision.
MpComplex unit_root(const MpReal& theta);

/// Horner evaluation of a univariate Laurent polynomial. Throws
/// std::domain_error at 0 when negative exponents are present.
MpComplex eval_complex(const LaurentPoly& p, const MpComplex& point);

/// Rounding-error bound for eval_complex: 4 eps deg sum |c_i| |point|^i.
MpReal eval_complex_error_bound(const LaurentPoly& p, const MpComplex& point);

}  // namespace hzknots
