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

#include <mpfr.h>

#include <string>
#include <algorithm>
#include <utility>

#include "hzknots/algebra/bigrational.hpp"

namespace hzknots {

/// MPFR real with its own precision. Arithmetic results take the larger
/// operand precision; everything rounds to nearest.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 256) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  MpReal(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  MpReal(const BigRational& x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  MpReal(const MpReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Fixed notation with `digits` significant digits, e.g. "-1.25000e-3".
  std::string to_string(int digits) const;

  MpReal& operator+=(const MpReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator-=(const MpReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator*=(const MpReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator/=(const MpReal& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend MpReal operator+(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_add); }
  friend MpReal operator-(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_sub); }
  friend MpReal operator*(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_mul); }
  friend MpReal operator/(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_div); }
  friend MpReal operator-(const MpReal& a) {
    MpReal r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  friend MpReal abs(const MpReal& a) { return unary(a, mpfr_abs); }
  friend MpReal sqrt(const MpReal& a) { return unary(a, mpfr_sqrt); }
  friend MpReal hypot(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_hypot); }
  friend MpReal atan2(const MpReal& y, const MpReal& x) { return binary(y, x, mpfr_atan2); }
  friend MpReal log(const MpReal& a) { return unary(a, mpfr_log); }
  friend MpReal cos(const MpReal& a) { return unary(a, mpfr_cos); }
  friend MpReal sin(const MpReal& a) { return unary(a, mpfr_sin); }

  static MpReal pi(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  /// 2^e at the given precision.
  static MpReal pow2(long e, mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

 private:
  template <class F>
  static MpReal binary(const MpReal& a, const MpReal& b, F f) {
    MpReal r(std::max(a.precision(), b.precision()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <class F>
  static MpReal unary(const MpReal& a, F f) {
    MpReal r(a.precision());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace hzknots
