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

#include <stdexcept>
#include <string>
#include <vector>

#include "hzknots/algebra/complex.hpp"
#include "hzknots/hz/hz.hpp"

namespace hzknots {

struct ZeroOptions {
  int precision_bits = 256;
  int max_iterations = 500;
  double circle_tol = 1e-10;
  double pair_tol = 1e-8;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerator of Z(q, 1) in lowest terms, shifted to a polynomial with
/// nonzero constant term. Throws std::domain_error if Z(q, 1) is zero.
LaurentPoly zero_polynomial(const HZFunction& z);

struct Root {
  MpComplex value;
  /// Radius of a disc around value that contains a root.
  MpReal error_radius;
  /// |p(value)| for the input polynomial.
  MpReal residual;
  int multiplicity = 1;
};

/// Squarefree split (Yun), then Aberth-Ehrlich iteration per factor: double
/// precision warm start, polished at precision_bits until every correction is
/// below 2^(-precision_bits/2). Throws NonConvergence past max_iterations and
/// std::invalid_argument unless p has degree >= 1 and nonzero constant term.
std::vector<Root> find_roots(const LaurentPoly& p, const ZeroOptions& options = {});

enum class RootClass { OnCircle, ConformalPair, RealNegative, Unclassified };
std::string to_string(RootClass c);

struct ZeroSet {
  LaurentPoly polynomial;
  std::vector<Root> roots;
  std::vector<RootClass> classes;
  /// Index of the conformal partner, -1 if none.
  std::vector<int> partner;
  MpReal product_of_moduli;
  /// |leading coefficient| == |constant coefficient|, exactly.
  bool exact_endpoint_check = false;
  /// No root is Unclassified.
  bool classified = false;
  /// Smallest distance between distinct roots (0 for fewer than two).
  double min_spacing = 0;

  /// Roots counted with multiplicity; equals the degree of polynomial.
  int root_count() const;
  int count(RootClass c) const;
  /// Roots (with multiplicity) within pair_tol of the real axis.
  int real_root_count(double tol) const;
};

/// ||r| - 1| < circle_tol marks OnCircle; remaining roots r, w pair when
/// |w - 1/conj(r)| < pair_tol, as RealNegative when both lie on the negative
/// real axis.
ZeroSet classify(const LaurentPoly& p, std::vector<Root> roots, const ZeroOptions& options = {});

/// zero_polynomial + find_roots + classify. An empty set for constant polynomials.
ZeroSet zero_set(const HZFunction& z, const ZeroOptions& options = {});

enum class PlotFormat { Csv, Svg };
/// CSV: header re,im,modulus,class and one row per root with multiplicity.
/// SVG: 600x600, unit circle radius 250 centered, roots outside clamped to the frame.
std::string emit_plot(const ZeroSet& zeros, PlotFormat format);

}  // namespace hzknots
