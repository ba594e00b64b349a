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
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "hzknots/algebra/detail/dense.hpp"

namespace hzknots::detail {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
using Vp = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % small == 0) return n == small;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<u64>& primes() {
  static const std::vector<u64> list = [] {
    std::vector<u64> out;
    for (u64 n = (u64(1) << 62) - 1; out.size() < 256; n -= 2)
      if (is_prime(n)) out.push_back(n);
    return out;
  }();
  return list;
}

u64 reduce(const BigInt& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

void trimp(Vp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vp reduce(const ZPoly& a, u64 p) {
  Vp out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = reduce(a[i], p);
  trimp(out);
  return out;
}

u64 eval(const Vp& a, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = addmod(mulmod(r, x, p), a[i], p);
  return r;
}

void make_monic(Vp& a, u64 p) {
  if (a.empty()) return;
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
}

// a <- a mod b, b nonzero.
void rem_in_place(Vp& a, const Vp& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv = invmod(b.back(), p);
  while (a.size() > db && !a.empty()) {
    const u64 f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = submod(a[shift + i], mulmod(f, b[i], p), p);
    a.pop_back();
    trimp(a);
  }
}

Vp gcd_mod(Vp a, Vp b, u64 p) {
  trimp(a);
  trimp(b);
  while (!b.empty()) {
    rem_in_place(a, b, p);
    std::swap(a, b);
  }
  make_monic(a, p);
  return a;
}

BigInt to_symmetric(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// CRT: combined (mod m) with image (mod p) -> mod m*p, values in [0, m*p).
void crt_combine(ZPoly& combined, const BigInt& m, const Vp& image, u64 p) {
  const std::size_t n = std::max(combined.size(), image.size());
  combined.resize(n);
  const u64 m_inv = invmod(reduce(m, p), p);
  for (std::size_t i = 0; i < n; ++i) {
    const u64 target = i < image.size() ? image[i] : 0;
    const u64 have = reduce(combined[i], p);
    const u64 t = mulmod(submod(target, have, p), m_inv, p);
    combined[i] += m * BigInt(static_cast<unsigned long>(t));
  }
}

ZPoly symmetric(const ZPoly& a, const BigInt& m) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = to_symmetric(a[i], m);
  trim(out);
  return out;
}

ZPoly primitive_part(const ZPoly& a) {
  const BigInt c = content(a);
  ZPoly out = c == 0 ? a : scalar_div_exact(a, c);
  if (!out.empty() && out.back() < 0)
    for (auto& x : out) x = -x;
  return out;
}

ZPoly from_image(const Vp& a) {
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = BigInt(static_cast<unsigned long>(a[i]));
  return out;
}

// Newton interpolation through (xs[i], ys[i]); `inv_diff[d]` = 1/d mod p.
Vp interpolate(const Vp& xs, Vp ys, const Vp& inv_diff, u64 p) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = mulmod(submod(ys[i], ys[i - 1], p), inv_diff[xs[i] - xs[i - j]], p);
      if (i == j) break;
    }
  Vp res{ys[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // res <- res * (y - xs[i]) + ys[i]
    res.push_back(0);
    for (std::size_t k = res.size() - 1; k > 0; --k)
      res[k] = submod(res[k - 1], mulmod(res[k], xs[i], p), p);
    res[0] = submod(0, mulmod(res[0], xs[i], p), p);
    res[0] = addmod(res[0], ys[i], p);
  }
  trimp(res);
  return res;
}

void normalize_sign(BiPoly& g) {
  if (!g.empty() && !g.back().empty() && g.back().back() < 0)
    for (auto& c : g)
      for (auto& x : c) x = -x;
}

}  // namespace

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BiPoly& p) {
  for (auto& c : p) trim(c);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree_x(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

int degree_y(const BiPoly& p) {
  int d = -1;
  for (const auto& c : p) d = std::max(d, degree(c));
  return d;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(out);
  return out;
}

void sub_mul_into(ZPoly& acc, const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(acc);
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly scalar_div_exact(const ZPoly& p, const BigInt& c) {
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
  return out;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  if (a.empty()) return ZPoly{};
  const int da = degree(a), db = degree(b);
  if (da < db) return std::nullopt;
  ZPoly r = a;
  ZPoly q(static_cast<std::size_t>(da - db + 1));
  const BigInt& lc = b.back();
  for (int k = da - db; k >= 0; --k) {
    BigInt& c = r[static_cast<std::size_t>(k + db)];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    for (int i = 0; i <= db; ++i)
      mpz_submul(r[static_cast<std::size_t>(k + i)].get_mpz_t(), t.get_mpz_t(), b[static_cast<std::size_t>(i)].get_mpz_t());
    q[static_cast<std::size_t>(k)] = std::move(t);
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  trim(q);
  return q;
}

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  if (a.empty()) return BiPoly{};
  const int da = degree_x(a), db = degree_x(b);
  if (da < db) return std::nullopt;
  BiPoly r = a;
  BiPoly q(static_cast<std::size_t>(da - db + 1));
  for (int k = da - db; k >= 0; --k) {
    ZPoly& c = r[static_cast<std::size_t>(k + db)];
    trim(c);
    if (c.empty()) continue;
    auto t = divide_exact(c, b.back());
    if (!t) return std::nullopt;
    for (int i = 0; i <= db; ++i) sub_mul_into(r[static_cast<std::size_t>(k + i)], *t, b[static_cast<std::size_t>(i)]);
    q[static_cast<std::size_t>(k)] = std::move(*t);
  }
  for (int i = 0; i < db; ++i) {
    trim(r[static_cast<std::size_t>(i)]);
    if (!r[static_cast<std::size_t>(i)].empty()) return std::nullopt;
  }
  trim(q);
  return q;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b).empty() ? ZPoly{} : [&] {
    ZPoly out = b;
    if (out.back() < 0)
      for (auto& x : out) x = -x;
    return out;
  }();
  if (b.empty()) {
    if (a.back() < 0)
      for (auto& x : a) x = -x;
    return a;
  }
  BigInt ca = content(a), cb = content(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const ZPoly A = scalar_div_exact(a, ca);
  const ZPoly B = scalar_div_exact(b, cb);
  if (degree(A) == 0 || degree(B) == 0) return {c};

  BigInt gam;
  mpz_gcd(gam.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  int dbest = std::min(degree(A), degree(B)) + 1;
  ZPoly combined;
  BigInt modulus;
  for (u64 p : primes()) {
    if (reduce(A.back(), p) == 0 || reduce(B.back(), p) == 0) continue;
    Vp g = gcd_mod(reduce(A, p), reduce(B, p), p);
    const int d = static_cast<int>(g.size()) - 1;
    if (d == 0) return {c};
    if (d > dbest) continue;
    const u64 gp = reduce(gam, p);
    for (auto& x : g) x = mulmod(x, gp, p);
    if (d < dbest) {
      dbest = d;
      combined = from_image(g);
      modulus = BigInt(static_cast<unsigned long>(p));
    } else {
      crt_combine(combined, modulus, g, p);
      modulus *= BigInt(static_cast<unsigned long>(p));
    }
    ZPoly candidate = primitive_part(symmetric(combined, modulus));
    if (degree(candidate) != dbest) continue;
    if (divide_exact(A, candidate) && divide_exact(B, candidate)) {
      for (auto& x : candidate) x *= c;
      return candidate;
    }
  }
  throw std::runtime_error("univariate modular gcd did not converge");
}

BiPoly gcd(const BiPoly& a0, const BiPoly& b0) {
  BiPoly a = a0, b = b0;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) {
    BiPoly out = a.empty() ? b : a;
    normalize_sign(out);
    return out;
  }
  auto content_y = [](const BiPoly& p) {
    ZPoly g;
    for (const auto& c : p) {
      g = gcd(g, c);
      if (degree(g) == 0 && g[0] == 1) break;
    }
    return g;
  };
  const ZPoly ca = content_y(a), cb = content_y(b);
  const ZPoly c = gcd(ca, cb);
  auto divide_content = [](const BiPoly& p, const ZPoly& cont) {
    BiPoly out;
    out.reserve(p.size());
    for (const auto& coeff : p) out.push_back(*divide_exact(coeff, cont));
    return out;
  };
  const BiPoly A = divide_content(a, ca);
  const BiPoly B = divide_content(b, cb);
  if (degree_x(A) == 0 || degree_x(B) == 0) return {c};

  const ZPoly gam = gcd(A.back(), B.back());
  const int bound_y = degree(gam) + std::min(degree_y(A), degree_y(B));
  const std::size_t needed = static_cast<std::size_t>(bound_y) + 1;

  int dbest = std::min(degree_x(A), degree_x(B)) + 1;
  std::vector<ZPoly> combined;
  BigInt modulus;
  for (u64 p : primes()) {
    std::vector<Vp> Ap, Bp;
    for (const auto& x : A) Ap.push_back(reduce(x, p));
    for (const auto& x : B) Bp.push_back(reduce(x, p));
    const Vp gam_p = reduce(gam, p);
    if (gam_p.empty()) continue;

    Vp points;
    std::vector<Vp> images;
    int dcur = dbest;
    bool trivial = false;
    for (u64 pt = 1; points.size() < needed; ++pt) {
      if (eval(Ap.back(), pt, p) == 0 || eval(Bp.back(), pt, p) == 0) continue;
      Vp ax(Ap.size()), bx(Bp.size());
      for (std::size_t i = 0; i < Ap.size(); ++i) ax[i] = eval(Ap[i], pt, p);
      for (std::size_t i = 0; i < Bp.size(); ++i) bx[i] = eval(Bp[i], pt, p);
      Vp g = gcd_mod(std::move(ax), std::move(bx), p);
      const int d = static_cast<int>(g.size()) - 1;
      if (d == 0) {
        trivial = true;
        break;
      }
      if (d > dcur) continue;
      if (d < dcur) {
        dcur = d;
        points.clear();
        images.clear();
      }
      const u64 scale = eval(gam_p, pt, p);
      for (auto& x : g) x = mulmod(x, scale, p);
      points.push_back(pt);
      images.push_back(std::move(g));
    }
    if (trivial) return {c};
    if (dcur > dbest) continue;

    Vp inv_diff(points.back() + 1, 0);
    if (inv_diff.size() > 1) inv_diff[1] = 1;
    for (u64 i = 2; i < inv_diff.size(); ++i) inv_diff[i] = submod(0, mulmod(p / i, inv_diff[p % i], p), p);

    std::vector<Vp> image_poly(static_cast<std::size_t>(dcur) + 1);
    for (std::size_t i = 0; i < image_poly.size(); ++i) {
      Vp ys(points.size());
      for (std::size_t j = 0; j < points.size(); ++j) ys[j] = images[j][i];
      image_poly[i] = interpolate(points, std::move(ys), inv_diff, p);
    }

    if (dcur < dbest) {
      dbest = dcur;
      combined.assign(image_poly.size(), {});
      for (std::size_t i = 0; i < image_poly.size(); ++i) combined[i] = from_image(image_poly[i]);
      modulus = BigInt(static_cast<unsigned long>(p));
    } else {
      for (std::size_t i = 0; i < image_poly.size(); ++i) crt_combine(combined[i], modulus, image_poly[i], p);
      modulus *= BigInt(static_cast<unsigned long>(p));
    }

    BiPoly candidate;
    for (const auto& coeff : combined) candidate.push_back(symmetric(coeff, modulus));
    trim(candidate);
    if (degree_x(candidate) != dbest) continue;
    candidate = divide_content(candidate, content_y(candidate));
    normalize_sign(candidate);
    if (divide_exact(A, candidate) && divide_exact(B, candidate)) {
      for (auto& coeff : candidate) coeff = mul(coeff, c);
      return candidate;
    }
  }
  throw std::runtime_error("bivariate modular gcd did not converge");
}

}  // namespace hzknots::detail
