// Copyright 2026 The stabsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabsym/cyclotomic.h"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "stabsym/zmod.h"

namespace stabsym {

std::string to_string(const BigRational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

int conductor_for(int d) {
  if (!is_prime(d)) throw NotPrime("d = " + std::to_string(d) + " is not prime");
  return d == 2 ? 8 : std::lcm(4, d);
}

namespace {

using Poly = std::vector<int64_t>;  // low degree first

Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    const int64_t c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

Poly cyclotomic_poly(int m) {
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int k = 1; k < m; ++k)
    if (m % k == 0) p = poly_div_exact(p, cyclotomic_poly(k));
  return p;
}

CycContext build_context(int m) {
  CycContext c;
  c.m = m;
  c.phi = euler_phi(m);
  Poly phi_poly = cyclotomic_poly(m);
  c.power.assign(m, std::vector<int64_t>(c.phi, 0));
  for (int j = 0; j < m; ++j) {
    if (j < c.phi) {
      c.power[j][j] = 1;
      continue;
    }
    const auto& prev = c.power[j - 1];
    const int64_t top = prev[c.phi - 1];
    auto& cur = c.power[j];
    for (int i = c.phi - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    for (int i = 0; i < c.phi; ++i) cur[i] -= top * phi_poly[i];
  }
  return c;
}

}  // namespace

const CycContext& CycContext::get(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<CycContext>(build_context(m));
  return *slot;
}

// ---------------------------------------------------------------------------

CycNumber::CycNumber(int m) : m_(m), num_(CycContext::get(m).phi, BigInt(0)), den_(1) {}

CycNumber::CycNumber(int m, const BigRational& q) : CycNumber(m) {
  num_[0] = numerator(q);
  den_ = boost::multiprecision::denominator(q);
}

CycNumber::CycNumber(int m, std::vector<BigInt> num, BigInt den)
    : m_(m), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : num_) {
    if (c != 0) g = gcd(g, c);
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  den_ /= g;
  for (auto& c : num_) c /= g;
}

CycNumber CycNumber::zeta(int m, int64_t k) {
  const CycContext& ctx = CycContext::get(m);
  CycNumber r(m);
  const auto& p = ctx.power[mod(k, m)];
  for (int i = 0; i < ctx.phi; ++i) r.num_[i] = p[i];
  return r;
}

bool CycNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

BigRational CycNumber::rational() const {
  if (!is_rational()) throw Error("cyclotomic number is not rational");
  return BigRational(num_[0], den_);
}

BigRational CycNumber::coefficient(int k) const { return BigRational(num_[k], den_); }

CycNumber CycNumber::operator+(const CycNumber& o) const {
  CycNumber r = *this;
  r += o;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.m_ != m_) throw DimensionMismatch("conductor mismatch");
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator*(const CycNumber& o) const {
  if (o.m_ != m_) throw DimensionMismatch("conductor mismatch");
  const CycContext& ctx = CycContext::get(m_);
  const int phi = ctx.phi;
  std::vector<BigInt> acc(2 * phi - 1, BigInt(0));
  bool any = false;
  for (int i = 0; i < phi; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.num_[j] == 0) continue;
      acc[i + j] += num_[i] * o.num_[j];
      any = true;
    }
  }
  if (!any) return CycNumber(m_);
  std::vector<BigInt> out(acc.begin(), acc.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (acc[k] == 0) continue;
    const auto& p = ctx.power[k];
    for (int i = 0; i < phi; ++i)
      if (p[i]) out[i] += acc[k] * p[i];
  }
  return CycNumber(m_, std::move(out), den_ * o.den_);
}

CycNumber CycNumber::operator*(const BigRational& q) const {
  std::vector<BigInt> out = num_;
  for (auto& c : out) c *= numerator(q);
  return CycNumber(m_, std::move(out), den_ * boost::multiprecision::denominator(q));
}

CycNumber CycNumber::galois(int64_t u) const {
  const CycContext& ctx = CycContext::get(m_);
  if (std::gcd(mod(u, m_), m_) != 1) throw Error("Galois exponent must be a unit mod m");
  std::vector<BigInt> out(ctx.phi, BigInt(0));
  for (int k = 0; k < ctx.phi; ++k) {
    if (num_[k] == 0) continue;
    const auto& p = ctx.power[mod(u * k, m_)];
    for (int i = 0; i < ctx.phi; ++i)
      if (p[i]) out[i] += num_[k] * p[i];
  }
  return CycNumber(m_, std::move(out), den_);
}

CycNumber CycNumber::conj() const { return galois(m_ - 1); }

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  CycNumber others = one(m_);
  for (int u = 2; u < m_; ++u)
    if (std::gcd(u, m_) == 1) others = others * galois(u);
  CycNumber norm = *this * others;
  return others * (BigRational(1) / norm.rational());
}

CycNumber CycNumber::operator/(const CycNumber& o) const { return *this * o.inverse(); }

CycNumber CycNumber::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result = one(m_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::complex<double> CycNumber::embed() const {
  std::complex<double> acc = 0;
  const double den = den_.convert_to<double>();
  for (size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(k) / m_;
    acc += num_[k].convert_to<double>() * std::polar(1.0, angle);
  }
  return acc / den;
}

bool CycNumber::operator==(const CycNumber& o) const {
  return m_ == o.m_ && den_ == o.den_ && num_ == o.num_;
}

std::ostream& operator<<(std::ostream& os, const CycNumber& x) {
  bool first = true;
  os << '(';
  for (size_t k = 0; k < x.numerators().size(); ++k) {
    if (x.numerators()[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << x.numerators()[k];
    if (k) os << "*z^" << k;
  }
  if (first) os << 0;
  os << ')';
  if (x.denominator() != 1) os << '/' << x.denominator();
  return os;
}

CycNumber sqrt_d(int d, int m) {
  const bool ok = d == 2 ? m % 8 == 0 : m % (4 * d) == 0;
  if (!ok)
    throw ConductorTooSmall("conductor " + std::to_string(m) + " cannot hold sqrt(" +
                            std::to_string(d) + ")");
  CycNumber r(m);
  if (d == 2) {
    r = CycNumber::zeta(m, m / 8) + CycNumber::zeta(m, -m / 8);
  } else {
    for (int k = 0; k < d; ++k) r += CycNumber::zeta(m, int64_t{m / d} * k * k);
    if (d % 4 == 3) r = r * -CycNumber::zeta(m, m / 4);
  }
  if (r.embed().real() < 0) r = -r;
  return r;
}

int galois_exponent(int alpha, int d, int m) {
  alpha = mod(alpha, d);
  if (alpha == 0) throw DivisionByZero("Galois parameter must be a unit");
  for (int u = 1; u < m; ++u)
    if (u % d == alpha && std::gcd(u, m) == 1 && mod(u - 1, m / d) == 0) return u;
  if (d == 2) return 1;
  throw Error("no Galois exponent for alpha = " + std::to_string(alpha));
}

}  // namespace stabsym
