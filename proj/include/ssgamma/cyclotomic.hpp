#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "ssgamma/errors.hpp"

namespace ssgamma {

namespace detail {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
inline const std::vector<long long>& cyclotomic_polynomial(unsigned m) {
  static std::recursive_mutex mutex;
  static std::map<unsigned, std::vector<long long>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  // x^m - 1 divided by every Phi_d with d | m, d < m.
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<long long> divisor = cyclotomic_polynomial(d);
    // exact division by a monic polynomial
    const std::size_t dd = divisor.size() - 1;
    std::vector<long long> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const long long c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * divisor[t];
    }
    num = std::move(quot);
  }
  return cache.emplace(m, std::move(num)).first->second;
}

inline unsigned euler_phi(unsigned m) { return static_cast<unsigned>(cyclotomic_polynomial(m).size() - 1); }

/// Reduces a polynomial in zeta_m (any length) modulo Phi_m.
inline std::vector<mpq_class> reduce_mod_cyclotomic(std::vector<mpq_class> poly, unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (sgn(poly[k]) == 0) continue;
    const mpq_class c = poly[k];
    for (std::size_t t = 0; t <= deg; ++t) {
      if (phi[t] != 0) poly[k - deg + t] -= c * static_cast<long>(phi[t]);
    }
  }
  poly.resize(deg);
  return poly;
}

}  // namespace detail

/// A root of unity exp(2 pi i * exponent / order), kept in lowest terms.
struct RootOfUnity {
  std::uint64_t order = 1;
  std::uint64_t exponent = 0;

  static RootOfUnity make(std::uint64_t order, std::int64_t exponent) {
    if (order == 0) throw InvalidArgument("root of unity of order 0");
    const auto m = static_cast<std::int64_t>(order);
    std::int64_t e = exponent % m;
    if (e < 0) e += m;
    const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(e), order);
    const std::uint64_t gg = g == 0 ? order : g;
    return {order / gg, static_cast<std::uint64_t>(e) / gg};
  }

  RootOfUnity operator*(const RootOfUnity& o) const {
    const std::uint64_t l = std::lcm(order, o.order);
    return make(l, static_cast<std::int64_t>(exponent * (l / order) + o.exponent * (l / o.order)));
  }
  RootOfUnity inverse() const { return make(order, -static_cast<std::int64_t>(exponent)); }

  auto operator<=>(const RootOfUnity&) const = default;
};

/// An element of Q(zeta_m), stored as coefficients of zeta_m^0 .. zeta_m^{phi(m)-1}
/// reduced modulo the m-th cyclotomic polynomial.  That reduced form is unique,
/// so equality at a common order is coefficient comparison.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(1) {}
  explicit CyclotomicNumber(unsigned order) : order_(order), coeffs_(detail::euler_phi(order)) {
    if (order == 0) throw InvalidArgument("cyclotomic order must be positive");
  }

  static CyclotomicNumber rational(const mpq_class& value, unsigned order = 1) {
    CyclotomicNumber c(order);
    c.coeffs_[0] = value;
    return c;
  }

  /// Canonical form of zeta_m^k.
  static CyclotomicNumber root_of_unity(unsigned m, long long k) {
    if (m == 0) throw InvalidArgument("root_of_unity requires m >= 1");
    long long e = k % static_cast<long long>(m);
    if (e < 0) e += m;
    std::vector<mpq_class> poly(static_cast<std::size_t>(e) + 1);
    poly[static_cast<std::size_t>(e)] = 1;
    return from_polynomial(m, std::move(poly));
  }

  static CyclotomicNumber from_root(const RootOfUnity& r) {
    return root_of_unity(static_cast<unsigned>(r.order), static_cast<long long>(r.exponent));
  }

  /// Builds the canonical element for sum_k poly[k] zeta_m^k.
  static CyclotomicNumber from_polynomial(unsigned m, std::vector<mpq_class> poly) {
    CyclotomicNumber c(m);
    c.coeffs_ = detail::reduce_mod_cyclotomic(std::move(poly), m);
    return c;
  }

  /// Canonical element from exact coefficients already of length phi(m).
  static CyclotomicNumber from_coefficients(unsigned m, std::vector<mpq_class> coeffs) {
    if (coeffs.size() > m) throw InvalidArgument("too many cyclotomic coefficients");
    return from_polynomial(m, std::move(coeffs));
  }

  unsigned order() const { return order_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      if (sgn(coeffs_[k]) != 0) return false;
    return true;
  }

  /// Re-expresses this number in Q(zeta_target); order() must divide target.
  CyclotomicNumber embed(unsigned target) const {
    if (target == order_) return *this;
    if (target % order_ != 0) throw InvalidArgument("embedding target must be a multiple of the order");
    const unsigned step = target / order_;
    std::vector<mpq_class> poly(static_cast<std::size_t>(step) * coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
    return from_polynomial(target, std::move(poly));
  }

  CyclotomicNumber operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    const unsigned m = std::lcm(a.order_, b.order_);
    CyclotomicNumber x = a.embed(m);
    const CyclotomicNumber y = b.embed(m);
    for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
    return x;
  }
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    const unsigned m = std::lcm(a.order_, b.order_);
    const CyclotomicNumber x = a.embed(m);
    const CyclotomicNumber y = b.embed(m);
    if (y.is_rational()) return x.scaled(y.coeffs_[0]);
    if (x.is_rational()) return y.scaled(x.coeffs_[0]);
    std::vector<mpq_class> poly(x.coeffs_.size() + y.coeffs_.size());
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (sgn(x.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        if (sgn(y.coeffs_[j]) == 0) continue;
        poly[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return from_polynomial(m, std::move(poly));
  }

  CyclotomicNumber scaled(const mpq_class& s) const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  /// Complex conjugation zeta_m -> zeta_m^{-1}.
  CyclotomicNumber conjugate() const {
    std::vector<mpq_class> poly(order_ + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[(order_ - k) % order_] += coeffs_[k];
    return from_polynomial(order_, std::move(poly));
  }

  /// Multiplicative inverse, by solving the linear system x * y = 1 over Q.
  CyclotomicNumber inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of zero cyclotomic number");
    if (is_rational()) return rational(1 / coeffs_[0], order_);
    const std::size_t n = coeffs_.size();
    // column k of the matrix holds x * zeta^k
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
      const CyclotomicNumber col = *this * root_of_unity(order_, static_cast<long long>(k));
      for (std::size_t r = 0; r < n; ++r) a[r][k] = col.coeffs_[r];
    }
    a[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && sgn(a[piv][c]) == 0) ++piv;
      if (piv == n) throw ZeroDivisor("singular multiplication map");
      std::swap(a[piv], a[c]);
      const mpq_class inv = 1 / a[c][c];
      for (std::size_t t = c; t <= n; ++t) a[c][t] *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || sgn(a[r][c]) == 0) continue;
        const mpq_class f = a[r][c];
        for (std::size_t t = c; t <= n; ++t) a[r][t] -= f * a[c][t];
      }
    }
    CyclotomicNumber r(order_);
    for (std::size_t k = 0; k < n; ++k) r.coeffs_[k] = a[k][n];
    return r;
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const unsigned m = std::lcm(a.order_, b.order_);
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
  }

  /// Value under zeta_m -> exp(2 pi i a / m).
  std::complex<double> evaluate(unsigned a = 1) const {
    std::complex<double> sum = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sgn(coeffs_[k]) == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((a * k) % order_) / order_;
      sum += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return sum;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sgn(coeffs_[k]) == 0) continue;
      std::string term = coeffs_[k].get_str();
      if (k > 0) term += "*zeta" + std::to_string(order_) + "^" + std::to_string(k);
      if (!out.empty()) out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
      else out = term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  unsigned order_;
  std::vector<mpq_class> coeffs_;
};

/// Accumulates rational multiples of roots of unity without reducing each term.
class RootSum {
 public:
  void add(const RootOfUnity& r, const mpq_class& weight) { terms_[r] += weight; }

  CyclotomicNumber value() const {
    unsigned m = 1;
    for (const auto& [r, w] : terms_) m = std::lcm(m, static_cast<unsigned>(r.order));
    std::vector<mpq_class> poly(m);
    for (const auto& [r, w] : terms_) poly[static_cast<std::size_t>(r.exponent * (m / r.order))] += w;
    return CyclotomicNumber::from_polynomial(m, std::move(poly));
  }

 private:
  std::map<RootOfUnity, mpq_class> terms_;
};

}  // namespace ssgamma
