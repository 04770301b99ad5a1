#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <limits>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "ssgamma/cyclotomic.hpp"
#include "ssgamma/errors.hpp"

namespace ssgamma {

/// Exponent pair of a monomial q^{q_half/2} * (q^{-s})^{s_power}.
struct Exponent {
  int q_half = 0;
  int s_power = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Finite sum  sum c_{h,k} q^{h/2} (q^{-s})^k  with cyclotomic coefficients.
/// Zero coefficients are never stored.  Once q = p is known (with_q), terms are
/// kept canonical: one term per (k, h mod 2), coefficient content prime to p.
class ExactScalar {
 public:
  ExactScalar() = default;

  static ExactScalar monomial(const CyclotomicNumber& c, int q_half = 0, int s_power = 0) {
    ExactScalar r;
    if (!c.is_zero()) r.terms_.emplace(Exponent{q_half, s_power}, c);
    return r;
  }
  static ExactScalar rational(const mpq_class& v, int q_half = 0, int s_power = 0) {
    return monomial(CyclotomicNumber::rational(v), q_half, s_power);
  }
  static ExactScalar one() { return rational(1); }
  static ExactScalar zero() { return {}; }
  static ExactScalar root_of_unity(unsigned m, long long k) { return monomial(CyclotomicNumber::root_of_unity(m, k)); }

  const std::map<Exponent, CyclotomicNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  unsigned long q() const { return q_; }

  /// Fixes q = p and puts the terms in canonical form.
  ExactScalar with_q(unsigned long p) const {
    if (q_ != 0 && q_ != p) throw InvalidArgument("scalar already bound to q = " + std::to_string(q_));
    ExactScalar r = *this;
    r.q_ = p;
    r.normalize();
    return r;
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar r = a;
    r.q_ = common_q(a, b);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    r.normalize();
    return r;
  }
  friend ExactScalar operator-(const ExactScalar& a) {
    ExactScalar r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    ExactScalar r;
    r.q_ = common_q(a, b);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(Exponent{ea.q_half + eb.q_half, ea.s_power + eb.s_power}, ca * cb);
    r.normalize();
    return r;
  }

  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  /// a / b for a monomial divisor b.
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.is_zero()) throw ZeroDivisor("division by the zero scalar");
    if (!b.is_monomial()) throw NonMonomialDivisor("divisor has " + std::to_string(b.terms_.size()) + " terms");
    return a * b.inverse();
  }

  /// Inverse of a monomial.
  ExactScalar inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of zero");
    if (!is_monomial()) throw NonMonomialDivisor("only monomials are invertible");
    const auto& [e, c] = *terms_.begin();
    ExactScalar r = monomial(c.inverse(), -e.q_half, -e.s_power);
    r.q_ = q_;
    r.normalize();
    return r;
  }

  /// Integer power; negative exponents require a monomial.
  ExactScalar pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    ExactScalar result = one();
    result.q_ = q_;
    ExactScalar base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  ExactScalar conjugate() const {
    ExactScalar r;
    r.q_ = q_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conjugate());
    return r;
  }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    if (a.q_ != b.q_) {
      const unsigned long q = common_q(a, b);
      return a.with_q(q) == b.with_q(q);
    }
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (!(e == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Numerical value with zeta_m -> exp(2 pi i a/m) for every coefficient order, at real q and s.
  std::complex<double> evaluate(double q, std::complex<double> s, unsigned a = 1) const {
    std::complex<double> sum = 0;
    for (const auto& [e, c] : terms_) {
      const std::complex<double> qs = std::pow(std::complex<double>(q), -s * static_cast<double>(e.s_power));
      sum += c.evaluate(a) * std::pow(q, 0.5 * e.q_half) * qs;
    }
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string coeff = c.to_string();
      const std::string power = power_string(e);
      std::string term;
      if (power.empty()) {
        term = coeff;
      } else if (coeff == "1") {
        term = power;
      } else if (coeff == "-1") {
        term = "-" + power;
      } else if (c.is_rational()) {
        term = coeff + "*" + power;
      } else {
        term = "(" + coeff + ")*" + power;
      }
      if (out.empty()) out = term;
      else out += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
    }
    return out;
  }

 private:
  void add_term(const Exponent& e, const CyclotomicNumber& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }

  static unsigned long common_q(const ExactScalar& a, const ExactScalar& b) {
    if (a.q_ != 0 && b.q_ != 0 && a.q_ != b.q_)
      throw InvalidArgument("scalars bound to different q: " + std::to_string(a.q_) + " vs " + std::to_string(b.q_));
    return a.q_ != 0 ? a.q_ : b.q_;
  }

  static int content_valuation(const CyclotomicNumber& c, unsigned long p) {
    int best = std::numeric_limits<int>::max();
    mpz_class prime(p), rest;
    for (const auto& x : c.coefficients()) {
      if (sgn(x) == 0) continue;
      int v = static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), prime.get_mpz_t()));
      v -= static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), prime.get_mpz_t()));
      best = std::min(best, v);
    }
    return best;
  }

  static mpq_class p_power(unsigned long p, int e) {
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? mpq_class(mpz_class(1), pe) : mpq_class(pe);
  }

  // q^{h/2} = p^{(h - (h mod 2))/2} q^{(h mod 2)/2}; then pull the p-content back out.
  void normalize() {
    if (q_ == 0 || terms_.empty()) return;
    std::map<Exponent, CyclotomicNumber> grouped;
    for (const auto& [e, c] : terms_) {
      const int parity = ((e.q_half % 2) + 2) % 2;
      const CyclotomicNumber moved = c.scaled(p_power(q_, (e.q_half - parity) / 2));
      auto [it, inserted] = grouped.try_emplace(Exponent{parity, e.s_power}, moved);
      if (!inserted) it->second += moved;
    }
    terms_.clear();
    for (auto& [e, c] : grouped) {
      if (c.is_zero()) continue;
      const int m = content_valuation(c, q_);
      terms_.emplace(Exponent{e.q_half + 2 * m, e.s_power}, c.scaled(p_power(q_, -m)));
    }
  }

  static std::string power_string(const Exponent& e) {
    if (e.q_half == 0 && e.s_power == 0) return "";
    std::string q_part;
    if (e.q_half != 0) {
      mpq_class half(e.q_half);
      half /= 2;
      q_part = half.get_str();
    }
    std::string s_part;
    if (e.s_power != 0) {
      const int k = e.s_power;
      const std::string mag = (std::abs(k) == 1) ? "s" : std::to_string(std::abs(k)) + "*s";
      if (q_part.empty()) s_part = (k > 0 ? "-" : "") + mag;
      else s_part = (k > 0 ? "-" : "+") + mag;
    }
    return "q^(" + q_part + s_part + ")";
  }

  std::map<Exponent, CyclotomicNumber> terms_;
  unsigned long q_ = 0;
};

/// q^{1/2 - s}, the shape of every gamma factor computed here.
inline ExactScalar q_half_minus_s() { return ExactScalar::rational(1, 1, 1); }

}  // namespace ssgamma
