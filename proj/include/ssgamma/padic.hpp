#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ssgamma/errors.hpp"
#include "ssgamma/scalar.hpp"

namespace ssgamma {

/// Sentinel valuation of zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline mpq_class make_rational(long num, long den = 1) {
  mpq_class r(num, 1);
  r /= den;
  return r;
}

/// p-adic valuation of a rational number.
inline int valuation(const mpq_class& x, unsigned long p) {
  if (sgn(x) == 0) return kInfiniteValuation;
  mpz_class prime(p), rest;
  int v = static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), prime.get_mpz_t()));
  v -= static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), prime.get_mpz_t()));
  return v;
}

/// p^e as an exact rational (e may be negative).
inline mpq_class prime_power(unsigned long p, int e) {
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), pe) : mpq_class(pe);
}

/// Class of x in o / p^k as an integer in [0, p^k).
inline mpz_class residue(const mpq_class& x, unsigned long p, int k) {
  if (valuation(x, p) < 0) throw NegativeValuation(x.get_str() + " is not integral at " + std::to_string(p));
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, static_cast<unsigned long>(k));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), modulus.get_mpz_t());
  mpz_class r = (x.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

/// An element of F = Q_p represented exactly by a rational number.
class PAdicNumber {
 public:
  PAdicNumber(mpq_class value, unsigned long prime) : value_(std::move(value)), prime_(prime) {
    value_.canonicalize();
  }
  PAdicNumber(long value, unsigned long prime) : PAdicNumber(mpq_class(value), prime) {}

  static PAdicNumber uniformizer(unsigned long p) { return {static_cast<long>(p), p}; }

  const mpq_class& value() const { return value_; }
  unsigned long prime() const { return prime_; }

  int valuation() const { return ssgamma::valuation(value_, prime_); }
  bool is_zero() const { return sgn(value_) == 0; }

  /// x * p^{-v(x)}; requires x != 0.
  PAdicNumber unit_part() const {
    if (is_zero()) throw ZeroDivisor("unit part of zero");
    return {value_ * prime_power(prime_, -valuation()), prime_};
  }

  mpz_class residue(int k) const { return ssgamma::residue(value_, prime_, k); }

  PAdicNumber inverse() const {
    if (is_zero()) throw ZeroDivisor("inverse of zero");
    return {1 / value_, prime_};
  }

  friend PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) { return {a.value_ + b.value_, common(a, b)}; }
  friend PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) { return {a.value_ - b.value_, common(a, b)}; }
  friend PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) { return {a.value_ * b.value_, common(a, b)}; }
  friend PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) {
    if (b.is_zero()) throw ZeroDivisor("division by zero");
    return {a.value_ / b.value_, common(a, b)};
  }
  PAdicNumber operator-() const { return {-value_, prime_}; }
  friend bool operator==(const PAdicNumber& a, const PAdicNumber& b) {
    return a.prime_ == b.prime_ && a.value_ == b.value_;
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  static unsigned long common(const PAdicNumber& a, const PAdicNumber& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch(std::to_string(a.prime_) + " vs " + std::to_string(b.prime_));
    return a.prime_;
  }

  mpq_class value_;
  unsigned long prime_;
};

enum class Subset { Integers, MaxIdeal, MaxIdealSquared, Units, OnePlusP, UniformizerOnePlusP };

inline bool in_subset(const mpq_class& x, unsigned long p, Subset subset) {
  switch (subset) {
    case Subset::Integers: return valuation(x, p) >= 0;
    case Subset::MaxIdeal: return valuation(x, p) >= 1;
    case Subset::MaxIdealSquared: return valuation(x, p) >= 2;
    case Subset::Units: return sgn(x) != 0 && valuation(x, p) == 0;
    case Subset::OnePlusP: return valuation(x - 1, p) >= 1;
    case Subset::UniformizerOnePlusP: return valuation(x / p - 1, p) >= 1;
  }
  return false;
}

inline bool in_subset(const PAdicNumber& x, Subset subset) { return in_subset(x.value(), x.prime(), subset); }

/// Finite sets of coset representatives with their Haar-measure weights.
/// Additive sets use vol(o) = q^{1/2}; multiplicative sets use vol(o^x) = 1.
struct RepSet {
  enum class Kind {
    Integers,       // o mod p^N
    MaxIdeal,       // p mod p^N
    Units,          // o^x mod 1 + p^N
    OnePlusP,       // 1 + p mod 1 + p^N
    Shell,          // w^v o^x mod 1 + p^N
    Fractional,     // p^{-V} o mod p^N
  };

  Kind kind = Kind::Integers;
  unsigned long prime = 3;
  int level = 1;   // N
  int bound = 0;   // V for Fractional, v for Shell

  bool additive() const { return kind == Kind::Integers || kind == Kind::MaxIdeal || kind == Kind::Fractional; }

  /// Number of representatives.
  mpz_class count() const {
    const auto pow = [&](int e) {
      mpz_class r;
      mpz_ui_pow_ui(r.get_mpz_t(), prime, static_cast<unsigned long>(e));
      return r;
    };
    switch (kind) {
      case Kind::Integers: return pow(level);
      case Kind::MaxIdeal: return pow(level - 1);
      case Kind::Units:
      case Kind::Shell: return pow(level - 1) * (prime - 1);
      case Kind::OnePlusP: return pow(level - 1);
      case Kind::Fractional: return pow(level + bound);
    }
    return 0;
  }

  /// Measure of each class.
  ExactScalar weight() const {
    if (additive()) return ExactScalar::rational(1, 1 - 2 * level);
    mpq_class w = 1;
    w /= mpz_class(prime - 1) * prime_power(prime, level - 1).get_num();
    return ExactScalar::rational(w);
  }

  /// Measure of the whole set.
  ExactScalar volume() const {
    switch (kind) {
      case Kind::Integers: return ExactScalar::rational(1, 1);
      case Kind::MaxIdeal: return ExactScalar::rational(1, -1);
      case Kind::Units:
      case Kind::Shell: return ExactScalar::one();
      case Kind::OnePlusP: return ExactScalar::rational(make_rational(1, static_cast<long>(prime - 1)));
      case Kind::Fractional: return ExactScalar::rational(1, 1 + 2 * bound);
    }
    return {};
  }

  /// Representatives as rationals, in increasing order of the underlying integer index.
  std::vector<mpq_class> representatives() const {
    if (level < 1) throw InvalidArgument("RepSet level must be >= 1");
    if (bound < 0 && kind == Kind::Fractional) throw InvalidArgument("RepSet bound must be >= 0");
    std::vector<mpq_class> reps;
    const unsigned long pl = prime_power(prime, level).get_num().get_ui();
    const unsigned long pl1 = pl / prime;
    switch (kind) {
      case Kind::Integers:
        for (unsigned long m = 0; m < pl; ++m) reps.emplace_back(m);
        break;
      case Kind::MaxIdeal:
        for (unsigned long m = 0; m < pl1; ++m) reps.emplace_back(m * prime);
        break;
      case Kind::Units:
        for (unsigned long m = 1; m < pl; ++m)
          if (m % prime != 0) reps.emplace_back(m);
        break;
      case Kind::Shell: {
        const mpq_class scale = prime_power(prime, bound);
        for (unsigned long m = 1; m < pl; ++m)
          if (m % prime != 0) reps.push_back(scale * m);
        break;
      }
      case Kind::OnePlusP:
        for (unsigned long m = 0; m < pl1; ++m) reps.emplace_back(1 + m * prime);
        break;
      case Kind::Fractional: {
        const mpq_class scale = prime_power(prime, -bound);
        const unsigned long total = prime_power(prime, level + bound).get_num().get_ui();
        for (unsigned long m = 0; m < total; ++m) {
          mpq_class r = scale * m;
          r.canonicalize();
          reps.push_back(r);
        }
        break;
      }
    }
    return reps;
  }

  std::vector<std::pair<PAdicNumber, ExactScalar>> enumerate() const {
    std::vector<std::pair<PAdicNumber, ExactScalar>> out;
    const ExactScalar w = weight();
    for (auto& r : representatives()) out.emplace_back(PAdicNumber(std::move(r), prime), w);
    return out;
  }
};

}  // namespace ssgamma
