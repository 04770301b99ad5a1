#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ssgamma/characters.hpp"
#include "ssgamma/cyclotomic.hpp"
#include "ssgamma/errors.hpp"
#include "ssgamma/matrix.hpp"
#include "ssgamma/padic.hpp"
#include "ssgamma/scalar.hpp"

namespace ssgamma {

/// sum c_i w_E^i in E = F(w_E), w_E^{2l} = w.
class EisensteinElement {
 public:
  EisensteinElement(std::size_t ell, unsigned long p, std::vector<mpq_class> coeffs)
      : ell_(ell), p_(p), coeffs_(std::move(coeffs)) {
    if (ell_ < 1) throw BadDimension("l must be >= 1");
    if (coeffs_.size() > degree()) throw BadDimension("at most 2l coefficients");
    coeffs_.resize(degree());
  }

  static EisensteinElement constant(std::size_t ell, unsigned long p, const mpq_class& c) {
    return EisensteinElement(ell, p, {c});
  }
  static EisensteinElement uniformizer(std::size_t ell, unsigned long p) {
    std::vector<mpq_class> c(2 * ell);
    if (2 * ell == 1) c[0] = p;
    else c[1] = 1;
    return EisensteinElement(ell, p, std::move(c));
  }

  std::size_t ell() const { return ell_; }
  std::size_t degree() const { return 2 * ell_; }
  unsigned long prime() const { return p_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  friend EisensteinElement operator*(const EisensteinElement& a, const EisensteinElement& b) {
    if (a.ell_ != b.ell_ || a.p_ != b.p_) throw BadDimension("Eisenstein elements of different extensions");
    const std::size_t n = a.degree();
    std::vector<mpq_class> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a.coeffs_[i]) == 0 || sgn(b.coeffs_[j]) == 0) continue;
        const mpq_class t = a.coeffs_[i] * b.coeffs_[j];
        if (i + j < n) out[i + j] += t;
        else out[i + j - n] += t * a.p_;
      }
    return EisensteinElement(a.ell_, a.p_, std::move(out));
  }

  friend bool operator==(const EisensteinElement& a, const EisensteinElement& b) {
    return a.ell_ == b.ell_ && a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  /// In 1 + p_E: c_0 in 1 + p and the rest integral.
  bool in_one_plus_pe() const {
    if (!in_subset(coeffs_[0], p_, Subset::OnePlusP)) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (valuation(coeffs_[i], p_) < 0) return false;
    return true;
  }

  bool is_base_unit() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return false;
    return in_subset(coeffs_[0], p_, Subset::Units);
  }

  bool is_uniformizer() const { return *this == uniformizer(ell_, p_); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      if (!out.empty()) out += " + ";
      out += coeffs_[i].get_str();
      if (i > 0) out += "*wE^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::size_t ell_;
  unsigned long p_;
  std::vector<mpq_class> coeffs_;
};

/// Matrix of multiplication by e in the basis w_E^{2l-1}, ..., w_E, 1.
inline GroupMatrix iota_embed(const EisensteinElement& e) {
  if (e.is_zero()) throw ZeroElement("iota of 0");
  const std::size_t n = e.degree();
  GroupMatrix m(n, e.prime(), Ambient::GL);
  // basis index b <-> power n - 1 - b
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t power = n - 1 - col;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(e[i]) == 0) continue;
      std::size_t target = power + i;
      mpq_class c = e[i];
      if (target >= n) {
        target -= n;
        c *= e.prime();
      }
      m(n - 1 - target, col) += c;
    }
  }
  return m;
}

/// lambda(A) = psi(A_12 + ... + A_{2l-1,2l} + A_{2l,1} / w).
inline RootOfUnity lambda_root(const GroupMatrix& a) {
  const std::size_t n = a.size();
  mpq_class arg = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) arg += a(i, i + 1);
  arg += a(n - 1, 0) / a.prime();
  return psi_root(arg, a.prime());
}

inline int legendre_symbol(const mpz_class& a, unsigned long p) {
  const mpz_class prime(p);
  return mpz_legendre(a.get_mpz_t(), prime.get_mpz_t());
}

/// Tame Hilbert symbol (a, b)_p for odd p.
inline int hilbert_symbol(const mpq_class& a, const mpq_class& b, unsigned long p) {
  if (p == 2) throw BadResidueChar("Hilbert symbol implemented for odd p only");
  if (sgn(a) == 0 || sgn(b) == 0) throw ZeroElement("Hilbert symbol of 0");
  const int alpha = valuation(a, p);
  const int beta = valuation(b, p);
  const mpz_class ua = residue(a * prime_power(p, -alpha), p, 1);
  const mpz_class ub = residue(b * prime_power(p, -beta), p, 1);
  int sign = ((static_cast<long>(alpha) * beta) % 2 != 0 && ((p - 1) / 2) % 2 != 0) ? -1 : 1;
  if (beta % 2 != 0) sign *= legendre_symbol(ua, p);
  if (alpha % 2 != 0) sign *= legendre_symbol(ub, p);
  return sign;
}

/// Discriminant class of x^{2l} - w modulo squares: (-1)^{l+1} w.
inline mpq_class eisenstein_discriminant_class(std::size_t ell, unsigned long p) {
  return mpq_class(static_cast<long>(p) * (ell % 2 == 0 ? -1 : 1));
}

/// kappa_{E/F}(u) on units as the quadratic character (u, disc)_p.
inline int kappa(const mpq_class& u, std::size_t ell, unsigned long p) {
  if (!in_subset(u, p, Subset::Units)) throw UnsupportedElement("kappa evaluated on units only");
  return hilbert_symbol(u, eisenstein_discriminant_class(ell, p), p);
}

/// sum over x in F_p^x of zeta_{p-1}^{j ind(x)} zeta_p^x.
inline CyclotomicNumber gauss_sum(unsigned long j, unsigned long p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (j + 1 >= p && !(p == 2 && j == 0)) throw InvalidArgument("j must lie in 0..p-2");
  const TameCharacter tau(p, j);
  RootSum sum;
  for (unsigned long x = 1; x < p; ++x) sum.add(tau.unit_root(x) * RootOfUnity::make(p, static_cast<std::int64_t>(x)), 1);
  return sum.value();
}

/// A value of xi: value * lambda_token^{lambda_power}.
struct XiValue {
  CyclotomicNumber value;
  int lambda_power = 0;

  std::string to_string() const {
    std::string s = value.to_string();
    if (lambda_power != 0) s += " * lambda^(" + std::to_string(lambda_power) + ")";
    return s;
  }
};

struct PartitionCheck {
  std::vector<std::size_t> parts;
  bool attains_depth = false;  ///< some part admits depth exactly 1/(2l)
};

/// Partitions of n as non-increasing part lists, in reverse lexicographic order.
inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto& self, std::size_t rest, std::size_t max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// For each partition sum n_i = 2l: does some part admit depth a/n_i = 1/(2l) with a >= 1?
inline std::vector<PartitionCheck> depth_partition_check(std::size_t ell) {
  const std::size_t n = 2 * ell;
  std::vector<PartitionCheck> out;
  for (auto& parts : partitions(n)) {
    PartitionCheck c;
    for (std::size_t part : parts)
      if (part % n == 0) c.attains_depth = true;  // a / part = 1 / n  <=>  part = a n
    c.parts = std::move(parts);
    out.push_back(std::move(c));
  }
  return out;
}

struct ParamData {
  unsigned long prime = 3;
  std::size_t ell = 1;
  std::size_t degree = 2;
  int zeta = 1;
  mpq_class depth;
  XiValue xi_at_uniformizer;
  std::map<unsigned long, int> kappa_on_units;  ///< residue -> kappa
  std::map<unsigned long, int> xi_on_units;     ///< residue -> xi = kappa^{-1}
  std::vector<PartitionCheck> partition_checks;
  bool single_block_unique = false;
};

/// xi on the three pieces the parameter data pins down.
inline XiValue xi_eval(const ParamData& pd, const EisensteinElement& e) {
  if (e.ell() != pd.ell || e.prime() != pd.prime) throw BadDimension("element of a different extension");
  if (e.is_uniformizer()) return {CyclotomicNumber::rational(pd.zeta), -1};
  if (e.in_one_plus_pe()) return {CyclotomicNumber::from_root(lambda_root(iota_embed(e))), 0};
  if (e.is_base_unit()) return {CyclotomicNumber::rational(kappa(e[0], pd.ell, pd.prime)), 0};
  throw UnsupportedElement(e.to_string() + " is not in 1 + p_E, o_F^x or {w_E}");
}

inline ParamData param_summary(unsigned long p, std::size_t ell, int zeta) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if ((2 * ell) % p == 0) throw BadResidueChar("p divides 2l");
  if (ell < 1) throw InvalidArgument("l must be >= 1");
  if (zeta != 1 && zeta != -1) throw InvalidArgument("zeta must be +1 or -1");
  ParamData pd;
  pd.prime = p;
  pd.ell = ell;
  pd.degree = 2 * ell;
  pd.zeta = zeta;
  pd.depth = mpq_class(1, static_cast<unsigned long>(2 * ell));
  pd.xi_at_uniformizer = XiValue{CyclotomicNumber::rational(zeta), -1};
  for (unsigned long r = 1; r < p; ++r) {
    const int k = kappa(mpq_class(r), ell, p);
    pd.kappa_on_units[r] = k;
    pd.xi_on_units[r] = k;  // k = +-1 is its own inverse
  }
  pd.partition_checks = depth_partition_check(ell);
  std::size_t attaining = 0;
  bool single_ok = false;
  for (const auto& c : pd.partition_checks)
    if (c.attains_depth) {
      ++attaining;
      single_ok = c.parts.size() == 1;
    }
  pd.single_block_unique = attaining == 1 && single_ok;
  return pd;
}

}  // namespace ssgamma
