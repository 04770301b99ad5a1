#pragma once

#include <gmpxx.h>

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ssgamma/cyclotomic.hpp"
#include "ssgamma/errors.hpp"
#include "ssgamma/matrix.hpp"
#include "ssgamma/padic.hpp"
#include "ssgamma/scalar.hpp"

namespace ssgamma {

inline constexpr const char* kPsiConvention = "psi(x) = exp(2*pi*i*{x/p}_p), conductor p";
inline constexpr const char* kMeasureConvention = "vol(o) = q^(1/2) additive, vol(o^x) = 1 multiplicative";

/// Default cyclotomic ceiling lcm(p^2, p - 1).
inline unsigned default_cyclotomic_order(unsigned long p) {
  return static_cast<unsigned>(std::lcm(p * p, p - 1));
}

/// psi(x) = exp(2 pi i r) with r the p-adic principal part of x/p.
inline RootOfUnity psi_root(const mpq_class& x, unsigned long p) {
  const mpq_class t = x / p;
  const int v = valuation(t, p);
  if (v >= 0) return {};
  const int k = -v;
  const mpz_class r = residue(t * prime_power(p, k), p, k);
  return RootOfUnity::make(prime_power(p, k).get_num().get_ui(), static_cast<std::int64_t>(r.get_si()));
}

/// The additive character of F with conductor p.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(unsigned long p, unsigned max_order = 0)
      : p_(p), max_order_(max_order == 0 ? default_cyclotomic_order(p) : max_order) {}

  unsigned long prime() const { return p_; }
  unsigned max_order() const { return max_order_; }

  RootOfUnity root(const mpq_class& x) const {
    const RootOfUnity r = psi_root(x, p_);
    if (max_order_ % r.order != 0)
      throw OrderOverflow("psi(" + x.get_str() + ") needs zeta_" + std::to_string(r.order) +
                          " beyond configured order " + std::to_string(max_order_));
    return r;
  }

  CyclotomicNumber operator()(const PAdicNumber& x) const { return CyclotomicNumber::from_root(root(x.value())); }

 private:
  unsigned long p_;
  unsigned max_order_;
};

inline CyclotomicNumber psi_eval(const PAdicNumber& x) { return AdditiveCharacter(x.prime())(x); }

/// Smallest positive primitive root modulo p.
inline unsigned long primitive_root(unsigned long p) {
  if (p == 2) return 1;
  std::vector<unsigned long> factors;
  unsigned long m = p - 1;
  for (unsigned long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (unsigned long g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned long f : factors) {
      mpz_class r;
      mpz_class base(g), mod(p);
      mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / f, mod.get_mpz_t());
      if (r == 1) ok = false;
    }
    if (ok) return g;
  }
  throw InvalidArgument("no primitive root for " + std::to_string(p));
}

/// Discrete-log table: index[r] = ind_g(r) for r in 1..p-1 with g = primitive_root(p).
inline std::vector<unsigned long> index_table(unsigned long p) {
  std::vector<unsigned long> index(p, 0);
  const unsigned long g = primitive_root(p);
  unsigned long x = 1;
  for (unsigned long e = 0; e + 1 < p; ++e) {
    index[x] = e;
    x = (x * g) % p;
  }
  return index;
}

/// Tamely ramified character of F^x: tau(w^v u) = tau(w)^v zeta_{p-1}^{j ind_g(u mod p)}.
class TameCharacter {
 public:
  TameCharacter(unsigned long p, unsigned long unit_exponent, ExactScalar value_at_uniformizer = ExactScalar::one())
      : p_(p), j_(unit_exponent), at_uniformizer_(std::move(value_at_uniformizer)), index_(index_table(p)) {
    if (j_ + 1 >= p_ && !(p_ == 2 && j_ == 0)) throw InvalidArgument("tame exponent must lie in 0..p-2");
    if (!at_uniformizer_.is_monomial()) throw InvalidArgument("tau(w) must be a nonzero monomial");
  }

  unsigned long prime() const { return p_; }
  unsigned long unit_exponent() const { return j_; }
  const ExactScalar& value_at_uniformizer() const { return at_uniformizer_; }

  /// Value on a unit residue class r in 1..p-1.
  RootOfUnity unit_root(unsigned long r) const {
    return RootOfUnity::make(p_ - 1, static_cast<std::int64_t>((j_ * index_.at(r % p_)) % (p_ - 1)));
  }

  ExactScalar operator()(const PAdicNumber& x) const {
    if (x.is_zero()) throw ZeroDivisor("tau(0)");
    const int v = x.valuation();
    const unsigned long r = x.unit_part().residue(1).get_ui();
    return at_uniformizer_.pow(v) * ExactScalar::monomial(CyclotomicNumber::from_root(unit_root(r)));
  }

  /// tau(-1).
  ExactScalar at_minus_one() const { return (*this)(PAdicNumber(-1, p_)); }

 private:
  unsigned long p_;
  unsigned long j_;
  ExactScalar at_uniformizer_;
  std::vector<unsigned long> index_;
};

inline ExactScalar tame_eval(const TameCharacter& tau, const PAdicNumber& x) { return tau(x); }

/// psi(t_1 h_12 + ... + t_l h_{l,l+1} + t_{l+1} h_{2l,1} / w) on I+ of SO_{2l+1}.
inline RootOfUnity affine_chi_root(const GroupMatrix& h, const std::vector<mpq_class>& t) {
  const std::size_t n = h.size();
  const std::size_t ell = (n - 1) / 2;
  if (n % 2 == 0 || t.size() != ell + 1) throw BadDimension("affine_chi needs l + 1 parameters on SO_{2l+1}");
  if (!iwahori_test(h, IwahoriLevel::IPlus)) throw NotInIPlus(h.to_string());
  mpq_class arg = 0;
  for (std::size_t i = 0; i < ell; ++i) arg += t[i] * h(i, i + 1);
  arg += t[ell] * h(n - 2, 0) / h.prime();
  return psi_root(arg, h.prime());
}

inline std::vector<mpq_class> unit_parameters(std::size_t count) { return std::vector<mpq_class>(count, 1); }

inline CyclotomicNumber affine_chi(const GroupMatrix& h, const std::vector<mpq_class>& t) {
  return CyclotomicNumber::from_root(affine_chi_root(h, t));
}

/// chi_zeta(gchi^i k) = zeta^i chi(k), zeta = +-1.
inline CyclotomicNumber chi_zeta(int i, const GroupMatrix& k, int zeta) {
  const std::size_t ell = (k.size() - 1) / 2;
  const CyclotomicNumber base = affine_chi(k, unit_parameters(ell + 1));
  return (i % 2 != 0 && zeta == -1) ? -base : base;
}

/// psi(sum u_{i,i+1}) over the first `count` superdiagonal entries.
inline RootOfUnity whittaker_character_root(const GroupMatrix& u, std::size_t count) {
  mpq_class arg = 0;
  for (std::size_t i = 0; i < count; ++i) arg += u(i, i + 1);
  return psi_root(arg, u.prime());
}

/// Value of a Whittaker function as zeta^power * phase, zero when absent.
struct WhittakerValue {
  int power = 0;
  RootOfUnity phase;
};

enum class Flavor { SO, GL };

/// Data determining the Whittaker function of a simple supercuspidal.
struct WhittakerSpec {
  Flavor flavor = Flavor::SO;
  std::size_t rank = 1;  ///< l for SO_{2l+1}, n for GL_n
  unsigned long prime = 3;
  int zeta_sign = 1;                  ///< SO: zeta in {-1, 1}
  RootOfUnity zeta_root{};            ///< GL: zeta, with zeta^n = 1 (trivial central character)
  std::vector<mpq_class> parameters;  ///< SO affine parameters t_1..t_{l+1}; empty means all 1

  static WhittakerSpec so(std::size_t ell, unsigned long p, int zeta) {
    WhittakerSpec s;
    s.flavor = Flavor::SO;
    s.rank = ell;
    s.prime = p;
    s.zeta_sign = zeta;
    s.validate();
    return s;
  }

  static WhittakerSpec gl(std::size_t n, unsigned long p, RootOfUnity zeta) {
    WhittakerSpec s;
    s.flavor = Flavor::GL;
    s.rank = n;
    s.prime = p;
    s.zeta_root = zeta;
    s.validate();
    return s;
  }

  void validate() const {
    if (rank < 1) throw BadDimension("rank must be positive");
    if (flavor == Flavor::SO) {
      if (zeta_sign != 1 && zeta_sign != -1) throw BadRoot("SO zeta must be +1 or -1");
      if (!parameters.empty()) {
        if (parameters.size() != rank + 1) throw BadDimension("need l + 1 affine parameters");
        // The Whittaker formula needs chi to agree with psi on U and to be gchi-stable.
        for (const auto& t : parameters)
          if (!in_subset(t, prime, Subset::OnePlusP))
            throw InvalidArgument("Whittaker evaluation needs affine parameters in 1 + p");
      }
    } else if ((zeta_root.exponent * rank) % zeta_root.order != 0) {
      throw BadRoot("GL zeta must satisfy zeta^n = 1");
    }
  }

  CyclotomicNumber zeta_value(int power) const {
    if (flavor == Flavor::SO) return CyclotomicNumber::rational((power % 2 != 0 && zeta_sign == -1) ? -1 : 1);
    RootOfUnity z = RootOfUnity::make(zeta_root.order, static_cast<std::int64_t>(zeta_root.exponent) * power);
    return CyclotomicNumber::from_root(z);
  }

  std::vector<mpq_class> affine_parameters() const {
    return parameters.empty() ? unit_parameters(rank + 1) : parameters;
  }
};

/// W(g) split as zeta^power * phase, or nullopt where W vanishes.
inline std::optional<WhittakerValue> whittaker_value(const WhittakerSpec& spec, const GroupMatrix& g) {
  if (spec.flavor == Flavor::SO) {
    if (g.size() != 2 * spec.rank + 1) throw BadDimension("Whittaker argument has wrong size");
    auto w = coset_decompose(g);
    if (!w) return std::nullopt;
    const RootOfUnity phase = whittaker_character_root(w->u, spec.rank) * affine_chi_root(w->k, spec.affine_parameters());
    return WhittakerValue{w->i, phase};
  }
  if (g.size() != spec.rank) throw BadDimension("Whittaker argument has wrong size");
  auto w = gl_coset_decompose(g);
  if (!w) return std::nullopt;
  // chi(z k) = omega(z) psi(k_12 + ... + k_{n-1,n} + k_{n1}/w); omega trivial.
  const std::size_t n = spec.rank;
  mpq_class arg = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) arg += w->k(i, i + 1);
  arg += w->k(n - 1, 0) / spec.prime;
  const RootOfUnity phase = whittaker_character_root(w->u, n - 1) * psi_root(arg, spec.prime);
  return WhittakerValue{w->j, phase};
}

inline ExactScalar whittaker_eval(const WhittakerSpec& spec, const GroupMatrix& g) {
  const auto v = whittaker_value(spec, g);
  if (!v) return ExactScalar::zero();
  return ExactScalar::monomial(spec.zeta_value(v->power) * CyclotomicNumber::from_root(v->phase));
}

}  // namespace ssgamma
