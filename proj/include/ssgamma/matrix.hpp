#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssgamma/errors.hpp"
#include "ssgamma/padic.hpp"

namespace ssgamma {

enum class Ambient { GL, SOOdd, SOEven };

inline std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::GL: return "GL";
    case Ambient::SOOdd: return "SO_odd";
    case Ambient::SOEven: return "SO_even";
  }
  return "?";
}

/// Square matrix over F = Q_p, tagged with the group it is meant to live in.
/// Indices are zero-based: entry (0, 1) is the classical h_{12}.
class GroupMatrix {
 public:
  GroupMatrix(std::size_t size, unsigned long prime, Ambient ambient)
      : n_(size), p_(prime), ambient_(ambient), a_(size * size) {}

  static GroupMatrix identity(std::size_t size, unsigned long prime, Ambient ambient) {
    GroupMatrix m(size, prime, ambient);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
  }

  static GroupMatrix diagonal(const std::vector<mpq_class>& d, unsigned long prime, Ambient ambient) {
    GroupMatrix m(d.size(), prime, ambient);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static GroupMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows, unsigned long prime, Ambient ambient) {
    GroupMatrix m(rows.size(), prime, ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw BadDimension("matrix rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t size() const { return n_; }
  unsigned long prime() const { return p_; }
  Ambient ambient() const { return ambient_; }
  GroupMatrix with_ambient(Ambient a) const {
    GroupMatrix m = *this;
    m.ambient_ = a;
    return m;
  }

  mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  PAdicNumber entry(std::size_t i, std::size_t j) const { return {(*this)(i, j), p_}; }
  const std::vector<mpq_class>& data() const { return a_; }

  friend GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y) {
    if (x.n_ != y.n_) throw BadDimension("size mismatch in product");
    if (x.p_ != y.p_) throw PrimeMismatch("matrices over different primes");
    GroupMatrix r(x.n_, x.p_, x.ambient_);
    mpq_class t;
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const mpq_class& xik = x(i, k);
        if (sgn(xik) == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) {
          const mpq_class& ykj = y(k, j);
          if (sgn(ykj) == 0) continue;
          t = xik * ykj;
          r(i, j) += t;
        }
      }
    return r;
  }

  friend bool operator==(const GroupMatrix& x, const GroupMatrix& y) {
    return x.n_ == y.n_ && x.p_ == y.p_ && x.a_ == y.a_;
  }

  GroupMatrix transpose() const {
    GroupMatrix r(n_, p_, ambient_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  mpq_class determinant() const {
    std::vector<mpq_class> m = a_;
    mpq_class det = 1;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && sgn(m[piv * n_ + c]) == 0) ++piv;
      if (piv == n_) return 0;
      if (piv != c) {
        for (std::size_t t = 0; t < n_; ++t) std::swap(m[piv * n_ + t], m[c * n_ + t]);
        det = -det;
      }
      det *= m[c * n_ + c];
      for (std::size_t r = c + 1; r < n_; ++r) {
        if (sgn(m[r * n_ + c]) == 0) continue;
        const mpq_class f = m[r * n_ + c] / m[c * n_ + c];
        for (std::size_t t = c; t < n_; ++t) m[r * n_ + t] -= f * m[c * n_ + t];
      }
    }
    return det;
  }

  GroupMatrix inverse() const {
    std::vector<mpq_class> m = a_;
    GroupMatrix inv = identity(n_, p_, ambient_);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && sgn(m[piv * n_ + c]) == 0) ++piv;
      if (piv == n_) throw SingularMatrix("matrix is not invertible");
      if (piv != c)
        for (std::size_t t = 0; t < n_; ++t) {
          std::swap(m[piv * n_ + t], m[c * n_ + t]);
          std::swap(inv(piv, t), inv(c, t));
        }
      const mpq_class s = 1 / m[c * n_ + c];
      for (std::size_t t = 0; t < n_; ++t) {
        m[c * n_ + t] *= s;
        inv(c, t) *= s;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == c || sgn(m[r * n_ + c]) == 0) continue;
        const mpq_class f = m[r * n_ + c];
        for (std::size_t t = 0; t < n_; ++t) {
          m[r * n_ + t] -= f * m[c * n_ + t];
          inv(r, t) -= f * inv(c, t);
        }
      }
    }
    return inv;
  }

  GroupMatrix scaled(const mpq_class& s) const {
    GroupMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += (i ? "; " : "");
      for (std::size_t j = 0; j < n_; ++j) s += (j ? " " : "") + (*this)(i, j).get_str();
    }
    return s + "]";
  }

 private:
  std::size_t n_;
  unsigned long p_;
  Ambient ambient_;
  std::vector<mpq_class> a_;
};

/// The antidiagonal matrix J_n.
inline GroupMatrix antidiagonal_j(std::size_t n, unsigned long p, Ambient ambient = Ambient::GL) {
  GroupMatrix j(n, p, ambient);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
  return j;
}

/// det g = 1 and  g^t J g = J.
inline bool so_check(const GroupMatrix& g) {
  if (g.determinant() != 1) return false;
  const GroupMatrix j = antidiagonal_j(g.size(), g.prime());
  return g.transpose() * j * g == j;
}

inline bool is_member(const GroupMatrix& g) {
  switch (g.ambient()) {
    case Ambient::GL: return sgn(g.determinant()) != 0;
    case Ambient::SOOdd: return g.size() % 2 == 1 && so_check(g);
    case Ambient::SOEven: return g.size() % 2 == 0 && so_check(g);
  }
  return false;
}

/// g* = J  g^{-t}  J.
inline GroupMatrix star(const GroupMatrix& g) {
  const GroupMatrix j = antidiagonal_j(g.size(), g.prime(), g.ambient());
  return j * g.inverse().transpose() * j;
}

// ---------------------------------------------------------------------------
// Named elements.

inline GroupMatrix gchi_gl(std::size_t n, unsigned long p) {
  if (n < 1) throw BadDimension("GL_n needs n >= 1");
  GroupMatrix g(n, p, Ambient::GL);
  for (std::size_t i = 0; i + 1 < n; ++i) g(i, i + 1) = 1;
  g(n - 1, 0) += p;
  return g;
}

inline GroupMatrix gchi_so(std::size_t ell, unsigned long p) {
  if (ell < 1) throw BadDimension("SO_{2l+1} needs l >= 1");
  const std::size_t n = 2 * ell + 1;
  GroupMatrix g(n, p, Ambient::SOOdd);
  g(0, n - 1) = prime_power(p, -1);
  g(n - 1, 0) = p;
  for (std::size_t i = 1; i + 1 < n; ++i) g(i, i) = -1;
  return g;
}

inline GroupMatrix delta_o(std::size_t ell, unsigned long p) {
  GroupMatrix g = GroupMatrix::identity(2 * ell + 1, p, Ambient::SOOdd).with_ambient(Ambient::SOOdd);
  g(ell, ell) = -1;
  return g;
}

inline GroupMatrix c_hat(std::size_t n, std::size_t ell, unsigned long p) {
  if (n > ell || n < 1) throw BadDimension("c_hat needs 1 <= n <= l");
  GroupMatrix g = GroupMatrix::identity(2 * ell + 1, p, Ambient::SOOdd);
  for (std::size_t i = n; i < ell; ++i) {
    g(i, i) = -1;
    g(2 * ell - i, 2 * ell - i) = -1;
  }
  return g;
}

/// diag(1, -1, ..., -1, 1) in GL_n; the 1 x 1 case is (-1).
inline GroupMatrix b_n(std::size_t n, unsigned long p) {
  if (n < 1) throw BadDimension("b_n needs n >= 1");
  GroupMatrix g = GroupMatrix::identity(n, p, Ambient::GL);
  if (n == 1) {
    g(0, 0) = -1;
    return g;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) g(i, i) = -1;
  return g;
}

inline GroupMatrix omega(std::size_t n, unsigned long p) {
  if (n < 1) throw BadDimension("omega needs n >= 1");
  GroupMatrix g = GroupMatrix::identity(2 * n, p, Ambient::SOEven);
  g(n - 1, n - 1) = 0;
  g(n, n) = 0;
  g(n - 1, n) = 1;
  g(n, n - 1) = 1;
  return g;
}

inline GroupMatrix omega_prime(std::size_t n, std::size_t ell, unsigned long p) {
  if (n > ell || n < 1) throw BadDimension("omega' needs 1 <= n <= l");
  const std::size_t size = 2 * ell + 1;
  GroupMatrix g = GroupMatrix::identity(size, p, Ambient::SOOdd);
  const std::size_t a = n - 1, b = size - n;
  g(a, a) = 0;
  g(b, b) = 0;
  g(a, b) = 1;
  g(b, a) = 1;
  return g;
}

/// w_n: the product of the block swap and the corner swap, both 2n x 2n.
inline GroupMatrix w_n(std::size_t n, unsigned long p) {
  if (n < 1) throw BadDimension("w_n needs n >= 1");
  GroupMatrix swap(2 * n, p, Ambient::SOEven);
  for (std::size_t i = 0; i < n; ++i) {
    swap(i, n + i) = 1;
    swap(n + i, i) = 1;
  }
  GroupMatrix corner = GroupMatrix::identity(2 * n, p, Ambient::SOEven);
  corner(0, 0) = 0;
  corner(2 * n - 1, 2 * n - 1) = 0;
  corner(0, 2 * n - 1) = 1;
  corner(2 * n - 1, 0) = 1;
  return swap * corner;
}

inline GroupMatrix torus_so2(const mpq_class& a, unsigned long p) {
  if (sgn(a) == 0) throw ZeroDivisor("torus parameter must be nonzero");
  return GroupMatrix::diagonal({a, 1 / a}, p, Ambient::SOEven);
}

/// diag(d_1, ..., d_l, 1, d_l^{-1}, ..., d_1^{-1}).
inline GroupMatrix torus_so_odd(const std::vector<mpq_class>& d, unsigned long p) {
  const std::size_t ell = d.size();
  std::vector<mpq_class> diag(2 * ell + 1, 1);
  for (std::size_t i = 0; i < ell; ++i) {
    diag[i] = d[i];
    diag[2 * ell - i] = 1 / d[i];
  }
  return GroupMatrix::diagonal(diag, p, Ambient::SOOdd);
}

/// j_{n,l}: SO_{2n} -> SO_{2l+1}, placing the four n x n blocks in the corners.
inline GroupMatrix embed_j(const GroupMatrix& h, std::size_t ell) {
  if (h.size() % 2 != 0) throw BadDimension("embed_j expects an element of SO_{2n}");
  const std::size_t n = h.size() / 2;
  if (n > ell) throw BadDimension("embed_j needs n <= l");
  const std::size_t size = 2 * ell + 1;
  GroupMatrix g = GroupMatrix::identity(size, h.prime(), Ambient::SOOdd);
  const auto place = [&](std::size_t i) { return i < n ? i : i + (size - 2 * n); };
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) g(place(i), place(j)) = h(i, j);
  return g;
}

/// Unipotent element of X-bar_{(1,l)}: y in column 1 below the corner, y' forced
/// by the orthogonal form (y'_{2l+2-i} = -y_i).
inline GroupMatrix xbar(const std::vector<mpq_class>& y, std::size_t ell, unsigned long p) {
  if (y.size() + 1 != ell) throw BadDimension("xbar needs l - 1 coordinates");
  const std::size_t size = 2 * ell + 1;
  GroupMatrix g = GroupMatrix::identity(size, p, Ambient::SOOdd);
  for (std::size_t i = 1; i < ell; ++i) {
    g(i, 0) = y[i - 1];
    g(size - 1, size - 1 - i) = -y[i - 1];
  }
  return g;
}

/// exp(c (E_ij - E_{j'i'})) in SO_{2l+1}, the one-parameter subgroup of a root.
inline GroupMatrix root_element(std::size_t ell, std::size_t i, std::size_t j, const mpq_class& c, unsigned long p) {
  const std::size_t size = 2 * ell + 1;
  if (i >= size || j >= size || i == j || i + j == size - 1) throw BadDimension("not a root position");
  GroupMatrix x(size, p, Ambient::SOOdd);
  x(i, j) += c;
  x(size - 1 - j, size - 1 - i) -= c;
  GroupMatrix result = GroupMatrix::identity(size, p, Ambient::SOOdd);
  GroupMatrix power = x;
  mpq_class factorial = 1;
  for (int k = 1; k <= static_cast<int>(size); ++k) {
    bool zero = true;
    for (const auto& v : power.data())
      if (sgn(v) != 0) zero = false;
    if (zero) break;
    factorial *= k;
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) result(a, b) += power(a, b) / factorial;
    power = power * x;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Iwahori filtration.

enum class IwahoriLevel { I, IPlus, IPlusPlus };

/// Entry-valuation predicates for the standard Iwahori I of SO_{2l+1} or GL_n
/// (integral, upper triangular mod p), its pro-unipotent radical I+, and (SO only)
/// I++ where additionally the simple affine root entries vanish to one more step.
inline bool iwahori_test(const GroupMatrix& g, IwahoriLevel level) {
  const std::size_t n = g.size();
  const unsigned long p = g.prime();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int v = valuation(g(i, j), p);
      if (v < 0) return false;
      if (i > j && v < 1) return false;
      if (i == j) {
        if (v != 0) return false;
        if (level != IwahoriLevel::I && !in_subset(g(i, i), p, Subset::OnePlusP)) return false;
      }
    }
  if (level != IwahoriLevel::IPlusPlus) return true;
  if (n % 2 == 0) throw BadDimension("I++ is defined here for SO_{2l+1} only");
  const std::size_t ell = (n - 1) / 2;
  for (std::size_t i = 0; i < ell; ++i) {
    if (valuation(g(i, i + 1), p) < 1) return false;
    if (valuation(g(n - 2 - i, n - 1 - i), p) < 1) return false;
  }
  return valuation(g(n - 2, 0), p) >= 2 && valuation(g(n - 1, 1), p) >= 2;
}

// ---------------------------------------------------------------------------
// Decompositions.

/// g = U * D * L with U upper unipotent, D diagonal, L lower unipotent.
struct UdlFactors {
  GroupMatrix u;
  std::vector<mpq_class> d;
  GroupMatrix lower;  ///< D * L, the lower-triangular residual
};

/// Exists iff every trailing principal minor is nonzero; unique when it exists.
/// Columns are cleared right to left by adding multiples of lower rows.
inline std::optional<UdlFactors> udl_decompose(const GroupMatrix& g) {
  const std::size_t n = g.size();
  GroupMatrix a = g;
  GroupMatrix u = GroupMatrix::identity(n, g.prime(), g.ambient());
  mpq_class f, t;
  for (std::size_t c = n; c-- > 0;) {
    const mpq_class& pivot = a(c, c);
    if (sgn(pivot) == 0) return std::nullopt;
    for (std::size_t r = 0; r < c; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      f = a(r, c) / pivot;
      u(r, c) = f;
      for (std::size_t k = 0; k <= c; ++k) {
        if (sgn(a(c, k)) == 0) continue;
        t = f * a(c, k);
        a(r, k) -= t;
      }
    }
  }
  // a = R g with R the accumulated row operations; U = R^{-1} has the multipliers
  // in the same positions because each column is cleared with rows below it only.
  std::vector<mpq_class> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return UdlFactors{std::move(u), std::move(d), std::move(a)};
}

/// Witness for g = u * gchi^i * k with u upper unipotent and k in I+.
struct CosetWitness {
  GroupMatrix u;
  int i = 0;
  GroupMatrix k;
};

/// Decides membership of g in U <gchi> I+ inside SO_{2l+1}.
inline std::optional<CosetWitness> coset_decompose(const GroupMatrix& g) {
  if (g.size() % 2 == 0) throw BadDimension("coset_decompose expects SO_{2l+1}");
  const std::size_t ell = (g.size() - 1) / 2;
  const GroupMatrix gchi = gchi_so(ell, g.prime());
  for (int i = 0; i < 2; ++i) {
    const GroupMatrix target = i == 0 ? g : g * gchi;
    auto f = udl_decompose(target);
    if (!f) continue;
    if (!iwahori_test(f->lower, IwahoriLevel::IPlus)) continue;
    GroupMatrix k = i == 0 ? std::move(f->lower) : gchi * f->lower * gchi;
    return CosetWitness{std::move(f->u).with_ambient(Ambient::SOOdd), i, std::move(k).with_ambient(Ambient::SOOdd)};
  }
  return std::nullopt;
}

/// Witness for g = u * gchi^j * z * k in GL_n with z central and k in I+.
struct GlCosetWitness {
  GroupMatrix u;
  int j = 0;
  mpq_class z;
  GroupMatrix k;
};

inline int floor_mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

/// Decides membership of g in U <gchi> Z I+ inside GL_n.
inline std::optional<GlCosetWitness> gl_coset_decompose(const GroupMatrix& g) {
  const std::size_t n = g.size();
  const unsigned long p = g.prime();
  const mpq_class det = g.determinant();
  if (sgn(det) == 0) throw SingularMatrix("element of GL_n expected");
  const int j = floor_mod(valuation(det, p), static_cast<int>(n));
  const GroupMatrix gchi = gchi_gl(n, p);
  const GroupMatrix gchi_inv = gchi.inverse();
  GroupMatrix power = GroupMatrix::identity(n, p, Ambient::GL);
  GroupMatrix power_inv = power;
  for (int t = 0; t < j; ++t) {
    power = power * gchi;
    power_inv = power_inv * gchi_inv;
  }
  auto f = udl_decompose(g * power_inv);
  if (!f) return std::nullopt;
  const mpq_class z = f->d[0];
  const GroupMatrix k_inner = f->lower.scaled(1 / z);
  if (!iwahori_test(k_inner, IwahoriLevel::IPlus)) return std::nullopt;
  GroupMatrix k = power_inv * k_inner * power;
  return GlCosetWitness{std::move(f->u), j, z, std::move(k)};
}

}  // namespace ssgamma
