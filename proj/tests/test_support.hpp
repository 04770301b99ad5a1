#pragma once

#include <random>
#include <vector>

#include "ssgamma/ssgamma.hpp"

namespace testing_support {

using namespace ssgamma;

inline mpq_class random_int(std::mt19937& rng, long lo, long hi) {
  return mpq_class(std::uniform_int_distribution<long>(lo, hi)(rng));
}

/// Positions (i, j) of roots of SO_{2l+1}, zero based.
inline std::vector<std::pair<std::size_t, std::size_t>> so_roots(std::size_t ell, bool positive) {
  const std::size_t n = 2 * ell + 1;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || i + j == n - 1) continue;
      if ((i < j) != positive) continue;
      // keep one of each pair (i, j) ~ (n-1-j, n-1-i)
      if (i + j > n - 1) continue;
      out.emplace_back(i, j);
    }
  return out;
}

/// Random integral upper unipotent element of SO_{2l+1}.
inline GroupMatrix random_unipotent(std::size_t ell, unsigned long p, std::mt19937& rng, int factors = 6) {
  auto roots = so_roots(ell, true);
  GroupMatrix g = GroupMatrix::identity(2 * ell + 1, p, Ambient::SOOdd);
  for (int f = 0; f < factors; ++f) {
    const auto [i, j] = roots[rng() % roots.size()];
    g = g * root_element(ell, i, j, random_int(rng, -2 * static_cast<long>(p), 2 * static_cast<long>(p)), p);
  }
  return g;
}

/// Random element of I+ built from T_1, integral positive root groups and p times negative ones.
inline GroupMatrix random_iplus(std::size_t ell, unsigned long p, std::mt19937& rng, int factors = 8) {
  auto pos = so_roots(ell, true);
  auto neg = so_roots(ell, false);
  const long pl = static_cast<long>(p);
  std::vector<mpq_class> d(ell);
  for (auto& x : d) x = 1 + pl * random_int(rng, -2, 2);
  GroupMatrix g = torus_so_odd(d, p);
  for (int f = 0; f < factors; ++f) {
    if (rng() % 2 == 0) {
      const auto [i, j] = pos[rng() % pos.size()];
      g = g * root_element(ell, i, j, random_int(rng, -pl, pl), p);
    } else {
      const auto [i, j] = neg[rng() % neg.size()];
      g = g * root_element(ell, i, j, pl * random_int(rng, -pl, pl), p);
    }
  }
  return g;
}

}  // namespace testing_support
