#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ssgamma;
using namespace testing_support;

TEST(SoCheck, Examples) {
  for (std::size_t n : {1u, 3u, 4u, 7u}) EXPECT_TRUE(so_check(GroupMatrix::identity(n, 3, Ambient::SOOdd)));
  EXPECT_TRUE(so_check(GroupMatrix::diagonal({2, 1, make_rational(1, 2)}, 3, Ambient::SOOdd)));
  EXPECT_TRUE(so_check(gchi_so(1, 3)));
  EXPECT_FALSE(so_check(GroupMatrix::diagonal({2, 1, 2}, 3, Ambient::SOOdd)));
  EXPECT_THROW(star(GroupMatrix(3, 3, Ambient::SOOdd)), SingularMatrix);
}

TEST(SoCheck, StarIsIdentityOnSo) {
  std::mt19937 rng(1);
  for (int it = 0; it < 10; ++it) {
    const GroupMatrix g = random_iplus(2, 5, rng) * gchi_so(2, 5);
    EXPECT_EQ(star(g), g);
  }
}

TEST(SoCheck, GroupClosure) {
  std::mt19937 rng(2);
  for (std::size_t ell : {1u, 2u, 3u})
    for (int it = 0; it < 10; ++it) {
      const GroupMatrix a = random_iplus(ell, 3, rng) * gchi_so(ell, 3) * random_unipotent(ell, 3, rng);
      const GroupMatrix b = embed_j(torus_so2(make_rational(2, 3), 3), ell) * delta_o(ell, 3) * omega_prime(1, ell, 3);
      EXPECT_TRUE(so_check(a * b));
      EXPECT_TRUE(so_check(a.inverse()));
      EXPECT_TRUE(so_check(b.inverse() * a));
    }
}

TEST(NamedElements, Examples) {
  EXPECT_EQ(delta_o(1, 3), GroupMatrix::diagonal({1, -1, 1}, 3, Ambient::SOOdd));
  EXPECT_EQ(c_hat(1, 2, 3), GroupMatrix::diagonal({1, -1, 1, -1, 1}, 3, Ambient::SOOdd));
  for (std::size_t ell = 1; ell <= 4; ++ell) {
    const GroupMatrix g = gchi_so(ell, 5);
    EXPECT_TRUE((g * g).is_identity());
    EXPECT_TRUE(so_check(g));
    EXPECT_EQ(delta_o(ell, 5).determinant(), -1);  // delta_o lies in O, not SO
    EXPECT_TRUE(so_check(c_hat(1, ell, 5)));
    EXPECT_TRUE(so_check(omega_prime(1, ell, 5) * delta_o(ell, 5)));
  }
  EXPECT_FALSE(so_check(omega(1, 3)));
  EXPECT_TRUE(so_check(w_n(3, 3)));  // n odd
  EXPECT_TRUE(w_n(1, 3).is_identity());  // both swaps coincide when n = 1
  EXPECT_EQ(b_n(1, 3)(0, 0), -1);
  EXPECT_EQ(star(b_n(1, 3))(0, 0), -1);
  EXPECT_THROW(c_hat(3, 2, 3), BadDimension);
  EXPECT_THROW(omega_prime(0, 2, 3), BadDimension);
}

TEST(NamedElements, GchiGl) {
  const GroupMatrix g = gchi_gl(3, 5);
  EXPECT_EQ(g.determinant(), 5);
  GroupMatrix cube = g * g * g;
  EXPECT_EQ(cube, GroupMatrix::identity(3, 5, Ambient::GL).scaled(5));
}

TEST(EmbedJ, Examples) {
  EXPECT_TRUE(embed_j(GroupMatrix::identity(2, 3, Ambient::SOEven), 2).is_identity());
  const mpq_class a = make_rational(2, 7);
  EXPECT_EQ(embed_j(torus_so2(a, 3), 1), GroupMatrix::diagonal({a, 1, 1 / a}, 3, Ambient::SOOdd));
  EXPECT_EQ(embed_j(torus_so2(3, 3), 2), GroupMatrix::diagonal({3, 1, 1, 1, make_rational(1, 3)}, 3, Ambient::SOOdd));
  EXPECT_TRUE(so_check(embed_j(w_n(1, 3), 3)));
  EXPECT_THROW(embed_j(GroupMatrix::identity(6, 3, Ambient::SOEven), 2), BadDimension);
}

TEST(Xbar, FormForcedEntries) {
  EXPECT_TRUE(xbar({0}, 2, 3).is_identity());
  const GroupMatrix x = xbar({7}, 2, 3);
  EXPECT_TRUE(so_check(x));
  EXPECT_EQ(x(1, 0), 7);
  EXPECT_EQ(x(4, 3), -7);
  std::mt19937 rng(3);
  for (std::size_t ell = 1; ell <= 4; ++ell)
    for (int it = 0; it < 20; ++it) {
      std::vector<mpq_class> y(ell - 1);
      for (auto& c : y) c = make_rational(std::uniform_int_distribution<long>(-50, 50)(rng), 1 + rng() % 9);
      EXPECT_TRUE(so_check(xbar(y, ell, 3)));
    }
}

TEST(Iwahori, Examples) {
  const GroupMatrix id = GroupMatrix::identity(5, 3, Ambient::SOOdd);
  for (auto lvl : {IwahoriLevel::I, IwahoriLevel::IPlus, IwahoriLevel::IPlusPlus}) EXPECT_TRUE(iwahori_test(id, lvl));
  EXPECT_FALSE(iwahori_test(gchi_so(2, 3), IwahoriLevel::I));
  const GroupMatrix e12 = root_element(2, 0, 1, 1, 3);
  EXPECT_TRUE(so_check(e12));
  EXPECT_EQ(e12(3, 4), -1);
  EXPECT_TRUE(iwahori_test(e12, IwahoriLevel::IPlus));
  EXPECT_FALSE(iwahori_test(e12, IwahoriLevel::IPlusPlus));
  EXPECT_TRUE(iwahori_test(root_element(2, 0, 1, 3, 3), IwahoriLevel::IPlusPlus));
  EXPECT_FALSE(iwahori_test(GroupMatrix::diagonal({2, 1, make_rational(1, 2)}, 3, Ambient::SOOdd), IwahoriLevel::IPlus));
  EXPECT_TRUE(iwahori_test(GroupMatrix::diagonal({2, 1, make_rational(1, 2)}, 3, Ambient::SOOdd), IwahoriLevel::I));
}

TEST(Iwahori, GchiNormalizesIPlus) {
  std::mt19937 rng(4);
  for (unsigned long p : {3ul, 5ul})
    for (std::size_t ell : {1u, 2u, 3u})
      for (int it = 0; it < 50; ++it) {
        const GroupMatrix k = random_iplus(ell, p, rng);
        ASSERT_TRUE(iwahori_test(k, IwahoriLevel::IPlus));
        const GroupMatrix g = gchi_so(ell, p);
        EXPECT_TRUE(iwahori_test(g * k * g.inverse(), IwahoriLevel::IPlus));
      }
}

TEST(CosetDecompose, Gchi) {
  for (std::size_t ell : {1u, 2u, 3u}) {
    auto w = coset_decompose(gchi_so(ell, 3));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->i, 1);
    EXPECT_TRUE(w->u.is_identity());
    EXPECT_TRUE(w->k.is_identity());
  }
}

TEST(CosetDecompose, RoundTripOnRandomProducts) {
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    const std::size_t ell = 1 + it % 3;
    const unsigned long p = (it % 2) ? 3 : 5;
    const GroupMatrix u = random_unipotent(ell, p, rng);
    const GroupMatrix k = random_iplus(ell, p, rng);
    const int i = static_cast<int>(rng() % 2);
    const GroupMatrix g = i ? u * gchi_so(ell, p) * k : u * k;
    auto w = coset_decompose(g);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->i, i);
    EXPECT_EQ(w->i ? w->u * gchi_so(ell, p) * w->k : w->u * w->k, g);
    EXPECT_TRUE(iwahori_test(w->k, IwahoriLevel::IPlus));
    EXPECT_TRUE(so_check(w->u));
  }
}

TEST(CosetDecompose, PhiStarDisplay) {
  // a = v / p with v in 1 + p and y in p: the product equals gchi * k with k in I+.
  for (std::size_t ell : {1u, 2u, 3u})
    for (long v : {1L, 4L, -2L}) {
      const unsigned long p = 3;
      const mpq_class a = make_rational(v, 3);
      std::vector<mpq_class> y(ell - 1);
      for (std::size_t t = 0; t < y.size(); ++t) y[t] = 3 * static_cast<long>(t + 1);
      const GroupMatrix g = c_hat(1, ell, p) * xbar(y, ell, p) * embed_j(torus_so2(a, p), ell) * delta_o(ell, p) *
                            omega_prime(1, ell, p);
      const std::size_t n = 2 * ell + 1;
      EXPECT_EQ(g(0, n - 1), a);
      EXPECT_EQ(g(n - 1, 0), 1 / a);
      auto w = coset_decompose(g);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(w->i, 1);
      EXPECT_TRUE(w->u.is_identity());
      EXPECT_EQ(w->k(0, 0), 1 / mpq_class(v));
      EXPECT_EQ(w->k(n - 1, n - 1), mpq_class(v));
      for (std::size_t t = 1; t < ell; ++t) EXPECT_EQ(w->k(t, n - 1), a * y[t - 1]);
    }
}

TEST(CosetDecompose, OutsideSupport) {
  // torus parameter a = 2 is a unit outside 1 + p
  EXPECT_FALSE(coset_decompose(embed_j(torus_so2(2, 3), 2)).has_value());
  EXPECT_THROW(coset_decompose(GroupMatrix::identity(4, 3, Ambient::SOEven)), BadDimension);
}

TEST(GlCosetDecompose, RoundTrip) {
  std::mt19937 rng(6);
  for (std::size_t n : {2u, 3u, 4u})
    for (int it = 0; it < 20; ++it) {
      const unsigned long p = 3;
      GroupMatrix u = GroupMatrix::identity(n, p, Ambient::GL);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = random_int(rng, -5, 5);
      GroupMatrix k = GroupMatrix::identity(n, p, Ambient::GL);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i < j) k(i, j) = random_int(rng, -5, 5);
          else if (i > j) k(i, j) = 3 * random_int(rng, -5, 5);
          else k(i, j) = 1 + 3 * random_int(rng, -2, 2);
        }
      const int j = static_cast<int>(rng() % n);
      GroupMatrix power = GroupMatrix::identity(n, p, Ambient::GL);
      for (int t = 0; t < j; ++t) power = power * gchi_gl(n, p);
      const mpq_class z = prime_power(p, static_cast<int>(rng() % 3) - 1);
      const GroupMatrix g = u * power * k.scaled(z);
      auto w = gl_coset_decompose(g);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(w->j, j);
      GroupMatrix wp = GroupMatrix::identity(n, p, Ambient::GL);
      for (int t = 0; t < w->j; ++t) wp = wp * gchi_gl(n, p);
      EXPECT_EQ(w->u * wp * w->k.scaled(w->z), g);
      EXPECT_TRUE(iwahori_test(w->k, IwahoriLevel::IPlus));
    }
}

TEST(Udl, SingularPivotGivesNothing) {
  const GroupMatrix g = GroupMatrix::from_rows({{1, 1}, {1, 0}}, 3, Ambient::GL);
  EXPECT_FALSE(udl_decompose(g).has_value());
}
