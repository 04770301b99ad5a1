#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace ssgamma;
using namespace testing_support;

namespace {

CyclotomicNumber root(unsigned m, long long k) { return CyclotomicNumber::root_of_unity(m, k); }

}  // namespace

TEST(Psi, Examples) {
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    EXPECT_EQ(psi_eval(PAdicNumber(static_cast<long>(p), p)), CyclotomicNumber::rational(1));
    EXPECT_EQ(psi_eval(PAdicNumber(1, p)), root(p, 1));
    EXPECT_EQ(psi_eval(PAdicNumber(make_rational(1, p), p)), root(p * p, 1));
  }
  EXPECT_THROW(AdditiveCharacter(3).root(make_rational(1, 9)), OrderOverflow);
  EXPECT_NO_THROW(AdditiveCharacter(3, 27).root(make_rational(1, 9)));
}

TEST(Psi, AdditiveAndTrivialOnP) {
  std::mt19937 rng(1);
  for (unsigned long p : {3ul, 5ul, 7ul})
    for (int it = 0; it < 100; ++it) {
      const mpq_class x = random_int(rng, -200, 200) / prime_power(p, static_cast<int>(rng() % 2));
      const mpq_class y = random_int(rng, -200, 200) / prime_power(p, static_cast<int>(rng() % 2));
      const AdditiveCharacter psi(p);
      EXPECT_EQ(psi(PAdicNumber(x + y, p)), psi(PAdicNumber(x, p)) * psi(PAdicNumber(y, p)));
      EXPECT_EQ(psi(PAdicNumber(x * p * p, p)), CyclotomicNumber::rational(1));
    }
}

TEST(Tame, Examples) {
  const TameCharacter trivial(5, 0);
  for (long x : {1L, 2L, 7L, 25L, -3L}) EXPECT_EQ(trivial(PAdicNumber(x, 5)), ExactScalar::one());
  const TameCharacter quad(3, 1);
  EXPECT_EQ(primitive_root(3), 2u);
  EXPECT_EQ(quad(PAdicNumber(-1, 3)), ExactScalar::rational(-1));
  for (unsigned long p : {3ul, 5ul, 7ul})
    for (unsigned long j = 0; j + 1 < p; ++j) {
      const TameCharacter tau(p, j, ExactScalar::root_of_unity(4, 1));
      for (long m = 0; m < 20; ++m) EXPECT_EQ(tau(PAdicNumber(1 + static_cast<long>(p) * m, p)), ExactScalar::one());
      EXPECT_EQ(tau(PAdicNumber(static_cast<long>(p), p)), ExactScalar::root_of_unity(4, 1));
    }
  EXPECT_THROW(TameCharacter(5, 4), InvalidArgument);
  EXPECT_THROW(quad(PAdicNumber(0, 3)), ZeroDivisor);
}

TEST(Tame, Multiplicative) {
  std::mt19937 rng(2);
  for (unsigned long p : {5ul, 7ul})
    for (unsigned long j = 0; j + 1 < p; ++j) {
      const TameCharacter tau(p, j, ExactScalar::rational(-1));
      for (int it = 0; it < 30; ++it) {
        mpq_class x = random_int(rng, 1, 300), y = random_int(rng, 1, 300);
        if (rng() % 2) x /= p;
        EXPECT_EQ(tau(PAdicNumber(x * y, p)), tau(PAdicNumber(x, p)) * tau(PAdicNumber(y, p)));
      }
    }
}

TEST(AffineChi, Examples) {
  const std::vector<mpq_class> ones = unit_parameters(3);
  EXPECT_EQ(affine_chi(GroupMatrix::identity(5, 3, Ambient::SOOdd), ones), CyclotomicNumber::rational(1));
  EXPECT_EQ(affine_chi(root_element(2, 0, 1, 3, 3) * root_element(2, 3, 0, 9, 3), ones), CyclotomicNumber::rational(1));
  const std::vector<mpq_class> t = {4, 7, 10};
  for (long c = -4; c <= 4; ++c)
    EXPECT_EQ(affine_chi(root_element(2, 0, 1, c, 3), t), psi_eval(PAdicNumber(4 * c, 3)));
  // (2l, 1) entry divided by w
  EXPECT_EQ(affine_chi(root_element(2, 3, 0, 3, 3), ones), root(3, 1));
  EXPECT_THROW(affine_chi(gchi_so(2, 3), ones), NotInIPlus);
}

TEST(ChiZeta, Examples) {
  const GroupMatrix id = GroupMatrix::identity(5, 5, Ambient::SOOdd);
  EXPECT_EQ(chi_zeta(0, id, -1), CyclotomicNumber::rational(1));
  EXPECT_EQ(chi_zeta(1, id, -1), CyclotomicNumber::rational(-1));
  EXPECT_EQ(chi_zeta(1, root_element(2, 1, 2, 5, 5), -1), CyclotomicNumber::rational(-1));
}

TEST(AffineChi, ConjugationInvariantUnderGchi) {
  std::mt19937 rng(3);
  for (unsigned long p : {3ul, 5ul, 7ul})
    for (std::size_t ell : {1u, 2u, 3u})
      for (int it = 0; it < 50; ++it) {
        const GroupMatrix h = random_iplus(ell, p, rng);
        const GroupMatrix g = gchi_so(ell, p);
        const auto t = unit_parameters(ell + 1);
        EXPECT_EQ(affine_chi(g * h * g.inverse(), t), affine_chi(h, t));
      }
}

TEST(AffineChi, Multiplicative) {
  std::mt19937 rng(4);
  for (unsigned long p : {3ul, 5ul})
    for (std::size_t ell : {1u, 2u, 3u})
      for (int it = 0; it < 30; ++it) {
        const GroupMatrix a = random_iplus(ell, p, rng), b = random_iplus(ell, p, rng);
        const std::vector<mpq_class> t = {2, 1, 4, 1};
        const std::vector<mpq_class> tt(t.begin(), t.begin() + static_cast<long>(ell) + 1);
        EXPECT_EQ(affine_chi(a * b, tt), affine_chi(a, tt) * affine_chi(b, tt));
      }
}

TEST(AffineChi, OrbitNormalization) {
  // d = diag(d_1..d_l, 1, ...) with t_i d_i / d_{i+1} = 1 and t_l d_l = 1 carries chi_t to
  // chi_{(1,..,1,t')}, t' = t_1 t_2^2 ... t_l^2 t_{l+1}.
  std::mt19937 rng(5);
  for (unsigned long p : {5ul, 7ul})
    for (std::size_t ell : {1u, 2u, 3u})
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<mpq_class> t(ell + 1);
        for (auto& x : t) x = 1 + rng() % (p - 1);
        std::vector<mpq_class> d(ell);
        d[ell - 1] = 1 / t[ell - 1];
        for (std::size_t i = ell - 1; i-- > 0;) d[i] = d[i + 1] / t[i];
        mpq_class t_norm = t[0] * t[ell];
        for (std::size_t i = 1; i < ell; ++i) t_norm *= t[i] * t[i];
        std::vector<mpq_class> normalized(ell + 1, 1);
        normalized[ell] = t_norm;
        const GroupMatrix dm = torus_so_odd(d, p);
        for (int it = 0; it < 20; ++it) {
          const GroupMatrix h = random_iplus(ell, p, rng);
          EXPECT_EQ(affine_chi(dm * h * dm.inverse(), t), affine_chi(h, normalized));
        }
      }
}

TEST(Whittaker, SoExamples) {
  for (int zeta : {1, -1}) {
    const WhittakerSpec spec = WhittakerSpec::so(2, 3, zeta);
    EXPECT_EQ(whittaker_eval(spec, GroupMatrix::identity(5, 3, Ambient::SOOdd)), ExactScalar::one());
    EXPECT_EQ(whittaker_eval(spec, gchi_so(2, 3)), ExactScalar::rational(zeta));
    EXPECT_TRUE(whittaker_eval(spec, xbar({0}, 2, 3) * embed_j(torus_so2(2, 3), 2)).is_zero());
  }
  EXPECT_THROW(WhittakerSpec::so(1, 3, 2), BadRoot);
}

TEST(Whittaker, LeftEquivariance) {
  std::mt19937 rng(6);
  for (unsigned long p : {3ul, 5ul})
    for (std::size_t ell : {1u, 2u, 3u}) {
      const WhittakerSpec spec = WhittakerSpec::so(ell, p, -1);
      for (int it = 0; it < 15; ++it) {
        const GroupMatrix u = random_unipotent(ell, p, rng);
        GroupMatrix g = random_unipotent(ell, p, rng) * gchi_so(ell, p) * random_iplus(ell, p, rng);
        if (it % 3 == 0) g = g * embed_j(torus_so2(2, p), ell);  // mostly off the support
        const ExactScalar psi_u = ExactScalar::monomial(CyclotomicNumber::from_root(whittaker_character_root(u, ell)));
        EXPECT_EQ(whittaker_eval(spec, u * g), psi_u * whittaker_eval(spec, g));
      }
    }
}

TEST(Whittaker, WitnessValueMatchesConstruction) {
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    const std::size_t ell = 1 + it % 3;
    const unsigned long p = it % 2 ? 3 : 7;
    const int zeta = it % 4 < 2 ? 1 : -1;
    const GroupMatrix u = random_unipotent(ell, p, rng);
    const GroupMatrix k = random_iplus(ell, p, rng);
    const int i = static_cast<int>(rng() % 2);
    const GroupMatrix g = i ? u * gchi_so(ell, p) * k : u * k;
    const CyclotomicNumber expected =
        CyclotomicNumber::from_root(whittaker_character_root(u, ell)) * chi_zeta(i, k, zeta);
    EXPECT_EQ(whittaker_eval(WhittakerSpec::so(ell, p, zeta), g), ExactScalar::monomial(expected));
  }
}

TEST(Whittaker, GlExamples) {
  for (std::size_t n : {2u, 3u}) {
    const RootOfUnity z = RootOfUnity::make(n, 1);
    const WhittakerSpec spec = WhittakerSpec::gl(n, 5, z);
    EXPECT_EQ(whittaker_eval(spec, GroupMatrix::identity(n, 5, Ambient::GL)), ExactScalar::one());
    EXPECT_EQ(whittaker_eval(spec, gchi_gl(n, 5)), ExactScalar::monomial(CyclotomicNumber::from_root(z)));
    // central elements act trivially
    EXPECT_EQ(whittaker_eval(spec, GroupMatrix::identity(n, 5, Ambient::GL).scaled(5)), ExactScalar::one());
  }
  EXPECT_THROW(WhittakerSpec::gl(3, 5, RootOfUnity::make(2, 1)), BadRoot);
}
