#include <gtest/gtest.h>

#include <random>

#include "ssgamma/serialize.hpp"

using namespace ssgamma;

TEST(Serialize, ScalarRoundTrip) {
  std::mt19937 rng(1);
  for (int it = 0; it < 50; ++it) {
    ExactScalar s;
    for (int t = 0; t < 3; ++t)
      s += ExactScalar::monomial(
          CyclotomicNumber::root_of_unity(1 + rng() % 12, rng() % 12).scaled(make_rational(rng() % 7, 1 + rng() % 5)),
          static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 3));
    if (it % 2) s = s.with_q(5);
    const Json j = to_json(s);
    const ExactScalar back = scalar_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, s);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
}

TEST(Serialize, ScalarSchema) {
  const Json j = to_json(-q_half_minus_s());
  ASSERT_EQ(j.at("terms").size(), 1u);
  const Json& t = j.at("terms")[0];
  EXPECT_EQ(t.at("order"), 1);
  EXPECT_EQ(t.at("coeffs"), Json::array({"-1"}));
  EXPECT_EQ(t.at("q_half"), 1);
  EXPECT_EQ(t.at("s_power"), 1);
  EXPECT_EQ(j.at("text"), "-q^(1/2-s)");
}

TEST(Serialize, GammaResultRoundTrip) {
  IntegralConfig c;
  c.prime = 5;
  c.ell = 2;
  c.zeta = -1;
  c.tau_j = 3;
  c.tau_at_uniformizer = ExactScalar::root_of_unity(4, 1);
  const GammaResult r = gamma_so(c);
  const Json j = to_json(r);
  const GammaResult back = gamma_result_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.computed, r.computed);
  EXPECT_EQ(back.predicted, r.predicted);
  EXPECT_EQ(back.matches, r.matches);
  EXPECT_EQ(back.metadata, r.metadata);
  EXPECT_EQ(j.at("metadata").at("measure"), kMeasureConvention);
}

TEST(Serialize, MatrixAndParam) {
  const Json m = to_json(gchi_so(1, 3));
  EXPECT_EQ(m.at("rows")[0][2], "1/3");
  EXPECT_EQ(m.at("ambient"), ambient_name(Ambient::SOOdd));
  const Json p = to_json(param_summary(3, 2, 1));
  EXPECT_EQ(p.at("depth"), "1/4");
  EXPECT_EQ(p.at("xi_at_uniformizer").at("zeta"), 1);
  EXPECT_EQ(p.at("xi_at_uniformizer").at("lambda_token_inverse"), true);
  EXPECT_EQ(p.at("depth_check").at("single_block_unique"), true);
}

TEST(Serialize, BadInput) {
  EXPECT_THROW(scalar_from_json(Json::parse(R"({"terms":[{"order":1,"coeffs":["x"],"q_half":0,"s_power":0}]})")),
               ParseError);
  EXPECT_THROW(scalar_from_json(Json::parse(R"({"nope":1})")), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}
