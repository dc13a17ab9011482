#include "support.hpp"

#include <gtest/gtest.h>

using namespace qt;

namespace {

bool has_problem(const SequenceError& e, const std::string& needle) {
  for (const auto& p : e.problems()) {
    if (p.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(MakeSes, SplitIsValid) {
  auto s = gen_star<Q>(3);
  EXPECT_NO_THROW(split_sequence(s.u, s.v));
}

TEST(MakeSes, ReportsPerVertexProblems) {
  auto s = gen_star<Q>(3);
  auto ds = direct_sum(s.u, s.v);
  try {
    make_ses(MorQ::zero(s.u, ds.sum), ds.project_second);
    FAIL();
  } catch (const SequenceError& e) {
    EXPECT_TRUE(has_problem(e, "not injective at vertex v0"));
  }
  try {
    make_ses(ds.inject_first, MorQ::zero(ds.sum, s.v));
    FAIL();
  } catch (const SequenceError& e) {
    EXPECT_TRUE(has_problem(e, "not surjective"));
  }
  // one vertex, no arrows: k -> k^2 -> k with g o f != 0
  auto point = std::make_shared<const Quiver>(std::vector<std::string>{"x"}, std::vector<Arrow>{});
  auto k1 = share(RepQ(point, {1}, {}));
  auto k2 = share(RepQ(point, {2}, {}));
  try {
    make_ses(MorQ(k1, k2, {mat({{1}, {0}})}), MorQ(k2, k1, {mat({{1, 0}})}));
    FAIL();
  } catch (const SequenceError& e) {
    EXPECT_TRUE(has_problem(e, "not exact at vertex x"));
  }
}

TEST(MakeSes, StarSequence) {
  auto s = gen_star<Q>(3);
  auto sigma = star_sequence(s, 1, 2);
  EXPECT_TRUE(is_isomorphic(cokernel_rep(sigma.f()).rep, s.v));
  // (1,1) is one of the arm points, so the cokernel is not V
  std::vector<Matrix<Q>> fc{mat({{1}, {1}}), Matrix<Q>(1, 0), Matrix<Q>(1, 0), Matrix<Q>(1, 0)};
  EXPECT_FALSE(is_isomorphic(cokernel_rep(MorQ(s.u, s.m, fc)).rep, s.v));
}

TEST(Ext, StarDimension) {
  auto s = gen_star<Q>(3);
  auto space = ext_space(s.v, s.u);
  EXPECT_EQ(space->cocycle_dim(), 3u);
  EXPECT_EQ(space->coboundary_rank(), 1u);
  EXPECT_EQ(space->dim(), 2u);
  // Euler identity as the oracle
  EXPECT_EQ(static_cast<long long>(hom_dim(*s.v, *s.u)) - static_cast<long long>(space->dim()),
            euler_form(*s.quiver, s.v->dims(), s.u->dims()));
}

TEST(Ext, KroneckerExamples) {
  auto q = kronecker();
  auto s1 = share(RepQ::simple(q, 0));
  EXPECT_EQ(ext1_dim(*s1, *s1), 0u);
  auto r = kron_r(q, 1, 0);
  EXPECT_EQ(ext1_dim(*r, *r), 1u);
}

TEST(Ext, RoundTripOnBasis) {
  auto s = gen_star<Q>(4);
  auto basis = ext1_basis(s.v, s.u);
  ASSERT_EQ(basis.dim, 3u);
  for (const auto& e : basis.classes) {
    auto sigma = ses_from_ext(e);
    EXPECT_EQ(ext_from_ses(sigma, basis.space), e);
    EXPECT_FALSE(is_split(sigma));
  }
  auto zero = ExtClass<Q>::zero(basis.space);
  auto split = ses_from_ext(zero);
  EXPECT_TRUE(is_split(split));
  EXPECT_TRUE(is_isomorphic(split.middle_ptr(), s.n));
}

TEST(Ext, StarClassRebuildsM) {
  auto s = gen_star<Q>(3);
  auto sigma = star_sequence(s, 1, 2);
  auto e = ext_from_ses(sigma);
  EXPECT_FALSE(e.is_zero());
  EXPECT_TRUE(is_isomorphic(ses_from_ext(e).middle_ptr(), s.m));
  EXPECT_TRUE(ext_from_ses(split_sequence(s.u, s.v)).is_zero());
}

TEST(Delta, StarValues) {
  auto s = gen_star<Q>(3);
  auto sigma = star_sequence(s, 1, 2);
  EXPECT_EQ(hom_dim(*s.v, *s.m), 0u);
  EXPECT_EQ(delta(sigma, *s.m), 1u);
  EXPECT_EQ(delta_prime(sigma, *s.v), 1u);
  EXPECT_FALSE(is_split(sigma));
  auto split = split_sequence(s.u, s.v);
  EXPECT_TRUE(is_split(split));
  for (const auto& x : profile_set(sigma)) {
    EXPECT_EQ(delta(split, *x), 0u);
    EXPECT_EQ(delta_prime(split, *x), 0u);
  }
}

TEST(Pushout, Examples) {
  auto s = gen_star<Q>(3);
  auto sigma = star_sequence(s, 1, 2);
  auto same = pushout(sigma, MorQ::identity(sigma.left_ptr()));
  EXPECT_TRUE(is_isomorphic(same.pushed.middle_ptr(), sigma.middle_ptr()));
  EXPECT_EQ(ext_from_ses(same.pushed), ext_from_ses(sigma));

  auto along_f = pushout(sigma, sigma.f());
  EXPECT_TRUE(is_split(along_f.pushed));

  auto g1 = choose_g(sigma);
  auto second = pushout(sigma, g1);
  EXPECT_FALSE(is_split(second.pushed));
  EXPECT_NO_THROW(make_ses(second.tau.f(), second.tau.g()));
}

TEST(Pushout, MatchesExtPushforward) {
  auto s = gen_star<Q>(4);
  auto sigma = star_sequence(s, 2, 3);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = random_morphism(rng, s.u, s.m);
    auto po = pushout(sigma, h);
    auto target = ext_space(s.v, s.m);
    EXPECT_EQ(ext_from_ses(po.pushed, target), ext_pushforward(ext_from_ses(sigma), h, target));
  }
  auto e = ext_from_ses(sigma);
  EXPECT_TRUE(ext_pushforward(e, MorQ::zero(s.u, s.m)).is_zero());
  EXPECT_EQ(ext_pushforward(e, MorQ::identity(s.u), e.space_ptr()), e);
}

TEST(Cancel, DirectSumCase) {
  auto s = gen_star<Q>(3);
  auto sigma0 = star_sequence(s, 1, 2);
  auto y = s.u;  // delta(sigma0, U) = 1, so use i = 2 copies
  auto yy = direct_sum(y, y).sum;
  // sigma = sigma0 (+) (0 -> Y^2 -> Y^2 -> 0 -> 0)
  auto f = direct_sum(sigma0.f(), MorQ::identity(yy));
  auto zero_v = share(RepQ::zero(s.quiver));
  auto g = direct_sum(sigma0.g(), MorQ::zero(yy, zero_v));
  auto v_iso = direct_sum(s.v, zero_v);
  auto g_to_v = v_iso.project_first.compose(g);
  auto sigma = make_ses(f, g_to_v);
  ASSERT_LT(delta(sigma, *y), 2u);
  auto reduced = cancel_summand(sigma, y, 2);
  EXPECT_EQ(reduced.left().dims(), (s.u->dims() + s.u->dims()));
  for (const auto& x : profile_set(sigma)) {
    EXPECT_EQ(delta(reduced, *x), delta(sigma, *x));
    EXPECT_EQ(delta_prime(reduced, *x), delta_prime(sigma, *x));
  }
  EXPECT_TRUE(is_isomorphic(direct_sum(reduced.middle_ptr(), y).sum, sigma.middle_ptr()));
  EXPECT_THROW(cancel_summand(sigma0, y, 1), PreconditionError);
}
