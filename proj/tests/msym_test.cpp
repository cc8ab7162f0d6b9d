#include "truncsym/msym.hpp"

#include <gtest/gtest.h>

#include "testutil.hpp"
#include "truncsym/io.hpp"

using namespace truncsym;

namespace {

const RationalField Q;

MSymPoly<RationalField> mq(std::size_t n, const Partition& la)
{
    return MSymPoly<RationalField>::basis(n, Q, la);
}

MSymPoly<PrimeField> mp(std::size_t n, unsigned long long p, const Partition& la)
{
    return MSymPoly<PrimeField>::basis(n, PrimeField(p), la);
}

}  // namespace

TEST(MSymAdd, Examples)
{
    const PrimeField f2(2);
    EXPECT_TRUE((mp(3, 2, {3}) + mp(3, 2, {3})).is_zero());

    const auto f = mq(3, {2, 1});
    EXPECT_EQ(f + MSymPoly<RationalField>(3, Q), f);

    const auto two = mq(3, {2}) + mq(3, {1, 1});
    EXPECT_EQ(two.terms().size(), 2u);
    EXPECT_TRUE(two.coeff({2}).is_one());
    EXPECT_TRUE(two.coeff({1, 1}).is_one());
}

TEST(MSymMul, PaperProduct)
{
    const auto prod = mq(3, {1, 1}) * mq(3, {2, 1});
    EXPECT_EQ(render_poly(prod), "m[3,2] + 2*m[3,1^2] + 2*m[2^2,1]");
    EXPECT_EQ(prod.coeff({3, 2}), Q.one());
    EXPECT_EQ(prod.coeff({3, 1, 1}), Q.from_integer(2));
    EXPECT_EQ(prod.coeff({2, 2, 1}), Q.from_integer(2));
    EXPECT_EQ(prod.terms().size(), 3u);
}

TEST(MSymMul, UnitAndSquares)
{
    const auto f = mq(3, {2, 1}) + mq(3, {3});
    EXPECT_EQ(MSymPoly<RationalField>::unit(3, Q) * f, f);

    const auto sq = mq(2, {1}) * mq(2, {1});
    EXPECT_EQ(render_poly(sq), "m[2] + 2*m[1^2]");

    // 3*m[1^3] vanishes mod 3
    const auto prod = mp(3, 3, {1}) * mp(3, 3, {1, 1});
    EXPECT_EQ(render_poly(prod), "m[2,1]");
}

TEST(MSymMul, MismatchErrors)
{
    EXPECT_THROW(mq(3, {1}) * mq(2, {1}), std::invalid_argument);
    EXPECT_THROW(mp(3, 2, {1}) + mp(3, 3, {1}), std::invalid_argument);
}

TEST(MSymPow, Examples)
{
    const auto f = mq(3, {2, 1}) + mq(3, {1});
    EXPECT_EQ(pow(f, 1), f);
    EXPECT_EQ(pow(f, 0), MSymPoly<RationalField>::unit(3, Q));

    EXPECT_EQ(pow(mp(8, 2, {3}), 2), mp(8, 2, {6}));
    EXPECT_EQ(pow(mp(8, 2, {3, 3}), 2), mp(8, 2, {6, 6}));
}

TEST(MSymPoly, DropRule)
{
    EXPECT_TRUE(mq(2, {1, 1, 1}).is_zero());
    EXPECT_TRUE(mp(1, 2, {2, 2}).is_zero());
}

TEST(Expand, Examples)
{
    const auto e = expand_to_monomials(mq(3, {1, 1}));
    EXPECT_EQ(e.size(), 3u);
    EXPECT_TRUE(e.at({1, 1, 0}).is_one());
    EXPECT_TRUE(e.at({1, 0, 1}).is_one());
    EXPECT_TRUE(e.at({0, 1, 1}).is_one());

    const auto unit = expand_to_monomials(MSymPoly<RationalField>::unit(2, Q));
    EXPECT_EQ(unit.size(), 1u);
    EXPECT_TRUE(unit.at({0, 0}).is_one());

    const auto p2 = expand_to_monomials(mq(2, {2}));
    EXPECT_EQ(p2.size(), 2u);
    EXPECT_TRUE(p2.at({2, 0}).is_one());
    EXPECT_TRUE(p2.at({0, 2}).is_one());
}

TEST(FromExpansion, Examples)
{
    std::map<Composition, Rational> square{{{2, 0}, Q.one()},
                                           {{0, 2}, Q.one()},
                                           {{1, 1}, Q.from_integer(2)}};
    const auto f = from_monomial_expansion(square, 2, Q);
    EXPECT_EQ(render_poly(f), "m[2] + 2*m[1^2]");

    const std::map<Composition, Rational> empty;
    EXPECT_TRUE(from_monomial_expansion(empty, 2, Q).is_zero());

    std::map<Composition, Rational> bad{{{1, 0}, Q.one()}, {{0, 1}, Q.from_integer(2)}};
    EXPECT_THROW(from_monomial_expansion(bad, 2, Q), std::invalid_argument);

    std::map<Composition, Rational> incomplete{{{1, 0}, Q.one()}};
    EXPECT_THROW(from_monomial_expansion(incomplete, 2, Q), std::invalid_argument);

    // explicit zeroes on a partial orbit are still symmetric
    std::map<Composition, Rational> zeros{{{1, 0}, Q.zero()}};
    EXPECT_TRUE(from_monomial_expansion(zeros, 2, Q).is_zero());
}

TEST(FromExpansion, RoundTripsWithExpand)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (unsigned w = 0; w <= 4; ++w) {
            for (const Partition& la : enumerate_partitions(w, n, 0)) {
                const auto f = mq(n, la) + mq(n, {1}).scaled(Q.from_integer(-3));
                EXPECT_EQ(from_monomial_expansion(expand_to_monomials(f), n, Q), f);
            }
        }
    }
}

TEST(Newton, Examples)
{
    EXPECT_TRUE(verify_newton_identity(2, 3, Q));
    EXPECT_TRUE(verify_newton_identity(1, 2, Q));
    EXPECT_TRUE(verify_newton_identity(3, 5, PrimeField(2)));
    EXPECT_THROW(verify_newton_identity(3, 3, Q), std::invalid_argument);
    EXPECT_THROW(verify_newton_identity(3, 2, Q), std::invalid_argument);
}

TEST(OracleEquivalence, SmallRange)
{
    // the acceptance suite runs the full n <= 4, weight <= 6 sweep
    const PrimeField f2(2);
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<Partition> all;
        for (unsigned w = 0; w <= 4; ++w) {
            for (const Partition& la : enumerate_partitions(w, w, 0))
                all.push_back(la);
        }
        for (const Partition& la : all) {
            for (const Partition& mu : all) {
                const auto aq = mq(n, la) * mq(n, mu);
                EXPECT_EQ(aq, testutil::oracle_product(mq(n, la), mq(n, mu)))
                    << "Q n=" << n << " " << render_partition(la) << " * "
                    << render_partition(mu);
                const auto a2 = mp(n, 2, la) * mp(n, 2, mu);
                EXPECT_EQ(a2, testutil::oracle_product(mp(n, 2, la), mp(n, 2, mu)))
                    << "F2 n=" << n << " " << render_partition(la) << " * "
                    << render_partition(mu);
            }
        }
    }
}

TEST(MSymMul, CommutativeAssociativeOnRandomTriples)
{
    auto rng = testutil::make_rng(0xabc);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + (rng() % 3);
        const Partition a = testutil::random_partition(rng, 4, n);
        const Partition b = testutil::random_partition(rng, 4, n);
        const Partition c = testutil::random_partition(rng, 4, n);
        {
            const auto fa = mq(n, a), fb = mq(n, b), fc = mq(n, c);
            EXPECT_EQ(fa * fb, fb * fa);
            EXPECT_EQ((fa * fb) * fc, fa * (fb * fc));
        }
        const unsigned long long p = trial % 2 == 0 ? 2 : 3;
        {
            const auto fa = mp(n, p, a), fb = mp(n, p, b), fc = mp(n, p, c);
            EXPECT_EQ(fa * fb, fb * fa);
            EXPECT_EQ((fa * fb) * fc, fa * (fb * fc));
        }
    }
}

TEST(Lemmas, SmallStructureChecks)
{
    // acceptance runs these at full width
    EXPECT_EQ(testutil::check_comp1_structure(4, 6), "");
    EXPECT_EQ(testutil::check_comp2_structure(5, 4, 2), "");
    EXPECT_EQ(testutil::check_newton_block({2, 3}, 4, 2), "");
    EXPECT_EQ(testutil::check_frobenius({2, 3, 5}, 4, 4), "");
}
