#include "truncsym/io.hpp"

#include <gtest/gtest.h>

#include "testutil.hpp"

using namespace truncsym;

namespace {
const RationalField Q;
}

TEST(PolyText, RenderExamples)
{
    auto f = MSymPoly<RationalField>::basis(3, Q, Partition{3, 1, 1});
    f.add_term(Partition{2, 2, 2}, Q.from_integer(2));
    // weight 5 before weight 6
    EXPECT_EQ(render_poly(f), "m[3,1^2] + 2*m[2^3]");
    EXPECT_EQ(render_poly(MSymPoly<RationalField>(3, Q)), "0");

    auto g = MSymPoly<RationalField>::basis(2, Q, Partition{});
    g.add_term(Partition{1}, Q.from_integer(-1));
    g.add_term(Partition{2}, Rational::parse("-1/2"));
    EXPECT_EQ(render_poly(g), "m[] - m[1] - 1/2*m[2]");
}

TEST(PolyText, ParseExamples)
{
    const auto f = parse_poly<RationalField>("m[2,1] + 3*m[1,1,1]", 3, Q);
    EXPECT_EQ(f.coeff(Partition{2, 1}), Q.one());
    EXPECT_EQ(f.coeff(Partition{1, 1, 1}), Q.from_integer(3));

    const auto g = parse_poly<RationalField>(" - 1/2 * m[ 2 ] + m[]", 2, Q);
    EXPECT_EQ(g.coeff(Partition{2}), Rational::parse("-1/2"));
    EXPECT_EQ(g.coeff(Partition{}), Q.one());

    // power form inside terms, and characteristic-p coefficients
    const PrimeField f3(3);
    const auto h = parse_poly<PrimeField>("2*m[2^2,1] - m[5]", 5, f3);
    EXPECT_EQ(h.coeff(Partition{2, 2, 1}).value(), 2ull);
    EXPECT_EQ(h.coeff(Partition{5}).value(), 2ull);  // -1 mod 3

    // terms on partitions longer than n vanish
    EXPECT_TRUE(parse_poly<RationalField>("m[1,1,1]", 2, Q).is_zero());

    EXPECT_EQ(parse_poly<RationalField>("0", 2, Q), MSymPoly<RationalField>(2, Q));
}

TEST(PolyText, ErrorsNameTheToken)
{
    try {
        parse_poly<RationalField>("m[2] % m[1]", 2, Q);
        FAIL() << "expected parse error";
    }
    catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("%m[1]"), std::string::npos);
    }
    EXPECT_THROW(parse_poly<RationalField>("2*", 2, Q), std::invalid_argument);
    EXPECT_THROW(parse_poly<RationalField>("m[2", 2, Q), std::invalid_argument);
    EXPECT_THROW(parse_poly<RationalField>("q[2]", 2, Q), std::invalid_argument);
}

TEST(PolyText, RoundTripsOnRandomPolynomials)
{
    auto rng = testutil::make_rng(0x10);
    const PrimeField f7(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        MSymPoly<RationalField> f(n, Q);
        MSymPoly<PrimeField> g(n, f7);
        for (int t = 0; t < 4; ++t) {
            const Partition la = testutil::random_partition(rng, 6, n);
            f.add_term(la, Q.from_integer(static_cast<long long>(rng() % 9) - 4));
            g.add_term(la, f7.from_integer(static_cast<long long>(rng() % 13)));
        }
        EXPECT_EQ(parse_poly(render_poly(f), n, Q), f);
        EXPECT_EQ(parse_poly(render_poly(g), n, f7), g);
    }
}

TEST(PolyText, GarbageEitherParsesOrThrowsInvalidArgument)
{
    auto rng = testutil::make_rng(0xf022);
    const std::string alphabet = "m[]^,*/+- 0123456789x";
    const PrimeField f3(3);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string s;
        const std::size_t len = rng() % 24;
        for (std::size_t i = 0; i < len; ++i)
            s += alphabet[rng() % alphabet.size()];
        try {
            (void)parse_poly<RationalField>(s, 3, Q);
        }
        catch (const std::invalid_argument&) {
        }
        try {
            (void)parse_poly<PrimeField>(s, 3, f3);
        }
        catch (const std::invalid_argument&) {
        }
        try {
            (void)parse_partition(s);
        }
        catch (const std::invalid_argument&) {
        }
    }
}

TEST(PolyJson, SchemaAndRoundTrip)
{
    auto f = MSymPoly<RationalField>::basis(3, Q, Partition{2, 1});
    f.add_term(Partition{1, 1, 1}, Rational::parse("5/3"));
    const json j = msym_to_json(f);
    EXPECT_EQ(j.at("n").get<std::size_t>(), 3u);
    EXPECT_EQ(j.at("p").get<unsigned long long>(), 0ull);
    ASSERT_EQ(j.at("terms").size(), 2u);
    EXPECT_EQ(j.at("terms")[0].at("partition"), json::array({2, 1}));
    EXPECT_EQ(j.at("terms")[1].at("coeff").get<std::string>(), "5/3");
    EXPECT_EQ(msym_from_json(j, Q), f);

    const PrimeField f2(2);
    const auto g = MSymPoly<PrimeField>::basis(4, f2, Partition{3, 3});
    EXPECT_EQ(msym_from_json(msym_to_json(g), f2), g);
    EXPECT_THROW(msym_from_json(msym_to_json(g), PrimeField(3)), std::invalid_argument);
}

TEST(GeneratorSpecJson, FieldsAndRoundTrip)
{
    const json j = generator_spec_to_json(conjecture_generators(2, 2, 1));
    EXPECT_EQ(j.at("p").get<int>(), 2);
    EXPECT_EQ(j.at("t").get<int>(), 1);
    ASSERT_EQ(j.at("entries").size(), 3u);
    EXPECT_EQ(j.at("entries")[2].at("partition"), json::array({2, 2}));
    EXPECT_EQ(j.at("entries")[2].at("retained").get<bool>(), true);

    const GeneratorSpec back = generator_spec_from_json(j);
    EXPECT_EQ(generator_spec_to_json(back), j);
    EXPECT_EQ(generator_spec_to_text(back),
              generator_spec_to_text(conjecture_generators(2, 2, 1)));
}

TEST(ReportJson, RoundTrip)
{
    const auto rep = verify_theorem(3, 3, 1);
    const json j = report_to_json(rep);
    const VerificationReport back = report_from_json(j);
    EXPECT_EQ(report_to_json(back), j);
    EXPECT_EQ(report_to_text(back), report_to_text(rep));
    EXPECT_EQ(back.overall(), rep.overall());
}

TEST(ReportJson, SchemaShape)
{
    const json j = report_to_json(verify_conjecture(2, 2, 1));
    EXPECT_EQ(j.at("overall").get<std::string>(), "pass");
    for (const auto& c : j.at("checks")) {
        EXPECT_TRUE(c.contains("kind"));
        EXPECT_TRUE(c.contains("subject"));
        EXPECT_TRUE(c.contains("degree"));
        EXPECT_TRUE(c.contains("outcome"));
        EXPECT_TRUE(c.contains("rank_expected"));
        EXPECT_TRUE(c.contains("rank_found"));
        EXPECT_TRUE(c.at("rank_expected").is_null());  // membership checks carry no ranks
    }
    const json t = report_to_json(verify_theorem(2, 2, 1));
    for (const auto& c : t.at("checks")) {
        EXPECT_EQ(c.at("kind").get<std::string>(), "rank");
        EXPECT_TRUE(c.at("rank_expected").is_number());
        EXPECT_TRUE(c.at("rank_found").is_number());
    }
}

TEST(ReportText, AgreesWithJsonOnContent)
{
    const auto rep = verify_theorem(2, 3, 1);
    const std::string text = report_to_text(rep);
    const json j = report_to_json(rep);
    EXPECT_NE(text.find("overall: pass"), std::string::npos);
    std::size_t passes = 0;
    for (std::size_t pos = 0; (pos = text.find("[pass]", pos)) != std::string::npos; ++pos)
        ++passes;
    EXPECT_EQ(passes, j.at("checks").size());
}
