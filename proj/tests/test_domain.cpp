#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace polydecomp;
using namespace polydecomp::testing;

namespace {

const Domain gf5 = Domain::prime_field(5);

TEST(Domain, RationalArithmetic)
{
    EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
    EXPECT_EQ(q(1, 2) - q(1, 2), Element::zero(Qq()));
    EXPECT_EQ(-q(3, 4), q(-3, 4));
    EXPECT_EQ(q(2, 4).rational(), Rational(1, 2));
    EXPECT_EQ(q(3, -6).rational(), Rational(-1, 2));
}

TEST(Domain, PrimeFieldArithmetic)
{
    auto r = [](long v) { return Element::from_integer(gf5, v); };
    EXPECT_EQ(r(3) * r(4), r(2));
    EXPECT_EQ(r(3) + r(4), r(2));
    EXPECT_EQ(r(1) - r(3), r(3));
    EXPECT_EQ(r(-1).residue(), 4u);
    EXPECT_EQ((-r(0)).residue(), 0u);
    EXPECT_EQ(Element::from_rational(gf5, Rational(1, 2)), r(3));
}

TEST(Domain, PolyRingArithmetic)
{
    const Domain qy = Domain::poly_ring(Qq(), "y");
    const Element y = Element::generator(qy, "y");
    const Element one = Element::one(qy);
    const Element expected = Element::from_coefficients(qy, {q(-1), q(0), q(1)});
    EXPECT_EQ((y + one) * (y - one), expected);
    EXPECT_TRUE((y - y).is_zero());
    EXPECT_TRUE((y - y).coefficients().empty());
}

TEST(Domain, MismatchedDomainsThrow)
{
    const Element a = q(1);
    const Element b = Element::one(gf5);
    try {
        (void)(a + b);
        FAIL() << "expected DomainMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DomainMismatch);
    }
    const Domain qy = Domain::poly_ring(Qq(), "y");
    const Domain qz = Domain::poly_ring(Qq(), "z");
    EXPECT_THROW((void)(Element::one(qy) * Element::one(qz)), Error);
}

TEST(Domain, InvertInteger)
{
    EXPECT_EQ(invert_integer(Qq(), 6), q(1, 6));
    EXPECT_EQ(invert_integer(gf5, 2), Element::from_integer(gf5, 3));
    const Domain gf2 = Domain::prime_field(2);
    try {
        (void)invert_integer(gf2, 2);
        FAIL() << "expected NotInvertible";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
    }
    const Domain gf3y = Domain::poly_ring(Domain::prime_field(3), "y");
    EXPECT_EQ(invert_integer(gf3y, 2), Element::from_integer(gf3y, 2));
    EXPECT_THROW((void)invert_integer(gf3y, 6), Error);
}

TEST(Domain, Characteristic)
{
    EXPECT_EQ(characteristic(Qq()), 0u);
    EXPECT_EQ(characteristic(Domain::prime_field(7)), 7u);
    EXPECT_EQ(characteristic(Domain::poly_ring(Domain::prime_field(3), "y")), 3u);
    EXPECT_EQ(characteristic(Domain::poly_ring(Domain::poly_ring(Qq(), "y"), "z")), 0u);
}

TEST(Domain, ConstructionValidates)
{
    EXPECT_THROW(Domain::prime_field(4), Error);
    EXPECT_THROW(Domain::prime_field(1), Error);
    EXPECT_THROW(Domain::prime_field(2147483659ull), Error);
    EXPECT_NO_THROW(Domain::prime_field(2147483647ull));
    const Domain qy = Domain::poly_ring(Qq(), "y");
    EXPECT_THROW(Domain::poly_ring(qy, "y"), Error);
    EXPECT_THROW(Domain::poly_ring(qy, "2y"), Error);
    EXPECT_EQ(Domain::poly_ring(qy, "z").to_string(), "Q[y][z]");
    EXPECT_EQ(Domain::poly_ring(Qq(), "y"), qy);
}

TEST(Domain, InverseOfUnits)
{
    EXPECT_EQ(inverse(q(-2, 3)), q(-3, 2));
    EXPECT_EQ(inverse(Element::from_integer(gf5, 4)), Element::from_integer(gf5, 4));
    const Domain qy = Domain::poly_ring(Qq(), "y");
    EXPECT_EQ(inverse(Element::from_integer(qy, 2)), Element::from_rational(qy, Rational(1, 2)));
    EXPECT_THROW((void)inverse(Element::generator(qy, "y")), Error);
    EXPECT_THROW((void)inverse(Element::zero(Qq())), Error);
}

TEST(Domain, GroundConstants)
{
    const Domain tower = Domain::poly_ring(Domain::poly_ring(Qq(), "z"), "y");
    const Element c = Element::from_rational(tower, Rational(7, 3));
    EXPECT_TRUE(c.is_ground_constant());
    EXPECT_EQ(c.ground_value(), q(7, 3));
    EXPECT_FALSE(Element::generator(tower, "z").is_ground_constant());
    EXPECT_TRUE(Element::zero(tower).is_ground_constant());
}

class RingAxioms : public ::testing::TestWithParam<Domain> {};

TEST_P(RingAxioms, AssociativeDistributiveAndCanonical)
{
    const Domain d = GetParam();
    Rng rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
        const Element a = random_element(d, rng);
        const Element b = random_element(d, rng);
        const Element c = random_element(d, rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a - a, Element::zero(d));
        for (const Element& r : {a + b, a - b, a * b, -a, a * c - b})
            ASSERT_TRUE(is_canonical(r));
    }
}

TEST_P(RingAxioms, InvertIntegerIsInverse)
{
    const Domain d = GetParam();
    for (long m : {1L, 2L, 3L, 4L, 6L, 10L, -7L}) {
        try {
            const Element inv = invert_integer(d, m);
            EXPECT_EQ(inv * Element::from_integer(d, m), Element::one(d)) << m;
            EXPECT_TRUE(is_canonical(inv));
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
            EXPECT_EQ(static_cast<long>(m % static_cast<long>(d.characteristic())), 0);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, RingAxioms,
                         ::testing::Values(Domain::rationals(), Domain::prime_field(5), Domain::prime_field(2),
                                           Domain::poly_ring(Domain::rationals(), "y"),
                                           Domain::poly_ring(Domain::prime_field(7), "y"),
                                           Domain::poly_ring(Domain::poly_ring(Domain::rationals(), "z"), "y")));

} // namespace
