#include <random>

#include <gtest/gtest.h>

#include <dimdatum/cyclotomic.hpp>

using namespace dimdatum;

namespace {

IntPoly multiply(const IntPoly &a, const IntPoly &b) {
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

CyclotomicNumber random_element(std::mt19937 &rng, std::int64_t order) {
    std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    for (auto &x : c)
        x = make_rational(coeff(rng), den(rng));
    return CyclotomicNumber::from_group_ring(order, c);
}

} // namespace

TEST(Rational, ParseAndFormat) {
    EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
    EXPECT_EQ(to_string(Rational(7)), "7");
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("x/2"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
    EXPECT_EQ(frac_part(make_rational(-1, 4)), make_rational(3, 4));
    EXPECT_EQ(frac_part(make_rational(5, 4)), make_rational(1, 4));
}

TEST(CyclotomicPolynomial, SmallOrders) {
    EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, ProductOverDivisorsIsXnMinusOne) {
    for (std::int64_t n = 1; n <= 64; ++n) {
        IntPoly prod{1};
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = multiply(prod, cyclotomic_polynomial(d));
        IntPoly expected(static_cast<std::size_t>(n) + 1, 0);
        expected[0] = -1;
        expected.back() = 1;
        EXPECT_EQ(prod, expected) << "n = " << n;
        EXPECT_EQ(static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
    }
}

TEST(CyclotomicNumber, RootsOfUnity) {
    EXPECT_EQ(CyclotomicNumber::root_of_unity(4, 2), CyclotomicNumber(Rational(-1)));
    EXPECT_EQ(CyclotomicNumber::root_of_unity(2, 1), CyclotomicNumber::root_of_unity(4, 2));
    EXPECT_EQ(CyclotomicNumber::root_of_unity(6, 0), CyclotomicNumber(Rational(1)));
    // 1 + z3 + z3^2 = 0
    auto z = CyclotomicNumber::root_of_unity(3, 1);
    auto s = CyclotomicNumber(Rational(1)) + z + z * z;
    EXPECT_TRUE(s.is_rational());
    EXPECT_EQ(s.rational_value(), 0);
    EXPECT_FALSE(z.is_rational());
    EXPECT_THROW(z.rational_value(), ConsistencyError);
}

TEST(CyclotomicNumber, ConjugateInverts) {
    for (std::int64_t n : {1, 2, 5, 8, 12, 15}) {
        for (std::int64_t k = 0; k < n; ++k) {
            auto z = CyclotomicNumber::root_of_unity(n, k);
            EXPECT_EQ(z * z.conjugate(), CyclotomicNumber(Rational(1))) << n << " " << k;
            EXPECT_EQ(z.conjugate(), CyclotomicNumber::root_of_unity(n, n - k));
        }
    }
    // 2 cos(2 pi / 5) + 2 cos(4 pi / 5) = -1
    auto a = CyclotomicNumber::root_of_unity(5, 1) + CyclotomicNumber::root_of_unity(5, 4);
    auto b = CyclotomicNumber::root_of_unity(5, 2) + CyclotomicNumber::root_of_unity(5, 3);
    EXPECT_EQ((a + b).rational_value(), -1);
    EXPECT_EQ((a * b).rational_value(), -1);
}

TEST(CyclotomicNumber, EmbeddingPreservesArithmetic) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_element(rng, 6), y = random_element(rng, 6);
        EXPECT_EQ((x * y).embed(12), x.embed(12) * y.embed(12));
        EXPECT_EQ(x + y, x.embed(18) + y.embed(36));
    }
    EXPECT_THROW(CyclotomicNumber::root_of_unity(4, 1).embed(6), InputError);
}

TEST(CyclotomicNumber, RingAxiomsOnRandomTriples) {
    std::mt19937 rng(2024);
    const std::int64_t orders[] = {1, 3, 4, 5, 8, 9, 12, 15};
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> pick(0, 7);
        auto a = random_element(rng, orders[pick(rng)]);
        auto b = random_element(rng, orders[pick(rng)]);
        auto c = random_element(rng, orders[pick(rng)]);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, CyclotomicNumber());
        EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    }
}
