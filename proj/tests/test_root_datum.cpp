#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include <dimdatum/io.hpp>
#include <dimdatum/root_datum.hpp>
#include <dimdatum/weyl_group.hpp>

using namespace dimdatum;

namespace {

RootDatum simple(FactorType t, int rank) { return build_root_datum({{t, rank}}); }

std::int64_t factorial(std::int64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST(RootDatum, A1) {
    auto d = simple(FactorType::A, 1);
    EXPECT_EQ(d.rank(), 1u);
    ASSERT_EQ(d.simple_roots().size(), 1u);
    EXPECT_EQ(d.simple_roots()[0], (Weight{2}));
    EXPECT_EQ(d.inner(d.simple_roots()[0], d.simple_roots()[0]), 2);
    EXPECT_EQ(d.rho(), (Weight{1}));
}

TEST(RootDatum, TextbookCartanMatrices) {
    EXPECT_EQ(simple(FactorType::A, 2).cartan(), (IntMatrix{{2, -1}, {-1, 2}}));
    EXPECT_EQ(simple(FactorType::A, 3).cartan(), (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    // entry (i, j) = <a_i, a_j^vee>; B: last root short, C: last root long
    EXPECT_EQ(simple(FactorType::B, 2).cartan(), (IntMatrix{{2, -2}, {-1, 2}}));
    EXPECT_EQ(simple(FactorType::C, 2).cartan(), (IntMatrix{{2, -1}, {-2, 2}}));
    EXPECT_EQ(simple(FactorType::B, 3).cartan(), (IntMatrix{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
    EXPECT_EQ(simple(FactorType::C, 3).cartan(), (IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
    EXPECT_EQ(simple(FactorType::D, 4).cartan(),
              (IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
    // low-rank coincidences
    EXPECT_EQ(simple(FactorType::D, 2).cartan(), (IntMatrix{{2, 0}, {0, 2}}));
    EXPECT_EQ(simple(FactorType::D, 3).cartan(), (IntMatrix{{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}));
    EXPECT_EQ(simple(FactorType::B, 1).cartan(), (IntMatrix{{2}}));
}

TEST(RootDatum, ShortRootsHaveLengthTwo) {
    for (auto t : {FactorType::A, FactorType::B, FactorType::C, FactorType::D})
        for (int n = 1; n <= 4; ++n) {
            if (t == FactorType::D && n == 1)
                continue;
            auto d = simple(t, n);
            Rational shortest = 1000;
            for (const auto &a : d.positive_roots())
                shortest = std::min(shortest, d.inner(a, a));
            EXPECT_EQ(shortest, 2) << d.key();
        }
}

TEST(RootDatum, PositiveRootCounts) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(simple(FactorType::A, n).positive_roots().size(), static_cast<std::size_t>(n * (n + 1) / 2));
        EXPECT_EQ(simple(FactorType::B, n).positive_roots().size(), static_cast<std::size_t>(n * n));
        EXPECT_EQ(simple(FactorType::C, n).positive_roots().size(), static_cast<std::size_t>(n * n));
        if (n >= 2) {
            EXPECT_EQ(simple(FactorType::D, n).positive_roots().size(), static_cast<std::size_t>(n * (n - 1)));
        }
    }
}

TEST(RootDatum, ProductWithTorus) {
    auto d = build_root_datum({{FactorType::A, 1}, {FactorType::Torus, 1}});
    EXPECT_EQ(d.rank(), 2u);
    EXPECT_EQ(d.simple_roots(), (std::vector<Weight>{{2, 0}}));
    EXPECT_EQ(d.rho(), (Weight{1, 0}));
    EXPECT_TRUE(d.is_torus_coord(1));
    EXPECT_EQ(d.inner({0, 1}, {0, 1}), 1);
    EXPECT_EQ(d.inner({1, 0}, {0, 1}), 0);
    EXPECT_EQ(d.key(), "A1xT1");
    EXPECT_TRUE(d.is_dominant({0, -3}));
}

TEST(RootDatum, Rejections) {
    EXPECT_THROW(build_root_datum({}), InputError);
    EXPECT_THROW(simple(FactorType::A, 5), InputError);
    EXPECT_THROW(simple(FactorType::D, 1), InputError);
    EXPECT_THROW(build_root_datum({{FactorType::Torus, 0}}), InputError);
    try {
        parse_group_spec(json::parse(R"({"factors":[{"type":"A","rank":1},{"type":"E","rank":6}]})"));
        FAIL();
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("factor 1"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("'E'"), std::string::npos);
    }
    try {
        build_root_datum({{FactorType::A, 1}, {FactorType::B, 7}});
        FAIL();
    } catch (const InputError &e) {
        EXPECT_NE(std::string(e.what()).find("factor 1 (B7)"), std::string::npos);
    }
}

TEST(WeylGroup, A1) {
    auto w = weyl_group(simple(FactorType::A, 1));
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w.elements()[0].matrix, (IntMatrix{{1}}));
    EXPECT_EQ(w.elements()[0].sign, 1);
    EXPECT_EQ(w.elements()[1].matrix, (IntMatrix{{-1}}));
    EXPECT_EQ(w.elements()[1].sign, -1);
}

TEST(WeylGroup, A2MatchesS3) {
    // S3 has 3 even and 3 odd permutations
    auto w = weyl_group(simple(FactorType::A, 2));
    ASSERT_EQ(w.size(), 6u);
    EXPECT_EQ(std::count_if(w.elements().begin(), w.elements().end(), [](auto &e) { return e.sign == 1; }), 3);
}

TEST(WeylGroup, B2MatchesSignedPermutations) {
    // signed permutations of two letters: 8 elements, determinant split 4/4
    auto w = weyl_group(simple(FactorType::B, 2));
    ASSERT_EQ(w.size(), 8u);
    EXPECT_EQ(std::count_if(w.elements().begin(), w.elements().end(), [](auto &e) { return e.sign == 1; }), 4);
}

TEST(WeylGroup, Orders) {
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(static_cast<std::int64_t>(weyl_group(simple(FactorType::A, n)).size()), factorial(n + 1));
        EXPECT_EQ(static_cast<std::int64_t>(weyl_group(simple(FactorType::B, n)).size()), (1 << n) * factorial(n));
        EXPECT_EQ(static_cast<std::int64_t>(weyl_group(simple(FactorType::C, n)).size()), (1 << n) * factorial(n));
        if (n >= 2) {
            EXPECT_EQ(static_cast<std::int64_t>(weyl_group(simple(FactorType::D, n)).size()),
                      (1 << (n - 1)) * factorial(n));
        }
    }
    auto product = build_root_datum({{FactorType::A, 2}, {FactorType::B, 2}, {FactorType::Torus, 2}});
    EXPECT_EQ(weyl_group(product).size(), 48u);
}

TEST(WeylGroup, ClosedUnderCompositionAndInverse) {
    auto w = weyl_group(simple(FactorType::B, 3));
    std::set<IntMatrix> elems;
    for (const auto &e : w.elements())
        elems.insert(e.matrix);
    for (const auto &a : w.elements()) {
        bool has_inverse = false;
        for (const auto &b : w.elements()) {
            auto p = detail::multiply(a.matrix, b.matrix);
            ASSERT_TRUE(elems.contains(p));
            has_inverse = has_inverse || p == w.elements()[0].matrix;
        }
        EXPECT_TRUE(has_inverse);
    }
}

TEST(WeylGroup, PreservesInnerProduct) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (auto spec : std::vector<std::vector<FactorSpec>>{{{FactorType::A, 2}},
                                                          {{FactorType::B, 3}},
                                                          {{FactorType::C, 3}},
                                                          {{FactorType::D, 4}},
                                                          {{FactorType::A, 1}, {FactorType::Torus, 1}}}) {
        auto d = build_root_datum(spec);
        auto w = weyl_group(d);
        for (int trial = 0; trial < 5; ++trial) {
            Weight mu(d.rank()), nu(d.rank());
            for (auto &x : mu)
                x = coord(rng);
            for (auto &x : nu)
                x = coord(rng);
            for (const auto &e : w.elements())
                ASSERT_EQ(d.inner(WeylGroup::apply(e, mu), WeylGroup::apply(e, nu)), d.inner(mu, nu)) << d.key();
        }
    }
}

TEST(TorusElement, ReducesAngles) {
    TorusElement t({make_rational(5, 4), make_rational(-1, 3)});
    EXPECT_EQ(t.angles()[0], make_rational(1, 4));
    EXPECT_EQ(t.angles()[1], make_rational(2, 3));
    EXPECT_EQ(t.order(), 12);
}

TEST(CyclotomicEval, Examples) {
    EXPECT_EQ(cyclotomic_eval({0}, TorusElement({make_rational(1, 7)})), CyclotomicNumber(Rational(1)));
    EXPECT_EQ(cyclotomic_eval({2}, TorusElement({make_rational(1, 4)})), CyclotomicNumber(Rational(-1)));
    EXPECT_EQ(cyclotomic_eval({1}, TorusElement({make_rational(1, 2)})), CyclotomicNumber(Rational(-1)));
    EXPECT_EQ(cyclotomic_eval({1}, TorusElement({make_rational(1, 4)})), CyclotomicNumber::root_of_unity(4, 1));
    EXPECT_THROW(cyclotomic_eval({1, 2}, TorusElement({Rational(0)})), InputError);
}

TEST(CyclotomicEval, IsMultiplicative) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coord(-6, 6), den(1, 12);
    for (int trial = 0; trial < 50; ++trial) {
        Weight mu{coord(rng), coord(rng)}, nu{coord(rng), coord(rng)};
        TorusElement t({make_rational(coord(rng), den(rng)), make_rational(coord(rng), den(rng))});
        Weight sum{mu[0] + nu[0], mu[1] + nu[1]};
        EXPECT_EQ(cyclotomic_eval(sum, t), cyclotomic_eval(mu, t) * cyclotomic_eval(nu, t));
    }
}
