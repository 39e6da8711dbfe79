#include <gtest/gtest.h>

#include <dimdatum/catalog.hpp>
#include <dimdatum/subgroups.hpp>

#include "oracles.hpp"

using namespace dimdatum;

namespace {

const RootDatum &a1() {
    static const RootDatum d = build_root_datum({{FactorType::A, 1}});
    return d;
}

SubgroupDescriptor finite(std::string name, std::vector<std::pair<Rational, Rational>> atoms, std::int64_t order) {
    ClassMeasure m;
    for (auto &[a, mass] : atoms)
        m.pieces.push_back(PointAtom{TorusElement({a}), mass});
    m.component_count = order;
    return {std::move(name), FiniteClasses{std::move(m)}};
}

} // namespace

TEST(InvariantDim, FiniteClassExamples) {
    auto z2 = finite("Z2", {{0, make_rational(1, 2)}, {make_rational(1, 2), make_rational(1, 2)}}, 2);
    EXPECT_EQ(invariant_dim(a1(), {{2}}, z2), 3);
    auto z4 = finite("Z4", {{0, make_rational(1, 4)}, {make_rational(1, 4), make_rational(1, 2)}, {make_rational(1, 2), make_rational(1, 4)}}, 4);
    EXPECT_EQ(invariant_dim(a1(), {{2}}, z4), 1);
}

TEST(InvariantDim, MaximalTorusCountsZeroWeights) {
    SubgroupDescriptor t{"T", Subtorus{{{1}}, {}}};
    for (std::int64_t m = 0; m <= 20; ++m)
        EXPECT_EQ(invariant_dim(a1(), {{m}}, t), m % 2 == 0 ? 1 : 0);
}

TEST(InvariantDim, TrivialRepresentationIsFixedOnce) {
    auto a2 = build_root_datum({{FactorType::A, 2}});
    EXPECT_EQ(invariant_dim(a2, {{0, 0}}, catalog_lookup(a2, "principal_a1_in_a2")), 1);
    EXPECT_EQ(invariant_dim(a2, {{0, 0}}, catalog_lookup(a2, "maximal_torus")), 1);
    for (const char *name : {"binary_icosahedral", "torus_normalizer", "trivial"})
        EXPECT_EQ(invariant_dim(a1(), {{0}}, catalog_lookup(a1(), name)), 1);
}

TEST(InvariantDim, PrincipalA1InA2) {
    auto a2 = build_root_datum({{FactorType::A, 2}});
    auto h = catalog_lookup(a2, "principal_a1_in_a2");
    EXPECT_EQ(invariant_dim(a2, {{1, 1}}, h), 0);
    EXPECT_EQ(invariant_dim(a2, {{1, 0}}, h), 0);
    EXPECT_EQ(invariant_dim(a2, {{0, 1}}, h), 0);
    // Sym^2 of the standard representation of SU(3) restricts to V_4 + V_0
    EXPECT_EQ(invariant_dim(a2, {{2, 0}}, h), 1);
}

TEST(InvariantDim, ConnectedAgreesWithStrippingOracle) {
    auto a2 = build_root_datum({{FactorType::A, 2}});
    const auto h = catalog_lookup(a2, "principal_a1_in_a2");
    const auto &c = std::get<ConnectedEmbedding>(h.kind);
    for (const auto &lambda : enumerate_irreps(a2, 80)) {
        auto restricted = restrict_weights(*freudenthal_multiplicities(a2, lambda), c.restriction);
        auto decomposition = oracles::strip_decompose(c.h_datum, restricted);
        const std::int64_t expected = decomposition.contains(Weight{0}) ? decomposition.at(Weight{0}) : 0;
        EXPECT_EQ(invariant_dim(a2, lambda, h), expected) << weight_label(lambda.coords);
    }
}

TEST(InvariantDim, FactoringVanishesOnNormalFactor) {
    // H = SU(2) x {1} inside SU(2) x U(1): V = V_m (x) chi_k has H-invariants iff m = 0
    auto g = build_root_datum({{FactorType::A, 1}, {FactorType::Torus, 1}});
    SubgroupDescriptor h{"A1 factor", ConnectedEmbedding{build_root_datum({{FactorType::A, 1}}), {{1, 0}}}};
    for (const auto &lambda : enumerate_irreps(g, 60)) {
        const std::int64_t v = invariant_dim(g, lambda, h);
        EXPECT_EQ(v, lambda.coords[0] == 0 ? 1 : 0) << weight_label(lambda.coords);
    }
}

TEST(InvariantDim, DegenerateTrivialSubgroups) {
    SubgroupDescriptor rank0{"rank-0 subtorus", Subtorus{{}, {}}};
    SubgroupDescriptor atom{"identity atom", FiniteClasses{ClassMeasure{{PointAtom{TorusElement({Rational(0)}), Rational(1)}}, 1}}};
    validate_subgroup(a1(), rank0);
    validate_subgroup(a1(), atom);
    for (std::int64_t m = 0; m <= 8; ++m) {
        EXPECT_EQ(invariant_dim(a1(), {{m}}, rank0), m + 1);
        EXPECT_EQ(invariant_dim(a1(), {{m}}, atom), m + 1);
    }
}

TEST(InvariantDim, SubtorusOfProductGroup) {
    // diagonal circle in T2 fixes characters (k, -k)
    auto t2 = build_root_datum({{FactorType::Torus, 2}});
    SubgroupDescriptor diag{"diag", Subtorus{{{1, 1}}, {}}};
    for (const auto &lambda : enumerate_irreps(t2, 20))
        EXPECT_EQ(invariant_dim(t2, lambda, diag), lambda.coords[0] + lambda.coords[1] == 0 ? 1 : 0);
}

TEST(InvariantDim, TranslatedTorusPiece) {
    // a coset offset lying in T itself gives T back
    SubgroupDescriptor nt{"T via translated torus",
                          Subtorus{{{1}}, {TorusPiece{{{1}}, TorusElement({make_rational(1, 4)}), make_rational(1, 2)}}}};
    EXPECT_EQ(invariant_dim(a1(), {{2}}, nt), 1);
    EXPECT_EQ(invariant_dim(a1(), {{1}}, nt), 0);
}

TEST(InvariantDim, CorruptedClassDataIsRejected) {
    auto bogus = finite("bogus", {{0, make_rational(1, 2)}, {make_rational(1, 3), make_rational(1, 2)}}, 2);
    try {
        invariant_dim(a1(), {{1}}, bogus);
        FAIL();
    } catch (const ConsistencyError &e) {
        EXPECT_NE(std::string(e.what()).find("m=1"), std::string::npos);
    }
    auto negative = finite("negative", {{make_rational(1, 3), Rational(1)}}, 1);
    EXPECT_THROW(invariant_dim(a1(), {{1}}, negative), ConsistencyError);
    auto irrational = finite("irrational", {{0, make_rational(1, 2)}, {make_rational(1, 5), make_rational(1, 2)}}, 2);
    EXPECT_THROW(invariant_dim(a1(), {{1}}, irrational), ConsistencyError);
}

TEST(InvariantDim, ConnectedRestrictionMustBeWeylInvariant) {
    auto a2 = build_root_datum({{FactorType::A, 2}});
    SubgroupDescriptor bad{"bad", ConnectedEmbedding{build_root_datum({{FactorType::A, 1}}), {{1, 2}}}};
    EXPECT_THROW(invariant_dim(a2, {{1, 0}}, bad), ConsistencyError);
}

TEST(ValidateSubgroup, StructuralErrors) {
    EXPECT_THROW(validate_subgroup(a1(), finite("sum", {{0, make_rational(1, 2)}}, 2)), InputError);
    EXPECT_THROW(validate_subgroup(a1(), finite("size", {{0, make_rational(1, 2)}, {make_rational(1, 2), make_rational(1, 2)}}, 3)),
                 InputError);
    ClassMeasure wrong_rank{{PointAtom{TorusElement({Rational(0), Rational(0)}), Rational(1)}}, 1};
    EXPECT_THROW(validate_subgroup(a1(), {"rank", FiniteClasses{wrong_rank}}), InputError);
    auto t2 = build_root_datum({{FactorType::Torus, 2}});
    EXPECT_THROW(validate_subgroup(t2, {"deficient", Subtorus{{{1, 1}, {2, 2}}, {}}}), InputError);
    EXPECT_THROW(validate_subgroup(a1(), {"heavy cosets", Subtorus{{{1}}, {PointAtom{TorusElement({make_rational(1, 4)}), Rational(1)}}}}),
                 InputError);
    EXPECT_THROW(validate_subgroup(a1(), {"shape", ConnectedEmbedding{build_root_datum({{FactorType::A, 1}}), {{1, 1}}}}),
                 InputError);
    ClassMeasure zero_mass{{PointAtom{TorusElement({Rational(0)}), Rational(1)}, PointAtom{TorusElement({make_rational(1, 2)}), Rational(0)}}, 1};
    EXPECT_THROW(validate_subgroup(a1(), {"zero", FiniteClasses{zero_mass}}), InputError);
}
