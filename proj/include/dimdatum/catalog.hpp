#pragma once

// Shipped subgroups. Finite subgroups of SU(2) are given by their
// conjugacy classes in SU(2): angle a stands for diag(e^{2 pi i a}, e^{-2 pi i a}),
// with a and -a identified.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irreps.hpp"
#include "subgroups.hpp"

namespace dimdatum {

/// Casimir bound of the load-time integrality sweep.
inline constexpr std::int64_t kCatalogSweepTruncation = 48;

struct CatalogName {
    std::string name;
    bool parametric;
    const char *group; // "A1", "A2" or "any"
};

inline const std::vector<CatalogName> &catalog_names() {
    static const std::vector<CatalogName> names{
        {"trivial", false, "any"},
        {"cyclic", true, "A1"},
        {"binary_dihedral", true, "A1"},
        {"binary_tetrahedral", false, "A1"},
        {"binary_octahedral", false, "A1"},
        {"binary_icosahedral", false, "A1"},
        {"maximal_torus", false, "any"},
        {"torus_normalizer", false, "A1"},
        {"principal_a1_in_a2", false, "A2"},
    };
    return names;
}

namespace detail {

inline bool is_rank_one_simple(const RootDatum &d) {
    return d.factors().size() == 1 && d.factors()[0].type != FactorType::Torus && d.factors()[0].rank == 1;
}

/// Class measure in SU(2) from (angle numerator, angle denominator, class size).
inline ClassMeasure su2_classes(const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> &classes,
                                std::int64_t order) {
    std::map<Rational, std::int64_t> merged;
    for (auto [num, den, size] : classes) {
        Rational a = frac_part(make_rational(num, den));
        if (a > Rational(1, 2))
            a = 1 - a;
        merged[a] += size;
    }
    ClassMeasure m;
    m.component_count = order;
    for (const auto &[a, size] : merged)
        m.pieces.push_back(PointAtom{TorusElement({a}), make_rational(size, order)});
    return m;
}

inline ClassMeasure cyclic_measure(std::int64_t n) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> classes;
    for (std::int64_t k = 0; k < n; ++k)
        classes.emplace_back(k, n, 1);
    return su2_classes(classes, n);
}

/// Order 4n: the cyclic subgroup of order 2n plus 2n elements of trace 0.
inline ClassMeasure binary_dihedral_measure(std::int64_t n) {
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> classes;
    for (std::int64_t k = 0; k < 2 * n; ++k)
        classes.emplace_back(k, 2 * n, 1);
    classes.emplace_back(1, 4, 2 * n);
    return su2_classes(classes, 4 * n);
}

inline ClassMeasure binary_tetrahedral_measure() {
    return su2_classes({{0, 1, 1}, {1, 2, 1}, {1, 4, 6}, {1, 6, 8}, {1, 3, 8}}, 24);
}

inline ClassMeasure binary_octahedral_measure() {
    return su2_classes({{0, 1, 1}, {1, 2, 1}, {1, 4, 6}, {1, 6, 8}, {1, 3, 8}, {1, 8, 6}, {3, 8, 6}, {1, 4, 12}}, 48);
}

inline ClassMeasure binary_icosahedral_measure() {
    return su2_classes({{0, 1, 1},
                        {1, 2, 1},
                        {1, 4, 30},
                        {1, 6, 20},
                        {1, 3, 20},
                        {1, 10, 12},
                        {3, 10, 12},
                        {1, 5, 12},
                        {2, 5, 12}},
                       120);
}

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, Weight(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline SubgroupDescriptor build_catalog_entry(const RootDatum &datum, const std::string &name,
                                              std::optional<std::int64_t> parameter) {
    auto it = std::find_if(catalog_names().begin(), catalog_names().end(),
                           [&](const CatalogName &c) { return c.name == name; });
    if (it == catalog_names().end())
        throw InputError("unknown catalog subgroup '" + name + "'");
    if (it->parametric && !parameter)
        throw InputError("catalog subgroup '" + name + "' needs a parameter");
    if (!it->parametric && parameter)
        throw InputError("catalog subgroup '" + name + "' takes no parameter");
    const std::string group = it->group;
    if (group == "A1" && !is_rank_one_simple(datum))
        throw InputError("catalog subgroup '" + name + "' lives in SU(2); group is " + datum.key());
    if (group == "A2" && !(datum.factors().size() == 1 && datum.factors()[0] == FactorSpec{FactorType::A, 2}))
        throw InputError("catalog subgroup '" + name + "' lives in SU(3); group is " + datum.key());

    const std::size_t rank = datum.rank();
    SubgroupDescriptor h;
    h.name = parameter ? name + "(" + std::to_string(*parameter) + ")" : name;
    if (name == "trivial") {
        ClassMeasure m;
        m.pieces.push_back(PointAtom{TorusElement::identity(rank), Rational(1)});
        h.kind = FiniteClasses{std::move(m)};
    } else if (name == "cyclic") {
        if (*parameter < 1)
            throw InputError("cyclic(n) needs n >= 1");
        h.kind = FiniteClasses{cyclic_measure(*parameter)};
    } else if (name == "binary_dihedral") {
        if (*parameter < 2)
            throw InputError("binary_dihedral(n) needs n >= 2");
        h.kind = FiniteClasses{binary_dihedral_measure(*parameter)};
    } else if (name == "binary_tetrahedral") {
        h.kind = FiniteClasses{binary_tetrahedral_measure()};
    } else if (name == "binary_octahedral") {
        h.kind = FiniteClasses{binary_octahedral_measure()};
    } else if (name == "binary_icosahedral") {
        h.kind = FiniteClasses{binary_icosahedral_measure()};
    } else if (name == "maximal_torus") {
        h.kind = Subtorus{identity_matrix(rank), {}};
    } else if (name == "torus_normalizer") {
        // the non-identity component of N(T) is one SU(2) class, trace 0
        h.kind = Subtorus{identity_matrix(1), {PointAtom{TorusElement({Rational(1, 4)}), Rational(1, 2)}}};
    } else if (name == "principal_a1_in_a2") {
        // the standard representation restricts to the 3-dimensional irrep of SO(3)
        h.kind = ConnectedEmbedding{build_root_datum({{FactorType::A, 1}}), IntMatrix{{2, 2}}};
    }
    return h;
}

} // namespace detail

struct CatalogValidation {
    bool ok = true;
    std::string message;
};

/// Load-time checks: structural validity, trivial representation fixed
/// exactly once, and integrality plus the box 0 <= dim V^H <= dim V for every
/// irrep with Casimir <= kCatalogSweepTruncation.
inline CatalogValidation validate_catalog_entry(const RootDatum &datum, const SubgroupDescriptor &h) {
    try {
        validate_subgroup(datum, h);
        for (const auto &lambda : enumerate_irreps(datum, kCatalogSweepTruncation)) {
            const std::int64_t v = invariant_dim(datum, lambda, h);
            const std::int64_t dim = weyl_dimension(datum, lambda);
            const bool trivial = std::all_of(lambda.coords.begin(), lambda.coords.end(), [](auto c) { return c == 0; });
            if (trivial && v != 1)
                return {false, "trivial representation has invariant dimension " + std::to_string(v)};
            if (v > dim)
                return {false, "invariant dimension " + std::to_string(v) + " exceeds dim V = " + std::to_string(dim) +
                                   " at " + weight_label(lambda.coords)};
        }
    } catch (const std::exception &e) {
        return {false, e.what()};
    }
    return {};
}

/// A validated catalog subgroup of `datum`. Validation results are cached.
inline SubgroupDescriptor catalog_lookup(const RootDatum &datum, const std::string &name,
                                         std::optional<std::int64_t> parameter = std::nullopt) {
    SubgroupDescriptor h = detail::build_catalog_entry(datum, name, parameter);
    static std::mutex mutex;
    static std::map<std::string, CatalogValidation> validated;
    const std::string key = datum.key() + "/" + h.name;
    std::optional<CatalogValidation> known;
    {
        std::lock_guard lock(mutex);
        if (auto it = validated.find(key); it != validated.end())
            known = it->second;
    }
    if (!known) {
        known = validate_catalog_entry(datum, h);
        std::lock_guard lock(mutex);
        validated.emplace(key, *known);
    }
    if (!known->ok)
        throw ConsistencyError("catalog entry " + h.name + " rejected: " + known->message);
    return h;
}

/// Accepts "cyclic(8)", "cyclic:8" or a bare name.
inline std::pair<std::string, std::optional<std::int64_t>> parse_catalog_reference(const std::string &text) {
    auto open = text.find_first_of("(:");
    if (open == std::string::npos)
        return {text, std::nullopt};
    std::string name = text.substr(0, open);
    std::string arg = text.substr(open + 1);
    if (text[open] == '(') {
        if (arg.empty() || arg.back() != ')')
            throw InputError("malformed catalog reference '" + text + "'");
        arg.pop_back();
    }
    try {
        std::size_t used = 0;
        const std::int64_t p = std::stoll(arg, &used);
        if (used != arg.size())
            throw InputError("");
        return {name, p};
    } catch (const std::exception &) {
        throw InputError("malformed catalog parameter in '" + text + "'");
    }
}

} // namespace dimdatum
