#pragma once

// Truncated dimension data, their comparison, stabilization of subgroup
// families and separating representations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "irreps.hpp"
#include "parallel.hpp"
#include "subgroups.hpp"

namespace dimdatum {

/// dim V^H for every irrep V with Casimir <= truncation, in enumeration order.
struct DatumVector {
    RootDatum group;
    std::int64_t truncation;
    std::string subgroup_name;
    std::vector<DominantWeight> weights;
    std::vector<std::int64_t> values;

    std::int64_t value(const DominantWeight &lambda) const {
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (weights[i] == lambda)
                return values[i];
        throw InputError("weight " + weight_label(lambda.coords) + " is outside the truncation");
    }

    friend bool operator==(const DatumVector &, const DatumVector &) = default;
};

/// Same group, truncation and values; names are ignored.
inline bool same_values(const DatumVector &a, const DatumVector &b) {
    return a.group == b.group && a.truncation == b.truncation && a.weights == b.weights && a.values == b.values;
}

inline DatumVector dimension_datum(const RootDatum &datum, const SubgroupDescriptor &h, std::int64_t truncation) {
    validate_subgroup(datum, h);
    DatumVector d{datum, truncation, h.name, enumerate_irreps(datum, truncation), {}};
    d.values = detail::parallel_map(d.weights.size(), [&](std::size_t i) { return invariant_dim(datum, d.weights[i], h); });
    return d;
}

struct LabelStabilization {
    DominantWeight weight;
    std::int64_t final_value = 0;
    /// Family index from which the value is constant; empty when only the
    /// last member carries the final value.
    std::optional<std::size_t> stable_from;
};

struct StabilizationReport {
    std::int64_t truncation = 0;
    std::vector<std::string> members;
    std::vector<LabelStabilization> labels;
    bool stabilized = false;
    std::optional<DatumVector> limit;
    std::optional<std::string> candidate;
    std::optional<std::string> matched_candidate;

    const LabelStabilization *first_unstable() const {
        for (const auto &l : labels)
            if (!l.stable_from)
                return &l;
        return nullptr;
    }
};

/// Pointwise stabilization of the family's data over the supplied prefix. A
/// label counts as stabilized when its final value is shared by at least the
/// last two members.
inline StabilizationReport family_limit(const RootDatum &datum, const std::vector<SubgroupDescriptor> &family,
                                        std::int64_t truncation,
                                        const std::optional<SubgroupDescriptor> &candidate = std::nullopt) {
    if (family.size() < 2)
        throw InputError("a family needs at least two members");
    std::vector<DatumVector> data;
    data.reserve(family.size());
    for (const auto &h : family)
        data.push_back(dimension_datum(datum, h, truncation));

    StabilizationReport report;
    report.truncation = truncation;
    for (const auto &h : family)
        report.members.push_back(h.name);
    const auto &weights = data.front().weights;
    report.stabilized = true;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        LabelStabilization l{weights[i], data.back().values[i], std::nullopt};
        std::size_t from = data.size() - 1;
        while (from > 0 && data[from - 1].values[i] == l.final_value)
            --from;
        if (from + 1 < data.size())
            l.stable_from = from;
        else
            report.stabilized = false;
        report.labels.push_back(std::move(l));
    }
    if (report.stabilized) {
        DatumVector lim = data.back();
        lim.subgroup_name = "limit";
        report.limit = std::move(lim);
    }
    if (candidate) {
        report.candidate = candidate->name;
        if (report.limit && same_values(*report.limit, dimension_datum(datum, *candidate, truncation)))
            report.matched_candidate = candidate->name;
    }
    return report;
}

struct Separation {
    DominantWeight weight;
    std::int64_t value_h;
    std::int64_t value_h_prime;
};

/// First irrep in enumeration order with dim V^H > dim V^{H'}. The caller
/// asserts H is a proper subgroup of H'.
inline std::optional<Separation> find_separating_irrep(const RootDatum &datum, const SubgroupDescriptor &h,
                                                       const SubgroupDescriptor &h_prime, std::int64_t max_truncation) {
    validate_subgroup(datum, h);
    validate_subgroup(datum, h_prime);
    for (const auto &lambda : enumerate_irreps(datum, max_truncation)) {
        const std::int64_t a = invariant_dim(datum, lambda, h);
        const std::int64_t b = invariant_dim(datum, lambda, h_prime);
        if (a > b)
            return Separation{lambda, a, b};
    }
    return std::nullopt;
}

enum class DataRelation { equal, a_dominates, b_dominates, incomparable };

inline const char *to_string(DataRelation r) {
    switch (r) {
    case DataRelation::equal: return "equal";
    case DataRelation::a_dominates: return "a_dominates";
    case DataRelation::b_dominates: return "b_dominates";
    case DataRelation::incomparable: return "incomparable";
    }
    return "?";
}

struct DataComparison {
    DataRelation relation = DataRelation::equal;
    std::optional<DominantWeight> a_greater; // first weight with a > b
    std::optional<DominantWeight> b_greater; // first weight with b > a
};

inline DataComparison compare_data(const DatumVector &a, const DatumVector &b) {
    if (!(a.group == b.group))
        throw InputError("cannot compare data of different groups");
    if (a.truncation != b.truncation || a.weights != b.weights)
        throw InputError("cannot compare data with different truncations (" + std::to_string(a.truncation) + " vs " +
                         std::to_string(b.truncation) + ")");
    DataComparison c;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] > b.values[i] && !c.a_greater)
            c.a_greater = a.weights[i];
        if (b.values[i] > a.values[i] && !c.b_greater)
            c.b_greater = a.weights[i];
    }
    if (c.a_greater && c.b_greater)
        c.relation = DataRelation::incomparable;
    else if (c.a_greater)
        c.relation = DataRelation::a_dominates;
    else if (c.b_greater)
        c.relation = DataRelation::b_dominates;
    return c;
}

} // namespace dimdatum
