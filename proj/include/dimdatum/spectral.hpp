#pragma once

// Laplace spectra of G/H for the biinvariant metric fixed by
// kMetricConstant. By Peter-Weyl, the eigenvalue casimir_value(lambda)
// occurs with multiplicity dim V_lambda * dim V_lambda^H.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "datum.hpp"
#include "irreps.hpp"

namespace dimdatum {

struct SpectrumEntry {
    Rational eigenvalue;
    std::int64_t multiplicity;

    friend bool operator==(const SpectrumEntry &, const SpectrumEntry &) = default;
};

struct SpectrumMultiset {
    std::string group_key;
    std::string subgroup_name;
    std::int64_t truncation = 0;
    std::vector<SpectrumEntry> entries; // strictly increasing eigenvalues

    friend bool operator==(const SpectrumMultiset &, const SpectrumMultiset &) = default;
};

/// The spectrum depends on H only through its dimension datum.
inline SpectrumMultiset spectrum_from_datum(const DatumVector &d) {
    std::map<Rational, std::int64_t> grouped;
    for (std::size_t i = 0; i < d.weights.size(); ++i) {
        const Rational c = casimir_value(d.group, d.weights[i]);
        const std::int64_t m = weyl_dimension(d.group, d.weights[i]) * d.values[i];
        if (c == 0 && d.values[i] != 1)
            throw ConsistencyError("datum of '" + d.subgroup_name + "' does not fix the trivial representation once");
        if (m > 0)
            grouped[c] += m;
    }
    SpectrumMultiset s{d.group.key(), d.subgroup_name, d.truncation, {}};
    for (const auto &[c, m] : grouped)
        s.entries.push_back({c, m});
    return s;
}

inline SpectrumMultiset homogeneous_spectrum(const RootDatum &datum, const SubgroupDescriptor &h,
                                             std::int64_t truncation) {
    return spectrum_from_datum(dimension_datum(datum, h, truncation));
}

struct SpectralDifference {
    Rational eigenvalue;
    std::int64_t multiplicity_a;
    std::int64_t multiplicity_b;
};

/// Empty when the spectra agree; otherwise the smallest eigenvalue whose
/// multiplicities differ.
inline std::optional<SpectralDifference> isospectral_compare(const SpectrumMultiset &a, const SpectrumMultiset &b) {
    if (a.group_key != b.group_key)
        throw InputError("cannot compare spectra of different groups");
    if (a.truncation != b.truncation)
        throw InputError("cannot compare spectra with different truncations (" + std::to_string(a.truncation) +
                         " vs " + std::to_string(b.truncation) + ")");
    std::map<Rational, std::pair<std::int64_t, std::int64_t>> merged;
    for (const auto &e : a.entries)
        merged[e.eigenvalue].first = e.multiplicity;
    for (const auto &e : b.entries)
        merged[e.eigenvalue].second = e.multiplicity;
    for (const auto &[c, m] : merged)
        if (m.first != m.second)
            return SpectralDifference{c, m.first, m.second};
    return std::nullopt;
}

} // namespace dimdatum
