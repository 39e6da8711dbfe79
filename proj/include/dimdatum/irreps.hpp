#pragma once

// Irreducible representations by highest weight: enumeration in Casimir
// order, Weyl dimensions, Freudenthal weight multiplicities and exact
// character values at finite-order torus elements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "cyclotomic.hpp"
#include "root_datum.hpp"

namespace dimdatum {

/// Highest weight of an irreducible representation.
struct DominantWeight {
    Weight coords;

    friend bool operator==(const DominantWeight &, const DominantWeight &) = default;
    friend auto operator<=>(const DominantWeight &, const DominantWeight &) = default;
};

/// Weights of a representation with their multiplicities.
struct WeightMultiset {
    std::map<Weight, std::int64_t> entries;

    std::int64_t total() const {
        std::int64_t n = 0;
        for (const auto &[w, m] : entries)
            n += m;
        return n;
    }

    std::int64_t multiplicity(const Weight &w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
};

/// Scale of the Laplacian relative to the basic form; chosen so that the
/// SU(2) label m has eigenvalue m(m+2).
inline constexpr std::int64_t kMetricConstant = 2;

/// Laplacian eigenvalue on the isotypic component of highest weight lambda:
/// kMetricConstant * <lambda, lambda + 2 rho>.
inline Rational casimir_value(const RootDatum &datum, const DominantWeight &lambda) {
    Weight shifted = lambda.coords;
    for (std::size_t i = 0; i < shifted.size(); ++i)
        shifted[i] += 2 * datum.rho()[i];
    return kMetricConstant * datum.inner(lambda.coords, shifted);
}

inline void check_dominant(const RootDatum &datum, const DominantWeight &lambda) {
    if (lambda.coords.size() != datum.rank())
        throw InputError("weight has " + std::to_string(lambda.coords.size()) + " coordinates, group rank is " +
                         std::to_string(datum.rank()));
    if (!datum.is_dominant(lambda.coords))
        throw InputError("weight is not dominant");
}

namespace detail {

/// Sort key of a torus coordinate in the spiral order 0, 1, -1, 2, -2, ...
inline std::int64_t spiral_index(std::int64_t k) { return k > 0 ? 2 * k - 1 : -2 * k; }

} // namespace detail

/// All dominant weights with casimir_value <= truncation, ordered by
/// (Casimir, coordinates) with torus coordinates compared in spiral order.
inline std::vector<DominantWeight> enumerate_irreps(const RootDatum &datum, std::int64_t truncation) {
    if (truncation < 0)
        throw InputError("truncation must be nonnegative");
    const std::size_t r = datum.rank();
    const Rational bound(truncation);
    std::vector<std::int64_t> lo(r, 0), hi(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
        Weight omega(r, 0);
        omega[i] = 1;
        if (datum.is_torus_coord(i)) {
            // kMetricConstant * k^2 <= N
            std::int64_t k = 0;
            while (kMetricConstant * (k + 1) * (k + 1) <= truncation)
                ++k;
            lo[i] = -k;
            hi[i] = k;
        } else {
            // casimir >= kMetricConstant * 2 lambda_i <omega_i, rho>
            Rational step = kMetricConstant * 2 * datum.inner(omega, datum.rho());
            hi[i] = to_int64(numerator(bound / step) / denominator(bound / step));
        }
    }
    using Key = std::tuple<Rational, Weight>;
    std::vector<std::pair<Key, DominantWeight>> found;
    Weight cur = lo;
    while (true) {
        DominantWeight lambda{cur};
        Rational c = casimir_value(datum, lambda);
        if (c <= bound) {
            Weight key(r);
            for (std::size_t i = 0; i < r; ++i)
                key[i] = datum.is_torus_coord(i) ? detail::spiral_index(cur[i]) : cur[i];
            found.push_back({{c, key}, lambda});
        }
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
        }
        if (i == r)
            break;
    }
    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<DominantWeight> out;
    out.reserve(found.size());
    for (auto &f : found)
        out.push_back(std::move(f.second));
    return out;
}

/// prod over positive roots of <lambda + rho, a> / <rho, a>.
inline std::int64_t weyl_dimension(const RootDatum &datum, const DominantWeight &lambda) {
    check_dominant(datum, lambda);
    Weight shifted = lambda.coords;
    for (std::size_t i = 0; i < shifted.size(); ++i)
        shifted[i] += datum.rho()[i];
    BigInt num = 1, den = 1;
    for (const auto &a : datum.positive_roots()) {
        num *= datum.scaled_inner(shifted, a);
        den *= datum.scaled_inner(datum.rho(), a);
    }
    if (num % den != 0)
        throw ConsistencyError("Weyl dimension formula gave a non-integer");
    return to_int64(num / den);
}

namespace detail {

inline WeightMultiset compute_freudenthal(const RootDatum &datum, const DominantWeight &lambda) {
    const Weight &top = lambda.coords;
    const std::size_t r = datum.rank();

    // dominant weights below lambda
    std::set<Weight> dominant{top};
    std::vector<Weight> frontier{top};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto &mu : frontier)
            for (const auto &a : datum.positive_roots()) {
                Weight nu = mu;
                for (std::size_t i = 0; i < r; ++i)
                    nu[i] -= a[i];
                if (datum.is_dominant(nu) && dominant.insert(nu).second)
                    next.push_back(std::move(nu));
            }
        frontier = std::move(next);
    }

    auto plus = [&](const Weight &a, const Weight &b, std::int64_t k = 1) {
        Weight c = a;
        for (std::size_t i = 0; i < r; ++i)
            c[i] += k * b[i];
        return c;
    };
    const Weight &rho = datum.rho();
    auto depth = [&](const Weight &mu) { return datum.scaled_inner(plus(top, mu, -1), rho); };

    std::vector<Weight> order(dominant.begin(), dominant.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](const Weight &a, const Weight &b) { return depth(a) < depth(b); });

    const Weight top_rho = plus(top, rho);
    const std::int64_t top_norm = datum.scaled_inner(top_rho, top_rho);
    std::map<Weight, std::int64_t> mult;
    auto lookup = [&](const Weight &w) -> std::int64_t {
        auto it = mult.find(datum.dominant_representative(w));
        return it == mult.end() ? 0 : it->second;
    };
    for (const auto &mu : order) {
        if (mu == top) {
            mult[mu] = 1;
            continue;
        }
        std::int64_t rhs = 0;
        for (const auto &a : datum.positive_roots()) {
            for (std::int64_t k = 1;; ++k) {
                Weight nu = plus(mu, a, k);
                const std::int64_t m = lookup(nu);
                if (m == 0)
                    break;
                rhs += m * datum.scaled_inner(nu, a);
            }
        }
        const Weight mu_rho = plus(mu, rho);
        const std::int64_t gap = top_norm - datum.scaled_inner(mu_rho, mu_rho);
        if (gap <= 0 || (2 * rhs) % gap != 0)
            throw ConsistencyError("Freudenthal recursion produced a non-integral multiplicity");
        mult[mu] = 2 * rhs / gap;
    }

    WeightMultiset out;
    for (const auto &[mu, m] : mult) {
        if (m == 0)
            continue;
        for (auto &w : datum.weyl_orbit(mu))
            out.entries.emplace(std::move(w), m);
    }
    return out;
}

} // namespace detail

/// Weight multiplicities of the irreducible representation with highest
/// weight lambda. Results are memoized by value and shared between threads.
inline std::shared_ptr<const WeightMultiset> freudenthal_multiplicities(const RootDatum &datum,
                                                                        const DominantWeight &lambda) {
    check_dominant(datum, lambda);
    std::string key = datum.key();
    for (auto c : lambda.coords)
        key += "," + std::to_string(c);
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const WeightMultiset>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto computed = std::make_shared<const WeightMultiset>(detail::compute_freudenthal(datum, lambda));
    std::lock_guard lock(mutex);
    return cache.emplace(std::move(key), std::move(computed)).first->second;
}

/// Group-ring coefficients sum_mu m_mu x^k(mu) at t, for n a multiple of t.order().
inline std::vector<std::int64_t> character_exponent_counts(const WeightMultiset &weights, const TorusElement &t,
                                                           std::int64_t n) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    const Weight scaled = t.scaled_angles(n);
    for (const auto &[mu, m] : weights.entries)
        counts[static_cast<std::size_t>(pairing_exponent(mu, scaled, n))] += m;
    return counts;
}

/// chi_lambda(t), exact in Q(zeta_N), N = t.order().
inline CyclotomicNumber character_value(const RootDatum &datum, const DominantWeight &lambda, const TorusElement &t) {
    if (t.rank() != datum.rank())
        throw InputError("torus element rank does not match the group");
    const auto weights = freudenthal_multiplicities(datum, lambda);
    const std::int64_t n = t.order();
    const auto counts = character_exponent_counts(*weights, t, n);
    std::vector<Rational> coeffs(counts.begin(), counts.end());
    return CyclotomicNumber::from_group_ring(n, coeffs);
}

/// Display label: "m=2" in rank one, "(1,1)" otherwise.
inline std::string weight_label(const Weight &w) {
    if (w.size() == 1)
        return "m=" + std::to_string(w[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

} // namespace dimdatum
