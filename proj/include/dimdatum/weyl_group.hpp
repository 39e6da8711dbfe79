#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "root_datum.hpp"

namespace dimdatum {

struct WeylElement {
    IntMatrix matrix; // acts on weight column vectors
    int sign;         // determinant, (-1)^length
};

class WeylGroup {
public:
    explicit WeylGroup(std::vector<WeylElement> elements) : elements_(std::move(elements)) {}

    const std::vector<WeylElement> &elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    static Weight apply(const WeylElement &w, const Weight &v) {
        Weight r(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                r[i] += w.matrix[i][j] * v[j];
        return r;
    }

private:
    std::vector<WeylElement> elements_;
};

namespace detail {

inline IntMatrix multiply(const IntMatrix &a, const IntMatrix &b) {
    const std::size_t n = a.size();
    IntMatrix c(n, Weight(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace detail

/// All elements of W, by closure of the simple reflections.
inline WeylGroup weyl_group(const RootDatum &datum) {
    const std::size_t r = datum.rank();
    std::vector<IntMatrix> generators;
    for (std::size_t i = 0; i < datum.simple_roots().size(); ++i) {
        IntMatrix s(r, Weight(r, 0));
        for (std::size_t k = 0; k < r; ++k)
            s[k][k] = 1;
        const std::size_t c = datum.simple_root_coords()[i];
        for (std::size_t k = 0; k < r; ++k)
            s[k][c] -= datum.simple_roots()[i][k];
        generators.push_back(std::move(s));
    }
    IntMatrix id(r, Weight(r, 0));
    for (std::size_t k = 0; k < r; ++k)
        id[k][k] = 1;

    std::map<IntMatrix, int> signs{{id, 1}};
    std::vector<IntMatrix> frontier{id};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto &m : frontier) {
            const int sgn = signs.at(m);
            for (const auto &g : generators) {
                IntMatrix p = detail::multiply(g, m);
                if (signs.emplace(p, -sgn).second)
                    next.push_back(std::move(p));
            }
        }
        frontier = std::move(next);
    }
    std::vector<WeylElement> elements;
    elements.reserve(signs.size());
    // identity first, then the rest in matrix order
    elements.push_back({id, 1});
    for (auto &[m, s] : signs)
        if (m != id)
            elements.push_back({m, s});
    return WeylGroup(std::move(elements));
}

/// Shared, lazily built Weyl group per datum.
inline std::shared_ptr<const WeylGroup> cached_weyl_group(const RootDatum &datum) {
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const WeylGroup>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(datum.key()); it != cache.end())
            return it->second;
    }
    auto group = std::make_shared<const WeylGroup>(weyl_group(datum));
    std::lock_guard lock(mutex);
    return cache.emplace(datum.key(), std::move(group)).first->second;
}

/// Action on torus elements compatible with the action on weights:
/// w(w.t) = (w^-1 w)(t), i.e. angles -> w^-T angles.
inline TorusElement act_on_torus(const WeylElement &w, const TorusElement &t) {
    // w has finite order, so w^-1 is its last nontrivial power
    IntMatrix inv = w.matrix;
    IntMatrix power = w.matrix;
    const std::size_t n = w.matrix.size();
    IntMatrix id(n, Weight(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        id[k][k] = 1;
    while (power != id) {
        inv = power;
        power = detail::multiply(power, w.matrix);
    }
    std::vector<Rational> angles(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            angles[i] += Rational(inv[j][i]) * t.angles()[j];
    return TorusElement(std::move(angles));
}

} // namespace dimdatum
