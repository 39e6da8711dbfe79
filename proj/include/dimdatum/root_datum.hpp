#pragma once

// Root data for products of simply connected classical simple factors
// (types A-D, rank <= 4) and tori. Weights are integer vectors: fundamental
// weight coordinates on simple factors, standard coordinates on tori.
//
// Inner product: per simple factor the invariant form with short roots of
// squared length 2; identity on torus directions.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace dimdatum {

using Weight = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

enum class FactorType { A, B, C, D, Torus };

struct FactorSpec {
    FactorType type;
    int rank;

    friend bool operator==(const FactorSpec &, const FactorSpec &) = default;
};

inline std::string factor_name(const FactorSpec &f) {
    switch (f.type) {
    case FactorType::A: return "A" + std::to_string(f.rank);
    case FactorType::B: return "B" + std::to_string(f.rank);
    case FactorType::C: return "C" + std::to_string(f.rank);
    case FactorType::D: return "D" + std::to_string(f.rank);
    case FactorType::Torus: return "T" + std::to_string(f.rank);
    }
    return "?";
}

namespace detail {

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
inline RationalMatrix invert(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw ConsistencyError("singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline Rational determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0)
                continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

/// Simple roots of a classical factor in orthonormal epsilon coordinates.
inline IntMatrix epsilon_simple_roots(const FactorSpec &f) {
    const auto n = static_cast<std::size_t>(f.rank);
    IntMatrix roots;
    switch (f.type) {
    case FactorType::A:
        for (std::size_t i = 0; i < n; ++i) {
            Weight r(n + 1, 0);
            r[i] = 1;
            r[i + 1] = -1;
            roots.push_back(r);
        }
        break;
    case FactorType::B:
    case FactorType::C:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Weight r(n, 0);
            r[i] = 1;
            r[i + 1] = -1;
            roots.push_back(r);
        }
        {
            Weight r(n, 0);
            r[n - 1] = f.type == FactorType::B ? 1 : 2;
            roots.push_back(r);
        }
        break;
    case FactorType::D:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Weight r(n, 0);
            r[i] = 1;
            r[i + 1] = -1;
            roots.push_back(r);
        }
        {
            Weight r(n, 0);
            r[n - 2] = 1;
            r[n - 1] = 1;
            roots.push_back(r);
        }
        break;
    case FactorType::Torus:
        break;
    }
    return roots;
}

} // namespace detail

class RootDatum {
public:
    const std::vector<FactorSpec> &factors() const { return factors_; }
    std::size_t rank() const { return rank_; }
    /// First weight coordinate belonging to each factor.
    const std::vector<std::size_t> &offsets() const { return offsets_; }
    /// Block-diagonal Cartan matrix over the simple-factor coordinates,
    /// entry (i, j) = 2<a_i, a_j>/<a_j, a_j>, indexed by simple root.
    const IntMatrix &cartan() const { return cartan_; }
    const std::vector<Weight> &simple_roots() const { return simple_roots_; }
    /// Weight coordinate dual to each simple root.
    const std::vector<std::size_t> &simple_root_coords() const { return simple_root_coords_; }
    const std::vector<std::string> &basis_labels() const { return basis_labels_; }
    const RationalMatrix &inner_product() const { return inner_product_; }
    const Weight &rho() const { return rho_; }
    const std::vector<Weight> &positive_roots() const { return positive_roots_; }
    bool is_torus_coord(std::size_t i) const { return torus_coord_[i]; }
    /// Canonical text form, e.g. "A1xT1"; used as a cache key.
    const std::string &key() const { return key_; }

    Rational inner(const Weight &a, const Weight &b) const {
        return Rational(BigInt(scaled_inner(a, b)), BigInt(gram_scale_));
    }

    /// <a, b> multiplied by gram_scale(); exact integer.
    std::int64_t scaled_inner(const Weight &a, const Weight &b) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < rank_; ++j)
                s += a[i] * scaled_gram_[i][j] * b[j];
        }
        return s;
    }
    std::int64_t gram_scale() const { return gram_scale_; }

    bool is_dominant(const Weight &w) const {
        for (std::size_t c : simple_root_coords_)
            if (w[c] < 0)
                return false;
        return true;
    }

    /// s_i(w) = w - <w, a_i^vee> a_i.
    Weight reflect(const Weight &w, std::size_t i) const {
        Weight r = w;
        const std::int64_t c = w[simple_root_coords_[i]];
        if (c != 0)
            for (std::size_t k = 0; k < rank_; ++k)
                r[k] -= c * simple_roots_[i][k];
        return r;
    }

    Weight dominant_representative(Weight w) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
                if (w[simple_root_coords_[i]] < 0) {
                    w = reflect(w, i);
                    changed = true;
                }
            }
        }
        return w;
    }

    std::vector<Weight> weyl_orbit(const Weight &w) const {
        std::set<Weight> seen{w};
        std::vector<Weight> frontier{w};
        while (!frontier.empty()) {
            std::vector<Weight> next;
            for (const auto &x : frontier)
                for (std::size_t i = 0; i < simple_roots_.size(); ++i) {
                    Weight y = reflect(x, i);
                    if (seen.insert(y).second)
                        next.push_back(std::move(y));
                }
            frontier = std::move(next);
        }
        return {seen.begin(), seen.end()};
    }

    friend bool operator==(const RootDatum &a, const RootDatum &b) { return a.factors_ == b.factors_; }

    friend RootDatum build_root_datum(const std::vector<FactorSpec> &spec);

private:
    RootDatum() = default;

    std::vector<FactorSpec> factors_;
    std::size_t rank_ = 0;
    std::vector<std::size_t> offsets_;
    IntMatrix cartan_;
    std::vector<Weight> simple_roots_;
    std::vector<std::size_t> simple_root_coords_;
    std::vector<std::string> basis_labels_;
    RationalMatrix inner_product_;
    IntMatrix scaled_gram_;
    std::int64_t gram_scale_ = 1;
    Weight rho_;
    std::vector<Weight> positive_roots_;
    std::vector<bool> torus_coord_;
    std::string key_;
};

inline RootDatum build_root_datum(const std::vector<FactorSpec> &spec) {
    if (spec.empty())
        throw InputError("group specification has no factors");
    RootDatum d;
    d.factors_ = spec;
    for (std::size_t f = 0; f < spec.size(); ++f) {
        const auto &fs = spec[f];
        const std::string where = "factor " + std::to_string(f) + " (" + factor_name(fs) + ")";
        if (fs.type == FactorType::Torus) {
            if (fs.rank < 1)
                throw InputError(where + ": torus rank must be at least 1");
        } else {
            if (fs.rank < 1 || fs.rank > 4)
                throw InputError(where + ": simple factor rank must be in 1..4");
            if (fs.type == FactorType::D && fs.rank == 1)
                throw InputError(where + ": D1 is abelian; use a torus factor");
        }
        d.offsets_.push_back(d.rank_);
        d.rank_ += static_cast<std::size_t>(fs.rank);
    }
    const std::size_t r = d.rank_;
    d.inner_product_.assign(r, std::vector<Rational>(r, Rational(0)));
    d.torus_coord_.assign(r, false);
    d.rho_.assign(r, 0);

    for (std::size_t f = 0; f < spec.size(); ++f) {
        const auto &fs = spec[f];
        const std::size_t off = d.offsets_[f];
        const auto n = static_cast<std::size_t>(fs.rank);
        const std::string tag = spec.size() == 1 ? "" : factor_name(fs) + "#" + std::to_string(f) + ".";
        if (fs.type == FactorType::Torus) {
            for (std::size_t i = 0; i < n; ++i) {
                d.inner_product_[off + i][off + i] = 1;
                d.torus_coord_[off + i] = true;
                d.basis_labels_.push_back(tag + "e" + std::to_string(i + 1));
            }
            continue;
        }
        // Gram matrix of simple roots, rescaled so the shortest has length^2 2.
        const IntMatrix eps = detail::epsilon_simple_roots(fs);
        IntMatrix gram(n, Weight(n, 0));
        std::int64_t shortest = INT64_MAX;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < eps[i].size(); ++k)
                    gram[i][j] += eps[i][k] * eps[j][k];
            }
        for (std::size_t i = 0; i < n; ++i)
            shortest = std::min(shortest, gram[i][i]);
        RationalMatrix roots_gram(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                roots_gram[i][j] = Rational(BigInt(2 * gram[i][j]), BigInt(shortest));

        RationalMatrix cartan(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cartan[i][j] = 2 * roots_gram[i][j] / roots_gram[j][j];
        // <w_i, w_j> = (A^-1 D)_{ij}, D = diag(<a_j, a_j>/2)
        RationalMatrix inv = detail::invert(cartan);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                d.inner_product_[off + i][off + j] = inv[i][j] * roots_gram[j][j] / 2;
            d.rho_[off + i] = 1;
            d.basis_labels_.push_back(tag + "w" + std::to_string(i + 1));
        }
        for (std::size_t i = 0; i < n; ++i) {
            Weight root(r, 0);
            Weight cartan_row(r, 0);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_integer(cartan[i][j]))
                    throw ConsistencyError("non-integral Cartan entry in " + factor_name(fs));
                root[off + j] = to_int64(numerator(cartan[i][j]));
            }
            d.simple_roots_.push_back(root);
            d.simple_root_coords_.push_back(off + i);
        }
    }

    // Cartan matrix over simple roots
    const std::size_t s = d.simple_roots_.size();
    d.cartan_.assign(s, Weight(s, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            d.cartan_[i][j] = d.simple_roots_[i][d.simple_root_coords_[j]];

    BigInt scale = 1;
    for (const auto &row : d.inner_product_)
        for (const auto &x : row)
            scale = boost::multiprecision::lcm(scale, denominator(x));
    d.gram_scale_ = to_int64(scale);
    d.scaled_gram_.assign(r, Weight(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            d.scaled_gram_[i][j] = to_int64(numerator(d.inner_product_[i][j] * Rational(scale)));

    // invariants: symmetric, positive definite, Cartan reconstructible from the form
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (d.inner_product_[i][j] != d.inner_product_[j][i])
                throw ConsistencyError("inner product is not symmetric for " + factor_name(spec[0]));
    for (std::size_t k = 1; k <= r; ++k) {
        RationalMatrix minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor[i][j] = d.inner_product_[i][j];
        if (detail::determinant(std::move(minor)) <= 0)
            throw ConsistencyError("inner product is not positive definite");
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            Rational a = 2 * d.inner(d.simple_roots_[i], d.simple_roots_[j]) /
                         d.inner(d.simple_roots_[j], d.simple_roots_[j]);
            if (a != d.cartan_[i][j])
                throw ConsistencyError("Cartan matrix does not match the inner product");
        }

    // positive roots: the Weyl orbits of the simple roots, on the positive side of rho
    std::set<Weight> roots;
    for (const auto &a : d.simple_roots_)
        for (auto &w : d.weyl_orbit(a))
            roots.insert(std::move(w));
    for (const auto &a : roots)
        if (d.scaled_inner(a, d.rho_) > 0)
            d.positive_roots_.push_back(a);

    for (std::size_t f = 0; f < spec.size(); ++f) {
        if (f)
            d.key_ += "x";
        d.key_ += factor_name(spec[f]);
    }
    return d;
}

/// Element exp(2 pi i angles) of the maximal torus; angles are turn
/// fractions reduced into [0, 1), so a weight w evaluates to exp(2 pi i w.angles).
class TorusElement {
public:
    TorusElement() = default;
    explicit TorusElement(std::vector<Rational> angles) : angles_(std::move(angles)) {
        for (auto &a : angles_)
            a = frac_part(a);
    }

    static TorusElement identity(std::size_t rank) { return TorusElement(std::vector<Rational>(rank, Rational(0))); }

    const std::vector<Rational> &angles() const { return angles_; }
    std::size_t rank() const { return angles_.size(); }

    /// lcm of the angle denominators.
    std::int64_t order() const {
        std::int64_t n = 1;
        for (const auto &a : angles_)
            n = lcm64(n, to_int64(denominator(a)));
        return n;
    }

    /// angles scaled by n (n must be a multiple of order()).
    Weight scaled_angles(std::int64_t n) const {
        Weight k;
        k.reserve(angles_.size());
        for (const auto &a : angles_)
            k.push_back(to_int64(numerator(a * Rational(n))));
        return k;
    }

    friend bool operator==(const TorusElement &, const TorusElement &) = default;
    friend auto operator<=>(const TorusElement &a, const TorusElement &b) {
        if (a.angles_ < b.angles_)
            return std::strong_ordering::less;
        if (b.angles_ < a.angles_)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    std::vector<Rational> angles_;
};

/// Exponent k with w(t) = zeta_n^k, for n a multiple of t.order().
inline std::int64_t pairing_exponent(const Weight &w, const Weight &scaled_angles, std::int64_t n) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        k = (k + (w[i] % n) * scaled_angles[i]) % n;
    return (k + n) % n;
}

/// The character w evaluated at t, as an element of Q(zeta_N) with N = t.order().
inline CyclotomicNumber cyclotomic_eval(const Weight &w, const TorusElement &t) {
    if (w.size() != t.rank())
        throw InputError("weight length does not match torus element rank");
    const std::int64_t n = t.order();
    return CyclotomicNumber::root_of_unity(n, pairing_exponent(w, t.scaled_angles(n), n));
}

} // namespace dimdatum
