#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), stored in the canonical
// power basis 1, x, ..., x^(phi(N)-1) of Q[x]/(Phi_N(x)).

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace dimdatum {

/// Dense integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<BigInt>;

namespace detail {

inline void trim(IntPoly &p) {
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

/// Exact division by a monic divisor; throws if a remainder is left.
inline IntPoly divide_exact(IntPoly num, const IntPoly &den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() - 1 < dd)
        throw ConsistencyError("polynomial division: divisor degree exceeds dividend");
    IntPoly quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        BigInt c = num[i];
        quot[i - dd] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0)
            throw ConsistencyError("polynomial division left a remainder");
    return quot;
}

inline IntPoly compute_cyclotomic(std::int64_t n, const std::map<std::int64_t, IntPoly> &known);

} // namespace detail

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

/// Phi_n, computed by dividing x^n - 1 by Phi_d for every proper divisor d.
/// Memoized; returned references stay valid for the program lifetime.
inline const IntPoly &cyclotomic_polynomial(std::int64_t n) {
    if (n < 1)
        throw InputError("cyclotomic polynomial order must be positive");
    static std::mutex mutex;
    static std::map<std::int64_t, IntPoly> table;
    std::lock_guard lock(mutex);
    if (auto it = table.find(n); it != table.end())
        return it->second;
    // fill divisors in increasing order so the recursion only reads the table
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            divisors.push_back(d);
    for (std::int64_t d : divisors)
        if (!table.contains(d))
            table.emplace(d, detail::compute_cyclotomic(d, table));
    return table.at(n);
}

namespace detail {

inline IntPoly compute_cyclotomic(std::int64_t n, const std::map<std::int64_t, IntPoly> &known) {
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0)
            p = divide_exact(std::move(p), known.at(d));
    return p;
}

} // namespace detail

class CyclotomicNumber {
public:
    CyclotomicNumber() : order_(1), coords_{Rational(0)} {}

    explicit CyclotomicNumber(const Rational &value, std::int64_t order = 1)
        : order_(order), coords_(static_cast<std::size_t>(euler_phi(order)), Rational(0)) {
        coords_[0] = value;
    }

    /// zeta_order^exponent.
    static CyclotomicNumber root_of_unity(std::int64_t order, std::int64_t exponent) {
        std::int64_t k = ((exponent % order) + order) % order;
        std::vector<Rational> poly(static_cast<std::size_t>(k) + 1, Rational(0));
        poly[static_cast<std::size_t>(k)] = 1;
        return CyclotomicNumber(order, reduce(order, std::move(poly)));
    }

    /// Sum of coeffs[k] * zeta_order^k, a group-ring element pushed into the field.
    static CyclotomicNumber from_group_ring(std::int64_t order, std::span<const Rational> coeffs) {
        return CyclotomicNumber(order, reduce(order, {coeffs.begin(), coeffs.end()}));
    }

    std::int64_t order() const { return order_; }
    const std::vector<Rational> &coords() const { return coords_; }

    /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N).
    CyclotomicNumber embed(std::int64_t target) const {
        if (target % order_ != 0)
            throw InputError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                             std::to_string(target) + ")");
        if (target == order_)
            return *this;
        const std::size_t step = static_cast<std::size_t>(target / order_);
        std::vector<Rational> poly((coords_.size() - 1) * step + 1, Rational(0));
        for (std::size_t i = 0; i < coords_.size(); ++i)
            poly[i * step] = coords_[i];
        return CyclotomicNumber(target, reduce(target, std::move(poly)));
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0)
                return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational())
            throw ConsistencyError("cyclotomic number " + to_string() + " is not rational");
        return coords_[0];
    }

    /// Complex conjugate, zeta -> zeta^-1.
    CyclotomicNumber conjugate() const {
        std::vector<Rational> poly(static_cast<std::size_t>(order_), Rational(0));
        for (std::size_t i = 0; i < coords_.size(); ++i)
            poly[(static_cast<std::size_t>(order_) - i) % static_cast<std::size_t>(order_)] += coords_[i];
        return CyclotomicNumber(order_, reduce(order_, std::move(poly)));
    }

    CyclotomicNumber operator-() const {
        CyclotomicNumber r = *this;
        for (auto &c : r.coords_)
            c = -c;
        return r;
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber &a, const CyclotomicNumber &b) {
        const std::int64_t n = std::lcm(a.order_, b.order_);
        CyclotomicNumber x = a.embed(n), y = b.embed(n);
        for (std::size_t i = 0; i < x.coords_.size(); ++i)
            x.coords_[i] += y.coords_[i];
        return x;
    }

    friend CyclotomicNumber operator-(const CyclotomicNumber &a, const CyclotomicNumber &b) { return a + (-b); }

    friend CyclotomicNumber operator*(const CyclotomicNumber &a, const CyclotomicNumber &b) {
        const std::int64_t n = std::lcm(a.order_, b.order_);
        CyclotomicNumber x = a.embed(n), y = b.embed(n);
        std::vector<Rational> poly(x.coords_.size() + y.coords_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < x.coords_.size(); ++i) {
            if (x.coords_[i] == 0)
                continue;
            for (std::size_t j = 0; j < y.coords_.size(); ++j)
                poly[i + j] += x.coords_[i] * y.coords_[j];
        }
        return CyclotomicNumber(n, reduce(n, std::move(poly)));
    }

    friend bool operator==(const CyclotomicNumber &a, const CyclotomicNumber &b) {
        const std::int64_t n = std::lcm(a.order_, b.order_);
        return a.embed(n).coords_ == b.embed(n).coords_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + dimdatum::to_string(coords_[i]) + ")";
            if (i > 0)
                s += "*z" + std::to_string(order_) + "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    CyclotomicNumber(std::int64_t order, std::vector<Rational> coords) : order_(order), coords_(std::move(coords)) {}

    /// Remainder of poly modulo the monic Phi_order, padded to length phi(order).
    static std::vector<Rational> reduce(std::int64_t order, std::vector<Rational> poly) {
        const IntPoly &phi = cyclotomic_polynomial(order);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t i = poly.size(); i-- > deg;) {
            if (poly[i] == 0)
                continue;
            Rational c = poly[i];
            for (std::size_t j = 0; j <= deg; ++j)
                if (phi[j] != 0)
                    poly[i - deg + j] -= c * Rational(phi[j]);
        }
        poly.resize(deg, Rational(0));
        return poly;
    }

    std::int64_t order_;
    std::vector<Rational> coords_;
};

} // namespace dimdatum
