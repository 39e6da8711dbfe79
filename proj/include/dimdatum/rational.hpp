#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace dimdatum {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0)
        throw InputError("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// "p/q" with q omitted when it is 1.
inline std::string to_string(const Rational &r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

inline Rational parse_rational(std::string_view text) {
    auto digits = [&](std::string_view part, bool allow_sign) {
        if (part.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+'))
            i = 1;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw InputError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+')
        n.erase(0, 1);
    BigInt d{std::string(den)};
    if (d == 0)
        throw InputError("rational with zero denominator '" + std::string(text) + "'");
    return Rational(BigInt(n), d);
}

inline bool is_integer(const Rational &r) { return denominator(r) == 1; }

/// Requires the value to fit in 64 bits.
inline std::int64_t to_int64(const BigInt &v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw ConsistencyError("integer " + v.str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Representative of r modulo 1 in [0, 1).
inline Rational frac_part(const Rational &r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt m = n % d;
    if (m < 0)
        m += d;
    return Rational(m, d);
}

} // namespace dimdatum
