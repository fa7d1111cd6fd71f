#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "kadj/error.hpp"

namespace kadj {

// The only scalar types of the math core: arbitrary-precision integers and
// always-reduced fractions with positive denominator (both invariants are
// maintained by boost::multiprecision).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

// Strict parser for the wire format "p" / "p/q" (optional leading '-').
// `field` names the offending location in diagnostics.
inline Rational parse_rational(const std::string& s, const std::string& field) {
    auto fail = [&]() -> Rational {
        throw InputError(field + ": cannot parse rational '" + s + "'");
    };
    if (s.empty()) return fail();
    std::size_t i = 0;
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t j = from; j < to; ++j)
            if (s[j] < '0' || s[j] > '9') return false;
        return true;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits(i, s.size())) return fail();
        return Rational(Integer(s));
    }
    if (!digits(i, slash)) return fail();
    std::size_t j = slash + 1;
    if (!digits(j, s.size())) return fail();
    Integer p(s.substr(0, slash));
    Integer q(s.substr(slash + 1));
    if (q == 0) throw InputError(field + ": zero denominator in '" + s + "'");
    return Rational(p) / Rational(q);
}

inline bool is_zero_vector(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Projective normalization used for hyperplane normals and Plucker vectors:
// clear denominators, divide by the gcd of the entries, and flip the sign so
// the first nonzero entry is positive. Entries of the result are integral.
inline std::vector<Rational> normalize_primitive(const std::vector<Rational>& v) {
    if (is_zero_vector(v)) throw InputError("cannot normalize the zero vector");
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, den(x));
    std::vector<Integer> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = num(v[i]) * (l / den(v[i]));
    Integer g = 0;
    for (const auto& x : w) g = gcd(g, x);
    int sign = 0;
    for (const auto& x : w) {
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    }
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(w[i] / g * sign);
    return out;
}

inline unsigned long long binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace kadj
