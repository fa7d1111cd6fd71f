#pragma once

#include <string>
#include <vector>

#include "kadj/rational.hpp"

namespace kadj {

// Integer polynomial in one variable t; coefficients stored low-to-high,
// trailing zeros trimmed.
struct IntPoly {
    std::vector<Integer> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }

    Integer coeff(std::size_t i) const { return i < c.size() ? c[i] : Integer(0); }

    Integer eval(const Integer& t) const {
        Integer r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
        return r;
    }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    // High-to-low coefficient list, padded to the given degree.
    std::vector<Integer> coeffs_high_to_low(int deg) const {
        std::vector<Integer> out;
        for (int i = deg; i >= 0; --i) out.push_back(coeff(static_cast<std::size_t>(i)));
        return out;
    }

    std::string str() const {
        if (c.empty()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            Integer a = c[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            if (!s.empty()) s += a > 0 ? " + " : " - ";
            else if (a < 0) s += "-";
            Integer m = abs(a);
            if (m != 1 || i == 0) s += m.str();
            if (i > 0) s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s;
    }
};

} // namespace kadj
