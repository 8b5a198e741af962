#pragma once

#include "vc1/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace vc1::zhu {

/// Polynomial in two commuting variables x, y over the rationals, stored
/// sparsely by exponent pair.
class BiPolynomial {
public:
    using Key = std::pair<int, int>; // (deg x, deg y)

    BiPolynomial() = default;
    explicit BiPolynomial(const Rational& c) { add_term(0, 0, c); }

    static BiPolynomial var_x() { return monomial(1, 0, 1); }
    static BiPolynomial var_y() { return monomial(0, 1, 1); }

    static BiPolynomial monomial(int dx, int dy, const Rational& c)
    {
        BiPolynomial p;
        p.add_term(dx, dy, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational coeff(int dx, int dy) const
    {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const
    {
        int d = -1;
        for (const auto& [k, c] : terms_)
            d = std::max(d, k.first + k.second);
        return d;
    }

    void add_term(int dx, int dy, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find({dx, dy});
        if (it == terms_.end()) {
            terms_.emplace(Key{dx, dy}, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BiPolynomial& operator+=(const BiPolynomial& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k.first, k.second, c);
        return *this;
    }
    BiPolynomial& operator-=(const BiPolynomial& o)
    {
        for (const auto& [k, c] : o.terms_)
            add_term(k.first, k.second, -c);
        return *this;
    }
    BiPolynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(BiPolynomial a, const Rational& s) { return a *= s; }
    friend BiPolynomial operator*(const Rational& s, BiPolynomial a) { return a *= s; }

    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b)
    {
        BiPolynomial out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }

    bool operator==(const BiPolynomial&) const = default;

    Rational eval(const Rational& x, const Rational& y) const
    {
        Rational total = 0;
        for (const auto& [k, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < k.first; ++i)
                t *= x;
            for (int i = 0; i < k.second; ++i)
                t *= y;
            total += t;
        }
        return total;
    }

    /// Graded-lex rendering, highest total degree first, x before y within a
    /// degree, e.g. "x^2 - 2*x*y + y^2 - 1".
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        // sort keys: total degree descending, then x-degree descending
        std::map<std::pair<int, std::pair<int, int>>, Rational> ordered;
        for (const auto& [k, c] : terms_)
            ordered[{-(k.first + k.second), {-k.first, -k.second}}] = c;
        std::ostringstream os;
        bool first = true;
        for (const auto& [ok, c] : ordered) {
            int dx = -ok.second.first, dy = -ok.second.second;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0)
                    os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::string mono;
            if (dx > 0)
                mono += dx == 1 ? "x" : "x^" + std::to_string(dx);
            if (dy > 0) {
                if (!mono.empty())
                    mono += "*";
                mono += dy == 1 ? "y" : "y^" + std::to_string(dy);
            }
            if (mono.empty())
                os << rat_str(mag);
            else if (mag == 1)
                os << mono;
            else
                os << rat_str(mag) << "*" << mono;
        }
        return os.str();
    }

private:
    std::map<Key, Rational> terms_;
};

} // namespace vc1::zhu
