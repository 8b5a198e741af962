#pragma once

#include "vc1/matrix.hpp"
#include "vc1/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vc1::modecalc {

/// Polynomial over Q in named commuting indeterminates (unknown coefficients
/// like "a", "b", "alpha", and undeclared pairings like "(y,u)"). Mode
/// computations carry these exactly; a result claimed numeric must be free of
/// them.
class SymbolicScalar {
public:
    using Monomial = std::map<std::string, int>; // var -> exponent, no zeros

    SymbolicScalar() = default;
    SymbolicScalar(const Rational& c) { add(Monomial{}, c); }
    SymbolicScalar(long c) : SymbolicScalar(Rational(c)) {}

    static SymbolicScalar variable(const std::string& name)
    {
        SymbolicScalar s;
        s.add(Monomial{{name, 1}}, 1);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_value() const
    {
        if (terms_.empty())
            return 0;
        if (!is_constant())
            throw std::domain_error("SymbolicScalar: not indeterminate-free: " + to_string());
        return terms_.begin()->second;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SymbolicScalar& operator+=(const SymbolicScalar& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m, c);
        return *this;
    }
    SymbolicScalar& operator-=(const SymbolicScalar& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m, -c);
        return *this;
    }

    friend SymbolicScalar operator+(SymbolicScalar a, const SymbolicScalar& b) { return a += b; }
    friend SymbolicScalar operator-(SymbolicScalar a, const SymbolicScalar& b) { return a -= b; }
    friend SymbolicScalar operator-(const SymbolicScalar& a)
    {
        SymbolicScalar out;
        for (const auto& [m, c] : a.terms_)
            out.add(m, -c);
        return out;
    }

    friend SymbolicScalar operator*(const SymbolicScalar& a, const SymbolicScalar& b)
    {
        SymbolicScalar out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb)
                    m[v] += e;
                out.add(m, ca * cb);
            }
        return out;
    }

    friend SymbolicScalar operator*(const SymbolicScalar& a, const Rational& s)
    {
        SymbolicScalar out;
        for (const auto& [m, c] : a.terms_)
            out.add(m, c * s);
        return out;
    }
    friend SymbolicScalar operator*(const Rational& s, const SymbolicScalar& a) { return a * s; }

    bool operator==(const SymbolicScalar&) const = default;

    SymbolicScalar substituted(const std::string& var, const Rational& value) const
    {
        SymbolicScalar out;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(var);
            if (it == m.end()) {
                out.add(m, c);
                continue;
            }
            Rational f = c;
            for (int i = 0; i < it->second; ++i)
                f *= value;
            Monomial rest = m;
            rest.erase(var);
            out.add(rest, f);
        }
        return out;
    }

    /// For an expression linear in `var`: the coefficient of var^1.
    SymbolicScalar linear_coefficient(const std::string& var) const
    {
        SymbolicScalar out;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(var);
            if (it == m.end())
                continue;
            if (it->second != 1)
                throw std::domain_error("linear_coefficient: not linear in " + var);
            Monomial rest = m;
            rest.erase(var);
            out.add(rest, c);
        }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (const auto& [v, e] : m) {
                if (!mono.empty())
                    mono += "*";
                mono += v;
                if (e != 1)
                    mono += "^" + std::to_string(e);
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
    std::map<Monomial, Rational> terms_;
};

/// Solves the square linear system given by expressions that must vanish,
/// each affine-linear in the unknowns. Returns the values in unknown order.
inline std::vector<Rational> solve_affine_system(
    const std::vector<SymbolicScalar>& equations,
    const std::vector<std::string>& unknowns)
{
    const std::size_t n = unknowns.size();
    if (equations.size() != n)
        throw std::invalid_argument("solve_affine_system: need a square system");
    Matrix A(n, n);
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        SymbolicScalar residue = equations[i];
        for (std::size_t j = 0; j < n; ++j) {
            SymbolicScalar cj = equations[i].linear_coefficient(unknowns[j]);
            A(i, j) = cj.constant_value();
            residue = residue.substituted(unknowns[j], 0);
        }
        rhs[i] = -residue.constant_value();
    }
    return solve(A, rhs);
}

} // namespace vc1::modecalc
