#pragma once

#include "vc1/matrix.hpp"
#include "vc1/partition.hpp"
#include "vc1/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace vc1::virasoro {

struct VermaParams {
    Rational c; // central charge
    Rational h; // highest weight
    bool operator==(const VermaParams&) const = default;
};

/// Element of the Verma module V(c,h), stored as a linear combination of PBW
/// basis vectors L(-n1)...L(-nk) v_h indexed by partitions [n1 >= ... >= nk].
/// All stored terms share one level; zero coefficients are never stored.
struct ModuleElement {
    VermaParams params;
    int level = 0;
    std::map<Partition, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    ModuleElement& add_term(const Partition& p, const Rational& coeff)
    {
        if (coeff == 0)
            return *this;
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms.emplace(p, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0)
                terms.erase(it);
        }
        return *this;
    }

    ModuleElement& operator+=(const ModuleElement& o)
    {
        for (const auto& [p, c] : o.terms)
            add_term(p, c);
        return *this;
    }

    ModuleElement& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [p, c] : terms)
            c *= s;
        return *this;
    }
};

inline ModuleElement highest_weight_vector(const VermaParams& params)
{
    ModuleElement e{params, 0, {}};
    e.add_term({}, 1);
    return e;
}

inline ModuleElement basis_vector(const VermaParams& params, const Partition& p)
{
    ModuleElement e{params, weight(p), {}};
    e.add_term(p, 1);
    return e;
}

namespace detail {

// L(m) applied to the PBW word given by partition w, normal-ordered back into
// the PBW basis. Uses [L(m),L(n)] = (m-n)L(m+n) + delta_{m+n,0}(m^3-m)/12 c,
// L(n)v_h = 0 (n>0) and L(0)v_h = h v_h.
inline std::map<Partition, Rational> act(int m, const Partition& w,
                                         const VermaParams& params)
{
    std::map<Partition, Rational> out;
    auto accumulate = [&out](const Partition& p, const Rational& c) {
        if (c == 0)
            return;
        auto it = out.find(p);
        if (it == out.end())
            out.emplace(p, c);
        else {
            it->second += c;
            if (it->second == 0)
                out.erase(it);
        }
    };

    if (m == 0) {
        accumulate(w, params.h + weight(w));
        return out;
    }
    if (m < 0) {
        int mm = -m;
        if (w.empty() || mm >= w.front()) {
            Partition p;
            p.reserve(w.size() + 1);
            p.push_back(mm);
            p.insert(p.end(), w.begin(), w.end());
            accumulate(p, 1);
            return out;
        }
        // L(m) L(-n1) = L(-n1) L(m) + (m+n1) L(m-n1)
        int n1 = w.front();
        Partition rest(w.begin() + 1, w.end());
        for (const auto& [p, c] : act(m, rest, params))
            for (const auto& [q, d] : act(-n1, p, params))
                accumulate(q, c * d);
        for (const auto& [q, d] : act(m - n1, rest, params))
            accumulate(q, Rational(m + n1) * d);
        return out;
    }
    // m > 0
    if (w.empty())
        return out; // annihilates the highest weight vector
    int n1 = w.front();
    Partition rest(w.begin() + 1, w.end());
    for (const auto& [p, c] : act(m, rest, params))
        for (const auto& [q, d] : act(-n1, p, params))
            accumulate(q, c * d);
    for (const auto& [q, d] : act(m - n1, rest, params))
        accumulate(q, Rational(m + n1) * d);
    if (m == n1) {
        Rational central = Rational(static_cast<long>(m) * m * m - m, 12) * params.c;
        accumulate(rest, central);
    }
    return out;
}

} // namespace detail

/// L(m) . e, expressed in the PBW basis. The result level is level - m.
inline ModuleElement apply_mode(int m, const ModuleElement& e)
{
    ModuleElement out{e.params, e.level - m, {}};
    for (const auto& [w, c] : e.terms)
        for (const auto& [p, d] : detail::act(m, w, e.params))
            out.add_term(p, c * d);
    if (out.is_zero())
        out.level = std::max(out.level, 0);
    return out;
}

/// Shapovalov/Gram matrix at the given level, basis ordered as partitions().
inline Matrix gram_matrix(const VermaParams& params, int level)
{
    if (level < 0)
        throw std::invalid_argument("gram_matrix: negative level");
    std::vector<Partition> basis = partitions(level);
    const std::size_t n = basis.size();
    Matrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ModuleElement col = basis_vector(params, basis[j]);
        for (std::size_t i = 0; i < n; ++i) {
            // apply L(mu_1), ..., L(mu_k) with mu_1 the largest part
            ModuleElement e = col;
            for (int part : basis[i])
                e = apply_mode(part, e);
            auto it = e.terms.find(Partition{});
            g(i, j) = (it == e.terms.end()) ? Rational(0) : it->second;
        }
    }
    return g;
}

/// Basis of the singular vectors at the given level: elements annihilated by
/// L(1) and L(2) (hence by all positive modes). Each vector is normalized so
/// its first nonzero coefficient, in reverse-lexicographic partition order,
/// equals 1.
inline std::vector<ModuleElement> singular_vectors(const VermaParams& params, int level)
{
    if (level < 1)
        throw std::invalid_argument("singular_vectors: level must be >= 1");
    std::vector<Partition> basis = partitions(level);
    std::vector<Partition> b1 = partitions(level - 1);
    std::vector<Partition> b2 = level >= 2 ? partitions(level - 2) : std::vector<Partition>{};

    std::map<Partition, std::size_t> idx1, idx2;
    for (std::size_t i = 0; i < b1.size(); ++i)
        idx1[b1[i]] = i;
    for (std::size_t i = 0; i < b2.size(); ++i)
        idx2[b2[i]] = i;

    Matrix constraints(b1.size() + b2.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        ModuleElement v = basis_vector(params, basis[j]);
        for (const auto& [p, c] : apply_mode(1, v).terms)
            constraints(idx1.at(p), j) = c;
        for (const auto& [p, c] : apply_mode(2, v).terms)
            constraints(b1.size() + idx2.at(p), j) = c;
    }

    std::vector<ModuleElement> out;
    for (const auto& vec : nullspace(constraints)) {
        ModuleElement e{params, level, {}};
        Rational lead = 0;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (lead == 0 && vec[j] != 0)
                lead = vec[j];
        for (std::size_t j = 0; j < basis.size(); ++j)
            e.add_term(basis[j], vec[j] / lead);
        out.push_back(std::move(e));
    }
    return out;
}

/// Graded dimensions of the irreducible quotient L(c,h): the Gram rank at
/// each level 0..maxLevel.
inline std::vector<long> graded_dims_irreducible(const VermaParams& params, int max_level)
{
    if (max_level < 0)
        throw std::invalid_argument("graded_dims_irreducible: negative level");
    std::vector<long> dims;
    dims.reserve(max_level + 1);
    for (int n = 0; n <= max_level; ++n)
        dims.push_back(static_cast<long>(rank(gram_matrix(params, n))));
    return dims;
}

} // namespace vc1::virasoro
