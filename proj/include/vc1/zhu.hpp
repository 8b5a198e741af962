#pragma once

#include "vc1/bipoly.hpp"
#include "vc1/matrix.hpp"
#include "vc1/verma.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vc1::zhu {

/// A word L(-w[0]) L(-w[1]) ... v_h in the Verma module, outermost mode first.
/// Entries are the positive integers n of L(-n); no ordering is assumed.
using Word = std::vector<int>;

inline int word_level(const Word& w)
{
    int lev = 0;
    for (int n : w)
        lev += n;
    return lev;
}

inline std::string word_str(const Word& w)
{
    if (w.empty())
        return "v";
    std::ostringstream os;
    for (int n : w)
        os << "L(-" << n << ")";
    os << "v";
    return os.str();
}

struct TraceStep {
    Word word;
    std::string rule;
    // [word] = sum of factor * [child] in the bimodule polynomial ring
    std::vector<std::pair<Word, BiPolynomial>> children;
};

struct ReductionTrace {
    std::map<Word, Rational> input;
    std::vector<TraceStep> steps; // bottom-up: children precede parents
    BiPolynomial output;

    /// Re-evaluates the logged rewrite steps from scratch; must reproduce
    /// `output` exactly. Returns the replayed value.
    BiPolynomial replay() const
    {
        std::map<Word, BiPolynomial> value;
        value[Word{}] = BiPolynomial(Rational(1));
        for (const auto& step : steps) {
            BiPolynomial acc;
            for (const auto& [child, factor] : step.children) {
                auto it = value.find(child);
                if (it == value.end())
                    throw std::logic_error("trace replay: child before parent");
                acc += factor * it->second;
            }
            value[step.word] = acc;
        }
        BiPolynomial total;
        for (const auto& [w, c] : input) {
            auto it = value.find(w);
            if (it == value.end())
                throw std::logic_error("trace replay: missing input word");
            total += it->second * c;
        }
        return total;
    }
};

/// Rewrites Verma-module words into the bimodule polynomial ring C[x,y].
/// Reduction rules:
///   L(-m)w ~ -2L(-m+1)w - L(-m+2)w                 for m >= 3
///   [L(-1)w] = x[w] - [w]y - (h + level(w))[w]
///   [L(-2)w] = 2[w]y - x[w] + (h + level(w))[w]
/// (the last two solve the pair of identities x[w] = [(L(-2)+2L(-1)+L(0))w]
/// and [w]y = [(L(-2)+L(-1))w]). Each rule strictly shrinks the pair
/// (outermost mode, word length), so the rewriting terminates.
class ZhuReducer {
public:
    explicit ZhuReducer(virasoro::VermaParams params) : params_(std::move(params)) {}

    const virasoro::VermaParams& params() const { return params_; }

    BiPolynomial reduce_word(const Word& w) const
    {
        auto it = memo_.find(w);
        if (it != memo_.end())
            return it->second;
        BiPolynomial result;
        TraceStep step{w, "", {}};
        rewrite(w, step);
        for (const auto& [child, factor] : step.children)
            result += factor * reduce_word(child);
        if (w.empty())
            result = BiPolynomial(Rational(1));
        memo_.emplace(w, result);
        return result;
    }

    BiPolynomial reduce(const virasoro::ModuleElement& e) const
    {
        if (!(e.params == params_))
            throw std::invalid_argument("ZhuReducer: element from a different Verma module");
        BiPolynomial out;
        for (const auto& [p, c] : e.terms)
            out += reduce_word(p) * c;
        return out;
    }

    ReductionTrace reduce_with_trace(const virasoro::ModuleElement& e) const
    {
        if (!(e.params == params_))
            throw std::invalid_argument("ZhuReducer: element from a different Verma module");
        ReductionTrace trace;
        for (const auto& [p, c] : e.terms)
            trace.input.emplace(Word(p.begin(), p.end()), c);
        std::map<Word, bool> logged;
        logged[Word{}] = true;
        for (const auto& [w, c] : trace.input)
            log_steps(w, logged, trace.steps);
        trace.output = reduce(e);
        return trace;
    }

private:
    // Expands [w] one step into children with polynomial factors.
    void rewrite(const Word& w, TraceStep& step) const
    {
        if (w.empty()) {
            step.rule = "base";
            return;
        }
        int m = w.front();
        Word rest(w.begin() + 1, w.end());
        if (m >= 3) {
            step.rule = "high-mode";
            Word a = rest, b = rest;
            a.insert(a.begin(), m - 1);
            b.insert(b.begin(), m - 2);
            // L(-(m-2)) with m=2 never occurs here since m >= 3; m-2 may be 1
            step.children.emplace_back(std::move(a), BiPolynomial(Rational(-2)));
            step.children.emplace_back(std::move(b), BiPolynomial(Rational(-1)));
            return;
        }
        Rational lh = params_.h + word_level(rest);
        if (m == 1) {
            step.rule = "mode-1";
            BiPolynomial f = BiPolynomial::var_x() - BiPolynomial::var_y()
                - BiPolynomial(lh);
            step.children.emplace_back(rest, std::move(f));
            return;
        }
        step.rule = "mode-2";
        BiPolynomial f = Rational(2) * BiPolynomial::var_y() - BiPolynomial::var_x()
            + BiPolynomial(lh);
        step.children.emplace_back(rest, std::move(f));
    }

    void log_steps(const Word& w, std::map<Word, bool>& logged,
                   std::vector<TraceStep>& steps) const
    {
        if (logged.count(w))
            return;
        logged[w] = true;
        TraceStep step{w, "", {}};
        rewrite(w, step);
        for (const auto& [child, factor] : step.children)
            log_steps(child, logged, steps);
        steps.push_back(std::move(step));
    }

    virasoro::VermaParams params_;
    mutable std::map<Word, BiPolynomial> memo_;
};

inline BiPolynomial reduce_to_bipoly(const virasoro::ModuleElement& e)
{
    return ZhuReducer(e.params).reduce(e);
}

namespace detail {

// (x-y) prod_{i=1}^{m} [ (x-y)^2 - 2 i^2 (x+y) + i^4 ], valid for m >= 0.
// The m=0 case is the fusion polynomial of the vacuum module.
inline BiPolynomial generator_poly(int m)
{
    BiPolynomial x = BiPolynomial::var_x(), y = BiPolynomial::var_y();
    BiPolynomial f = x - y;
    for (int i = 1; i <= m; ++i) {
        Rational i2 = Rational(i) * i;
        BiPolynomial factor = (x - y) * (x - y) - Rational(2) * i2 * (x + y)
            + BiPolynomial(i2 * i2);
        f = f * factor;
    }
    return f;
}

} // namespace detail

/// The degree-(2r+1) generator of the fusion ideal, normalized so the
/// coefficient of x^{2r+1} equals +1.
inline BiPolynomial closed_form_generator(int r)
{
    if (r < 1)
        throw std::invalid_argument("closed_form_generator: r must be >= 1");
    BiPolynomial f = detail::generator_poly(r);
    Rational lead = f.coeff(2 * r + 1, 0);
    if (lead != 1)
        f *= Rational(1) / lead;
    return f;
}

/// Recomputes the generator from the level-(2r+1) singular vector of
/// V(1, r^2): reduce it to the bimodule polynomial ring and renormalize.
inline BiPolynomial generator_from_singular_vector(int r)
{
    if (r < 1)
        throw std::invalid_argument("generator_from_singular_vector: r must be >= 1");
    virasoro::VermaParams params{1, Rational(r) * r};
    auto sv = virasoro::singular_vectors(params, 2 * r + 1);
    if (sv.size() != 1)
        throw std::logic_error("generator_from_singular_vector: expected a unique singular vector");
    BiPolynomial f = reduce_to_bipoly(sv[0]);
    Rational lead = f.coeff(2 * r + 1, 0);
    if (lead == 0)
        throw std::logic_error("generator_from_singular_vector: degenerate reduction");
    if (lead != 1)
        f *= Rational(1) / lead;
    return f;
}

/// Reconstructs the generator by sampling and interpolation: writing
/// f = sum_i a_i(x) y^i with a_{2r+1} = 1, the vanishing of f(n^2, k^2) for
/// |n - r| <= k <= n + r gives, for each sample node n, a square linear
/// system with Vandermonde matrix ((k^2)^i). Solving at nodes n = r..3r+1
/// and interpolating each a_i through the 2r+2 points recovers f.
inline BiPolynomial generator_by_vandermonde(int r)
{
    if (r < 1)
        throw std::invalid_argument("generator_by_vandermonde: r must be >= 1");
    const int s = 2 * r + 1;
    std::vector<Rational> nodes;          // sample values of x = n^2
    std::vector<std::vector<Rational>> a; // a[node][i], i = 0..2r
    for (int n = r; n <= 3 * r + 1; ++n) {
        Matrix vand(s, s);
        std::vector<Rational> rhs(s);
        for (int row = 0; row < s; ++row) {
            long k = n - r + row;
            Rational k2 = Rational(k) * k;
            Rational p = 1;
            for (int i = 0; i < s; ++i) {
                vand(row, i) = p;
                p *= k2;
            }
            rhs[row] = -p; // -(k^2)^{2r+1}
        }
        a.push_back(solve(vand, rhs)); // throws on a singular sample system
        nodes.push_back(Rational(n) * n);
    }

    // Lagrange interpolation of each coefficient function a_i(x).
    const std::size_t npts = nodes.size();
    BiPolynomial f = BiPolynomial::monomial(0, s, 1); // a_{2r+1}(x) = 1
    for (int i = 0; i < s; ++i) {
        std::vector<Rational> poly(npts, 0); // coefficients in x, degree < npts
        for (std::size_t j = 0; j < npts; ++j) {
            // basis polynomial through node j, scaled by a[j][i]
            std::vector<Rational> basis{1};
            Rational denom = 1;
            for (std::size_t l = 0; l < npts; ++l) {
                if (l == j)
                    continue;
                denom *= nodes[j] - nodes[l];
                std::vector<Rational> next(basis.size() + 1, 0);
                for (std::size_t d = 0; d < basis.size(); ++d) {
                    next[d + 1] += basis[d];
                    next[d] -= basis[d] * nodes[l];
                }
                basis = std::move(next);
            }
            Rational scale = a[j][i] / denom;
            for (std::size_t d = 0; d < basis.size(); ++d)
                poly[d] += basis[d] * scale;
        }
        for (std::size_t d = 0; d < poly.size(); ++d)
            f.add_term(static_cast<int>(d), i, poly[d]);
    }

    Rational lead = f.coeff(s, 0);
    if (lead == 0)
        throw std::logic_error("generator_by_vandermonde: degenerate assembly");
    if (lead != 1)
        f *= Rational(1) / lead;
    return f;
}

/// Fusion dimension for a triple of modules with square lowest weights
/// (m^2, n^2, k^2): 1 iff |n - m| <= k <= n + m. Cross-checked against the
/// polynomial criterion: the dimension is 1 iff (k^2, n^2) lies on the zero
/// locus of the degree-(2m+1) generator AND (k^2, m^2) on that of the
/// degree-(2n+1) generator. The symmetrized pair is needed because a single
/// generator also vanishes at points below |n - m| when m > n; fusion
/// symmetry in the first two slots justifies intersecting the two loci.
inline int fusion_dim_squares(long m, long n, long k)
{
    if (m < 0 || n < 0 || k < 0)
        throw std::invalid_argument("fusion_dim_squares: arguments must be >= 0");
    long lo = m > n ? m - n : n - m;
    int dim = (lo <= k && k <= m + n) ? 1 : 0;

    Rational k2 = Rational(k) * k;
    bool fzero = detail::generator_poly(static_cast<int>(m)).eval(k2, Rational(n) * n) == 0
        && detail::generator_poly(static_cast<int>(n)).eval(k2, Rational(m) * m) == 0;
    if (fzero != (dim == 1))
        throw std::logic_error("fusion_dim_squares: polynomial criterion disagrees");
    return dim;
}

/// Fusion dimension when the middle lowest weight n is a non-square positive
/// integer: 1 iff k = n.
inline int fusion_dim_generic(long m, long n, long k)
{
    if (m < 0 || k < 0)
        throw std::invalid_argument("fusion_dim_generic: m, k must be >= 0");
    if (n <= 0 || is_perfect_square(BigInt(n)))
        throw std::invalid_argument(
            "fusion_dim_generic: n must be a positive non-square integer");
    return k == n ? 1 : 0;
}

/// No intertwiners exist between two distinct non-square lowest weights.
inline int fusion_dim_nonsquare_pair(long m, long n)
{
    if (m <= 0 || n <= 0)
        throw std::invalid_argument("fusion_dim_nonsquare_pair: arguments must be positive");
    if (m == n)
        throw std::invalid_argument("fusion_dim_nonsquare_pair: m and n must differ");
    if (is_perfect_square(BigInt(m)) || is_perfect_square(BigInt(n)))
        throw std::invalid_argument("fusion_dim_nonsquare_pair: arguments must be non-squares");
    return 0;
}

} // namespace vc1::zhu
