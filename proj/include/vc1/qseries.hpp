#pragma once

#include "vc1/partition.hpp"
#include "vc1/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vc1::qseries {

/// Truncated formal series q^{offset} * sum_{n=0}^{N} coeffs[n] q^n. All
/// exponents within one series are integer-spaced; the fractional part lives
/// entirely in the offset.
struct QSeries {
    Rational offset;
    std::vector<Rational> coeffs; // index 0..N

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    Rational coeff(int n) const
    {
        return (n < 0 || n >= static_cast<int>(coeffs.size())) ? Rational(0) : coeffs[n];
    }

    bool is_zero() const
    {
        for (const auto& c : coeffs)
            if (c != 0)
                return false;
        return true;
    }

    QSeries truncated(int n) const
    {
        QSeries out{offset, coeffs};
        out.coeffs.resize(static_cast<std::size_t>(n) + 1);
        return out;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << "q^(" << rat_str(offset) << ") * [";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            os << (i ? ", " : "") << rat_str(coeffs[i]);
        os << "]";
        return os.str();
    }
};

inline QSeries zero_series(int order)
{
    return QSeries{0, std::vector<Rational>(static_cast<std::size_t>(order) + 1)};
}

/// Sum, defined when the two offsets differ by an integer. The result uses
/// the smaller offset and the smaller reachable order.
inline QSeries operator+(const QSeries& a, const QSeries& b)
{
    Rational diff = b.offset - a.offset;
    if (den(diff) != 1)
        throw std::invalid_argument("QSeries: offsets differ by a non-integer");
    long shift = static_cast<long>(num(diff));
    const QSeries& lo = shift >= 0 ? a : b;
    const QSeries& hi = shift >= 0 ? b : a;
    long s = shift >= 0 ? shift : -shift;
    int order = std::min<long>(lo.order(), hi.order() + s);
    QSeries out = zero_series(order);
    out.offset = lo.offset;
    for (int n = 0; n <= order; ++n)
        out.coeffs[n] = lo.coeff(n) + hi.coeff(static_cast<int>(n - s));
    return out;
}

inline QSeries operator-(const QSeries& a, const QSeries& b)
{
    QSeries nb = b;
    for (auto& c : nb.coeffs)
        c = -c;
    return a + nb;
}

inline QSeries operator*(const QSeries& a, const Rational& s)
{
    QSeries out = a;
    for (auto& c : out.coeffs)
        c *= s;
    return out;
}

/// Product truncated at the smaller order of the two factors.
inline QSeries operator*(const QSeries& a, const QSeries& b)
{
    int order = std::min(a.order(), b.order());
    QSeries out = zero_series(order);
    out.offset = a.offset + b.offset;
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

/// Multiplicative inverse of a series with nonzero constant term.
inline QSeries inverse(const QSeries& a)
{
    if (a.coeffs.empty() || a.coeffs[0] == 0)
        throw std::invalid_argument("QSeries inverse: zero constant term");
    QSeries out = zero_series(a.order());
    out.offset = -a.offset;
    out.coeffs[0] = Rational(1) / a.coeffs[0];
    for (int n = 1; n <= a.order(); ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k)
            s += a.coeffs[k] * out.coeffs[n - k];
        out.coeffs[n] = -s / a.coeffs[0];
    }
    return out;
}

/// Character of the Verma module V(c,h): q^{h - c/24} sum p(n) q^n.
inline QSeries verma_character(const Rational& c, const Rational& h, int order)
{
    if (order < 0)
        throw std::invalid_argument("verma_character: negative order");
    QSeries out = zero_series(order);
    out.offset = h - c / 24;
    for (int n = 0; n <= order; ++n)
        out.coeffs[n] = partition_count(n);
    return out;
}

/// Character of the irreducible module of central charge 1 and lowest weight
/// h. For h = m^2 the Verma module has a level-(2m+1) maximal submodule that
/// is itself a Verma module, so the coefficients are p(n) - p(n - 2m - 1).
/// For h not of the form m^2/4 the Verma module is already irreducible.
/// Weights m^2/4 with m odd are rejected: they sit at the reducible locus
/// but outside the integer-square family this engine covers.
inline QSeries irr_character_c1(const Rational& h, int order)
{
    if (order < 0)
        throw std::invalid_argument("irr_character_c1: negative order");
    long m = 0;
    if (is_integer_square(h, m)) {
        QSeries out = zero_series(order);
        out.offset = h - Rational(1, 24);
        for (int n = 0; n <= order; ++n)
            out.coeffs[n] = partition_count(n)
                - partition_count(n - static_cast<int>(2 * m + 1));
        return out;
    }
    long m4 = 0;
    if (is_integer_square(4 * h, m4) && m4 % 2 == 1)
        throw std::invalid_argument(
            "irr_character_c1: unsupported weight of the form (odd)^2/4");
    return verma_character(1, h, order);
}

/// eta(q) = q^{1/24} prod_{n>=1} (1 - q^n), truncated.
inline QSeries eta_series(int order)
{
    if (order < 0)
        throw std::invalid_argument("eta_series: negative order");
    QSeries out = zero_series(order);
    out.offset = Rational(1, 24);
    out.coeffs[0] = 1;
    for (int n = 1; n <= order; ++n)
        for (int j = order; j >= n; --j)
            out.coeffs[j] -= out.coeffs[j - n];
    return out;
}

/// theta(q) = sum_{k in Z} q^{k^2}, truncated.
inline QSeries theta_series(int order)
{
    if (order < 0)
        throw std::invalid_argument("theta_series: negative order");
    QSeries out = zero_series(order);
    out.coeffs[0] = 1;
    for (long k = 1; k * k <= order; ++k)
        out.coeffs[k * k] = 2;
    return out;
}

struct DecompositionCheck {
    bool holds = false;
    QSeries residual;
};

/// Verifies the lattice character identity
///   sum_{m>=0} (2m+1) q^{m^2} (1 - q^{2m+1}) = sum_{k in Z} q^{k^2}
/// through the given order; the residual of the two sides is returned and
/// must be identically zero.
inline DecompositionCheck lattice_decomposition_check(int order)
{
    if (order < 0)
        throw std::invalid_argument("lattice_decomposition_check: negative order");
    QSeries lhs = zero_series(order);
    for (long m = 0; m * m <= order; ++m) {
        lhs.coeffs[m * m] += 2 * m + 1;
        long top = m * m + 2 * m + 1;
        if (top <= order)
            lhs.coeffs[top] -= 2 * m + 1;
    }
    DecompositionCheck out;
    out.residual = lhs - theta_series(order);
    out.holds = out.residual.is_zero();
    return out;
}

/// Decomposition of the tensor product of two even-highest-weight sl2
/// representations: highest weights |d1-d2|, |d1-d2|+2, ..., d1+d2, each
/// with multiplicity one.
inline std::vector<long> sl2_tensor_multiplicities(long d1, long d2)
{
    if (d1 < 0 || d2 < 0 || d1 % 2 != 0 || d2 % 2 != 0)
        throw std::invalid_argument("sl2_tensor_multiplicities: inputs must be even and >= 0");
    std::vector<long> out;
    for (long w = d1 > d2 ? d1 - d2 : d2 - d1; w <= d1 + d2; w += 2)
        out.push_back(w);
    return out;
}

/// The series (1 - q) / prod_{n>=2} (1 - q^n): the eta-scaled character of a
/// lowest-weight space with two quasi-free tails. Its coefficients grow
/// faster than any polynomial; used as the growth-diagnostic sample.
inline QSeries eta_scaled_tail_character(int order)
{
    QSeries tail = zero_series(order); // prod_{n>=2}(1 - q^n)
    tail.coeffs[0] = 1;
    for (int n = 2; n <= order; ++n)
        for (int j = order; j >= n; --j)
            tail.coeffs[j] -= tail.coeffs[j - n];
    QSeries one_minus_q = zero_series(order);
    one_minus_q.coeffs[0] = 1;
    if (order >= 1)
        one_minus_q.coeffs[1] = -1;
    return one_minus_q * inverse(tail);
}

/// Multiplies by eta(q)^p (p may be negative).
inline QSeries scale_by_eta_power(const QSeries& s, int p)
{
    QSeries out = s;
    QSeries eta = eta_series(s.order());
    QSeries factor = p >= 0 ? eta : inverse(eta);
    for (int i = 0; i < (p >= 0 ? p : -p); ++i)
        out = out * factor;
    return out;
}

struct GrowthWitness {
    int exponent = 0;
    bool found = false;
    int n = -1; // least index in the window with |a_n| > n^exponent
};

struct GrowthReport {
    int window_lo = 0, window_hi = 0;
    std::vector<GrowthWitness> witnesses;
    std::string verdict; // "polynomially-bounded" or "superpolynomial-evidence"
};

/// Scans a window of coefficients for growth beyond each tested polynomial
/// exponent. The verdict is "superpolynomial-evidence" only when every
/// tested exponent has a witness; this is a diagnostic, not a proof.
inline GrowthReport growth_report(const QSeries& s, int window_lo, int window_hi,
                                  const std::vector<int>& exponents)
{
    if (window_lo < 0 || window_hi > s.order() || window_lo > window_hi)
        throw std::invalid_argument("growth_report: window outside series order");
    GrowthReport rep;
    rep.window_lo = window_lo;
    rep.window_hi = window_hi;
    bool all = !exponents.empty();
    for (int k : exponents) {
        GrowthWitness w{k, false, -1};
        for (int n = window_lo; n <= window_hi; ++n) {
            Rational bound(pow_int(BigInt(n), static_cast<unsigned>(k)));
            Rational mag = s.coeffs[n] < 0 ? Rational(-s.coeffs[n]) : s.coeffs[n];
            if (mag > bound) {
                w.found = true;
                w.n = n;
                break;
            }
        }
        all = all && w.found;
        rep.witnesses.push_back(w);
    }
    rep.verdict = all ? "superpolynomial-evidence" : "polynomially-bounded";
    return rep;
}

} // namespace vc1::qseries
