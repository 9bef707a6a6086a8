// Exponent-tuple calculus for monomials x^a y^b v^c w^d: weighted norms
// (= pole orders at P_inf), the unique canonical form, monomial bases of
// Riemann-Roch spaces, and the decompositions behind the product-map ranks.

#ifndef SUZUKI_TUPLES_HPP
#define SUZUKI_TUPLES_HPP

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

#include "suzuki/params.hpp"
#include "suzuki/semigroup.hpp"

namespace suzuki {

// Exponents of x, y, v, w.  Canonical form: b <= 1 and c, d <= q0-1.
struct ExponentTuple {
    long long a = 0, b = 0, c = 0, d = 0;

    friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;

    ExponentTuple operator+(const ExponentTuple& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    long long coord_sum() const { return a + b + c + d; }
};

// ||(a,b,c,d)|| = a*q + b*(q+q0) + c*(q+2q0) + d*(q+2q0+1): the pole order
// of x^a y^b v^c w^d at P_inf.
inline long long norm(const ExponentTuple& t, const SuzukiParams& p) {
    return t.a * p.generators[0] + t.b * p.generators[1] + t.c * p.generators[2] +
           t.d * p.generators[3];
}

inline bool is_canonical(const ExponentTuple& t, const SuzukiParams& p) {
    return t.a >= 0 && t.b >= 0 && t.c >= 0 && t.d >= 0 && t.b <= 1 && t.c <= p.q0 - 1 &&
           t.d <= p.q0 - 1;
}

// The unique norm-preserving canonical form.  Three carry steps: d mod q0
// into (a,b), b mod 2 into (a,c), c mod q0 into a.  Each step preserves the
// norm because q0*(q+2q0+1) = q0*q + (q+q0), 2*(q+q0) = q + (q+2q0), and
// q0*(q+2q0) = (q0+1)*q.
inline ExponentTuple normalize(const ExponentTuple& t, const SuzukiParams& p) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0)
        throw std::invalid_argument("normalize: exponents must be nonnegative");
    long long q0 = p.q0;
    long long delta = t.d / q0, d = t.d % q0;
    long long a1 = t.a + delta * q0, b1 = t.b + delta, c1 = t.c;
    long long beta = b1 / 2, b = b1 % 2;
    long long a2 = a1 + beta, c2 = c1 + beta;
    long long gamma = c2 / q0, c = c2 % q0;
    return {a2 + gamma * q0 + gamma, b, c, d};
}

// All canonical tuples of norm <= m, sorted by norm ascending.  Norms of
// canonical tuples are pairwise distinct, so the order is total; the list
// has exactly dim L(m P_inf) entries.
inline std::vector<ExponentTuple> basis_tuples(const SuzukiParams& p, long long m) {
    if (m < 0)
        throw std::invalid_argument("basis_tuples: m must be >= 0");
    std::vector<ExponentTuple> out;
    for (long long b = 0; b <= 1; ++b)
        for (long long c = 0; c < p.q0; ++c)
            for (long long d = 0; d < p.q0; ++d) {
                long long base = norm({0, b, c, d}, p);
                for (long long a = 0; base + a * p.q <= m; ++a)
                    out.push_back({a, b, c, d});
            }
    std::sort(out.begin(), out.end(), [&p](const ExponentTuple& s, const ExponentTuple& t) {
        return norm(s, p) < norm(t, p);
    });
    return out;
}

// For 1 <= t <= q0-1 the conditions "norm <= t*(q+2q0+1)" and
// "coordinate sum <= t" are equivalent; returns the two booleans.
inline std::pair<bool, bool> norm_sum_equiv(const SuzukiParams& p, long long t,
                                            const ExponentTuple& u) {
    if (t < 1 || t > p.q0 - 1)
        throw std::invalid_argument("norm_sum_equiv: t must be in [1, q0-1]");
    return {norm(u, p) <= t * p.m_embed, u.coord_sum() <= t};
}

// Write a tuple with coordinate sum <= t as exactly t summands, each with
// coordinate sum 0 or 1.
inline std::vector<ExponentTuple> unit_sum_decomposition(const ExponentTuple& u, long long t) {
    if (u.coord_sum() > t)
        throw std::invalid_argument("unit_sum_decomposition: coordinate sum exceeds t");
    if (u.a < 0 || u.b < 0 || u.c < 0 || u.d < 0)
        throw std::invalid_argument("unit_sum_decomposition: exponents must be nonnegative");
    std::vector<ExponentTuple> out;
    out.reserve(static_cast<std::size_t>(t));
    for (long long i = 0; i < u.a; ++i)
        out.push_back({1, 0, 0, 0});
    for (long long i = 0; i < u.b; ++i)
        out.push_back({0, 1, 0, 0});
    for (long long i = 0; i < u.c; ++i)
        out.push_back({0, 0, 1, 0});
    for (long long i = 0; i < u.d; ++i)
        out.push_back({0, 0, 0, 1});
    while (static_cast<long long>(out.size()) < t)
        out.push_back({0, 0, 0, 0});
    return out;
}

// For t >= 2q0+1 and a semigroup member s <= t*(q+2q0+1), produce a tuple of
// norm exactly s with coordinate sum <= t.  For s > t*q take the remainder
// recipe s = alpha*(q+2q0+1) - beta and split beta greedily over the
// generator complements 2q0+1, q0+1, 1; for s <= t*q the canonical tuple of
// norm s already has coordinate sum <= t (anything larger would have norm
// at least (t+1)*q > s).
inline ExponentTuple pole_order_witness(const SuzukiParams& p, const SemigroupTable& table,
                                        long long s, long long t) {
    if (t < 2 * p.q0 + 1)
        throw std::invalid_argument("pole_order_witness: t must be >= 2q0+1");
    if (s < 0 || s > t * p.m_embed)
        throw std::invalid_argument("pole_order_witness: s outside [0, t*(q+2q0+1)]");
    if (!table.member(s))
        throw std::domain_error("pole_order_witness: s is not a semigroup member");

    if (s > t * p.q) {
        long long alpha = (s + p.m_embed - 1) / p.m_embed; // so 0 <= beta <= q+2q0
        long long beta = alpha * p.m_embed - s;
        long long e1 = beta / (2 * p.q0 + 1);
        long long e2 = (beta - e1 * (2 * p.q0 + 1)) / (p.q0 + 1);
        long long e3 = beta - e1 * (2 * p.q0 + 1) - e2 * (p.q0 + 1);
        return {e1, e2, e3, alpha - e1 - e2 - e3};
    }

    // Bounded search: scan canonical tuples for one with norm s.
    for (long long b = 0; b <= 1; ++b)
        for (long long c = 0; c < p.q0; ++c)
            for (long long d = 0; d < p.q0; ++d) {
                long long base = norm({0, b, c, d}, p);
                if (base <= s && (s - base) % p.q == 0)
                    return {(s - base) / p.q, b, c, d};
            }
    throw std::logic_error("pole_order_witness: no canonical tuple of norm s"); // unreachable
}

// Number of nonnegative integer triples summing to h: (h+1)(h+2)/2.
inline long long count_triples(long long h) {
    if (h < 0)
        throw std::invalid_argument("count_triples: h must be >= 0");
    return (h + 1) * (h + 2) / 2;
}

} // namespace suzuki

#endif
