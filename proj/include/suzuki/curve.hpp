// Rational points of the curve over F_q and the embedding into P^4 given by
// (x : y : v : w : 1).  Over F_q both sides of y^q - y = x^q0 (x^q - x)
// vanish identically, so the affine points are exactly the q^2 pairs; adding
// P_inf gives the full set of q^2 + 1 rational points.

#ifndef SUZUKI_CURVE_HPP
#define SUZUKI_CURVE_HPP

#include <array>
#include <cassert>
#include <utility>
#include <vector>

#include "suzuki/gf.hpp"
#include "suzuki/params.hpp"
#include "suzuki/rewrite.hpp"

namespace suzuki {

struct AffinePoint {
    Fe x = 0, y = 0;
    friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

// Projective point of P^4, normalized so the last nonzero coordinate in the
// order (x1,...,x5) is 1.
struct EmbeddedPoint {
    std::array<Fe, 5> coords{};
    friend auto operator<=>(const EmbeddedPoint&, const EmbeddedPoint&) = default;
};

// All q^2 affine points, ordered by (x, y) bit patterns.
inline std::vector<AffinePoint> enumerate_points(const SuzukiParams& p, const Gf2m& F) {
    auto elems = F.all_elements();
    std::vector<AffinePoint> pts;
    pts.reserve(elems.size() * elems.size());
    for (Fe x : elems)
        for (Fe y : elems)
            pts.push_back({x, y});
    assert(static_cast<long long>(pts.size()) == p.q * p.q);
    return pts;
}

// v = y^(2q0) + x^(2q0+1),  w = y^(2q0) x + v^(2q0).
inline std::pair<Fe, Fe> eval_vw(const Gf2m& F, const SuzukiParams& p, const AffinePoint& pt) {
    unsigned long long e = static_cast<unsigned long long>(2 * p.q0);
    Fe y2q0 = F.pow(pt.y, e);
    Fe v = F.add(y2q0, F.pow(pt.x, e + 1));
    Fe w = F.add(F.mul(y2q0, pt.x), F.pow(v, e));
    return {v, w};
}

inline EmbeddedPoint embed(const Gf2m& F, const SuzukiParams& p, const AffinePoint& pt) {
    auto [v, w] = eval_vw(F, p, pt);
    return {{pt.x, pt.y, v, w, 1}};
}

// The limit point where the largest-pole section w dominates.
inline EmbeddedPoint embed_infinity(const SuzukiParams&) { return {{0, 0, 0, 1, 0}}; }

// Substitute the point's (x, y, v, w) into a term-map polynomial.
template <class Coeff>
Fe eval_ffpoly(const Gf2m& F, const SuzukiParams& p, const FFPolyT<Coeff>& poly,
               const AffinePoint& pt) {
    auto [v, w] = eval_vw(F, p, pt);
    Fe acc = 0;
    for (const auto& [t, c] : poly.terms()) {
        Fe term = poly.coeff_ctx().to_field(c, F);
        term = F.mul(term, F.pow(pt.x, static_cast<unsigned long long>(t.a)));
        term = F.mul(term, F.pow(pt.y, static_cast<unsigned long long>(t.b)));
        term = F.mul(term, F.pow(v, static_cast<unsigned long long>(t.c)));
        term = F.mul(term, F.pow(w, static_cast<unsigned long long>(t.d)));
        acc = F.add(acc, term);
    }
    return acc;
}

} // namespace suzuki

#endif
