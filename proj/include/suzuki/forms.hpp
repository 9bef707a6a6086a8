// Degree-t forms of P^4 vanishing on the embedded curve, counted two
// independent ways: symbolically (dehomogenize, rewrite to normal form, rank
// over GF(2)) and numerically (evaluation at all q^2+1 rational points over
// GF(q)).  The two routes share no machinery past the monomial list, which is
// what lets them adjudicate the closed-formula discrepancies.

#ifndef SUZUKI_FORMS_HPP
#define SUZUKI_FORMS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "suzuki/curve.hpp"
#include "suzuki/dims.hpp"
#include "suzuki/gf.hpp"
#include "suzuki/linalg.hpp"
#include "suzuki/params.hpp"
#include "suzuki/rewrite.hpp"
#include "suzuki/tuples.hpp"

namespace suzuki {

// Exponents of (x1, x2, x3, x4, x5); entries sum to the degree.
using Monomial5 = std::array<long long, 5>;

inline bool colex_less(const Monomial5& a, const Monomial5& b) {
    for (int i = 4; i >= 0; --i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

// The C(t+4,4) degree-t monomials in graded colex order (deterministic
// column layout for every matrix below).
inline std::vector<Monomial5> monomials(long long t) {
    if (t < 0)
        throw std::invalid_argument("monomials: t must be >= 0");
    std::vector<Monomial5> out;
    for (long long e5 = 0; e5 <= t; ++e5)
        for (long long e4 = 0; e4 + e5 <= t; ++e4)
            for (long long e3 = 0; e3 + e4 + e5 <= t; ++e3)
                for (long long e2 = 0; e2 + e3 + e4 + e5 <= t; ++e2)
                    out.push_back({t - e2 - e3 - e4 - e5, e2, e3, e4, e5});
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

inline std::map<Monomial5, std::size_t> monomial_index(const std::vector<Monomial5>& ms) {
    std::map<Monomial5, std::size_t> idx;
    for (std::size_t i = 0; i < ms.size(); ++i)
        idx.emplace(ms[i], i);
    return idx;
}

// Restriction of degree-t forms to the curve, over GF(2): column j holds the
// coordinates of reduce(x^e1 y^e2 v^e3 w^e4) (the monomial with x5 -> 1) in
// the ascending-norm canonical basis of L(t(q+2q0+1) P_inf).
inline BitMatrix reduction_matrix(const SuzukiParams& p, long long t) {
    if (t < 1)
        throw std::invalid_argument("reduction_matrix: t must be >= 1");
    auto basis = basis_tuples(p, t * p.m_embed);
    auto index = detail::basis_index(basis);
    auto ms = monomials(t);
    BitMatrix M(basis.size(), ms.size());
    for (std::size_t j = 0; j < ms.size(); ++j) {
        const Monomial5& e = ms[j];
        FFPoly r = reduce(FFPoly::monomial({e[0], e[1], e[2], e[3]}), p);
        for (const auto& [tuple, c] : r.terms()) {
            auto it = index.find(tuple);
            if (it == index.end())
                throw std::logic_error("reduction_matrix: reduced term escapes L(t*m)");
            M.set(it->second, j);
        }
    }
    return M;
}

inline long long kappa_rank(const SuzukiParams& p, long long t) {
    auto M = reduction_matrix(p, t);
    return static_cast<long long>(M.cols() - rank_gf2(M));
}

// Kernel of the degree-t monomial reduction map; rows of `basis` are
// coefficient vectors over the graded-colex monomial columns.
struct FormKernel {
    long long t = 0;
    long long dim = 0;
    BitMatrix basis;
};

inline FormKernel form_kernel(const SuzukiParams& p, long long t) {
    auto M = reduction_matrix(p, t);
    BitMatrix K = kernel_basis_gf2(M);
    return {t, static_cast<long long>(K.rows()), std::move(K)};
}

// Kernel dimension of point evaluation over GF(q): rows are the q^2+1
// rational points (affine chart plus the point at infinity), columns the
// degree-t monomials.  Valid as a containment count only while the point set
// outstrips the intersection bound t * deg(X_n) of a degree-t hypersurface,
// hence the guard.
inline long long kappa_eval(const SuzukiParams& p, const Gf2m& F, long long t) {
    if (t < 1)
        throw std::invalid_argument("kappa_eval: t must be >= 1");
    long long npoints = p.q * p.q + 1;
    if (npoints <= t * p.m_embed)
        throw std::domain_error(
            "kappa_eval: q^2+1 <= t*(q+2q0+1); vanishing at all rational points no longer "
            "certifies containment (degree bound)");
    auto ms = monomials(t);
    auto pts = enumerate_points(p, F);
    GfqMatrix M(F, static_cast<std::size_t>(npoints), ms.size());
    std::vector<std::vector<Fe>> powers(5, std::vector<Fe>(static_cast<std::size_t>(t) + 1));
    for (std::size_t i = 0; i <= pts.size(); ++i) {
        EmbeddedPoint ep =
            (i < pts.size()) ? embed(F, p, pts[i]) : embed_infinity(p);
        for (int v = 0; v < 5; ++v) {
            powers[v][0] = 1;
            for (long long e = 1; e <= t; ++e)
                powers[v][static_cast<std::size_t>(e)] =
                    F.mul(powers[v][static_cast<std::size_t>(e - 1)], ep.coords[v]);
        }
        for (std::size_t j = 0; j < ms.size(); ++j) {
            Fe val = powers[0][static_cast<std::size_t>(ms[j][0])];
            for (int v = 1; v < 5; ++v)
                val = F.mul(val, powers[v][static_cast<std::size_t>(ms[j][v])]);
            M.at(i, j) = val;
        }
    }
    return static_cast<long long>(M.kernel_dim());
}

// The quadric x2^2 + x1 x3 + x4 x5 as a coefficient vector over monomials(2).
inline std::vector<std::uint64_t> quadric_vector(const std::map<Monomial5, std::size_t>& idx2,
                                                 std::size_t words) {
    std::vector<std::uint64_t> v(words, 0);
    for (const Monomial5& m :
         {Monomial5{0, 2, 0, 0, 0}, Monomial5{1, 0, 1, 0, 0}, Monomial5{0, 0, 0, 1, 1}}) {
        std::size_t j = idx2.at(m);
        v[j / 64] ^= 1ull << (j % 64);
    }
    return v;
}

// The unique quadric containing the curve.  Anything other than a
// 1-dimensional kernel supported on {x2^2, x1 x3, x4 x5} is a defect.
inline FormKernel unique_quadric(const SuzukiParams& p) {
    FormKernel k = form_kernel(p, 2);
    if (k.dim != 1)
        throw std::logic_error("unique_quadric: kernel at t=2 is not 1-dimensional");
    auto ms = monomials(2);
    auto idx2 = monomial_index(ms);
    auto expect = quadric_vector(idx2, k.basis.words_per_row());
    if (k.basis.row(0) != expect)
        throw std::logic_error("unique_quadric: unexpected support");
    return k;
}

// Degree-t multiples of the quadric, as a row space over monomials(t).
// Multiplication by an irreducible form is injective, so the dimension is
// C(t+2,4); the space sits inside the kernel of the reduction map.
struct QuadricMultiples {
    long long t = 0;
    long long dim = 0;
    BitRowSpace space;
};

inline QuadricMultiples quadric_multiples([[maybe_unused]] const SuzukiParams& p,
                                          long long t) {
    if (t < 2)
        throw std::invalid_argument("quadric_multiples: t must be >= 2");
    auto ms = monomials(t);
    auto idx = monomial_index(ms);
    auto low = monomials(t - 2);
    const std::array<Monomial5, 3> q_terms{
        Monomial5{0, 2, 0, 0, 0}, Monomial5{1, 0, 1, 0, 0}, Monomial5{0, 0, 0, 1, 1}};
    std::size_t words = (ms.size() + 63) / 64;
    BitRowSpace space(ms.size());
    for (const Monomial5& m : low) {
        std::vector<std::uint64_t> row(words, 0);
        for (const Monomial5& qt : q_terms) {
            Monomial5 prod;
            for (int i = 0; i < 5; ++i)
                prod[i] = m[i] + qt[i];
            std::size_t j = idx.at(prod);
            row[j / 64] ^= 1ull << (j % 64);
        }
        space.insert(std::move(row));
    }
    return {t, static_cast<long long>(space.dim()), std::move(space)};
}

// Coefficient vector of a sparse form given by its monomials, over the
// graded-colex columns of monomials(t).
inline std::vector<std::uint64_t> form_vector(const std::vector<Monomial5>& support,
                                              const std::map<Monomial5, std::size_t>& idx,
                                              std::size_t words) {
    std::vector<std::uint64_t> v(words, 0);
    for (const Monomial5& m : support) {
        std::size_t j = idx.at(m);
        v[j / 64] ^= 1ull << (j % 64);
    }
    return v;
}

// Homogeneous evaluation of a sparse 0/1 form at a projective point.
inline Fe eval_form(const Gf2m& F, const std::vector<Monomial5>& support,
                    const EmbeddedPoint& ep) {
    Fe acc = 0;
    for (const Monomial5& m : support) {
        Fe val = 1;
        for (int v = 0; v < 5; ++v)
            val = F.mul(val, F.pow(ep.coords[v], static_cast<unsigned long long>(m[v])));
        acc = F.add(acc, val);
    }
    return acc;
}

// Dehomogenized (x5 -> 1) polynomial of a sparse form.
inline FFPoly form_to_ffpoly(const std::vector<Monomial5>& support) {
    FFPoly f;
    for (const Monomial5& m : support)
        f.add_term({m[0], m[1], m[2], m[3]}, 1);
    return f;
}

// Degree-(q0+1) forms vanishing on the curve beyond the quadric multiples:
//   F1 = x1^(q0+1) + x3^q0 x5 + x2 x5^q0   (homogenized v^q0 relation)
//   F2 = x1^q0 x2 + x4^q0 x5 + x3 x5^q0    (homogenized w^q0 relation)
struct ExtraForms {
    long long count = 0; // kappa(q0+1) minus the quadric-multiple dimension
    std::vector<Monomial5> f1, f2;
};

inline ExtraForms extra_forms(const SuzukiParams& p, const Gf2m& F) {
    long long t = p.q0 + 1;
    ExtraForms ef;
    ef.f1 = {{p.q0 + 1, 0, 0, 0, 0}, {0, 0, p.q0, 0, 1}, {0, 1, 0, 0, p.q0}};
    ef.f2 = {{p.q0, 1, 0, 0, 0}, {0, 0, 0, p.q0, 1}, {0, 0, 1, 0, p.q0}};
    ef.count = kappa_rank(p, t) - binom4(p.q0 + 3);

    auto ms = monomials(t);
    auto idx = monomial_index(ms);
    std::size_t words = (ms.size() + 63) / 64;
    QuadricMultiples qm = quadric_multiples(p, t);
    auto pts = enumerate_points(p, F);
    for (const auto& support : {ef.f1, ef.f2}) {
        if (!reduce(form_to_ffpoly(support), p).is_zero())
            throw std::logic_error("extra_forms: explicit form does not reduce to zero");
        for (const auto& pt : pts)
            if (eval_form(F, support, embed(F, p, pt)) != 0)
                throw std::logic_error("extra_forms: explicit form misses a rational point");
        if (eval_form(F, support, embed_infinity(p)) != 0)
            throw std::logic_error("extra_forms: explicit form misses the point at infinity");
        if (qm.space.contains(form_vector(support, idx, words)))
            throw std::logic_error("extra_forms: explicit form is a quadric multiple");
    }
    if (ef.count < 4)
        throw std::logic_error("extra_forms: fewer than 4 independent non-multiple forms");
    return ef;
}

} // namespace suzuki

#endif
