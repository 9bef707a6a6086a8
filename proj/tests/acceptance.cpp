// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold.  Every expected value and tolerance is pinned here.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "suzuki/curve.hpp"
#include "suzuki/dims.hpp"
#include "suzuki/expr.hpp"
#include "suzuki/forms.hpp"
#include "suzuki/gf.hpp"
#include "suzuki/linalg.hpp"
#include "suzuki/params.hpp"
#include "suzuki/rewrite.hpp"
#include "suzuki/semigroup.hpp"
#include "suzuki/tuples.hpp"

using namespace suzuki;

namespace {

int failures = 0;
std::vector<std::string> infos;

void info(const std::string& line) { infos.push_back(line); }

void criterion(const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    infos.clear();
    std::string detail;
    bool ok = true;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS " : "FAIL ") << name << " [" << ms << " ms]";
    if (!ok)
        std::cout << "\n     " << detail;
    std::cout << "\n";
    for (const auto& l : infos)
        std::cout << "     " << l << "\n";
    if (!ok)
        ++failures;
}

#define EXPECT(cond, msg)                                                                          \
    do {                                                                                           \
        if (!(cond))                                                                               \
            throw std::runtime_error(std::string(msg) + "  (" #cond ")");                          \
    } while (0)

std::string pair_str(std::pair<long long, long long> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

} // namespace

int main() {
    std::cout << "acceptance: exact geometry of Suzuki-curve models in P^4\n";

    criterion("criterion-1 gap counts and Frobenius numbers (n=1,2,3)", [] {
        struct Row {
            long long n, gaps, frob;
        };
        for (Row r : {Row{1, 14, 27}, Row{2, 124, 247}, Row{3, 1016, 2031}}) {
            auto p = make_params(r.n);
            auto t = build_table(p);
            EXPECT(static_cast<long long>(t.gaps().size()) == r.gaps, "gap count");
            EXPECT(static_cast<long long>(t.gaps().size()) == p.genus, "gap count = genus");
            EXPECT(t.frobenius() == r.frob, "frobenius");
            EXPECT(t.frobenius() == 2 * p.genus - 1, "frobenius = 2g-1");
        }
    });

    criterion("criterion-2 dimension table n=2, t=0..12, closed formula and DP oracle", [] {
        auto p = make_params(2);
        auto table = table_covering(p, 12 * p.m_embed);
        const long long expected[] = {1, 5, 14, 30, 55, 87, 124, 164, 205, 246, 287, 328, 369};
        for (long long t = 0; t <= 12; ++t) {
            EXPECT(dim_L_closed(p, t) == expected[t], "closed formula at t=" + std::to_string(t));
            EXPECT(dim_L_oracle(table, t * p.m_embed) == expected[t],
                   "oracle at t=" + std::to_string(t));
        }
    });

    criterion("criterion-3 hypersurface counts n=2 by rank and 1025-point evaluation", [] {
        auto p = make_params(2);
        Gf2m F(2);
        struct Row {
            long long t, kappa;
        };
        for (Row r : {Row{2, 1}, Row{3, 5}, Row{4, 15}, Row{9, 469}, Row{10, 714}}) {
            EXPECT(kappa_rank(p, r.t) == r.kappa, "kappa_rank at t=" + std::to_string(r.t));
            EXPECT(kappa_eval(p, F, r.t) == r.kappa, "kappa_eval at t=" + std::to_string(r.t));
        }
        EXPECT(binom(14, 4) - 410 - 1 + 124 == 714, "high-range closed form at t=10");
        // discrepancy adjudication: the quoted low-range closed form gives 14
        // at t=2, inconsistent with the computed kappa(2) = 1; must be reported
        auto k2 = kappa_closed(p, 2);
        EXPECT(k2.exact && *k2.exact == 1, "kappa_closed(2) = 1");
        EXPECT(k2.quoted_low_value == 14, "quoted formula value at t=2");
        EXPECT(k2.low_range_discrepancy, "discrepancy must be flagged");
    });

    criterion("criterion-4 unique quadric with support {x2^2, x1 x3, x4 x5} (n=1,2)", [] {
        for (long long n : {1, 2}) {
            auto p = make_params(n);
            auto k = unique_quadric(p); // throws unless dim == 1 with exact support
            EXPECT(k.dim == 1, "kernel dimension at t=2");
        }
    });

    criterion("criterion-5 quadric-multiple structure and the explicit extra forms (n=2)", [] {
        auto p = make_params(2);
        Gf2m F(2);
        EXPECT(quadric_multiples(p, 3).dim == 5 && kappa_rank(p, 3) == 5,
               "kernel = quadric multiples at t=3");
        EXPECT(quadric_multiples(p, 4).dim == 15 && kappa_rank(p, 4) == 15,
               "kernel = quadric multiples at t=4");
        EXPECT(kappa_rank(p, 5) - 35 >= 4, "at least 4 extra forms at t=5");
        // extra_forms throws unless F1, F2 vanish on the curve (symbolically
        // and at all 1025 points) and avoid the quadric multiples
        EXPECT(extra_forms(p, F).count >= 4, "independent non-multiple forms");
    });

    criterion("criterion-6 rewriting completeness: curve relation reduces to zero (n=1,2)", [] {
        EXPECT(verify_curve_identity(make_params(1)), "n=1");
        EXPECT(verify_curve_identity(make_params(2)), "n=2");
    });

    criterion("criterion-7 product-map ranks n=2", [] {
        auto p = make_params(2);
        auto table = table_covering(p, 10 * p.m_embed);
        for (long long t : {1, 2, 3, 4, 9, 10}) {
            auto [img, tgt] = sigma_rank(p, table, t);
            EXPECT(img == tgt, "sigma_" + std::to_string(t) + " surjective, got " +
                                   pair_str({img, tgt}));
        }
        std::ostringstream mid;
        for (long long t : {5, 6, 7, 8})
            mid << " t=" << t << ":" << pair_str(sigma_rank(p, table, t));
        info("midrange (computed, not asserted):" + mid.str());
        for (long long a = 0; a <= 3; ++a)
            for (long long b = 0; a + b <= 3; ++b) {
                auto [img, tgt] = mu_rank(p, table, a, b);
                EXPECT(img == tgt, "mu(" + std::to_string(a) + "," + std::to_string(b) +
                                       ") surjective, got " + pair_str({img, tgt}));
            }
    });

    criterion("criterion-8 oracle agreement: kappa_rank == kappa_eval (n=2 t=2..11; n=1 t=2..5)",
              [] {
                  auto p2 = make_params(2);
                  Gf2m F2(2);
                  for (long long t = 2; t <= 11; ++t)
                      EXPECT(kappa_rank(p2, t) == kappa_eval(p2, F2, t),
                             "n=2 t=" + std::to_string(t));
                  info("n=2: both oracles agree for t = 2..11");
                  auto p1 = make_params(1);
                  Gf2m F1(1);
                  for (long long t = 2; t <= 4; ++t)
                      EXPECT(kappa_rank(p1, t) == kappa_eval(p1, F1, t),
                             "n=1 t=" + std::to_string(t));
                  info("n=1: both oracles agree for t = 2..4");
                  // t = 5 at n = 1: the evaluation certificate does not exist.
                  // q^2+1 = 65 = 5*13 = t*deg, so a degree-5 hypersurface can
                  // meet the curve in exactly the 65 rational points without
                  // containing it, and one does: the homogenization of
                  // x^q - x.  Computed in test scope: the raw 65-point
                  // evaluation kernel is 75-dimensional while the containment
                  // kernel is 74-dimensional.  kappa_eval(5) therefore raises
                  // by its own contract, and this endpoint cannot pass.
                  long long t5_rank = kappa_rank(p1, 5);
                  auto ms5 = monomials(5);
                  auto pts = enumerate_points(p1, F1);
                  GfqMatrix M(F1, pts.size() + 1, ms5.size());
                  for (std::size_t i = 0; i <= pts.size(); ++i) {
                      EmbeddedPoint ep =
                          (i < pts.size()) ? embed(F1, p1, pts[i]) : embed_infinity(p1);
                      for (std::size_t j = 0; j < ms5.size(); ++j) {
                          Fe val = 1;
                          for (int v = 0; v < 5; ++v)
                              val = F1.mul(val, F1.pow(ep.coords[v],
                                                       static_cast<unsigned long long>(
                                                           ms5[j][v])));
                          M.at(i, j) = val;
                      }
                  }
                  long long raw_kernel = static_cast<long long>(M.kernel_dim());
                  info("n=1 t=5: kappa_rank = " + std::to_string(t5_rank) +
                       "; raw 65-point evaluation kernel = " + std::to_string(raw_kernel) +
                       " (they differ: x^q - x vanishes at every rational point without "
                       "containing the curve)");
                  info("n=1 t=5: kappa_eval refuses by its degree-bound guard "
                       "(q^2+1 = 65 <= 65 = t*(q+2q0+1)); endpoint unattainable as stated");
                  bool raised = false;
                  try {
                      (void)kappa_eval(p1, F1, 5);
                  } catch (const std::domain_error&) {
                      raised = true;
                  }
                  EXPECT(raised, "kappa_eval(5) must refuse at n=1");
                  EXPECT(kappa_rank(p1, 5) == raw_kernel,
                         "n=1 t=5 (cannot hold: evaluation over 65 points is not a "
                         "containment certificate at degree 5)");
              });

    criterion("criterion-9 very-ampleness: smallest m, embedding dimensions, next m", [] {
        auto p1 = make_params(1);
        auto t1 = build_table(p1);
        EXPECT(t1.smallest_very_ample() == 13, "n=1 smallest");
        EXPECT(t1.embedding_dimension(13) == 4, "n=1 embedding dimension");
        auto p2 = make_params(2);
        auto t2 = build_table(p2);
        EXPECT(t2.smallest_very_ample() == 41, "n=2 smallest");
        EXPECT(t2.embedding_dimension(41) == 4, "n=2 embedding dimension");
        long long next = 42;
        while (!t2.is_very_ample(next))
            ++next;
        EXPECT(next == 73, "next very ample = 2q+2q0+1");
        long long dim = t2.embedding_dimension(73);
        info("|73P| embedding dimension computed: " + std::to_string(dim) +
             " (a P^9 target is sometimes quoted; flagged, not asserted)");
        EXPECT(dim == 8, "computed embedding dimension at m=73");
    });

    criterion("criterion-10 seeded property suites (n=1,2)", [] {
        for (long long n : {1, 2}) {
            auto p = make_params(n);
            Gf2m F(n);
            std::mt19937_64 rng(0xacce97ull + static_cast<unsigned long long>(n));
            std::uniform_int_distribution<Fe> fe(0, static_cast<Fe>(F.order() - 1));
            for (int i = 0; i < 2000; ++i) {
                Fe a = fe(rng), b = fe(rng), c = fe(rng);
                EXPECT(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)),
                       "distributivity");
                EXPECT(F.add(a, a) == 0, "characteristic 2");
            }
            for (long long a = 0; a <= 3; ++a) // exhaustive small-range normalize
                for (long long bb = 0; bb <= 4; ++bb)
                    for (long long cc = 0; cc <= 2 * p.q0; ++cc)
                        for (long long dd = 0; dd <= 2 * p.q0; ++dd) {
                            ExponentTuple t{a, bb, cc, dd};
                            auto ct = normalize(t, p);
                            EXPECT(norm(ct, p) == norm(t, p), "norm preserved");
                            EXPECT(normalize(ct, p) == ct, "idempotent");
                        }
            std::uniform_int_distribution<long long> ea(0, 12), eb(0, 6), ec(0, 6), ed(0, 6);
            for (int i = 0; i < 1000; ++i) { // strategy independence
                FFPoly poly;
                for (int k = 0; k < 6; ++k)
                    poly.add_term({ea(rng), eb(rng), ec(rng), ed(rng)}, 1);
                ReduceOptions opts;
                opts.order = RuleOrder::randomized;
                opts.seed = rng();
                EXPECT(reduce(poly, p) == reduce(poly, p, opts), "strategy independence");
            }
            auto pts = enumerate_points(p, F);
            for (int i = 0; i < 100; ++i) { // eval-reduce compatibility
                FFPoly poly;
                for (int k = 0; k < 6; ++k)
                    poly.add_term({ea(rng), eb(rng), ec(rng), ed(rng)}, 1);
                FFPoly red = reduce(poly, p);
                for (const auto& pt : pts)
                    EXPECT(eval_ffpoly(F, p, poly, pt) == eval_ffpoly(F, p, red, pt),
                           "eval commutes with reduce");
            }
        }
    });

    criterion("criterion-11 scale check n=3 [optional-slow]", [] {
        auto p = make_params(3);
        auto t = build_table(p);
        EXPECT(static_cast<long long>(t.gaps().size()) == 1016, "gap count");
        Gf2m F(3);
        EXPECT(kappa_rank(p, 2) == 1, "kappa_rank(2)");
        EXPECT(kappa_eval(p, F, 2) == 1, "kappa_eval(2), 16385-point evaluation");
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
