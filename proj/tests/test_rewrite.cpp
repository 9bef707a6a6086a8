#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "suzuki/params.hpp"
#include "suzuki/rewrite.hpp"
#include "suzuki/semigroup.hpp"

using namespace suzuki;

namespace {

FFPoly poly_of(std::initializer_list<ExponentTuple> ts) {
    FFPoly p;
    for (const auto& t : ts)
        p.add_term(t, 1);
    return p;
}

FFPoly random_poly(std::mt19937_64& rng) {
    FFPoly p;
    std::uniform_int_distribution<int> nterms(1, 8);
    std::uniform_int_distribution<long long> ea(0, 12), eb(0, 6), ec(0, 6), ed(0, 6);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p.add_term({ea(rng), eb(rng), ec(rng), ed(rng)}, 1);
    return p;
}

} // namespace

TEST_CASE("rule pole-order bookkeeping") {
    auto p = make_params(2);
    auto rs = rules(p);
    // v^q0 and x^(q0+1) share pole order, as do w^q0 and x^q0 y; the second
    // rhs monomial always has strictly smaller pole order.
    CHECK(norm(rs[1].lhs, p) == 160);
    CHECK(norm(rs[1].rhs[0], p) == 160);
    CHECK(norm(rs[2].lhs, p) == 164);
    CHECK(norm(rs[2].rhs[0], p) == 164);
    for (const auto& r : rs) {
        CHECK(norm(r.rhs[0], p) == norm(r.lhs, p));
        CHECK(norm(r.rhs[1], p) < norm(r.lhs, p));
    }
}

TEST_CASE("reduction examples") {
    auto p = make_params(2);
    CHECK(reduce(poly_of({{0, 2, 0, 0}}), p) == poly_of({{1, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(reduce(poly_of({{0, 0, p.q0, 0}}), p) ==
          poly_of({{p.q0 + 1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(reduce(poly_of({{0, 3, 0, 0}}), p) == poly_of({{1, 1, 1, 0}, {0, 1, 0, 1}}));
}

TEST_CASE("multiplication") {
    auto p = make_params(2);
    CHECK(multiply(poly_of({{1, 0, 0, 0}}), poly_of({{0, 0, 1, 0}}), p) ==
          poly_of({{1, 0, 1, 0}}));
    CHECK(multiply(poly_of({{0, 1, 0, 0}}), poly_of({{0, 1, 0, 0}}), p) ==
          poly_of({{1, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(multiply(poly_of({{0, 0, 0, p.q0 - 1}}), poly_of({{0, 0, 0, 1}}), p) ==
          poly_of({{p.q0, 1, 0, 0}, {0, 0, 1, 0}}));
}

TEST_CASE("curve identity reduces to zero") {
    CHECK(verify_curve_identity(make_params(1)));
    CHECK(verify_curve_identity(make_params(2)));

    // dropping the x^(q0+1) term must break the identity
    auto p = make_params(2);
    FFPoly broken;
    broken.add_term({0, p.q, 0, 0}, 1);
    broken.add_term({0, 1, 0, 0}, 1);
    broken.add_term({p.q + p.q0, 0, 0, 0}, 1);
    CHECK_FALSE(reduce(broken, p).is_zero());
}

TEST_CASE("strategy independence") {
    for (long long n : {1, 2}) {
        auto p = make_params(n);
        std::mt19937_64 rng(0x5eedull + static_cast<unsigned long long>(n));
        for (int i = 0; i < 1000; ++i) {
            FFPoly poly = random_poly(rng);
            FFPoly fixed = reduce(poly, p);
            ReduceOptions opts;
            opts.order = RuleOrder::randomized;
            opts.seed = rng();
            CHECK(fixed == reduce(poly, p, opts));
        }
    }
}

TEST_CASE("pole order never increases") {
    for (long long n : {1, 2}) {
        auto p = make_params(n);
        std::mt19937_64 rng(0x90f0ull + static_cast<unsigned long long>(n));
        for (int i = 0; i < 300; ++i) {
            FFPoly poly = random_poly(rng);
            CHECK(reduce(poly, p).max_norm(p) <= poly.max_norm(p));
        }
    }
}

TEST_CASE("growth guard") {
    auto p = make_params(1);
    FFPoly huge;
    huge.add_term({4 * p.m_embed + 1, 0, 0, 0}, 1);
    CHECK_THROWS_AS(reduce(huge, p), std::domain_error);
}

TEST_CASE("sigma ranks") {
    auto p = make_params(2);
    auto table = table_covering(p, 9 * p.m_embed);
    CHECK(sigma_rank(p, table, 1) == std::pair<long long, long long>{5, 5});
    CHECK(sigma_rank(p, table, 2) == std::pair<long long, long long>{14, 14});
    CHECK(sigma_rank(p, table, 9) == std::pair<long long, long long>{246, 246});
}

TEST_CASE("mu ranks") {
    auto p = make_params(2);
    auto table = build_table(p);
    CHECK(mu_rank(p, table, 0, 1) == std::pair<long long, long long>{5, 5});
    CHECK(mu_rank(p, table, 1, 1) == std::pair<long long, long long>{14, 14});
    CHECK(mu_rank(p, table, 1, 2) == std::pair<long long, long long>{30, 30});
}

TEST_CASE("rewriting with GF(q) coefficients") {
    auto p = make_params(2);
    Gf2m F(2);
    GfqCoeff cf{&F};
    std::mt19937_64 rng(0xc0effull);
    std::uniform_int_distribution<Fe> coeff(1, static_cast<Fe>(F.order() - 1));
    for (int i = 0; i < 50; ++i) {
        FFPolyQ poly(cf);
        std::uniform_int_distribution<long long> e(0, 6);
        for (int k = 0; k < 5; ++k)
            poly.add_term({e(rng), e(rng), e(rng), e(rng)}, coeff(rng));
        FFPolyQ red = reduce(poly, p);
        CHECK(red.all_canonical(p));
        CHECK(red.max_norm(p) <= poly.max_norm(p));
    }
}
