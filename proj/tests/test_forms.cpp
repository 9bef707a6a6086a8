#include <catch2/catch_amalgamated.hpp>

#include "suzuki/forms.hpp"
#include "suzuki/semigroup.hpp"

using namespace suzuki;

TEST_CASE("monomial lists") {
    CHECK(monomials(1).size() == 5);
    CHECK(monomials(2).size() == 15);
    CHECK(monomials(9).size() == 715);
    auto ms = monomials(2);
    for (std::size_t i = 1; i < ms.size(); ++i)
        CHECK(colex_less(ms[i - 1], ms[i]));
    for (const auto& m : ms)
        CHECK(m[0] + m[1] + m[2] + m[3] + m[4] == 2);
}

TEST_CASE("reduction matrix structure at t=2") {
    auto p = make_params(2);
    auto M = reduction_matrix(p, 2);
    CHECK(M.rows() == 14); // dim L(82)
    CHECK(M.cols() == 15);

    auto ms = monomials(2);
    auto idx = monomial_index(ms);
    auto basis = basis_tuples(p, 82);
    auto row_of = [&](const ExponentTuple& t) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == t)
                return i;
        FAIL("tuple not in basis");
        return std::size_t(0);
    };

    std::size_t col_y2 = idx.at({0, 2, 0, 0, 0});
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < M.rows(); ++r)
        if (M.get(r, col_y2))
            ++nnz;
    CHECK(nnz == 2);
    CHECK(M.get(row_of({1, 0, 1, 0}), col_y2)); // x v
    CHECK(M.get(row_of({0, 0, 0, 1}), col_y2)); // w

    std::size_t col_x1x5 = idx.at({1, 0, 0, 0, 1});
    nnz = 0;
    for (std::size_t r = 0; r < M.rows(); ++r)
        if (M.get(r, col_x1x5))
            ++nnz;
    CHECK(nnz == 1);
    CHECK(M.get(row_of({1, 0, 0, 0}), col_x1x5));

    CHECK(rank_gf2(M) == 14);
}

TEST_CASE("kappa by rank") {
    auto p = make_params(2);
    CHECK(kappa_rank(p, 2) == 1);
    CHECK(kappa_rank(p, 3) == 5);
    CHECK(kappa_rank(p, 4) == 15);
    CHECK(kappa_rank(p, 9) == 469);
}

TEST_CASE("kappa by point evaluation") {
    auto p2 = make_params(2);
    Gf2m F2(2);
    CHECK(kappa_eval(p2, F2, 2) == 1);
    auto p1 = make_params(1);
    Gf2m F1(1);
    CHECK(kappa_eval(p1, F1, 2) == 1);
    CHECK(kappa_eval(p2, F2, 9) == 469);

    // the Bezout-style guard: 65 points cannot certify degree-5 containment
    CHECK_THROWS_AS(kappa_eval(p1, F1, 5), std::domain_error);
}

TEST_CASE("the two kappa oracles agree on their common range") {
    auto p1 = make_params(1);
    Gf2m F1(1);
    for (long long t = 2; t <= 4; ++t)
        CHECK(kappa_rank(p1, t) == kappa_eval(p1, F1, t));
    auto p2 = make_params(2);
    Gf2m F2(2);
    for (long long t = 2; t <= 5; ++t)
        CHECK(kappa_rank(p2, t) == kappa_eval(p2, F2, t));
}

TEST_CASE("kernel dimension is invariant under base-field extension") {
    auto p = make_params(2);
    Gf2m F(2);
    for (long long t : {2, 3}) {
        auto M = reduction_matrix(p, t);
        GfqMatrix Mq(F, M.rows(), M.cols());
        for (std::size_t r = 0; r < M.rows(); ++r)
            for (std::size_t c = 0; c < M.cols(); ++c)
                if (M.get(r, c))
                    Mq.at(r, c) = 1;
        CHECK(M.cols() - rank_gf2(M) == Mq.kernel_dim());
    }
}

TEST_CASE("unique quadric") {
    for (long long n : {1, 2}) {
        auto p = make_params(n);
        auto k = unique_quadric(p);
        CHECK(k.dim == 1);
        auto idx = monomial_index(monomials(2));
        for (const auto& [m, j] : idx) {
            bool in_support = (m == Monomial5{0, 2, 0, 0, 0}) ||
                              (m == Monomial5{1, 0, 1, 0, 0}) ||
                              (m == Monomial5{0, 0, 0, 1, 1});
            CHECK(k.basis.get(0, j) == in_support);
        }
    }
}

TEST_CASE("quadric evaluates to zero at the point at infinity") {
    auto p = make_params(2);
    Gf2m F(2);
    std::vector<Monomial5> q = {{0, 2, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 0, 0, 1, 1}};
    CHECK(eval_form(F, q, embed_infinity(p)) == 0);
}

TEST_CASE("quadric multiples") {
    auto p = make_params(2);
    auto qm2 = quadric_multiples(p, 2);
    CHECK(qm2.dim == 1);
    auto qm3 = quadric_multiples(p, 3);
    CHECK(qm3.dim == 5);
    auto qm4 = quadric_multiples(p, 4);
    CHECK(qm4.dim == 15);

    // multiples sit inside the kernel; equality holds for t <= q0
    for (long long t = 2; t <= p.q0 + 1; ++t) {
        auto k = form_kernel(p, t);
        auto qm = quadric_multiples(p, t);
        CHECK(qm.dim == binom4(t + 2));
        BitRowSpace kernel_space(k.basis.cols());
        for (std::size_t i = 0; i < k.basis.rows(); ++i)
            kernel_space.insert(k.basis.row(i));
        auto low = monomials(t - 2);
        auto idx = monomial_index(monomials(t));
        std::size_t words = k.basis.words_per_row();
        const std::array<Monomial5, 3> q_terms{
            Monomial5{0, 2, 0, 0, 0}, Monomial5{1, 0, 1, 0, 0}, Monomial5{0, 0, 0, 1, 1}};
        for (const auto& m : low) {
            std::vector<std::uint64_t> row(words, 0);
            for (const auto& qt : q_terms) {
                Monomial5 prod;
                for (int i = 0; i < 5; ++i)
                    prod[i] = m[i] + qt[i];
                std::size_t j = idx.at(prod);
                row[j / 64] ^= 1ull << (j % 64);
            }
            REQUIRE(kernel_space.contains(row));
        }
        if (t <= p.q0)
            CHECK(qm.dim == k.dim);
        else
            CHECK(qm.dim < k.dim);
    }
}

TEST_CASE("extra degree-(q0+1) forms") {
    auto p = make_params(2);
    Gf2m F(2);
    auto ef = extra_forms(p, F); // throws on any failed internal check
    CHECK(ef.count >= 4);
    CHECK(ef.count == kappa_rank(p, 5) - binom4(7));

    auto p1 = make_params(1);
    Gf2m F1(1);
    CHECK(extra_forms(p1, F1).count >= 4);
}
