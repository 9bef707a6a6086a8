#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "suzuki/gf.hpp"
#include "suzuki/linalg.hpp"

using namespace suzuki;

TEST_CASE("rank and kernel basics") {
    BitMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id.set(i, i);
    CHECK(rank_gf2(id) == 3);
    CHECK(kernel_basis_gf2(id).rows() == 0);

    BitMatrix zero(2, 5);
    CHECK(rank_gf2(zero) == 0);
    CHECK(kernel_basis_gf2(zero).rows() == 5);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(0x5080u);
    for (int trial = 0; trial < 10; ++trial) {
        BitMatrix m(50, 80);
        for (std::size_t r = 0; r < 50; ++r)
            for (std::size_t c = 0; c < 80; ++c)
                if (rng() & 1u)
                    m.set(r, c);
        std::size_t rk = rank_gf2(m);
        BitMatrix K = kernel_basis_gf2(m);
        CHECK(rk + K.rows() == 80);

        // every kernel row really lies in the null space
        for (std::size_t i = 0; i < K.rows(); ++i)
            for (std::size_t r = 0; r < m.rows(); ++r) {
                int dot = 0;
                for (std::size_t c = 0; c < 80; ++c)
                    dot ^= (m.get(r, c) && K.get(i, c)) ? 1 : 0;
                REQUIRE(dot == 0);
            }
    }
}

TEST_CASE("row space insert/contains") {
    BitRowSpace s(4);
    auto vec = [](std::initializer_list<int> bits) {
        std::vector<std::uint64_t> v(1, 0);
        std::size_t i = 0;
        for (int b : bits) {
            if (b)
                v[0] |= 1ull << i;
            ++i;
        }
        return v;
    };
    CHECK(s.insert(vec({1, 0, 1, 0})));
    CHECK(s.insert(vec({0, 1, 0, 0})));
    CHECK_FALSE(s.insert(vec({1, 1, 1, 0})));
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec({1, 1, 1, 0})));
    CHECK_FALSE(s.contains(vec({0, 0, 1, 0})));
    CHECK(s.contains(vec({0, 0, 0, 0})));
}

TEST_CASE("GF(q) rank matches GF(2) rank on 0/1 matrices") {
    Gf2m F(2);
    std::mt19937_64 rng(0xabcdu);
    for (int trial = 0; trial < 5; ++trial) {
        BitMatrix m(20, 30);
        GfqMatrix mq(F, 20, 30);
        for (std::size_t r = 0; r < 20; ++r)
            for (std::size_t c = 0; c < 30; ++c)
                if (rng() & 1u) {
                    m.set(r, c);
                    mq.at(r, c) = 1;
                }
        CHECK(rank_gf2(m) == mq.rank());
        CHECK(mq.rank() + mq.kernel_dim() == 30);
    }
}

TEST_CASE("GF(q) elimination with non-unit pivots") {
    Gf2m F(1);
    // rows: (a, a^2), (a^2, a^3) are proportional; (1, 0) is not
    GfqMatrix m(F, 3, 2);
    m.at(0, 0) = 2, m.at(0, 1) = 4;
    m.at(1, 0) = 4, m.at(1, 1) = F.mul(4, 2);
    m.at(2, 0) = 1, m.at(2, 1) = 0;
    CHECK(m.rank() == 2);
    GfqMatrix prop(F, 2, 2);
    prop.at(0, 0) = 2, prop.at(0, 1) = 4;
    prop.at(1, 0) = 4, prop.at(1, 1) = F.mul(4, 2);
    CHECK(prop.rank() == 1);
    CHECK(prop.kernel_dim() == 1);
}
