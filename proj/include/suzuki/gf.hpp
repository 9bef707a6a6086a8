// Exact arithmetic in GF(2^(2n+1)), the field of definition of the curve.

#ifndef SUZUKI_GF_HPP
#define SUZUKI_GF_HPP

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace suzuki {

// Field element: bit i = coefficient of X^i in the residue representative.
// Total ordering by bit pattern gives deterministic sets and matrix layouts.
using Fe = std::uint32_t;

class Gf2m {
public:
    // GF(2^(2n+1)) with the integer-smallest irreducible modulus of degree 2n+1.
    explicit Gf2m(long long n) {
        if (n <= 0)
            throw std::invalid_argument("Gf2m: n must be positive");
        if (2 * n + 1 > 30)
            throw std::invalid_argument("Gf2m: field too large");
        deg_ = static_cast<int>(2 * n + 1);
        mod_ = smallest_irreducible(deg_);
        q_ = 1u << deg_;
        build_tables();
    }

    int ext_degree() const { return deg_; }
    std::uint32_t modulus() const { return mod_; }
    long long order() const { return q_; }

    Fe add(Fe a, Fe b) const { return a ^ b; }

    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0)
            return 0;
        long long e = log_[a] + log_[b];
        if (e >= q_ - 1)
            e -= q_ - 1;
        return exp_[e];
    }

    // Shift-and-xor product straight from the polynomial definition.
    // Kept as an independent cross-check of the table route.
    Fe mul_notable(Fe a, Fe b) const {
        std::uint32_t acc = 0;
        while (b) {
            if (b & 1u)
                acc ^= a;
            b >>= 1;
            a <<= 1;
            if (a & (1u << deg_))
                a ^= mod_;
        }
        return acc;
    }

    Fe inv(Fe a) const {
        if (a == 0)
            throw std::domain_error("Gf2m::inv: division by zero");
        long long e = (q_ - 1 - log_[a]) % (q_ - 1);
        return exp_[e];
    }

    // Square-and-multiply.
    Fe pow(Fe a, unsigned long long e) const {
        Fe r = 1, base = a;
        while (e) {
            if (e & 1ull)
                r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    // Unique square root in characteristic 2: a^(2^(2n)) = a^(q/2).
    Fe sqrt(Fe a) const { return pow(a, static_cast<unsigned long long>(q_) / 2); }

    std::vector<Fe> all_elements() const {
        std::vector<Fe> v(static_cast<std::size_t>(q_));
        for (long long i = 0; i < q_; ++i)
            v[static_cast<std::size_t>(i)] = static_cast<Fe>(i);
        return v;
    }

    // Irreducibility over GF(2) by trial division with every divisor of
    // degree at most deg/2.  Degrees here never exceed 30.
    static bool is_irreducible(std::uint32_t poly) {
        int d = degree_of(poly);
        if (d <= 0)
            return false;
        if ((poly & 1u) == 0)
            return false; // divisible by X
        for (std::uint32_t f = 2; degree_of(f) <= d / 2; ++f) {
            if (poly_mod(poly, f) == 0)
                return false;
        }
        return true;
    }

    // The irreducible degree-d polynomial that is smallest as an integer
    // (bit i = coefficient of X^i).  Deterministic across runs.
    static std::uint32_t smallest_irreducible(int d) {
        for (std::uint32_t p = 1u << d; p < (2u << d); ++p)
            if (is_irreducible(p))
                return p;
        throw std::logic_error("smallest_irreducible: no irreducible found"); // unreachable
    }

private:
    int deg_ = 0;
    std::uint32_t mod_ = 0;
    long long q_ = 0;
    std::vector<Fe> exp_;       // exp_[k] = g^k, k in [0, q-2]
    std::vector<long long> log_; // log_[exp_[k]] = k

    static int degree_of(std::uint32_t p) {
        int d = -1;
        while (p) {
            ++d;
            p >>= 1;
        }
        return d;
    }

    static std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
        int dm = degree_of(m);
        for (int da = degree_of(a); da >= dm; da = degree_of(a))
            a ^= m << (da - dm);
        return a;
    }

    void build_tables() {
        exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
        log_.assign(static_cast<std::size_t>(q_), -1);
        for (Fe g = 2; g < q_; ++g) {
            Fe x = 1;
            long long k = 0;
            for (; k < q_ - 1; ++k) {
                exp_[static_cast<std::size_t>(k)] = x;
                x = mul_notable(x, g);
                if (x == 1) {
                    ++k;
                    break;
                }
            }
            if (k == q_ - 1) { // g generates the full multiplicative group
                for (long long i = 0; i < q_ - 1; ++i)
                    log_[exp_[static_cast<std::size_t>(i)]] = i;
                return;
            }
        }
        throw std::logic_error("Gf2m: no generator found"); // unreachable
    }
};

// Lowercase hex of the bit pattern, used in all JSON output.
inline std::string fe_to_hex(Fe a) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", a);
    return buf;
}

inline Fe fe_from_hex(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("fe_from_hex: empty string");
    return static_cast<Fe>(std::stoul(s, nullptr, 16));
}

} // namespace suzuki

#endif
