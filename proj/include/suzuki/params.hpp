// Numeric constants of the Suzuki family member indexed by n.

#ifndef SUZUKI_PARAMS_HPP
#define SUZUKI_PARAMS_HPP

#include <array>
#include <stdexcept>

namespace suzuki {

// All derived constants of the curve y^q - y = x^q0 (x^q - x) with
// q0 = 2^n, q = 2*q0^2.  Immutable after construction.
struct SuzukiParams {
    long long n = 0;
    long long q0 = 0;                      // 2^n
    long long q = 0;                       // 2*q0^2 = 2^(2n+1)
    long long genus = 0;                   // q0*(q-1)
    long long m_embed = 0;                 // q + 2*q0 + 1, smallest very ample degree
    std::array<long long, 4> generators{}; // q, q+q0, q+2q0, q+2q0+1
    long long canonical_pole = 0;          // 2*genus - 2
    bool oracle_only_formulas = false;     // q0 < 4: the six-case closed forms
                                           // degenerate; dimensions come from
                                           // the semigroup oracle
};

inline SuzukiParams make_params(long long n) {
    if (n <= 0)
        throw std::invalid_argument("make_params: n must be a positive integer");
    if (n > 20)
        throw std::invalid_argument("make_params: n too large for 64-bit arithmetic");
    SuzukiParams p;
    p.n = n;
    p.q0 = 1LL << n;
    p.q = 2 * p.q0 * p.q0;
    p.genus = p.q0 * (p.q - 1);
    p.m_embed = p.q + 2 * p.q0 + 1;
    p.generators = {p.q, p.q + p.q0, p.q + 2 * p.q0, p.q + 2 * p.q0 + 1};
    p.canonical_pole = 2 * p.genus - 2;
    p.oracle_only_formulas = (p.q0 < 4);
    return p;
}

} // namespace suzuki

#endif
