// Weierstrass semigroup H(P_inf) = <q, q+q0, q+2q0, q+2q0+1> as a coin-problem
// DP table, plus everything read off it: gaps, Frobenius number, Riemann-Roch
// dimensions, very-ampleness.

#ifndef SUZUKI_SEMIGROUP_HPP
#define SUZUKI_SEMIGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "suzuki/params.hpp"

namespace suzuki {

class SemigroupTable {
public:
    SemigroupTable(const SuzukiParams& params, long long bound)
        : params_(params), bound_(bound) {
        if (bound < 0)
            throw std::invalid_argument("SemigroupTable: bound must be >= 0");
        member_.assign(static_cast<std::size_t>(bound) + 1, 0);
        member_[0] = 1;
        for (long long s = 1; s <= bound; ++s) {
            for (long long g : params.generators) {
                if (s >= g && member_[static_cast<std::size_t>(s - g)]) {
                    member_[static_cast<std::size_t>(s)] = 1;
                    break;
                }
            }
        }
        count_.assign(member_.size(), 0);
        long long c = 0;
        for (long long s = 0; s <= bound; ++s) {
            c += member_[static_cast<std::size_t>(s)];
            count_[static_cast<std::size_t>(s)] = c;
        }
    }

    const SuzukiParams& params() const { return params_; }
    long long bound() const { return bound_; }

    bool member(long long s) const {
        check_range(s);
        return member_[static_cast<std::size_t>(s)] != 0;
    }

    // |{ s in H : s <= m }| = dim L(m P_inf).
    long long count_up_to(long long m) const {
        check_range(m);
        return count_[static_cast<std::size_t>(m)];
    }

    std::vector<long long> gaps() const {
        require_full();
        std::vector<long long> g;
        for (long long s = 0; s <= bound_; ++s)
            if (!member_[static_cast<std::size_t>(s)])
                g.push_back(s);
        return g;
    }

    long long frobenius() const {
        require_full();
        for (long long s = bound_; s >= 0; --s)
            if (!member_[static_cast<std::size_t>(s)])
                return s;
        throw std::logic_error("frobenius: semigroup has no gaps"); // genus >= 1 always
    }

    bool is_spanned(long long m) const { return member(m); }

    bool is_very_ample(long long m) const {
        if (m < 1)
            throw std::invalid_argument("is_very_ample: m must be >= 1");
        return member(m) && member(m - 1);
    }

    long long smallest_very_ample() const {
        for (long long m = 1; m <= bound_; ++m)
            if (member_[static_cast<std::size_t>(m)] && member_[static_cast<std::size_t>(m - 1)])
                return m;
        throw std::logic_error("smallest_very_ample: bound too small");
    }

    // Projective dimension of the image span: dim L(m) - 1.
    long long embedding_dimension(long long m) const {
        if (!is_very_ample(m))
            throw std::domain_error("embedding_dimension: |mP| is not very ample");
        return count_up_to(m) - 1;
    }

private:
    SuzukiParams params_;
    long long bound_;
    std::vector<std::uint8_t> member_;
    std::vector<long long> count_;

    void check_range(long long s) const {
        if (s < 0 || s > bound_)
            throw std::out_of_range("SemigroupTable: index outside table range");
    }

    // Gap queries need the table to reach past the largest gap (<= 2g-1).
    void require_full() const {
        if (bound_ < 2 * params_.genus)
            throw std::out_of_range("SemigroupTable: bound below 2*genus");
    }
};

// Covers every query issued by the other modules.
inline long long default_bound(const SuzukiParams& p) {
    return 2 * p.genus + p.m_embed;
}

inline SemigroupTable build_table(const SuzukiParams& p, long long bound) {
    return SemigroupTable(p, bound);
}

inline SemigroupTable build_table(const SuzukiParams& p) {
    return SemigroupTable(p, default_bound(p));
}

// Table that can answer both gap queries and dimension queries up to m.
inline SemigroupTable table_covering(const SuzukiParams& p, long long m) {
    return SemigroupTable(p, std::max(default_bound(p), m));
}

} // namespace suzuki

#endif
