// Exact linear algebra: bit-packed Gaussian elimination over GF(2) and
// table-driven elimination over GF(2^m).  Leftmost-pivot selection throughout,
// so ranks, echelon forms and kernel bases are deterministic.

#ifndef SUZUKI_LINALG_HPP
#define SUZUKI_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "suzuki/gf.hpp"

namespace suzuki {

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        std::uint64_t& w = data_[r * wpr_ + c / 64];
        std::uint64_t m = 1ull << (c % 64);
        if (v)
            w |= m;
        else
            w &= ~m;
    }
    void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + c / 64] ^= 1ull << (c % 64); }

    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &data_[dst * wpr_];
        const std::uint64_t* s = &data_[src * wpr_];
        for (std::size_t k = 0; k < wpr_; ++k)
            d[k] ^= s[k];
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        std::uint64_t* a = &data_[i * wpr_];
        std::uint64_t* b = &data_[j * wpr_];
        for (std::size_t k = 0; k < wpr_; ++k)
            std::swap(a[k], b[k]);
    }

    bool row_is_zero(std::size_t r) const {
        const std::uint64_t* a = &data_[r * wpr_];
        for (std::size_t k = 0; k < wpr_; ++k)
            if (a[k])
                return false;
        return true;
    }

    std::vector<std::uint64_t> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * wpr_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * wpr_)};
    }

    void set_row(std::size_t r, const std::vector<std::uint64_t>& words) {
        for (std::size_t k = 0; k < wpr_; ++k)
            data_[r * wpr_ + k] = words[k];
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefGf2 {
    BitMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over GF(2).
inline RrefGf2 rref_gf2(BitMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.get(i, c)) {
                sel = i;
                break;
            }
        if (sel == m.rows())
            continue;
        m.swap_rows(r, sel);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c))
                m.xor_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank_gf2(const BitMatrix& m) { return rref_gf2(m).pivot_cols.size(); }

// Basis of { x : M x = 0 }, one row per free column, in the standard reduced
// form: entry at the free column is 1, entries at pivot columns come from the
// rref.  Deterministic.
inline BitMatrix kernel_basis_gf2(const BitMatrix& m) {
    RrefGf2 R = rref_gf2(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : R.pivot_cols)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    BitMatrix K(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t f = free_cols[i];
        K.set(i, f);
        for (std::size_t j = 0; j < R.pivot_cols.size(); ++j)
            if (R.mat.get(j, f))
                K.set(i, R.pivot_cols[j]);
    }
    return K;
}

// Incrementally maintained row space in reduced echelon form.
class BitRowSpace {
public:
    explicit BitRowSpace(std::size_t cols) : cols_(cols), wpr_((cols + 63) / 64) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    // Reduces the row against the space; inserts the remainder if nonzero.
    // Returns true if the dimension grew.
    bool insert(std::vector<std::uint64_t> row) {
        reduce(row);
        std::size_t p = leading_bit(row);
        if (p == cols_)
            return false;
        // keep reduced form: clear bit p in all existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (get_bit(rows_[i], p))
                xor_into(rows_[i], row);
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    bool contains(std::vector<std::uint64_t> row) const {
        reduce(row);
        return leading_bit(row) == cols_;
    }

private:
    std::size_t cols_, wpr_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;

    static bool get_bit(const std::vector<std::uint64_t>& v, std::size_t c) {
        return (v[c / 64] >> (c % 64)) & 1u;
    }
    static void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
        for (std::size_t k = 0; k < dst.size(); ++k)
            dst[k] ^= src[k];
    }
    std::size_t leading_bit(const std::vector<std::uint64_t>& v) const {
        for (std::size_t k = 0; k < wpr_; ++k)
            if (v[k]) {
                std::size_t b = k * 64;
                std::uint64_t w = v[k];
                while (!(w & 1u)) {
                    w >>= 1;
                    ++b;
                }
                return b;
            }
        return cols_;
    }
    void reduce(std::vector<std::uint64_t>& row) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (get_bit(row, pivots_[i]))
                xor_into(row, rows_[i]);
    }
};

// Dense matrix over GF(2^m); one Fe per entry.
class GfqMatrix {
public:
    GfqMatrix(const Gf2m& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Gf2m& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rank() const {
        GfqMatrix m = *this;
        return m.eliminate();
    }
    std::size_t kernel_dim() const { return cols_ - rank(); }

private:
    const Gf2m* field_;
    std::size_t rows_, cols_;
    std::vector<Fe> data_;

    // In-place elimination; returns the rank.  For each pivot the row is
    // scaled to a leading 1 and all its multiples are cached, so clearing a
    // column is a plain entrywise XOR per row (addition in characteristic 2).
    std::size_t eliminate() {
        const Gf2m& F = *field_;
        std::size_t q = static_cast<std::size_t>(F.order());
        std::vector<Fe> scaled(q * cols_);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (at(i, c) != 0) {
                    sel = i;
                    break;
                }
            if (sel == rows_)
                continue;
            if (sel != r)
                for (std::size_t k = c; k < cols_; ++k)
                    std::swap(at(r, k), at(sel, k));
            Fe piv = at(r, c);
            if (piv != 1) {
                Fe pinv = F.inv(piv);
                for (std::size_t k = c; k < cols_; ++k)
                    at(r, k) = F.mul(at(r, k), pinv);
            }
            for (std::size_t s = 0; s < q; ++s)
                for (std::size_t k = c; k < cols_; ++k)
                    scaled[s * cols_ + k] = F.mul(static_cast<Fe>(s), at(r, k));
            for (std::size_t i = r + 1; i < rows_; ++i) {
                Fe e = at(i, c);
                if (e == 0)
                    continue;
                const Fe* src = &scaled[static_cast<std::size_t>(e) * cols_];
                for (std::size_t k = c; k < cols_; ++k)
                    at(i, k) ^= src[k];
            }
            ++r;
        }
        return r;
    }
};

} // namespace suzuki

#endif
