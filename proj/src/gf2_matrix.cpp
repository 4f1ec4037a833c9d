#include "vergne/gf2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

namespace vergne {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + kWordBits - 1) / kWordBits),
      data_(rows * words_per_row_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    assert(r < rows_ && c < cols_);
    Word& w = data_[r * words_per_row_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    data_[r * words_per_row_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
}

std::span<const BitMatrix::Word> BitMatrix::row(std::size_t r) const {
    return {data_.data() + r * words_per_row_, words_per_row_};
}

std::span<BitMatrix::Word> BitMatrix::row(std::size_t r) {
    return {data_.data() + r * words_per_row_, words_per_row_};
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
    auto d = row(dst);
    auto s = std::as_const(*this).row(src);
    for (std::size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

namespace {

// Reduces m in place to row echelon form; returns pivot columns, one per
// nonzero row, in row order.
std::vector<std::size_t> echelonize(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    const std::size_t wpr = m.words_per_row();
    for (std::size_t w = 0; w < wpr && next < m.rows(); ++w) {
        for (std::size_t bit = 0; bit < BitMatrix::kWordBits && next < m.rows(); ++bit) {
            const BitMatrix::Word mask = BitMatrix::Word{1} << bit;
            std::size_t pivot = next;
            while (pivot < m.rows() && !(m.row(pivot)[w] & mask)) ++pivot;
            if (pivot == m.rows()) continue;
            m.swap_rows(next, pivot);
            for (std::size_t r = 0; r < m.rows(); ++r)
                if (r != next && (m.row(r)[w] & mask)) m.add_row(r, next);
            pivots.push_back(w * BitMatrix::kWordBits + bit);
            ++next;
        }
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    BitMatrix work = m;
    const std::size_t wpr = work.words_per_row();
    std::size_t r = 0;
    for (std::size_t w = 0; w < wpr && r < work.rows(); ++w) {
        for (std::size_t bit = 0; bit < BitMatrix::kWordBits && r < work.rows(); ++bit) {
            const BitMatrix::Word mask = BitMatrix::Word{1} << bit;
            std::size_t pivot = r;
            while (pivot < work.rows() && !(work.row(pivot)[w] & mask)) ++pivot;
            if (pivot == work.rows()) continue;
            work.swap_rows(r, pivot);
            // Rows above r already have zeros left of this column; only clear below.
            for (std::size_t below = r + 1; below < work.rows(); ++below)
                if (work.row(below)[w] & mask) work.add_row(below, r);
            ++r;
        }
    }
    return r;
}

std::size_t nullity(const BitMatrix& m) { return m.cols() - rank(m); }

std::size_t rank_naive(const BitMatrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c) ? 1 : 0;

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = (a[r][k] + a[rank][k]) % 2;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::uint8_t>> kernel_basis(const BitMatrix& m) {
    BitMatrix work = m;
    const auto pivots = echelonize(work);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(m.cols(), 0);
        v[free] = 1;
        // Reduced echelon form: pivot row i reads x_{pivot_i} + sum(free terms) = 0.
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (work.get(i, free)) v[pivots[i]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace vergne
