#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vergne {

/// Dense matrix over GF(2), rows packed into 64-bit words.
///
/// Column c of a row lives in word c / 64 at bit c % 64. Bits past the last
/// column are kept zero so whole-word comparisons and XORs stay valid.
class BitMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t words_per_row() const { return words_per_row_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    void flip(std::size_t r, std::size_t c);

    [[nodiscard]] std::span<const Word> row(std::size_t r) const;
    [[nodiscard]] std::span<Word> row(std::size_t r);

    /// row(dst) ^= row(src)
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    [[nodiscard]] BitMatrix transpose() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<Word> data_;
};

/// GF(2) row rank by XOR elimination on the packed rows.
[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// cols - rank: dimension of the right kernel.
[[nodiscard]] std::size_t nullity(const BitMatrix& m);

/// Reference rank: plain Gaussian elimination on an unpacked 0/1 array.
[[nodiscard]] std::size_t rank_naive(const BitMatrix& m);

/// A basis of the right kernel {v : m v = 0}, each vector given as a 0/1 list
/// of length cols(). Vectors come out in reduced form: vector i is the only one
/// with a 1 in its own free column.
[[nodiscard]] std::vector<std::vector<std::uint8_t>> kernel_basis(const BitMatrix& m);

}  // namespace vergne
