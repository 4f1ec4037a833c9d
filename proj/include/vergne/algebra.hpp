#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vergne/errors.hpp"
#include "vergne/exterior.hpp"

namespace vergne {

/// Smallest dimension accepted for a Vergne-type algebra.
inline constexpr int kMinDimension = 5;

/// The e2-row [0, c(2,3), ..., c(2,n-2), 0, 0] of an n-dimensional algebra,
/// positions j = 2..n. Parsing does not enforce the zero padding at j = 2,
/// n-1, n; from_row rejects rows that break it.
class RowVector {
public:
    RowVector() = default;
    RowVector(int n, std::vector<std::uint8_t> entries);

    static RowVector zeros(int n);
    /// Accepts "[0, 0, 1, 0]", "0,0,1,0", "0010" and any whitespace.
    static RowVector parse(std::string_view text);

    [[nodiscard]] int dimension() const { return n_; }
    /// Entry at position j, 2 <= j <= n.
    [[nodiscard]] bool at(int j) const { return entries_.at(static_cast<std::size_t>(j - 2)) != 0; }
    void set(int j, bool value) { entries_.at(static_cast<std::size_t>(j - 2)) = value ? 1 : 0; }
    [[nodiscard]] const std::vector<std::uint8_t>& entries() const { return entries_; }

    /// True when r2 = r(n-1) = r(n) = 0.
    [[nodiscard]] bool padding_ok() const;

    /// Free bits r3..r(n-2) read as a binary numeral, r3 most significant.
    [[nodiscard]] std::uint64_t code() const;
    static RowVector from_code(int n, std::uint64_t code);

    /// "[0, 0, 0, 1, 0, 0]"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const RowVector&, const RowVector&) = default;
    friend auto operator<=>(const RowVector& a, const RowVector& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    int n_ = 0;
    std::vector<std::uint8_t> entries_;
};

/// c(i, j) for 2 <= i < j, i + j <= n. Lookups are symmetric and read 0 on
/// the diagonal and outside the range; the [e1, ei] brackets are implicit.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(int n);

    [[nodiscard]] int dimension() const { return n_; }
    [[nodiscard]] bool in_range(int i, int j) const {
        return i >= 2 && j >= 2 && i != j && i + j <= n_;
    }
    [[nodiscard]] bool operator()(int i, int j) const;
    void set(int i, int j, bool value);

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    int n_ = 0;
    // upper_[i] bit j holds c(i, j) for i < j.
    std::vector<std::uint64_t> upper_;
};

struct JacobiFailure {
    enum class Kind { Padding, Alternation, Completion, Triple, SquareNonzero };
    Kind kind;
    int i = 0;
    int j = 0;
    int k = 0;

    [[nodiscard]] std::string describe() const;
};

/// First identity that fails among: the e1-completion identities
/// c(i,j) = c(i+1,j) + c(i,j+1) (reported as Alternation when i+1 = j), then
/// the Jacobi identity on triples 2 <= i < j < k, i+j+k <= n.
[[nodiscard]] std::optional<JacobiFailure> find_jacobi_failure(const StructureConstants& c);
[[nodiscard]] bool jacobi_holds(const StructureConstants& c);

/// Images d(e^k) for k = 1..n (index 0 unused).
[[nodiscard]] std::vector<Form> differential_images(const StructureConstants& c);
/// d∘d = 0 on every generator, checked through the derivation extension.
[[nodiscard]] bool square_vanishes(const StructureConstants& c);

/// A Lie algebra of Vergne type over GF(2): [e1, ei] = e(i+1) and
/// [ei, ej] = c(i,j) e(i+j). Every constructor validates the Jacobi identity.
class VergneAlgebra {
public:
    static VergneAlgebra m0(int n);
    static VergneAlgebra m2(int n);
    /// Completes the e2-row to the full table through the e1-Jacobi identities
    /// and validates the result. Throws JacobiViolation.
    static VergneAlgebra from_row(const RowVector& row);
    /// Validates an explicit table. Throws JacobiViolation.
    static VergneAlgebra from_constants(StructureConstants c);

    [[nodiscard]] int dimension() const { return c_.dimension(); }
    [[nodiscard]] bool c(int i, int j) const { return c_(i, j); }
    [[nodiscard]] const StructureConstants& constants() const { return c_; }
    [[nodiscard]] RowVector row() const;

    /// [u, v] for u, v given as GF(2) vectors over e1..en (bit i-1 ↔ ei).
    [[nodiscard]] std::uint64_t bracket(std::uint64_t u, std::uint64_t v) const;

    /// Drop e_n: the quotient by the centre line span(e_n). Requires n >= 6.
    [[nodiscard]] VergneAlgebra truncated() const;

    friend bool operator==(const VergneAlgebra&, const VergneAlgebra&) = default;

private:
    explicit VergneAlgebra(StructureConstants c) : c_(std::move(c)) {}
    StructureConstants c_;
};

[[nodiscard]] inline RowVector row_of(const VergneAlgebra& g) { return g.row(); }

/// The Chevalley–Eilenberg differential: d(e1) = d(e2) = 0,
/// d(ek) = e1∧e(k-1) + Σ_{i+j=k, 1<i<j} c(i,j) ei∧ej, extended as a derivation.
[[nodiscard]] LinearOperator differential(const VergneAlgebra& g);

/// D1(ei) = e(i-1) for i >= 3, zero on e1, e2; extended as a derivation.
[[nodiscard]] LinearOperator operator_D1(int n);
/// D2(ei) = e(i-2) for i >= 5, zero for i <= 4; extended as a derivation.
[[nodiscard]] LinearOperator operator_D2(int n);
/// R = e1∧D1 + d.
[[nodiscard]] LinearOperator operator_R(const VergneAlgebra& g);

/// Splits h = e1∧x + e2∧y + z with x free of e1, y and z free of e1 and e2.
struct Split {
    Form x;
    Form y;
    Form z;
};
[[nodiscard]] Split split_e1_e2(const Form& h);

/// f(e1∧x + e2∧y + z) = e1∧x + e2∧(y + D1(x)) + z on forms whose terms all
/// have topological degree in [2, n].
class Involution {
public:
    explicit Involution(int n);
    [[nodiscard]] int ambient() const { return n_; }
    [[nodiscard]] Form operator()(const Form& h) const;

private:
    int n_;
    LinearOperator d1_;
};

[[nodiscard]] Form involution_f(int n, const Form& h);

}  // namespace vergne
