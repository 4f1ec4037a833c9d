#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vergne/gf2_matrix.hpp"

namespace vergne {

/// Largest supported ambient dimension: a monomial is one 64-bit mask.
inline constexpr int kMaxDimension = 64;

/// e^{i1} ∧ ... ∧ e^{ik} as a set of generator indices (bit i-1 ↔ e^i).
/// The empty monomial is the scalar 1.
class Monomial {
public:
    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}

    /// Monomial from a list of 1-based indices; duplicates collapse (callers
    /// who need wedge semantics should use wedge()).
    static Monomial of(std::initializer_list<int> indices);
    static constexpr Monomial generator(int i) { return Monomial(std::uint64_t{1} << (i - 1)); }

    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    [[nodiscard]] constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1U; }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    /// Highest generator index present, 0 for the scalar.
    [[nodiscard]] constexpr int max_index() const { return 64 - std::countl_zero(bits_); }

    /// Number of generators.
    [[nodiscard]] int top_degree() const { return std::popcount(bits_); }
    /// Sum of generator indices.
    [[nodiscard]] int degree() const;
    [[nodiscard]] std::vector<int> indices() const;

    [[nodiscard]] constexpr Monomial without(int i) const {
        return Monomial(bits_ & ~(std::uint64_t{1} << (i - 1)));
    }

    friend constexpr bool operator==(Monomial, Monomial) = default;
    /// Canonical order: by topological degree, then lexicographic on the sorted
    /// index tuple.
    friend std::strong_ordering operator<=>(Monomial a, Monomial b);

private:
    std::uint64_t bits_ = 0;
};

/// A GF(2) linear combination of monomials: the set of monomials with
/// coefficient 1, kept sorted in canonical order.
class Form {
public:
    Form() = default;
    explicit Form(int ambient);
    Form(int ambient, Monomial m);
    /// Sums the given monomials; pairs cancel.
    Form(int ambient, std::vector<Monomial> terms);

    static Form one(int ambient) { return Form(ambient, Monomial{}); }
    static Form generator(int ambient, int i) { return Form(ambient, Monomial::generator(i)); }

    [[nodiscard]] int ambient() const { return ambient_; }
    [[nodiscard]] const std::vector<Monomial>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool contains(Monomial m) const;

    /// True when every term has the given topological degree (vacuous for 0).
    [[nodiscard]] bool is_top_homogeneous(int k) const;
    /// True when every term has the given degree (vacuous for 0).
    [[nodiscard]] bool is_homogeneous(int m) const;

    Form& operator+=(const Form& other);
    friend Form operator+(Form a, const Form& b) { return a += b; }

    friend bool operator==(const Form&, const Form&) = default;

private:
    int ambient_ = 0;
    std::vector<Monomial> terms_;
};

/// Product of two monomials, or nullopt when they share a generator.
[[nodiscard]] std::optional<Monomial> wedge(Monomial a, Monomial b);
[[nodiscard]] Form wedge(const Form& a, const Form& b);
[[nodiscard]] Form wedge(const Form& a, Monomial b);

[[nodiscard]] inline int degree(Monomial m) { return m.degree(); }
[[nodiscard]] inline int top_degree(Monomial m) { return m.top_degree(); }

/// All k-subsets of {1..n}, lexicographic in the sorted index tuple.
[[nodiscard]] std::vector<Monomial> basis(int n, int k);
/// The k-subsets of {1..n} with index sum m, same order.
[[nodiscard]] std::vector<Monomial> basis_graded(int n, int k, int m);
/// basis(n, k) split by degree; keys run over every m in the admissible range.
[[nodiscard]] std::map<int, std::vector<Monomial>> graded_slices(int n, int k);

/// Smallest and largest degree of a k-form in n variables.
[[nodiscard]] constexpr int min_degree(int n, int k) {
    (void)n;
    return k * (k + 1) / 2;
}
[[nodiscard]] constexpr int max_degree(int n, int k) { return k * n - k * (k - 1) / 2; }

/// A GF(2)-linear map on Λ*(e^1..e^n), given by its action on monomials.
class LinearOperator {
public:
    using MonomialMap = std::function<Form(Monomial)>;

    LinearOperator() = default;
    LinearOperator(int ambient, MonomialMap on_monomial);

    static LinearOperator zero(int ambient);
    static LinearOperator identity(int ambient);

    [[nodiscard]] int ambient() const { return ambient_; }
    [[nodiscard]] Form operator()(Monomial m) const;
    [[nodiscard]] Form operator()(const Form& f) const;

private:
    int ambient_ = 0;
    MonomialMap on_monomial_;
};

/// Extends generator images as a derivation: each generator of a monomial is
/// replaced in turn by its image and the results summed. images[i] is the
/// image of e^i for i = 1..n (index 0 unused); missing or short entries map to 0.
[[nodiscard]] LinearOperator derivation(int ambient, std::vector<Form> images);

/// a ∘ b
[[nodiscard]] LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
[[nodiscard]] LinearOperator sum(const LinearOperator& a, const LinearOperator& b);
/// x ↦ left ∧ op(x)
[[nodiscard]] LinearOperator wedge_left(const Form& left, const LinearOperator& op);

/// Column j holds the coordinates of op(domain[j]) in codomain order. Throws
/// ImageOutsideCodomain if some image term is not in the codomain list.
[[nodiscard]] BitMatrix matrix_of(const LinearOperator& op, const std::vector<Monomial>& domain,
                                  const std::vector<Monomial>& codomain);

/// Text syntax `e1^e6 + e3^e4`; "0" is the zero form and "1" the scalar.
[[nodiscard]] std::string to_string(Monomial m);
[[nodiscard]] std::string to_string(const Form& f);
[[nodiscard]] Form parse_form(std::string_view text, int ambient);

}  // namespace vergne
