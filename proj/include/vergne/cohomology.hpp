#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vergne/algebra.hpp"

namespace vergne {

[[nodiscard]] std::uint64_t binomial(int n, int k);

/// Betti numbers b_0..b_n, the graded pieces dim H^k_m, and dim Z_0..Z_n.
struct BettiTable {
    int n = 0;
    std::vector<std::uint64_t> betti;
    /// (k, m) -> dim H^k_m; only nonzero entries are stored.
    std::map<std::pair<int, int>, std::uint64_t> graded;
    std::vector<std::uint64_t> cocycle_dims;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Violations of the table's internal identities: b0 = 1, graded sums equal
/// totals with m inside [k(k+1)/2, kn - k(k-1)/2], and Σ(-1)^k b_k = 0.
/// Empty when consistent.
[[nodiscard]] std::vector<std::string> consistency_errors(const BettiTable& t);

/// Cohomology of one algebra with a cache of per-slice ranks of
/// d: Λ^k_m → Λ^{k+1}_m. Safe to share between threads.
class Cohomology {
public:
    explicit Cohomology(VergneAlgebra g);

    [[nodiscard]] const VergneAlgebra& algebra() const { return g_; }

    /// dim Z_k, summed over graded slices.
    [[nodiscard]] std::uint64_t cocycle_dim(int k) const;
    /// dim H^k_m = dim ker(d on Λ^k_m) - rank(d: Λ^{k-1}_m → Λ^k_m).
    [[nodiscard]] std::uint64_t graded_betti(int k, int m) const;
    /// b_k = dim Z_k + dim Z_{k-1} - C(n, k-1), b_0 = 1.
    [[nodiscard]] BettiTable betti() const;

    /// rank of d: Λ^k_m → Λ^{k+1}_m.
    [[nodiscard]] std::uint64_t slice_rank(int k, int m) const;

private:
    void check_k(int k) const;

    VergneAlgebra g_;
    LinearOperator d_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::uint64_t> rank_cache_;
    mutable std::map<int, std::uint64_t> cocycle_cache_;
};

[[nodiscard]] std::uint64_t cocycle_dim(const VergneAlgebra& g, int k);
[[nodiscard]] std::uint64_t graded_betti(const VergneAlgebra& g, int k, int m);
[[nodiscard]] BettiTable betti(const VergneAlgebra& g);

/// dim Z_k from the single unsliced matrix of d on Λ^k; oracle path for the
/// per-slice computation.
[[nodiscard]] std::uint64_t cocycle_dim_full(const VergneAlgebra& g, int k);

/// First basis k-monomial h with d2(f(h)) != f(d1(h)), if any.
[[nodiscard]] std::optional<Monomial> commuting_square_counterexample(const VergneAlgebra& g1,
                                                                      const VergneAlgebra& g2,
                                                                      int k);
/// d2∘f = f∘d1 on every basis monomial of topological degree k (k >= 2).
[[nodiscard]] bool verify_commuting_square(const VergneAlgebra& g1, const VergneAlgebra& g2, int k);

}  // namespace vergne
