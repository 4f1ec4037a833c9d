#include "vergne/cohomology.hpp"

#include <future>
#include <sstream>

namespace vergne {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<std::string> consistency_errors(const BettiTable& t) {
    std::vector<std::string> errors;
    const int n = t.n;
    if (t.betti.size() != static_cast<std::size_t>(n) + 1) {
        errors.push_back("betti vector has wrong length");
        return errors;
    }
    if (t.betti[0] != 1) errors.push_back("b0 != 1");

    std::vector<std::uint64_t> sums(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [km, dim] : t.graded) {
        const auto [k, m] = km;
        if (k < 0 || k > n || m < min_degree(n, k) || m > max_degree(n, k)) {
            std::ostringstream os;
            os << "graded entry (" << k << "," << m << ") outside the degree range";
            errors.push_back(os.str());
            continue;
        }
        sums[static_cast<std::size_t>(k)] += dim;
    }
    for (int k = 0; k <= n; ++k)
        if (sums[static_cast<std::size_t>(k)] != t.betti[static_cast<std::size_t>(k)]) {
            std::ostringstream os;
            os << "graded sum for k=" << k << " is " << sums[static_cast<std::size_t>(k)]
               << ", b_k is " << t.betti[static_cast<std::size_t>(k)];
            errors.push_back(os.str());
        }

    std::int64_t alternating = 0;
    for (int k = 0; k <= n; ++k) {
        const auto b = static_cast<std::int64_t>(t.betti[static_cast<std::size_t>(k)]);
        alternating += (k % 2 == 0) ? b : -b;
    }
    if (alternating != 0) errors.push_back("alternating sum of Betti numbers is " + std::to_string(alternating));
    return errors;
}

Cohomology::Cohomology(VergneAlgebra g) : g_(std::move(g)), d_(differential(g_)) {}

void Cohomology::check_k(int k) const {
    if (k < 0 || k > g_.dimension())
        throw InvalidArgument("topological degree " + std::to_string(k) + " outside [0, " +
                              std::to_string(g_.dimension()) + "]");
}

std::uint64_t Cohomology::slice_rank(int k, int m) const {
    const int n = g_.dimension();
    if (k < 0 || k >= n) return 0;
    {
        std::lock_guard lock(mutex_);
        if (auto it = rank_cache_.find({k, m}); it != rank_cache_.end()) return it->second;
    }
    const auto domain = basis_graded(n, k, m);
    std::uint64_t r = 0;
    if (!domain.empty()) r = rank(matrix_of(d_, domain, basis_graded(n, k + 1, m)));
    std::lock_guard lock(mutex_);
    rank_cache_.emplace(std::pair{k, m}, r);
    return r;
}

std::uint64_t Cohomology::cocycle_dim(int k) const {
    check_k(k);
    {
        std::lock_guard lock(mutex_);
        if (auto it = cocycle_cache_.find(k); it != cocycle_cache_.end()) return it->second;
    }
    const int n = g_.dimension();
    std::uint64_t z = 0;
    for (const auto& [m, slice] : graded_slices(n, k)) {
        if (slice.empty()) continue;
        if (k == n) {
            z += slice.size();
            continue;
        }
        const auto codomain = basis_graded(n, k + 1, m);
        const std::uint64_t r = codomain.empty() ? 0 : slice_rank(k, m);
        z += slice.size() - r;
    }
    std::lock_guard lock(mutex_);
    cocycle_cache_.emplace(k, z);
    return z;
}

std::uint64_t Cohomology::graded_betti(int k, int m) const {
    check_k(k);
    const int n = g_.dimension();
    const auto slice = basis_graded(n, k, m);
    if (slice.empty()) return 0;
    const std::uint64_t kernel = slice.size() - slice_rank(k, m);
    const std::uint64_t image = k == 0 ? 0 : slice_rank(k - 1, m);
    return kernel - image;
}

BettiTable Cohomology::betti() const {
    const int n = g_.dimension();
    BettiTable t;
    t.n = n;

    // Slices are independent; warm the rank cache one task per k.
    std::vector<std::future<std::uint64_t>> tasks;
    tasks.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        tasks.push_back(std::async(std::launch::async, [this, k] { return cocycle_dim(k); }));
    for (auto& task : tasks) t.cocycle_dims.push_back(task.get());

    t.betti.push_back(1);
    for (int k = 1; k <= n; ++k) {
        const auto zk = t.cocycle_dims[static_cast<std::size_t>(k)];
        const auto zk1 = t.cocycle_dims[static_cast<std::size_t>(k - 1)];
        t.betti.push_back(zk + zk1 - binomial(n, k - 1));
    }
    for (int k = 0; k <= n; ++k)
        for (int m = min_degree(n, k); m <= max_degree(n, k); ++m)
            if (auto h = graded_betti(k, m)) t.graded[{k, m}] = h;
    return t;
}

std::uint64_t cocycle_dim(const VergneAlgebra& g, int k) { return Cohomology(g).cocycle_dim(k); }

std::uint64_t graded_betti(const VergneAlgebra& g, int k, int m) {
    return Cohomology(g).graded_betti(k, m);
}

BettiTable betti(const VergneAlgebra& g) { return Cohomology(g).betti(); }

std::uint64_t cocycle_dim_full(const VergneAlgebra& g, int k) {
    const int n = g.dimension();
    if (k < 0 || k > n) throw InvalidArgument("topological degree out of range");
    const auto domain = basis(n, k);
    if (k == n) return domain.size();
    return nullity(matrix_of(differential(g), domain, basis(n, k + 1)));
}

std::optional<Monomial> commuting_square_counterexample(const VergneAlgebra& g1,
                                                        const VergneAlgebra& g2, int k) {
    const int n = g1.dimension();
    if (g2.dimension() != n) throw AmbientMismatch("commuting square needs algebras of equal dimension");
    if (k < 2 || k > n) throw InvalidArgument("commuting square defined for 2 <= k <= n");
    const auto d1 = differential(g1);
    const auto d2 = differential(g2);
    const Involution f(n);
    for (auto h : basis(n, k)) {
        const Form hf(n, h);
        if (d2(f(hf)) != f(d1(hf))) return h;
    }
    return std::nullopt;
}

bool verify_commuting_square(const VergneAlgebra& g1, const VergneAlgebra& g2, int k) {
    return !commuting_square_counterexample(g1, g2, k).has_value();
}

}  // namespace vergne
