#include "vergne/extension.hpp"

#include <algorithm>

#include "vergne/gf2_matrix.hpp"

namespace vergne {

namespace {

bool is_root(const VergneAlgebra& g) { return g.dimension() == kMinDimension; }

}  // namespace

VergneAlgebra central_extension(const VergneAlgebra& g, const Form& omega) {
    const int n = g.dimension();
    if (omega.ambient() != n) throw AmbientMismatch("cocycle ambient differs from algebra dimension");
    if (omega.is_zero() || !omega.is_top_homogeneous(2))
        throw NotHomogeneousTopDegree("extension cocycle must be a nonzero 2-form: " + to_string(omega));
    if (!omega.is_homogeneous(n + 1))
        throw NotHomogeneousTopDegree("extension cocycle must be homogeneous of degree " +
                                      std::to_string(n + 1) + ": " + to_string(omega));
    if (!omega.contains(Monomial::of({1, n})))
        throw MissingLeadingTerm("extension cocycle lacks the e1^e" + std::to_string(n) + " term");
    if (!differential(g)(omega).is_zero())
        throw NotACocycle("d(omega) != 0 for omega = " + to_string(omega));

    StructureConstants c(n + 1);
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; i + j <= n; ++j) c.set(i, j, g.c(i, j));
    for (auto m : omega.terms()) {
        const auto idx = m.indices();
        if (idx[0] >= 2) c.set(idx[0], idx[1], true);
    }
    return VergneAlgebra::from_constants(std::move(c));
}

std::vector<Form> admissible_cocycles(const VergneAlgebra& g) {
    const int n = g.dimension();
    const auto slice = basis_graded(n, 2, n + 1);
    const Monomial lead = Monomial::of({1, n});
    const auto kernel = kernel_basis(matrix_of(differential(g), slice, basis_graded(n, 3, n + 1)));

    const auto as_form = [&](const std::vector<std::uint8_t>& v) {
        std::vector<Monomial> terms;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) terms.push_back(slice[i]);
        return Form(n, std::move(terms));
    };

    std::vector<Form> tails;
    std::optional<Form> particular;
    for (const auto& v : kernel) {
        Form f = as_form(v);
        if (f.contains(lead) && !particular)
            particular = std::move(f);
        else
            tails.push_back(std::move(f));
    }
    if (!particular) return {};
    for (auto& t : tails)
        if (t.contains(lead)) t += *particular;

    std::vector<Form> out;
    const std::size_t count = std::size_t{1} << tails.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        Form omega = *particular;
        for (std::size_t b = 0; b < tails.size(); ++b)
            if ((mask >> b) & 1U) omega += tails[b];
        out.push_back(std::move(omega));
    }
    std::sort(out.begin(), out.end(),
              [](const Form& a, const Form& b) { return a.terms() < b.terms(); });
    return out;
}

Reduction reduce(const VergneAlgebra& g) {
    const int n = g.dimension();
    if (n <= kMinDimension) throw InvalidArgument("reduce needs dimension >= 6");
    std::vector<Monomial> terms{Monomial::of({1, n - 1})};
    for (int i = 2; 2 * i < n; ++i)
        if (g.c(i, n - i)) terms.push_back(Monomial::of({i, n - i}));
    return {g.truncated(), Form(n - 1, std::move(terms))};
}

VergneAlgebra Decomposition::replay() const {
    VergneAlgebra g = root;
    for (const auto& omega : steps) g = central_extension(g, omega);
    return g;
}

Decomposition decompose(const VergneAlgebra& g) {
    std::vector<Form> reversed;
    VergneAlgebra current = g;
    while (!is_root(current)) {
        auto [base, omega] = reduce(current);
        reversed.push_back(std::move(omega));
        current = std::move(base);
    }
    std::reverse(reversed.begin(), reversed.end());
    return {std::move(current), std::move(reversed)};
}

VergneAlgebra partner(const VergneAlgebra& g) {
    const Decomposition dec = decompose(g);
    VergneAlgebra h = dec.root == VergneAlgebra::m0(kMinDimension) ? VergneAlgebra::m2(kMinDimension)
                                                                   : VergneAlgebra::m0(kMinDimension);
    for (const auto& omega : dec.steps) h = central_extension(h, involution_f(h.dimension(), omega));
    return h;
}

bool has_codim1_abelian_ideal(const VergneAlgebra& g) {
    const int n = g.dimension();
    const auto e = [](int i) { return std::uint64_t{1} << (i - 1); };
    bool derived_abelian = true;
    for (int i = 3; i <= n && derived_abelian; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (g.bracket(e(i), e(j)) != 0) {
                derived_abelian = false;
                break;
            }
    if (!derived_abelian) return false;
    for (std::uint64_t v : {e(1), e(2), e(1) | e(2)}) {
        bool abelian = true;
        for (int i = 3; i <= n && abelian; ++i) abelian = g.bracket(v, e(i)) == 0;
        if (abelian) return true;
    }
    return false;
}

bool cocycle_identity_holds(const VergneAlgebra& g, const Form& cocycle) {
    const int n = g.dimension();
    const Split s = split_e1_e2(cocycle);
    const Form e2 = Form::generator(n, 2);
    return wedge(e2, operator_D1(n)(s.z)) == wedge(e2, operator_R(g)(s.x));
}

}  // namespace vergne
