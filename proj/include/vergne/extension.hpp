#pragma once

#include <vector>

#include "vergne/algebra.hpp"

namespace vergne {

/// One-dimensional central extension g(ω): the (n+1)-dimensional algebra with
/// brackets [ei, ej] + ω(ei, ej) e(n+1). ω must be a 2-cocycle of g,
/// homogeneous of degree n+1, with an e1∧en term; the result is again of
/// Vergne type.
///
/// Throws NotHomogeneousTopDegree, MissingLeadingTerm or NotACocycle.
[[nodiscard]] VergneAlgebra central_extension(const VergneAlgebra& g, const Form& omega);

/// Every degree-(n+1) 2-cocycle of g with e1∧en coefficient 1, in canonical
/// order. These are exactly the ω for which g(ω) is of Vergne type.
[[nodiscard]] std::vector<Form> admissible_cocycles(const VergneAlgebra& g);

struct Reduction {
    VergneAlgebra base;
    Form omega;
};

/// Inverse of central_extension: base = g / span(en) and
/// ω = e1∧e(n-1) + Σ_{i+j=n, 1<i<j} c(i,j) ei∧ej, so that
/// central_extension(base, ω) == g. Requires dimension >= 6.
[[nodiscard]] Reduction reduce(const VergneAlgebra& g);

/// g written as root(ω_1)(ω_2)... with root of dimension 5.
struct Decomposition {
    VergneAlgebra root;
    /// Cocycles in application order: steps[0] extends the root to dimension 6.
    std::vector<Form> steps;

    [[nodiscard]] VergneAlgebra replay() const;
};

[[nodiscard]] Decomposition decompose(const VergneAlgebra& g);

/// Swap the dimension-5 root (m0(5) <-> m2(5)) and rebuild with f applied to
/// every cocycle of the decomposition. The result has the same Betti numbers.
[[nodiscard]] VergneAlgebra partner(const VergneAlgebra& g);

/// Whether g has an abelian ideal of codimension 1. Any such ideal contains
/// the derived algebra span(e3..en), so only span(e3..en) + span(v) with
/// v in {e1, e2, e1+e2} has to be checked.
[[nodiscard]] bool has_codim1_abelian_ideal(const VergneAlgebra& g);

/// For a cocycle e1∧x + e2∧y + z of g: e2∧D1(z) == e2∧R(x).
[[nodiscard]] bool cocycle_identity_holds(const VergneAlgebra& g, const Form& cocycle);

}  // namespace vergne
