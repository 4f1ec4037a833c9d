#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vergne/cohomology.hpp"
#include "vergne/extension.hpp"

namespace vergne {

using ordered_json = nlohmann::ordered_json;

/// {"n", "betti", "graded": {"k,m": dim}, "cocycle_dims"}; graded keys in
/// (k, m) order, zero entries omitted.
[[nodiscard]] ordered_json to_json(const BettiTable& t);
[[nodiscard]] BettiTable betti_table_from_json(const ordered_json& j);

/// Header "k,betti,cocycle_dim,graded"; graded column is "m:dim" pairs
/// separated by spaces.
[[nodiscard]] std::string to_csv(const BettiTable& t);

/// {"dimension", "root", "root_label", "omegas": ["e1^e5 + ...", ...]}
[[nodiscard]] ordered_json to_json(const Decomposition& d);
[[nodiscard]] Decomposition decomposition_from_json(const ordered_json& j);

/// {"dimension": n, "algebras": [{"row", "label", "betti"}]}
[[nodiscard]] ordered_json enumeration_json(int n, const std::vector<VergneAlgebra>& algebras,
                                            const std::vector<BettiTable>& tables);

}  // namespace vergne
