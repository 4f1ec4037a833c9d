#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vergne/algebra.hpp"

namespace vergne {

/// Every Vergne-type algebra of dimension n over GF(2), one per valid e2-row,
/// ordered by the row read as a binary numeral. Candidates are checked in
/// parallel; the merge order is fixed.
[[nodiscard]] std::vector<VergneAlgebra> enumerate(int n);

/// Same set grown from the two dimension-5 roots by admissible central
/// extensions; rows per dimension, sorted.
[[nodiscard]] std::map<int, std::vector<RowVector>> forward_search(int n_max);

/// "m0(n)", "m2(n)", the published "g(n,i)"/"h(n,i)" name for n <= 12, or the
/// row string otherwise.
[[nodiscard]] std::string label(const VergneAlgebra& g);
[[nodiscard]] std::string label(const RowVector& row);

struct LabelledRow {
    std::string name;
    RowVector row;
};
/// The published g/h names for dimensions 7..12.
[[nodiscard]] const std::vector<LabelledRow>& published_labels();

class ExtensionTree {
public:
    struct Node {
        RowVector row;
        std::string label;
        /// Index of the truncation in nodes(); empty for the dimension-5 roots.
        std::optional<std::size_t> parent;
    };

    /// Nodes sorted by (dimension, row).
    [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] std::size_t count(int n) const;
    [[nodiscard]] std::optional<std::size_t> find(const RowVector& row) const;

private:
    friend ExtensionTree extension_tree(int n_max);
    std::vector<Node> nodes_;
};

/// All algebras of dimension 5..n_max with an edge from each to its
/// truncation.
[[nodiscard]] ExtensionTree extension_tree(int n_max);

/// DOT digraph, parent -> child, nodes named by label.
[[nodiscard]] std::string to_dot(const ExtensionTree& tree);

}  // namespace vergne
