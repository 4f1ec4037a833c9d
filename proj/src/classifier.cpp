#include "vergne/classifier.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "vergne/extension.hpp"

namespace vergne {

std::vector<VergneAlgebra> enumerate(int n) {
    if (n < kMinDimension || n > kMaxDimension)
        throw InvalidArgument("enumeration dimension " + std::to_string(n) + " outside [5, 64]");
    if (n - 4 >= 63) throw InvalidArgument("row space too large to enumerate");
    const std::uint64_t total = std::uint64_t{1} << (n - 4);

    const std::uint64_t workers =
        std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, total >= 256 ? 16 : 1);
    const std::uint64_t chunk = (total + workers - 1) / workers;

    std::vector<std::future<std::vector<VergneAlgebra>>> parts;
    for (std::uint64_t start = 0; start < total; start += chunk) {
        const std::uint64_t stop = std::min(total, start + chunk);
        parts.push_back(std::async(std::launch::async, [n, start, stop] {
            std::vector<VergneAlgebra> found;
            for (std::uint64_t code = start; code < stop; ++code) {
                try {
                    found.push_back(VergneAlgebra::from_row(RowVector::from_code(n, code)));
                } catch (const JacobiViolation&) {
                }
            }
            return found;
        }));
    }
    std::vector<VergneAlgebra> out;
    for (auto& part : parts) {
        auto found = part.get();
        out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    return out;
}

std::map<int, std::vector<RowVector>> forward_search(int n_max) {
    std::map<int, std::vector<RowVector>> out;
    if (n_max < kMinDimension) return out;
    std::vector<VergneAlgebra> layer{VergneAlgebra::m0(kMinDimension), VergneAlgebra::m2(kMinDimension)};
    for (int n = kMinDimension; n <= n_max; ++n) {
        std::set<RowVector> rows;
        for (const auto& g : layer) rows.insert(g.row());
        out[n].assign(rows.begin(), rows.end());
        if (n == n_max) break;
        std::vector<VergneAlgebra> next;
        for (const auto& g : layer)
            for (const auto& omega : admissible_cocycles(g)) next.push_back(central_extension(g, omega));
        layer = std::move(next);
    }
    return out;
}

const std::vector<LabelledRow>& published_labels() {
    // Published names of the Vergne-type algebras over GF(2) of dimension
    // 7..12 other than m0 and m2; g(n,i) and h(n,i) share Betti numbers.
    static const std::vector<LabelledRow> table = [] {
        const std::pair<const char*, const char*> raw[] = {
            {"g(7,1)", "[0, 0, 0, 1, 0, 0]"},
            {"g(8,1)", "[0, 0, 0, 1, 0, 0, 0]"},
            {"g(9,1)", "[0, 0, 0, 1, 0, 0, 0, 0]"},
            {"g(9,2)", "[0, 0, 0, 0, 0, 1, 0, 0]"},
            {"g(10,1)", "[0, 0, 0, 1, 0, 0, 1, 0, 0]"},
            {"g(10,2)", "[0, 0, 0, 0, 0, 1, 1, 0, 0]"},
            {"g(11,1)", "[0, 0, 0, 1, 0, 0, 1, 0, 0, 0]"},
            {"g(11,2)", "[0, 0, 0, 0, 0, 1, 1, 0, 0, 0]"},
            {"g(11,3)", "[0, 0, 0, 1, 0, 0, 1, 1, 0, 0]"},
            {"g(11,4)", "[0, 0, 0, 0, 0, 0, 0, 1, 0, 0]"},
            {"g(12,1)", "[0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0]"},
            {"g(12,2)", "[0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0]"},
            {"g(12,3)", "[0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0]"},
            {"g(12,4)", "[0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]"},
            {"h(7,1)", "[0, 1, 1, 0, 0, 0]"},
            {"h(8,1)", "[0, 1, 1, 0, 1, 0, 0]"},
            {"h(9,1)", "[0, 1, 1, 0, 1, 1, 0, 0]"},
            {"h(9,2)", "[0, 1, 1, 1, 1, 0, 0, 0]"},
            {"h(10,1)", "[0, 1, 1, 0, 1, 1, 0, 0, 0]"},
            {"h(10,2)", "[0, 1, 1, 1, 1, 0, 0, 0, 0]"},
            {"h(11,1)", "[0, 1, 1, 0, 1, 1, 0, 1, 0, 0]"},
            {"h(11,2)", "[0, 1, 1, 1, 1, 0, 0, 1, 0, 0]"},
            {"h(11,3)", "[0, 1, 1, 0, 1, 1, 0, 0, 0, 0]"},
            {"h(11,4)", "[0, 1, 1, 1, 1, 1, 1, 0, 0, 0]"},
            {"h(12,1)", "[0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0]"},
            {"h(12,2)", "[0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0]"},
            {"h(12,3)", "[0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0]"},
            {"h(12,4)", "[0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0]"},
        };
        std::vector<LabelledRow> rows;
        for (const auto& [name, row] : raw) rows.push_back({name, RowVector::parse(row)});
        return rows;
    }();
    return table;
}

std::string label(const RowVector& row) {
    const int n = row.dimension();
    if (n >= kMinDimension) {
        if (row == VergneAlgebra::m0(n).row()) return "m0(" + std::to_string(n) + ")";
        if (row == VergneAlgebra::m2(n).row()) return "m2(" + std::to_string(n) + ")";
    }
    if (n <= 12)
        for (const auto& entry : published_labels())
            if (entry.row == row) return entry.name;
    return row.to_string();
}

std::string label(const VergneAlgebra& g) { return label(g.row()); }

std::size_t ExtensionTree::edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& v) { return v.parent.has_value(); }));
}

std::size_t ExtensionTree::count(int n) const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [n](const Node& v) { return v.row.dimension() == n; }));
}

std::optional<std::size_t> ExtensionTree::find(const RowVector& row) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), row,
                               [](const Node& v, const RowVector& r) { return v.row < r; });
    if (it == nodes_.end() || it->row != row) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

ExtensionTree extension_tree(int n_max) {
    if (n_max < kMinDimension) throw InvalidArgument("extension tree needs n_max >= 5");
    ExtensionTree tree;
    std::vector<VergneAlgebra> algebras;
    for (int n = kMinDimension; n <= n_max; ++n) {
        auto layer = enumerate(n);
        algebras.insert(algebras.end(), layer.begin(), layer.end());
    }
    for (const auto& g : algebras) tree.nodes_.push_back({g.row(), label(g), std::nullopt});

    for (std::size_t i = 0; i < algebras.size(); ++i) {
        if (algebras[i].dimension() == kMinDimension) continue;
        const auto parent = tree.find(algebras[i].truncated().row());
        if (!parent)
            throw Error("truncation of " + tree.nodes_[i].label + " missing from the enumeration");
        tree.nodes_[i].parent = parent;
    }
    return tree;
}

std::string to_dot(const ExtensionTree& tree) {
    std::ostringstream os;
    os << "digraph vergne {\n";
    for (const auto& v : tree.nodes()) os << "  \"" << v.label << "\";\n";
    for (const auto& v : tree.nodes())
        if (v.parent) os << "  \"" << tree.nodes()[*v.parent].label << "\" -> \"" << v.label << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace vergne
