#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>

#include "vergne/classifier.hpp"
#include "vergne/cohomology.hpp"
#include "vergne/extension.hpp"
#include "vergne/serialize.hpp"

namespace vergne::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::uint64_t>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string bracketed(const std::vector<std::uint64_t>& v) { return "[" + join(v, ", ") + "]"; }

VergneAlgebra algebra_for_row(int dim, const std::string& text) {
    const RowVector row = RowVector::parse(text);
    if (row.dimension() != dim)
        throw InputError("row " + row.to_string() + " has " + std::to_string(row.dimension() - 1) +
                         " entries; dimension " + std::to_string(dim) + " needs " + std::to_string(dim - 1));
    return VergneAlgebra::from_row(row);
}

VergneAlgebra algebra_for_option(int dim, const std::string& spec) {
    if (spec == "m0") return VergneAlgebra::m0(dim);
    if (spec == "m2") return VergneAlgebra::m2(dim);
    if (spec.rfind("row:", 0) == 0) return algebra_for_row(dim, spec.substr(4));
    throw InputError("--algebra must be m0, m2 or row:<row>, got '" + spec + "'");
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << contents;
    if (!file) throw IoError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------

struct BettiOptions {
    int dim = 0;
    std::string algebra;
    bool graded = false;
    std::string format = "text";
};

int run_betti(const BettiOptions& o, std::ostream& out) {
    const VergneAlgebra g = algebra_for_option(o.dim, o.algebra);
    const BettiTable t = betti(g);
    if (o.format == "json") {
        out << to_json(t).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << to_csv(t);
    } else {
        out << "algebra " << label(g) << ' ' << g.row().to_string() << '\n';
        out << "betti " << join(t.betti) << '\n';
        out << "cocycle_dims " << join(t.cocycle_dims) << '\n';
        if (o.graded) {
            out << "graded\n";
            for (const auto& [km, dim] : t.graded)
                out << "  H^" << km.first << "_" << km.second << " = " << dim << '\n';
        }
    }
    return kOk;
}

struct EnumerateOptions {
    int dim = 0;
    bool tree = false;
    int max_dim = 0;
    std::string dot_path;
    std::string format = "text";
};

int run_enumerate(const EnumerateOptions& o, std::ostream& out) {
    if (o.dim < kMinDimension) throw InputError("--dim must be at least 5");
    const auto algebras = enumerate(o.dim);
    std::vector<BettiTable> tables;
    for (const auto& g : algebras) tables.push_back(betti(g));

    if (o.format == "json") {
        out << enumeration_json(o.dim, algebras, tables).dump(2) << '\n';
    } else {
        out << "dimension " << o.dim << ": " << algebras.size() << " algebras\n";
        for (std::size_t i = 0; i < algebras.size(); ++i)
            out << label(algebras[i]) << ' ' << algebras[i].row().to_string() << " betti "
                << bracketed(tables[i].betti) << '\n';
    }

    if (o.tree) {
        const int max_dim = o.max_dim > 0 ? o.max_dim : o.dim;
        if (max_dim < kMinDimension) throw InputError("--max-dim must be at least 5");
        const auto tree = extension_tree(max_dim);
        const std::string dot = to_dot(tree);
        if (o.dot_path.empty()) {
            out << dot;
        } else {
            write_file(o.dot_path, dot);
            if (o.format != "json")
                out << "tree: " << tree.nodes().size() << " nodes, " << tree.edge_count() << " edges -> "
                    << o.dot_path << '\n';
        }
    }
    return kOk;
}

int run_tree(int max_dim, const std::string& dot_path, std::ostream& out) {
    if (max_dim < kMinDimension) throw InputError("--max-dim must be at least 5");
    const std::string dot = to_dot(extension_tree(max_dim));
    if (dot_path.empty())
        out << dot;
    else
        write_file(dot_path, dot);
    return kOk;
}

int run_pair(int dim, const std::string& row, const std::string& format, std::ostream& out) {
    const VergneAlgebra g = algebra_for_row(dim, row);
    const VergneAlgebra p = partner(g);
    const auto bg = betti(g).betti;
    const auto bp = betti(p).betti;
    const auto root_g = decompose(g).root;
    const auto root_p = decompose(p).root;
    if (format == "json") {
        ordered_json j;
        j["algebra"] = {{"row", g.row().to_string()}, {"label", label(g)}, {"root", label(root_g)}, {"betti", bg}};
        j["partner"] = {{"row", p.row().to_string()}, {"label", label(p)}, {"root", label(root_p)}, {"betti", bp}};
        j["betti_equal"] = bg == bp;
        out << j.dump(2) << '\n';
    } else {
        out << "algebra " << label(g) << ' ' << g.row().to_string() << " root " << label(root_g) << '\n';
        out << "partner " << label(p) << ' ' << p.row().to_string() << " root " << label(root_p) << '\n';
        out << "betti algebra " << bracketed(bg) << '\n';
        out << "betti partner " << bracketed(bp) << '\n';
    }
    return kOk;
}

int run_reduce(int dim, const std::string& row, bool full, const std::string& format, std::ostream& out) {
    const VergneAlgebra g = algebra_for_row(dim, row);
    if (full) {
        out << to_json(decompose(g)).dump(2) << '\n';
        return kOk;
    }
    const auto [base, omega] = reduce(g);
    if (format == "json") {
        ordered_json j;
        j["base"] = base.row().to_string();
        j["base_label"] = label(base);
        j["omega"] = to_string(omega);
        out << j.dump(2) << '\n';
    } else {
        out << "base " << base.row().to_string() << ' ' << label(base) << '\n';
        out << "omega " << to_string(omega) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct CheckLine {
    bool ok;
    std::string text;
};

using Lines = std::vector<CheckLine>;

// Runs tasks concurrently and concatenates their lines in task order.
Lines gather(std::vector<std::function<Lines()>> tasks) {
    std::vector<std::future<Lines>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, std::move(t)));
    Lines all;
    for (auto& f : futures) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

Lines suite_thm1(int max_dim) {
    std::vector<std::function<Lines()>> tasks;
    for (int n = kMinDimension; n <= max_dim; ++n)
        tasks.emplace_back([n] {
            const auto b0 = betti(VergneAlgebra::m0(n)).betti;
            const auto b2 = betti(VergneAlgebra::m2(n)).betti;
            const std::uint64_t expected_b2 = static_cast<std::uint64_t>((n + 1) / 2);
            const std::string sn = "n=" + std::to_string(n);
            return Lines{
                {b0 == b2, "thm1 " + sn + " betti(m0) " + bracketed(b0) + " vs betti(m2) " + bracketed(b2)},
                {b0[1] == 2 && b2[1] == 2, "thm1 " + sn + " b1 = 2"},
                {b0[2] == expected_b2 && b2[2] == expected_b2,
                 "thm1 " + sn + " b2 = " + std::to_string(expected_b2)},
            };
        });
    return gather(std::move(tasks));
}

Lines suite_thm2(int max_dim) {
    std::vector<std::function<Lines()>> tasks;
    for (int n = kMinDimension; n <= max_dim; ++n)
        for (const auto& g : enumerate(n))
            tasks.emplace_back([g] {
                const VergneAlgebra p = partner(g);
                const auto bg = betti(g).betti;
                const auto bp = betti(p).betti;
                const auto rg = decompose(g).root;
                const auto rp = decompose(p).root;
                const bool witness = has_codim1_abelian_ideal(rg) != has_codim1_abelian_ideal(rp);
                const std::string name = label(g) + " " + g.row().to_string() + " <-> " + label(p) + " " +
                                         p.row().to_string();
                return Lines{
                    {bg == bp, "thm2 " + name + " betti " + bracketed(bg) + (bg == bp ? " == " : " != ") +
                                   bracketed(bp)},
                    {partner(p) == g, "thm2 " + name + " partner is an involution"},
                    {witness && p.row() != g.row(),
                     "thm2 " + name + " roots " + label(rg) + " / " + label(rp) + " separated by abelian ideal"},
                };
            });
    return gather(std::move(tasks));
}

Lines square_lines(const std::string& tag, const VergneAlgebra& g1, const VergneAlgebra& g2) {
    Lines lines;
    for (int k = 2; k <= g1.dimension(); ++k) {
        const auto bad = commuting_square_counterexample(g1, g2, k);
        if (bad)
            lines.push_back({false, tag + " k=" + std::to_string(k) + " fails at " + to_string(*bad)});
    }
    if (lines.empty()) lines.push_back({true, tag + " commutes for k = 2.." + std::to_string(g1.dimension())});
    return lines;
}

Lines suite_diagrams(int max_dim) {
    std::vector<std::function<Lines()>> tasks;
    for (int n = kMinDimension; n <= max_dim; ++n)
        tasks.emplace_back([n] {
            return square_lines("diagram m0(" + std::to_string(n) + ") -> m2(" + std::to_string(n) + ")",
                                VergneAlgebra::m0(n), VergneAlgebra::m2(n));
        });
    for (int n = kMinDimension; n <= max_dim; ++n)
        for (const auto& g : enumerate(n))
            tasks.emplace_back([g] {
                const auto p = partner(g);
                return square_lines("diagram " + label(g) + " " + g.row().to_string() + " -> " + label(p), g, p);
            });
    return gather(std::move(tasks));
}

int run_verify(const std::string& suite, int max_dim, std::ostream& out) {
    if (max_dim < kMinDimension) throw InputError("--max-dim must be at least 5");
    Lines lines;
    const auto append = [&lines](Lines more) { lines.insert(lines.end(), more.begin(), more.end()); };
    if (suite == "thm1" || suite == "all") append(suite_thm1(max_dim));
    if (suite == "thm2" || suite == "all") append(suite_thm2(max_dim));
    if (suite == "diagrams" || suite == "all") append(suite_diagrams(max_dim));

    std::size_t failures = 0;
    for (const auto& line : lines) {
        out << (line.ok ? "PASS " : "FAIL ") << line.text << '\n';
        if (!line.ok) ++failures;
    }
    out << suite << ": " << lines.size() << " checks, " << failures << " failed\n";
    return failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomology of Vergne-type filiform Lie algebras over GF(2)", "vergne"};
    app.require_subcommand(1);

    const std::vector<std::string> formats_text_json_csv{"text", "json", "csv"};
    const std::vector<std::string> formats_text_json{"text", "json"};

    BettiOptions betti_opts;
    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of one algebra");
    betti_cmd->add_option("--dim", betti_opts.dim, "dimension n")->required();
    betti_cmd->add_option("--algebra", betti_opts.algebra, "m0, m2 or row:<row>")->required();
    betti_cmd->add_flag("--graded", betti_opts.graded, "print dim H^k_m");
    betti_cmd->add_option("--format", betti_opts.format)->check(CLI::IsMember(formats_text_json_csv));

    EnumerateOptions enum_opts;
    auto* enum_cmd = app.add_subcommand("enumerate", "all Vergne-type algebras of one dimension");
    enum_cmd->add_option("--dim", enum_opts.dim, "dimension n")->required();
    enum_cmd->add_flag("--tree", enum_opts.tree, "also build the extension tree");
    enum_cmd->add_option("--max-dim", enum_opts.max_dim, "largest dimension in the tree");
    enum_cmd->add_option("--dot", enum_opts.dot_path, "write the tree as DOT to this path");
    enum_cmd->add_option("--format", enum_opts.format)->check(CLI::IsMember(formats_text_json));

    int tree_max = 0;
    std::string tree_dot;
    auto* tree_cmd = app.add_subcommand("tree", "extension tree as DOT");
    tree_cmd->add_option("--max-dim", tree_max)->required();
    tree_cmd->add_option("--dot", tree_dot, "output path (stdout when omitted)");

    int pair_dim = 0;
    std::string pair_row;
    std::string pair_format = "text";
    auto* pair_cmd = app.add_subcommand("pair", "partner with the same Betti numbers");
    pair_cmd->add_option("--dim", pair_dim)->required();
    pair_cmd->add_option("--row", pair_row)->required();
    pair_cmd->add_option("--format", pair_format)->check(CLI::IsMember(formats_text_json));

    int reduce_dim = 0;
    std::string reduce_row;
    std::string reduce_format = "text";
    bool reduce_full = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "quotient by the centre and the recovered cocycle");
    reduce_cmd->add_option("--dim", reduce_dim)->required();
    reduce_cmd->add_option("--row", reduce_row)->required();
    reduce_cmd->add_flag("--decompose", reduce_full, "print the full decomposition down to dimension 5 as JSON");
    reduce_cmd->add_option("--format", reduce_format)->check(CLI::IsMember(formats_text_json));

    std::string suite = "all";
    int verify_max = 0;
    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"thm1", "thm2", "diagrams", "all"}));
    verify_cmd->add_option("--max-dim", verify_max)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalidInput;
    }

    try {
        if (*betti_cmd) return run_betti(betti_opts, out);
        if (*enum_cmd) return run_enumerate(enum_opts, out);
        if (*tree_cmd) return run_tree(tree_max, tree_dot, out);
        if (*pair_cmd) return run_pair(pair_dim, pair_row, pair_format, out);
        if (*reduce_cmd) return run_reduce(reduce_dim, reduce_row, reduce_full, reduce_format, out);
        if (*verify_cmd) return run_verify(suite, verify_max, out);
    } catch (const JacobiViolation& e) {
        err << "JacobiViolation: " << e.what() << " (triple " << e.i << ", " << e.j << ", " << e.k << ")\n";
        return kInvalidInput;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const InputError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const vergne::Error& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace vergne::cli
