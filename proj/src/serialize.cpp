#include "vergne/serialize.hpp"

#include <sstream>

#include "vergne/classifier.hpp"

namespace vergne {

ordered_json to_json(const BettiTable& t) {
    ordered_json graded = ordered_json::object();
    for (const auto& [km, dim] : t.graded)
        graded[std::to_string(km.first) + "," + std::to_string(km.second)] = dim;
    ordered_json j;
    j["n"] = t.n;
    j["betti"] = t.betti;
    j["graded"] = std::move(graded);
    j["cocycle_dims"] = t.cocycle_dims;
    return j;
}

BettiTable betti_table_from_json(const ordered_json& j) {
    BettiTable t;
    try {
        t.n = j.at("n").get<int>();
        t.betti = j.at("betti").get<std::vector<std::uint64_t>>();
        t.cocycle_dims = j.at("cocycle_dims").get<std::vector<std::uint64_t>>();
        for (const auto& [key, value] : j.at("graded").items()) {
            const auto comma = key.find(',');
            if (comma == std::string::npos) throw ParseError("graded key '" + key + "' is not 'k,m'");
            t.graded[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] =
                value.get<std::uint64_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed Betti table: ") + e.what());
    } catch (const std::logic_error& e) {
        throw ParseError(std::string("malformed Betti table: ") + e.what());
    }
    return t;
}

std::string to_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "k,betti,cocycle_dim,graded\n";
    for (int k = 0; k <= t.n; ++k) {
        os << k << ',' << t.betti[static_cast<std::size_t>(k)] << ','
           << t.cocycle_dims[static_cast<std::size_t>(k)] << ',';
        bool first = true;
        for (const auto& [km, dim] : t.graded) {
            if (km.first != k) continue;
            if (!first) os << ' ';
            os << km.second << ':' << dim;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

ordered_json to_json(const Decomposition& d) {
    ordered_json j;
    j["dimension"] = d.root.dimension() + static_cast<int>(d.steps.size());
    j["root"] = d.root.row().to_string();
    j["root_label"] = label(d.root);
    ordered_json omegas = ordered_json::array();
    for (const auto& omega : d.steps) omegas.push_back(to_string(omega));
    j["omegas"] = std::move(omegas);
    return j;
}

Decomposition decomposition_from_json(const ordered_json& j) {
    try {
        Decomposition d{VergneAlgebra::from_row(RowVector::parse(j.at("root").get<std::string>())), {}};
        int ambient = d.root.dimension();
        for (const auto& omega : j.at("omegas")) d.steps.push_back(parse_form(omega.get<std::string>(), ambient++));
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed decomposition: ") + e.what());
    }
}

ordered_json enumeration_json(int n, const std::vector<VergneAlgebra>& algebras,
                              const std::vector<BettiTable>& tables) {
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        ordered_json entry;
        entry["row"] = algebras[i].row().to_string();
        entry["label"] = label(algebras[i]);
        entry["betti"] = tables.at(i).betti;
        list.push_back(std::move(entry));
    }
    ordered_json j;
    j["dimension"] = n;
    j["algebras"] = std::move(list);
    return j;
}

}  // namespace vergne
