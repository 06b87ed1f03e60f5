#include "zerocodec/table.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace zc {

std::vector<std::uint64_t> default_table_ks() {
    std::vector<std::uint64_t> ks;
    for (std::uint64_t k = 1; k <= 16; ++k) ks.push_back(k);
    for (std::uint64_t k : {18, 20, 22, 24, 26, 28, 30, 31, 32, 36, 40, 44, 48, 52, 56, 60, 63, 64, 127, 128, 255, 256,
                            511, 512})
        ks.push_back(k);
    for (unsigned e = 10; e <= 28; ++e) ks.push_back(std::uint64_t{1} << e);
    return ks;
}

std::vector<std::size_t> default_table_ts() { return {1, 2, 3, 4, 5, 6, 7, 8, 16, 32, 64, 128, 256}; }

TableCell table_cell(Planner& planner, std::size_t t, std::uint64_t k) {
    const Plan p = planner.best(t, k);
    TableCell c;
    c.k = k;
    c.t = t;
    c.r = p.n - k;
    c.t_b = p.base.t;
    c.base = base_letter(p.base.kind);
    c.k_tb = p.base.k;
    c.n_tb = p.base.n;
    if (p.base.kind == BaseKind::LimitedMagnitude || p.base.kind == BaseKind::RsBalanced) {
        c.b = p.base.b;
        c.tau = p.base.tau;
    }
    return c;
}

std::vector<TableCell> redundancy_table(const std::vector<std::uint64_t>& ks, const std::vector<std::size_t>& ts,
                                        Mode mode) {
    Planner planner({mode, false});
    std::vector<TableCell> out;
    for (auto k : ks)
        for (auto t : ts) out.push_back(table_cell(planner, t, k));
    return out;
}

std::string cell_text(const TableCell& c) {
    std::ostringstream os;
    os << c.r << "_{" << c.t_b << "," << c.base << "," << c.k_tb << "}^{" << c.n_tb;
    if (c.base == 'M' || c.base == 'S') os << "," << c.b << "," << c.tau;
    os << "}";
    return os.str();
}

std::string table_json(const std::vector<TableCell>& cells) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cells) {
        nlohmann::json j{{"k", c.k},       {"t", c.t},       {"r", c.r},
                         {"t_b", c.t_b},   {"base", std::string(1, c.base)},
                         {"k_tb", c.k_tb}, {"n_tb", c.n_tb}};
        if (c.base == 'M' || c.base == 'S') {
            j["b"] = c.b;
            j["tau"] = c.tau;
        }
        arr.push_back(j);
    }
    return arr.dump();
}

std::string table_text(const std::vector<TableCell>& cells, const std::vector<std::uint64_t>& ks,
                       const std::vector<std::size_t>& ts) {
    std::map<std::pair<std::uint64_t, std::size_t>, const TableCell*> at;
    for (const auto& c : cells) at[{c.k, c.t}] = &c;
    std::ostringstream os;
    os << std::setw(10) << "k\\t";
    for (auto t : ts) os << " " << std::setw(24) << t;
    os << "\n";
    for (auto k : ks) {
        os << std::setw(10) << k;
        for (auto t : ts) {
            auto it = at.find({k, t});
            os << " " << std::setw(24) << (it == at.end() ? std::string("-") : cell_text(*it->second));
        }
        os << "\n";
    }
    return os.str();
}

} // namespace zc
