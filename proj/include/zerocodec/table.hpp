#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zerocodec/recursive.hpp"

namespace zc {

struct TableCell {
    std::uint64_t k = 0;
    std::size_t t = 0;
    std::uint64_t r = 0;
    std::size_t t_b = 0;
    char base = 'I';
    std::uint64_t k_tb = 0;
    std::uint64_t n_tb = 0;
    std::size_t b = 0, tau = 0; // M and S only
};

// rows and columns of the standard grid
std::vector<std::uint64_t> default_table_ks();
std::vector<std::size_t> default_table_ts();

TableCell table_cell(Planner& planner, std::size_t t, std::uint64_t k);
std::vector<TableCell> redundancy_table(const std::vector<std::uint64_t>& ks, const std::vector<std::size_t>& ts,
                                        Mode mode);

// r_{t_b,T,k_tb}^{n_tb[,b,tau]}
std::string cell_text(const TableCell& c);
std::string table_json(const std::vector<TableCell>& cells);
std::string table_text(const std::vector<TableCell>& cells, const std::vector<std::uint64_t>& ks,
                       const std::vector<std::size_t>& ts);

} // namespace zc
