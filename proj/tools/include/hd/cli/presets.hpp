#pragma once

#include "hd/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hd::cli {

enum class TableId { T1, T2, T4, T5 };

TableId parse_table_id(const std::string& text);
std::string to_string(TableId id);

inline constexpr std::array<double, 4> table_deltas{0.025, 0.100, 0.175, 0.250};

/// One printed doublet row. The energy is computed for `state`; `convention`
/// names how the printed row label maps onto it.
struct TableRow {
    int orbital = 0; ///< l for spin tables, l~ for pseudospin tables
    int n_row = 0;
    QuantumState negative; ///< kappa < 0 member of the doublet
    QuantumState positive; ///< kappa > 0 member of the doublet
    QuantumState state;
    std::string convention;
    /// Published energies per scheme column and delta.
    std::vector<std::array<double, 4>> reference;
    /// Published comparison column built on the plain W^2 substitute (t1 only).
    std::optional<std::array<double, 4>> reference_w2;

    std::string doublet_label(Symmetry symmetry) const;
};

struct TablePreset {
    TableId id = TableId::T1;
    ModelParams params;
    std::vector<SchemeConfig> schemes;
    std::vector<TableRow> rows;
};

const TablePreset& table_preset(TableId id);

} // namespace hd::cli
