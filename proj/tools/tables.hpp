#pragma once

#include <string>
#include <vector>

namespace ccode::cli {

enum class CellStatus { Ok, Mismatch, Skipped };

struct TableCell {
    std::string row;
    std::string column;
    std::string value;       // rendered: exact integers in decimal, floats at 3 decimals
    std::string expected;    // as printed in the source table
    std::string exact;       // full decimal string for exact integers, else empty
    double numeric = 0.0;    // full-precision float value for float cells
    bool is_float = false;
    CellStatus status = CellStatus::Ok;
    std::string note;        // skip reason or mismatch detail
    std::string provenance;  // producing operation
};

struct TableArtifact {
    std::string id;
    std::string caption;
    std::vector<std::string> rows;
    std::vector<std::string> columns;
    std::vector<TableCell> cells;

    int mismatches() const;
    int skipped() const;
    const TableCell* find(const std::string& row, const std::string& column) const;
};

const std::vector<std::string>& table_ids();
TableArtifact build_table(const std::string& id);

std::string to_string(CellStatus s);
// 4 significant digits, e.g. 1.329e36; plain decimal below 10^5.
std::string scientific4(const std::string& decimal);
std::string fixed3(double v);

}  // namespace ccode::cli
