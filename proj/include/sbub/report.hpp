#pragma once

#include <string>
#include <vector>

#include "sbub/graph_descriptors.hpp"
#include "sbub/sb_descriptors.hpp"

namespace sbub {

enum class BigIntMode {
  exact,        // full decimal expansion
  table_compat  // "inf" once the value no longer fits a double
};

/// Six significant digits ("%.6g"); NaN prints as "nan", infinity as "inf".
std::string format_real(double value);
std::string format_count(const BigCount& value, BigIntMode mode);

/// Column names and cell values of the three descriptor tables. The first
/// column is always the dataset name.
std::vector<std::string> undirected_columns();
std::vector<std::string> directed_columns();
std::vector<std::string> superbubble_columns();

std::vector<std::string> undirected_cells(const std::string& dataset, const UndirectedReport& r);
std::vector<std::string> directed_cells(const std::string& dataset, const DirectedReport& r);
std::vector<std::string> superbubble_cells(const std::string& dataset, const SuperbubbleReport& r, BigIntMode mode);

std::string tsv_line(const std::vector<std::string>& cells);
/// "\texttt{name} & a & b \\" with underscores escaped in the name.
std::string latex_line(const std::vector<std::string>& cells);

}  // namespace sbub
