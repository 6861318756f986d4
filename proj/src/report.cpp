#include "sbub/report.hpp"

#include <cmath>
#include <cstdio>

namespace sbub {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string format_count(const BigCount& value, BigIntMode mode) {
  if (mode == BigIntMode::table_compat && std::isinf(to_double(value))) return "inf";
  return value.str();
}

std::vector<std::string> undirected_columns() { return {"Dataset", "N", "M", "ME", "deg", "GD", "CC", "R", "SS"}; }

std::vector<std::string> directed_columns() {
  return {"Dataset", "deg_in", "deg_out", "SCC", "BE", "R_ii", "R_io", "R_oi", "R_oo", "H"};
}

std::vector<std::string> superbubble_columns() {
  return {"Dataset", "S", "VS", "ES", "MS", "mVS", "mES", "C", "CS", "depth", "P", "PL", "aP", "aPL", "SD"};
}

std::vector<std::string> undirected_cells(const std::string& dataset, const UndirectedReport& r) {
  using std::to_string;
  return {dataset,         to_string(r.N),  to_string(r.M), format_real(r.ME), to_string(r.deg),
          format_real(r.GD), to_string(r.CC), format_real(r.R), format_real(r.SS)};
}

std::vector<std::string> directed_cells(const std::string& dataset, const DirectedReport& r) {
  using std::to_string;
  return {dataset,
          to_string(r.max_in),
          to_string(r.max_out),
          to_string(r.SCC),
          format_real(r.BE),
          format_real(r.R_ii),
          format_real(r.R_io),
          format_real(r.R_oi),
          format_real(r.R_oo),
          format_real(r.H)};
}

std::vector<std::string> superbubble_cells(const std::string& dataset, const SuperbubbleReport& r, BigIntMode mode) {
  using std::to_string;
  return {dataset,           to_string(r.S),     format_real(r.VS), format_real(r.ES),
          to_string(r.MS),   to_string(r.mVS),   to_string(r.mES),  to_string(r.C),
          to_string(r.CS),   to_string(r.depth), format_count(r.P, mode), to_string(r.PL),
          format_real(r.aP), format_real(r.aPL), format_real(r.SD)};
}

std::string tsv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out += '\t';
    out += cells[k];
  }
  return out;
}

std::string latex_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out += " & ";
    if (k == 0) {
      out += "\\texttt{";
      for (char c : cells[0]) {
        if (c == '_') out += '\\';
        out += c;
      }
      out += '}';
    } else if (cells[k] == "inf") {
      out += "$\\infty$";
    } else {
      out += cells[k];
    }
  }
  out += " \\\\";
  return out;
}

}  // namespace sbub
