#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "confdiff/error.hpp"
#include "confdiff/graph.hpp"

namespace confdiff {

// Matrix text format: one row per line (LF), entries separated by a single
// space. The diagonal is always written as 0 and ignored on read.

/// 0/1 link matrix. Requires every edge weight to be exactly 1.
inline std::string export_link_matrix(const Graph& g) {
  if (!g.is_unweighted()) {
    throw PreconditionError(
        "link matrix export requires all edge weights to be 1.0");
  }
  const std::size_t n = g.vertex_count();
  std::string out;
  out.reserve(n * n * 2);
  for (VertexId i = 0; i < n; ++i) {
    std::vector<char> row(n, '0');
    for (const auto& nb : g.neighbors(i)) row[nb.id] = '1';
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

/// Probability matrix with two decimals per entry. Weights below 0.005 print
/// as 0.00 and therefore do not survive a round trip.
inline std::string export_probability_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  out.reserve(n * n * 5);
  char buf[16];
  for (VertexId i = 0; i < n; ++i) {
    std::vector<double> row(n, 0.0);
    for (const auto& nb : g.neighbors(i)) row[nb.id] = nb.weight;
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ' ';
      std::snprintf(buf, sizeof buf, "%.2f", row[j]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<double>> parse_rows(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<double> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() &&
             (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',')) {
        ++pos;
      }
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
             line[end] != ',') {
        ++end;
      }
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end,
                                       value);
      if (ec != std::errc{} || ptr != line.data() + end) {
        throw FormatError("not a number: '" +
                              std::string(line.substr(pos, end - pos)) + "'",
                          line_no, row.size());
      }
      row.push_back(value);
      pos = end;
    }
    if (!row.empty()) rows.push_back(std::move(row));
    ++line_no;
  }
  return rows;
}

}  // namespace detail

/// Reads a square symmetric matrix (space- or comma-separated) into a graph.
/// Every strictly positive off-diagonal entry becomes an edge; the diagonal
/// is ignored. Row/column locations in errors are 0-based matrix indices.
inline Graph import_matrix(std::string_view text) {
  const auto rows = detail::parse_rows(text);
  const std::size_t n = rows.size();
  if (n == 0) throw FormatError("empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw FormatError("matrix is not square: expected " + std::to_string(n) +
                            " entries, found " + std::to_string(rows[i].size()),
                        i);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = rows[i][j];
      if (!(x >= 0.0 && x <= 1.0)) {
        throw FormatError("entry outside [0, 1]", i, j);
      }
      if (j > i) {
        if (std::abs(x - rows[j][i]) > 1e-9) {
          throw FormatError("matrix is not symmetric", i, j);
        }
        if (x > 0.0) {
          edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), x});
        }
      }
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace confdiff
