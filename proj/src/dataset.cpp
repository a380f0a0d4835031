#include "diffgraph/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

namespace diffgraph {

Dataset::Dataset(std::vector<VariableId> names, Eigen::MatrixXd values, DataKind kind)
    : names_(std::move(names)), values_(std::move(values)), kind_(kind) {
  if (static_cast<Eigen::Index>(names_.size()) != values_.cols()) {
    throw Error("dataset has " + std::to_string(names_.size()) + " names but " + std::to_string(values_.cols()) +
                " columns");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n.str()).second) throw Error("duplicate column '" + n.str() + "'");
  }
  for (Eigen::Index j = 0; j < values_.cols(); ++j) {
    for (Eigen::Index i = 0; i < values_.rows(); ++i) {
      const double v = values_(i, j);
      if (!std::isfinite(v)) {
        throw Error("non-finite cell in column '" + names_[j].str() + "', row " + std::to_string(i + 1));
      }
      if (kind_ == DataKind::Discrete && (v < 0 || v != std::floor(v) || v > std::numeric_limits<int>::max())) {
        throw Error("column '" + names_[j].str() + "' row " + std::to_string(i + 1) +
                    ": discrete cells must be non-negative integer codes");
      }
    }
  }
}

Eigen::Index Dataset::column(std::string_view name) const {
  for (std::size_t j = 0; j < names_.size(); ++j) {
    if (names_[j].str() == name) return static_cast<Eigen::Index>(j);
  }
  throw UnknownVertex("dataset has no column '" + std::string(name) + "'");
}

int Dataset::cardinality(std::string_view name) const {
  if (kind_ != DataKind::Discrete) throw Error("cardinality is defined for discrete data only");
  if (rows() == 0) return 0;
  return static_cast<int>(values_.col(column(name)).maxCoeff()) + 1;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    // trim
    auto b = cell.find_first_not_of(" \t\r");
    auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

Dataset read_csv(std::istream& in, DataKind kind) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<VariableId> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    for (auto& cell : split_row(line)) {
      if (!VariableId::is_valid(cell)) throw ParseError(line_no, "invalid column name '" + cell + "'");
      names.emplace_back(cell);
    }
    break;
  }
  if (names.empty()) throw ParseError(line_no, "missing header row");

  std::vector<double> cells;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto row = split_row(line);
    if (row.size() != names.size()) {
      throw ParseError(line_no, "expected " + std::to_string(names.size()) + " cells, found " +
                                    std::to_string(row.size()));
    }
    for (const auto& cell : row) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError(line_no, "non-numeric cell '" + cell + "'");
      }
      cells.push_back(v);
    }
    ++rows;
  }

  Eigen::MatrixXd values(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(names.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cells[i * names.size() + j];
    }
  }
  return Dataset(std::move(names), std::move(values), kind);
}

Dataset read_csv(const std::filesystem::path& path, DataKind kind) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open data file '" + path.string() + "'");
  return read_csv(in, kind);
}

void write_csv(std::ostream& out, const Dataset& data) {
  const auto& names = data.variable_names();
  for (std::size_t j = 0; j < names.size(); ++j) out << (j ? "," : "") << names[j].str();
  out << '\n';
  const auto precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.cols(); ++j) out << (j ? "," : "") << data.values()(i, j);
    out << '\n';
  }
  out.precision(precision);
}

}  // namespace diffgraph
