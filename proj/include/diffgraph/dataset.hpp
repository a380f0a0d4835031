#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "diffgraph/graph.hpp"

namespace diffgraph {

enum class DataKind { Discrete, Continuous };

/// Complete rectangular sample table: one row per unit, one named column per
/// variable. Discrete cells hold non-negative integer codes.
class Dataset {
 public:
  Dataset(std::vector<VariableId> names, Eigen::MatrixXd values, DataKind kind);

  const std::vector<VariableId>& variable_names() const noexcept { return names_; }
  const Eigen::MatrixXd& values() const noexcept { return values_; }
  DataKind kind() const noexcept { return kind_; }

  Eigen::Index rows() const noexcept { return values_.rows(); }
  Eigen::Index cols() const noexcept { return values_.cols(); }

  /// Throws UnknownVertex when the column is absent.
  Eigen::Index column(std::string_view name) const;
  auto column_values(std::string_view name) const { return values_.col(column(name)); }

  /// 1 + largest observed code. Discrete datasets only.
  int cardinality(std::string_view name) const;

 private:
  std::vector<VariableId> names_;
  Eigen::MatrixXd values_;
  DataKind kind_;
};

/// CSV with a header row of variable names and numeric cells.
Dataset read_csv(std::istream& in, DataKind kind);
Dataset read_csv(const std::filesystem::path& path, DataKind kind);
void write_csv(std::ostream& out, const Dataset& data);

}  // namespace diffgraph
