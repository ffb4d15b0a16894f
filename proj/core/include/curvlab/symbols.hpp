#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvlab/expr.hpp"

namespace curvlab {

enum class Assumption : std::uint8_t { None, Nonzero, Positive };

/// Registry of the chart's coordinates (ordered, defining index 1..n in all
/// rendered output) and the named parameters with their assumptions.
/// Coordinate and parameter names are disjoint; every symbol appearing in an
/// expression must be registered here before parsing resolves it.
class SymbolTable {
 public:
  SymbolTable(std::vector<std::string> coordinates,
              std::vector<std::pair<std::string, Assumption>> parameters);

  int dimension() const { return static_cast<int>(coordinates_.size()); }
  const std::vector<std::string>& coordinates() const { return coordinates_; }
  const std::vector<std::pair<std::string, Assumption>>& parameters() const {
    return parameters_;
  }

  bool is_coordinate(const std::string& name) const;
  bool is_parameter(const std::string& name) const;
  bool is_registered(const std::string& name) const {
    return is_coordinate(name) || is_parameter(name);
  }
  Assumption assumption(const std::string& name) const;

  /// 0-based coordinate index; -1 when not a coordinate.
  int coordinate_index(const std::string& name) const;
  const std::string& coordinate(int index) const { return coordinates_.at(index); }

  std::vector<std::string> all_symbols() const;

 private:
  std::vector<std::string> coordinates_;
  std::vector<std::pair<std::string, Assumption>> parameters_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace curvlab
