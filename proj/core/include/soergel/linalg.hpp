#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "soergel/poly.hpp"

namespace soergel {

using SparseRow = std::vector<std::pair<int, Q>>;  // sorted by column, no zeros

// Incremental row echelon form over Q. Column nvars is reserved for the right-hand side.
class SparseSolver {
 public:
  explicit SparseSolver(int nvars) : nvars_(nvars) {}
  int nvars() const { return nvars_; }
  void add_row(SparseRow row, const Q& rhs = 0);
  bool consistent() const { return consistent_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  int nullity() const { return nvars_ - rank(); }
  std::optional<std::vector<Q>> solve() const;  // free variables set to zero
  std::vector<std::vector<Q>> nullspace() const;

 private:
  std::vector<Q> back_substitute(std::vector<Q> x, bool with_rhs) const;
  int nvars_;
  bool consistent_ = true;
  std::map<int, SparseRow> pivots_;  // leading column -> row with leading coefficient 1
};

SparseRow normalize_row(SparseRow row);
int dense_rank(std::vector<std::vector<Q>> m);

}  // namespace soergel
