#include "soergel/linalg.hpp"

#include <algorithm>

namespace soergel {

SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
    else out.push_back(std::move(e));
  }
  SparseRow clean;
  for (auto& e : out)
    if (sgn(e.second) != 0) clean.push_back(std::move(e));
  return clean;
}

namespace {

// a - c*b
SparseRow axpy(const SparseRow& a, const Q& c, const SparseRow& b) {
  SparseRow r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, -c * b[j].second);
      ++j;
    } else {
      Q v = a[i].second - c * b[j].second;
      if (sgn(v) != 0) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

void SparseSolver::add_row(SparseRow row, const Q& rhs) {
  row = normalize_row(std::move(row));
  if (sgn(rhs) != 0) row.emplace_back(nvars_, rhs);
  while (!row.empty()) {
    int lead = row.front().first;
    if (lead == nvars_) {
      consistent_ = false;
      return;
    }
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      Q inv = 1 / row.front().second;
      for (auto& e : row) e.second *= inv;
      pivots_.emplace(lead, std::move(row));
      return;
    }
    Q c = row.front().second;
    row = axpy(row, c, it->second);
  }
}

std::vector<Q> SparseSolver::back_substitute(std::vector<Q> x, bool with_rhs) const {
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const SparseRow& r = it->second;
    Q v = 0;
    for (std::size_t k = 1; k < r.size(); ++k) {
      if (r[k].first == nvars_) {
        if (with_rhs) v += r[k].second;
      } else {
        v -= r[k].second * x[r[k].first];
      }
    }
    x[it->first] = v;
  }
  return x;
}

std::optional<std::vector<Q>> SparseSolver::solve() const {
  if (!consistent_) return std::nullopt;
  return back_substitute(std::vector<Q>(nvars_, Q(0)), true);
}

std::vector<std::vector<Q>> SparseSolver::nullspace() const {
  std::vector<std::vector<Q>> out;
  for (int f = 0; f < nvars_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Q> x(nvars_, Q(0));
    x[f] = 1;
    out.push_back(back_substitute(std::move(x), false));
  }
  return out;
}

int dense_rank(std::vector<std::vector<Q>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(m[r][c]) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    Q inv = 1 / m[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Q f = m[r][c] * inv;
      for (int k = c; k < cols; ++k)
        if (sgn(m[rank][k]) != 0) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace soergel
