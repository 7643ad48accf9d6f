#include "rsklip/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>
#include <utility>

namespace rsklip {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw ValidationError("partition parts are 1-indexed");
  return i <= num_parts() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out;
  out.reserve(parts_[0]);
  int i = num_parts();
  for (int j = 1; j <= parts_[0]; ++j) {
    while (i > 0 && parts_[i - 1] < j) --i;
    out.push_back(i);  // number of parts >= j
  }
  return Partition(std::move(out));
}

Partition conjugate(const Partition& lam) { return lam.conjugate(); }

Permutation::Permutation(std::vector<int> one_line)
    : values_(std::move(one_line)) {
  const int n = static_cast<int>(values_.size());
  if (n == 0) throw ValidationError("permutation must be nonempty");
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw ValidationError("permutation values must lie in 1..n");
    if (seen[v]) throw ValidationError("permutation values must be distinct");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ValidationError("permutation must be nonempty");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(unchecked_t{}, std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(unchecked_t{}, std::move(inv));
}

Permutation Permutation::reversed() const {
  std::vector<int> v(values_.rbegin(), values_.rend());
  return Permutation(unchecked_t{}, std::move(v));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size())
    throw ValidationError("cannot compose permutations of different sizes");
  std::vector<int> v(inner.size());
  for (int i = 0; i < inner.size(); ++i) v[i] = outer.values_[inner.values_[i] - 1];
  return Permutation(Permutation::unchecked_t{}, std::move(v));
}

Permutation reverse(const Permutation& pi) { return pi.reversed(); }
Permutation inverse(const Permutation& pi) { return pi.inverse(); }

TableauReport validate_tableau(const std::vector<std::vector<int>>& rows) {
  TableauReport rep;
  auto flag = [&rep](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };

  std::unordered_set<int> entries;
  bool dup = false, nonpos = false;
  for (const auto& row : rows) {
    for (int x : row) {
      if (x <= 0) nonpos = true;
      if (!entries.insert(x).second) dup = true;
    }
  }
  if (nonpos) flag("entries must be positive");
  if (dup) flag("entries must be distinct");

  bool empty_row = false, row_mono = true, shape_mono = true, col_mono = true;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) empty_row = true;
    for (std::size_t c = 1; c < rows[r].size(); ++c)
      if (rows[r][c] <= rows[r][c - 1]) row_mono = false;
    if (r > 0) {
      if (rows[r].size() > rows[r - 1].size()) shape_mono = false;
      for (std::size_t c = 0; c < std::min(rows[r].size(), rows[r - 1].size()); ++c)
        if (rows[r][c] <= rows[r - 1][c]) col_mono = false;
    }
  }
  if (empty_row) flag("rows must be nonempty");
  if (!row_mono) flag("rows must increase strictly left to right");
  if (!shape_mono) flag("row lengths must weakly decrease top to bottom");
  if (!col_mono) flag("columns must increase strictly top to bottom");

  if (rep.valid) {
    const int n = static_cast<int>(entries.size());
    rep.standard = true;
    for (int x = 1; x <= n; ++x)
      if (!entries.count(x)) {
        rep.standard = false;
        break;
      }
  }
  return rep;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  TableauReport rep = validate_tableau(rows_);
  if (!rep.valid) {
    std::string msg = "invalid tableau:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
}

Tableau Tableau::trusted(std::vector<std::vector<int>> rows) {
  Tableau t;
  t.rows_ = std::move(rows);
  return t;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

namespace {

// Insert x into rows by bumping; returns the coordinate of the new cell.
Cell bump_insert(std::vector<std::vector<int>>& rows, int x, InsertScan scan) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(r) + 1, 1};
    }
    auto& row = rows[r];
    std::size_t pos;
    if (scan == InsertScan::binary) {
      pos = std::upper_bound(row.begin(), row.end(), x) - row.begin();
    } else {
      pos = 0;
      while (pos < row.size() && row[pos] < x) ++pos;
    }
    if (pos == row.size()) {
      row.push_back(x);
      return {static_cast<int>(r) + 1, static_cast<int>(row.size())};
    }
    std::swap(row[pos], x);  // bump the smallest entry larger than x
  }
}

}  // namespace

RowInsertResult row_insert(const Tableau& t, int x, InsertScan scan) {
  if (x <= 0) throw ValidationError("inserted value must be positive");
  for (const auto& row : t.rows())
    for (int y : row)
      if (y == x)
        throw ValidationError(
            "inserted value duplicates an existing entry (entries must stay "
            "distinct)");
  auto rows = t.rows();
  Cell cell = bump_insert(rows, x, scan);
  return {Tableau::trusted(std::move(rows)), cell};
}

TableauPair rsk(const Permutation& pi, InsertScan scan) {
  std::vector<std::vector<int>> p, q;
  for (int i = 1; i <= pi.size(); ++i) {
    Cell cell = bump_insert(p, pi(i), scan);
    if (cell.row > static_cast<int>(q.size())) q.emplace_back();
    q[cell.row - 1].push_back(i);
  }
  return {Tableau::trusted(std::move(p)), Tableau::trusted(std::move(q))};
}

Partition shape_of(const Permutation& pi) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= pi.size(); ++i) bump_insert(rows, pi(i), InsertScan::binary);
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

Permutation inverse_rsk(const TableauPair& pair) {
  TableauReport prep = validate_tableau(pair.p.rows());
  TableauReport qrep = validate_tableau(pair.q.rows());
  if (!prep.valid || !prep.standard)
    throw ValidationError("insertion tableau must be standard (entries 1..n)");
  if (!qrep.valid || !qrep.standard)
    throw ValidationError("recording tableau must be standard (entries 1..n)");
  if (pair.p.shape() != pair.q.shape())
    throw ValidationError("tableau pair must have equal shapes");

  const int n = pair.p.size();
  std::vector<Cell> where(n + 1);
  const auto& qrows = pair.q.rows();
  for (std::size_t r = 0; r < qrows.size(); ++r)
    for (std::size_t c = 0; c < qrows[r].size(); ++c)
      where[qrows[r][c]] = {static_cast<int>(r) + 1, static_cast<int>(c) + 1};

  auto rows = pair.p.rows();
  std::vector<int> out(n);
  for (int label = n; label >= 1; --label) {
    const Cell cell = where[label];
    const int r = cell.row - 1;
    // In a standard recording tableau the largest remaining label always sits
    // at an outer corner.
    int y = rows[r].back();
    rows[r].pop_back();
    for (int u = r - 1; u >= 0; --u) {
      auto& row = rows[u];
      auto it = std::lower_bound(row.begin(), row.end(), y);
      if (it == row.begin())
        throw ValidationError("tableau pair is not a valid insertion image");
      std::swap(*std::prev(it), y);  // reverse-bump the largest entry < y
    }
    out[label - 1] = y;
  }
  return Permutation(std::move(out));
}

}  // namespace rsklip
