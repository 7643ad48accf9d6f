#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rsklip/errors.hpp"

namespace rsklip {

// 1-based matrix coordinate of a diagram/tableau cell.
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Integer partition: weakly decreasing positive parts, identified with its
// Young diagram (row i has part(i) cells).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-based; 0 beyond the last part
  int weight() const { return weight_; }
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

Partition conjugate(const Partition& lam);

// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int pos) const { return values_[pos - 1]; }  // 1-based
  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;
  Permutation reversed() const;  // one-line notation reversed

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked_t {};
  Permutation(unchecked_t, std::vector<int> v) : values_(std::move(v)) {}

  std::vector<int> values_;

  friend Permutation compose(const Permutation&, const Permutation&);
};

// (outer ∘ inner)(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

Permutation reverse(const Permutation& pi);
Permutation inverse(const Permutation& pi);

struct TableauReport {
  bool valid = true;     // distinct positive entries, monotone rows/columns/shape
  bool standard = false; // additionally, entries are exactly 1..size
  std::vector<std::string> violations;
};

TableauReport validate_tableau(const std::vector<std::vector<int>>& rows);

// Young tableau with strictly increasing rows and columns and distinct
// positive entries. Value semantics; the validating constructor throws
// ValidationError listing every violated invariant.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;  // number of cells
  Partition shape() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

  // Internal fast path for algorithms that construct valid tableaux by design.
  static Tableau trusted(std::vector<std::vector<int>> rows);

 private:
  std::vector<std::vector<int>> rows_;
};

struct TableauPair {
  Tableau p;  // insertion tableau
  Tableau q;  // recording tableau
};

enum class InsertScan { binary, linear };

struct RowInsertResult {
  Tableau tableau;
  Cell cell;  // the new cell created by the insertion
};

// One Schensted row insertion: x enters row 1, bumping the smallest larger
// entry down a row, until some value lands at the end of a row.
RowInsertResult row_insert(const Tableau& t, int x,
                           InsertScan scan = InsertScan::binary);

// Row-insert pi(1..n) in order, recording in q where each new cell appears.
TableauPair rsk(const Permutation& pi, InsertScan scan = InsertScan::binary);

// Reverse bumping in decreasing q-label order; inverse of rsk.
Permutation inverse_rsk(const TableauPair& pair);

// Shape of the insertion tableau of pi (no recording bookkeeping).
Partition shape_of(const Permutation& pi);

}  // namespace rsklip
