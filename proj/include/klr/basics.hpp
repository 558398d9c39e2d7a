#pragma once

// Shared scalar types, the error taxonomy, and partition utilities used by
// every other header.

#include <stdexcept>
#include <string>
#include <vector>

namespace klr {

using Int = long long;

// Malformed user input: wrong sizes, bad residues, non-partitions, matrices
// that fail to define a preorder. CLI exit code 2.
class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumeration exceeded the caller-supplied resource budget. CLI exit code 3.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A structural guarantee the library relies on failed; always a bug rather
// than bad input. CLI exit code 4.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw validation_error(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

// Mathematical remainder, always in [0, m).
inline Int imod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Floor division (rounds toward minus infinity).
inline Int fdiv(Int a, Int m) { return (a - imod(a, m)) / m; }

// A partition is a weakly decreasing sequence of positive integers; the empty
// vector is the empty partition.
using Partition = std::vector<Int>;

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

inline void require_partition(const Partition& p) {
  require(is_partition(p), "parts must be positive and weakly decreasing");
}

inline Int size_of(const Partition& p) {
  Int s = 0;
  for (Int x : p) s += x;
  return s;
}

// p_a with the 1-based indexing of partition parts; 0 beyond the last part.
inline Int part_at(const Partition& p, Int a) {
  if (a < 1 || a > (Int)p.size()) return 0;
  return p[a - 1];
}

// Bare tuples of partitions. The diagrams module pairs these with charges;
// root partitions use them for the imaginary part.
using PartitionTuple = std::vector<Partition>;

inline Int size_of(const PartitionTuple& t) {
  Int s = 0;
  for (const auto& p : t) s += size_of(p);
  return s;
}

// a dominates b: every prefix statistic
//   sum_{s<r} |a^(s)| + sum_{i<=t} a^(r)_i
// weakly exceeds the same statistic for b. Requires equal totals.
inline bool dominates(const PartitionTuple& a, const PartitionTuple& b) {
  require(a.size() == b.size(), "dominance needs tuples of equal length");
  require(size_of(a) == size_of(b), "dominance needs tuples of equal size");
  Int prefix_a = 0, prefix_b = 0;
  for (size_t r = 0; r < a.size(); ++r) {
    size_t rows = std::max(a[r].size(), b[r].size());
    Int row_a = prefix_a, row_b = prefix_b;
    for (size_t t = 0; t < rows; ++t) {
      row_a += t < a[r].size() ? a[r][t] : 0;
      row_b += t < b[r].size() ? b[r][t] : 0;
      if (row_a < row_b) return false;
    }
    prefix_a = row_a;
    prefix_b = row_b;
  }
  return true;
}

inline bool dominates(const Partition& a, const Partition& b) {
  return dominates(PartitionTuple{a}, PartitionTuple{b});
}

}  // namespace klr
