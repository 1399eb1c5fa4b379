#ifndef LMSF_PARTITION_HPP
#define LMSF_PARTITION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lmsf/coeffring.hpp"

namespace lmsf {

/// A box of a Young diagram, 1-based (row, col).
struct Box {
  int row = 1;
  int col = 1;

  int content() const { return col - row; }
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A Young diagram stored as its weakly decreasing positive rows.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument on negative or
  /// increasing rows.
  explicit Partition(std::vector<int> rows);
  Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

  /// Parses "3,2,2"; the empty string is the empty diagram.
  static Partition parse(std::string_view text);

  const std::vector<int>& rows() const { return rows_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  /// Row i (1-based); 0 past the last row.
  int row(int i) const { return i >= 1 && i <= length() ? rows_[i - 1] : 0; }

  Partition conjugate() const;
  /// mu is a subdiagram of *this.
  bool contains(const Partition& mu) const;
  bool has_box(const Box& b) const { return b.row >= 1 && b.col >= 1 && row(b.row) >= b.col; }
  std::vector<Box> boxes() const;
  int hook_length(const Box& b) const;

  Partition add_box(const Box& b) const;
  Partition remove_box(const Box& b) const;

  /// "3,2,2"; empty diagram -> "".
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.rows_ == b.rows_; }
  /// Canonical order: by size, then reverse-lexicographic ((2) before (1,1)).
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.rows_ > b.rows_;
  }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
/// All partitions of size <= n, grouped by size, each group reverse-lex.
std::vector<Partition> partitions_up_to(int n);
/// Every diagram mu with mu subset of lambda.
std::vector<Partition> subdiagrams(const Partition& lambda);
/// Row-wise minimum.
Partition intersect(const Partition& a, const Partition& b);
/// Multiset union of parts (product of e- or p-monomials).
Partition merge_parts(const Partition& a, const Partition& b);

struct Corners {
  std::vector<Box> addable;    // lambda^+, top row first
  std::vector<Box> removable;  // lambda^-, top row first
};
Corners corners(const Partition& lambda);

/// Number of standard Young tableaux (hook-length formula).
BigInt dim_syt(const Partition& lambda);
/// Number of standard tableaux of the skew shape lambda/mu via
/// n! det[1/(lambda_i - mu_j - i + j)!]; 0 when mu is not inside lambda.
BigInt dim_skew(const Partition& lambda, const Partition& mu);

/// Modified Frobenius coordinates, stored doubled: a_i = twice_a[i] / 2.
struct Frobenius {
  std::vector<int> twice_a;
  std::vector<int> twice_b;
  Rat a(std::size_t i) const { return make_rat(twice_a.at(i), 2); }
  Rat b(std::size_t i) const { return make_rat(twice_b.at(i), 2); }
  int rank() const { return static_cast<int>(twice_a.size()); }
};
Frobenius frobenius(const Partition& lambda);

/// Product over the boxes of (z + c)(z' + c).
ParamPoly content_product(const std::vector<Box>& boxes);
ParamPoly content_product(const Partition& lambda);
/// Product over the boxes of lambda/mu (mu must be inside lambda).
ParamPoly content_product(const Partition& lambda, const Partition& mu);

}  // namespace lmsf

#endif  // LMSF_PARTITION_HPP
