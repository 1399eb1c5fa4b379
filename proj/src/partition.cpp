#include "lmsf/partition.hpp"

#include <cctype>
#include <stdexcept>

namespace lmsf {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("partition rows must be weakly decreasing");
    size_ += rows_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> rows;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    for (char c : cur) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
      }
    }
    rows.push_back(std::stoi(cur));
    cur.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  if (any) flush();
  return Partition(std::move(rows));
}

Partition Partition::conjugate() const {
  std::vector<int> cols(rows_.empty() ? 0 : rows_[0], 0);
  for (int r : rows_) {
    for (int j = 0; j < r; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.row(i) > row(i)) return false;
  }
  return true;
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int i = 1; i <= length(); ++i) {
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  }
  return out;
}

int Partition::hook_length(const Box& b) const {
  int leg = 0;
  while (row(b.row + leg + 1) >= b.col) ++leg;
  return row(b.row) - b.col + leg + 1;
}

Partition Partition::add_box(const Box& b) const {
  std::vector<int> r = rows_;
  if (b.row == length() + 1 && b.col == 1) {
    r.push_back(1);
  } else if (b.row <= length() && b.col == row(b.row) + 1 && (b.row == 1 || row(b.row - 1) > row(b.row))) {
    ++r[b.row - 1];
  } else {
    throw std::invalid_argument("box is not addable");
  }
  return Partition(std::move(r));
}

Partition Partition::remove_box(const Box& b) const {
  if (!(b.row <= length() && b.col == row(b.row) && row(b.row + 1) < b.col)) {
    throw std::invalid_argument("box is not removable");
  }
  std::vector<int> r = rows_;
  --r[b.row - 1];
  return Partition(std::move(r));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_into(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void subdiagrams_into(const Partition& lambda, int i, int cap, std::vector<int>& cur,
                      std::vector<Partition>& out) {
  if (i > lambda.length()) {
    out.emplace_back(cur);
    return;
  }
  const int hi = std::min(cap, lambda.row(i));
  for (int v = 0; v <= hi; ++v) {
    cur.push_back(v);
    if (v == 0) {
      // Once a row is empty all later rows are empty.
      out.emplace_back(cur);
      cur.pop_back();
      continue;
    }
    subdiagrams_into(lambda, i + 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_into(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = enumerate_partitions(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> subdiagrams(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (lambda.empty()) return {Partition()};
  subdiagrams_into(lambda, 1, lambda.row(1), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition intersect(const Partition& a, const Partition& b) {
  std::vector<int> r;
  for (int i = 1; i <= std::min(a.length(), b.length()); ++i) r.push_back(std::min(a.row(i), b.row(i)));
  return Partition(std::move(r));
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> r;
  r.reserve(a.length() + b.length());
  std::merge(a.rows().begin(), a.rows().end(), b.rows().begin(), b.rows().end(), std::back_inserter(r),
             std::greater<>());
  return Partition(std::move(r));
}

Corners corners(const Partition& lambda) {
  Corners c;
  const int l = lambda.length();
  for (int i = 1; i <= l + 1; ++i) {
    if (i == 1 || lambda.row(i - 1) > lambda.row(i)) c.addable.push_back({i, lambda.row(i) + 1});
  }
  for (int i = 1; i <= l; ++i) {
    if (lambda.row(i) > lambda.row(i + 1)) c.removable.push_back({i, lambda.row(i)});
  }
  return c;
}

BigInt dim_syt(const Partition& lambda) {
  BigInt num = factorial(lambda.size());
  BigInt den = 1;
  for (const Box& b : lambda.boxes()) den *= lambda.hook_length(b);
  return num / den;
}

BigInt dim_skew(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return 0;
  const int n = lambda.size() - mu.size();
  const int l = lambda.length();
  if (l == 0) return 1;
  // Aitken: n! det[1/(lambda_i - mu_j - i + j)!], reciprocal factorial of a
  // negative argument is zero.
  std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      const int k = lambda.row(i) - mu.row(j) - i + j;
      m[i - 1][j - 1] = k < 0 ? Rat(0) : make_rat(BigInt(1), factorial(k));
    }
  }
  Rat det = 1;
  for (int c = 0; c < l; ++c) {
    int pivot = -1;
    for (int r = c; r < l; ++r) {
      if (!is_zero(m[r][c])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < l; ++r) {
      if (is_zero(m[r][c])) continue;
      const Rat f = m[r][c] / m[c][c];
      for (int k = c; k < l; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Rat v = det * Rat(factorial(n));
  if (v.get_den() != 1) throw MathError("dim_skew: non-integral determinant");
  return v.get_num();
}

Frobenius frobenius(const Partition& lambda) {
  Frobenius f;
  const Partition conj = lambda.conjugate();
  for (int i = 1; lambda.row(i) >= i; ++i) {
    f.twice_a.push_back(2 * (lambda.row(i) - i) + 1);
    f.twice_b.push_back(2 * (conj.row(i) - i) + 1);
  }
  return f;
}

ParamPoly content_product(const std::vector<Box>& boxes) {
  ParamPoly p(1);
  for (const Box& b : boxes) p *= param::content_factor(b.content());
  return p;
}

ParamPoly content_product(const Partition& lambda) { return content_product(lambda.boxes()); }

ParamPoly content_product(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) throw std::invalid_argument("content_product: mu not inside lambda");
  std::vector<Box> skew;
  for (const Box& b : lambda.boxes()) {
    if (!mu.has_box(b)) skew.push_back(b);
  }
  return content_product(skew);
}

}  // namespace lmsf
