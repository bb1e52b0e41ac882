#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bottkit/error.hpp"

namespace bottkit {

using BigInt = boost::multiprecision::cpp_int;

// Partition: weakly decreasing nonnegative parts, stored without trailing
// zeros so that equality is plain vector equality.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw DomainError("partition has a negative part");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // i-th part, zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::vector<int> padded(std::size_t m) const {
    if (parts_.size() > m) throw DomainError("partition does not fit in " + std::to_string(m) + " rows");
    std::vector<int> out(parts_);
    out.resize(m, 0);
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

// Weight: fixed-length integer sequence, entries may be negative.
class Weight {
 public:
  Weight() = default;
  Weight(std::initializer_list<int> e) : entries_(e) {}
  explicit Weight(std::vector<int> e) : entries_(std::move(e)) {}
  static Weight constant(std::size_t m, int c) { return Weight(std::vector<int>(m, c)); }
  static Weight from_partition(const Partition& p, std::size_t m) { return Weight(p.padded(m)); }

  std::size_t size() const { return entries_.size(); }
  const std::vector<int>& entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }
  int front() const { return entries_.front(); }
  int back() const { return entries_.back(); }

  bool dominant() const {
    return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{});
  }

  Weight shifted(int c) const {
    Weight w(*this);
    for (auto& x : w.entries_) x += c;
    return w;
  }

  // (-w_m, ..., -w_1)
  Weight dual() const {
    std::vector<int> e(entries_.rbegin(), entries_.rend());
    for (auto& x : e) x = -x;
    return Weight(std::move(e));
  }

  Weight concat(const Weight& other) const {
    std::vector<int> e(entries_);
    e.insert(e.end(), other.entries_.begin(), other.entries_.end());
    return Weight(std::move(e));
  }

  // Requires dominance; subtracts the last entry.
  Partition to_partition() const {
    if (!dominant()) throw DomainError("weight is not dominant");
    if (entries_.empty()) return {};
    return Partition(shifted(-entries_.back()).entries_);
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> entries_;
};

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    int rows = 0;
    while (static_cast<std::size_t>(rows) < p.length() && p[rows] > static_cast<int>(c)) ++rows;
    out[c] = rows;
  }
  return Partition(std::move(out));
}

// Mirrored complement of p inside the rows x width rectangle:
// alpha_i = width - p_{rows+1-i}.
inline Partition complement(const Partition& p, int rows, int width) {
  if (rows <= 0 || width < 0) throw DomainError("rectangle must have positive rows and nonnegative width");
  if (p.length() > static_cast<std::size_t>(rows) || p[0] > width)
    throw DomainError("partition " + to_string(p) + " does not fit in the " + std::to_string(rows) + "x" +
                      std::to_string(width) + " rectangle");
  auto padded = p.padded(static_cast<std::size_t>(rows));
  std::vector<int> alpha(padded.size());
  for (std::size_t i = 0; i < padded.size(); ++i) alpha[i] = width - padded[padded.size() - 1 - i];
  return Partition(std::move(alpha));
}

// Dimension of the GL_m irreducible with highest weight nu:
//   prod_{i<j} (nu_i - nu_j + j - i) / (j - i).
// The numerator is formed exactly, then divided once by the superfactorial.
inline BigInt weyl_dimension(const Weight& nu) {
  if (!nu.dominant()) throw DomainError("weyl_dimension needs a dominant weight, got " + to_string(nu));
  const std::size_t m = nu.size();
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      num *= nu[i] - nu[j] + static_cast<int>(j - i);
      den *= static_cast<int>(j - i);
    }
  }
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("weyl_dimension: inexact division");
  return q;
}

inline BigInt weyl_dimension(const Partition& p, std::size_t m) {
  if (p.length() > m) return 0;
  return weyl_dimension(Weight::from_partition(p, m));
}

using LRDecomposition = std::map<Partition, BigInt>;

namespace detail {

// Fills an LR skew tableau of shape nu/lambda and content mu row by row.
// Rows store the labels (1-based, ascending) placed to the right of lambda.
class LRFiller {
 public:
  LRFiller(const Partition& lam, const Partition& mu, std::size_t m)
      : lam_(lam.padded(m)), mu_(mu.parts()), m_(m), used_(mu_.size() + 1, 0), rows_(m) {}

  LRDecomposition run() {
    fill_row(0);
    return std::move(result_);
  }

 private:
  int remaining() const {
    int r = 0;
    for (std::size_t i = 0; i < mu_.size(); ++i) r += mu_[i] - used_[i + 1];
    return r;
  }

  int row_length(std::size_t r) const { return lam_[r] + static_cast<int>(rows_[r].size()); }

  void record() {
    std::vector<int> nu(m_);
    for (std::size_t r = 0; r < m_; ++r) nu[r] = r < filled_ ? row_length(r) : lam_[r];
    result_[Partition(std::move(nu))] += 1;
  }

  void fill_row(std::size_t r) {
    if (remaining() == 0) {
      filled_ = r;
      record();
      return;
    }
    if (r == m_) return;
    counts_.assign(mu_.size() + 1, 0);
    choose(r, mu_.size());
  }

  // Chooses how many copies of each label go in row r, largest label first
  // (the order in which the row is read for the lattice condition).
  void choose(std::size_t r, std::size_t label) {
    if (label == 0) {
      place(r);
      return;
    }
    const int avail = mu_[label - 1] - used_[label];
    int cap = avail;
    if (label >= 2) cap = std::min(cap, used_[label - 1] - used_[label]);
    const int room = r == 0 ? cap : (row_cap(r) - lam_[r] - placed_in_row());
    cap = std::min(cap, room);
    for (int c = cap; c >= 0; --c) {
      counts_[label] = c;
      choose(r, label - 1);
    }
    counts_[label] = 0;
  }

  int row_cap(std::size_t r) const { return row_length(r - 1); }

  int placed_in_row() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  void place(std::size_t r) {
    std::vector<int> row;
    for (std::size_t l = 1; l < counts_.size(); ++l) row.insert(row.end(), counts_[l], static_cast<int>(l));
    if (r > 0 && lam_[r] + static_cast<int>(row.size()) > row_length(r - 1)) return;
    // column strictness against the row above
    if (r > 0) {
      for (std::size_t idx = 0; idx < row.size(); ++idx) {
        const int col = lam_[r] + static_cast<int>(idx);
        if (col < lam_[r - 1]) continue;
        const int above = rows_[r - 1][static_cast<std::size_t>(col - lam_[r - 1])];
        if (row[idx] <= above) return;
      }
    }
    const auto saved_counts = counts_;
    rows_[r] = row;
    for (std::size_t l = 1; l < counts_.size(); ++l) used_[l] += counts_[l];
    fill_row(r + 1);
    counts_ = saved_counts;
    for (std::size_t l = 1; l < counts_.size(); ++l) used_[l] -= counts_[l];
    rows_[r].clear();
  }

  std::vector<int> lam_;
  std::vector<int> mu_;
  std::size_t m_;
  std::vector<int> used_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> rows_;
  std::size_t filled_ = 0;
  LRDecomposition result_;
};

}  // namespace detail

// c^nu_{lambda,mu} for every nu with at most m rows, by enumerating
// Littlewood-Richardson skew tableaux.
inline LRDecomposition littlewood_richardson(const Partition& lam, const Partition& mu, std::size_t m) {
  if (m == 0) throw DomainError("littlewood_richardson: m must be positive");
  if (lam.length() > m || mu.length() > m) return {};
  return detail::LRFiller(lam, mu, m).run();
}

}  // namespace bottkit
