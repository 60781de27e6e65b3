#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace mellin {

/// Generalized Stirling numbers of the second kind S_c(k, j).
///
/// They express the k-th power of the Mellin operator z d/dz + c through
/// pure derivatives:  (z d/dz + c)^k = sum_j S_c(k, j) z^j (d/dz)^j.
/// Composing once more with z d/dz + c and using D z^j = z^j D + j z^(j-1)
/// gives the recurrence
///
///     S_c(k+1, j) = S_c(k, j-1) + (c + j) S_c(k, j),   S_c(0, 0) = 1.
///
/// Each entry is a polynomial in c with non-negative integer coefficients.
/// Up to kMaxExactOrder the table keeps those polynomials and evaluates them
/// on demand, so the recurrence holds exactly; beyond that it falls back to
/// running the recurrence in floating point.
class StirlingTable {
 public:
  /// Coefficient bound: every coefficient is at most the Bell number
  /// B(k+1), which still fits in int64 for k = 23.
  static constexpr int kMaxExactOrder = 20;

  using Polynomial = std::vector<std::int64_t>;  // coefficients of c^0, c^1, ...

  StirlingTable(double c, int k_max) : c_(c), k_max_(k_max) {
    if (k_max < 0) throw PreconditionError("StirlingTable: k_max must be >= 0");
    values_.assign(static_cast<std::size_t>(k_max + 1), {});
    if (k_max <= kMaxExactOrder) {
      build_exact();
    } else {
      build_floating();
    }
  }

  double c() const noexcept { return c_; }
  int max_order() const noexcept { return k_max_; }
  bool exact() const noexcept { return !polys_.empty(); }

  /// S_c(k, j); zero outside 0 <= j <= k.
  double operator()(int k, int j) const {
    check_row(k);
    if (j < 0 || j > k) return 0.0;
    return values_[k][j];
  }

  /// Exact coefficient polynomial of S_c(k, j) in c. Only available when
  /// the table was built exactly.
  const Polynomial& polynomial(int k, int j) const {
    check_row(k);
    if (!exact()) throw PreconditionError("StirlingTable: polynomial form needs k_max <= 20");
    if (j < 0 || j > k) return zero_;
    return polys_[k][j];
  }

 private:
  void check_row(int k) const {
    if (k < 0 || k > k_max_) throw PreconditionError("StirlingTable: row index out of range");
  }

  static Polynomial poly_at(const std::vector<Polynomial>& row, int j) {
    if (j < 0 || j >= static_cast<int>(row.size())) return {};
    return row[j];
  }

  void build_exact() {
    polys_.assign(static_cast<std::size_t>(k_max_ + 1), {});
    polys_[0] = {Polynomial{1}};
    for (int k = 0; k < k_max_; ++k) {
      auto& next = polys_[k + 1];
      next.assign(static_cast<std::size_t>(k + 2), {});
      for (int j = 0; j <= k + 1; ++j) {
        const Polynomial left = poly_at(polys_[k], j - 1);
        const Polynomial same = poly_at(polys_[k], j);
        Polynomial out(std::max(left.size(), same.size() + 1), 0);
        for (std::size_t i = 0; i < left.size(); ++i) out[i] += left[i];
        for (std::size_t i = 0; i < same.size(); ++i) {
          out[i] += static_cast<std::int64_t>(j) * same[i];  // j * S
          out[i + 1] += same[i];                             // c * S
        }
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        next[j] = std::move(out);
      }
    }
    for (int k = 0; k <= k_max_; ++k) {
      values_[k].resize(static_cast<std::size_t>(k + 1));
      for (int j = 0; j <= k; ++j) values_[k][j] = horner(polys_[k][j]);
    }
  }

  void build_floating() {
    values_[0] = {1.0};
    for (int k = 0; k < k_max_; ++k) {
      values_[k + 1].assign(static_cast<std::size_t>(k + 2), 0.0);
      for (int j = 0; j <= k + 1; ++j) {
        const double left = j >= 1 ? values_[k][j - 1] : 0.0;
        const double same = j <= k ? values_[k][j] : 0.0;
        values_[k + 1][j] = left + (c_ + j) * same;
      }
    }
  }

  double horner(const Polynomial& p) const {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * c_ + static_cast<double>(*it);
    return acc;
  }

  double c_;
  int k_max_;
  std::vector<std::vector<double>> values_;
  std::vector<std::vector<Polynomial>> polys_;
  Polynomial zero_{0};
};

inline StirlingTable stirling_table(double c, int k_max) { return StirlingTable(c, k_max); }

/// Signed Stirling numbers of the first kind s(j, m), rows 0..j_max.
/// z^j (d/dz)^j = sum_m s(j, m) (d/dw)^m  with z = e^w.
inline std::vector<std::vector<double>> stirling_first_kind(int j_max) {
  std::vector<std::vector<double>> s(static_cast<std::size_t>(j_max + 1));
  s[0] = {1.0};
  for (int j = 0; j < j_max; ++j) {
    s[j + 1].assign(static_cast<std::size_t>(j + 2), 0.0);
    for (int m = 0; m <= j + 1; ++m) {
      const double left = m >= 1 ? s[j][m - 1] : 0.0;
      const double same = m <= j ? s[j][m] : 0.0;
      s[j + 1][m] = left - j * same;
    }
  }
  return s;
}

}  // namespace mellin
