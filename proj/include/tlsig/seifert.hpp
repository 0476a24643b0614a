#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlsig/matrix.hpp"

namespace tlsig {

/// Square integer matrix of a Seifert form together with the declared number
/// of link components. The component count cannot be read off the matrix.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(IntMatrix entries, int components = 1, std::string name = {})
      : entries_(std::move(entries)), components_(components), name_(std::move(name)) {
    if (!entries_.is_square())
      throw DimensionError("Seifert matrix must be square, got " +
                           std::to_string(entries_.rows()) + "x" +
                           std::to_string(entries_.cols()));
    if (components_ < 1) throw InvalidArgument("component count must be at least 1");
  }

  const IntMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }
  int components() const { return components_; }
  const std::string& name() const { return name_; }

  /// S - S^T has nullity r - 1 for a matrix coming from an r-component
  /// link; a mismatch is reported, not rejected.
  std::optional<std::string> consistency_warning() const {
    std::size_t k = nullity(IntMatrix(entries_ - entries_.transpose()));
    if (k == static_cast<std::size_t>(components_ - 1)) return std::nullopt;
    return "nullity(S - S^T) = " + std::to_string(k) + " but " + std::to_string(components_) +
           " components expect " + std::to_string(components_ - 1);
  }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.entries_ == b.entries_ && a.components_ == b.components_;
  }

 private:
  IntMatrix entries_;
  int components_ = 1;
  std::string name_;
};

/// Symmetric r x r matrix: off-diagonal linking numbers, diagonal chosen so
/// every row and column sums to zero.
struct LinkingMatrix {
  IntMatrix entries;
};

/// Principal (r-1)-minor of a linking matrix. `removed_index` is 1-based.
struct SmallLinkingMatrix {
  IntMatrix entries;
  int removed_index = 0;
};

/// Pairwise linking numbers keyed by 1-based (i, j) with i < j.
using LinkingNumbers = std::map<std::pair<int, int>, Integer>;

inline IntMatrix antisymmetric_part(const SeifertMatrix& s) {
  return s.entries() - s.entries().transpose();
}

inline IntMatrix symmetric_part(const SeifertMatrix& s) {
  return s.entries() + s.entries().transpose();
}

/// [[S, 0, 0], [xi, 0, 0], [0, 1, 0]]
inline SeifertMatrix row_extension(const SeifertMatrix& s, const std::vector<Integer>& xi) {
  const std::size_t n = s.size();
  if (xi.size() != n)
    throw DimensionError("extension vector has length " + std::to_string(xi.size()) +
                         ", expected " + std::to_string(n));
  IntMatrix out(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = s.entries()(i, j);
  for (std::size_t j = 0; j < n; ++j) out(n, j) = xi[j];
  out(n + 1, n) = 1;
  return SeifertMatrix(std::move(out), s.components(), s.name());
}

/// Transpose analogue of row_extension: [[S, xi^T, 0], [0, 0, 1], [0, 0, 0]].
inline SeifertMatrix column_extension(const SeifertMatrix& s, const std::vector<Integer>& xi) {
  SeifertMatrix t(s.entries().transpose(), s.components(), s.name());
  return SeifertMatrix(row_extension(t, xi).entries().transpose(), s.components(), s.name());
}

/// Inverse of row_extension. The last two rows and columns must match the
/// extension shape exactly.
inline SeifertMatrix row_contraction(const SeifertMatrix& s) {
  const std::size_t m = s.size();
  if (m < 2) throw PatternMismatchError("row contraction needs at least a 2x2 matrix");
  const auto& e = s.entries();
  const std::size_t n = m - 2;
  for (std::size_t i = 0; i < m; ++i) {
    if (e(i, m - 1) != 0) throw PatternMismatchError("last column is not zero");
    if (e(i, n) != (i == m - 1 ? 1 : 0))
      throw PatternMismatchError("column " + std::to_string(n + 1) + " is not the unit vector");
  }
  for (std::size_t j = 0; j < n; ++j)
    if (e(m - 1, j) != 0) throw PatternMismatchError("last row is not the unit vector");
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e(i, j);
  return SeifertMatrix(std::move(out), s.components(), s.name());
}

inline SeifertMatrix column_contraction(const SeifertMatrix& s) {
  SeifertMatrix t(s.entries().transpose(), s.components(), s.name());
  return SeifertMatrix(row_contraction(t).entries().transpose(), s.components(), s.name());
}

/// P^T S P for unimodular P.
inline SeifertMatrix congruence(const SeifertMatrix& s, const IntMatrix& p) {
  if (!p.is_square() || p.rows() != s.size())
    throw DimensionError("congruence matrix must be " + std::to_string(s.size()) + "x" +
                         std::to_string(s.size()));
  Integer d = bareiss_determinant(p);
  if (d != 1 && d != -1)
    throw NotUnimodularError("congruence matrix has determinant " + to_string(d));
  return SeifertMatrix(p.transpose() * s.entries() * p, s.components(), s.name());
}

inline LinkingMatrix linking_matrix(const LinkingNumbers& lk, int r) {
  if (r < 1) throw InvalidArgument("component count must be at least 1");
  IntMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (const auto& [key, value] : lk) {
    auto [i, j] = key;
    if (i < 1 || j > r || i >= j)
      throw InvalidArgument("linking number key " + std::to_string(i) + "," + std::to_string(j) +
                            " out of range for " + std::to_string(r) + " components");
    a(i - 1, j - 1) = value;
    a(j - 1, i - 1) = value;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != i) sum += a(i, j);
    a(i, i) = -sum;
  }
  return {std::move(a)};
}

/// Deletes row and column k (1-based). Defaults to the last component.
inline SmallLinkingMatrix small_linking_matrix(const LinkingMatrix& a, int k) {
  const int r = static_cast<int>(a.entries.rows());
  if (k < 1 || k > r)
    throw IndexError("removed index " + std::to_string(k) + " outside 1.." + std::to_string(r));
  const std::size_t skip = static_cast<std::size_t>(k - 1);
  IntMatrix h(a.entries.rows() - 1, a.entries.rows() - 1);
  for (std::size_t i = 0, hi = 0; i < a.entries.rows(); ++i) {
    if (i == skip) continue;
    for (std::size_t j = 0, hj = 0; j < a.entries.cols(); ++j) {
      if (j == skip) continue;
      h(hi, hj++) = a.entries(i, j);
    }
    ++hi;
  }
  return {std::move(h), k};
}

inline SmallLinkingMatrix small_linking_matrix(const LinkingMatrix& a) {
  return small_linking_matrix(a, static_cast<int>(a.entries.rows()));
}

}  // namespace tlsig
