#include "highgenus/linalg.hpp"

#include <algorithm>

#include "highgenus/errors.hpp"

namespace highgenus {

std::vector<int> independent_rows(const Mat& rows) {
  // reduced copies of accepted rows, each with a pivot column
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
  std::vector<int> chosen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vec v = rows[r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v[pivots[b]] == 0) continue;
      const Rational f = v[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * basis[b][c];
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (nz == v.end()) continue;
    pivots.push_back(nz - v.begin());
    basis.push_back(std::move(v));
    chosen.push_back(static_cast<int>(r));
  }
  return chosen;
}

int rank(const Mat& rows) { return static_cast<int>(independent_rows(rows).size()); }

Rational determinant(Mat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::optional<Vec> solve_nonnegative(const Mat& a, const Vec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (rows == 0) return Vec(cols, Rational(0));
  // tableau [A | I | b] with artificial slack per row, b >= 0
  const std::size_t width = cols + rows + 1;
  Mat t(rows, Vec(width, Rational(0)));
  std::vector<std::size_t> basic(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < cols; ++c) t[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
    t[r][cols + r] = 1;
    t[r][width - 1] = flip ? Rational(-b[r]) : b[r];
    basic[r] = cols + r;
  }
  // reduced costs for minimizing the sum of artificials
  Vec cost(width, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < width; ++c)
      if (c < cols || c == width - 1) cost[c] -= t[r][c];

  for (;;) {
    // Bland: lowest-index column with negative reduced cost
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c)
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const Rational ratio = t[r][width - 1] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basic[r] < basic[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) throw Error(ErrorCode::InternalAssertion, "phase I objective unbounded");
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t c = 0; c < width; ++c) t[r][c] -= f * t[leave][c];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t c = 0; c < width; ++c) cost[c] -= f * t[leave][c];
    }
    basic[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;
  Vec x(cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    if (basic[r] < cols) x[basic[r]] = t[r][width - 1];
  return x;
}

std::optional<Vec> positive_dependency(const Mat& vectors) {
  const std::size_t count = vectors.size();
  if (count == 0) return std::nullopt;
  const std::size_t dim = vectors[0].size();
  // lambda = 1 + mu, mu >= 0:  sum mu_i v_i = -sum v_i
  Mat a(dim, Vec(count));
  Vec b(dim, Rational(0));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < count; ++i) {
      a[j][i] = vectors[i][j];
      b[j] -= vectors[i][j];
    }
  auto mu = solve_nonnegative(a, b);
  if (!mu) return std::nullopt;
  for (auto& x : *mu) x += 1;
  return mu;
}

}  // namespace highgenus
