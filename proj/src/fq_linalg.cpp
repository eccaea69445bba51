#include "charcorr/detail/fq_linalg.hpp"

#include <algorithm>
#include <utility>

namespace charcorr::detail {

std::vector<std::size_t> rref(const Fq& f, FqMat& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const auto inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto g = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(g, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

FqMat nullspace(const Fq& f, const FqMat& a) {
  if (a.empty()) return {};
  const std::size_t n = a[0].size();
  FqMat m = a;
  const auto pivots = rref(f, m);
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  FqMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FqVec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

FqVec charpoly(const Fq& f, FqMat h) {
  const std::size_t n = h.size();
  // reduce to upper Hessenberg form by similarity transforms
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const auto inv = f.inv(h[m][m - 1]);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0) continue;
      const auto u = f.mul(h[j][m - 1], inv);
      for (std::size_t c = 0; c < n; ++c) h[j][c] = f.sub(h[j][c], f.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][m] = f.add(h[r][m], f.mul(u, h[r][j]));
    }
  }
  // p_k = characteristic polynomial of the leading k x k block
  std::vector<FqVec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    FqVec cur(k + 1, 0);
    // (x - h[k-1][k-1]) * p[k-1]
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      cur[d + 1] = f.add(cur[d + 1], p[k - 1][d]);
      cur[d] = f.sub(cur[d], f.mul(h[k - 1][k - 1], p[k - 1][d]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h[k - i][k - i - 1]);
      const auto coef = f.mul(h[k - i - 1][k - 1], t);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d)
        cur[d] = f.sub(cur[d], f.mul(coef, p[k - i - 1][d]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

std::uint64_t poly_eval(const Fq& f, const FqVec& poly, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

std::uint64_t determinant(const Fq& f, FqMat a) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const auto inv = f.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const auto g = f.mul(a[r][c], inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = f.sub(a[r][k], f.mul(g, a[c][k]));
    }
  }
  return det;
}

}  // namespace charcorr::detail
