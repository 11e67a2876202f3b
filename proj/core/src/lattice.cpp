#include "polycurve/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace polycurve {

Integer determinant(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& r : m) {
    if (r.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);

  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sgn * a[n - 1][n - 1];
}

std::vector<std::size_t> independent_rows(const IntegerMatrix& rows) {
  std::vector<std::size_t> chosen;
  if (rows.empty()) return chosen;
  const std::size_t d = rows.front().size();
  // Echelon basis kept over the rationals; each candidate is reduced
  // against it and kept when a nonzero remainder survives.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != d) throw std::invalid_argument("independent_rows: ragged matrix");
    std::vector<Rational> v(d);
    for (std::size_t j = 0; j < d; ++j) v[j] = static_cast<long>(rows[r][j]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& f = v[pivots[b]];
      if (f == 0) continue;
      Rational factor = f;
      for (std::size_t j = 0; j < d; ++j) v[j] -= factor * basis[b][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    std::size_t p = static_cast<std::size_t>(it - v.begin());
    Rational lead = v[p];
    for (auto& x : v) x /= lead;
    // keep the basis fully reduced on pivot columns
    for (auto& b : basis) {
      if (b[p] != 0) {
        Rational f = b[p];
        for (std::size_t j = 0; j < d; ++j) b[j] -= f * v[j];
      }
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(r);
    if (chosen.size() == d) break;
  }
  return chosen;
}

std::size_t rank(const IntegerMatrix& rows) { return independent_rows(rows).size(); }

UnimodularMatrix::UnimodularMatrix(IntegerMatrix rows) : rows_(std::move(rows)) {
  Integer d = polycurve::determinant(rows_);
  if (d == 1) {
    det_ = 1;
  } else if (d == -1) {
    det_ = -1;
  } else {
    throw std::invalid_argument("matrix is not unimodular (det = " + d.get_str() + ")");
  }
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) {
  IntegerMatrix rows(n, IntegerVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return UnimodularMatrix(std::move(rows));
}

UnimodularMatrix UnimodularMatrix::inverse() const {
  const std::size_t n = size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(rows_[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (a[p][k] == 0) ++p;  // nonsingular, so a pivot exists
    std::swap(a[k], a[p]);
    Rational lead = a[k][k];
    for (auto& x : a[k]) x /= lead;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  IntegerMatrix inv(n, IntegerVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) {
        throw std::logic_error("unimodular inverse is not a machine integer matrix");
      }
      inv[i][j] = x.get_num().get_si();
    }
  }
  return UnimodularMatrix(std::move(inv));
}

ExponentVector UnimodularMatrix::apply(std::span<const std::int64_t> a) const {
  if (a.size() != size()) throw std::invalid_argument("UnimodularMatrix::apply: length mismatch");
  ExponentVector out(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < size(); ++j) s += rows_[i][j] * a[j];
    out[i] = s;
  }
  return out;
}

namespace {

// Column reduction v·W = e_0 with W unimodular; returns W^{-1}, whose first
// row is v.
IntegerMatrix gcd_completion(const IntegerVector& v) {
  const std::size_t n = v.size();
  IntegerVector w = v;
  IntegerMatrix inv(n, IntegerVector(n, 0));  // tracks W^{-1}
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

  // column j += q·column i on w  <=>  row i -= q·row j on W^{-1}
  auto add_column = [&](std::size_t j, std::size_t i, std::int64_t q) {
    w[j] += q * w[i];
    for (std::size_t c = 0; c < n; ++c) inv[i][c] -= q * inv[j][c];
  };
  auto swap_columns = [&](std::size_t i, std::size_t j) {
    std::swap(w[i], w[j]);
    std::swap(inv[i], inv[j]);
  };

  while (true) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] != 0 && (best == n || std::llabs(w[i]) < std::llabs(w[best]))) best = i;
    }
    bool done = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == best || w[j] == 0) continue;
      done = false;
      add_column(j, best, -(w[j] / w[best]));
    }
    if (done) {
      if (best != 0) swap_columns(0, best);
      break;
    }
  }
  if (w[0] == -1) {
    w[0] = 1;
    for (auto& x : inv[0]) x = -x;
  }
  return inv;
}

}  // namespace

UnimodularMatrix extend_to_unimodular(const IntegerVector& v, std::size_t row) {
  const std::size_t n = v.size();
  if (n == 0) throw std::invalid_argument("extend_to_unimodular: empty vector");
  if (row >= n) throw std::out_of_range("extend_to_unimodular: row out of range");
  std::int64_t g = content(v);
  if (g == 0) throw std::invalid_argument("extend_to_unimodular: zero vector");
  if (g != 1) throw std::invalid_argument("extend_to_unimodular: vector is not primitive");

  IntegerMatrix rows;
  if (std::llabs(v[row]) == 1) {
    rows.assign(n, IntegerVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    rows[row] = v;
  } else {
    rows = gcd_completion(v);
    // move v from row 0 to the requested row, keeping the others in order
    std::rotate(rows.begin(), rows.begin() + 1, rows.begin() + static_cast<std::ptrdiff_t>(row) + 1);
  }
  return UnimodularMatrix(std::move(rows));
}

}  // namespace polycurve
