#include "e6voa/linalg.hpp"

#include <algorithm>

namespace e6voa::linalg {
namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& r) {
  mpz_class g = 0;
  for (const auto& x : r)
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : r)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseRow& s, std::size_t ncols) {
  mpz_class l = 1;
  for (const auto& [c, x] : s) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow r(ncols, 0);
  for (const auto& [c, x] : s) r[c] = x.get_num() * (l / x.get_den());
  make_primitive(r);
  return r;
}

// Row echelon form; returns pivot columns, rows reduced so that each pivot
// column is zero in every other row.
std::vector<std::size_t> echelon(std::vector<IntRow>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < m.size(); ++c) {
    std::size_t best = m.size();
    for (std::size_t r = top; r < m.size(); ++r)
      if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
    if (best == m.size()) continue;
    std::swap(m[top], m[best]);
    const IntRow& p = m[top];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == top || m[r][c] == 0) continue;
      mpz_class g = gcd(p[c], m[r][c]);
      mpz_class a = p[c] / g, b = m[r][c] / g;
      for (std::size_t k = 0; k < ncols; ++k) {
        if (p[k] == 0 && m[r][k] == 0) continue;
        m[r][k] = a * m[r][k] - b * p[k];
      }
      make_primitive(m[r]);
    }
    pivots.push_back(c);
    ++top;
  }
  m.resize(top);
  return pivots;
}

}  // namespace

std::vector<Scalar> normalize(std::vector<Scalar> v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (l / v[i].get_den());
  make_primitive(r);
  auto lead = std::find_if(r.begin(), r.end(), [](const mpz_class& x) { return x != 0; });
  int sign = (lead != r.end() && *lead < 0) ? -1 : 1;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Scalar(r[i] * sign);
  return v;
}

std::vector<std::vector<Scalar>> nullspace(const std::vector<SparseRow>& rows, std::size_t ncols) {
  std::vector<IntRow> m;
  for (const auto& s : rows)
    if (!s.empty()) m.push_back(to_int_row(s, ncols));
  auto pivots = echelon(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(ncols, 0);
    v[f] = 1;
    // Row i reads m[i][p_i] x_{p_i} + m[i][f] x_f = 0 over the free columns.
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (m[i][f] == 0) continue;
      v[pivots[i]] = -Scalar(m[i][f]) / Scalar(m[i][pivots[i]]);
    }
    out.push_back(normalize(std::move(v)));
  }
  return out;
}

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t ncols) {
  std::vector<IntRow> m;
  for (const auto& s : rows)
    if (!s.empty()) m.push_back(to_int_row(s, ncols));
  return echelon(m, ncols).size();
}

}  // namespace e6voa::linalg
