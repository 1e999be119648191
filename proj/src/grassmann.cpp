#include "agc/grassmann.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace agc {

namespace {

void check_lm(int l, int m) {
  if (l < 1 || m <= l) throw std::invalid_argument("grassmann: need 1 <= l < m");
}

}  // namespace

std::vector<Matrix> enumerate_subspaces(int l, int m, unsigned q, const Caps& caps) {
  if (l < 1 || m < l) throw std::invalid_argument("enumerate_subspaces: need 1 <= l <= m");
  if (gaussian_binomial(m, l, q) > caps.max_listed)
    throw CapExceeded("number of subspaces exceeds cap of " + std::to_string(caps.max_listed));
  return enumerate_rref(Field::of_order(q), l, m, caps.max_listed);
}

std::vector<Elem> pluecker(const Matrix& rep) {
  IndexSet rows(rep.rows());
  for (int i = 0; i < rep.rows(); ++i) rows[i] = i + 1;
  std::vector<Elem> coords;
  for (const IndexSet& alpha : k_subsets(rep.cols(), rep.rows())) coords.push_back(minor(rep, rows, alpha));
  return coords;
}

LinearCode build_grassmann_code(int l, int m, unsigned q, const Caps& caps) {
  check_lm(l, m);
  const auto subspaces = enumerate_subspaces(l, m, q, caps);
  const Field field = Field::of_order(q);
  const int k = static_cast<int>(k_subsets(m, l).size());
  Matrix g(field, k, static_cast<int>(subspaces.size()));
  for (std::size_t j = 0; j < subspaces.size(); ++j) {
    const auto p = pluecker(subspaces[j]);
    for (int r = 0; r < k; ++r) g(r, static_cast<int>(j)) = p[r];
  }
  return LinearCode(std::move(g));
}

CellComparison cell_restriction_compare(int l, int m, unsigned q, const Caps& caps) {
  check_lm(l, m);
  const Field field = Field::of_order(q);
  const auto subspaces = enumerate_subspaces(l, m, q, caps);
  const CodeParams params = CodeParams::make(q, static_cast<unsigned>(l), static_cast<unsigned>(m - l));
  const LinearCode affine = build_affine_code(params, caps);
  const int n = affine.length();
  const int k = affine.dimension();

  CellComparison report;
  report.total = subspaces.size();
  Matrix restricted(field, k, n);
  std::vector<bool> seen(n, false);
  IndexSet rows(l), lead(l), rest(m - l);
  for (int i = 0; i < l; ++i) rows[i] = lead[i] = i + 1;
  for (int j = 0; j < m - l; ++j) rest[j] = l + j + 1;
  for (const Matrix& w : subspaces) {
    if (minor(w, rows, lead) != 1) continue;
    const std::uint64_t col = point_index(w.submatrix(rows, rest));
    if (seen[col]) throw std::logic_error("cell_restriction_compare: repeated cell point");
    seen[col] = true;
    ++report.cell_size;
    const auto p = pluecker(w);
    for (int r = 0; r < k; ++r) restricted(r, static_cast<int>(col)) = p[r];
  }
  if (report.cell_size != static_cast<std::size_t>(n)) {
    report.detail = "cell has " + std::to_string(report.cell_size) + " points, expected " + std::to_string(n);
    return report;
  }

  const Matrix& g = affine.generator();
  const Elem minus_one = field.neg(1);
  std::vector<bool> used(k, false);
  for (int r = 0; r < k; ++r) {
    bool found = false;
    for (int t = 0; t < k && !found; ++t) {
      if (used[t]) continue;
      for (int s : {1, -1}) {
        const Elem c = s == 1 ? Elem{1} : minus_one;
        bool equal = true;
        for (int j = 0; j < n && equal; ++j) equal = restricted(r, j) == field.mul(c, g(t, j));
        if (equal) {
          report.row_map.push_back(static_cast<std::size_t>(t));
          report.sign.push_back(s);
          used[t] = true;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      report.detail = "no affine row matches Pluecker row " + std::to_string(r);
      report.row_map.clear();
      report.sign.clear();
      return report;
    }
  }
  report.matched = true;
  return report;
}

}  // namespace agc
