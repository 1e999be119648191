#pragma once

#include "agc/affine_code.hpp"
#include "agc/matrix.hpp"
#include "agc/qcomb.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace agc {

/// l-dimensional subspaces of F_q^m in reduced row-echelon form, ordered by
/// pivot set and then free entries. Throws CapExceeded past caps.max_listed.
std::vector<Matrix> enumerate_subspaces(int l, int m, unsigned q, const Caps& caps = {});

/// The l x l minors of an l x m matrix over all l-subsets of columns, in
/// lexicographic subset order.
std::vector<Elem> pluecker(const Matrix& rep);

/// Generator whose columns are the Pluecker vectors of all subspaces.
LinearCode build_grassmann_code(int l, int m, unsigned q, const Caps& caps = {});

struct CellComparison {
  bool matched = false;
  std::size_t cell_size = 0;   // subspaces with leading Pluecker coordinate 1
  std::size_t total = 0;       // all subspaces
  /// Row r of the restricted Grassmann generator equals sign[r] times row
  /// row_map[r] of the affine code generator.
  std::vector<std::size_t> row_map;
  std::vector<int> sign;
  std::string detail;
};

/// Restricts the Grassmann code to the basic cell where the leading
/// Pluecker coordinate is 1, reindexes those columns by the point index of
/// the l x (m - l) block B_W, and searches for a signed row bijection onto
/// the affine Grassmann generator.
CellComparison cell_restriction_compare(int l, int m, unsigned q, const Caps& caps = {});

}  // namespace agc
