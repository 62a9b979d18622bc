#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference; both evaluate every output entry with the same operation order,
// so their results are bit-identical.

#include <cstddef>
#include <span>
#include <vector>

#include "mfring/cyclo.hpp"

namespace mfring::kernels {

using Row = std::vector<CycloNum>;

/// out[n] = sum_{i+j=n} a[i] b[j] for n < prec.
std::vector<CycloNum> cauchy_product(std::span<const CycloNum> a, std::span<const CycloNum> b,
                                     std::size_t prec);
std::vector<CycloNum> cauchy_product_serial(std::span<const CycloNum> a, std::span<const CycloNum> b,
                                            std::size_t prec);

struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  /// Rows in echelon form; the first `rank` rows are the reduced basis.
  std::vector<Row> rows;
};

/// Gaussian elimination with leftmost-nonzero pivoting. Pivot rows are scaled
/// to a leading 1; the search for a pivot takes the first candidate row.
Echelon echelon(std::vector<Row> rows);
Echelon echelon_serial(std::vector<Row> rows);

/// Products smaller than this run through the serial kernel.
inline constexpr std::size_t kParallelThreshold = 48;

}  // namespace mfring::kernels
