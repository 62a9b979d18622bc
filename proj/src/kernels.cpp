#include "mfring/kernels.hpp"

#include <algorithm>

#include "mfring/error.hpp"

namespace mfring::kernels {

namespace {

std::vector<std::size_t> support(std::span<const CycloNum> a, std::size_t limit) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < std::min(a.size(), limit); ++i)
    if (!a[i].is_zero()) idx.push_back(i);
  return idx;
}

const FieldCtx& field_of(std::span<const CycloNum> a, std::span<const CycloNum> b) {
  if (a.empty() && b.empty()) throw Error(Errc::InvalidArgument, "product of empty series");
  const FieldCtx& f = a.empty() ? b.front().field() : a.front().field();
  if (!a.empty() && !b.empty() && &a.front().field() != &b.front().field()) {
    throw Error(Errc::ContextMismatch, "series product across fields");
  }
  return f;
}

void coefficient(std::size_t n, std::span<const CycloNum> a, std::span<const CycloNum> b,
                 const std::vector<std::size_t>& sa, CycloNum& out) {
  for (std::size_t i : sa) {
    if (i > n) break;
    const std::size_t j = n - i;
    if (j < b.size() && !b[j].is_zero()) out.add_product(a[i], b[j]);
  }
}

void eliminate_below(std::vector<Row>& rows, std::size_t r, std::size_t c, bool parallel) {
  const Row& pivot = rows[r];
  const auto n = static_cast<long>(rows.size());
  const auto start = static_cast<long>(r) + 1;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (long i = start; i < n; ++i) {
    Row& row = rows[static_cast<std::size_t>(i)];
    if (row[c].is_zero()) continue;
    const CycloNum factor = -row[c];
    for (std::size_t j = c; j < row.size(); ++j) {
      if (!pivot[j].is_zero()) row[j].add_product(factor, pivot[j]);
    }
  }
}

Echelon run_echelon(std::vector<Row> rows, bool parallel) {
  Echelon out;
  if (rows.empty()) return out;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const CycloNum inv = rows[r][c].inverse();
    for (std::size_t j = c; j < ncols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    eliminate_below(rows, r, c, parallel);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rows = std::move(rows);
  return out;
}

}  // namespace

std::vector<CycloNum> cauchy_product(std::span<const CycloNum> a, std::span<const CycloNum> b,
                                     std::size_t prec) {
  const FieldCtx& f = field_of(a, b);
  const auto sa = support(a, prec);
  std::vector<CycloNum> out(prec, CycloNum(f));
  const auto n = static_cast<long>(prec);
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < n; ++k) coefficient(static_cast<std::size_t>(k), a, b, sa, out[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<CycloNum> cauchy_product_serial(std::span<const CycloNum> a, std::span<const CycloNum> b,
                                            std::size_t prec) {
  const FieldCtx& f = field_of(a, b);
  const auto sa = support(a, prec);
  std::vector<CycloNum> out(prec, CycloNum(f));
  for (std::size_t k = 0; k < prec; ++k) coefficient(k, a, b, sa, out[k]);
  return out;
}

Echelon echelon(std::vector<Row> rows) { return run_echelon(std::move(rows), true); }

Echelon echelon_serial(std::vector<Row> rows) { return run_echelon(std::move(rows), false); }

}  // namespace mfring::kernels
