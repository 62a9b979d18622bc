#pragma once

// Bernoulli numbers and the base series: Eisenstein series with and without
// character, the Jacobi theta series and binary quadratic form thetas.

#include <cstddef>

#include "mfring/characters.hpp"
#include "mfring/qseries.hpp"

namespace mfring {

/// B_k with B_1 = -1/2.
Rational bernoulli(unsigned k);

/// B_k(x) = sum_j C(k,j) B_j x^(k-j).
Rational bernoulli_poly(unsigned k, const Rational& x);

/// B_{k,chi} = N^(k-1) sum_{a=1}^N chi(a) B_k(a/N).
CycloNum gen_bernoulli(unsigned k, const DirichletCharacter& chi, const FieldCtx& ctx);

/// 1 - (2k/B_k) sum sigma_{k-1}(n) q^n. k = 2 gives the quasi-modular E_2.
QSeries eisenstein_E(unsigned k, std::size_t prec, const FieldCtx& ctx);

/// (1/(N-1)) (N E_2^<N> - E_2).
QSeries eisenstein_C(unsigned N, std::size_t prec, const FieldCtx& ctx);

/// 1 - (2k/B_{k,chi}) sum (sigma_{k-1}*chi)(n) q^n.
QSeries eis_f(unsigned k, const DirichletCharacter& chi, std::size_t prec, const FieldCtx& ctx);

/// sum_n (sum_{d|n} chi(n/d) d^(k-1)) q^n, k >= 2.
QSeries eis_g(unsigned k, const DirichletCharacter& chi, std::size_t prec, const FieldCtx& ctx);

/// sum_n (sum_{d|n} chi(d) psi(n/d) d^(k-1)) q^n.
QSeries eis_g2(unsigned k, const DirichletCharacter& chi, const DirichletCharacter& psi, std::size_t prec,
               const FieldCtx& ctx);

/// sum_{n in Z} q^(n^2).
QSeries theta(std::size_t prec, const FieldCtx& ctx);

/// sum_{(m,n) in Z^2} q^(a m^2 + b m n + c n^2).
QSeries theta_bqf(long a, long b, long c, std::size_t prec, const FieldCtx& ctx);

/// theta_bqf(1,1,6) - theta_bqf(2,1,3).
QSeries alpha23(std::size_t prec, const FieldCtx& ctx);

}  // namespace mfring
