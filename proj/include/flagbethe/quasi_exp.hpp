#pragma once

#include "flagbethe/flag_coh.hpp"
#include "flagbethe/series.hpp"
#include "flagbethe/tensor.hpp"

#include <optional>
#include <vector>

namespace fb {

// Family Sig_i(u) = e^{E_i u} p_i(u), i = 1..N. The exponential never gets
// expanded: it lives as the exponent tag E_i and derivatives act through
// d/du (e^{Eu} q) = e^{Eu} (E q + q'). Generic mode: E_i = K_i (symbolic or
// numeric), p_i monic of degree lambda_i with coefficients Sigma_{ij}.
// Singular mode: E_i = 0, deg p_i = d_i = lambda_i + N - i and the tail has
// gaps: Sigma_{ij} present only when d_i - j is not an exponent d_m.
struct QuasiExponentialFamily {
    unsigned N = 0;
    Weight lam;
    bool singular = false;
    std::vector<Frac> expo;        // E_i
    std::vector<Series<Frac>> p;   // p_i(u), exact polynomials in u
};

QuasiExponentialFamily generic_family(const Weight& lam);
QuasiExponentialFamily generic_family(const Weight& lam, const std::vector<Rat>& kvals);
// requires lam dominant
QuasiExponentialFamily singular_family(const Weight& lam);

// the Sigma variables actually present in the family, row-major
std::vector<Var> family_sigma_vars(const QuasiExponentialFamily& f);

// (E + d/du)^k q
Series<Frac> shifted_derivative(const Frac& e, const Series<Frac>& q, unsigned k);

// Polynomial part of Wr(Sig_first, ..., Sig_N): the determinant of the
// derivative matrix with the exponential prefactor e^{sum E_i u} removed.
Series<Frac> wronskian_poly(const QuasiExponentialFamily& f, unsigned first = 1);

// A_s, s = 1..n, from Wr = prefactor * (u^n + sum (-1)^s A_s u^{n-s}).
// Throws when the exponents coincide (prefactor vanishes).
std::vector<Frac> extract_wk(const QuasiExponentialFamily& f);

// A_s^infty from prod_i p_i(u) = u^n + sum (-1)^s A_s^infty u^{n-s}.
std::vector<MPoly> winfty(const Weight& lam);

// Monic fundamental operator d^N + sum F_i(u) d^{N-i} with coefficients
// valid to order u^{-jmax}.
DiffOp<Frac> fundamental_diffop(const QuasiExponentialFamily& f, int jmax);

// F_{ij}: coefficient of u^{-j} in the d^{N-i} coefficient.
Frac f_coeff(const DiffOp<Frac>& d, unsigned N, unsigned i, int j);

// d applied to e^{Eu} q, with the prefactor stripped.
Series<Frac> apply_diffop(const DiffOp<Frac>& d, const Frac& expo, const Series<Frac>& q);

// d annihilates every member of the family to the given order
bool annihilates_family(const DiffOp<Frac>& d, const QuasiExponentialFamily& f);

// (d - y_1'/y_1 + y_2'/y_2) ... (d - y_N'/y_N) with y_i = Wr(Sig_i..Sig_N),
// compared with fundamental_diffop as truncated series.
bool factorization_holds(const QuasiExponentialFamily& f, int jmax);

// Sigma_{is} -> (-1)^s e_s(gamma_{i,1..lambda_i})
MPoly eta_substitute(const MPoly& x, const Weight& lam);
CohClass eta_iso(const MPoly& x, const Weight& lam);

}  // namespace fb
