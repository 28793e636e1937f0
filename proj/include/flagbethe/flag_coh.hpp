#pragma once

#include "flagbethe/linalg.hpp"
#include "flagbethe/qlaurent.hpp"
#include "flagbethe/tensor.hpp"

#include <optional>
#include <vector>

namespace fb {

// Class in H_lambda in canonical fixed-point-restriction form: one
// polynomial in z per decomposition I, ordered as
// enumerate_decompositions(lambda). An optional symbolic representative in
// the Chern roots g_{i,j} is kept when known.
struct CohClass {
    Weight lam;
    std::vector<MPoly> restr;
    std::optional<MPoly> rep;

    friend bool operator==(const CohClass& a, const CohClass& b) {
        return a.lam == b.lam && a.restr == b.restr;
    }
};

// Substitutes Gamma_i -> z_{I_i} (block-sorted); h must be symmetric
// within each Gamma block for the result to be well defined.
MPoly restrict_to_fixed_point(const MPoly& h, const Weight& lam, const Decomp& I);

CohClass class_from_representative(const Weight& lam, const MPoly& h);
CohClass unit_class(const Weight& lam);

CohClass coh_add(const CohClass& a, const CohClass& b);
CohClass coh_mul(const CohClass& a, const CohClass& b);
CohClass coh_scale(const MPoly& p, const CohClass& a);

// Localization integral: sum_I x_I / R(I). Always a polynomial; throws
// when the denominators fail to cancel.
MPoly integrate(const CohClass& x);

VElement i_plus(const CohClass& x);
FracVElement i_minus(const CohClass& x);

// Multiplication by the power sum sum_j gamma_{ij}^r.
CohClass xi_action(unsigned i, unsigned r, const CohClass& x);

// Free C[z]^+-module basis of H_lambda: products of Schur polynomials in
// the Chern-root blocks over staircase-bounded partitions. The rank check
// at a generic rational point is run by the caller (see
// fixed_point_matrix).
std::vector<CohClass> module_basis(const Weight& lam);

// Fallback basis built degreewise from monomials in the block elementary
// symmetric classes.
std::vector<CohClass> module_basis_echelon(const Weight& lam);

// Matrix of fixed-point restrictions at a numeric z-specialization:
// rows = classes, cols = decompositions.
RatMat fixed_point_matrix(const std::vector<CohClass>& classes,
                          const std::map<Var, Rat>& zvals);

// Pairing matrix integrate(b_i b_j) with z set to 0 (reduction mod J_H).
RatMat poincare_pairing_matrix(const std::vector<CohClass>& basis);

// Graded character of the singular part of (1/D)V^-/J^-: the evaluated
// product formula, a Laurent polynomial in q.
QLaurent graded_character_formula(const Weight& lam);

// Schur polynomial s_mu of the listed variables (Jacobi-Trudi in the
// complete homogeneous basis).
MPoly schur(const std::vector<unsigned>& mu, const std::vector<Var>& vars);

// Deterministic distinct rational z-values from a seed.
std::map<Var, Rat> generic_z_values(unsigned n, unsigned seed);

}  // namespace fb
