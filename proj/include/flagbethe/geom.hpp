#pragma once

#include "flagbethe/flag_coh.hpp"

#include <optional>
#include <string>

namespace fb {

// Topological action of e_{a,a+1} (raise) or e_{a+1,a} (lower) tensor t^j
// on the direct sum of the H_lambda, by fixed-point localization. sign
// selects which of the two module structures (the i^+ or the i^- one) is
// meant. When the target weight has a negative component the result is the
// zero class at the (clamped) source weight.
CohClass rho_generator(int sign, bool raise, unsigned a, unsigned j, const CohClass& x);

// Outcome of a diagram comparison; holds the first witness on failure.
struct DiagramResult {
    bool ok = true;
    std::string witness;
};

// i^{sign} . rho(g) == g . i^{sign} on module_basis(lam), exactly, for
// g = e_{a,a+1} or e_{a+1,a} tensor t^j.
DiagramResult diagram_check(int sign, bool raise, unsigned a, unsigned j, const Weight& lam);

// rho is C[z]^+-linear: rho(sigma_s(z) x) = sigma_s(z) rho(x) on the basis,
// so the action descends modulo the ideal generated by the sigma_s(z).
DiagramResult descended_check(int sign, bool raise, unsigned a, unsigned j, const Weight& lam);

// [rho^-(e12 t^0), rho^-(e21 t^0)] = (lambda_1 - lambda_2) id on H_lambda.
DiagramResult serre_instance_check(const Weight& lam, int sign);

}  // namespace fb
