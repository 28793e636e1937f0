#pragma once

#include "flagbethe/rat.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fb {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

// Reduced row echelon form with unit pivots; zero rows removed.
struct Echelon {
    RatMat rows;
    std::vector<std::size_t> pivots;  // pivot column of each row

    std::size_t rank() const { return rows.size(); }

    // Eliminates v against the echelon rows in place; returns the
    // combination coefficients used (aligned with rows).
    RatVec reduce(RatVec& v) const;

    // Adds v as a new row if independent; returns true when added.
    bool absorb(RatVec v);
};

Echelon echelon_form(const RatMat& m);

std::size_t rank(const RatMat& m);

// Basis of { x : m x = 0 }, columns indexed by x.
RatMat kernel_basis(const RatMat& m, std::size_t ncols);

// Solves A x = b for square or overdetermined consistent systems.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

}  // namespace fb
