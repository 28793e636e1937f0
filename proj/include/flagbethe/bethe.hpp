#pragma once

#include "flagbethe/series.hpp"
#include "flagbethe/uea.hpp"

#include <map>
#include <utility>
#include <vector>

namespace fb {

// The family B^K_{ij} of Bethe generators, read off the row determinant of
// the universal differential operator. K is symbolic (variables K_i) until
// substituted.
struct BetheFamily {
    unsigned N = 0;
    int jmax = 0;
    std::map<std::pair<unsigned, int>, UEA> b;  // (i, j) -> B^K_{ij}

    const UEA& at(unsigned i, int j) const { return b.at({i, j}); }

    BetheFamily substituted(const std::vector<Rat>& kvals) const {
        BetheFamily f;
        f.N = N;
        f.jmax = jmax;
        for (auto& [key, e] : b) f.b[key] = e.substitute_k(kvals);
        return f;
    }
};

// Expands rdet of the universal operator with entries
// delta_{ij}(d - K_i) - e_{ji}(u) and collects B^K_{ij} for j <= jmax.
// Internal series are truncated at jmax + N to absorb derivative shifts.
BetheFamily expand_universal_operator(unsigned N, int jmax);

// Generators e_{ii} tensor t^j, i = 1..N, j = 0..jmax, of the limiting
// algebra.
std::vector<UEA> binfty_generators(unsigned N, int jmax);

// K values for the asymptotic zone K_{sigma(1)} >> ... >> K_{sigma(N)}:
// K_{sigma(i)} = c^{N+1-i}.
std::vector<Rat> zone_k_values(unsigned N, const Rat& c,
                               const std::vector<unsigned>& sigma = {});

}  // namespace fb
