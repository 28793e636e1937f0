#pragma once

#include "flagbethe/linalg.hpp"
#include "flagbethe/tensor.hpp"

#include <map>
#include <optional>
#include <vector>

namespace fb {

// All z-monomials of total degree k in variables z_1..z_n.
std::vector<Mono> z_monomials(unsigned n, int k);

// Coordinates of the degree-k piece of V_lambda over the basis
// v_I tensor (z-monomial of degree k).
struct GradedCoords {
    Weight lam;
    int k = 0;
    std::vector<Decomp> decomps;
    std::vector<Mono> monos;
    std::map<Mono, std::size_t, MonoGrlexLess> mono_index;

    GradedCoords() = default;
    GradedCoords(Weight lam_, int k_);

    std::size_t dim() const { return decomps.size() * monos.size(); }
    RatVec to_vec(const VElement& homogeneous) const;
    VElement from_vec(const RatVec& v, unsigned N) const;
};

// Graded pieces of V^{s}_lambda / J V^{s}_lambda for s = +1 (invariants)
// or s = -1 (antiinvariant numerators of (1/D)V^-). All degrees are
// numerator z-degrees; the (1/D) shift of -n(n-1)/2 is applied by callers.
class QuotientSpace {
  public:
    QuotientSpace(Weight lam, int sign);

    const Weight& lam() const { return lam_; }
    int sign() const { return sign_; }
    // numerator-degree offset of the presented space: 0 for V^+,
    // -n(n-1)/2 for (1/D)V^-
    int degree_offset() const {
        int nn = int(lam_.n());
        return sign_ > 0 ? 0 : -nn * (nn - 1) / 2;
    }

    void ensure_degree(int k);

    // basis of the degree-k piece of V^{s}_lambda
    const std::vector<VElement>& sym_basis(int k);
    // chosen representatives of the degree-k piece of the quotient
    const std::vector<VElement>& quotient_basis(int k);

    // Coordinates of a homogeneous degree-k element of V^{s}_lambda in the
    // quotient basis at that degree; nullopt when the element does not lie
    // in the symmetric/antisymmetric span.
    std::optional<RatVec> express(const VElement& piece, int k);

    // Coordinates of a general element across all computed degrees,
    // flattened in increasing degree order through max_degree.
    std::optional<RatVec> express_full(const VElement& x, int max_degree);

    // Degree beyond which the quotient is provably zero (free generators
    // exhausted); computed lazily.
    int saturation_degree();

    // total quotient dimension through degree k
    std::size_t dim_through(int k);

  private:
    struct Piece {
        GradedCoords coords;
        std::vector<VElement> sym_basis;
        std::vector<VElement> quot_basis;
        Echelon reducer;       // over [coords | rep indicators]
        std::size_t nrep = 0;  // indicator width used
    };

    Piece& piece(int k);
    void build_piece(int k);

    Weight lam_;
    int sign_;
    std::map<int, Piece> pieces_;
    std::optional<int> saturation_;
};

struct SingularPiece {
    int degree;  // presented degree (numerator degree + degree_offset)
    std::vector<VElement> vectors;  // numerator representatives
};

// Kernel of all e_{ij}, i<j, on the quotient, per graded degree, for a
// dominant weight. spaces must hold QuotientSpace objects for lam and all
// weights lam + eps_i - eps_j reachable by one raising step.
std::vector<SingularPiece> singular_vectors(
    std::map<Weight, QuotientSpace>& spaces, const Weight& lam);

// Convenience: builds the needed QuotientSpace objects internally.
std::vector<SingularPiece> singular_vectors_of_quotient(const Weight& lam, int sign);

}  // namespace fb
