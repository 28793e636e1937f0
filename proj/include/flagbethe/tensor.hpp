#pragma once

#include "flagbethe/mpoly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace fb {

// gl_N weight: nonnegative components summing to n.
struct Weight {
    std::vector<unsigned> comps;  // lambda_1..lambda_N

    unsigned N() const { return unsigned(comps.size()); }
    unsigned n() const {
        unsigned s = 0;
        for (unsigned c : comps) s += c;
        return s;
    }
    bool dominant() const {
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i - 1] < comps[i]) return false;
        return true;
    }
    friend auto operator<=>(const Weight&, const Weight&) = default;
    std::string str() const;
};

// Multinomial n! / (lambda_1! ... lambda_N!)
Int weight_multiplicity(const Weight& lam);

// All weights with given N and |lambda| = n.
std::vector<Weight> all_weights(unsigned N, unsigned n);

// Ordered decomposition of {1..n} into N blocks, stored as the color
// sequence: color[s-1] = block of position s, 0-based block indices.
struct Decomp {
    std::vector<std::uint8_t> color;

    unsigned n() const { return unsigned(color.size()); }
    Weight weight(unsigned N) const {
        Weight w;
        w.comps.assign(N, 0);
        for (auto c : color) ++w.comps[c];
        return w;
    }
    // 1-based z indices of block i (0-based), in increasing order
    std::vector<unsigned> block(unsigned i) const {
        std::vector<unsigned> b;
        for (unsigned s = 0; s < color.size(); ++s)
            if (color[s] == i) b.push_back(s + 1);
        return b;
    }
    std::vector<std::vector<unsigned>> blocks(unsigned N) const {
        std::vector<std::vector<unsigned>> bs(N);
        for (unsigned s = 0; s < color.size(); ++s) bs[color[s]].push_back(s + 1);
        return bs;
    }
    friend auto operator<=>(const Decomp&, const Decomp&) = default;
    std::string str() const;
};

std::vector<Decomp> enumerate_decompositions(const Weight& lam);

// Element of V_lambda (or of the full weight-mixed space): a finite map
// decomposition -> polynomial coefficient. Zero coefficients are dropped.
class VElement {
  public:
    VElement(unsigned n, unsigned N) : n_(n), N_(N) {}

    static VElement basis(const Decomp& I, unsigned N, MPoly p = MPoly(1)) {
        VElement x(I.n(), N);
        x.add(I, p);
        return x;
    }

    unsigned n() const { return n_; }
    unsigned N() const { return N_; }
    const std::map<Decomp, MPoly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Decomp& I, const MPoly& p) {
        if (p.is_zero()) return;
        auto it = coeffs_.find(I);
        if (it == coeffs_.end()) {
            coeffs_.emplace(I, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    MPoly coeff(const Decomp& I) const {
        auto it = coeffs_.find(I);
        return it == coeffs_.end() ? MPoly() : it->second;
    }

    VElement& operator+=(const VElement& o) {
        for (auto& [I, p] : o.coeffs_) add(I, p);
        return *this;
    }
    VElement& operator-=(const VElement& o) {
        for (auto& [I, p] : o.coeffs_) add(I, -p);
        return *this;
    }
    friend VElement operator+(VElement a, const VElement& b) { return a += b; }
    friend VElement operator-(VElement a, const VElement& b) { return a -= b; }
    VElement operator-() const {
        VElement r = *this;
        for (auto& [I, p] : r.coeffs_) p = -p;
        return r;
    }
    friend VElement operator*(const MPoly& p, VElement x) {
        VElement r(x.n(), x.N());
        for (auto& [I, q] : x.coeffs_) r.add(I, p * q);
        return r;
    }
    friend VElement operator*(const Rat& c, VElement x) { return MPoly(c) * std::move(x); }

    friend bool operator==(const VElement&, const VElement&) = default;

    // Largest z-degree over coefficients, -1 when zero.
    int degree() const {
        int d = -1;
        for (auto& [I, p] : coeffs_) d = std::max(d, p.total_degree());
        return d;
    }
    VElement homogeneous_part(int k) const {
        VElement r(n_, N_);
        for (auto& [I, p] : coeffs_) r.add(I, p.z_homogeneous_part(k));
        return r;
    }

    std::string str() const;

  private:
    unsigned n_, N_;
    std::map<Decomp, MPoly> coeffs_;
};

// x / D with D the full Vandermonde of z_1..z_n. Arithmetic acts on the
// numerator; the denominator never changes.
struct FracVElement {
    VElement num;

    explicit FracVElement(VElement x) : num(std::move(x)) {}
    FracVElement(unsigned n, unsigned N) : num(n, N) {}

    // z-degree including the -deg(D) offset
    int degree() const {
        int nn = int(num.n());
        return num.degree() - nn * (nn - 1) / 2;
    }
    friend bool operator==(const FracVElement&, const FracVElement&) = default;
};

// (e_{ij} tensor t^r) x, 1-based i, j.
VElement act_generator(unsigned i, unsigned j, unsigned r, const VElement& x);
FracVElement act_generator(unsigned i, unsigned j, unsigned r, const FracVElement& x);

// Simultaneous permutation of tensor slots and z-variables. perm is the
// 1-based image list: s -> perm[s-1].
VElement sn_act(const std::vector<unsigned>& perm, const VElement& x);

std::vector<std::vector<unsigned>> all_permutations(unsigned n);

// (1/n!) sum over S_n of (sign)^{inversions} sigma x; sign=+1 projects onto
// invariants, sign=-1 onto antiinvariants.
VElement project_symmetric(const VElement& x, int sign);

int permutation_sign(const std::vector<unsigned>& perm);

// Shapovalov form with orthonormal basis v_I, bilinear over C[z].
MPoly shapovalov(const VElement& x, const VElement& y);

// Induced pairing of V^+ with (1/D)V^-: sum_I x_I y_I divided by D. Throws
// when the numerator fails to be divisible by D.
MPoly shapovalov_pm(const VElement& x, const FracVElement& y);

// Full z-Vandermonde D = prod_{i<j}(z_j - z_i).
MPoly z_vandermonde(unsigned n);

// sign of D / R(I): (-1)^{#{a<b with block(a) > block(b)}}
int decomp_sign(const Decomp& I);
// D / R(I) as a polynomial: decomp_sign * prod_i Vandermonde(z_{I_i})
MPoly d_over_r(const Decomp& I, unsigned N);
// R(z_{I_1}|...|z_{I_N})
MPoly r_of_decomp(const Decomp& I, unsigned N);

}  // namespace fb
