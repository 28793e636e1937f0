#pragma once

#include "flagbethe/rat.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fb {

// Namespaced variables. The spectral variable u is deliberately absent:
// it lives only inside UInvSeries.
enum class VarKind : std::uint8_t {
    Z = 0,      // z_s, evaluation points
    Gamma = 1,  // g_{i,j}, Chern roots of the i-th quotient bundle
    Sigma = 2,  // S_{i,j}, coefficients of quasi-exponential polynomials
    K = 3,      // K_i, exponents
};

struct Var {
    std::uint32_t packed;  // kind<<16 | i<<8 | j

    constexpr Var() : packed(0) {}
    constexpr Var(VarKind kind, unsigned i, unsigned j = 0)
        : packed((std::uint32_t(kind) << 16) | (i << 8) | j) {}

    VarKind kind() const { return VarKind(packed >> 16); }
    unsigned i() const { return (packed >> 8) & 0xff; }
    unsigned j() const { return packed & 0xff; }

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string name() const;
};

inline Var z_var(unsigned s) { return Var(VarKind::Z, s); }
inline Var gamma_var(unsigned i, unsigned j) { return Var(VarKind::Gamma, i, j); }
inline Var sigma_var(unsigned i, unsigned j) { return Var(VarKind::Sigma, i, j); }
inline Var k_var(unsigned i) { return Var(VarKind::K, i); }

// Monomial: sorted list of (variable, exponent>0) pairs.
struct Mono {
    std::vector<std::pair<Var, int>> factors;

    int total_degree() const {
        int d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    int degree_of(Var v) const {
        for (auto& [w, e] : factors)
            if (w == v) return e;
        return 0;
    }
    int degree_in(VarKind kind) const {
        int d = 0;
        for (auto& [v, e] : factors)
            if (v.kind() == kind) d += e;
        return d;
    }
    bool empty() const { return factors.empty(); }

    friend bool operator==(const Mono&, const Mono&) = default;

    static Mono one() { return {}; }
    static Mono of(Var v, int e = 1) {
        Mono m;
        if (e != 0) m.factors.push_back({v, e});
        return m;
    }

    Mono operator*(const Mono& o) const;
    // this / o, or nullopt when not divisible
    std::optional<Mono> divide(const Mono& o) const;
};

// Graded-lexicographic term order; the canonical order for pivoting and
// leading terms throughout.
struct MonoGrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        // tie-break: scan variables in increasing order; at the first
        // difference the monomial with the larger exponent is the larger
        // one, so the comparison is compatible with multiplication
        std::size_t i = 0, j = 0;
        while (i < a.factors.size() && j < b.factors.size()) {
            const auto& [va, ea] = a.factors[i];
            const auto& [vb, eb] = b.factors[j];
            if (va == vb) {
                if (ea != eb) return ea < eb;
                ++i;
                ++j;
            } else {
                return va > vb;
            }
        }
        return i == a.factors.size() && j < b.factors.size();
    }
};

// Sparse exact-rational multivariate polynomial. No zero coefficient is
// ever stored, so equality is equality of term maps.
class MPoly {
  public:
    using TermMap = std::map<Mono, Rat, MonoGrlexLess>;

    MPoly() = default;
    explicit MPoly(Rat c) {
        if (c != 0) terms_[Mono::one()] = std::move(c);
    }
    explicit MPoly(long long c) : MPoly(Rat(c)) {}

    static MPoly var(Var v, int e = 1) {
        MPoly p;
        if (e == 0) return MPoly(1);
        p.terms_[Mono::of(v, e)] = 1;
        return p;
    }
    static MPoly term(Mono m, Rat c) {
        MPoly p;
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::logic_error("MPoly: not a constant");
        return terms_.begin()->second;
    }
    std::size_t size() const { return terms_.size(); }

    int total_degree() const {  // -1 for the zero polynomial
        return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
    }
    int degree_in(VarKind kind) const {
        int d = terms_.empty() ? -1 : 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(kind));
        return d;
    }

    const Mono& leading_mono() const {
        if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
        return terms_.rbegin()->first;
    }
    const Rat& leading_coeff() const {
        if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
        return terms_.rbegin()->second;
    }

    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rat& c);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }

    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

    // Exact division; nullopt when o does not divide this.
    std::optional<MPoly> divide_exact(const MPoly& o) const;

    // Simultaneous substitution var -> polynomial (missing vars untouched).
    MPoly substitute(const std::map<Var, MPoly>& repl) const;
    // Full or partial numeric evaluation.
    MPoly evaluate(const std::map<Var, Rat>& vals) const;

    // Homogeneous component of the given total degree in z-variables,
    // grading all other variables at zero.
    MPoly z_homogeneous_part(int k) const;

    std::string str() const;

  private:
    TermMap terms_;
};

// sigma_s of the listed variables
MPoly elementary_symmetric(unsigned s, const std::vector<Var>& vars);
// complete homogeneous symmetric polynomial h_m
MPoly complete_homogeneous(unsigned m, const std::vector<Var>& vars);
// power sum p_r (p_0 = count)
MPoly power_sum(unsigned r, const std::vector<Var>& vars);
// prod_{i<j} (v_j - v_i)
MPoly vandermonde(const std::vector<Var>& vars);
// prod_{i<j} prod_{a in B_i, b in B_j} (z_b - z_a), blocks of z-indices
MPoly block_resultant(const std::vector<std::vector<unsigned>>& blocks);

}  // namespace fb
