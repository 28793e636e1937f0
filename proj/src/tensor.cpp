#include "flagbethe/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fb {

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? "," : "") << comps[i];
    os << ")";
    return os.str();
}

Int weight_multiplicity(const Weight& lam) {
    Int d = 1;
    unsigned placed = 0;
    for (unsigned c : lam.comps) {
        for (unsigned k = 1; k <= c; ++k) {
            ++placed;
            d = d * placed / k;  // running binomial product stays integral
        }
    }
    return d;
}

std::vector<Weight> all_weights(unsigned N, unsigned n) {
    std::vector<Weight> out;
    Weight w;
    w.comps.assign(N, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
        if (i + 1 == N) {
            w.comps[i] = left;
            out.push_back(w);
            return;
        }
        for (unsigned c = 0; c <= left; ++c) {
            w.comps[i] = c;
            rec(i + 1, left - c);
        }
    };
    if (N == 0) throw std::invalid_argument("all_weights: N must be positive");
    rec(0, n);
    return out;
}

std::string Decomp::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t s = 0; s < color.size(); ++s) os << (s ? " " : "") << int(color[s]) + 1;
    os << "]";
    return os.str();
}

std::vector<Decomp> enumerate_decompositions(const Weight& lam) {
    unsigned n = lam.n(), N = lam.N();
    std::vector<Decomp> out;
    Decomp d;
    d.color.assign(n, 0);
    std::vector<unsigned> remaining = lam.comps;
    std::function<void(unsigned)> rec = [&](unsigned s) {
        if (s == n) {
            out.push_back(d);
            return;
        }
        for (unsigned b = 0; b < N; ++b) {
            if (remaining[b] == 0) continue;
            --remaining[b];
            d.color[s] = std::uint8_t(b);
            rec(s + 1);
            ++remaining[b];
        }
    };
    rec(0);
    return out;
}

std::string VElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [I, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "v" << I.str() << "*(" << p.str() << ")";
    }
    return os.str();
}

VElement act_generator(unsigned i, unsigned j, unsigned r, const VElement& x) {
    if (i < 1 || i > x.N() || j < 1 || j > x.N())
        throw std::invalid_argument("act_generator: index out of range");
    VElement out(x.n(), x.N());
    for (auto& [I, p] : x.coeffs()) {
        for (unsigned s = 1; s <= x.n(); ++s) {
            if (I.color[s - 1] != j - 1) continue;
            Decomp J = I;
            J.color[s - 1] = std::uint8_t(i - 1);
            out.add(J, MPoly::var(z_var(s), int(r)) * p);
        }
    }
    return out;
}

FracVElement act_generator(unsigned i, unsigned j, unsigned r, const FracVElement& x) {
    // D is a fixed scalar denominator; the action passes through it
    return FracVElement(act_generator(i, j, r, x.num));
}

VElement sn_act(const std::vector<unsigned>& perm, const VElement& x) {
    unsigned n = x.n();
    if (perm.size() != n) throw std::invalid_argument("sn_act: wrong permutation size");
    std::map<Var, MPoly> repl;
    for (unsigned s = 1; s <= n; ++s) repl[z_var(s)] = MPoly::var(z_var(perm[s - 1]));
    VElement out(n, x.N());
    for (auto& [I, p] : x.coeffs()) {
        Decomp J = I;
        for (unsigned s = 1; s <= n; ++s) J.color[perm[s - 1] - 1] = I.color[s - 1];
        out.add(J, p.substitute(repl));
    }
    return out;
}

std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 1u);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int permutation_sign(const std::vector<unsigned>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

VElement project_symmetric(const VElement& x, int sign) {
    VElement acc(x.n(), x.N());
    auto perms = all_permutations(x.n());
    for (auto& p : perms) {
        VElement y = sn_act(p, x);
        if (sign < 0 && permutation_sign(p) < 0) y = -y;
        acc += y;
    }
    Rat inv = Rat(1) / factorial(x.n());
    return inv * acc;
}

MPoly shapovalov(const VElement& x, const VElement& y) {
    MPoly r;
    for (auto& [I, p] : x.coeffs()) {
        auto q = y.coeff(I);
        if (!q.is_zero()) r += p * q;
    }
    return r;
}

MPoly z_vandermonde(unsigned n) {
    std::vector<Var> zs;
    for (unsigned s = 1; s <= n; ++s) zs.push_back(z_var(s));
    return vandermonde(zs);
}

MPoly shapovalov_pm(const VElement& x, const FracVElement& y) {
    MPoly num = shapovalov(x, y.num);
    if (num.is_zero()) return num;
    auto q = num.divide_exact(z_vandermonde(x.n()));
    if (!q) throw std::logic_error("shapovalov_pm: numerator not divisible by D");
    return *q;
}

int decomp_sign(const Decomp& I) {
    int sign = 1;
    for (unsigned a = 0; a < I.n(); ++a)
        for (unsigned b = a + 1; b < I.n(); ++b)
            if (I.color[a] > I.color[b]) sign = -sign;
    return sign;
}

MPoly d_over_r(const Decomp& I, unsigned N) {
    MPoly r(Rat(decomp_sign(I)));
    for (unsigned i = 0; i < N; ++i) {
        std::vector<Var> zs;
        for (unsigned s : I.block(i)) zs.push_back(z_var(s));
        r *= vandermonde(zs);
    }
    return r;
}

MPoly r_of_decomp(const Decomp& I, unsigned N) {
    std::vector<std::vector<unsigned>> blocks = I.blocks(N);
    return block_resultant(blocks);
}

}  // namespace fb
