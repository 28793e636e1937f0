#include "flagbethe/flag_coh.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace fb {

MPoly restrict_to_fixed_point(const MPoly& h, const Weight& lam, const Decomp& I) {
    if (I.weight(lam.N()) != lam)
        throw std::invalid_argument("restrict_to_fixed_point: block-size mismatch");
    std::map<Var, MPoly> repl;
    for (unsigned i = 1; i <= lam.N(); ++i) {
        auto block = I.block(i - 1);
        for (unsigned j = 1; j <= block.size(); ++j)
            repl[gamma_var(i, j)] = MPoly::var(z_var(block[j - 1]));
    }
    return h.substitute(repl);
}

CohClass class_from_representative(const Weight& lam, const MPoly& h) {
    CohClass x;
    x.lam = lam;
    x.rep = h;
    for (auto& I : enumerate_decompositions(lam))
        x.restr.push_back(restrict_to_fixed_point(h, lam, I));
    return x;
}

CohClass unit_class(const Weight& lam) { return class_from_representative(lam, MPoly(1)); }

static void check_same(const CohClass& a, const CohClass& b) {
    if (a.lam != b.lam || a.restr.size() != b.restr.size())
        throw std::invalid_argument("CohClass: weight mismatch");
}

CohClass coh_add(const CohClass& a, const CohClass& b) {
    check_same(a, b);
    CohClass r;
    r.lam = a.lam;
    for (std::size_t k = 0; k < a.restr.size(); ++k) r.restr.push_back(a.restr[k] + b.restr[k]);
    if (a.rep && b.rep) r.rep = *a.rep + *b.rep;
    return r;
}

CohClass coh_mul(const CohClass& a, const CohClass& b) {
    check_same(a, b);
    CohClass r;
    r.lam = a.lam;
    for (std::size_t k = 0; k < a.restr.size(); ++k) r.restr.push_back(a.restr[k] * b.restr[k]);
    if (a.rep && b.rep) r.rep = *a.rep * *b.rep;
    return r;
}

CohClass coh_scale(const MPoly& p, const CohClass& a) {
    CohClass r;
    r.lam = a.lam;
    for (auto& x : a.restr) r.restr.push_back(p * x);
    if (a.rep) r.rep = p * *a.rep;
    return r;
}

MPoly integrate(const CohClass& x) {
    auto decomps = enumerate_decompositions(x.lam);
    MPoly num;
    for (std::size_t k = 0; k < decomps.size(); ++k)
        num += x.restr[k] * d_over_r(decomps[k], x.lam.N());
    if (num.is_zero()) return num;
    auto q = num.divide_exact(z_vandermonde(x.lam.n()));
    if (!q) throw std::logic_error("integrate: localization denominators did not cancel");
    return *q;
}

VElement i_plus(const CohClass& x) {
    auto decomps = enumerate_decompositions(x.lam);
    VElement out(x.lam.n(), x.lam.N());
    for (std::size_t k = 0; k < decomps.size(); ++k) out.add(decomps[k], x.restr[k]);
    return out;
}

FracVElement i_minus(const CohClass& x) {
    auto decomps = enumerate_decompositions(x.lam);
    VElement num(x.lam.n(), x.lam.N());
    for (std::size_t k = 0; k < decomps.size(); ++k)
        num.add(decomps[k], x.restr[k] * d_over_r(decomps[k], x.lam.N()));
    return FracVElement(std::move(num));
}

CohClass xi_action(unsigned i, unsigned r, const CohClass& x) {
    if (i < 1 || i > x.lam.N()) throw std::invalid_argument("xi_action: index out of range");
    auto decomps = enumerate_decompositions(x.lam);
    CohClass out;
    out.lam = x.lam;
    for (std::size_t k = 0; k < decomps.size(); ++k) {
        std::vector<Var> zs;
        for (unsigned s : decomps[k].block(i - 1)) zs.push_back(z_var(s));
        out.restr.push_back(power_sum(r, zs) * x.restr[k]);
    }
    if (x.rep) {
        std::vector<Var> gs;
        for (unsigned j = 1; j <= x.lam.comps[i - 1]; ++j) gs.push_back(gamma_var(i, j));
        out.rep = power_sum(r, gs) * *x.rep;
    }
    return out;
}

MPoly schur(const std::vector<unsigned>& mu, const std::vector<Var>& vars) {
    std::vector<unsigned> parts;
    for (unsigned p : mu)
        if (p > 0) parts.push_back(p);
    std::size_t l = parts.size();
    if (l == 0) return MPoly(1);
    // Jacobi-Trudi: det(h_{mu_i - i + j})
    std::vector<std::vector<MPoly>> m(l, std::vector<MPoly>(l));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            int d = int(parts[i]) - int(i) + int(j);
            m[i][j] = d < 0 ? MPoly() : complete_homogeneous(unsigned(d), vars);
        }
    // Laplace expansion; l <= 4 here
    std::function<MPoly(std::vector<std::size_t>, std::size_t)> det =
        [&](std::vector<std::size_t> cols, std::size_t row) -> MPoly {
        if (cols.size() == 1) return m[row][cols[0]];
        MPoly acc;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (m[row][cols[c]].is_zero()) continue;
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (k != c) rest.push_back(cols[k]);
            MPoly sub = m[row][cols[c]] * det(rest, row + 1);
            if (c % 2)
                acc -= sub;
            else
                acc += sub;
        }
        return acc;
    };
    std::vector<std::size_t> cols(l);
    for (std::size_t c = 0; c < l; ++c) cols[c] = c;
    return det(cols, 0);
}

// partitions with at most `rows` parts, each part <= cap
static std::vector<std::vector<unsigned>> bounded_partitions(unsigned rows, unsigned cap) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) {
        out.push_back(cur);
        if (left == 0) return;
        for (unsigned p = std::min(maxpart, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - 1, p);
            cur.pop_back();
        }
    };
    rec(rows, cap);
    // dedupe: recursion above emits each partition exactly once (weakly
    // decreasing construction), including the empty one
    return out;
}

std::vector<CohClass> module_basis(const Weight& lam) {
    unsigned N = lam.N();
    std::vector<std::vector<std::vector<unsigned>>> choices;  // per i = 1..N-1
    for (unsigned i = 1; i + 1 <= N; ++i) {
        unsigned cap = 0;
        for (unsigned m = i + 1; m <= N; ++m) cap += lam.comps[m - 1];
        choices.push_back(bounded_partitions(lam.comps[i - 1], cap));
    }
    std::vector<CohClass> basis;
    std::function<void(std::size_t, MPoly)> rec = [&](std::size_t i, MPoly acc) {
        if (i == choices.size()) {
            basis.push_back(class_from_representative(lam, acc));
            return;
        }
        std::vector<Var> gs;
        for (unsigned j = 1; j <= lam.comps[i]; ++j) gs.push_back(gamma_var(unsigned(i + 1), j));
        for (auto& mu : choices[i]) rec(i + 1, acc * schur(mu, gs));
    };
    rec(0, MPoly(1));
    return basis;
}

std::vector<CohClass> module_basis_echelon(const Weight& lam) {
    unsigned N = lam.N();
    Int want = weight_multiplicity(lam);
    auto zvals = generic_z_values(lam.n(), 20240901u);
    std::vector<CohClass> basis;
    Echelon ech;
    // monomials in the block elementary symmetric classes, by degree
    std::vector<std::pair<unsigned, unsigned>> gens;  // (block i, e-index j)
    for (unsigned i = 1; i + 1 <= N; ++i)
        for (unsigned j = 1; j <= lam.comps[i - 1]; ++j) gens.push_back({i, j});
    std::vector<MPoly> genpoly;
    for (auto& [i, j] : gens) {
        std::vector<Var> gs;
        for (unsigned k = 1; k <= lam.comps[i - 1]; ++k) gs.push_back(gamma_var(i, k));
        genpoly.push_back(elementary_symmetric(j, gs));
    }
    for (unsigned deg = 0; Int(basis.size()) < want; ++deg) {
        if (deg > 40) throw std::logic_error("module_basis_echelon: rank not reached");
        // exponent vectors with weighted degree == deg
        std::function<void(std::size_t, unsigned, MPoly)> rec = [&](std::size_t g,
                                                                    unsigned left, MPoly acc) {
            if (Int(basis.size()) >= want) return;
            if (g == gens.size()) {
                if (left != 0) return;
                CohClass c = class_from_representative(lam, acc);
                RatVec row;
                for (auto& r : c.restr) row.push_back(r.evaluate(zvals).constant_value());
                if (ech.absorb(row)) basis.push_back(std::move(c));
                return;
            }
            unsigned w = gens[g].second;
            for (unsigned e = 0; e * w <= left; ++e)
                rec(g + 1, left - e * w, e ? acc * genpoly[g].pow(e) : acc);
        };
        rec(0, deg, MPoly(1));
    }
    return basis;
}

RatMat fixed_point_matrix(const std::vector<CohClass>& classes,
                          const std::map<Var, Rat>& zvals) {
    RatMat m;
    for (auto& c : classes) {
        RatVec row;
        for (auto& r : c.restr) row.push_back(r.evaluate(zvals).constant_value());
        m.push_back(std::move(row));
    }
    return m;
}

RatMat poincare_pairing_matrix(const std::vector<CohClass>& basis) {
    std::map<Var, Rat> zero;
    if (!basis.empty())
        for (unsigned s = 1; s <= basis[0].lam.n(); ++s) zero[z_var(s)] = 0;
    RatMat m;
    for (auto& a : basis) {
        RatVec row;
        for (auto& b : basis) {
            MPoly p = integrate(coh_mul(a, b));
            row.push_back(p.evaluate(zero).constant_value());
        }
        m.push_back(std::move(row));
    }
    return m;
}

QLaurent graded_character_formula(const Weight& lam) {
    if (!lam.dominant())
        throw std::invalid_argument("graded_character_formula: weight must be dominant");
    unsigned N = lam.N(), n = lam.n();
    QLaurent num = QLaurent::q_pochhammer(n);
    for (unsigned i = 1; i <= N; ++i)
        for (unsigned j = i + 1; j <= N; ++j)
            num = num * QLaurent::one_minus_q(
                            int(lam.comps[i - 1]) - int(lam.comps[j - 1]) + int(j) - int(i));
    QLaurent den(1);
    for (unsigned i = 1; i <= N; ++i)
        den = den * QLaurent::q_pochhammer(lam.comps[i - 1] + N - i);
    QLaurent ratio = num.divided_by(den);
    // the antisymmetric side is the contravariant dual of the symmetric one,
    // so its degrees are reversed: substitute q -> 1/q in the ratio before
    // applying the overall shift
    QLaurent ch;
    for (auto& [e, c] : ratio.coeffs()) ch.add(-e, c);
    int shift = 0;
    for (unsigned i = 1; i <= N; ++i) shift -= int(i - 1) * int(lam.comps[i - 1]);
    ch = ch.shifted(shift);
    for (auto& [e, c] : ch.coeffs())
        if (c < 0) throw std::logic_error("graded_character_formula: negative coefficient");
    return ch;
}

std::map<Var, Rat> generic_z_values(unsigned n, unsigned seed) {
    static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    std::vector<int> pool(std::begin(primes), std::end(primes));
    std::mt19937 rng(seed);
    // explicit Fisher-Yates so the draw is identical on every platform
    for (std::size_t i = pool.size() - 1; i > 0; --i) {
        std::size_t j = rng() % (i + 1);
        std::swap(pool[i], pool[j]);
    }
    std::map<Var, Rat> vals;
    for (unsigned s = 1; s <= n; ++s) vals[z_var(s)] = pool[s - 1];
    return vals;
}

}  // namespace fb
