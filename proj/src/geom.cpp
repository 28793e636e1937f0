#include "flagbethe/geom.hpp"

#include "flagbethe/frac.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace fb {

namespace {

// nullopt encodes the zero class at an out-of-range target weight
std::optional<CohClass> apply_rho(int sign, bool raise, unsigned a, unsigned j,
                                  const CohClass& x) {
    const Weight& lam = x.lam;
    unsigned N = lam.N();
    if (a < 1 || a + 1 > N) throw std::invalid_argument("rho_generator: index out of range");
    unsigned src = raise ? a + 1 : a;  // 1-based block losing the transferred element
    unsigned dst = raise ? a : a + 1;
    if (lam.comps[src - 1] == 0) return std::nullopt;

    Weight tgt = lam;
    --tgt.comps[src - 1];
    ++tgt.comps[dst - 1];

    auto sdecs = enumerate_decompositions(lam);
    std::map<Decomp, std::size_t> sidx;
    for (std::size_t k = 0; k < sdecs.size(); ++k) sidx[sdecs[k]] = k;

    CohClass out;
    out.lam = tgt;
    for (auto& K : enumerate_decompositions(tgt)) {
        Frac acc;
        for (unsigned delta : K.block(dst - 1)) {
            Decomp I = K;
            I.color[delta - 1] = std::uint8_t(src - 1);
            const MPoly& xi = x.restr[sidx.at(I)];
            if (xi.is_zero()) continue;
            Frac term(xi * MPoly::var(z_var(delta), int(j)));
            if (sign < 0) {
                // Euler-class ratio of the transferred line against the
                // neighboring blocks at the fixed point
                MPoly zd = MPoly::var(z_var(delta));
                MPoly num(1);
                Frac::DenMap den;
                if (raise) {
                    for (unsigned b : K.block(a))  // K_{a+1}
                        num *= MPoly::var(z_var(b)) - zd;
                    for (unsigned c : K.block(a - 1))  // K_a minus delta
                        if (c != delta) den[zd - MPoly::var(z_var(c))] += 1;
                } else {
                    for (unsigned c : K.block(a - 1))  // K_a
                        num *= zd - MPoly::var(z_var(c));
                    for (unsigned b : K.block(a))  // K_{a+1} minus delta
                        if (b != delta) den[MPoly::var(z_var(b)) - zd] += 1;
                }
                term *= Frac(std::move(num), std::move(den));
            }
            acc += term;
        }
        auto p = acc.as_polynomial();
        if (!p) throw std::logic_error("rho_generator: localization sum not polynomial");
        out.restr.push_back(std::move(*p));
    }
    return out;
}

std::string render_witness(const Weight& lam, std::size_t basis_index, const char* what) {
    std::ostringstream os;
    os << "lambda=" << lam.str() << " basis#" << basis_index << ": " << what;
    return os.str();
}

}  // namespace

CohClass rho_generator(int sign, bool raise, unsigned a, unsigned j, const CohClass& x) {
    auto r = apply_rho(sign, raise, a, j, x);
    if (r) return *r;
    CohClass zero;
    zero.lam = x.lam;
    zero.restr.assign(x.restr.size(), MPoly());
    return zero;
}

DiagramResult diagram_check(int sign, bool raise, unsigned a, unsigned j, const Weight& lam) {
    unsigned src = raise ? a + 1 : a;
    unsigned dst = raise ? a : a + 1;
    auto basis = module_basis(lam);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto rho = apply_rho(sign, raise, a, j, basis[k]);
        if (sign > 0) {
            VElement rhs = act_generator(dst, src, j, i_plus(basis[k]));
            VElement lhs = rho ? i_plus(*rho) : VElement(lam.n(), lam.N());
            if (!(lhs == rhs))
                return {false, render_witness(lam, k, "i+ diagram mismatch")};
        } else {
            FracVElement rhs = act_generator(dst, src, j, i_minus(basis[k]));
            FracVElement lhs = rho ? i_minus(*rho) : FracVElement(lam.n(), lam.N());
            if (!(lhs == rhs))
                return {false, render_witness(lam, k, "i- diagram mismatch")};
        }
    }
    return {};
}

DiagramResult descended_check(int sign, bool raise, unsigned a, unsigned j,
                              const Weight& lam) {
    std::vector<Var> zs;
    for (unsigned s = 1; s <= lam.n(); ++s) zs.push_back(z_var(s));
    auto basis = module_basis(lam);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (unsigned s = 1; s <= lam.n(); ++s) {
            MPoly sig = elementary_symmetric(s, zs);
            auto lhs = apply_rho(sign, raise, a, j, coh_scale(sig, basis[k]));
            auto rhs = apply_rho(sign, raise, a, j, basis[k]);
            if (!lhs != !rhs)
                return {false, render_witness(lam, k, "z-linearity shape mismatch")};
            if (!lhs) continue;
            if (!(lhs->restr == coh_scale(sig, *rhs).restr))
                return {false, render_witness(lam, k, "not C[z]+-linear")};
        }
    }
    return {};
}

DiagramResult serre_instance_check(const Weight& lam, int sign) {
    if (lam.N() < 2) throw std::invalid_argument("serre_instance_check: need N >= 2");
    Rat weight = Rat(int(lam.comps[0]) - int(lam.comps[1]));
    auto basis = module_basis(lam);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        CohClass acc;
        acc.lam = lam;
        acc.restr.assign(basis[k].restr.size(), MPoly());
        // rho(e12) rho(e21) - rho(e21) rho(e12)
        if (auto down = apply_rho(sign, false, 1, 0, basis[k]))
            if (auto up = apply_rho(sign, true, 1, 0, *down)) acc = coh_add(acc, *up);
        if (auto up = apply_rho(sign, true, 1, 0, basis[k]))
            if (auto down = apply_rho(sign, false, 1, 0, *up)) {
                CohClass neg = coh_scale(MPoly(Rat(-1)), *down);
                acc = coh_add(acc, neg);
            }
        CohClass expect = coh_scale(MPoly(weight), basis[k]);
        if (!(acc.restr == expect.restr))
            return {false, render_witness(lam, k, "Serre relation instance fails")};
    }
    return {};
}

}  // namespace fb
