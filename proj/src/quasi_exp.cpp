#include "flagbethe/quasi_exp.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace fb {

QuasiExponentialFamily generic_family(const Weight& lam) {
    QuasiExponentialFamily f;
    f.N = lam.N();
    f.lam = lam;
    for (unsigned i = 1; i <= f.N; ++i) {
        f.expo.push_back(Frac(MPoly::var(k_var(i))));
        Series<Frac> pi;
        pi.set(int(lam.comps[i - 1]), Frac(1ll));
        for (unsigned j = 1; j <= lam.comps[i - 1]; ++j)
            pi.set(int(lam.comps[i - 1] - j), Frac(MPoly::var(sigma_var(i, j))));
        f.p.push_back(std::move(pi));
    }
    return f;
}

QuasiExponentialFamily generic_family(const Weight& lam, const std::vector<Rat>& kvals) {
    if (kvals.size() != lam.N())
        throw std::invalid_argument("generic_family: wrong number of K values");
    QuasiExponentialFamily f = generic_family(lam);
    for (unsigned i = 0; i < f.N; ++i) f.expo[i] = Frac(kvals[i]);
    return f;
}

QuasiExponentialFamily singular_family(const Weight& lam) {
    if (!lam.dominant()) throw std::invalid_argument("singular_family: weight not dominant");
    unsigned N = lam.N();
    std::set<unsigned> P;
    for (unsigned i = 1; i <= N; ++i) P.insert(lam.comps[i - 1] + N - i);
    QuasiExponentialFamily f;
    f.N = N;
    f.lam = lam;
    f.singular = true;
    for (unsigned i = 1; i <= N; ++i) {
        unsigned di = lam.comps[i - 1] + N - i;
        f.expo.push_back(Frac());
        Series<Frac> pi;
        pi.set(int(di), Frac(1ll));
        for (unsigned j = 1; j <= di; ++j)
            if (!P.count(di - j)) pi.set(int(di - j), Frac(MPoly::var(sigma_var(i, j))));
        f.p.push_back(std::move(pi));
    }
    return f;
}

std::vector<Var> family_sigma_vars(const QuasiExponentialFamily& f) {
    std::vector<Var> vars;
    for (unsigned i = 0; i < f.N; ++i) {
        int d = f.p[i].top_degree();
        for (auto& [e, c] : f.p[i].coeffs()) {
            if (e == d) continue;
            vars.push_back(sigma_var(i + 1, unsigned(d - e)));
        }
    }
    return vars;
}

Series<Frac> shifted_derivative(const Frac& e, const Series<Frac>& q, unsigned k) {
    Series<Frac> r = q;
    for (unsigned m = 0; m < k; ++m) {
        Series<Frac> next = r.derivative();
        if (!e.is_zero()) next += r.scaled(e);
        r = std::move(next);
    }
    return r;
}

// ordinary determinant of a commutative Series<Frac> matrix
static Series<Frac> series_det(const std::vector<std::vector<Series<Frac>>>& m) {
    std::size_t l = m.size();
    std::function<Series<Frac>(std::vector<std::size_t>, std::size_t)> det =
        [&](std::vector<std::size_t> cols, std::size_t row) -> Series<Frac> {
        if (cols.size() == 1) return m[row][cols[0]];
        Series<Frac> acc;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (m[row][cols[c]].coeffs().empty() && m[row][cols[c]].is_exact()) continue;
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < cols.size(); ++k)
                if (k != c) rest.push_back(cols[k]);
            Series<Frac> sub = m[row][cols[c]] * det(rest, row + 1);
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

Series<Frac> wronskian_poly(const QuasiExponentialFamily& f, unsigned first) {
    if (first < 1 || first > f.N) throw std::invalid_argument("wronskian_poly: bad range");
    unsigned m = f.N - first + 1;
    std::vector<std::vector<Series<Frac>>> mat(m, std::vector<Series<Frac>>(m));
    for (unsigned r = 0; r < m; ++r)
        for (unsigned k = 0; k < m; ++k)
            mat[r][k] = shifted_derivative(f.expo[first - 1 + r], f.p[first - 1 + r], k);
    return series_det(mat);
}

std::vector<Frac> extract_wk(const QuasiExponentialFamily& f) {
    Series<Frac> w = wronskian_poly(f);
    Frac pref(1ll);
    for (unsigned i = 1; i <= f.N; ++i)
        for (unsigned j = i + 1; j <= f.N; ++j) {
            Frac d = f.singular
                         ? Frac(Rat(int(f.lam.comps[j - 1]) - int(f.lam.comps[i - 1]) +
                                    int(i) - int(j)))
                         : f.expo[j - 1] - f.expo[i - 1];
            if (d.is_zero()) throw std::invalid_argument("extract_wk: coincident exponents");
            pref *= d;
        }
    unsigned n = f.lam.n();
    if (w.top_degree() != int(n))
        throw std::logic_error("extract_wk: unexpected Wronskian degree");
    Frac ipref = pref.inverse();
    if (!(w.coeff(int(n)) * ipref == Frac(1ll)))
        throw std::logic_error("extract_wk: Wronskian not monic after prefactor");
    std::vector<Frac> a;
    for (unsigned s = 1; s <= n; ++s) {
        Frac as = w.coeff(int(n - s)) * ipref;
        if (s % 2) as = -as;
        a.push_back(std::move(as));
    }
    return a;
}

std::vector<MPoly> winfty(const Weight& lam) {
    unsigned n = lam.n();
    // prod_i p_i(u) with coefficients collected by u-degree
    std::vector<MPoly> prod{MPoly(1)};  // prod[e] = coeff of u^e
    for (unsigned i = 1; i <= lam.N(); ++i) {
        unsigned li = lam.comps[i - 1];
        std::vector<MPoly> next(prod.size() + li);
        for (std::size_t e = 0; e < prod.size(); ++e)
            for (unsigned j = 0; j <= li; ++j) {
                MPoly c = j == 0 ? MPoly(1) : MPoly::var(sigma_var(i, j));
                next[e + li - j] += prod[e] * c;
            }
        prod = std::move(next);
    }
    std::vector<MPoly> a;
    for (unsigned s = 1; s <= n; ++s) {
        MPoly as = prod[n - s];
        if (s % 2) as = -as;
        a.push_back(std::move(as));
    }
    return a;
}

DiffOp<Frac> fundamental_diffop(const QuasiExponentialFamily& f, int jmax) {
    unsigned N = f.N;
    std::vector<std::vector<Series<Frac>>> mat(N, std::vector<Series<Frac>>(N + 1));
    for (unsigned r = 0; r < N; ++r)
        for (unsigned k = 0; k <= N; ++k)
            mat[r][k] = shifted_derivative(f.expo[r], f.p[r], k);

    Series<Frac> w = wronskian_poly(f);
    int d = w.top_degree();
    Series<Frac> inv = series_inverse(w, jmax + d + int(N) + 2);

    DiffOp<Frac> op;
    for (unsigned k = 0; k <= N; ++k) {
        std::vector<std::vector<Series<Frac>>> minor(N, std::vector<Series<Frac>>(N));
        for (unsigned r = 0; r < N; ++r) {
            unsigned cc = 0;
            for (unsigned c = 0; c <= N; ++c)
                if (c != k) minor[r][cc++] = mat[r][c];
        }
        Series<Frac> ck = series_det(minor);
        Series<Frac> coeff = (inv * ck).truncated(jmax);
        if ((N + k) % 2) coeff = -coeff;
        op.set_coeff(k, std::move(coeff));
    }
    if (!(op.coeff(N) == Series<Frac>(Frac(1ll), jmax)))
        throw std::logic_error("fundamental_diffop: leading coefficient not 1");
    return op;
}

Frac f_coeff(const DiffOp<Frac>& d, unsigned N, unsigned i, int j) {
    return d.coeff(N - i).coeff(-j);
}

Series<Frac> apply_diffop(const DiffOp<Frac>& d, const Frac& expo, const Series<Frac>& q) {
    Series<Frac> acc;
    for (unsigned k = 0; k <= d.order(); ++k)
        acc += d.coeff(k) * shifted_derivative(expo, q, k);
    return acc;
}

bool annihilates_family(const DiffOp<Frac>& d, const QuasiExponentialFamily& f) {
    for (unsigned i = 0; i < f.N; ++i) {
        Series<Frac> r = apply_diffop(d, f.expo[i], f.p[i]);
        if (!(r == Series<Frac>::zero_to(r.valid_order()))) return false;
    }
    return true;
}

bool factorization_holds(const QuasiExponentialFamily& f, int jmax) {
    unsigned N = f.N;
    // y_i'/y_i = E_i + ... + E_N + Y_i'/Y_i with Y_i the polynomial part
    std::vector<Series<Frac>> logd(N);  // y_i'/y_i as a series, i = 1..N
    for (unsigned i = 1; i <= N; ++i) {
        Series<Frac> y = wronskian_poly(f, i);
        int d = y.top_degree();
        Series<Frac> ld = y.derivative() * series_inverse(y, jmax + d + 2);
        for (unsigned m = i; m <= N; ++m) ld.add(0, f.expo[m - 1]);
        logd[i - 1] = ld.truncated(jmax + 1);
    }
    DiffOp<Frac> prod;
    for (unsigned i = 1; i <= N; ++i) {
        DiffOp<Frac> factor = DiffOp<Frac>::d();
        Series<Frac> c0 = -logd[i - 1];
        if (i < N) c0 += logd[i];
        factor.set_coeff(0, c0);
        prod = i == 1 ? factor : prod.compose(factor);
    }
    DiffOp<Frac> direct = fundamental_diffop(f, jmax);
    for (unsigned k = 0; k <= N; ++k)
        if (!(prod.coeff(k).truncated(jmax) == direct.coeff(k).truncated(jmax)))
            return false;
    return true;
}

MPoly eta_substitute(const MPoly& x, const Weight& lam) {
    std::map<Var, MPoly> repl;
    for (unsigned i = 1; i <= lam.N(); ++i) {
        std::vector<Var> gs;
        for (unsigned j = 1; j <= lam.comps[i - 1]; ++j) gs.push_back(gamma_var(i, j));
        for (unsigned s = 1; s <= lam.comps[i - 1]; ++s) {
            MPoly es = elementary_symmetric(s, gs);
            if (s % 2) es = -es;
            repl[sigma_var(i, s)] = std::move(es);
        }
    }
    return x.substitute(repl);
}

CohClass eta_iso(const MPoly& x, const Weight& lam) {
    return class_from_representative(lam, eta_substitute(x, lam));
}

}  // namespace fb
