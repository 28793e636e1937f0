#include "flagbethe/bethe.hpp"

#include <sstream>
#include <stdexcept>

namespace fb {

UEA UEA::substitute_k(const std::vector<Rat>& kvals) const {
    std::map<Var, Rat> vals;
    for (std::size_t i = 0; i < kvals.size(); ++i) vals[k_var(unsigned(i + 1))] = kvals[i];
    UEA r;
    for (auto& [w, c] : terms_) r.add_term(w, c.evaluate(vals));
    return r;
}

std::string UEA::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (auto& g : w) os << "*e[" << g.a << "," << g.b << ";t^" << g.r << "]";
    }
    return os.str();
}

VElement apply_uea(const UEA& e, const VElement& x) {
    VElement out(x.n(), x.N());
    for (auto& [w, c] : e.terms()) {
        VElement y = x;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            y = act_generator(it->a, it->b, it->r, y);
        out += c * y;
    }
    return out;
}

FracVElement apply_uea(const UEA& e, const FracVElement& x) {
    return FracVElement(apply_uea(e, x.num));
}

BetheFamily expand_universal_operator(unsigned N, int jmax) {
    if (N < 1 || jmax < 0)
        throw std::invalid_argument("expand_universal_operator: bad parameters");
    int internal = jmax + int(N);

    std::vector<std::vector<DiffOp<UEA>>> m(N, std::vector<DiffOp<UEA>>(N));
    for (unsigned i = 1; i <= N; ++i) {
        for (unsigned j = 1; j <= N; ++j) {
            // -e_{ji}(u) = -sum_s (e_{ji} t^s) u^{-s-1}
            Series<UEA> entry = Series<UEA>::zero_to(internal);
            for (int s = 0; s + 1 <= internal; ++s)
                entry.set(-s - 1, -UEA::generator(j, i, unsigned(s)));
            DiffOp<UEA> op = DiffOp<UEA>::mult(entry);
            if (i == j) {
                op.set_coeff(1, Series<UEA>(UEA(1)));
                Series<UEA> c0 = op.coeff(0);
                c0.add(0, -UEA(MPoly::var(k_var(i))));
                op.set_coeff(0, c0);
            }
            m[i - 1][j - 1] = op;
        }
    }

    DiffOp<UEA> d = rdet(m);
    if (!(d.coeff(N) == Series<UEA>(UEA(1))))
        throw std::logic_error("expand_universal_operator: leading coefficient not 1");

    BetheFamily f;
    f.N = N;
    f.jmax = jmax;
    for (unsigned i = 1; i <= N; ++i) {
        const Series<UEA>& bi = d.coeff(N - i);
        if (bi.valid_order() < jmax)
            throw std::logic_error("expand_universal_operator: truncation shortfall");
        for (int j = 0; j <= jmax; ++j) f.b[{i, j}] = bi.coeff(-j);
    }
    return f;
}

std::vector<UEA> binfty_generators(unsigned N, int jmax) {
    std::vector<UEA> out;
    for (unsigned i = 1; i <= N; ++i)
        for (int j = 0; j <= jmax; ++j) out.push_back(UEA::generator(i, i, unsigned(j)));
    return out;
}

std::vector<Rat> zone_k_values(unsigned N, const Rat& c, const std::vector<unsigned>& sigma) {
    std::vector<unsigned> s = sigma;
    if (s.empty())
        for (unsigned i = 1; i <= N; ++i) s.push_back(i);
    if (s.size() != N) throw std::invalid_argument("zone_k_values: bad permutation");
    std::vector<Rat> k(N);
    for (unsigned pos = 0; pos < N; ++pos) {
        Rat v = 1;
        for (unsigned e = 0; e < N - pos; ++e) v *= c;
        k[s[pos] - 1] = v;  // K_{sigma(pos+1)} = c^{N-pos}
    }
    return k;
}

}  // namespace fb
