#include "flagbethe/mpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fb {

std::string Var::name() const {
    std::ostringstream os;
    switch (kind()) {
        case VarKind::Z: os << "z" << i(); break;
        case VarKind::Gamma: os << "g" << i() << "." << j(); break;
        case VarKind::Sigma: os << "S" << i() << "." << j(); break;
        case VarKind::K: os << "K" << i(); break;
    }
    return os.str();
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first < b->first) {
            r.factors.push_back(*a++);
        } else if (b->first < a->first) {
            r.factors.push_back(*b++);
        } else {
            r.factors.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    r.factors.insert(r.factors.end(), b, o.factors.end());
    return r;
}

std::optional<Mono> Mono::divide(const Mono& o) const {
    Mono r;
    auto a = factors.begin();
    for (auto& [v, e] : o.factors) {
        while (a != factors.end() && a->first < v) r.factors.push_back(*a++);
        if (a == factors.end() || a->first != v || a->second < e) return std::nullopt;
        if (a->second > e) r.factors.push_back({v, a->second - e});
        ++a;
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(1);
    MPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& o) const {
    if (o.is_zero()) throw std::invalid_argument("MPoly: division by zero");
    MPoly rem = *this, quot;
    const Mono& lm = o.leading_mono();
    const Rat& lc = o.leading_coeff();
    while (!rem.is_zero()) {
        auto q = rem.leading_mono().divide(lm);
        if (!q) return std::nullopt;
        Rat c = rem.leading_coeff() / lc;
        MPoly t = MPoly::term(*q, c);
        quot += t;
        rem -= t * o;
    }
    return quot;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& repl) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        MPoly t(c);
        Mono untouched;
        for (auto& [v, e] : m.factors) {
            auto it = repl.find(v);
            if (it == repl.end()) {
                untouched.factors.push_back({v, e});
            } else {
                t *= it->second.pow(unsigned(e));
            }
        }
        r += t * MPoly::term(untouched, 1);
    }
    return r;
}

MPoly MPoly::evaluate(const std::map<Var, Rat>& vals) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        Rat coeff = c;
        Mono untouched;
        for (auto& [v, e] : m.factors) {
            auto it = vals.find(v);
            if (it == vals.end()) {
                untouched.factors.push_back({v, e});
            } else {
                Rat p = 1;
                for (int k = 0; k < e; ++k) p *= it->second;
                coeff *= p;
            }
        }
        r.add_term(untouched, coeff);
    }
    return r;
}

MPoly MPoly::z_homogeneous_part(int k) const {
    MPoly r;
    for (auto& [m, c] : terms_)
        if (m.degree_in(VarKind::Z) == k) r.add_term(m, c);
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        if (!first) os << (c >= 0 ? " + " : " - ");
        Rat ac = first && c < 0 ? c : abs(c);
        first = false;
        if (it->first.empty()) {
            os << ac.str();
            continue;
        }
        bool printed = false;
        if (ac != 1) {
            os << ac.str();
            printed = true;
        }
        for (auto& [v, e] : it->first.factors) {
            if (printed) os << "*";
            os << v.name();
            if (e != 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

MPoly elementary_symmetric(unsigned s, const std::vector<Var>& vars) {
    if (s < 1 || s > vars.size())
        throw std::invalid_argument("elementary_symmetric: index out of range");
    // e_s via the Newton-free column recursion: e[k] over a growing var set
    std::vector<MPoly> e(s + 1);
    e[0] = MPoly(1);
    for (Var v : vars) {
        MPoly x = MPoly::var(v);
        for (unsigned k = std::min<std::size_t>(s, vars.size()); k >= 1; --k)
            e[k] += e[k - 1] * x;
    }
    return e[s];
}

MPoly complete_homogeneous(unsigned m, const std::vector<Var>& vars) {
    if (m == 0) return MPoly(1);
    // h over a growing variable set: h_new(k) = sum_j x^j h_old(k-j)
    std::vector<MPoly> h(m + 1);
    h[0] = MPoly(1);
    for (Var v : vars) {
        MPoly x = MPoly::var(v);
        for (unsigned k = 1; k <= m; ++k) h[k] += x * h[k - 1];
    }
    return h[m];
}

MPoly power_sum(unsigned r, const std::vector<Var>& vars) {
    MPoly p;
    for (Var v : vars) p += MPoly::var(v, int(r));
    return p;
}

MPoly vandermonde(const std::vector<Var>& vars) {
    MPoly r(1);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            r *= MPoly::var(vars[j]) - MPoly::var(vars[i]);
    return r;
}

MPoly block_resultant(const std::vector<std::vector<unsigned>>& blocks) {
    std::set<unsigned> seen;
    for (auto& b : blocks)
        for (unsigned s : b)
            if (!seen.insert(s).second)
                throw std::invalid_argument("block_resultant: overlapping blocks");
    MPoly r(1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            for (unsigned a : blocks[i])
                for (unsigned b : blocks[j])
                    r *= MPoly::var(z_var(b)) - MPoly::var(z_var(a));
    return r;
}

}  // namespace fb
