#include "flagbethe/quotient.hpp"

#include <functional>
#include <stdexcept>

namespace fb {

std::vector<Mono> z_monomials(unsigned n, int k) {
    std::vector<Mono> out;
    Mono cur;
    std::function<void(unsigned, int)> rec = [&](unsigned s, int left) {
        if (s == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (s + 1 == n) {
            Mono m = cur;
            if (left > 0) m.factors.push_back({z_var(s + 1), left});
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            Mono saved = cur;
            if (e > 0) cur.factors.push_back({z_var(s + 1), e});
            rec(s + 1, left - e);
            cur = saved;
        }
    };
    if (k < 0) return out;
    rec(0, k);
    return out;
}

GradedCoords::GradedCoords(Weight lam_, int k_) : lam(std::move(lam_)), k(k_) {
    decomps = enumerate_decompositions(lam);
    monos = z_monomials(lam.n(), k);
    for (std::size_t m = 0; m < monos.size(); ++m) mono_index[monos[m]] = m;
}

RatVec GradedCoords::to_vec(const VElement& x) const {
    RatVec v(dim(), Rat(0));
    std::map<Decomp, std::size_t> dindex;
    for (std::size_t d = 0; d < decomps.size(); ++d) dindex[decomps[d]] = d;
    for (auto& [I, p] : x.coeffs()) {
        auto di = dindex.find(I);
        if (di == dindex.end()) throw std::logic_error("GradedCoords: wrong weight");
        for (auto& [m, c] : p.terms()) {
            auto mi = mono_index.find(m);
            if (mi == mono_index.end()) throw std::logic_error("GradedCoords: wrong degree");
            v[di->second * monos.size() + mi->second] = c;
        }
    }
    return v;
}

VElement GradedCoords::from_vec(const RatVec& v, unsigned N) const {
    VElement x(lam.n(), N);
    for (std::size_t d = 0; d < decomps.size(); ++d) {
        MPoly p;
        for (std::size_t m = 0; m < monos.size(); ++m) {
            const Rat& c = v[d * monos.size() + m];
            if (c != 0) p.add_term(monos[m], c);
        }
        x.add(decomps[d], p);
    }
    return x;
}

QuotientSpace::QuotientSpace(Weight lam, int sign) : lam_(std::move(lam)), sign_(sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("QuotientSpace: sign must be +-1");
}

void QuotientSpace::ensure_degree(int k) {
    for (int d = 0; d <= k; ++d)
        if (!pieces_.count(d)) build_piece(d);
}

QuotientSpace::Piece& QuotientSpace::piece(int k) {
    ensure_degree(k);
    return pieces_.at(k);
}

void QuotientSpace::build_piece(int k) {
    for (int d = 0; d < k; ++d)
        if (!pieces_.count(d)) build_piece(d);

    Piece p;
    p.coords = GradedCoords(lam_, k);
    unsigned n = lam_.n(), N = lam_.N();

    // span of the (anti)invariant subspace at this degree
    Echelon sym;
    for (auto& I : p.coords.decomps) {
        for (auto& m : p.coords.monos) {
            VElement proj =
                project_symmetric(VElement::basis(I, N, MPoly::term(m, 1)), sign_);
            if (proj.is_zero()) continue;
            RatVec v = p.coords.to_vec(proj);
            if (sym.absorb(v)) p.sym_basis.push_back(proj);
        }
    }

    // reducer over [coords | indicators]; J-span rows first
    std::size_t cw = p.coords.dim();
    p.nrep = p.sym_basis.size();
    std::vector<Var> zs;
    for (unsigned s = 1; s <= n; ++s) zs.push_back(z_var(s));
    for (unsigned s = 1; s <= n && int(s) <= k; ++s) {
        MPoly es = elementary_symmetric(s, zs);
        for (auto& b : pieces_.at(k - int(s)).sym_basis) {
            RatVec v = p.coords.to_vec(es * b);
            v.resize(cw + p.nrep, Rat(0));
            p.reducer.absorb(std::move(v));
        }
    }
    // representatives: symmetric basis vectors independent modulo J
    std::size_t rep = 0;
    for (auto& b : p.sym_basis) {
        RatVec v = p.coords.to_vec(b);
        v.resize(cw + p.nrep, Rat(0));
        v[cw + rep] = 1;
        // only accept if the pivot lands in the coordinate part
        RatVec probe = v;
        p.reducer.reduce(probe);
        bool in_coords = false;
        for (std::size_t c = 0; c < cw; ++c)
            if (probe[c] != 0) {
                in_coords = true;
                break;
            }
        if (in_coords) {
            p.reducer.absorb(std::move(v));
            p.quot_basis.push_back(b);
            ++rep;
        }
    }
    pieces_.emplace(k, std::move(p));
}

const std::vector<VElement>& QuotientSpace::sym_basis(int k) { return piece(k).sym_basis; }
const std::vector<VElement>& QuotientSpace::quotient_basis(int k) {
    return piece(k).quot_basis;
}

std::optional<RatVec> QuotientSpace::express(const VElement& x, int k) {
    Piece& p = piece(k);
    RatVec v = p.coords.to_vec(x);
    v.resize(p.coords.dim() + p.nrep, Rat(0));
    p.reducer.reduce(v);
    for (std::size_t c = 0; c < p.coords.dim(); ++c)
        if (v[c] != 0) return std::nullopt;
    RatVec out(p.quot_basis.size(), Rat(0));
    // indicator slot of the r-th representative is the slot it was created with
    std::size_t rep = 0;
    for (std::size_t c = 0; c < out.size(); ++c, ++rep) out[c] = -v[p.coords.dim() + c];
    return out;
}

int QuotientSpace::saturation_degree() {
    if (saturation_) return *saturation_;
    Int want = weight_multiplicity(lam_);
    Int have = 0;
    for (int k = 0;; ++k) {
        if (k > 48) throw std::logic_error("QuotientSpace: quotient does not saturate");
        ensure_degree(k);
        have += Int(quotient_basis(k).size());
        if (have == want) {
            saturation_ = k;
            return k;
        }
        if (have > want) throw std::logic_error("QuotientSpace: dimension overshoot");
    }
}

std::size_t QuotientSpace::dim_through(int k) {
    std::size_t d = 0;
    for (int i = 0; i <= k; ++i) d += quotient_basis(i).size();
    return d;
}

std::optional<RatVec> QuotientSpace::express_full(const VElement& x, int max_degree) {
    int sat = saturation_degree();
    int top = std::max(max_degree, x.degree());
    RatVec out;
    for (int k = 0; k <= std::max(sat, top); ++k) {
        VElement piece_k = x.homogeneous_part(k);
        auto c = express(piece_k, k);
        if (!c) return std::nullopt;
        if (k <= sat)
            out.insert(out.end(), c->begin(), c->end());
        else
            for (auto& ci : *c)
                if (ci != 0) throw std::logic_error("QuotientSpace: class above saturation");
    }
    return out;
}

std::vector<SingularPiece> singular_vectors(
    std::map<Weight, QuotientSpace>& spaces, const Weight& lam) {
    if (!lam.dominant())
        throw std::invalid_argument("singular_vectors: weight must be dominant");
    QuotientSpace& q = spaces.at(lam);
    unsigned N = lam.N();
    int sat = q.saturation_degree();

    std::vector<SingularPiece> out;
    for (int k = 0; k <= sat; ++k) {
        auto& reps = q.quotient_basis(k);
        if (reps.empty()) continue;
        RatMat constraints;  // rows: target coordinates, cols: unknowns over reps
        for (unsigned i = 1; i <= N; ++i) {
            for (unsigned j = i + 1; j <= N; ++j) {
                if (lam.comps[j - 1] == 0) continue;
                Weight mu = lam;
                ++mu.comps[i - 1];
                --mu.comps[j - 1];
                QuotientSpace& qmu = spaces.at(mu);
                std::vector<RatVec> cols;
                std::size_t rows = 0;
                for (auto& b : reps) {
                    auto c = qmu.express(act_generator(i, j, 0, b), k);
                    if (!c) throw std::logic_error("singular_vectors: image not in span");
                    rows = c->size();
                    cols.push_back(std::move(*c));
                }
                for (std::size_t r = 0; r < rows; ++r) {
                    RatVec row(reps.size(), Rat(0));
                    for (std::size_t m = 0; m < reps.size(); ++m) row[m] = cols[m][r];
                    constraints.push_back(std::move(row));
                }
            }
        }
        RatMat ker = kernel_basis(constraints, reps.size());
        if (ker.empty()) continue;
        SingularPiece sp;
        sp.degree = k + q.degree_offset();
        for (auto& x : ker) {
            VElement v(lam.n(), N);
            for (std::size_t m = 0; m < reps.size(); ++m)
                if (x[m] != 0) v += x[m] * reps[m];
            sp.vectors.push_back(std::move(v));
        }
        out.push_back(std::move(sp));
    }
    return out;
}

std::vector<SingularPiece> singular_vectors_of_quotient(const Weight& lam, int sign) {
    std::map<Weight, QuotientSpace> spaces;
    spaces.emplace(lam, QuotientSpace(lam, sign));
    unsigned N = lam.N();
    for (unsigned i = 1; i <= N; ++i)
        for (unsigned j = i + 1; j <= N; ++j) {
            if (lam.comps[j - 1] == 0) continue;
            Weight mu = lam;
            ++mu.comps[i - 1];
            --mu.comps[j - 1];
            spaces.emplace(mu, QuotientSpace(mu, sign));
        }
    return singular_vectors(spaces, lam);
}

}  // namespace fb
