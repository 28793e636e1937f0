#include "flagbethe/linalg.hpp"

#include <stdexcept>

namespace fb {

RatVec Echelon::reduce(RatVec& v) const {
    RatVec used(rows.size(), Rat(0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t p = pivots[r];
        if (p >= v.size() || v[p] == 0) continue;
        Rat c = v[p];
        used[r] = c;
        for (std::size_t k = p; k < v.size(); ++k)
            if (rows[r][k] != 0) v[k] -= c * rows[r][k];
    }
    return used;
}

bool Echelon::absorb(RatVec v) {
    reduce(v);
    std::size_t p = v.size();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) {
            p = k;
            break;
        }
    if (p == v.size()) return false;
    Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    // back-substitute into existing rows to keep fully reduced form
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Rat c = rows[r][p];
        if (c == 0) continue;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) rows[r][k] -= c * v[k];
    }
    // keep rows sorted by pivot column
    std::size_t pos = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (pivots[r] > p) {
            pos = r;
            break;
        }
    rows.insert(rows.begin() + long(pos), std::move(v));
    pivots.insert(pivots.begin() + long(pos), p);
    return true;
}

Echelon echelon_form(const RatMat& m) {
    Echelon e;
    for (auto& row : m) e.absorb(row);
    return e;
}

std::size_t rank(const RatMat& m) { return echelon_form(m).rank(); }

RatMat kernel_basis(const RatMat& m, std::size_t ncols) {
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    RatMat basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(ncols, Rat(0));
        x[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
    std::size_t ncols = a.empty() ? 0 : a[0].size();
    // augmented elimination
    Echelon e;
    RatMat aug;
    for (std::size_t r = 0; r < a.size(); ++r) {
        RatVec row = a[r];
        row.push_back(b[r]);
        aug.push_back(std::move(row));
    }
    e = echelon_form(aug);
    RatVec x(ncols, Rat(0));
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivots[r] == ncols) return std::nullopt;  // inconsistent
        x[e.pivots[r]] = e.rows[r][ncols];
    }
    return x;
}

}  // namespace fb
