#pragma once

#include "flagbethe/frac.hpp"
#include "flagbethe/rat.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace fb {

// Truncated Laurent-type series in u: an exact polynomial part (positive
// powers) plus a power series in u^{-1} known up to a validity order.
//
// valid_order() = V means every stored coefficient of u^m with m >= -V is
// exact and the error is O(u^{-V-1}). Exact polynomials have V = kExact.
// Arithmetic propagates V pessimistically, so reading a coefficient within
// the valid range is always trustworthy; reading past it throws.
//
// The coefficient ring R must provide +, -, *, ==, is_zero(), and
// default-construct to zero. It may be noncommutative (multiplication
// order is preserved everywhere).
inline constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

template <class R>
class Series {
  public:
    Series() : valid_(kExactOrder) {}
    explicit Series(R constant, int valid = kExactOrder) : valid_(valid) {
        set(0, std::move(constant));
    }

    static Series zero_to(int valid) {
        Series s;
        s.valid_ = valid;
        return s;
    }
    static Series monomial(int exp, R coeff, int valid = kExactOrder) {
        Series s;
        s.valid_ = valid;
        s.set(exp, std::move(coeff));
        return s;
    }

    int valid_order() const { return valid_; }
    bool is_exact() const { return valid_ == kExactOrder; }
    const std::map<int, R>& coeffs() const { return coeffs_; }

    bool is_zero_to_valid() const { return coeffs_.empty(); }

    // coefficient of u^exp; exp must be within the valid range
    R coeff(int exp) const {
        if (exp < -valid_)
            throw std::logic_error("Series: coefficient beyond truncation order");
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? R{} : it->second;
    }

    int top_degree() const {  // largest exponent with a nonzero coefficient
        return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
    }
    int max_positive_degree() const {
        int d = 0;
        if (!coeffs_.empty()) d = std::max(0, coeffs_.rbegin()->first);
        return d;
    }

    void set(int exp, R c) {
        if (exp < -valid_) return;
        if (c == R{})
            coeffs_.erase(exp);
        else
            coeffs_[exp] = std::move(c);
    }
    void add(int exp, const R& c) {
        if (exp < -valid_) return;
        auto it = coeffs_.find(exp);
        if (it == coeffs_.end()) {
            if (!(c == R{})) coeffs_[exp] = c;
        } else {
            it->second = it->second + c;
            if (it->second == R{}) coeffs_.erase(it);
        }
    }

    Series truncated(int new_valid) const {
        Series r;
        r.valid_ = std::min(valid_, new_valid);
        for (auto& [e, c] : coeffs_)
            if (e >= -r.valid_) r.coeffs_[e] = c;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r = a.truncated(std::min(a.valid_, b.valid_));
        for (auto& [e, c] : b.coeffs_) r.add(e, c);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    Series operator-() const {
        Series r = *this;
        for (auto& [e, c] : r.coeffs_) c = R{} - c;
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        Series r;
        if (a.is_exact() && b.is_exact()) {
            r.valid_ = kExactOrder;
        } else {
            long va = long(a.valid_) - b.max_positive_degree();
            long vb = long(b.valid_) - a.max_positive_degree();
            r.valid_ = int(std::min({va, vb, long(kExactOrder)}));
        }
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }

    Series scaled(const R& c) const {  // left multiplication by c
        Series r;
        r.valid_ = valid_;
        for (auto& [e, v] : coeffs_) r.add(e, c * v);
        return r;
    }

    // d/du, acting on the u-dependence only
    Series derivative() const {
        Series r;
        r.valid_ = is_exact() ? kExactOrder : valid_ + 1;
        for (auto& [e, c] : coeffs_) {
            if (e == 0) continue;
            r.add(e - 1, mul_int(c, e));
        }
        return r;
    }

    // multiplication by u^k
    Series shifted(int k) const {
        Series r;
        r.valid_ = is_exact() ? kExactOrder : valid_ - k;
        for (auto& [e, c] : coeffs_) {
            if (e + k < -r.valid_) continue;
            r.coeffs_[e + k] = c;
        }
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        int v = std::min(a.valid_, b.valid_);
        auto cmp = [v](const std::map<int, R>& x, const std::map<int, R>& y) {
            for (auto& [e, c] : x) {
                if (e < -v) continue;
                auto it = y.find(e);
                if (it == y.end()) return c == R{};
                if (!(it->second == c)) return false;
            }
            return true;
        };
        return cmp(a.coeffs_, b.coeffs_) && cmp(b.coeffs_, a.coeffs_);
    }

  private:
    static R mul_int(const R& c, int k) {
        // integer scaling through repeated addition of the ring element is
        // wasteful; rings used here all support * with an embedded integer
        if constexpr (requires(R r, Rat q) { r* q; }) {
            return c * Rat(k);
        } else {
            return c * R(MPoly(Rat(k)));
        }
    }

    std::map<int, R> coeffs_;
    int valid_;
};

// 1/s for series over a field-like ring (used with R = Frac). The input
// must be nonzero at its top degree.
inline Series<Frac> series_inverse(const Series<Frac>& s, int want_valid) {
    if (s.coeffs().empty()) throw std::domain_error("series_inverse: zero series");
    int d = s.top_degree();
    Frac c0 = s.coeff(d);
    Frac ic0 = c0.inverse();
    int v = std::min(want_valid, s.valid_order());
    // t = u^d / s, a pure power series in u^{-1}
    std::vector<Frac> t(std::size_t(v) + 1);
    t[0] = ic0;
    for (int k = 1; k <= v; ++k) {
        Frac acc;
        for (int j = 1; j <= k; ++j) {
            Frac sj = s.coeff(d - j);
            if (sj.is_zero()) continue;
            acc += sj * t[std::size_t(k - j)];
        }
        t[std::size_t(k)] = -(ic0 * acc);
    }
    Series<Frac> r = Series<Frac>::zero_to(v + d);
    for (int k = 0; k <= v; ++k) r.set(-k - d, t[std::size_t(k)]);
    return r.truncated(v + d);
}

// Differential operator sum_k a_k(u) d^k with series coefficients.
// Composition uses d∘f = f∘d + f'.
template <class R>
class DiffOp {
  public:
    DiffOp() = default;
    explicit DiffOp(std::vector<Series<R>> coeffs) : coeffs_(std::move(coeffs)) {}

    static DiffOp d(unsigned k = 1) {
        DiffOp op;
        op.coeffs_.resize(k + 1, Series<R>());
        op.coeffs_[k] = Series<R>(ring_one());
        return op;
    }
    static DiffOp mult(Series<R> f) {
        DiffOp op;
        op.coeffs_.push_back(std::move(f));
        return op;
    }

    unsigned order() const { return coeffs_.empty() ? 0 : unsigned(coeffs_.size() - 1); }
    const Series<R>& coeff(unsigned k) const {
        static const Series<R> zero;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    void set_coeff(unsigned k, Series<R> s) {
        if (coeffs_.size() <= k) coeffs_.resize(k + 1);
        coeffs_[k] = std::move(s);
    }

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
        DiffOp r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
            r.coeffs_[k] = a.coeff(unsigned(k)) + b.coeff(unsigned(k));
        return r;
    }
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b) {
        DiffOp r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
            r.coeffs_[k] = a.coeff(unsigned(k)) - b.coeff(unsigned(k));
        return r;
    }

    // this ∘ o, coefficients multiplied left (this) to right (o)
    DiffOp compose(const DiffOp& o) const {
        DiffOp r;
        r.coeffs_.resize(coeffs_.size() + o.coeffs_.size(), Series<R>());
        for (unsigned k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].coeffs().empty() && coeffs_[k].is_exact()) continue;
            for (unsigned m = 0; m < o.coeffs_.size(); ++m) {
                Series<R> b = o.coeffs_[m];
                for (unsigned i = 0; i <= k; ++i) {
                    // a_k * C(k,i) * b^{(i)} d^{k-i+m}
                    Series<R> term = coeffs_[k] * b;
                    Rat binom = Rat(binomial(k, i));
                    if (binom != 1) term = scale_series(term, binom);
                    r.coeffs_[k - i + m] += term;
                    if (i < k) b = b.derivative();
                }
            }
        }
        while (r.coeffs_.size() > 1 && r.coeffs_.back().coeffs().empty() &&
               r.coeffs_.back().is_exact())
            r.coeffs_.pop_back();
        return r;
    }

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        std::size_t m = std::max(a.coeffs_.size(), b.coeffs_.size());
        for (std::size_t k = 0; k < m; ++k)
            if (!(a.coeff(unsigned(k)) == b.coeff(unsigned(k)))) return false;
        return true;
    }

  private:
    static R ring_one() {
        if constexpr (std::is_constructible_v<R, long long>) {
            return R(1ll);
        } else {
            return R(MPoly(1));
        }
    }
    static Series<R> scale_series(const Series<R>& s, const Rat& q) {
        Series<R> r = Series<R>::zero_to(s.valid_order());
        for (auto& [e, c] : s.coeffs()) {
            if constexpr (requires(R x, Rat y) { x* y; }) {
                r.set(e, c * q);
            } else {
                r.set(e, c * R(MPoly(q)));
            }
        }
        return r;
    }

    std::vector<Series<R>> coeffs_;
};

// Row determinant: sum over permutations of signed row-ordered products.
template <class R>
DiffOp<R> rdet(const std::vector<std::vector<DiffOp<R>>>& m) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("rdet: matrix not square");
    std::vector<unsigned> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = unsigned(i);
    DiffOp<R> result;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        DiffOp<R> prod = m[0][perm[0]];
        for (std::size_t i = 1; i < n; ++i) prod = prod.compose(m[i][perm[i]]);
        if (sign > 0)
            result = result + prod;
        else
            result = result - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

}  // namespace fb
