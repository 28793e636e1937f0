#pragma once

#include "flagbethe/mpoly.hpp"

#include <map>

namespace fb {

// Total order on polynomials, used only for keying denominator factors.
struct MPolyTotalLess {
    bool operator()(const MPoly& a, const MPoly& b) const {
        auto ia = a.terms().begin(), ib = b.terms().begin();
        MonoGrlexLess mless;
        for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
            if (mless(ia->first, ib->first)) return true;
            if (mless(ib->first, ia->first)) return false;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ia == a.terms().end() && ib != b.terms().end();
    }
};

// Rational function num / prod_k f_k^{e_k}. Factors are kept monic
// (leading grlex coefficient 1) and are not required to be irreducible;
// cancellation is by exact trial division. Equality is tested by
// cross-multiplication, so split and composite factorizations agree.
class Frac {
  public:
    using DenMap = std::map<MPoly, int, MPolyTotalLess>;

    Frac() = default;
    Frac(MPoly num) : num_(std::move(num)) {}
    explicit Frac(Rat c) : num_(MPoly(std::move(c))) {}
    explicit Frac(long long c) : num_(MPoly(c)) {}
    Frac(MPoly num, DenMap den) : num_(std::move(num)), den_(std::move(den)) {
        normalize_factors();
        reduce();
    }

    const MPoly& num() const { return num_; }
    const DenMap& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    MPoly den_poly() const {
        MPoly d(1);
        for (auto& [f, e] : den_) d *= f.pow(unsigned(e));
        return d;
    }

    // Succeeds when the denominator cancels completely.
    std::optional<MPoly> as_polynomial() const {
        if (den_.empty()) return num_;
        return num_.divide_exact(den_poly());
    }

    Frac operator-() const {
        Frac r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Frac operator*(const Frac& a, const Frac& b) {
        if (a.is_zero() || b.is_zero()) return Frac();
        Frac r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (auto& [f, e] : b.den_) r.den_[f] += e;
        r.reduce();
        return r;
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Frac r;
        // common denominator with per-factor max exponents
        r.den_ = a.den_;
        for (auto& [f, e] : b.den_) {
            auto it = r.den_.find(f);
            if (it == r.den_.end())
                r.den_[f] = e;
            else
                it->second = std::max(it->second, e);
        }
        MPoly sa(1), sb(1);
        for (auto& [f, e] : r.den_) {
            int ea = 0, eb = 0;
            if (auto it = a.den_.find(f); it != a.den_.end()) ea = it->second;
            if (auto it = b.den_.find(f); it != b.den_.end()) eb = it->second;
            if (e - ea) sa *= f.pow(unsigned(e - ea));
            if (e - eb) sb *= f.pow(unsigned(e - eb));
        }
        r.num_ = a.num_ * sa + b.num_ * sb;
        r.reduce();
        return r;
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }

    Frac inverse() const {
        if (is_zero()) throw std::domain_error("Frac: inverse of zero");
        Frac r;
        r.num_ = MPoly(1);
        for (auto& [f, e] : den_) r.num_ *= f.pow(unsigned(e));
        r.den_[num_] = 1;
        r.normalize_factors();
        r.reduce();
        return r;
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ * b.den_poly() == b.num_ * a.den_poly();
    }

    Frac evaluate(const std::map<Var, Rat>& vals) const {
        Frac r;
        r.num_ = num_.evaluate(vals);
        for (auto& [f, e] : den_) {
            MPoly fe = f.evaluate(vals);
            if (fe.is_zero()) throw std::domain_error("Frac: denominator vanishes");
            r.den_[fe] += e;
        }
        r.normalize_factors();
        r.reduce();
        return r;
    }

    std::string str() const {
        if (den_.empty()) return num_.str();
        return "(" + num_.str() + ") / (" + den_poly().str() + ")";
    }

  private:
    void normalize_factors() {
        DenMap norm;
        Rat scale = 1;
        for (auto& [f, e] : den_) {
            if (f.is_zero()) throw std::domain_error("Frac: zero denominator factor");
            if (f.is_constant()) {
                Rat c = f.constant_value();
                for (int k = 0; k < e; ++k) scale *= c;
                continue;
            }
            Rat lc = f.leading_coeff();
            MPoly g = f;
            if (lc != 1) {
                g *= Rat(1) / lc;
                for (int k = 0; k < e; ++k) scale *= lc;
            }
            norm[g] += e;
        }
        den_ = std::move(norm);
        if (scale != 1) num_ *= Rat(1) / scale;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                auto q = num_.divide_exact(it->first);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
    }

    MPoly num_;
    DenMap den_;
};

}  // namespace fb
