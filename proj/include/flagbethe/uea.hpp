#pragma once

#include "flagbethe/mpoly.hpp"
#include "flagbethe/tensor.hpp"

#include <compare>
#include <map>
#include <vector>

namespace fb {

// Generator e_{ab} tensor t^r of gl_N[t], 1-based a, b.
struct Gen {
    unsigned a, b, r;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

// Element of U(gl_N[t]): finite sum of ordered generator words with
// polynomial coefficients (in the K variables, or numeric). Words are kept
// exactly as produced — in particular in rdet row order — and are never
// normal-ordered.
class UEA {
  public:
    using Word = std::vector<Gen>;

    UEA() = default;
    explicit UEA(MPoly scalar) {
        if (!scalar.is_zero()) terms_[{}] = std::move(scalar);
    }
    explicit UEA(long long c) : UEA(MPoly(c)) {}

    static UEA generator(unsigned a, unsigned b, unsigned r) {
        UEA e;
        e.terms_[{Gen{a, b, r}}] = MPoly(1);
        return e;
    }

    const std::map<Word, MPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const MPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend UEA operator+(UEA a, const UEA& b) {
        for (auto& [w, c] : b.terms_) a.add_term(w, c);
        return a;
    }
    friend UEA operator-(UEA a, const UEA& b) {
        for (auto& [w, c] : b.terms_) a.add_term(w, -c);
        return a;
    }
    UEA operator-() const {
        UEA r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    friend UEA operator*(const UEA& a, const UEA& b) {
        UEA r;
        for (auto& [wa, ca] : a.terms_)
            for (auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }
    friend UEA operator*(UEA a, const MPoly& c) {
        for (auto& [w, p] : a.terms_) p *= c;
        if (c.is_zero()) a.terms_.clear();
        return a;
    }
    friend UEA operator*(UEA a, const Rat& c) { return std::move(a) * MPoly(c); }
    UEA& operator+=(const UEA& o) { return *this = *this + o; }
    UEA& operator*=(const UEA& o) { return *this = *this * o; }

    friend bool operator==(const UEA&, const UEA&) = default;

    UEA substitute_k(const std::vector<Rat>& kvals) const;

    std::string str() const;

  private:
    std::map<Word, MPoly> terms_;
};

// Applies E to x: each word acts right-to-left through act_generator,
// word coefficients multiply in (K-variable coefficients stay symbolic
// unless already substituted).
VElement apply_uea(const UEA& e, const VElement& x);
FracVElement apply_uea(const UEA& e, const FracVElement& x);

}  // namespace fb
