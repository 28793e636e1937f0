#pragma once

#include "flagbethe/rat.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fb {

// Laurent polynomial in q with integer coefficients; dense enough at desk
// scale that a sparse map is plenty.
class QLaurent {
  public:
    QLaurent() = default;
    explicit QLaurent(Int c) {
        if (c != 0) coeffs_[0] = std::move(c);
    }
    static QLaurent monomial(int e, Int c = 1) {
        QLaurent p;
        if (c != 0) p.coeffs_[e] = std::move(c);
        return p;
    }
    // 1 - q^j
    static QLaurent one_minus_q(int j) {
        QLaurent p(1);
        p.coeffs_[j] = -1;
        return p;
    }
    // (q)_a = prod_{j=1}^a (1 - q^j)
    static QLaurent q_pochhammer(unsigned a) {
        QLaurent p(1);
        for (unsigned j = 1; j <= a; ++j) p = p * one_minus_q(int(j));
        return p;
    }

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Int coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    friend QLaurent operator+(QLaurent a, const QLaurent& b) {
        for (auto& [e, c] : b.coeffs_) a.add(e, c);
        return a;
    }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) {
        for (auto& [e, c] : b.coeffs_) a.add(e, -c);
        return a;
    }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (auto& [ea, ca] : a.coeffs_)
            for (auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
        return r;
    }
    QLaurent shifted(int e) const {
        QLaurent r;
        for (auto& [k, c] : coeffs_) r.coeffs_[k + e] = c;
        return r;
    }
    // exact division; throws when not divisible
    QLaurent divided_by(const QLaurent& d) const {
        if (d.is_zero()) throw std::invalid_argument("QLaurent: division by zero");
        QLaurent rem = *this, quot;
        int dtop = d.coeffs_.rbegin()->first;
        Int dlc = d.coeffs_.rbegin()->second;
        while (!rem.is_zero()) {
            int rtop = rem.coeffs_.rbegin()->first;
            Int rlc = rem.coeffs_.rbegin()->second;
            if (rlc % dlc != 0) throw std::domain_error("QLaurent: not divisible");
            QLaurent t = monomial(rtop - dtop, rlc / dlc);
            quot = quot + t;
            rem = rem - t * d;
        }
        return quot;
    }

    friend bool operator==(const QLaurent&, const QLaurent&) = default;

    void add(int e, const Int& c) {
        if (c == 0) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (e == 0) {
                os << c.str();
            } else {
                if (c != 1) os << c.str() << "*";
                os << "q^" << e;
            }
        }
        return os.str();
    }

  private:
    std::map<int, Int> coeffs_;
};

}  // namespace fb
