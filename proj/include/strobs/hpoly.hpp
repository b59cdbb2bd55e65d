#pragma once

#include "strobs/rational.hpp"

#include <string>
#include <vector>

namespace strobs {

// Polynomial in the formal quantization symbol h (standing for i*hbar) with
// exact rational coefficients, coefficient k belonging to h^k. h is central,
// carries weight 2 and degree 0, and is never evaluated numerically.
// Invariant: no trailing zero coefficient.
class HPoly {
public:
    HPoly() = default;
    HPoly(const Rat& c) { if (!c.is_zero()) coeffs_.push_back(c); }
    HPoly(long n) : HPoly(Rat(n)) {}

    static HPoly h_power(unsigned k, const Rat& c = Rat(1)) {
        HPoly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(k + 1, Rat(0));
            p.coeffs_[k] = c;
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree in h; -1 for the zero polynomial.
    int h_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    HPoly& operator+=(const HPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    HPoly& operator-=(const HPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    friend HPoly operator+(HPoly a, const HPoly& b) { a += b; return a; }
    friend HPoly operator-(HPoly a, const HPoly& b) { a -= b; return a; }

    friend HPoly operator*(const HPoly& a, const HPoly& b) {
        HPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }

    friend HPoly operator*(const Rat& c, const HPoly& p) {
        HPoly r;
        if (c.is_zero()) return r;
        r.coeffs_ = p.coeffs_;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    friend HPoly operator-(const HPoly& p) { return Rat(-1) * p; }

    // Multiply by h^k.
    HPoly shift(unsigned k) const {
        HPoly r;
        if (is_zero()) return r;
        r.coeffs_.assign(coeffs_.size() + k, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[k + i] = coeffs_[i];
        return r;
    }

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += coeffs_[k].str();
            if (k == 1) s += "*h";
            else if (k > 1) s += "*h^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

} // namespace strobs
