#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace strobs {

// Exact rational scalar. Thin layer over GMP's mpq_class; everything in the
// engine that is not an h-polynomial is one of these. Invariants (positive
// denominator, reduced fraction) are maintained by mpq itself once
// canonicalized.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d) : q_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    // Serialized as "p" or "p/q" with q > 0.
    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

private:
    mpq_class q_;
};

inline Rat rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(mpq_class(f));
}

} // namespace strobs
