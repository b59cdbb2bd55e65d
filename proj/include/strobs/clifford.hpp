#pragma once

#include "strobs/metric.hpp"
#include "strobs/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace strobs {

// Basis multivector = subset of {0..D-1} as a bitmask, standing for the
// ascending product of the generators Gamma^mu (upper indices; the defining
// relation contracts with the inverse metric, which for a diagonal eta has
// the same entries).
using Blade = uint16_t;

// product of two basis blades: result blade and the +-1 / eta contraction
// factor, computed by sign-counted transpositions
std::pair<Blade, int> blade_mul(Blade a, Blade b, const Metric& eta);

// Multivector with exact rational coefficients.
class Clifford {
public:
    Clifford() = default;
    static Clifford gamma(unsigned mu) { Clifford c; c.terms_[Blade(1) << mu] = Rat(1); return c; }
    static Clifford one() { Clifford c; c.terms_[0] = Rat(1); return c; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Blade, Rat>& terms() const { return terms_; }
    void add(Blade b, const Rat& c);

    Clifford& operator+=(const Clifford& o);
    Clifford& operator-=(const Clifford& o);
    friend Clifford operator+(Clifford a, const Clifford& b) { a += b; return a; }
    friend Clifford operator-(Clifford a, const Clifford& b) { a -= b; return a; }
    friend bool operator==(const Clifford& a, const Clifford& b) { return a.terms_ == b.terms_; }

    friend Clifford mul(const Clifford& a, const Clifford& b, const Metric& eta);

private:
    std::map<Blade, Rat> terms_;
};

// Element of the tensor square of the Clifford algebra (the two factors
// commute; no graded sign).
class Clifford2 {
public:
    Clifford2() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Blade, Blade>, Rat>& terms() const { return terms_; }
    void add(Blade a, Blade b, const Rat& c);

    static Clifford2 outer(const Clifford& x, const Clifford& y);

    Clifford2& operator+=(const Clifford2& o);
    Clifford2& operator-=(const Clifford2& o);
    friend Clifford2 operator-(Clifford2 a, const Clifford2& b) { a -= b; return a; }
    friend bool operator==(const Clifford2& a, const Clifford2& b) { return a.terms_ == b.terms_; }

    friend Clifford2 mul(const Clifford2& a, const Clifford2& b, const Metric& eta);
    friend Clifford2 commutator(const Clifford2& a, const Clifford2& b, const Metric& eta);

private:
    std::map<std::pair<Blade, Blade>, Rat> terms_;
};

// The tensor-square identity the bracket evaluation rests on: for every mu,
//   [ [G_a,G_b] x [G^a,G^b], G^mu x 1 ] = 8 [ G_a x G^a, 1 x G^mu ].
bool verify_clifford_square_identity(const Metric& eta);

} // namespace strobs
