#pragma once

#include "strobs/hpoly.hpp"
#include "strobs/metric.hpp"
#include "strobs/symbols.hpp"
#include "strobs/tensor.hpp"

#include <map>

namespace strobs {

// Element of the commutative algebras S(R) / S(R^D + R): sparse sum of
// sorted symbol multisets with h-polynomial coefficients.
class CommPoly {
public:
    CommPoly() : dim_(0) {}
    explicit CommPoly(unsigned dim) : dim_(dim) {}

    static CommPoly scalar(unsigned dim, const HPoly& c);
    static CommPoly generator(unsigned dim, const Sym& s, const HPoly& c = HPoly(1));

    unsigned dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, HPoly>& terms() const { return terms_; }

    void add(Mono m, const HPoly& c); // m need not be sorted

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { a += b; return a; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { a -= b; return a; }
    friend CommPoly operator*(const HPoly& c, const CommPoly& p);
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }

    bool e_free() const;
    std::string str() const;

private:
    unsigned dim_;
    std::map<Mono, HPoly> terms_;
};

// View a Lie algebra element as a degree-one polynomial.
CommPoly tensor_to_comm(const TensorElement& t);

// Leibniz extension of the monodromy bracket to S(R); rejects e-symbols.
CommPoly poisson_bracket(const CommPoly& a, const CommPoly& b, const Metric& eta);

// The reparametrization derivation on generators, extended by Leibniz:
// R_w -> e_{w_1} R_{w_2..w_N} - e_{w_N} R_{w_1..w_{N-1}}, momenta -> 0.
CommPoly partial_derivation(const CommPoly& a);

// Cyclically symmetrized K-block invariant of a word and the full invariant
// (sum over K).
CommPoly classical_invariant_part(unsigned dim, const Word& w, unsigned K);
CommPoly classical_invariant(unsigned dim, const Word& w);

} // namespace strobs
