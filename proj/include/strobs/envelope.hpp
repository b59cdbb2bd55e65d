#pragma once

#include "strobs/hpoly.hpp"
#include "strobs/metric.hpp"
#include "strobs/poisson.hpp"
#include "strobs/symbols.hpp"
#include "strobs/tensor.hpp"

#include <map>

namespace strobs {

// Which adjacent inversion the rewriting attacks first. Normal forms agree
// for both; the unit tests assert this confluence.
enum class SwapSchedule { Leftmost, Rightmost };

// Element of the universal enveloping algebras U(R-hat) / U(C): sparse sum
// of PBW-ordered monomials with h-polynomial coefficients.
class NCPoly {
public:
    NCPoly() : dim_(0) {}
    explicit NCPoly(unsigned dim) : dim_(dim) {}

    static NCPoly scalar(unsigned dim, const HPoly& c);
    static NCPoly generator(unsigned dim, const Sym& s, const HPoly& c = HPoly(1));

    unsigned dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, HPoly>& terms() const { return terms_; }

    // Add a PBW-ordered monomial (must be sorted).
    void add_normal(Mono m, const HPoly& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { a -= b; return a; }
    friend NCPoly operator*(const HPoly& c, const NCPoly& p);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    bool e_free() const;
    int max_degree() const; // -2 when zero
    std::string str() const;

private:
    unsigned dim_;
    std::map<Mono, HPoly> terms_;
};

// Rewrite a raw product of generators onto the PBW basis by adjacent swaps
// x y = y x + [x, y]; terminates because every commutator strictly lowers
// the total rank.
NCPoly pbw_normal_form(unsigned dim, const Mono& raw, const HPoly& coeff, const Metric& eta,
                       SwapSchedule schedule = SwapSchedule::Leftmost);

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const Metric& eta);
NCPoly nc_commutator(const NCPoly& a, const NCPoly& b, const Metric& eta);

// View a Lie algebra element as a degree-one enveloping element.
NCPoly tensor_to_nc(const TensorElement& t);

// The quantized derivation: on generators
//   R_mu -> 0,
//   R_w  -> (1/2)[e_{w_1}, R_{w_2..w_N}]_+ - (1/2)[e_{w_N}, R_{w_1..w_{N-1}}]_+,
// extended by the Leibniz rule; e-bearing input is rejected.
NCPoly delta_derivation(const NCPoly& a, const Metric& eta);

// Quadratic quantum invariant of a word of rank >= 3: the cyclically
// symmetrized sum over the two-block splittings.
NCPoly quantum_z2(unsigned dim, const Word& w, const Metric& eta);

// Linear quantum invariant: the plain cyclic sum of the word.
NCPoly quantum_z1(unsigned dim, const Word& w);

// Projection onto the degree-l slice, mapping ordered monomials to
// commutative ones with coefficients (h powers included) unchanged.
// A term of degree above l makes the input ineligible.
CommPoly project_pi(const NCPoly& a, int l);

} // namespace strobs
