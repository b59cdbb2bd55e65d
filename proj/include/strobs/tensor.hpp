#pragma once

#include "strobs/basis.hpp"
#include "strobs/hpoly.hpp"
#include "strobs/metric.hpp"
#include "strobs/word.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace strobs {

// Element of the monodromy Lie algebra: exact linear combination of basis
// words (coefficients polynomial in h). Rank-1 words are the momentum
// components P_mu. Keys are always basis words of the registered tables.
class TensorElement {
public:
    TensorElement() : dim_(0) {}
    explicit TensorElement(unsigned dim) : dim_(dim) {}

    static TensorElement generator(unsigned dim, const Word& basis_word, const HPoly& c = HPoly(1));

    unsigned dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, HPoly>& terms() const { return terms_; }

    void add(const Word& basis_word, const HPoly& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { a += b; return a; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { a -= b; return a; }
    friend TensorElement operator*(const HPoly& c, const TensorElement& t);
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    // multiply by h^k
    TensorElement h_shift(unsigned k) const;

    std::string str() const;

private:
    unsigned dim_;
    std::map<Word, HPoly> terms_;
};

// Projection of a raw linear combination of same-rank words onto the basis;
// kills exactly the span of the proper shuffle sums. Mixed ranks are
// rejected.
TensorElement canonicalize(unsigned dim, const std::map<Word, HPoly>& raw, unsigned rank);

// Raw word-level bracket of two basis words of ranks N, M >= 2: integer
// multiples of raw words of rank N+M-2, before reduction.
std::map<Word, int64_t> bracket_words(const Word& a, const Word& b, const Metric& eta);

// The classical Lie bracket: bilinear, zero whenever an argument has rank 1
// (the momenta are central), canonicalized output.
TensorElement classical_bracket(const TensorElement& a, const TensorElement& b, const Metric& eta);

// Formal extension of the component bracket to a rank-1 right factor
// (evaluating the double sum with M = 1). Exists only to exhibit the Jacobi
// failure of this extension; the mirror N = 1 evaluation is antisymmetric to
// it after reduction.
TensorElement naive_rank1_bracket(const TensorElement& a, unsigned nu, const Metric& eta);

// Bracket with the naive rank-1 extension wired in instead of centrality.
TensorElement naive_extension_bracket(const TensorElement& a, const TensorElement& b, const Metric& eta);

// Element of the semidirect extension of the quantized algebra by the
// abelian translations e_mu.
struct CElement {
    unsigned dim = 0;
    std::map<unsigned, HPoly> e_part;
    TensorElement r_part;

    CElement() = default;
    explicit CElement(unsigned d) : dim(d), r_part(d) {}
    static CElement e(unsigned dim, unsigned mu, const HPoly& c = HPoly(1));
    static CElement r(unsigned dim, const Word& basis_word, const HPoly& c = HPoly(1));

    bool is_zero() const { return e_part.empty() && r_part.is_zero(); }
    void add_e(unsigned mu, const HPoly& c);

    CElement& operator+=(const CElement& o);
    CElement& operator-=(const CElement& o);
    friend bool operator==(const CElement& a, const CElement& b) {
        return a.e_part == b.e_part && a.r_part == b.r_part;
    }

    std::string str() const;
};

// The Lie bracket of the extension: [R,R] = h {R,R}, [e,e] = 0, [R,e] = 0
// except in rank 2 where [R_{mu nu}, e_k] = -2h (eta_{nu k} e_mu - eta_{mu k} e_nu).
CElement c_bracket(const CElement& a, const CElement& b, const Metric& eta);

} // namespace strobs
