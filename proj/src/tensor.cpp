#include "strobs/tensor.hpp"

#include <stdexcept>

namespace strobs {

namespace {

// shuffle allowing empty factors
WordCount shuffle0(const Word& u, const Word& v) {
    WordCount out;
    if (u.empty() && v.empty()) out[Word()] = 1;
    else if (u.empty()) out[v] = 1;
    else if (v.empty()) out[u] = 1;
    else return shuffle(u, v);
    return out;
}

} // namespace

TensorElement TensorElement::generator(unsigned dim, const Word& basis_word, const HPoly& c) {
    TensorElement t(dim);
    t.add(basis_word, c);
    return t;
}

void TensorElement::add(const Word& w, const HPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TensorElement operator*(const HPoly& c, const TensorElement& t) {
    TensorElement r(t.dim_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : t.terms_) r.add(w, c * x);
    return r;
}

TensorElement TensorElement::h_shift(unsigned k) const {
    TensorElement r(dim_);
    for (const auto& [w, c] : terms_) r.add(w, c.shift(k));
    return r;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*R_" + w.str();
    }
    return s;
}

TensorElement canonicalize(unsigned dim, const std::map<Word, HPoly>& raw, unsigned rank) {
    TensorElement out(dim);
    if (raw.empty()) return out;
    for (const auto& [w, c] : raw) {
        if (w.rank() != rank) throw std::invalid_argument("canonicalize: mixed ranks in input");
        if (c.is_zero()) continue;
        for (const auto& [b, r] : basis_block(w.multiset_key()).reduce(w)) out.add(b, r * c);
    }
    return out;
}

std::map<Word, int64_t> bracket_words(const Word& a, const Word& b, const Metric& eta) {
    const unsigned N = a.rank(), M = b.rank();
    if (N < 2 || M < 2) throw std::invalid_argument("bracket_words: ranks must be >= 2");
    std::map<Word, int64_t> raw;
    for (unsigned n = 1; n <= N; ++n) {
        for (unsigned m = 1; m <= M; ++m) {
            const int e = eta.eta(a.letter(n - 1), b.letter(m - 1));
            if (e == 0) continue;
            const int sign = ((N - n + m) % 2 == 0) ? 1 : -1;
            const int64_t scale = 2LL * sign * e;
            // left block: prefix of a against the reversed suffix of a
            const WordCount left = shuffle0(a.prefix(n - 1), a.suffix_from(n).reversed());
            // right block: reversed prefix of b against the suffix of b
            const WordCount right = shuffle0(b.prefix(m - 1).reversed(), b.suffix_from(m));
            for (const auto& [w1, c1] : left)
                for (const auto& [w2, c2] : right) raw[concat(w1, w2)] += scale * c1 * c2;
        }
    }
    return raw;
}

namespace {

// Eq. bracket evaluated formally with a rank-1 right factor: the inner block
// of the second word is empty.
std::map<Word, int64_t> bracket_words_m1(const Word& a, unsigned nu, const Metric& eta) {
    const unsigned N = a.rank();
    std::map<Word, int64_t> raw;
    for (unsigned n = 1; n <= N; ++n) {
        const int e = eta.eta(a.letter(n - 1), nu);
        if (e == 0) continue;
        const int sign = ((N - n + 1) % 2 == 0) ? 1 : -1;
        const int64_t scale = 2LL * sign * e;
        for (const auto& [w1, c1] : shuffle0(a.prefix(n - 1), a.suffix_from(n).reversed()))
            raw[w1] += scale * c1;
    }
    return raw;
}

// ... and the mirror with a rank-1 left factor (N = 1).
std::map<Word, int64_t> bracket_words_n1(unsigned mu, const Word& b, const Metric& eta) {
    const unsigned M = b.rank();
    std::map<Word, int64_t> raw;
    for (unsigned m = 1; m <= M; ++m) {
        const int e = eta.eta(mu, b.letter(m - 1));
        if (e == 0) continue;
        const int sign = (m % 2 == 0) ? 1 : -1; // (-1)^{1-1+m}
        const int64_t scale = 2LL * sign * e;
        for (const auto& [w2, c2] : shuffle0(b.prefix(m - 1).reversed(), b.suffix_from(m)))
            raw[w2] += scale * c2;
    }
    return raw;
}

TensorElement reduce_raw_counts(unsigned dim, const std::map<Word, int64_t>& raw,
                                const HPoly& coeff, unsigned rank, TensorElement&& into) {
    if (rank == 0) return std::move(into); // nothing survives at rank 0
    for (const auto& [w, c] : raw) {
        if (c == 0) continue;
        const HPoly x = Rat(c, 1) * coeff;
        for (const auto& [b, r] : basis_block(w.multiset_key()).reduce(w)) into.add(b, r * x);
    }
    return std::move(into);
}

} // namespace

TensorElement classical_bracket(const TensorElement& a, const TensorElement& b, const Metric& eta) {
    TensorElement out(a.dim() ? a.dim() : b.dim());
    for (const auto& [wa, ca] : a.terms()) {
        if (wa.rank() < 2) continue; // momenta are central
        for (const auto& [wb, cb] : b.terms()) {
            if (wb.rank() < 2) continue;
            out = reduce_raw_counts(out.dim(), bracket_words(wa, wb, eta), ca * cb,
                                    wa.rank() + wb.rank() - 2, std::move(out));
        }
    }
    return out;
}

TensorElement naive_rank1_bracket(const TensorElement& a, unsigned nu, const Metric& eta) {
    TensorElement out(a.dim());
    for (const auto& [wa, ca] : a.terms()) {
        if (wa.rank() < 2) continue; // rank (1,1) pairing has no rank-0 target
        out = reduce_raw_counts(a.dim(), bracket_words_m1(wa, nu, eta), ca, wa.rank() - 1,
                                std::move(out));
    }
    return out;
}

TensorElement naive_extension_bracket(const TensorElement& a, const TensorElement& b,
                                      const Metric& eta) {
    TensorElement out(a.dim() ? a.dim() : b.dim());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            const unsigned N = wa.rank(), M = wb.rank();
            if (N >= 2 && M >= 2) {
                out = reduce_raw_counts(out.dim(), bracket_words(wa, wb, eta), ca * cb,
                                        N + M - 2, std::move(out));
            } else if (N >= 2 && M == 1) {
                out = reduce_raw_counts(out.dim(), bracket_words_m1(wa, wb.letter(0), eta),
                                        ca * cb, N - 1, std::move(out));
            } else if (N == 1 && M >= 2) {
                out = reduce_raw_counts(out.dim(), bracket_words_n1(wa.letter(0), wb, eta),
                                        ca * cb, M - 1, std::move(out));
            }
            // (1,1): no admissible target rank, treated as zero
        }
    }
    return out;
}

CElement CElement::e(unsigned dim, unsigned mu, const HPoly& c) {
    CElement x(dim);
    x.add_e(mu, c);
    return x;
}

CElement CElement::r(unsigned dim, const Word& w, const HPoly& c) {
    CElement x(dim);
    x.r_part.add(w, c);
    return x;
}

void CElement::add_e(unsigned mu, const HPoly& c) {
    if (c.is_zero()) return;
    auto it = e_part.find(mu);
    if (it == e_part.end()) {
        e_part.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) e_part.erase(it);
    }
}

CElement& CElement::operator+=(const CElement& o) {
    if (dim == 0) { dim = o.dim; r_part = TensorElement(o.dim); }
    for (const auto& [mu, c] : o.e_part) add_e(mu, c);
    r_part += o.r_part;
    return *this;
}

CElement& CElement::operator-=(const CElement& o) {
    if (dim == 0) { dim = o.dim; r_part = TensorElement(o.dim); }
    for (const auto& [mu, c] : o.e_part) add_e(mu, -c);
    r_part -= o.r_part;
    return *this;
}

std::string CElement::str() const {
    std::string s;
    for (const auto& [mu, c] : e_part) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*e_" + std::to_string(mu);
    }
    if (!r_part.is_zero()) {
        if (!s.empty()) s += " + ";
        s += r_part.str();
    }
    return s.empty() ? "0" : s;
}

CElement c_bracket(const CElement& a, const CElement& b, const Metric& eta) {
    CElement out(a.dim ? a.dim : b.dim);

    // [R, R] = h {R, R}
    out.r_part += classical_bracket(a.r_part, b.r_part, eta).h_shift(1);

    // [R_{mu nu}, e_k] = -2h (eta_{nu k} e_mu - eta_{mu k} e_nu), other ranks commute
    auto r_with_e = [&](const TensorElement& r, const std::map<unsigned, HPoly>& e, int sgn) {
        for (const auto& [w, cr] : r.terms()) {
            if (w.rank() != 2) continue;
            const unsigned mu = w.letter(0), nu = w.letter(1);
            for (const auto& [kappa, ce] : e) {
                const HPoly f = Rat(-2 * sgn, 1) * (cr * ce).shift(1);
                if (int em = eta.eta(nu, kappa); em != 0) out.add_e(mu, Rat(em, 1) * f);
                if (int em = eta.eta(mu, kappa); em != 0) out.add_e(nu, Rat(-em, 1) * f);
            }
        }
    };
    r_with_e(a.r_part, b.e_part, +1);
    r_with_e(b.r_part, a.e_part, -1);
    return out;
}

} // namespace strobs
