#include "strobs/poisson.hpp"

#include <algorithm>
#include <stdexcept>

namespace strobs {

std::string mono_str(const Mono& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const Sym& g : m) {
        if (!s.empty()) s += "*";
        s += g.str();
    }
    return s;
}

CommPoly CommPoly::scalar(unsigned dim, const HPoly& c) {
    CommPoly p(dim);
    p.add({}, c);
    return p;
}

CommPoly CommPoly::generator(unsigned dim, const Sym& s, const HPoly& c) {
    CommPoly p(dim);
    p.add({s}, c);
    return p;
}

void CommPoly::add(Mono m, const HPoly& c) {
    if (c.is_zero()) return;
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

CommPoly operator*(const HPoly& c, const CommPoly& p) {
    CommPoly r(p.dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p.terms_) r.add(m, c * x);
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r(a.dim_ ? a.dim_ : b.dim_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Mono m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add(std::move(m), ca * cb);
        }
    return r;
}

bool CommPoly::e_free() const {
    for (const auto& [m, c] : terms_)
        if (mono_has_e(m)) return false;
    return true;
}

std::string CommPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + mono_str(m);
    }
    return s;
}

CommPoly tensor_to_comm(const TensorElement& t) {
    CommPoly p(t.dim());
    for (const auto& [w, c] : t.terms()) p.add({Sym::r(w)}, c);
    return p;
}

CommPoly poisson_bracket(const CommPoly& a, const CommPoly& b, const Metric& eta) {
    if (!a.e_free() || !b.e_free())
        throw std::invalid_argument("poisson_bracket: arguments must be free of e-symbols");
    CommPoly out(a.dim() ? a.dim() : b.dim());
    const unsigned D = out.dim();
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const HPoly cc = ca * cb;
            for (std::size_t i = 0; i < ma.size(); ++i) {
                const Word wa = ma[i].word();
                if (wa.rank() < 2) continue;
                for (std::size_t j = 0; j < mb.size(); ++j) {
                    const Word wb = mb[j].word();
                    if (wb.rank() < 2) continue;
                    TensorElement br = classical_bracket(TensorElement::generator(D, wa),
                                                         TensorElement::generator(D, wb), eta);
                    if (br.is_zero()) continue;
                    Mono rest;
                    rest.reserve(ma.size() + mb.size() - 2);
                    for (std::size_t k = 0; k < ma.size(); ++k)
                        if (k != i) rest.push_back(ma[k]);
                    for (std::size_t k = 0; k < mb.size(); ++k)
                        if (k != j) rest.push_back(mb[k]);
                    for (const auto& [w, c] : br.terms()) {
                        Mono m = rest;
                        m.push_back(Sym::r(w));
                        out.add(std::move(m), cc * c);
                    }
                }
            }
        }
    }
    return out;
}

CommPoly partial_derivation(const CommPoly& a) {
    if (!a.e_free())
        throw std::invalid_argument("partial_derivation: input must lie in S(R)");
    CommPoly out(a.dim());
    const unsigned D = a.dim();
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const Word w = m[i].word();
            const unsigned N = w.rank();
            if (N < 2) continue; // momenta are annihilated
            Mono rest;
            rest.reserve(m.size() + 1);
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != i) rest.push_back(m[k]);

            auto emit = [&](unsigned mu, const Word& raw, const Rat& sign) {
                const TensorElement red = canonicalize(D, {{raw, HPoly(1)}}, N - 1);
                for (const auto& [b, r] : red.terms()) {
                    Mono mm = rest;
                    mm.push_back(Sym::e(mu));
                    mm.push_back(Sym::r(b));
                    out.add(std::move(mm), (sign * c) * r);
                }
            };
            emit(w.first(), w.suffix_from(1), Rat(1));
            emit(w.last(), w.prefix(N - 1), Rat(-1));
        }
    }
    return out;
}

CommPoly classical_invariant_part(unsigned dim, const Word& w, unsigned K) {
    const unsigned N = w.rank();
    if (K < 1 || K > N) throw std::invalid_argument("classical_invariant_part: need 1 <= K <= N");
    CommPoly acc(dim);
    // split points 0 < a_1 < ... < a_{K-1} < N cut the word into K blocks
    std::vector<unsigned> splits;
    auto emit = [&](const Word& word) {
        CommPoly term = CommPoly::scalar(dim, HPoly(1));
        unsigned start = 0;
        for (unsigned t = 0; t < K; ++t) {
            const unsigned stop = (t + 1 < K) ? splits[t] : N;
            const Word block = word.sub(start, stop);
            term = term * tensor_to_comm(canonicalize(dim, {{block, HPoly(1)}}, block.rank()));
            start = stop;
        }
        acc += term;
    };
    auto rec = [&](auto&& self, unsigned prev, const Word& word) -> void {
        if (splits.size() == K - 1) {
            emit(word);
            return;
        }
        const unsigned remaining = K - 1 - static_cast<unsigned>(splits.size());
        for (unsigned s = prev + 1; s + remaining - 1 <= N - 1; ++s) {
            splits.push_back(s);
            self(self, s, word);
            splits.pop_back();
        }
    };
    for (unsigned r = 0; r < N; ++r) rec(rec, 0, w.rotated(r));
    return Rat(1) / rat_factorial(K) * acc;
}

CommPoly classical_invariant(unsigned dim, const Word& w) {
    CommPoly z(dim);
    for (unsigned K = 1; K <= w.rank(); ++K) z += classical_invariant_part(dim, w, K);
    return z;
}

} // namespace strobs
