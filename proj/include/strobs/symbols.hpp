#pragma once

#include "strobs/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace strobs {

// Generator symbol of the extended algebras: either a translation e_mu or a
// monodromy generator R_w (with w a basis word). Packed into one u64 so the
// natural order puts all e's (ascending mu) before all R's (ascending rank,
// then lex) — this is also the fixed PBW generator order.
class Sym {
public:
    static Sym e(unsigned mu) { return Sym(static_cast<uint64_t>(mu) + 1); }
    static Sym r(const Word& w) { return Sym(w.packed()); }

    bool is_e() const { return key_ < (1ull << 56); }
    bool is_r() const { return !is_e(); }
    unsigned e_index() const { return static_cast<unsigned>(key_ - 1); }
    Word word() const { return Word::from_packed(key_); }

    // weight: e counts 1, R_w counts rank(w)
    unsigned weight() const { return is_e() ? 1u : word().rank(); }
    // grade contribution to the monomial degree: e counts 0, R_w counts rank-1
    int grade() const { return is_e() ? 0 : static_cast<int>(word().rank()) - 1; }

    std::string str() const { return is_e() ? "e_" + std::to_string(e_index()) : "R_" + word().str(); }

    friend bool operator==(const Sym& a, const Sym& b) { return a.key_ == b.key_; }
    friend bool operator!=(const Sym& a, const Sym& b) { return a.key_ != b.key_; }
    friend bool operator<(const Sym& a, const Sym& b) { return a.key_ < b.key_; }
    friend bool operator>(const Sym& a, const Sym& b) { return a.key_ > b.key_; }

private:
    explicit Sym(uint64_t key) : key_(key) {}
    uint64_t key_;
};

// Monomial = list of symbols. Commutative monomials and PBW normal forms are
// kept sorted ascending; raw enveloping-algebra products may be unsorted.
using Mono = std::vector<Sym>;

inline unsigned mono_weight(const Mono& m) {
    unsigned w = 0;
    for (const Sym& s : m) w += s.weight();
    return w;
}

// degree l = sum of grades - 1; the empty monomial sits at -1 like the
// momentum polynomials
inline int mono_degree(const Mono& m) {
    int g = 0;
    for (const Sym& s : m) g += s.grade();
    return g - 1;
}

inline bool mono_has_e(const Mono& m) {
    for (const Sym& s : m)
        if (s.is_e()) return true;
    return false;
}

inline unsigned mono_e_count(const Mono& m) {
    unsigned n = 0;
    for (const Sym& s : m) n += s.is_e() ? 1 : 0;
    return n;
}

inline unsigned mono_order(const Mono& m) { // polynomial order in the R's
    unsigned n = 0;
    for (const Sym& s : m) n += s.is_r() ? 1 : 0;
    return n;
}

std::string mono_str(const Mono& m);

} // namespace strobs
