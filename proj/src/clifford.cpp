#include "strobs/clifford.hpp"

#include <bit>

namespace strobs {

std::pair<Blade, int> blade_mul(Blade a, Blade b, const Metric& eta) {
    // sign from moving each generator of b past the larger generators of a,
    // then eta factors for the contracted (repeated) indices
    int sign = 1;
    Blade rest = a;
    for (unsigned mu = 0; mu < eta.dim(); ++mu) {
        const Blade bit = Blade(1) << mu;
        if (!(b & bit)) continue;
        const Blade higher = static_cast<Blade>(rest & ~((bit << 1) - 1));
        if (std::popcount(static_cast<unsigned>(higher)) % 2 != 0) sign = -sign;
        if (rest & bit) {
            sign *= eta.eta(mu, mu);
            rest = static_cast<Blade>(rest & ~bit);
        } else {
            rest = static_cast<Blade>(rest | bit);
        }
    }
    return {rest, sign};
}

void Clifford::add(Blade b, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Clifford& Clifford::operator+=(const Clifford& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

Clifford& Clifford::operator-=(const Clifford& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

Clifford mul(const Clifford& a, const Clifford& b, const Metric& eta) {
    Clifford out;
    for (const auto& [ba, ca] : a.terms_)
        for (const auto& [bb, cb] : b.terms_) {
            auto [blade, sign] = blade_mul(ba, bb, eta);
            out.add(blade, Rat(sign) * ca * cb);
        }
    return out;
}

void Clifford2::add(Blade a, Blade b, const Rat& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Clifford2 Clifford2::outer(const Clifford& x, const Clifford& y) {
    Clifford2 out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add(a, b, ca * cb);
    return out;
}

Clifford2& Clifford2::operator+=(const Clifford2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

Clifford2& Clifford2::operator-=(const Clifford2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

Clifford2 mul(const Clifford2& a, const Clifford2& b, const Metric& eta) {
    Clifford2 out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            auto [b1, s1] = blade_mul(ka.first, kb.first, eta);
            auto [b2, s2] = blade_mul(ka.second, kb.second, eta);
            out.add(b1, b2, Rat(s1 * s2) * ca * cb);
        }
    return out;
}

Clifford2 commutator(const Clifford2& a, const Clifford2& b, const Metric& eta) {
    return mul(a, b, eta) - mul(b, a, eta);
}

bool verify_clifford_square_identity(const Metric& eta) {
    const unsigned D = eta.dim();
    // sum_ab eta_aa eta_bb [G^a,G^b] (x) [G^a,G^b]
    Clifford2 lhs_op;
    for (unsigned a = 0; a < D; ++a)
        for (unsigned b = 0; b < D; ++b) {
            if (a == b) continue;
            Clifford ga = Clifford::gamma(a), gb = Clifford::gamma(b);
            Clifford comm = mul(ga, gb, eta) - mul(gb, ga, eta);
            Clifford2 sq = Clifford2::outer(comm, comm);
            const Rat scale(eta.eta(a, a) * eta.eta(b, b));
            for (const auto& [k, c] : sq.terms()) lhs_op.add(k.first, k.second, scale * c);
        }
    // sum_a eta_aa G^a (x) G^a
    Clifford2 mix;
    for (unsigned a = 0; a < D; ++a) mix.add(Blade(1) << a, Blade(1) << a, Rat(eta.eta(a, a)));

    for (unsigned mu = 0; mu < D; ++mu) {
        Clifford2 gmu_left, gmu_right;
        gmu_left.add(Blade(1) << mu, 0, Rat(1));
        gmu_right.add(0, Blade(1) << mu, Rat(1));
        Clifford2 lhs = commutator(lhs_op, gmu_left, eta);
        Clifford2 rhs = commutator(mix, gmu_right, eta);
        Clifford2 rhs8;
        for (const auto& [k, c] : rhs.terms()) rhs8.add(k.first, k.second, Rat(8) * c);
        if (!(lhs == rhs8)) return false;
    }
    return true;
}

} // namespace strobs
