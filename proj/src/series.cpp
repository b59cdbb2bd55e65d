#include "strobs/series.hpp"

#include "strobs/basis.hpp"

#include <array>
#include <bit>
#include <set>
#include <tuple>
#include <stdexcept>

namespace strobs {

namespace {

// product of single gammas along a word: one blade with a sign
std::pair<Blade, int> word_blade(const Word& w, const Metric& eta) {
    Blade b = 0;
    int sign = 1;
    for (unsigned i = 0; i < w.length(); ++i) {
        auto [nb, s] = blade_mul(b, Blade(1) << w.letter(i), eta);
        b = nb;
        sign *= s;
    }
    return {b, sign};
}

} // namespace

LogPhi log_phi_expand(unsigned dim, unsigned max_order, const Metric& eta, ExecMode mode) {
    if (max_order < 1) throw std::invalid_argument("log_phi_expand: order must be >= 1");
    LogPhi lp;
    lp.dim = dim;
    lp.order = max_order;
    lp.orders.resize(max_order);

    for (unsigned n = 1; n <= max_order; ++n) {
        const std::vector<Word> keys = multisets(n, dim);
        // one blade and one reduced tensor per letter-multiset block
        std::vector<std::pair<Blade, TensorElement>> partial(keys.size());
        parallel_index(keys.size(), mode, [&](std::size_t i) {
            const BasisBlock block = BasisBlock::build(keys[i]);
            TensorElement acc(dim);
            Blade blade = 0;
            for (const Word& w : words_of_multiset(keys[i])) {
                auto [b, sign] = word_blade(w, eta);
                blade = b; // identical for the whole block
                const HPoly c{Rat(sign)};
                for (const auto& [bw, r] : block.reduce(w)) acc.add(bw, r * c);
            }
            partial[i] = {blade, std::move(acc)};
        });
        CliffordOrder& slot = lp.orders[n - 1];
        for (auto& [blade, acc] : partial) {
            if (acc.is_zero()) continue;
            auto it = slot.comps.find(blade);
            if (it == slot.comps.end()) slot.comps.emplace(blade, std::move(acc));
            else it->second += acc;
        }
        // drop components that cancelled to zero
        for (auto it = slot.comps.begin(); it != slot.comps.end();) {
            if (it->second.is_zero()) it = slot.comps.erase(it);
            else ++it;
        }
    }
    return lp;
}

SeriesCheck check_grade_pattern(const LogPhi& lp) {
    SeriesCheck out;
    for (unsigned n = 1; n <= lp.order; ++n) {
        for (const auto& [blade, t] : lp.at(n).comps) {
            const int g = std::popcount(static_cast<unsigned>(blade));
            if (g != 1 && g != 2 && !t.is_zero()) {
                out.pass = false;
                out.counterexample = "order " + std::to_string(n) + ": grade " + std::to_string(g) +
                                     " component survives: " + t.str();
                return out;
            }
        }
    }
    return out;
}

TensorElement PRSeries::p_at(unsigned n, unsigned mu) const {
    auto it = p.find(n);
    if (it == p.end()) return TensorElement(dim);
    return it->second.at(mu);
}

TensorElement PRSeries::r_at(unsigned n, unsigned mu, unsigned nu) const {
    if (mu == nu) return TensorElement(dim);
    auto it = r.find(n);
    if (it == r.end()) return TensorElement(dim);
    if (mu < nu) {
        auto jt = it->second.find({mu, nu});
        return jt == it->second.end() ? TensorElement(dim) : jt->second;
    }
    auto jt = it->second.find({nu, mu});
    if (jt == it->second.end()) return TensorElement(dim);
    return HPoly(Rat(-1)) * jt->second;
}

ExtractResult extract_pr_series(const LogPhi& lp) {
    ExtractResult out;
    out.series.dim = lp.dim;
    out.series.order = lp.order;
    for (unsigned n = 1; n <= lp.order; ++n) {
        const bool odd = (n % 2 == 1);
        std::vector<TensorElement> pvec(lp.dim, TensorElement(lp.dim));
        std::map<std::pair<unsigned, unsigned>, TensorElement> rmap;
        for (const auto& [blade, t] : lp.at(n).comps) {
            const int g = std::popcount(static_cast<unsigned>(blade));
            if (t.is_zero()) continue;
            if (g == 1) {
                if (!odd) {
                    out.parity.pass = false;
                    out.parity.counterexample =
                        "vector component at even order " + std::to_string(n);
                    continue;
                }
                const unsigned mu = static_cast<unsigned>(std::countr_zero(static_cast<unsigned>(blade)));
                pvec[mu] = t;
            } else if (g == 2) {
                if (odd) {
                    out.parity.pass = false;
                    out.parity.counterexample =
                        "bivector component at odd order " + std::to_string(n);
                    continue;
                }
                const unsigned mu = static_cast<unsigned>(std::countr_zero(static_cast<unsigned>(blade)));
                const unsigned nu = static_cast<unsigned>(
                    std::countr_zero(static_cast<unsigned>(blade) & ~(1u << mu)));
                rmap[{std::min(mu, nu), std::max(mu, nu)}] = HPoly(Rat(1, 2)) * t;
            }
        }
        if (odd) out.series.p[n] = std::move(pvec);
        else out.series.r[n] = std::move(rmap);
    }
    return out;
}

namespace {

using BiKey = std::pair<unsigned, unsigned>;
using BiSeries = std::map<BiKey, NCPoly>;

// K(lambda, kappa) = (g(lambda) - g(kappa)) / (lambda^2 - kappa^2) for an
// even series g; entry (2i, 2j) is g_{2(i+j)+2}
BiSeries kernel_expand(const std::map<unsigned, NCPoly>& g, unsigned cutoff) {
    BiSeries K;
    for (const auto& [m, poly] : g) {
        if (m < 2 || poly.is_zero()) continue;
        for (unsigned i = 0; 2 * i + 2 <= m; ++i) {
            const unsigned j = (m - 2) / 2 - i;
            if (2 * i + 2 * j + 2 != m) continue;
            if (2 * i + 2 * j > cutoff) continue;
            K[{2 * i, 2 * j}] = poly;
        }
    }
    return K;
}

// polynomial-division invariant: (lambda^2 - kappa^2) * K == g(lambda) - g(kappa)
// on every coefficient of total order <= cutoff
bool kernel_division_exact(const std::map<unsigned, NCPoly>& g, const BiSeries& K,
                           unsigned cutoff) {
    BiSeries prod;
    for (const auto& [k, poly] : K) {
        if (k.first + k.second + 2 > cutoff) continue;
        prod[{k.first + 2, k.second}] += poly;
        auto& slot = prod[{k.first, k.second + 2}];
        slot -= poly;
    }
    BiSeries want;
    for (const auto& [m, poly] : g) {
        if (poly.is_zero() || m > cutoff) continue;
        want[{m, 0}] += poly;
        auto& slot = want[{0, m}];
        slot -= poly;
    }
    auto clean = [](BiSeries& s) {
        for (auto it = s.begin(); it != s.end();) {
            if (it->second.is_zero()) it = s.erase(it);
            else ++it;
        }
    };
    clean(prod);
    clean(want);
    // the kappa^0 / lambda^0 edges of `want` are only reproduced up to the
    // truncation; compare entries with both exponents positive plus the
    // pure edges below the cutoff margin
    for (const auto& [k, poly] : want) {
        auto it = prod.find(k);
        const NCPoly* got = (it == prod.end()) ? nullptr : &it->second;
        if (k.first + k.second > cutoff) continue;
        if (got == nullptr ? !poly.is_zero() : !(*got == poly)) return false;
    }
    for (const auto& [k, poly] : prod) {
        if (k.first + k.second > cutoff) continue;
        if (want.find(k) == want.end() && !poly.is_zero()) return false;
    }
    return true;
}

std::string bikey_str(const BiKey& k) {
    return "(lambda^" + std::to_string(k.first) + " kappa^" + std::to_string(k.second) + ")";
}

} // namespace

SeriesCheck verify_pr_brackets(const PRSeries& pr, unsigned cutoff, const Metric& eta,
                               ExecMode mode) {
    SeriesCheck out;
    const unsigned D = pr.dim;
    if (pr.order < cutoff)
        throw std::invalid_argument("verify_pr_brackets: series order below cutoff");

    struct Job {
        int relation;
        unsigned i0, i1, i2, i3; // index slots (unused ones zero)
    };
    std::vector<Job> jobs;
    for (unsigned mu = 0; mu < D; ++mu)
        for (unsigned nu = 0; nu < D; ++nu) jobs.push_back({1, mu, nu, 0, 0});
    for (unsigned tau = 0; tau < D; ++tau)
        for (unsigned mu = 0; mu < D; ++mu)
            for (unsigned nu = mu + 1; nu < D; ++nu) jobs.push_back({2, tau, mu, nu, 0});
    for (unsigned s = 0; s < D; ++s)
        for (unsigned t = s + 1; t < D; ++t)
            for (unsigned mu = 0; mu < D; ++mu)
                for (unsigned nu = mu + 1; nu < D; ++nu) jobs.push_back({3, s, t, mu, nu});

    std::vector<std::string> fails(jobs.size());
    parallel_index(jobs.size(), mode, [&](std::size_t idx) {
        const Job& job = jobs[idx];
        BiSeries lhs, rhs;
        std::map<unsigned, NCPoly> g;
        const HPoly mh2 = HPoly::h_power(1, Rat(-2));
        const HPoly mh8 = HPoly::h_power(1, Rat(-8));

        if (job.relation == 1) {
            const unsigned mu = job.i0, nu = job.i1;
            for (unsigned a = 1; a <= cutoff; a += 2)
                for (unsigned b = 1; a + b <= cutoff; b += 2) {
                    NCPoly c = nc_commutator(tensor_to_nc(pr.p_at(a, mu)),
                                             tensor_to_nc(pr.p_at(b, nu)), eta);
                    if (!c.is_zero()) lhs[{a, b}] = std::move(c);
                }
            // g(lambda) = lambda^{-2} r_{mu nu}(lambda): g_{2m} = r^{(2m+2)}
            for (unsigned n = 2; n + 2 <= cutoff + 2; n += 2) {
                TensorElement t = pr.r_at(n + 2, mu, nu);
                if (n + 2 <= pr.order) g[n] = tensor_to_nc(t);
            }
            for (const auto& [k, poly] : kernel_expand(g, cutoff)) {
                const BiKey key{k.first + 3, k.second + 3};
                if (key.first + key.second > cutoff) continue;
                rhs[key] = mh8 * poly;
            }
            if (!kernel_division_exact(g, kernel_expand(g, cutoff), cutoff)) {
                fails[idx] = "relation 1: kernel division not polynomial";
                return;
            }
        } else if (job.relation == 2) {
            const unsigned tau = job.i0, mu = job.i1, nu = job.i2;
            for (unsigned a = 1; a <= cutoff; a += 2)
                for (unsigned b = 2; a + b <= cutoff; b += 2) {
                    NCPoly c = nc_commutator(tensor_to_nc(pr.p_at(a, tau)),
                                             tensor_to_nc(pr.r_at(b, mu, nu)), eta);
                    if (!c.is_zero()) lhs[{a, b}] = std::move(c);
                }
            // two antisymmetrized terms, each with g_{2m} = p^{(2m+1)}
            for (int swap = 0; swap < 2; ++swap) {
                const unsigned m1 = swap ? nu : mu, n1 = swap ? mu : nu;
                const int em = eta.eta(tau, m1);
                if (em == 0) continue;
                g.clear();
                for (unsigned n = 2; n + 1 <= pr.order; n += 2) g[n] = tensor_to_nc(pr.p_at(n + 1, n1));
                const HPoly scale = HPoly::h_power(1, Rat(-2 * (swap ? -1 : 1) * em));
                for (const auto& [k, poly] : kernel_expand(g, cutoff)) {
                    const BiKey key{k.first + 3, k.second + 2};
                    if (key.first + key.second > cutoff) continue;
                    rhs[key] += scale * poly;
                }
                if (!kernel_division_exact(g, kernel_expand(g, cutoff), cutoff)) {
                    fails[idx] = "relation 2: kernel division not polynomial";
                    return;
                }
            }
        } else {
            const unsigned s = job.i0, t = job.i1, mu = job.i2, nu = job.i3;
            for (unsigned a = 2; a <= cutoff; a += 2)
                for (unsigned b = 2; a + b <= cutoff; b += 2) {
                    NCPoly c = nc_commutator(tensor_to_nc(pr.r_at(a, s, t)),
                                             tensor_to_nc(pr.r_at(b, mu, nu)), eta);
                    if (!c.is_zero()) lhs[{a, b}] = std::move(c);
                }
            // four terms from antisymmetrizing in (mu nu) and (s t)
            const std::array<std::tuple<unsigned, unsigned, unsigned, unsigned, int>, 4> combos{
                std::make_tuple(t, mu, s, nu, +1), std::make_tuple(t, nu, s, mu, -1),
                std::make_tuple(s, mu, t, nu, -1), std::make_tuple(s, nu, t, mu, +1)};
            for (const auto& [c1, c2, r1, r2, sgn] : combos) {
                const int em = eta.eta(c1, c2);
                if (em == 0) continue;
                g.clear();
                for (unsigned n = 2; n <= pr.order; n += 2) g[n] = tensor_to_nc(pr.r_at(n, r1, r2));
                const HPoly scale = HPoly::h_power(1, Rat(-2 * sgn * em));
                for (const auto& [k, poly] : kernel_expand(g, cutoff)) {
                    const BiKey key{k.first + 2, k.second + 2};
                    if (key.first + key.second > cutoff) continue;
                    rhs[key] += scale * poly;
                }
                if (!kernel_division_exact(g, kernel_expand(g, cutoff), cutoff)) {
                    fails[idx] = "relation 3: kernel division not polynomial";
                    return;
                }
            }
        }

        // coefficient-by-coefficient comparison
        auto clean = [](BiSeries& s) {
            for (auto it = s.begin(); it != s.end();) {
                if (it->second.is_zero()) it = s.erase(it);
                else ++it;
            }
        };
        clean(lhs);
        clean(rhs);
        std::set<BiKey> keys;
        for (const auto& [k, v] : lhs) keys.insert(k);
        for (const auto& [k, v] : rhs) keys.insert(k);
        for (const BiKey& k : keys) {
            if (k.first + k.second > cutoff) continue;
            const NCPoly* l = lhs.count(k) ? &lhs.at(k) : nullptr;
            const NCPoly* r = rhs.count(k) ? &rhs.at(k) : nullptr;
            const bool equal = (l == nullptr && r == nullptr) ||
                               (l != nullptr && r != nullptr && *l == *r) ||
                               (l == nullptr && r->is_zero()) || (r == nullptr && l->is_zero());
            if (!equal) {
                fails[idx] = "relation " + std::to_string(job.relation) + " at " + bikey_str(k) +
                             " indices (" + std::to_string(job.i0) + "," + std::to_string(job.i1) +
                             "," + std::to_string(job.i2) + "," + std::to_string(job.i3) + ")";
                return;
            }
        }
    });

    for (const std::string& f : fails) {
        if (!f.empty()) {
            out.pass = false;
            out.counterexample = f;
            break;
        }
    }
    return out;
}

NCPoly b_series(const PRSeries& pr, unsigned n, const Metric& eta) {
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("b_series: order must be even >= 2");
    const unsigned D = pr.dim;
    NCPoly acc(D);
    for (unsigned a = 1; a < n; a += 2) {
        const unsigned b = n - a;
        for (unsigned mu = 0; mu < D; ++mu) {
            NCPoly prod = nc_mul(tensor_to_nc(pr.p_at(a, mu)), tensor_to_nc(pr.p_at(b, mu)), eta);
            acc += HPoly(Rat(eta.eta(mu, mu))) * prod;
        }
    }
    for (unsigned a = 2; a + 2 <= n; a += 2) {
        const unsigned b = n - a;
        for (unsigned mu = 0; mu < D; ++mu)
            for (unsigned nu = 0; nu < D; ++nu) {
                if (mu == nu) continue;
                NCPoly prod = nc_mul(tensor_to_nc(pr.r_at(a, mu, nu)),
                                     tensor_to_nc(pr.r_at(b, mu, nu)), eta);
                acc += HPoly(Rat(-2 * eta.eta(mu, mu) * eta.eta(nu, nu))) * prod;
            }
    }
    return acc;
}

SeriesCheck verify_b_commutativity(const PRSeries& pr, unsigned cutoff, const Metric& eta,
                                   ExecMode mode) {
    SeriesCheck out;
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned n = 2; n <= cutoff; n += 2)
        for (unsigned m = n; n + m <= cutoff; m += 2) pairs.emplace_back(n, m);

    std::map<unsigned, NCPoly> b;
    for (unsigned n = 2; n + 2 <= cutoff; n += 2) b[n] = b_series(pr, n, eta);

    std::vector<std::string> fails(pairs.size());
    parallel_index(pairs.size(), mode, [&](std::size_t i) {
        const auto [n, m] = pairs[i];
        NCPoly c = nc_commutator(b.at(n), b.at(m), eta);
        if (!c.is_zero())
            fails[i] = "[B(" + std::to_string(n) + "), B(" + std::to_string(m) +
                       ")] != 0: " + c.str().substr(0, 200);
    });
    for (const std::string& f : fails)
        if (!f.empty()) {
            out.pass = false;
            out.counterexample = f;
            break;
        }
    return out;
}

SeriesCheck verify_delta_logphi(const LogPhi& lp, unsigned cutoff, const Metric& eta,
                                ExecMode mode) {
    SeriesCheck out;
    const unsigned D = lp.dim;
    if (lp.order < cutoff) throw std::invalid_argument("verify_delta_logphi: order below cutoff");

    std::vector<std::string> fails(cutoff);
    parallel_index(cutoff, mode, [&](std::size_t idx) {
        const unsigned n = static_cast<unsigned>(idx) + 1;
        // lhs: delta applied to the order-n Clifford components
        std::map<Blade, NCPoly> lhs;
        for (const auto& [blade, t] : lp.at(n).comps) {
            NCPoly d = delta_derivation(tensor_to_nc(t), eta);
            if (!d.is_zero()) lhs[blade] = std::move(d);
        }
        // rhs: [e_mu Gamma^mu, order n-1 coefficient]
        std::map<Blade, NCPoly> rhs;
        if (n >= 2) {
            for (const auto& [blade, t] : lp.at(n - 1).comps) {
                const NCPoly tc = tensor_to_nc(t);
                for (unsigned mu = 0; mu < D; ++mu) {
                    const NCPoly e = NCPoly::generator(D, Sym::e(mu));
                    auto [b1, s1] = blade_mul(Blade(1) << mu, blade, eta);
                    rhs[b1] += HPoly(Rat(s1)) * nc_mul(e, tc, eta);
                    auto [b2, s2] = blade_mul(blade, Blade(1) << mu, eta);
                    rhs[b2] -= HPoly(Rat(s2)) * nc_mul(tc, e, eta);
                }
            }
        }
        auto clean = [](std::map<Blade, NCPoly>& m) {
            for (auto it = m.begin(); it != m.end();) {
                if (it->second.is_zero()) it = m.erase(it);
                else ++it;
            }
        };
        clean(lhs);
        clean(rhs);
        if (!(lhs == rhs))
            fails[idx] = "order " + std::to_string(n) + ": delta log-series mismatch";
    });
    for (const std::string& f : fails)
        if (!f.empty()) {
            out.pass = false;
            out.counterexample = f;
            break;
        }
    return out;
}

} // namespace strobs
