#include "strobs/verify.hpp"

#include "strobs/envelope.hpp"
#include "strobs/sector.hpp"
#include "strobs/tensor.hpp"

#include <algorithm>
#include <random>

namespace strobs {

namespace {

// generators of the extended algebra up to a rank bound: translations first,
// then the basis tensors rank by rank
std::vector<CElement> c_generators(unsigned dim, unsigned max_rank) {
    std::vector<CElement> gens;
    for (unsigned mu = 0; mu < dim; ++mu) gens.push_back(CElement::e(dim, mu));
    for (unsigned r = 1; r <= max_rank; ++r)
        for (const Word& w : basis_table(dim, r).basis_words())
            gens.push_back(CElement::r(dim, w));
    return gens;
}

unsigned c_rank(const CElement& g) {
    if (!g.e_part.empty()) return 1;
    return g.r_part.terms().begin()->first.rank();
}

struct Triple {
    std::size_t i, j, k;
};

std::vector<Triple> rank_bounded_triples(const std::vector<unsigned>& ranks, unsigned bound) {
    std::vector<Triple> out;
    for (std::size_t i = 0; i < ranks.size(); ++i)
        for (std::size_t j = i; j < ranks.size(); ++j) {
            if (ranks[i] + ranks[j] + 1 > bound) break;
            for (std::size_t k = j; k < ranks.size(); ++k) {
                if (ranks[i] + ranks[j] + ranks[k] > bound) break;
                out.push_back({i, j, k});
            }
        }
    return out;
}

} // namespace

SweepResult verify_jacobi(unsigned dim, unsigned max_total_rank, const Metric& eta, ExecMode mode) {
    SweepResult res;
    res.name = "jacobi";
    res.sector = "D" + std::to_string(dim) + ".ranksum<=" + std::to_string(max_total_rank);

    const std::vector<CElement> gens = c_generators(dim, max_total_rank >= 3 ? max_total_rank - 2 : 1);
    std::vector<unsigned> ranks(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) ranks[i] = c_rank(gens[i]);
    const std::vector<Triple> triples = rank_bounded_triples(ranks, max_total_rank);
    res.dims["generators"] = static_cast<int64_t>(gens.size());
    res.dims["triples"] = static_cast<int64_t>(triples.size());

    std::vector<std::string> fails(triples.size());
    parallel_index(triples.size(), mode, [&](std::size_t t) {
        const auto& [i, j, k] = triples[t];
        CElement jac = c_bracket(c_bracket(gens[i], gens[j], eta), gens[k], eta);
        jac += c_bracket(c_bracket(gens[j], gens[k], eta), gens[i], eta);
        jac += c_bracket(c_bracket(gens[k], gens[i], eta), gens[j], eta);
        if (!jac.is_zero())
            fails[t] = "triple (" + gens[i].str() + ", " + gens[j].str() + ", " + gens[k].str() +
                       ") has Jacobiator " + jac.str();
    });
    res.pass = true;
    for (const std::string& f : fails)
        if (!f.empty()) {
            res.pass = false;
            res.counterexample = f;
            break;
        }
    return res;
}

SweepResult verify_jacobi_naive_control(unsigned dim, unsigned max_total_rank, const Metric& eta,
                                        ExecMode mode) {
    SweepResult res;
    res.name = "jacobi-naive-control";
    res.sector = "D" + std::to_string(dim) + ".ranksum<=" + std::to_string(max_total_rank);

    std::vector<TensorElement> gens;
    for (unsigned r = 1; r + 2 <= max_total_rank; ++r)
        for (const Word& w : basis_table(dim, r).basis_words())
            gens.push_back(TensorElement::generator(dim, w, HPoly(1)));
    std::vector<unsigned> ranks(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) ranks[i] = gens[i].terms().begin()->first.rank();
    const std::vector<Triple> triples = rank_bounded_triples(ranks, max_total_rank);
    res.dims["triples"] = static_cast<int64_t>(triples.size());

    std::vector<char> violated(triples.size(), 0);
    parallel_index(triples.size(), mode, [&](std::size_t t) {
        const auto& [i, j, k] = triples[t];
        auto nb = [&](const TensorElement& a, const TensorElement& b) {
            return naive_extension_bracket(a, b, eta);
        };
        TensorElement jac = nb(nb(gens[i], gens[j]), gens[k]);
        jac += nb(nb(gens[j], gens[k]), gens[i]);
        jac += nb(nb(gens[k], gens[i]), gens[j]);
        violated[t] = jac.is_zero() ? 0 : 1;
    });
    int64_t count = 0;
    for (std::size_t t = 0; t < triples.size(); ++t) {
        if (violated[t]) {
            if (count == 0) {
                const auto& [i, j, k] = triples[t];
                res.counterexample = "first witness: (" + gens[i].str() + ", " + gens[j].str() +
                                     ", " + gens[k].str() + ")";
            }
            ++count;
        }
    }
    res.dims["violations"] = count;
    res.pass = count > 0; // the control must fail the Jacobi identity somewhere
    return res;
}

namespace {

// the derivation formula evaluated on one raw word, subwords reduced
NCPoly delta_raw_word(unsigned dim, const Word& w, const Metric& eta, const HPoly& coeff) {
    NCPoly out(dim);
    const unsigned N = w.rank();
    if (N < 2) return out;
    auto emit = [&](unsigned mu, const Word& raw, const Rat& sign) {
        const TensorElement red = canonicalize(dim, {{raw, HPoly(1)}}, N - 1);
        const Sym e = Sym::e(mu);
        for (const auto& [b, r] : red.terms()) {
            const HPoly cc = (Rat(1, 2) * sign * r) * coeff;
            out += pbw_normal_form(dim, {e, Sym::r(b)}, cc, eta);
            out += pbw_normal_form(dim, {Sym::r(b), e}, cc, eta);
        }
    };
    emit(w.first(), w.suffix_from(1), Rat(1));
    emit(w.last(), w.prefix(N - 1), Rat(-1));
    return out;
}

} // namespace

SweepResult verify_delta_well_defined(unsigned dim, unsigned max_rank, const Metric& eta,
                                      ExecMode mode) {
    SweepResult res;
    res.name = "delta-welldef";
    res.sector = "D" + std::to_string(dim) + ".rank<=" + std::to_string(max_rank);

    struct Job { Word u, v; };
    std::vector<Job> jobs;
    for (unsigned rank = 2; rank <= max_rank; ++rank) {
        for (unsigned K = 1; 2 * K <= rank; ++K) {
            std::vector<Word> us, vs;
            for (const Word& m : multisets(K, dim))
                for (const Word& u : words_of_multiset(m)) us.push_back(u);
            for (const Word& m : multisets(rank - K, dim))
                for (const Word& v : words_of_multiset(m)) vs.push_back(v);
            for (const Word& u : us)
                for (const Word& v : vs) {
                    if (K == rank - K && v < u) continue;
                    jobs.push_back({u, v});
                }
        }
    }
    res.dims["shuffle-sums"] = static_cast<int64_t>(jobs.size());

    std::vector<std::string> fails(jobs.size());
    parallel_index(jobs.size(), mode, [&](std::size_t t) {
        NCPoly acc(dim);
        for (const auto& [w, c] : shuffle(jobs[t].u, jobs[t].v))
            acc += delta_raw_word(dim, w, eta, HPoly(Rat(c)));
        if (!acc.is_zero())
            fails[t] = "shuffle (" + jobs[t].u.str() + " | " + jobs[t].v.str() +
                       ") maps to " + acc.str();
    });
    res.pass = true;
    for (const std::string& f : fails)
        if (!f.empty()) {
            res.pass = false;
            res.counterexample = f;
            break;
        }
    return res;
}

SweepResult verify_delta_leibniz(unsigned dim, unsigned max_rank_sum, const Metric& eta,
                                 ExecMode mode) {
    SweepResult res;
    res.name = "delta-leibniz";
    res.sector = "D" + std::to_string(dim) + ".ranksum<=" + std::to_string(max_rank_sum);

    std::vector<Word> gens;
    for (unsigned r = 1; r + 1 <= max_rank_sum; ++r)
        for (const Word& w : basis_table(dim, r).basis_words()) gens.push_back(w);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            if (gens[i].rank() + gens[j].rank() > max_rank_sum) break;
            pairs.emplace_back(i, j);
        }
    res.dims["pairs"] = static_cast<int64_t>(pairs.size());

    std::vector<std::string> fails(pairs.size());
    parallel_index(pairs.size(), mode, [&](std::size_t t) {
        const NCPoly A = NCPoly::generator(dim, Sym::r(gens[pairs[t].first]));
        const NCPoly B = NCPoly::generator(dim, Sym::r(gens[pairs[t].second]));
        NCPoly lhs = delta_derivation(nc_commutator(A, B, eta), eta);
        NCPoly rhs = nc_commutator(delta_derivation(A, eta), B, eta) +
                     nc_commutator(A, delta_derivation(B, eta), eta);
        if (!(lhs == rhs))
            fails[t] = "pair (" + gens[pairs[t].first].str() + ", " + gens[pairs[t].second].str() +
                       ") breaks the derivation rule";
    });
    res.pass = true;
    for (const std::string& f : fails)
        if (!f.empty()) {
            res.pass = false;
            res.counterexample = f;
            break;
        }
    return res;
}

SweepResult verify_z2(unsigned dim, unsigned max_rank, const Metric& eta, ExecMode mode) {
    SweepResult res;
    res.name = "z2";
    res.sector = "D" + std::to_string(dim) + ".rank3-" + std::to_string(max_rank);

    std::vector<Word> words;
    for (unsigned rank = 3; rank <= max_rank; ++rank)
        for (const Word& m : multisets(rank, dim))
            for (const Word& w : words_of_multiset(m)) words.push_back(w);
    res.dims["words"] = static_cast<int64_t>(words.size());

    std::vector<std::string> fails(words.size());
    parallel_index(words.size(), mode, [&](std::size_t t) {
        if (!delta_derivation(quantum_z1(dim, words[t]), eta).is_zero()) {
            fails[t] = "delta Z1 nonzero at word " + words[t].str();
            return;
        }
        if (!delta_derivation(quantum_z2(dim, words[t], eta), eta).is_zero())
            fails[t] = "delta Z2 nonzero at word " + words[t].str();
    });
    res.pass = true;
    for (const std::string& f : fails)
        if (!f.empty()) {
            res.pass = false;
            res.counterexample = f;
            break;
        }
    return res;
}

SweepResult verify_pi_intertwine(unsigned dim, unsigned pair_count, unsigned max_weight,
                                 const Metric& eta, uint64_t seed, ExecMode mode) {
    SweepResult res;
    res.name = "pi-intertwine";
    res.sector = "D" + std::to_string(dim) + ".weight<=" + std::to_string(max_weight) + ".pairs" +
                 std::to_string(pair_count);
    res.dims["pairs"] = pair_count;

    // pre-draw the random elements serially so the sweep is schedule free
    struct Pair { NCPoly a, b; int la, lb; };
    std::vector<Pair> jobs;
    std::mt19937_64 rng(seed);
    std::map<unsigned, std::vector<SectorMono>> sectors;
    for (unsigned w = 2; w <= max_weight; ++w) {
        SectorSpec s;
        s.dim = dim;
        s.weight = w;
        sectors[w] = enumerate_sector(s);
    }
    auto random_poly = [&]() {
        const unsigned w = 2 + static_cast<unsigned>(rng() % (max_weight - 1));
        const auto& monos = sectors.at(w);
        NCPoly p(dim);
        const unsigned n_terms = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned t = 0; t < n_terms; ++t) {
            const SectorMono& sm = monos[rng() % monos.size()];
            static const Rat coeffs[4] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
            p.add_normal(sm.mono, HPoly::h_power(sm.h_pow, coeffs[rng() % 4]));
        }
        return p;
    };
    for (unsigned t = 0; t < pair_count; ++t) {
        Pair pr;
        do { pr.a = random_poly(); } while (pr.a.is_zero());
        do { pr.b = random_poly(); } while (pr.b.is_zero());
        pr.la = pr.a.max_degree();
        pr.lb = pr.b.max_degree();
        jobs.push_back(std::move(pr));
    }

    std::vector<std::string> fails(jobs.size());
    parallel_index(jobs.size(), mode, [&](std::size_t t) {
        const auto& [a, b, la, lb] = jobs[t];
        try {
            if (!(project_pi(nc_mul(a, b, eta), la + lb + 1) ==
                  project_pi(a, la) * project_pi(b, lb))) {
                fails[t] = "product rule fails at pair " + std::to_string(t);
                return;
            }
            CommPoly pb = poisson_bracket(project_pi(a, la), project_pi(b, lb), eta);
            if (!(project_pi(nc_commutator(a, b, eta), la + lb) == HPoly::h_power(1) * pb)) {
                fails[t] = "bracket rule fails at pair " + std::to_string(t);
                return;
            }
            if (!(project_pi(delta_derivation(a, eta), la - 1) ==
                  partial_derivation(project_pi(a, la)))) {
                fails[t] = "derivation rule fails at pair " + std::to_string(t);
            }
        } catch (const std::exception& ex) {
            fails[t] = std::string("filtration violation: ") + ex.what();
        }
    });
    res.pass = true;
    for (const std::string& f : fails)
        if (!f.empty()) {
            res.pass = false;
            res.counterexample = f;
            break;
        }
    return res;
}

} // namespace strobs
