#include "strobs/quadgen.hpp"

#include "strobs/linalg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace strobs {

namespace {

// coordinates of a classical (h-free) element over the rank-sector basis
SparseVec coords(const TensorElement& t, unsigned dim, unsigned rank) {
    const auto& words = basis_table(dim, rank).basis_words();
    SparseVec v;
    for (const auto& [w, c] : t.terms()) {
        if (w.rank() != rank) throw std::invalid_argument("coords: rank mismatch");
        if (c.h_degree() > 0) throw std::invalid_argument("coords: unexpected h power");
        auto it = std::lower_bound(words.begin(), words.end(), w);
        v.emplace_back(static_cast<int>(it - words.begin()), c.coeff(0));
    }
    return v;
}

std::vector<Word> raw_interior_words(unsigned dim, unsigned rank) {
    // words with nonzero first and last letter, ascending
    std::vector<Word> out;
    for (const Word& ms : multisets(rank, dim))
        for (const Word& w : words_of_multiset(ms))
            if (w.first() != 0 && w.last() != 0) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TensorElement exceptional_element(unsigned dim, unsigned rank) {
    if (rank < 3 || rank % 2 == 0)
        throw std::invalid_argument("exceptional_element: rank must be odd and >= 3");
    TensorElement acc(dim);
    for (uint8_t i = 1; i < dim; ++i) {
        std::vector<uint8_t> letters(rank, 0);
        letters.front() = letters.back() = i;
        acc += canonicalize(dim, {{Word(letters), HPoly(1)}}, rank);
    }
    return acc;
}

QuadGenReport quadratic_generation_check(unsigned dim, unsigned max_rank, const Metric& eta,
                                         bool with_exceptionals, ExecMode mode) {
    if (max_rank < 3) throw std::invalid_argument("quadratic_generation_check: max_rank >= 3");
    QuadGenReport rep;
    rep.dim = dim;
    rep.max_rank = max_rank;
    rep.with_exceptionals = with_exceptionals;

    // the subalgebra span per rank, with independent representatives kept
    // for bracketing
    std::map<unsigned, SpanBuilder> r0_span;
    std::map<unsigned, std::vector<TensorElement>> r0_elems;
    for (unsigned r = 1; r <= max_rank; ++r) {
        SpanBuilder span(static_cast<int>(basis_table(dim, r).basis_words().size()));
        std::vector<TensorElement> elems;
        for (const Word& w : raw_interior_words(dim, r)) {
            TensorElement t = canonicalize(dim, {{w, HPoly(1)}}, r);
            if (t.is_zero()) continue;
            if (span.insert(coords(t, dim, r))) elems.push_back(std::move(t));
        }
        rep.r0_dims[r] = span.dimension();
        r0_span.emplace(r, std::move(span));
        r0_elems.emplace(r, std::move(elems));
    }

    // (i) closure under the bracket
    for (unsigned a = 2; a <= max_rank && rep.closed; ++a) {
        for (unsigned b = a; b <= max_rank && rep.closed; ++b) {
            const unsigned target = a + b - 2;
            if (target > max_rank) continue;
            const auto& xs = r0_elems.at(a);
            const auto& ys = r0_elems.at(b);
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = (a == b ? i + 1 : 0); j < ys.size(); ++j)
                    pairs.emplace_back(i, j);
            std::vector<char> inside(pairs.size(), 1);
            parallel_index(pairs.size(), mode, [&](std::size_t k) {
                TensorElement z = classical_bracket(xs[pairs[k].first], ys[pairs[k].second], eta);
                if (z.is_zero()) return;
                inside[k] = r0_span.at(target).contains(coords(z, dim, target)) ? 1 : 0;
            });
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                if (!inside[k]) {
                    rep.closed = false;
                    rep.counterexample = "bracket of rank " + std::to_string(a) + " element " +
                                         std::to_string(pairs[k].first) + " with rank " +
                                         std::to_string(b) + " element " +
                                         std::to_string(pairs[k].second) +
                                         " leaves the span at rank " + std::to_string(target);
                    break;
                }
            }
        }
    }

    // (ii) bracket closure of the seeds
    std::map<unsigned, SpanBuilder> gen_span;
    std::map<unsigned, std::vector<TensorElement>> gen_elems;
    for (unsigned r = 1; r <= max_rank; ++r)
        gen_span.emplace(r, SpanBuilder(static_cast<int>(basis_table(dim, r).basis_words().size())));

    std::deque<std::pair<unsigned, std::size_t>> queue;
    auto offer = [&](unsigned r, const TensorElement& t) {
        if (t.is_zero() || r > max_rank) return;
        if (gen_span.at(r).insert(coords(t, dim, r))) {
            gen_elems[r].push_back(t);
            queue.emplace_back(r, gen_elems[r].size() - 1);
        }
    };

    for (unsigned r = 1; r <= std::min(3u, max_rank); ++r)
        for (const TensorElement& t : r0_elems.at(r)) offer(r, t);
    if (with_exceptionals)
        for (unsigned r = 5; r <= max_rank; r += 2) offer(r, exceptional_element(dim, r));

    while (!queue.empty()) {
        auto [ra, ia] = queue.front();
        queue.pop_front();
        if (ra < 2) continue; // momenta bracket to zero
        const TensorElement x = gen_elems.at(ra)[ia];
        // snapshot of current partners; later arrivals pair when they pop
        std::vector<std::pair<unsigned, std::size_t>> partners;
        for (unsigned rb = 2; rb <= max_rank; ++rb) {
            if (ra + rb - 2 > max_rank) continue;
            auto it = gen_elems.find(rb);
            if (it == gen_elems.end()) continue;
            for (std::size_t j = 0; j < it->second.size(); ++j) partners.emplace_back(rb, j);
        }
        std::vector<TensorElement> results(partners.size());
        parallel_index(partners.size(), mode, [&](std::size_t k) {
            const auto& [rb, j] = partners[k];
            results[k] = classical_bracket(x, gen_elems.at(rb)[j], eta);
        });
        for (std::size_t k = 0; k < partners.size(); ++k)
            offer(ra + partners[k].first - 2, results[k]);
    }

    for (unsigned r = 1; r <= max_rank; ++r) {
        rep.generated_dims[r] = gen_span.at(r).dimension();
        rep.generated[r] = rep.generated_dims[r] == rep.r0_dims[r];
    }
    for (unsigned r = 5; r <= max_rank; r += 2)
        rep.exceptional_in_span[r] =
            gen_span.at(r).contains(coords(exceptional_element(dim, r), dim, r));
    return rep;
}

} // namespace strobs
