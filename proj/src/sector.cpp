#include "strobs/sector.hpp"

#include "strobs/basis.hpp"

#include <algorithm>
#include <map>

namespace strobs {

std::string SectorSpec::key() const {
    std::string s = "D" + std::to_string(dim) + ".w" + std::to_string(weight);
    if (e_count != 0) s += ".e" + std::to_string(e_count);
    if (max_order >= 0) s += ".K" + std::to_string(max_order);
    if (max_h >= 0) s += ".h" + std::to_string(max_h);
    if (index_multiset) s += ".m" + index_multiset->str();
    return s;
}

namespace {

bool multiset_matches(const SectorSpec& spec, const Mono& m) {
    if (!spec.index_multiset) return true;
    std::vector<uint8_t> letters;
    for (const Sym& s : m) {
        if (s.is_e()) letters.push_back(static_cast<uint8_t>(s.e_index()));
        else for (uint8_t l : s.word().letters()) letters.push_back(l);
    }
    std::sort(letters.begin(), letters.end());
    return letters == spec.index_multiset->letters();
}

} // namespace

std::vector<SectorMono> enumerate_sector(const SectorSpec& spec) {
    std::vector<SectorMono> out;
    const unsigned D = spec.dim;

    // pool of R generators in ascending symbol order (rank, then lex)
    std::vector<Sym> pool;
    for (unsigned rank = 1; rank <= spec.weight; ++rank)
        for (const Word& w : basis_table(D, rank).basis_words()) pool.push_back(Sym::r(w));

    auto guard = [&]() {
        if (out.size() > spec.budget)
            throw ResourceError("sector " + spec.key() + " exceeds the monomial budget");
    };

    const unsigned max_j = spec.weight / 2;
    for (unsigned j = 0; j <= max_j; ++j) {
        if (spec.max_h >= 0 && j > static_cast<unsigned>(spec.max_h)) break;
        const unsigned rest = spec.weight - 2 * j;
        if (static_cast<unsigned>(spec.e_count) > rest) continue;
        const unsigned r_weight = rest - spec.e_count;

        // nondecreasing e-index tuples of the required size
        std::vector<Mono> eparts;
        {
            Mono cur;
            auto erec = [&](auto&& self, unsigned pos, unsigned minIdx) -> void {
                if (pos == static_cast<unsigned>(spec.e_count)) {
                    eparts.push_back(cur);
                    return;
                }
                for (unsigned mu = minIdx; mu < D; ++mu) {
                    cur.push_back(Sym::e(mu));
                    self(self, pos + 1, mu);
                    cur.pop_back();
                }
            };
            erec(erec, 0, 0);
        }

        // nondecreasing R-symbol tuples of total rank r_weight
        std::vector<Mono> rparts;
        {
            Mono cur;
            auto rrec = [&](auto&& self, std::size_t minIdx, unsigned left) -> void {
                if (left == 0) {
                    rparts.push_back(cur);
                    return;
                }
                if (spec.max_order >= 0 && cur.size() >= static_cast<std::size_t>(spec.max_order))
                    return;
                for (std::size_t i = minIdx; i < pool.size(); ++i) {
                    const unsigned wgt = pool[i].weight();
                    if (wgt > left) break; // pool is sorted by rank first
                    cur.push_back(pool[i]);
                    self(self, i, left - wgt);
                    cur.pop_back();
                }
            };
            rrec(rrec, 0, r_weight);
        }

        for (const Mono& ep : eparts) {
            for (const Mono& rp : rparts) {
                if (ep.empty() && rp.empty() && !spec.include_scalars) continue;
                Mono m = ep;
                m.insert(m.end(), rp.begin(), rp.end());
                if (!multiset_matches(spec, m)) continue;
                out.push_back({j, std::move(m)});
                guard();
            }
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace strobs
