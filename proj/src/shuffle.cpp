#include "strobs/shuffle.hpp"

#include <stdexcept>

namespace strobs {

namespace {

void shuffle_rec(const std::vector<uint8_t>& u, const std::vector<uint8_t>& v,
                 std::size_t i, std::size_t j, std::vector<uint8_t>& cur, WordCount& out) {
    if (i == u.size() && j == v.size()) {
        out[Word(cur)] += 1;
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_rec(u, v, i + 1, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_rec(u, v, i, j + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

WordCount shuffle(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("shuffle: empty factor");
    WordCount out;
    std::vector<uint8_t> cur;
    const auto ul = u.letters(), vl = v.letters();
    cur.reserve(ul.size() + vl.size());
    shuffle_rec(ul, vl, 0, 0, cur, out);
    return out;
}

WordCount shuffle_all(const std::vector<Word>& factors) {
    WordCount acc;
    acc[Word()] = 1;
    for (const Word& f : factors) {
        WordCount next;
        for (const auto& [w, c] : acc) {
            if (w.empty()) {
                next[f] += c;
                continue;
            }
            for (const auto& [s, m] : shuffle(w, f)) next[s] += c * m;
        }
        acc = std::move(next);
    }
    return acc;
}

int64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    int64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace strobs
