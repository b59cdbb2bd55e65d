#include "strobs/word.hpp"

#include <algorithm>

namespace strobs {

Word Word::multiset_key() const {
    std::vector<uint8_t> v = letters();
    std::sort(v.begin(), v.end());
    return Word(v);
}

bool Word::is_lyndon() const {
    // w is Lyndon iff it is strictly smaller than each of its proper suffixes.
    const unsigned n = length();
    if (n == 1) return true;
    std::vector<uint8_t> v = letters();
    for (unsigned s = 1; s < n; ++s) {
        // compare v with v[s..)
        bool smaller = false, decided = false;
        for (unsigned i = 0; s + i < n; ++i) {
            if (v[i] != v[s + i]) {
                smaller = v[i] < v[s + i];
                decided = true;
                break;
            }
        }
        // equal prefix up to the suffix end: the suffix is a prefix of w,
        // hence suffix < w in the suffix order sense -> not Lyndon
        if (!decided || !smaller) return false;
    }
    return true;
}

std::vector<Word> Word::lyndon_factors() const {
    // Duval's algorithm.
    std::vector<uint8_t> s = letters();
    const std::size_t n = s.size();
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && s[k] <= s[j]) {
            if (s[k] < s[j]) k = i;
            else ++k;
            ++j;
        }
        while (i <= k) {
            out.push_back(Word(std::vector<uint8_t>(s.begin() + i, s.begin() + i + (j - k))));
            i += j - k;
        }
    }
    return out;
}

std::vector<Word> words_of_multiset(const Word& multiset) {
    std::vector<uint8_t> v = multiset.letters();
    std::sort(v.begin(), v.end());
    std::vector<Word> out;
    do {
        out.push_back(Word(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Word> multisets(unsigned size, unsigned dim) {
    std::vector<Word> out;
    std::vector<uint8_t> cur;
    // nondecreasing sequences of given size over {0..dim-1}
    auto rec = [&](auto&& self, unsigned pos, uint8_t minLetter) -> void {
        if (pos == size) {
            out.push_back(Word(cur));
            return;
        }
        for (uint8_t c = minLetter; c < dim; ++c) {
            cur.push_back(c);
            self(self, pos + 1, c);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace strobs
