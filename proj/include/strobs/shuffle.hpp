#pragma once

#include "strobs/word.hpp"

#include <cstdint>
#include <map>

namespace strobs {

// Multiset of words with integer multiplicities.
using WordCount = std::map<Word, int64_t>;

// All interleavings of u and v preserving the internal order of each; the
// multiset has C(|u|+|v|, |u|) entries counted with multiplicity.
WordCount shuffle(const Word& u, const Word& v);

// Shuffle product of a list of words (associative, commutative).
// An empty list yields the empty word with multiplicity 1.
WordCount shuffle_all(const std::vector<Word>& factors);

int64_t binomial(unsigned n, unsigned k);

} // namespace strobs
