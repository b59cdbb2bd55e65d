#pragma once

#include "strobs/parallel.hpp"
#include "strobs/rational.hpp"
#include "strobs/shuffle.hpp"
#include "strobs/word.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace strobs {

// Sparse expansion of a word in basis words, sorted by word.
using RedRow = std::vector<std::pair<Word, Rat>>;

// Witt / necklace number (1/N) sum_{d|N} mu(d) D^{N/d}: the dimension of the
// rank-N sector of the monodromy space.
uint64_t witt_dimension(unsigned dim, unsigned rank);

// Reduction data for one letter-multiset block of the rank-N word space.
// Shuffle relations never mix letter multisets, so each block reduces
// independently. Basis words are the words no relation has as its largest
// word; with the largest-word pivot convention these are exactly the Lyndon
// words of the block.
//
// Words are reduced by pairing against the standard bracketings of the
// block's Lyndon words: proper shuffles annihilate Lie elements, and the
// pairing matrix between Lyndon words and their bracketings is unipotent
// triangular, so one sparse backward substitution per word yields its
// coordinates in the quotient. Each word reduces independently; rows are
// cached on first use so large blocks only pay for the words touched.
class BasisBlock {
public:
    static BasisBlock build(const Word& multiset); // precompute only

    BasisBlock() = default;
    BasisBlock(const BasisBlock&) = delete;
    BasisBlock& operator=(const BasisBlock&) = delete;
    BasisBlock(BasisBlock&& o) noexcept
        : multiset_(o.multiset_), basis_(std::move(o.basis_)), occurs_(std::move(o.occurs_)),
          down_links_(std::move(o.down_links_)), cache_(std::move(o.cache_)) {}
    BasisBlock& operator=(BasisBlock&& o) noexcept {
        multiset_ = o.multiset_;
        basis_ = std::move(o.basis_);
        occurs_ = std::move(o.occurs_);
        down_links_ = std::move(o.down_links_);
        cache_ = std::move(o.cache_);
        return *this;
    }

    const Word& multiset() const { return multiset_; }
    const std::vector<Word>& basis() const { return basis_; }

    // reduction row of a word of this block (thread-safe, memoized)
    const RedRow& reduce(const Word& w) const;

private:
    Word multiset_;
    std::vector<Word> basis_;
    // transpose pairing index: word -> [(lyndon index, coefficient)]
    std::unordered_map<uint64_t, std::vector<std::pair<uint32_t, int64_t>>> occurs_;
    // triangular couplings: settled coordinate i feeds pairs (m < i, G_im)
    std::vector<std::vector<std::pair<uint32_t, int64_t>>> down_links_;

    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<uint64_t, std::unique_ptr<RedRow>> cache_;
};

// Expansion of the standard (split at the smallest proper suffix)
// bracketing of a Lyndon word; integer coefficients, the word itself is the
// lexicographically smallest term with coefficient one.
WordCount standard_bracketing(const Word& lyndon);

// Process-wide lazy per-block registry used by the reduction hot path; high
// ranks only ever pay for the letter multisets actually touched.
const BasisBlock& basis_block(const Word& multiset);

// Canonical basis and reduction table of the rank-N monodromy sector for a
// given dimension: the quotient of the D^N words by the span of all proper
// shuffle sums.
class ShuffleBasis {
public:
    static ShuffleBasis build(unsigned dim, unsigned rank, ExecMode mode = ExecMode::Serial);

    unsigned dim() const { return dim_; }
    unsigned rank() const { return rank_; }

    const std::vector<Word>& basis_words() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }
    bool is_basis_word(const Word& w) const { return reduce(w).size() == 1 && reduce(w)[0].first == w; }

    // Expansion of an arbitrary rank-N word in basis words.
    const RedRow& reduce(const Word& w) const;

    // Serialization for the per-(D,N) disk cache.
    std::string to_json() const;
    static ShuffleBasis from_json(const std::string& text); // throws on corruption

private:
    unsigned dim_ = 0, rank_ = 0;
    std::vector<Word> basis_;
    std::unordered_map<uint64_t, RedRow> reduction_;
};

// Result of the independent dimension computation: echelonize the span of
// all shuffle relations (pivot = largest word) and verify completeness by
// reducing every generating relation to zero.
struct EchelonCheck {
    uint64_t word_count = 0;
    uint64_t relation_rank = 0;
    uint64_t quotient_dim = 0;
    uint64_t formula_dim = 0;
    bool relations_close = false; // every shuffle sum reduced to zero
    bool agrees() const { return relations_close && quotient_dim == formula_dim; }
};

EchelonCheck verify_shuffle_echelon(unsigned dim, unsigned rank, ExecMode mode = ExecMode::Serial);

// Process-wide table registry with optional disk cache.
const ShuffleBasis& basis_table(unsigned dim, unsigned rank);
void set_basis_cache_dir(const std::string& dir); // empty string disables
void clear_basis_registry();

} // namespace strobs
