#include "strobs/basis.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace strobs {

using ordered_json = nlohmann::ordered_json;

uint64_t witt_dimension(unsigned dim, unsigned rank) {
    if (rank == 0) throw std::invalid_argument("witt_dimension: rank must be >= 1");
    // moebius over divisors of rank
    auto moebius = [](unsigned n) -> int {
        int mu = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                mu = -mu;
            }
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    mpz_class acc = 0;
    for (unsigned d = 1; d <= rank; ++d) {
        if (rank % d != 0) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), dim, rank / d);
        acc += mu * p;
    }
    mpz_class q = acc / rank;
    return q.get_ui();
}

WordCount standard_bracketing(const Word& lyndon) {
    if (lyndon.length() == 1) return {{lyndon, 1}};
    // standard factorization: split before the smallest proper suffix
    const unsigned n = lyndon.length();
    unsigned split = 1;
    Word best = lyndon.suffix_from(1);
    for (unsigned s = 2; s < n; ++s) {
        Word suf = lyndon.suffix_from(s);
        // compare as words (same-length comparison is lexicographic; a
        // shorter word that is a prefix of the other counts as smaller)
        const unsigned m = std::min(suf.length(), best.length());
        bool smaller = false, decided = false;
        for (unsigned i = 0; i < m; ++i) {
            if (suf.letter(i) != best.letter(i)) {
                smaller = suf.letter(i) < best.letter(i);
                decided = true;
                break;
            }
        }
        if (!decided) smaller = suf.length() < best.length();
        if (smaller) {
            best = suf;
            split = s;
        }
    }
    const WordCount left = standard_bracketing(lyndon.prefix(split));
    const WordCount right = standard_bracketing(lyndon.suffix_from(split));
    WordCount out;
    for (const auto& [u, cu] : left)
        for (const auto& [v, cv] : right) {
            out[concat(u, v)] += cu * cv;
            out[concat(v, u)] -= cu * cv;
        }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

BasisBlock BasisBlock::build(const Word& multiset) {
    BasisBlock block;
    block.multiset_ = multiset;

    // Lyndon words of the block, ascending (generated in lex order already)
    for (const Word& w : words_of_multiset(multiset))
        if (w.is_lyndon()) block.basis_.push_back(w);
    const std::size_t L = block.basis_.size();

    std::unordered_map<uint64_t, uint32_t> lyndon_index;
    lyndon_index.reserve(L * 2);
    for (std::size_t i = 0; i < L; ++i) lyndon_index[block.basis_[i].packed()] = static_cast<uint32_t>(i);

    // The pairing matrix G_{i,m} = <l_i, b_m> is unipotent triangular: the
    // expansion of b_m has l_m as its smallest word with coefficient 1, so
    // G_{i,m} = 0 for i < m and 1 on the diagonal. The coordinates of [w]
    // over the basis solve <w, b_m> = lambda_m + sum_{i>m} G_{i,m} lambda_i,
    // eliminated from the largest index downwards. down_links_[i] lists the
    // pairs (m, G_{i,m}) with m < i that a settled lambda_i feeds into.
    block.down_links_.resize(L);
    for (std::size_t m = 0; m < L; ++m) {
        const WordCount bracket = standard_bracketing(block.basis_[m]);
        if (bracket.begin()->first != block.basis_[m] || bracket.begin()->second != 1)
            throw std::logic_error("BasisBlock: bracketing of " + block.basis_[m].str() +
                                   " is not unipotent at its own word");
        for (const auto& [v, c] : bracket) {
            block.occurs_[v.packed()].emplace_back(static_cast<uint32_t>(m), c);
            if (block.basis_[m] < v) {
                auto it = lyndon_index.find(v.packed());
                if (it != lyndon_index.end())
                    block.down_links_[it->second].emplace_back(static_cast<uint32_t>(m), c);
            }
        }
    }
    return block;
}

const RedRow& BasisBlock::reduce(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(w.packed());
        if (it != cache_.end()) return *it->second;
    }
    if (w.multiset_key() != multiset_)
        throw std::invalid_argument("BasisBlock::reduce: word outside the block");

    std::map<uint32_t, Rat> acc; // pending right-hand sides
    if (auto it = occurs_.find(w.packed()); it != occurs_.end())
        for (const auto& [i, c] : it->second) acc[i] = Rat(c);
    std::map<uint32_t, Rat> lambda;
    while (!acc.empty()) {
        const auto top = std::prev(acc.end());
        const uint32_t i = top->first;
        const Rat val = top->second;
        acc.erase(top);
        if (val.is_zero()) continue;
        lambda[i] = val;
        for (const auto& [m, c] : down_links_[i]) acc[m] -= Rat(c) * val;
    }
    auto row = std::make_unique<RedRow>();
    row->reserve(lambda.size());
    for (const auto& [i, v] : lambda) row->emplace_back(basis_[i], v);

    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(w.packed(), std::move(row));
    return *it->second;
}

ShuffleBasis ShuffleBasis::build(unsigned dim, unsigned rank, ExecMode mode) {
    if (dim < 2 || dim > 15) throw std::invalid_argument("ShuffleBasis: dimension out of range");
    if (rank < 1 || rank > Word::kMaxLen) throw std::invalid_argument("ShuffleBasis: rank out of range");

    ShuffleBasis t;
    t.dim_ = dim;
    t.rank_ = rank;

    const std::vector<Word> keys = multisets(rank, dim);
    std::vector<std::unique_ptr<BasisBlock>> blocks(keys.size());
    std::vector<std::vector<Word>> block_words(keys.size());
    parallel_index(keys.size(), mode, [&](std::size_t i) {
        blocks[i] = std::make_unique<BasisBlock>(BasisBlock::build(keys[i]));
        block_words[i] = words_of_multiset(keys[i]);
        for (const Word& w : block_words[i]) blocks[i]->reduce(w);
    });

    for (std::size_t i = 0; i < keys.size(); ++i) {
        t.basis_.insert(t.basis_.end(), blocks[i]->basis().begin(), blocks[i]->basis().end());
        for (const Word& w : block_words[i]) t.reduction_[w.packed()] = blocks[i]->reduce(w);
    }
    std::sort(t.basis_.begin(), t.basis_.end());

    if (t.basis_.size() != witt_dimension(dim, rank))
        throw std::logic_error("ShuffleBasis: dimension disagrees with the necklace formula");
    return t;
}

const RedRow& ShuffleBasis::reduce(const Word& w) const {
    if (w.rank() != rank_) throw std::invalid_argument("ShuffleBasis::reduce: rank mismatch");
    auto it = reduction_.find(w.packed());
    if (it == reduction_.end()) throw std::invalid_argument("ShuffleBasis::reduce: unknown word " + w.str());
    return it->second;
}

std::string ShuffleBasis::to_json() const {
    ordered_json j;
    j["format"] = "strobs-basis/1";
    j["dim"] = dim_;
    j["rank"] = rank_;
    j["dimension"] = basis_.size();
    ordered_json basis = ordered_json::array();
    for (const Word& w : basis_) basis.push_back(w.str());
    j["basis"] = std::move(basis);

    // non-basis rows only, in degree-lex order
    std::vector<Word> keys;
    keys.reserve(reduction_.size());
    for (const auto& [bits, row] : reduction_) keys.push_back(Word::from_packed(bits));
    std::sort(keys.begin(), keys.end());
    ordered_json red = ordered_json::object();
    for (const Word& w : keys) {
        const RedRow& row = reduction_.at(w.packed());
        if (row.size() == 1 && row[0].first == w) continue;
        ordered_json entries = ordered_json::array();
        for (const auto& [b, c] : row) entries.push_back(ordered_json::array({b.str(), c.str()}));
        red[w.str()] = std::move(entries);
    }
    j["reduction"] = std::move(red);
    return j.dump();
}

ShuffleBasis ShuffleBasis::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text); // throws on malformed input
    if (j.at("format").get<std::string>() != "strobs-basis/1")
        throw std::runtime_error("basis cache: unknown format version");

    ShuffleBasis t;
    t.dim_ = j.at("dim").get<unsigned>();
    t.rank_ = j.at("rank").get<unsigned>();

    for (const auto& s : j.at("basis")) {
        Word w = Word::parse(s.get<std::string>());
        if (w.rank() != t.rank_ || !w.is_lyndon())
            throw std::runtime_error("basis cache: invalid basis word");
        t.basis_.push_back(w);
        t.reduction_[w.packed()] = {{w, Rat(1)}};
    }
    if (!std::is_sorted(t.basis_.begin(), t.basis_.end()) ||
        t.basis_.size() != witt_dimension(t.dim_, t.rank_))
        throw std::runtime_error("basis cache: basis fails the dimension check");

    for (const auto& [key, entries] : j.at("reduction").items()) {
        Word w = Word::parse(key);
        if (w.rank() != t.rank_) throw std::runtime_error("basis cache: bad reduction key");
        RedRow row;
        for (const auto& e : entries) {
            Word b = Word::parse(e.at(0).get<std::string>());
            if (!std::binary_search(t.basis_.begin(), t.basis_.end(), b))
                throw std::runtime_error("basis cache: reduction references non-basis word");
            row.emplace_back(b, Rat::from_string(e.at(1).get<std::string>()));
        }
        if (!std::is_sorted(row.begin(), row.end(),
                            [](const auto& a, const auto& b) { return a.first < b.first; }))
            throw std::runtime_error("basis cache: unsorted reduction row");
        t.reduction_[w.packed()] = std::move(row);
    }

    // every word of every multiset must be covered
    for (const Word& m : multisets(t.rank_, t.dim_))
        for (const Word& w : words_of_multiset(m))
            if (t.reduction_.find(w.packed()) == t.reduction_.end())
                throw std::runtime_error("basis cache: incomplete reduction table");
    return t;
}

// ---------------------------------------------------------------------------
// Echelon cross-check.
//
// The reduction rows of the non-Lyndon words are themselves shuffle sums
// (the shuffle of the word's Lyndon factorization), each having its word as
// the unique largest term, so they are an echelon set inside the relation
// span V_N with pivot = largest word. Reducing every generating relation
// sh(u,v) to zero against the table proves V_N equals that span exactly;
// the rank of V_N is then the number of non-Lyndon words.
// ---------------------------------------------------------------------------

EchelonCheck verify_shuffle_echelon(unsigned dim, unsigned rank, ExecMode mode) {
    EchelonCheck out;
    const ShuffleBasis& table = basis_table(dim, rank);

    uint64_t words = 1;
    for (unsigned i = 0; i < rank; ++i) words *= dim;
    out.word_count = words;
    out.formula_dim = witt_dimension(dim, rank);
    out.quotient_dim = table.dimension();
    out.relation_rank = words - out.quotient_dim;

    if (rank == 1) {
        out.relations_close = true; // V_1 = 0, nothing to reduce
        return out;
    }

    // Enumerate generating relations sh(u, v), |u| = K <= |v|, u <= v when
    // the lengths tie. Grouped by block for cache locality.
    struct Job { Word u, v; };
    std::vector<Job> jobs;
    for (unsigned K = 1; 2 * K <= rank; ++K) {
        const unsigned L = rank - K;
        std::vector<Word> us, vs;
        for (const Word& mu : multisets(K, dim))
            for (const Word& u : words_of_multiset(mu)) us.push_back(u);
        for (const Word& mv : multisets(L, dim))
            for (const Word& v : words_of_multiset(mv)) vs.push_back(v);
        for (const Word& u : us)
            for (const Word& v : vs) {
                if (K == L && v < u) continue;
                jobs.push_back({u, v});
            }
    }

    std::vector<char> ok(jobs.size(), 0);
    parallel_index(jobs.size(), mode, [&](std::size_t i) {
        std::map<Word, Rat> acc;
        for (const auto& [w, c] : shuffle(jobs[i].u, jobs[i].v)) {
            const Rat coeff(c, 1);
            for (const auto& [b, r] : table.reduce(w)) acc[b] += coeff * r;
        }
        bool zero = true;
        for (const auto& [b, r] : acc)
            if (!r.is_zero()) { zero = false; break; }
        ok[i] = zero ? 1 : 0;
    });

    out.relations_close = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    return out;
}

// ---------------------------------------------------------------------------
// Registry + disk cache
// ---------------------------------------------------------------------------

namespace {

std::shared_mutex g_registry_mutex;
std::map<std::pair<unsigned, unsigned>, std::unique_ptr<ShuffleBasis>> g_registry;
std::string g_cache_dir;

std::string cache_file(unsigned dim, unsigned rank) {
    return g_cache_dir + "/basis-D" + std::to_string(dim) + "-N" + std::to_string(rank) + ".json";
}

std::unique_ptr<ShuffleBasis> load_or_build(unsigned dim, unsigned rank) {
    if (!g_cache_dir.empty()) {
        std::ifstream in(cache_file(dim, rank));
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                auto t = std::make_unique<ShuffleBasis>(ShuffleBasis::from_json(ss.str()));
                if (t->dim() == dim && t->rank() == rank) return t;
            } catch (const std::exception&) {
                // corrupt cache: refuse it and recompute below
            }
        }
    }
    auto t = std::make_unique<ShuffleBasis>(ShuffleBasis::build(dim, rank));
    if (!g_cache_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(g_cache_dir, ec);
        std::ofstream outf(cache_file(dim, rank), std::ios::trunc);
        if (outf) outf << t->to_json();
    }
    return t;
}

} // namespace

namespace {

std::shared_mutex g_block_mutex;
std::map<uint64_t, std::unique_ptr<BasisBlock>> g_blocks;

} // namespace

const BasisBlock& basis_block(const Word& multiset) {
    const uint64_t key = multiset.packed();
    {
        std::shared_lock lock(g_block_mutex);
        auto it = g_blocks.find(key);
        if (it != g_blocks.end()) return *it->second;
    }
    std::unique_lock lock(g_block_mutex);
    auto it = g_blocks.find(key);
    if (it == g_blocks.end())
        it = g_blocks.emplace(key, std::make_unique<BasisBlock>(BasisBlock::build(multiset))).first;
    return *it->second;
}

const ShuffleBasis& basis_table(unsigned dim, unsigned rank) {
    const auto key = std::make_pair(dim, rank);
    {
        std::shared_lock lock(g_registry_mutex);
        auto it = g_registry.find(key);
        if (it != g_registry.end()) return *it->second;
    }
    std::unique_lock lock(g_registry_mutex);
    auto it = g_registry.find(key);
    if (it == g_registry.end()) it = g_registry.emplace(key, load_or_build(dim, rank)).first;
    return *it->second;
}

void set_basis_cache_dir(const std::string& dir) {
    std::unique_lock lock(g_registry_mutex);
    g_cache_dir = dir;
}

void clear_basis_registry() {
    {
        std::unique_lock lock(g_block_mutex);
        g_blocks.clear();
    }
    std::unique_lock lock(g_registry_mutex);
    g_registry.clear();
}

} // namespace strobs
