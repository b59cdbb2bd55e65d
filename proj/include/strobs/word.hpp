#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace strobs {

// An index word: a nonempty string of Lorentz indices in {0,...,D-1}. Packed
// into a u64, length in the top byte and letters in nibbles from the high end,
// so that the natural integer order is degree-lex order (shorter first, then
// lexicographic). Supports lengths up to 14 and letters up to 15, which covers
// every configured cutoff.
class Word {
public:
    static constexpr unsigned kMaxLen = 14;

    Word() : bits_(0) {}

    explicit Word(const std::vector<uint8_t>& letters) { pack(letters.data(), letters.size()); }
    Word(std::initializer_list<uint8_t> letters) { pack(letters.begin(), letters.size()); }

    static Word single(uint8_t letter) { return Word({letter}); }

    bool empty() const { return bits_ == 0; }
    unsigned length() const { return static_cast<unsigned>(bits_ >> 56); }
    unsigned rank() const { return length(); }

    uint8_t letter(unsigned i) const {
        return static_cast<uint8_t>((bits_ >> (52 - 4 * i)) & 0xF);
    }

    std::vector<uint8_t> letters() const {
        std::vector<uint8_t> v(length());
        for (unsigned i = 0; i < length(); ++i) v[i] = letter(i);
        return v;
    }

    uint64_t packed() const { return bits_; }
    static Word from_packed(uint64_t b) { Word w; w.bits_ = b; return w; }

    uint8_t first() const { return letter(0); }
    uint8_t last() const { return letter(length() - 1); }

    // letters [a, b) as a word; empty when a >= b
    Word sub(unsigned a, unsigned b) const {
        std::vector<uint8_t> v;
        for (unsigned i = a; i < b; ++i) v.push_back(letter(i));
        return Word(v);
    }
    Word prefix(unsigned n) const { return sub(0, n); }
    Word suffix_from(unsigned a) const { return sub(a, length()); }

    Word reversed() const {
        std::vector<uint8_t> v = letters();
        std::vector<uint8_t> r(v.rbegin(), v.rend());
        return Word(r);
    }

    // cyclic rotation by r: letters r, r+1, ..., r-1
    Word rotated(unsigned r) const {
        const unsigned n = length();
        std::vector<uint8_t> v(n);
        for (unsigned i = 0; i < n; ++i) v[i] = letter((i + r) % n);
        return Word(v);
    }

    friend Word concat(const Word& a, const Word& b) {
        std::vector<uint8_t> v = a.letters();
        for (unsigned i = 0; i < b.length(); ++i) v.push_back(b.letter(i));
        return Word(v);
    }

    // Letters sorted ascending; used as the index-multiset sector key.
    Word multiset_key() const;

    bool is_lyndon() const;

    // Lyndon factorization w = f1 f2 ... fk with f1 >= f2 >= ... (Duval).
    std::vector<Word> lyndon_factors() const;

    std::string str() const {
        std::string s;
        for (unsigned i = 0; i < length(); ++i) s += static_cast<char>(letter(i) < 10 ? '0' + letter(i) : 'a' + letter(i) - 10);
        return s;
    }

    static Word parse(const std::string& s) {
        std::vector<uint8_t> v;
        for (char c : s) {
            if (c >= '0' && c <= '9') v.push_back(static_cast<uint8_t>(c - '0'));
            else if (c >= 'a' && c <= 'f') v.push_back(static_cast<uint8_t>(c - 'a' + 10));
            else throw std::invalid_argument("Word::parse: bad digit");
        }
        return Word(v);
    }

    friend bool operator==(const Word& a, const Word& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Word& a, const Word& b) { return a.bits_ != b.bits_; }
    friend bool operator<(const Word& a, const Word& b) { return a.bits_ < b.bits_; }
    friend bool operator<=(const Word& a, const Word& b) { return a.bits_ <= b.bits_; }
    friend bool operator>(const Word& a, const Word& b) { return a.bits_ > b.bits_; }

private:
    void pack(const uint8_t* p, std::size_t n) {
        if (n > kMaxLen) throw std::invalid_argument("Word: rank above supported maximum 14");
        bits_ = static_cast<uint64_t>(n) << 56;
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] > 15) throw std::invalid_argument("Word: letter out of range");
            bits_ |= static_cast<uint64_t>(p[i] & 0xF) << (52 - 4 * i);
        }
    }

    uint64_t bits_;
};

// All words of given length over {0..D-1} with the given letter multiset,
// in increasing (lex) order.
std::vector<Word> words_of_multiset(const Word& multiset);

// All letter multisets of given size over {0..D-1} (as sorted words),
// increasing order.
std::vector<Word> multisets(unsigned size, unsigned dim);

} // namespace strobs
