#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace strobs {

// Diagonal metric eta with entries +-1. The verified identities are
// signature independent; the default is mostly-minus Minkowski.
class Metric {
public:
    Metric() : diag_{+1, -1, -1, -1} {}
    explicit Metric(std::vector<int8_t> diag) : diag_(std::move(diag)) {
        if (diag_.empty()) throw std::invalid_argument("Metric: empty signature");
        for (int8_t s : diag_)
            if (s != 1 && s != -1) throw std::invalid_argument("Metric: entries must be +-1");
    }

    // "+---" style signature string
    static Metric parse(const std::string& s) {
        std::vector<int8_t> d;
        for (char c : s) {
            if (c == '+') d.push_back(+1);
            else if (c == '-') d.push_back(-1);
            else throw std::invalid_argument("Metric: bad signature character");
        }
        return Metric(d);
    }

    static Metric mostly_minus(unsigned dim) {
        std::vector<int8_t> d(dim, -1);
        d[0] = +1;
        return Metric(d);
    }

    unsigned dim() const { return static_cast<unsigned>(diag_.size()); }

    // eta_{mu nu}; for diagonal eta the inverse has the same entries.
    int eta(unsigned mu, unsigned nu) const { return mu == nu ? diag_[mu] : 0; }

    std::string str() const {
        std::string s;
        for (int8_t d : diag_) s += (d > 0 ? '+' : '-');
        return s;
    }

    friend bool operator==(const Metric& a, const Metric& b) { return a.diag_ == b.diag_; }

private:
    std::vector<int8_t> diag_;
};

} // namespace strobs
