#pragma once

#include "strobs/symbols.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strobs {

// Raised when a sector exceeds the configured budget; suites report it and
// continue.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite computation sector: monomials h^j g_1...g_K of fixed total weight
// (weights: e = 1, R_w = rank w, h = 2), with optional extra constraints.
struct SectorSpec {
    unsigned dim = 4;
    unsigned weight = 1;
    int e_count = 0;                    // exact number of e symbols
    int max_order = -1;                 // max number of R symbols, -1 = any
    int max_h = -1;                     // max h power, -1 = any
    std::optional<Word> index_multiset; // combined letter multiset filter
    bool include_scalars = false;       // admit pure h^j scalars
    uint64_t budget = 5'000'000;        // monomial count budget

    std::string key() const;
};

struct SectorMono {
    unsigned h_pow = 0;
    Mono mono;

    friend bool operator==(const SectorMono& a, const SectorMono& b) {
        return a.h_pow == b.h_pow && a.mono == b.mono;
    }
    friend bool operator<(const SectorMono& a, const SectorMono& b) {
        if (a.h_pow != b.h_pow) return a.h_pow < b.h_pow;
        return a.mono < b.mono;
    }
};

// All monomials of the sector in deterministic (h-power, monomial) order.
std::vector<SectorMono> enumerate_sector(const SectorSpec& spec);

} // namespace strobs
