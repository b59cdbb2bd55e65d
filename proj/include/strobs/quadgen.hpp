#pragma once

#include "strobs/parallel.hpp"
#include "strobs/tensor.hpp"

#include <map>
#include <string>

namespace strobs {

// The subalgebra spanned by components with nonzero first and last index,
// realized as the reduction image of that raw-word span.
struct QuadGenReport {
    unsigned dim = 4;
    unsigned max_rank = 6;
    bool with_exceptionals = true;

    std::map<unsigned, std::size_t> r0_dims;        // dim of the subalgebra per rank
    std::map<unsigned, std::size_t> generated_dims; // dim reached by bracket closure
    std::map<unsigned, bool> generated;             // per-rank verdict
    std::map<unsigned, bool> exceptional_in_span;   // odd ranks >= 5
    bool closed = true;                             // bracket closure of the subalgebra
    std::string counterexample;

    bool all_generated() const {
        for (const auto& [r, ok] : generated)
            if (!ok) return false;
        return true;
    }
};

// Sum of the odd-rank hairpin components R_{i 0...0 i} over the spatial
// indices, reduced to the basis. These are the generators that cannot be
// reached by brackets from low rank.
TensorElement exceptional_element(unsigned dim, unsigned rank);

// (i) verify the span is closed under the bracket up to max_rank;
// (ii) seed with the rank <= 3 span plus (optionally) the odd-rank
// exceptional elements and close under brackets, comparing dimensions per
// rank.
QuadGenReport quadratic_generation_check(unsigned dim, unsigned max_rank, const Metric& eta,
                                         bool with_exceptionals, ExecMode mode = ExecMode::Serial);

} // namespace strobs
