#pragma once

#include "strobs/metric.hpp"
#include "strobs/parallel.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace strobs {

struct SweepResult {
    std::string name;
    std::string sector;
    bool pass = false;
    std::map<std::string, int64_t> dims;
    std::string counterexample;
};

// Jacobi identity of the extended bracket over all generator triples with
// rank sum below the cutoff (translations count rank 1).
SweepResult verify_jacobi(unsigned dim, unsigned max_total_rank, const Metric& eta,
                          ExecMode mode = ExecMode::Serial);

// Control: wiring the formal rank-1 evaluation of the component bracket in
// place of centrality must violate the Jacobi identity somewhere below the
// cutoff. Passes when a violation is found; records the first witness.
SweepResult verify_jacobi_naive_control(unsigned dim, unsigned max_total_rank, const Metric& eta,
                                        ExecMode mode = ExecMode::Serial);

// The derivation formula applied to every proper shuffle sum of rank <=
// max_rank must vanish after reduction.
SweepResult verify_delta_well_defined(unsigned dim, unsigned max_rank, const Metric& eta,
                                      ExecMode mode = ExecMode::Serial);

// delta[A,B] = [delta A, B] + [A, delta B] over generator pairs with rank
// sum <= max_rank_sum.
SweepResult verify_delta_leibniz(unsigned dim, unsigned max_rank_sum, const Metric& eta,
                                 ExecMode mode = ExecMode::Serial);

// delta kills the linear and quadratic quantum invariants of every word with
// rank in [3, max_rank].
SweepResult verify_z2(unsigned dim, unsigned max_rank, const Metric& eta,
                      ExecMode mode = ExecMode::Serial);

// The three projection intertwining rules on randomized homogeneous pairs
// of weight <= max_weight.
SweepResult verify_pi_intertwine(unsigned dim, unsigned pair_count, unsigned max_weight,
                                 const Metric& eta, uint64_t seed,
                                 ExecMode mode = ExecMode::Serial);

} // namespace strobs
