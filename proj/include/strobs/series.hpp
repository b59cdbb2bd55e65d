#pragma once

#include "strobs/clifford.hpp"
#include "strobs/envelope.hpp"
#include "strobs/parallel.hpp"

#include <map>
#include <string>
#include <vector>

namespace strobs {

// One lambda-order of a Clifford-valued series with monodromy coefficients.
struct CliffordOrder {
    std::map<Blade, TensorElement> comps;
};

// Truncated expansion of the log-monodromy generating series with Clifford
// parameter matrices: order n holds sum_w R_w Gamma^{w_1}..Gamma^{w_n},
// coefficients reduced onto the basis. Products of single gammas collapse
// to one signed blade, and all words of one letter multiset share it.
struct LogPhi {
    unsigned dim = 4;
    unsigned order = 0;
    std::vector<CliffordOrder> orders; // orders[n-1] is the lambda^n slice

    const CliffordOrder& at(unsigned n) const { return orders.at(n - 1); }
};

LogPhi log_phi_expand(unsigned dim, unsigned max_order, const Metric& eta,
                      ExecMode mode = ExecMode::Serial);

struct SeriesCheck {
    bool pass = true;
    std::string counterexample;
};

// Only the vector and bivector components may survive.
SeriesCheck check_grade_pattern(const LogPhi& lp);

// Vector (odd order) and antisymmetric bivector (even order) component
// series extracted from the expansion.
struct PRSeries {
    unsigned dim = 4;
    unsigned order = 0;
    std::map<unsigned, std::vector<TensorElement>> p;                      // odd orders
    std::map<unsigned, std::map<std::pair<unsigned, unsigned>, TensorElement>> r; // even orders

    TensorElement p_at(unsigned n, unsigned mu) const;
    TensorElement r_at(unsigned n, unsigned mu, unsigned nu) const; // antisymmetric
};

struct ExtractResult {
    PRSeries series;
    SeriesCheck parity;
};

ExtractResult extract_pr_series(const LogPhi& lp);

// The three quantized bracket relations between the component series,
// matched coefficient by coefficient in (lambda, kappa) through the
// geometric-series kernel; also asserts the kernel division is polynomial.
SeriesCheck verify_pr_brackets(const PRSeries& pr, unsigned cutoff, const Metric& eta,
                               ExecMode mode = ExecMode::Serial);

// Charge series from the trace quadratic form: B(n) = sum_{a+b=n} p.p - 2 r..r
NCPoly b_series(const PRSeries& pr, unsigned n, const Metric& eta);

// [B(n), B(m)] = 0 for all even n + m <= cutoff.
SeriesCheck verify_b_commutativity(const PRSeries& pr, unsigned cutoff, const Metric& eta,
                                   ExecMode mode = ExecMode::Serial);

// delta applied to each order equals the commutator with e_mu Gamma^mu at
// the previous order, as an identity in the extended enveloping algebra
// tensored with the Clifford algebra.
SeriesCheck verify_delta_logphi(const LogPhi& lp, unsigned cutoff, const Metric& eta,
                                ExecMode mode = ExecMode::Serial);

} // namespace strobs
