#pragma once

#include "strobs/envelope.hpp"
#include "strobs/linalg.hpp"
#include "strobs/parallel.hpp"
#include "strobs/sector.hpp"

#include <map>
#include <optional>

namespace strobs {

// Exact kernel of a derivation on one weight sector. Columns enumerate the
// e-free sector monomials (h powers expanded); kernel vectors live over
// those columns.
struct KernelSector {
    SectorSpec spec;
    bool quantum = false;
    std::vector<SectorMono> cols;
    std::vector<SparseVec> kernel;
    // classical: dimensions of the graded slices (the derivation preserves
    // the degree); quantum: graded dimensions of the filtration quotients
    std::map<int, std::size_t> per_degree_dims;
};

KernelSector classical_kernel(const SectorSpec& spec, ExecMode mode = ExecMode::Serial);
KernelSector quantum_kernel(const SectorSpec& spec, const Metric& eta, ExecMode mode = ExecMode::Serial);

// Materialize kernel vectors as algebra elements.
CommPoly comm_from_coords(unsigned dim, const std::vector<SectorMono>& cols, const SparseVec& v);
NCPoly nc_from_coords(unsigned dim, const std::vector<SectorMono>& cols, const SparseVec& v);

// Lift of a homogeneous classical invariant to the quantum kernel: solves
// delta(Y) = 0 with the top-degree part of Y fixed to z. Returns nothing
// when the system is inconsistent (which would falsify the surjectivity of
// the projections at this sector).
std::optional<NCPoly> lift_alpha(const CommPoly& z, const Metric& eta, const SectorSpec& spec);

struct CorrespondenceReport {
    SectorSpec spec;
    std::map<int, std::size_t> classical_dims;
    std::map<int, std::size_t> quantum_dims;
    bool dims_match = false;
    bool containment = false; // projected quantum kernel inside the classical one
    bool lifts_ok = false;    // every classical kernel element lifted exactly
    std::string detail;

    bool pass() const { return dims_match && containment && lifts_ok; }
};

CorrespondenceReport correspondence_check(const SectorSpec& spec, const Metric& eta,
                                          ExecMode mode = ExecMode::Serial);

} // namespace strobs
