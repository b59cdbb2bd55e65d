#include "strobs/kernels.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace strobs {

namespace {

using RowKey = std::pair<unsigned, Mono>; // (h power, target monomial)
using Image = std::map<RowKey, Rat>;

// image of the column h^j * m under the given derivation, h powers expanded
template <typename Derive>
Image column_image(const SectorMono& col, Derive&& derive) {
    Image img;
    const auto result = derive(col.mono); // terms: monomial -> HPoly
    for (const auto& [m, c] : result.terms()) {
        for (int k = 0; k <= c.h_degree(); ++k) {
            const Rat x = c.coeff(static_cast<unsigned>(k));
            if (x.is_zero()) continue;
            img[{col.h_pow + static_cast<unsigned>(k), m}] += x;
        }
    }
    return img;
}

// equation matrix for a subset of columns (order preserved)
SparseMatrix assemble(const std::vector<Image>& images, const std::vector<std::size_t>& col_ids) {
    std::set<RowKey> keys;
    for (std::size_t c : col_ids)
        for (const auto& [k, v] : images[c]) keys.insert(k);
    std::map<RowKey, int> row_of;
    int next = 0;
    for (const RowKey& k : keys) row_of[k] = next++;

    SparseMatrix M;
    M.cols = static_cast<int>(col_ids.size());
    std::vector<SparseVec> rows(keys.size());
    for (std::size_t j = 0; j < col_ids.size(); ++j)
        for (const auto& [k, v] : images[col_ids[j]])
            rows[row_of.at(k)].emplace_back(static_cast<int>(j), v);
    for (auto& r : rows) M.add_row(std::move(r));
    return M;
}

struct DerivationAnalysis {
    std::vector<SectorMono> cols;
    std::vector<Image> images;
    std::vector<int> degrees;
};

template <typename Derive>
DerivationAnalysis analyze(const SectorSpec& spec, ExecMode mode, Derive&& derive) {
    DerivationAnalysis a;
    SectorSpec efree = spec;
    efree.e_count = 0;
    a.cols = enumerate_sector(efree);
    a.images.resize(a.cols.size());
    a.degrees.resize(a.cols.size());
    parallel_index(a.cols.size(), mode, [&](std::size_t i) {
        a.images[i] = column_image(a.cols[i], derive);
        a.degrees[i] = mono_degree(a.cols[i].mono);
    });
    return a;
}

std::vector<std::size_t> ids_with_degree(const DerivationAnalysis& a, int l, bool at_most) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < a.cols.size(); ++i)
        if (at_most ? (a.degrees[i] <= l) : (a.degrees[i] == l)) ids.push_back(i);
    return ids;
}

std::vector<int> degrees_present(const DerivationAnalysis& a) {
    std::set<int> s(a.degrees.begin(), a.degrees.end());
    return {s.begin(), s.end()};
}

// kernel of the submatrix, re-indexed to global column ids
std::vector<SparseVec> sub_nullspace(const DerivationAnalysis& a,
                                     const std::vector<std::size_t>& ids) {
    std::vector<SparseVec> local = nullspace(assemble(a.images, ids));
    std::vector<SparseVec> out;
    out.reserve(local.size());
    for (const SparseVec& v : local) {
        SparseVec g;
        g.reserve(v.size());
        for (const auto& [c, x] : v) g.emplace_back(static_cast<int>(ids[c]), x);
        out.push_back(std::move(g));
    }
    return out;
}

DerivationAnalysis analyze_classical(const SectorSpec& spec, ExecMode mode) {
    return analyze(spec, mode, [&](const Mono& m) {
        CommPoly p(spec.dim);
        p.add(m, HPoly(1));
        return partial_derivation(p);
    });
}

DerivationAnalysis analyze_quantum(const SectorSpec& spec, const Metric& eta, ExecMode mode) {
    return analyze(spec, mode, [&](const Mono& m) {
        NCPoly p(spec.dim);
        p.add_normal(m, HPoly(1));
        return delta_derivation(p, eta);
    });
}

} // namespace

KernelSector classical_kernel(const SectorSpec& spec, ExecMode mode) {
    DerivationAnalysis a = analyze_classical(spec, mode);
    KernelSector out;
    out.spec = spec;
    out.quantum = false;
    out.cols = a.cols;
    // the classical derivation is degree homogeneous: the kernel splits
    for (int l : degrees_present(a)) {
        auto vecs = sub_nullspace(a, ids_with_degree(a, l, /*at_most=*/false));
        out.per_degree_dims[l] = vecs.size();
        for (auto& v : vecs) out.kernel.push_back(std::move(v));
    }
    return out;
}

KernelSector quantum_kernel(const SectorSpec& spec, const Metric& eta, ExecMode mode) {
    DerivationAnalysis a = analyze_quantum(spec, eta, mode);
    KernelSector out;
    out.spec = spec;
    out.quantum = true;
    out.cols = a.cols;

    std::vector<std::size_t> all(a.cols.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    out.kernel = sub_nullspace(a, all);

    // graded dimensions of the filtration quotients
    std::size_t prev = 0;
    for (int l : degrees_present(a)) {
        const std::size_t nullity = sub_nullspace(a, ids_with_degree(a, l, /*at_most=*/true)).size();
        out.per_degree_dims[l] = nullity - prev;
        prev = nullity;
    }
    return out;
}

CommPoly comm_from_coords(unsigned dim, const std::vector<SectorMono>& cols, const SparseVec& v) {
    CommPoly p(dim);
    for (const auto& [c, x] : v)
        p.add(cols[c].mono, HPoly::h_power(cols[c].h_pow, x));
    return p;
}

NCPoly nc_from_coords(unsigned dim, const std::vector<SectorMono>& cols, const SparseVec& v) {
    NCPoly p(dim);
    for (const auto& [c, x] : v)
        p.add_normal(cols[c].mono, HPoly::h_power(cols[c].h_pow, x));
    return p;
}

std::optional<NCPoly> lift_alpha(const CommPoly& z, const Metric& eta, const SectorSpec& spec) {
    if (z.is_zero()) return NCPoly(spec.dim);
    // homogeneity: every term at one weight and one degree
    int l = -3;
    for (const auto& [m, c] : z.terms()) {
        const int d = mono_degree(m);
        if (l == -3) l = d;
        if (d != l) throw std::invalid_argument("lift_alpha: input not degree homogeneous");
        for (int k = 0; k <= c.h_degree(); ++k)
            if (!c.coeff(static_cast<unsigned>(k)).is_zero() &&
                mono_weight(m) + 2 * static_cast<unsigned>(k) != spec.weight)
                throw std::invalid_argument("lift_alpha: input not weight homogeneous");
    }

    DerivationAnalysis a = analyze_quantum(spec, eta, ExecMode::Serial);

    // fixed coordinates: the degree-l slice carries z, higher degrees zero
    std::map<std::size_t, Rat> fixed;
    {
        std::map<SectorMono, std::size_t> index;
        for (std::size_t i = 0; i < a.cols.size(); ++i) index[a.cols[i]] = i;
        for (const auto& [m, c] : z.terms()) {
            for (int k = 0; k <= c.h_degree(); ++k) {
                const Rat x = c.coeff(static_cast<unsigned>(k));
                if (x.is_zero()) continue;
                auto it = index.find({static_cast<unsigned>(k), m});
                if (it == index.end())
                    throw std::invalid_argument("lift_alpha: term outside the sector");
                fixed[it->second] = x;
            }
        }
    }

    const std::vector<std::size_t> unknowns = ids_with_degree(a, l - 1, /*at_most=*/true);

    // rhs = -delta(fixed part) over the union of row keys
    std::set<RowKey> keys;
    for (std::size_t c : unknowns)
        for (const auto& [k, v] : a.images[c]) keys.insert(k);
    for (const auto& [c, x] : fixed)
        for (const auto& [k, v] : a.images[c]) keys.insert(k);
    std::map<RowKey, int> row_of;
    int next = 0;
    for (const RowKey& k : keys) row_of[k] = next++;

    SparseMatrix A;
    A.cols = static_cast<int>(unknowns.size());
    std::vector<SparseVec> rows(keys.size());
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        for (const auto& [k, v] : a.images[unknowns[j]])
            rows[row_of.at(k)].emplace_back(static_cast<int>(j), v);
    for (auto& r : rows) A.add_row(std::move(r));

    std::vector<Rat> b(keys.size(), Rat(0));
    for (const auto& [c, x] : fixed)
        for (const auto& [k, v] : a.images[c]) b[row_of.at(k)] -= x * v;

    auto x = solve(A, b);
    if (!x) return std::nullopt;

    NCPoly out(spec.dim);
    for (const auto& [c, v] : fixed)
        out.add_normal(a.cols[c].mono, HPoly::h_power(a.cols[c].h_pow, v));
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        if ((*x)[j].is_zero()) continue;
        const SectorMono& sm = a.cols[unknowns[j]];
        out.add_normal(sm.mono, HPoly::h_power(sm.h_pow, (*x)[j]));
    }
    return out;
}

CorrespondenceReport correspondence_check(const SectorSpec& spec, const Metric& eta, ExecMode mode) {
    CorrespondenceReport rep;
    rep.spec = spec;

    DerivationAnalysis qa = analyze_quantum(spec, eta, mode);
    KernelSector ck = classical_kernel(spec, mode);
    rep.classical_dims = ck.per_degree_dims;

    // graded quantum dimensions and per-level kernels
    std::map<int, std::vector<SparseVec>> q_kernels; // degree -> kernel of the <=l matrix
    std::size_t prev = 0;
    for (int l : [&] {
             std::set<int> s(qa.degrees.begin(), qa.degrees.end());
             return std::vector<int>(s.begin(), s.end());
         }()) {
        auto vecs = sub_nullspace(qa, ids_with_degree(qa, l, /*at_most=*/true));
        rep.quantum_dims[l] = vecs.size() - prev;
        prev = vecs.size();
        q_kernels[l] = std::move(vecs);
    }
    rep.dims_match = true;
    {
        std::set<int> degrees;
        for (const auto& [l, n] : rep.classical_dims) degrees.insert(l);
        for (const auto& [l, n] : rep.quantum_dims) degrees.insert(l);
        for (int l : degrees) {
            const std::size_t c = rep.classical_dims.count(l) ? rep.classical_dims.at(l) : 0;
            const std::size_t q = rep.quantum_dims.count(l) ? rep.quantum_dims.at(l) : 0;
            if (c != q) {
                rep.dims_match = false;
                rep.detail += "degree " + std::to_string(l) + ": classical " + std::to_string(c) +
                              " vs quantum " + std::to_string(q) + "; ";
            }
        }
    }

    // containment: the degree-l slice of every <=l quantum kernel element
    // lies in the classical kernel at degree l. Columns of both analyses
    // coincide (same enumeration), so slices compare coordinate-wise.
    rep.containment = true;
    {
        // classical kernel vectors grouped by degree
        std::map<int, SpanBuilder> cls;
        for (const SparseVec& v : ck.kernel) {
            const int l = mono_degree(ck.cols[v.front().first].mono);
            cls.try_emplace(l, static_cast<int>(ck.cols.size())).first->second.insert(v);
        }
        for (const auto& [l, vecs] : q_kernels) {
            for (const SparseVec& v : vecs) {
                SparseVec slice;
                for (const auto& [c, x] : v)
                    if (mono_degree(qa.cols[c].mono) == l) slice.emplace_back(c, x);
                if (slice.empty()) continue;
                auto it = cls.find(l);
                const bool inside = (it != cls.end()) && it->second.contains(slice);
                if (!inside) {
                    rep.containment = false;
                    rep.detail += "projection escapes the classical kernel at degree " +
                                  std::to_string(l) + "; ";
                    break;
                }
            }
            if (!rep.containment) break;
        }
    }

    // every classical kernel element lifts exactly
    rep.lifts_ok = true;
    for (const SparseVec& v : ck.kernel) {
        const int l = mono_degree(ck.cols[v.front().first].mono);
        const CommPoly z = comm_from_coords(spec.dim, ck.cols, v);
        auto alpha = lift_alpha(z, eta, spec);
        if (!alpha) {
            rep.lifts_ok = false;
            rep.detail += "no lift at degree " + std::to_string(l) + " for " + z.str() + "; ";
            break;
        }
        if (!delta_derivation(*alpha, eta).is_zero() || !(project_pi(*alpha, l) == z)) {
            rep.lifts_ok = false;
            rep.detail += "lift fails verification at degree " + std::to_string(l) + "; ";
            break;
        }
    }
    return rep;
}

} // namespace strobs
