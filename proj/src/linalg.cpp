#include "strobs/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace strobs {

SparseVec sparse_axpy(const SparseVec& x, const Rat& a, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            Rat v = a * y[j].second;
            if (!v.is_zero()) out.emplace_back(y[j].first, v);
            ++j;
        } else {
            Rat v = x[i].second + a * y[j].second;
            if (!v.is_zero()) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

bool sparse_is_zero(const SparseVec& v) {
    for (const auto& [c, x] : v)
        if (!x.is_zero()) return false;
    return true;
}

void SparseMatrix::add_row(SparseVec r, std::string label) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec clean;
    for (const auto& [c, x] : r) {
        if (c < 0 || c >= cols) throw std::out_of_range("SparseMatrix: column out of range");
        if (x.is_zero()) continue;
        if (!clean.empty() && clean.back().first == c) clean.back().second += x;
        else clean.emplace_back(c, x);
    }
    clean.erase(std::remove_if(clean.begin(), clean.end(),
                               [](const auto& p) { return p.second.is_zero(); }),
                clean.end());
    rows.push_back(std::move(clean));
    row_labels.push_back(std::move(label));
}

std::vector<Rat> SparseMatrix::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("SparseMatrix::apply size");
    std::vector<Rat> out(rows.size(), Rat(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, x] : rows[r]) out[r] += x * v[c];
    return out;
}

SparseVec Rref::residual(const SparseVec& v) const {
    SparseVec cur = v;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int pc = pivot_cols[r];
        auto it = std::lower_bound(cur.begin(), cur.end(), pc,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it == cur.end() || it->first != pc) continue;
        cur = sparse_axpy(cur, -it->second, rows[r]);
    }
    return cur;
}

Rref rref(const SparseMatrix& m) {
    Rref out;
    out.cols = m.cols;

    std::vector<SparseVec> work = m.rows;
    std::vector<char> used(work.size(), 0);

    for (int col = 0; col < m.cols; ++col) {
        // deterministic pivot: this column, first remaining row
        int found = -1;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (used[r] || work[r].empty()) continue;
            if (work[r].front().first == col) { found = static_cast<int>(r); break; }
        }
        if (found < 0) {
            out.free_cols.push_back(col);
            continue;
        }
        used[found] = 1;
        SparseVec piv = std::move(work[found]);
        Rat inv = Rat(1) / piv.front().second;
        for (auto& [c, x] : piv) x *= inv;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (used[r] || work[r].empty()) continue;
            if (work[r].front().first == col)
                work[r] = sparse_axpy(work[r], -work[r].front().second, piv);
        }
        // back substitution keeps the accepted rows fully reduced
        for (std::size_t r = 0; r < out.rows.size(); ++r) {
            auto it = std::lower_bound(out.rows[r].begin(), out.rows[r].end(), col,
                                       [](const auto& p, int c) { return p.first < c; });
            if (it != out.rows[r].end() && it->first == col)
                out.rows[r] = sparse_axpy(out.rows[r], -it->second, piv);
        }
        out.rows.push_back(std::move(piv));
        out.pivot_cols.push_back(col);
    }
    return out;
}

std::size_t rank_descending(const SparseMatrix& m) {
    // mirrored strategy: eliminate on the largest column of each row;
    // the rank must agree with rref()
    std::vector<SparseVec> piv;
    auto largest = [](const SparseVec& v) { return v.back().first; };
    std::size_t rank = 0;
    for (SparseVec row : m.rows) {
        while (!row.empty()) {
            const int lead = largest(row);
            bool reduced = false;
            for (const SparseVec& p : piv) {
                if (largest(p) == lead) {
                    Rat f = row.back().second / p.back().second;
                    row = sparse_axpy(row, -f, p);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) break;
        }
        if (!row.empty()) {
            piv.push_back(std::move(row));
            ++rank;
        }
    }
    return rank;
}

std::vector<SparseVec> nullspace(const SparseMatrix& m) {
    Rref e = rref(m);
    std::vector<SparseVec> basis;
    basis.reserve(e.free_cols.size());

    for (int fc : e.free_cols) {
        SparseVec v;
        v.emplace_back(fc, Rat(1));
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            const SparseVec& row = e.rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), fc,
                                       [](const auto& p, int c) { return p.first < c; });
            if (it != row.end() && it->first == fc && !it->second.is_zero())
                v.emplace_back(e.pivot_cols[r], -it->second);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const SparseMatrix& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows.size()) throw std::invalid_argument("solve: rhs size mismatch");
    SparseMatrix aug;
    aug.cols = m.cols + 1;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        SparseVec row = m.rows[r];
        if (!b[r].is_zero()) row.emplace_back(m.cols, b[r]);
        aug.rows.push_back(std::move(row));
    }
    Rref e = rref(aug);
    std::vector<Rat> x(m.cols, Rat(0));
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        if (e.pivot_cols[r] == m.cols) return std::nullopt; // inconsistent: 0 = 1 row
        const SparseVec& row = e.rows[r];
        Rat rhs(0);
        if (!row.empty() && row.back().first == m.cols) rhs = row.back().second;
        x[e.pivot_cols[r]] = rhs;
    }
    return x;
}

bool SpanBuilder::insert(SparseVec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (v.empty()) break;
        const int pc = pivot_cols_[r];
        auto it = std::lower_bound(v.begin(), v.end(), pc,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != v.end() && it->first == pc) v = sparse_axpy(v, -it->second, rows_[r]);
    }
    if (v.empty()) return false;
    Rat inv = Rat(1) / v.front().second;
    for (auto& [c, x] : v) x *= inv;
    const int pc = v.front().first;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), pc,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != rows_[r].end() && it->first == pc)
            rows_[r] = sparse_axpy(rows_[r], -it->second, v);
    }
    rows_.push_back(std::move(v));
    pivot_cols_.push_back(pc);
    return true;
}

bool SpanBuilder::contains(const SparseVec& v) const {
    SparseVec cur = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (cur.empty()) return true;
        const int pc = pivot_cols_[r];
        auto it = std::lower_bound(cur.begin(), cur.end(), pc,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != cur.end() && it->first == pc) cur = sparse_axpy(cur, -it->second, rows_[r]);
    }
    return cur.empty();
}

} // namespace strobs
