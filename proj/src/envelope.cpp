#include "strobs/envelope.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace strobs {

NCPoly NCPoly::scalar(unsigned dim, const HPoly& c) {
    NCPoly p(dim);
    p.add_normal({}, c);
    return p;
}

NCPoly NCPoly::generator(unsigned dim, const Sym& s, const HPoly& c) {
    NCPoly p(dim);
    p.add_normal({s}, c);
    return p;
}

void NCPoly::add_normal(Mono m, const HPoly& c) {
    if (c.is_zero()) return;
    if (!std::is_sorted(m.begin(), m.end()))
        throw std::invalid_argument("NCPoly::add_normal: monomial not in PBW order");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [m, c] : o.terms_) add_normal(m, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [m, c] : o.terms_) add_normal(m, -c);
    return *this;
}

NCPoly operator*(const HPoly& c, const NCPoly& p) {
    NCPoly r(p.dim_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p.terms_) r.add_normal(m, c * x);
    return r;
}

bool NCPoly::e_free() const {
    for (const auto& [m, c] : terms_)
        if (mono_has_e(m)) return false;
    return true;
}

int NCPoly::max_degree() const {
    int d = -2;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + mono_str(m);
    }
    return s;
}

namespace {

// commutator of two generators as a sum of generators with h coefficients;
// empty when they commute
std::vector<std::pair<Sym, HPoly>> generator_bracket(unsigned dim, const Sym& x, const Sym& y,
                                                     const Metric& eta) {
    std::vector<std::pair<Sym, HPoly>> out;
    if (x.is_e() && y.is_e()) return out;
    if (x.is_r() && y.is_r()) {
        const Word a = x.word(), b = y.word();
        if (a.rank() < 2 || b.rank() < 2) return out; // momenta central
        TensorElement br = classical_bracket(TensorElement::generator(dim, a),
                                             TensorElement::generator(dim, b), eta);
        for (const auto& [w, c] : br.terms()) out.emplace_back(Sym::r(w), c.shift(1));
        return out;
    }
    // one e, one R: only rank 2 acts
    const bool r_first = x.is_r();
    const Word w = r_first ? x.word() : y.word();
    if (w.rank() != 2) return out;
    const unsigned kappa = r_first ? y.e_index() : x.e_index();
    const unsigned mu = w.letter(0), nu = w.letter(1);
    const int sgn = r_first ? 1 : -1; // [e, R] = -[R, e]
    if (int e = eta.eta(nu, kappa); e != 0)
        out.emplace_back(Sym::e(mu), HPoly::h_power(1, Rat(-2 * sgn * e)));
    if (int e = eta.eta(mu, kappa); e != 0)
        out.emplace_back(Sym::e(nu), HPoly::h_power(1, Rat(2 * sgn * e)));
    return out;
}

std::size_t find_inversion(const Mono& m, SwapSchedule schedule) {
    if (schedule == SwapSchedule::Leftmost) {
        for (std::size_t i = 0; i + 1 < m.size(); ++i)
            if (m[i] > m[i + 1]) return i;
    } else {
        for (std::size_t i = m.size(); i-- > 1;)
            if (m[i - 1] > m[i]) return i - 1;
    }
    return m.size(); // sorted
}

} // namespace

NCPoly pbw_normal_form(unsigned dim, const Mono& raw, const HPoly& coeff, const Metric& eta,
                       SwapSchedule schedule) {
    NCPoly out(dim);
    if (coeff.is_zero()) return out;
    std::deque<std::pair<Mono, HPoly>> work;
    work.emplace_back(raw, coeff);
    while (!work.empty()) {
        auto [m, c] = std::move(work.front());
        work.pop_front();
        const std::size_t i = find_inversion(m, schedule);
        if (i == m.size()) {
            out.add_normal(std::move(m), c);
            continue;
        }
        // x y -> y x + [x, y]
        Mono swapped = m;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), c);
        for (const auto& [g, bc] : generator_bracket(dim, m[i], m[i + 1], eta)) {
            Mono shorter;
            shorter.reserve(m.size() - 1);
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (k == i) shorter.push_back(g);
                else if (k != i + 1) shorter.push_back(m[k]);
            }
            work.emplace_back(std::move(shorter), c * bc);
        }
    }
    return out;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const Metric& eta) {
    NCPoly out(a.dim() ? a.dim() : b.dim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Mono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out += pbw_normal_form(out.dim(), m, ca * cb, eta);
        }
    return out;
}

NCPoly nc_commutator(const NCPoly& a, const NCPoly& b, const Metric& eta) {
    return nc_mul(a, b, eta) - nc_mul(b, a, eta);
}

NCPoly tensor_to_nc(const TensorElement& t) {
    NCPoly p(t.dim());
    for (const auto& [w, c] : t.terms()) p.add_normal({Sym::r(w)}, c);
    return p;
}

NCPoly delta_derivation(const NCPoly& a, const Metric& eta) {
    if (!a.e_free())
        throw std::invalid_argument("delta_derivation: input must lie in U(R-hat)");
    const unsigned D = a.dim();
    NCPoly out(D);
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const Word w = m[i].word();
            const unsigned N = w.rank();
            if (N < 2) continue;

            // (1/2)[e_mu, R_v]_+ terms with the raw subwords reduced first
            auto emit = [&](unsigned mu, const Word& raw, const Rat& sign) {
                const TensorElement red = canonicalize(D, {{raw, HPoly(1)}}, N - 1);
                const Sym e = Sym::e(mu);
                for (const auto& [b, r] : red.terms()) {
                    const HPoly cc = (Rat(1, 2) * sign * r) * c;
                    for (int order = 0; order < 2; ++order) {
                        Mono mm;
                        mm.reserve(m.size() + 1);
                        for (std::size_t k = 0; k < m.size(); ++k) {
                            if (k == i) {
                                if (order == 0) { mm.push_back(e); mm.push_back(Sym::r(b)); }
                                else { mm.push_back(Sym::r(b)); mm.push_back(e); }
                            } else {
                                mm.push_back(m[k]);
                            }
                        }
                        out += pbw_normal_form(D, mm, cc, eta);
                    }
                }
            };
            emit(w.first(), w.suffix_from(1), Rat(1));
            emit(w.last(), w.prefix(N - 1), Rat(-1));
        }
    }
    return out;
}

NCPoly quantum_z2(unsigned dim, const Word& w, const Metric& eta) {
    const unsigned N = w.rank();
    if (N < 3) throw std::invalid_argument("quantum_z2: rank must be >= 3");
    NCPoly acc(dim);
    for (unsigned r = 0; r < N; ++r) {
        const Word rot = w.rotated(r);
        for (unsigned a = 1; a < N; ++a) {
            const Word left = rot.prefix(a), right = rot.suffix_from(a);
            NCPoly prod = nc_mul(tensor_to_nc(canonicalize(dim, {{left, HPoly(1)}}, a)),
                                 tensor_to_nc(canonicalize(dim, {{right, HPoly(1)}}, N - a)), eta);
            acc += prod;
        }
    }
    return HPoly(Rat(1, 2)) * acc;
}

NCPoly quantum_z1(unsigned dim, const Word& w) {
    const unsigned N = w.rank();
    NCPoly acc(dim);
    for (unsigned r = 0; r < N; ++r)
        acc += tensor_to_nc(canonicalize(dim, {{w.rotated(r), HPoly(1)}}, N));
    return acc;
}

CommPoly project_pi(const NCPoly& a, int l) {
    CommPoly out(a.dim());
    for (const auto& [m, c] : a.terms()) {
        const int d = mono_degree(m);
        if (d > l)
            throw std::invalid_argument("project_pi: term of degree above the filtration level");
        if (d == l) out.add(m, c);
    }
    return out;
}

} // namespace strobs
