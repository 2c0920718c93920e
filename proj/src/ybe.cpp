#include "liebialg/ybe.hpp"

#include "liebialg/darboux.hpp"

#include <algorithm>
#include <set>

namespace lb {

MultiVector schouten_square(const LieAlgebra& g, const MultiVector& r) {
    if (r.degree() != 2) throw std::invalid_argument("schouten_square expects a bivector");
    return schouten(g, r, r);
}

std::vector<Poly> generic_square(const LieAlgebra& g) {
    std::size_t n = g.dim();
    const auto& b2 = wedge_basis(n, 2);
    std::size_t N2 = b2.size(), N3 = binom(n, 3);
    std::vector<Poly> out(N3, Poly(N2));
    for (std::size_t a = 0; a < N2; ++a)
        for (std::size_t b = a; b < N2; ++b) {
            auto br = schouten(g, MultiVector::basis(n, b2[a]), MultiVector::basis(n, b2[b]));
            if (br.is_zero()) continue;
            Poly::Mono m(N2, 0);
            m[a] += 1;
            m[b] += 1;
            // [E_a,E_b] = [E_b,E_a] for bivectors, so off-diagonal pairs count twice
            Q mult = a == b ? Q(1) : Q(2);
            for (const auto& [idx, c] : br.terms()) out[wedge_index(n, idx)].add_term(m, mult * c);
        }
    return out;
}

Poly substitute(const Poly& p, std::size_t i, const Poly& value) {
    Poly out(p.vars());
    std::vector<Poly> powers{Poly::constant(p.vars(), 1)};
    for (const auto& [m, c] : p.terms()) {
        while (powers.size() <= m[i]) powers.push_back(powers.back() * value);
        Poly::Mono rest = m;
        rest[i] = 0;
        Poly t(p.vars());
        t.add_term(rest, c);
        out = out + t * powers[m[i]];
    }
    return out;
}

std::vector<Poly> simplify_generators(std::vector<Poly> gens) {
    // sum of c_i x_i^{2k_i} with all c_i > 0 vanishes only when every x_i does
    auto definite_support = [](const Poly& q) {
        std::vector<std::size_t> vars;
        for (const auto& [m, c] : q.terms()) {
            if (c < 0) return std::vector<std::size_t>{};
            std::size_t nz = 0, var = 0;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) {
                    ++nz;
                    var = i;
                }
            if (nz != 1 || m[var] % 2) return std::vector<std::size_t>{};
            vars.push_back(var);
        }
        return vars;
    };
    auto normalize = [&](std::vector<Poly>& v) {
        std::vector<Poly> out;
        std::vector<Poly> expanded;
        for (auto& p : v) {
            if (p.is_zero()) continue;
            Poly q = p.monic();
            auto vars = q.terms().size() > 1 ? definite_support(q) : std::vector<std::size_t>{};
            if (vars.empty()) {
                expanded.push_back(q);
                continue;
            }
            for (auto i : vars) expanded.push_back(Poly::var(q.vars(), i));
        }
        for (auto& q : expanded) {
            if (q.terms().size() == 1) {
                // pure monomial: keep its support
                Poly::Mono m = q.leading_monomial();
                for (auto& e : m) e = e ? 1 : 0;
                q = Poly(q.vars());
                q.add_term(m, 1);
            }
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
        }
        v = std::move(out);
    };
    normalize(gens);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t g = 0; g < gens.size() && !changed; ++g) {
            if (gens[g].degree() != 1) continue;
            auto lin = gens[g].as_linear_form();
            if (!lin) continue;
            const Poly::Mono& lead = gens[g].leading_monomial();
            std::size_t var = std::find(lead.begin(), lead.end(), 1u) - lead.begin();
            // x_var = -(rest) since the generator is monic
            Poly value = Poly::var(gens[g].vars(), var) - gens[g];
            for (std::size_t h = 0; h < gens.size(); ++h) {
                if (h == g) continue;
                Poly s = substitute(gens[h], var, value);
                if (!(s == gens[h])) {
                    gens[h] = s;
                    changed = true;
                }
            }
            if (changed) normalize(gens);
        }
    }
    std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return b < a; });
    return gens;
}

YbeSystem ybe_system(const LieAlgebra& g) {
    std::size_t n = g.dim();
    YbeSystem sys;
    sys.n = n;
    sys.cybe_coeffs = generic_square(g);
    sys.invariant3 = invariant_subspace(g, 3);
    std::size_t N3 = sys.cybe_coeffs.size();
    // eliminate invariant directions: P - sum_i P[pivot_i] I_i, then drop pivot coordinates
    std::vector<Poly> reduced = sys.cybe_coeffs;
    std::vector<bool> pivot(N3, false);
    for (const auto& v : sys.invariant3) {
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        pivot[p] = true;
        Poly f = reduced[p];
        for (std::size_t j = 0; j < N3; ++j)
            if (v[j] != 0) reduced[j] = reduced[j] - v[j] * f;
    }
    for (std::size_t j = 0; j < N3; ++j)
        if (!pivot[j]) sys.mcybe_coeffs.push_back(reduced[j]);
    sys.cybe = simplify_generators(sys.cybe_coeffs);
    sys.mcybe = simplify_generators(sys.mcybe_coeffs);
    return sys;
}

SolutionStatus check_solution(const YbeSystem& sys, const Vec& r) {
    SolutionStatus s{true, true};
    for (const auto& p : sys.mcybe_coeffs)
        if (p.eval(r) != 0) s.mcybe = false;
    for (const auto& p : sys.cybe_coeffs)
        if (p.eval(r) != 0) s.cybe = false;
    return s;
}

MultiVector cocommutator(const LieAlgebra& g, const MultiVector& r, const Vec& v) {
    return schouten(g, MultiVector::from_vector(v), r);
}

bool cocycle_check(const LieAlgebra& g, const MultiVector& r) {
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            MultiVector lhs = cocommutator(g, r, g.bracket_basis(i, j));
            MultiVector ei = MultiVector::basis(n, {i}), ej = MultiVector::basis(n, {j});
            MultiVector rhs = schouten(g, ei, cocommutator(g, r, unit(n, j))) -
                              schouten(g, ej, cocommutator(g, r, unit(n, i)));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool cojacobi_check(const LieAlgebra& g, const MultiVector& r) {
    std::size_t n = g.dim();
    // dual structure constants d[k][i][j]: [e^i, e^j]_* = sum_k d e^k, from delta(e_k) = sum d e_i ^ e_j
    std::vector<Q> d(n * n * n);
    auto D = [&](std::size_t k, std::size_t i, std::size_t j) -> Q& { return d[(k * n + i) * n + j]; };
    for (std::size_t k = 0; k < n; ++k) {
        MultiVector dk = cocommutator(g, r, unit(n, k));
        for (const auto& [idx, c] : dk.terms()) {
            D(k, idx[0], idx[1]) = c;
            D(k, idx[1], idx[0]) = -c;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Q s = 0;
                    for (std::size_t m = 0; m < n; ++m)
                        s += D(m, i, j) * D(l, m, k) + D(m, j, k) * D(l, m, i) + D(m, k, i) * D(l, m, j);
                    if (s != 0) return false;
                }
    return true;
}

bool same_cocommutator(const LieAlgebra& g, const MultiVector& r1, const MultiVector& r2) {
    return in_span(invariant_subspace(g, 2), (r1 - r2).coords());
}

RowReport verify_classification_row(const LieAlgebra& g, const OrbitRow& row) {
    RowReport rep;
    std::size_t n = g.dim();
    if (row.rep.size() != binom(n, 2)) throw IndexError("row representative has wrong length");
    YbeSystem sys = ybe_system(g);
    auto st = check_solution(sys, row.rep);
    rep.mcybe = st.mcybe;
    rep.cybe = st.cybe;
    if (!rep.mcybe) rep.failed.push_back("a");
    if (row.starred) {
        rep.star_ok = (*row.starred == !st.cybe);
        if (!rep.star_ok) rep.failed.push_back("b");
    }
    rep.computed_dim = orbit_dims(g, MultiVector::from_coords(n, 2, row.rep)).aut;
    if (row.published_dim) {
        rep.dim_ok = rep.computed_dim == *row.published_dim;
        if (!rep.dim_ok) rep.failed.push_back("c");
    }
    for (const auto& c : row.region)
        if (!c.holds(row.rep)) rep.region_ok = false;
    if (!rep.region_ok) rep.failed.push_back("d");
    return rep;
}

} // namespace lb
