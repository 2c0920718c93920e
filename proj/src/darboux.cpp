#include "liebialg/darboux.hpp"

#include <algorithm>
#include <numeric>

namespace lb {

QMatrix FundamentalMatrix::at(const Vec& p) const {
    QMatrix m(lifts.size(), vars);
    for (std::size_t d = 0; d < lifts.size(); ++d) {
        Vec v = lifts[d].apply(p);
        for (std::size_t a = 0; a < vars; ++a) m(d, a) = v[a];
    }
    return m;
}

FundamentalMatrix fundamental_matrix(const LieAlgebra& g) {
    FundamentalMatrix fm;
    fm.vars = binom(g.dim(), 2);
    for (const auto& d : derivations(g)) {
        QMatrix l = lift(d, 2, LiftMode::derivation);
        std::vector<Poly> row;
        for (std::size_t a = 0; a < fm.vars; ++a) row.push_back(Poly::linear(l.row(a)));
        fm.lifts.push_back(l);
        fm.rows.push_back(row);
    }
    return fm;
}

Poly apply_field(const FundamentalMatrix& fm, std::size_t d, const Poly& f) {
    Poly out(fm.vars);
    for (std::size_t a = 0; a < fm.vars; ++a) {
        if (fm.rows[d][a].is_zero()) continue;
        Poly df = f.derivative(a);
        if (!df.is_zero()) out = out + fm.rows[d][a] * df;
    }
    return out;
}

OrbitDims orbit_dims(const LieAlgebra& g, const MultiVector& w) {
    std::size_t n = g.dim();
    if (w.degree() != 2 && !w.is_zero()) throw std::invalid_argument("orbit_dims expects a bivector");
    std::size_t N = binom(n, 2);
    Vec x = w.is_zero() ? Vec(N) : w.coords();
    std::vector<Vec> inner, aut;
    for (std::size_t i = 0; i < n; ++i) inner.push_back(ad_lift(g, i, 2).apply(x));
    for (const auto& d : derivations(g)) aut.push_back(lift(d, 2, LiftMode::derivation).apply(x));
    OrbitDims od;
    od.inner = rank(QMatrix::from_rows(inner, N));
    od.aut = aut.empty() ? 0 : rank(QMatrix::from_rows(aut, N));
    return od;
}

std::vector<Q> charpoly(const QMatrix& a) {
    // Faddeev-LeVerrier
    std::size_t n = a.rows();
    std::vector<Q> c(n + 1);
    c[n] = 1;
    QMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix t = a * m;
        for (std::size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
        m = t;
        QMatrix am = a * m;
        Q tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> d;
    for (mpz_class i = 1; i * i <= v; ++i)
        if (v % i == 0) {
            d.push_back(i);
            if (i * i != v) d.push_back(v / i);
        }
    return d;
}

Q horner(const std::vector<Q>& c, const Q& x) {
    Q s = 0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
    return s;
}

std::vector<Q> deflate(const std::vector<Q>& c, const Q& r) {
    // divide by (x - r), coefficients low to high
    std::size_t d = c.size() - 1;
    std::vector<Q> q(d);
    Q carry = 0;
    for (std::size_t i = d; i-- > 0;) {
        carry = c[i + 1] + carry * r;
        q[i] = carry;
    }
    return q;
}

} // namespace

std::vector<Q> rational_roots(std::vector<Q> c, std::size_t* leftover) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    std::vector<Q> roots;
    while (c.size() > 1 && c[0] == 0) {
        roots.push_back(0);
        c.erase(c.begin());
    }
    for (bool found = true; found && c.size() > 1;) {
        found = false;
        mpz_class den = 1;
        for (const auto& x : c) den = lcm(den, x.get_den());
        std::vector<mpz_class> ic;
        for (const auto& x : c) ic.push_back(mpz_class(x * den));
        for (const auto& p : divisors(ic.front())) {
            for (const auto& q : divisors(ic.back())) {
                for (int sgn : {1, -1}) {
                    Q r(sgn * p, q);
                    r.canonicalize();
                    if (horner(c, r) == 0) {
                        roots.push_back(r);
                        c = deflate(c, r);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    if (leftover) *leftover = c.size() - 1;
    std::sort(roots.begin(), roots.end());
    return roots;
}

BrickResult find_bricks(const LieAlgebra& g) {
    FundamentalMatrix fm = fundamental_matrix(g);
    std::size_t N = fm.vars;
    BrickResult res;
    struct Cand {
        std::vector<Vec> space;
        Vec eig;
    };
    std::vector<Vec> all;
    for (std::size_t a = 0; a < N; ++a) all.push_back(unit(N, a));
    std::vector<Cand> cands{{all, {}}};
    for (const auto& l : fm.lifts) {
        QMatrix t = l.transpose();
        std::size_t left = 0;
        auto roots = rational_roots(charpoly(t), &left);
        if (left > 0) res.undetected_possible = true;
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        std::vector<Cand> next;
        for (const auto& c : cands)
            for (const auto& lam : roots) {
                QMatrix s = t - lam * QMatrix::identity(N);
                auto eig = rank_kernel(s).kernel;
                auto meet = intersect(c.space, eig, N);
                if (meet.empty()) continue;
                Vec e = c.eig;
                e.push_back(lam);
                next.push_back({meet, e});
            }
        cands = std::move(next);
    }
    for (const auto& c : cands)
        for (const auto& v : c.space) {
            res.bricks.push_back(Poly::linear(v));
            res.eigenvalues.push_back(c.eig);
        }
    return res;
}

std::variant<DarbouxFamily, NotDarboux> check_darboux_family(const LieAlgebra& g, const std::vector<Poly>& gens,
                                                              unsigned bound) {
    FundamentalMatrix fm = fundamental_matrix(g);
    std::size_t N = fm.vars;
    auto monos = monomials_up_to(N, bound);
    DarbouxFamily fam;
    fam.generators = gens;
    for (std::size_t d = 0; d < fm.lifts.size(); ++d) {
        std::vector<std::vector<Poly>> per_gen;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Poly target = apply_field(fm, d, gens[j]);
            // columns: monomial * generator
            std::vector<Poly> cols;
            for (const auto& f : gens)
                for (const auto& m : monos) {
                    Poly mp(N);
                    mp.add_term(m, 1);
                    cols.push_back(mp * f);
                }
            std::map<Poly::Mono, std::size_t> row_of;
            auto row_index = [&](const Poly::Mono& m) {
                auto it = row_of.find(m);
                if (it != row_of.end()) return it->second;
                std::size_t k = row_of.size();
                row_of.emplace(m, k);
                return k;
            };
            for (const auto& c : cols)
                for (const auto& [m, v] : c.terms()) row_index(m);
            for (const auto& [m, v] : target.terms()) row_index(m);
            QMatrix a(row_of.size(), cols.size());
            Vec b(row_of.size());
            for (std::size_t k = 0; k < cols.size(); ++k)
                for (const auto& [m, v] : cols[k].terms()) a(row_of[m], k) = v;
            for (const auto& [m, v] : target.terms()) b[row_of[m]] = v;
            if (row_of.empty()) {
                per_gen.push_back(std::vector<Poly>(gens.size(), Poly(N)));
                continue;
            }
            auto sol = solve_linear(a, b);
            if (std::holds_alternative<Inconsistent>(sol)) return NotDarboux{j, d};
            const Vec& x = std::get<AffineSolution>(sol).particular;
            std::vector<Poly> h;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Poly p(N);
                for (std::size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], x[i * monos.size() + k]);
                h.push_back(p);
            }
            per_gen.push_back(h);
        }
        fam.cofactors.push_back(per_gen);
    }
    return fam;
}

std::variant<LocusReport, EmptySample> locus_report(const LieAlgebra& g, const std::vector<Constraint>& cons,
                                                    long radius, std::size_t cap) {
    std::size_t N = binom(g.dim(), 2);
    // variables pinned to zero by an equality c*x_i^k = 0
    std::vector<bool> pinned(N, false);
    for (const auto& c : cons) {
        if (c.rel != Constraint::Rel::eq || c.p.terms().size() != 1) continue;
        const auto& m = c.p.terms().begin()->first;
        std::size_t nz = 0, at = 0;
        for (std::size_t i = 0; i < N; ++i)
            if (m[i]) {
                ++nz;
                at = i;
            }
        if (nz == 1) pinned[at] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < N; ++i)
        if (!pinned[i]) free.push_back(i);
    std::size_t side = static_cast<std::size_t>(2 * radius + 1);
    double total = 1;
    for (std::size_t k = 0; k < free.size(); ++k) total *= static_cast<double>(side);
    if (total > 5e6) throw std::invalid_argument("locus grid too large; pin more coordinates or lower the radius");

    std::vector<Vec> hits;
    Vec x(N);
    std::vector<long> ctr(free.size(), -radius);
    for (;;) {
        for (std::size_t k = 0; k < free.size(); ++k) x[free[k]] = ctr[k];
        bool ok = std::all_of(cons.begin(), cons.end(), [&](const Constraint& c) { return c.holds(x); });
        if (ok) hits.push_back(x);
        std::size_t k = free.size();
        while (k > 0 && ctr[k - 1] == radius) ctr[--k] = -radius;
        if (k == 0) break;
        ++ctr[k - 1];
    }
    if (hits.empty()) return EmptySample{"no grid point of radius " + std::to_string(radius) + " satisfies the constraints"};

    LocusReport rep;
    rep.candidates = hits.size();
    std::vector<std::size_t> pick;
    if (hits.size() <= cap) {
        pick.resize(hits.size());
        std::iota(pick.begin(), pick.end(), 0);
    } else {
        for (std::size_t i = 0; i < cap; ++i) pick.push_back(i * hits.size() / cap);
    }
    FundamentalMatrix fm = fundamental_matrix(g);
    YbeSystem sys = ybe_system(g);
    rep.min_rank = N + 1;
    for (auto i : pick) {
        LocusPoint p;
        p.x = hits[i];
        p.rank = fm.lifts.empty() ? 0 : rank(fm.at(p.x));
        auto st = check_solution(sys, p.x);
        p.mcybe = st.mcybe;
        p.cybe = st.cybe;
        rep.min_rank = std::min(rep.min_rank, p.rank);
        rep.max_rank = std::max(rep.max_rank, p.rank);
        rep.mcybe_count += p.mcybe;
        rep.cybe_count += p.cybe;
        rep.points.push_back(std::move(p));
    }
    rep.constant_rank = rep.min_rank == rep.max_rank;
    return rep;
}

} // namespace lb
