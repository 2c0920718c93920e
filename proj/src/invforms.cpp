#include "liebialg/invforms.hpp"

#include <algorithm>
#include <numeric>

namespace lb {

SymForm killing_symform(const LieAlgebra& g) { return {g.name, 1, killing_form(g)}; }

QMatrix extend_form(const QMatrix& b, std::size_t m) {
    std::size_t n = b.rows();
    const auto& basis = wedge_basis(n, m);
    QMatrix out(basis.size(), basis.size());
    for (std::size_t p = 0; p < basis.size(); ++p)
        for (std::size_t q = 0; q < basis.size(); ++q) {
            QMatrix gram(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) gram(i, j) = b(basis[p][i], basis[q][j]);
            out(p, q) = m == 0 ? Q(1) : det(gram);
        }
    return out;
}

SymForm extend_form(const SymForm& b, std::size_t m, std::size_t n) {
    if (b.degree != 1 || b.matrix.rows() != n) throw std::invalid_argument("extend_form expects a form on g");
    return {b.algebra, m, extend_form(b.matrix, m)};
}

FormFamily solve_invariant_forms(const LieAlgebra& g, std::size_t m, Symmetry s) {
    std::size_t n = g.dim();
    std::size_t N = binom(n, m);
    std::vector<Vec> eqs;
    for (std::size_t v = 0; v < n; ++v) {
        QMatrix a = ad_lift(g, v, m);
        // (A^T B + B A)(p,q) = 0, unknown B(r,c) at r*N+c
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = 0; q < N; ++q) {
                Vec e(N * N);
                for (std::size_t r = 0; r < N; ++r) {
                    if (a(r, p) != 0) e[r * N + q] += a(r, p);
                    if (a(r, q) != 0) e[p * N + r] += a(r, q);
                }
                if (!is_zero(e)) eqs.push_back(std::move(e));
            }
    }
    if (s != Symmetry::none)
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p; q < N; ++q) {
                Vec e(N * N);
                if (s == Symmetry::sym) {
                    if (p == q) continue;
                    e[p * N + q] = 1;
                    e[q * N + p] = -1;
                } else {
                    e[p * N + q] += 1;
                    e[q * N + p] += 1;
                }
                eqs.push_back(std::move(e));
            }
    std::vector<Vec> ker;
    if (eqs.empty()) {
        for (std::size_t t = 0; t < N * N; ++t) ker.push_back(unit(N * N, t));
    } else {
        ker = rank_kernel(QMatrix::from_rows(eqs, N * N)).kernel;
    }
    FormFamily fam;
    for (std::size_t k = 0; k < ker.size(); ++k) {
        QMatrix b(N, N);
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) b(r, c) = ker[k][r * N + c];
        fam.parameters.push_back("t" + std::to_string(k + 1));
        fam.basis_forms.push_back(b);
    }
    return fam;
}

bool is_invariant_form(const LieAlgebra& g, const QMatrix& b, std::size_t m) {
    for (std::size_t v = 0; v < g.dim(); ++v) {
        QMatrix a = ad_lift(g, v, m);
        if (!(a.transpose() * b + b * a).is_zero()) return false;
    }
    return true;
}

const Q& KForm::at(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (auto i : idx) flat = flat * n + i;
    return values[flat];
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::size_t n, std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t s = k; s-- > 0;) {
        idx[s] = flat % n;
        flat /= n;
    }
    return idx;
}

std::size_t flatten(const std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t f = 0;
    for (auto i : idx) f = f * n + i;
    return f;
}

int perm_sign(const std::vector<std::size_t>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

// (ad_v acting in every slot) applied to a dense tensor
std::vector<Q> act(const QMatrix& ad, const std::vector<Q>& t, std::size_t n, std::size_t k) {
    std::vector<Q> out(t.size());
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f] == 0) continue;
        auto idx = unflatten(f, n, k);
        for (std::size_t s = 0; s < k; ++s) {
            auto j = idx;
            for (std::size_t a = 0; a < n; ++a) {
                if (ad(a, idx[s]) == 0) continue;
                j[s] = a;
                out[flatten(j, n)] += ad(a, idx[s]) * t[f];
            }
        }
    }
    return out;
}

} // namespace

KForm derived_forms(const LieAlgebra& g, std::size_t k, DerivedKind kind, const std::vector<Q>& c) {
    std::size_t n = g.dim();
    std::size_t total = ipow(n, k);
    KForm f{n, k, std::vector<Q>(total)};
    if (kind == DerivedKind::casimir) {
        if (c.size() != total) throw NotACasimir("tensor has wrong size");
        for (std::size_t t = 0; t < total; ++t) {
            auto idx = unflatten(t, n, k);
            auto p = idx;
            std::sort(p.begin(), p.end());
            do {
                if (c[flatten(p, n)] != c[t]) throw NotACasimir("tensor is not symmetric");
            } while (std::next_permutation(p.begin(), p.end()));
        }
        for (std::size_t v = 0; v < n; ++v) {
            auto r = act(g.ad(v), c, n, k);
            if (!std::all_of(r.begin(), r.end(), [](const Q& x) { return x == 0; }))
                throw NotACasimir("tensor is not ad-invariant (fails for e" + std::to_string(v + 1) + ")");
        }
        QMatrix kap = killing_form(g);
        for (std::size_t t = 0; t < total; ++t) {
            auto j = unflatten(t, n, k);
            Q s = 0;
            for (std::size_t u = 0; u < total; ++u) {
                if (c[u] == 0) continue;
                auto i = unflatten(u, n, k);
                Q prod = c[u];
                for (std::size_t a = 0; a < k && prod != 0; ++a) prod *= kap(j[a], i[a]);
                s += prod;
            }
            f.values[t] = s;
        }
        return f;
    }
    std::vector<QMatrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
    std::vector<std::size_t> perm(k);
    for (std::size_t t = 0; t < total; ++t) {
        auto idx = unflatten(t, n, k);
        std::iota(perm.begin(), perm.end(), 0);
        Q s = 0;
        do {
            QMatrix p = QMatrix::identity(n);
            for (auto a : perm) p = p * ads[idx[a]];
            Q tr = 0;
            for (std::size_t d = 0; d < n; ++d) tr += p(d, d);
            if (kind == DerivedKind::trace_antisym && perm_sign(perm) < 0) tr = -tr;
            s += tr;
        } while (std::next_permutation(perm.begin(), perm.end()));
        f.values[t] = s;
    }
    return f;
}

bool is_invariant_kform(const LieAlgebra& g, const KForm& f) {
    // sum_s b(.., ad_v x_s, ..) = 0; the transpose action on the coefficient tensor
    for (std::size_t v = 0; v < g.dim(); ++v) {
        QMatrix adt = g.ad(v).transpose();
        auto r = act(adt, f.values, f.n, f.k);
        if (!std::all_of(r.begin(), r.end(), [](const Q& x) { return x == 0; })) return false;
    }
    return true;
}

std::vector<Q> killing_casimir(const LieAlgebra& g) {
    std::size_t n = g.dim();
    QMatrix kap = killing_form(g);
    // inverse by solving kap X = I column by column
    std::vector<Q> c(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        auto sol = solve_linear(kap, unit(n, j));
        if (std::holds_alternative<Inconsistent>(sol)) throw NotACasimir("Killing form is degenerate");
        const auto& a = std::get<AffineSolution>(sol);
        if (!a.kernel.empty()) throw NotACasimir("Killing form is degenerate");
        for (std::size_t i = 0; i < n; ++i) c[i * n + j] = a.particular[i];
    }
    return c;
}

} // namespace lb
