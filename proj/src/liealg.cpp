#include "liebialg/liealg.hpp"

#include <algorithm>
#include <cmath>

namespace lb {

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, std::size_t l_)
    : std::runtime_error("Jacobi identity fails for (e" + std::to_string(i_) + ", e" + std::to_string(j_) +
                         ", e" + std::to_string(k_) + "), component e" + std::to_string(l_)),
      i(i_), j(j_), k(k_), l(l_) {}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
    return v;
}

Vec LieAlgebra::bracket(const Vec& v, const Vec& w) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (w[j] == 0 || i == j) continue;
            Q f = v[i] * w[j];
            for (std::size_t k = 0; k < n_; ++k)
                if (c(i, j, k) != 0) out[k] += f * c(i, j, k);
        }
    }
    return out;
}

QMatrix LieAlgebra::ad(std::size_t i) const {
    QMatrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
    return m;
}

QMatrix LieAlgebra::ad(const Vec& v) const {
    QMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (v[i] != 0) m = m + v[i] * ad(i);
    return m;
}

std::vector<BracketSpec> LieAlgebra::nonzero_brackets() const {
    std::vector<BracketSpec> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
            Vec v = bracket_basis(i, j);
            if (!is_zero(v)) out.push_back({i + 1, j + 1, v});
        }
    return out;
}

Q jacobi_residual(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    Q s = 0;
    for (std::size_t m = 0; m < g.dim(); ++m)
        s += g.c(i, j, m) * g.c(m, k, l) + g.c(j, k, m) * g.c(m, i, l) + g.c(k, i, m) * g.c(m, j, l);
    return s;
}

LieAlgebra build(const std::string& name, std::size_t dim, const std::vector<BracketSpec>& brackets,
                 std::vector<std::string> labels, Params params) {
    LieAlgebra g;
    g.name = name;
    g.n_ = dim;
    g.c_.assign(dim * dim * dim, Q(0));
    if (labels.empty())
        for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (labels.size() != dim) throw IndexError("basis label count differs from dimension");
    g.labels = std::move(labels);
    g.params = std::move(params);
    std::vector<bool> seen(dim * dim, false);
    for (const auto& b : brackets) {
        if (b.i < 1 || b.i > dim || b.j < 1 || b.j > dim)
            throw IndexError("bracket index out of range: [e" + std::to_string(b.i) + ", e" + std::to_string(b.j) + "]");
        if (b.i == b.j) throw IndexError("bracket [e" + std::to_string(b.i) + ", e" + std::to_string(b.i) + "] given");
        if (b.coeffs.size() != dim)
            throw IndexError("bracket [e" + std::to_string(b.i) + ", e" + std::to_string(b.j) + "] has wrong length");
        std::size_t i = b.i - 1, j = b.j - 1;
        if (seen[i * dim + j]) throw IndexError("bracket [e" + std::to_string(b.i) + ", e" + std::to_string(b.j) + "] given twice");
        seen[i * dim + j] = seen[j * dim + i] = true;
        for (std::size_t k = 0; k < dim; ++k) {
            g.c_[(i * dim + j) * dim + k] = b.coeffs[k];
            g.c_[(j * dim + i) * dim + k] = -b.coeffs[k];
        }
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k)
                for (std::size_t l = 0; l < dim; ++l)
                    if (jacobi_residual(g, i, j, k, l) != 0) throw JacobiViolation(i + 1, j + 1, k + 1, l + 1);
    return g;
}

QMatrix killing_form(const LieAlgebra& g) {
    std::size_t n = g.dim();
    std::vector<QMatrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
    QMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            QMatrix p = ads[i] * ads[j];
            Q t = 0;
            for (std::size_t a = 0; a < n; ++a) t += p(a, a);
            k(i, j) = k(j, i) = t;
        }
    return k;
}

std::vector<QMatrix> derivations(const LieAlgebra& g) {
    std::size_t n = g.dim();
    // unknown D(a,b) at index a*n+b
    std::vector<Vec> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Vec e(n * n);
                for (std::size_t k = 0; k < n; ++k) e[l * n + k] += g.c(i, j, k);
                for (std::size_t a = 0; a < n; ++a) {
                    e[a * n + i] -= g.c(a, j, l);
                    e[a * n + j] -= g.c(i, a, l);
                }
                if (!is_zero(e)) eqs.push_back(e);
            }
    std::vector<Vec> ker;
    if (eqs.empty()) {
        for (std::size_t t = 0; t < n * n; ++t) ker.push_back(unit(n * n, t));
    } else {
        ker = rank_kernel(QMatrix::from_rows(eqs, n * n)).kernel;
    }
    std::vector<QMatrix> out;
    for (const auto& v : ker) {
        QMatrix d(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d(a, b) = v[a * n + b];
        out.push_back(d);
    }
    return out;
}

bool is_derivation(const LieAlgebra& g, const QMatrix& d) {
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = d.apply(g.bracket_basis(i, j));
            Vec rhs = add(g.bracket(d.col(i), unit(n, j)), g.bracket(unit(n, i), d.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

std::vector<Vec> bracket_span(const LieAlgebra& g, const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> out;
    for (const auto& u : a)
        for (const auto& v : b) {
            Vec w = g.bracket(u, v);
            if (!is_zero(w)) out.push_back(w);
        }
    return canonical_basis(out, g.dim());
}

Series ideals_and_series(const LieAlgebra& g) {
    std::size_t n = g.dim();
    Series s;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        QMatrix a = g.ad(i);
        for (std::size_t r = 0; r < n; ++r) rows.push_back(a.row(r));
    }
    s.center = rank_kernel(QMatrix::from_rows(rows, n)).kernel;
    std::vector<Vec> whole;
    for (std::size_t i = 0; i < n; ++i) whole.push_back(unit(n, i));
    s.lower_central.push_back(whole);
    for (;;) {
        auto next = bracket_span(g, whole, s.lower_central.back());
        if (next == s.lower_central.back()) break;
        s.lower_central.push_back(next);
        if (next.empty()) break;
    }
    s.derived.push_back(whole);
    for (;;) {
        auto next = bracket_span(g, s.derived.back(), s.derived.back());
        if (next == s.derived.back()) break;
        s.derived.push_back(next);
        if (next.empty()) break;
    }
    return s;
}

bool automorphism_check(const LieAlgebra& g, const QMatrix& t) {
    std::size_t n = g.dim();
    if (t.rows() != n || t.cols() != n) return false;
    if (det(t) == 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (t.apply(g.bracket_basis(i, j)) != g.bracket(t.col(i), t.col(j))) return false;
    return true;
}

double automorphism_residual(const LieAlgebra& g, const std::vector<double>& t) {
    std::size_t n = g.dim();
    auto col = [&](std::size_t j) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = t[i * n + j];
        return v;
    };
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto ci = col(i), cj = col(j);
            for (std::size_t l = 0; l < n; ++l) {
                double lhs = 0, rhs = 0;
                for (std::size_t k = 0; k < n; ++k) lhs += t[l * n + k] * g.c(i, j, k).get_d();
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) rhs += ci[a] * cj[b] * g.c(a, b, l).get_d();
                worst = std::max(worst, std::fabs(lhs - rhs));
            }
        }
    return worst;
}

ExpResult exp_derivation(const LieAlgebra& g, const QMatrix& d, double tol) {
    std::size_t n = g.dim();
    ExpResult r;
    QMatrix p = QMatrix::identity(n);
    std::vector<QMatrix> powers{p};
    for (std::size_t k = 1; k <= n; ++k) {
        p = p * d;
        if (p.is_zero()) {
            QMatrix s(n, n);
            Q fact = 1;
            for (std::size_t j = 0; j < powers.size(); ++j) {
                if (j > 0) fact *= static_cast<unsigned long>(j);
                s = s + Q(1 / fact) * powers[j];
            }
            r.exact = true;
            r.exact_value = s;
            return r;
        }
        powers.push_back(p);
    }
    // non-nilpotent: scaling and squaring on doubles
    std::vector<double> a(n * n);
    double norm = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = d(i, j).get_d();
            norm = std::max(norm, std::fabs(a[i * n + j]));
        }
    int sq = 0;
    while (norm * static_cast<double>(n) > 0.5) {
        norm /= 2;
        ++sq;
    }
    for (auto& x : a) x = std::ldexp(x, -sq);
    auto mul = [n](const std::vector<double>& x, const std::vector<double>& y) {
        std::vector<double> z(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
        return z;
    };
    std::vector<double> s(n * n, 0.0), term(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) s[i * n + i] = term[i * n + i] = 1.0;
    for (int k = 1; k < 60; ++k) {
        term = mul(term, a);
        double big = 0;
        for (auto& x : term) {
            x /= k;
            big = std::max(big, std::fabs(x));
        }
        for (std::size_t i = 0; i < n * n; ++i) s[i] += term[i];
        if (big < tol * 1e-3) break;
    }
    for (int k = 0; k < sq; ++k) s = mul(s, s);
    r.approx = s;
    r.residual = automorphism_residual(g, s);
    return r;
}

QMatrix center_rep_matrix(const LieAlgebra& g, const Vec& alphas, std::size_t i) {
    std::size_t n = g.dim();
    QMatrix m(n + 1, n + 1);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(k, j) = g.c(i, j, k);
    m(i, n) = -alphas[i]; // [e_i, e] = -alpha_i e_i
    return m;
}

bool is_representation(const LieAlgebra& g, const std::vector<QMatrix>& rep) {
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            QMatrix rhs(rep[0].rows(), rep[0].cols());
            for (std::size_t k = 0; k < n; ++k)
                if (g.c(i, j, k) != 0) rhs = rhs + g.c(i, j, k) * rep[k];
            if (!(commutator(rep[i], rep[j]) == rhs)) return false;
        }
    return true;
}

bool is_faithful(const std::vector<QMatrix>& rep) {
    std::vector<Vec> flat;
    for (const auto& m : rep) {
        Vec v;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
        flat.push_back(v);
    }
    if (flat.empty()) return true;
    return rank(QMatrix::from_rows(flat, flat[0].size())) == rep.size();
}

std::variant<CenterExtension, Infeasible> extend_center(const LieAlgebra& g, const std::optional<Vec>& user) {
    std::size_t n = g.dim();
    Series s = ideals_and_series(g);
    std::vector<std::size_t> central;
    for (std::size_t i = 0; i < n; ++i)
        if (g.ad(i).is_zero()) central.push_back(i);
    if (central.size() != s.center.size())
        return Infeasible{"center is not spanned by basis vectors", {}};

    std::vector<Vec> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.c(i, j, k) != 0) {
                    Vec e(n);
                    e[i] += 1;
                    e[j] += 1;
                    e[k] -= 1;
                    eqs.push_back(e);
                }
    std::vector<Vec> ker;
    if (eqs.empty()) {
        for (std::size_t i = 0; i < n; ++i) ker.push_back(unit(n, i));
    } else {
        ker = rank_kernel(QMatrix::from_rows(eqs, n)).kernel;
    }

    auto admissible = [&](const Vec& a) {
        for (auto c : central)
            if (a[c] == 0) return false;
        return true;
    };

    std::vector<std::size_t> order = central;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(central.begin(), central.end(), i) == central.end()) order.push_back(i);

    auto finish = [&](const Vec& a) -> std::variant<CenterExtension, Infeasible> {
        CenterExtension ce;
        ce.alphas = a;
        ce.central = central;
        ce.order = order;
        for (std::size_t i = 0; i < n; ++i) ce.rep.push_back(center_rep_matrix(g, a, i));
        return ce;
    };

    if (user) {
        if (user->size() != n) throw IndexError("alpha vector has wrong length");
        for (const auto& e : eqs)
            if (dot(e, *user) != 0) return Infeasible{"supplied alphas violate alpha_i + alpha_j = alpha_k", {}};
        if (!admissible(*user)) return Infeasible{"supplied alphas vanish on the center", {}};
        return finish(*user);
    }

    std::vector<std::size_t> forced;
    for (auto c : central) {
        bool free = std::any_of(ker.begin(), ker.end(), [c](const Vec& v) { return v[c] != 0; });
        if (!free) forced.push_back(c);
    }
    if (!forced.empty())
        return Infeasible{"alpha_i + alpha_j = alpha_k forces a central alpha to vanish", forced};

    // single kernel generators, then all free parameters equal to 1, then integer perturbations
    for (const auto& v : ker)
        if (admissible(v)) return finish(v);
    Vec ones(n);
    for (const auto& v : ker) ones = add(ones, v);
    if (admissible(ones)) return finish(ones);
    for (long m = 1; m <= 10; ++m) {
        Vec a(n);
        for (std::size_t j = 0; j < ker.size(); ++j)
            a = add(a, scaled(ker[j], Q(1 + static_cast<long>(j) * m)));
        if (admissible(a)) return finish(a);
    }
    return Infeasible{"no admissible alpha found by the search", {}};
}

} // namespace lb
