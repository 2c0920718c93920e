#include "liebialg/grassmann.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace lb {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<Index>& wedge_basis(std::size_t n, std::size_t m) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<Index>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Index> out;
    if (m <= n) {
        Index idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;
        for (;;) {
            out.push_back(idx);
            std::size_t i = m;
            while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return cache.emplace(key, std::move(out)).first->second;
}

std::size_t wedge_index(std::size_t n, const Index& idx) {
    const auto& b = wedge_basis(n, idx.size());
    auto it = std::lower_bound(b.begin(), b.end(), idx);
    if (it == b.end() || *it != idx) throw IndexError("not a wedge basis index");
    return static_cast<std::size_t>(it - b.begin());
}

std::string wedge_label(const Index& idx) {
    std::string s = "e";
    bool wide = std::any_of(idx.begin(), idx.end(), [](std::size_t i) { return i >= 9; });
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (wide && k) s += "_";
        s += std::to_string(idx[k] + 1);
    }
    return idx.empty() ? "1" : s;
}

// sort with sign; returns 0 if repeated
static int sort_sign(Index& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

MultiVector MultiVector::basis(std::size_t n, const Index& idx, const Q& c) {
    MultiVector w(n, idx.size());
    w.add(idx, c);
    return w;
}

MultiVector MultiVector::from_vector(const Vec& v) {
    MultiVector w(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) w.add({i}, v[i]);
    return w;
}

MultiVector MultiVector::from_coords(std::size_t n, std::size_t m, const Vec& coords) {
    const auto& b = wedge_basis(n, m);
    if (coords.size() != b.size()) throw IndexError("coordinate vector has wrong length");
    MultiVector w(n, m);
    for (std::size_t i = 0; i < b.size(); ++i) w.add(b[i], coords[i]);
    return w;
}

void MultiVector::add(const Index& raw, const Q& c) {
    if (c == 0) return;
    if (raw.size() != m_) throw IndexError("index tuple has wrong degree");
    Index idx = raw;
    for (auto i : idx)
        if (i >= n_) throw IndexError("wedge index out of range");
    int s = sort_sign(idx);
    if (s == 0) return;
    auto it = t_.find(idx);
    Q v = s > 0 ? c : Q(-c);
    if (it == t_.end()) {
        t_.emplace(idx, v);
        return;
    }
    it->second += v;
    if (it->second == 0) t_.erase(it);
}

Q MultiVector::coeff(const Index& sorted) const {
    auto it = t_.find(sorted);
    return it == t_.end() ? Q(0) : it->second;
}

Vec MultiVector::coords() const {
    const auto& b = wedge_basis(n_, m_);
    Vec v(b.size());
    for (const auto& [idx, c] : t_) v[wedge_index(n_, idx)] = c;
    return v;
}

std::string MultiVector::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : t_) {
        Q a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (a != 1 || idx.empty()) os << to_string(a) << (idx.empty() ? "" : "*");
        if (!idx.empty()) os << wedge_label(idx);
    }
    return os.str();
}

MultiVector MultiVector::operator-() const { return Q(-1) * (*this); }

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
    if (a.t_.empty()) return b;
    MultiVector r = a;
    for (const auto& [idx, c] : b.t_) r.add(idx, c);
    return r;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) { return a + (-b); }

MultiVector operator*(const Q& s, const MultiVector& a) {
    MultiVector r(a.n_, a.m_);
    if (s == 0) return r;
    for (const auto& [idx, c] : a.t_) r.t_.emplace(idx, c * s);
    return r;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    MultiVector r(a.dim(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            Index idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add(idx, ca * cb);
        }
    return r;
}

MultiVector schouten(const LieAlgebra& g, const MultiVector& u, const MultiVector& v) {
    std::size_t n = g.dim();
    std::size_t p = u.degree(), q = v.degree();
    if (p == 0 || q == 0) return MultiVector(n, p + q == 0 ? 0 : p + q - 1);
    MultiVector r(n, p + q - 1);
    for (const auto& [x, cx] : u.terms())
        for (const auto& [y, cy] : v.terms()) {
            Q c = cx * cy;
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < q; ++j) {
                    Vec br = g.bracket_basis(x[i], y[j]);
                    if (is_zero(br)) continue;
                    Q sign = ((i + j) % 2 == 0) ? c : Q(-c); // (-1)^{(i+1)+(j+1)}
                    Index rest;
                    for (std::size_t a = 0; a < p; ++a)
                        if (a != i) rest.push_back(x[a]);
                    for (std::size_t b = 0; b < q; ++b)
                        if (b != j) rest.push_back(y[b]);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (br[k] == 0) continue;
                        Index idx{k};
                        idx.insert(idx.end(), rest.begin(), rest.end());
                        r.add(idx, sign * br[k]);
                    }
                }
        }
    return r;
}

QMatrix lift(const QMatrix& t, std::size_t m, LiftMode mode) {
    std::size_t n = t.rows();
    const auto& b = wedge_basis(n, m);
    QMatrix out(b.size(), b.size());
    for (std::size_t col = 0; col < b.size(); ++col) {
        const Index& idx = b[col];
        MultiVector img(n, m);
        if (mode == LiftMode::derivation) {
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t k = 0; k < n; ++k) {
                    if (t(k, idx[s]) == 0) continue;
                    Index j = idx;
                    j[s] = k;
                    img.add(j, t(k, idx[s]));
                }
        } else {
            // expand T e_{i1} ^ ... ^ T e_{im}
            std::vector<std::pair<Index, Q>> partial{{Index{}, Q(1)}};
            for (std::size_t s = 0; s < m; ++s) {
                std::vector<std::pair<Index, Q>> next;
                for (const auto& [pre, c] : partial)
                    for (std::size_t k = 0; k < n; ++k) {
                        if (t(k, idx[s]) == 0) continue;
                        if (std::find(pre.begin(), pre.end(), k) != pre.end()) continue;
                        Index j = pre;
                        j.push_back(k);
                        next.emplace_back(j, c * t(k, idx[s]));
                    }
                partial = std::move(next);
            }
            for (const auto& [j, c] : partial) img.add(j, c);
        }
        for (const auto& [j, c] : img.terms()) out(wedge_index(n, j), col) = c;
    }
    return out;
}

QMatrix ad_lift(const LieAlgebra& g, std::size_t i, std::size_t m) { return lift(g.ad(i), m, LiftMode::derivation); }

std::vector<Vec> invariant_subspace(const LieAlgebra& g, std::size_t m) {
    std::size_t n = g.dim();
    std::size_t N = binom(n, m);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        QMatrix a = ad_lift(g, i, m);
        for (std::size_t r = 0; r < N; ++r) {
            Vec row = a.row(r);
            if (!is_zero(row)) rows.push_back(row);
        }
    }
    if (rows.empty()) {
        std::vector<Vec> all;
        for (std::size_t k = 0; k < N; ++k) all.push_back(unit(N, k));
        return all;
    }
    return rank_kernel(QMatrix::from_rows(rows, N)).kernel;
}

bool is_invariant(const LieAlgebra& g, const MultiVector& w) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!schouten(g, MultiVector::basis(g.dim(), {i}), w).is_zero()) return false;
    return true;
}

ReducedClass reduce(const LieAlgebra& g, const MultiVector& w) {
    ReducedClass rc;
    rc.invariant_basis = invariant_subspace(g, w.degree());
    rc.representative = MultiVector::from_coords(g.dim(), w.degree(), reduce_mod(rc.invariant_basis, w.coords()));
    return rc;
}

ReducedClass reduced_bracket(const LieAlgebra& g, const ReducedClass& a, const ReducedClass& b) {
    return reduce(g, schouten(g, a.representative, b.representative));
}

bool is_ideal(const LieAlgebra& g, const std::vector<Vec>& h) {
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& v : h)
            if (!in_span(h, g.bracket(unit(n, i), v))) return false;
    return true;
}

bool is_traceless_ideal(const LieAlgebra& g, const std::vector<Vec>& h) {
    if (!is_ideal(g, h)) return false;
    std::size_t n = g.dim();
    auto basis = canonical_basis(h, n);
    std::size_t k = basis.size();
    if (k == 0) return true;
    // coordinates of ad_i(b_s) in the basis: solve B^T c = w
    QMatrix bt(n, k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t r = 0; r < n; ++r) bt(r, s) = basis[s][r];
    for (std::size_t i = 0; i < n; ++i) {
        Q tr = 0;
        for (std::size_t s = 0; s < k; ++s) {
            auto sol = solve_linear(bt, g.bracket(unit(n, i), basis[s]));
            tr += std::get<AffineSolution>(sol).particular[s];
        }
        if (tr != 0) return false;
    }
    return true;
}

MultiVector top_wedge(std::size_t n, const std::vector<Vec>& h) {
    MultiVector w(n, 0);
    w.add({}, 1);
    for (const auto& v : h) w = wedge(w, MultiVector::from_vector(v));
    return w;
}

std::vector<TracelessInvariant> traceless_ideal_invariants(const LieAlgebra& g,
                                                           const std::vector<std::vector<Vec>>& user) {
    std::size_t n = g.dim();
    std::vector<TracelessInvariant> out;
    std::vector<std::vector<Vec>> seen;
    auto consider = [&](const std::string& src, const std::vector<Vec>& h, bool strict) {
        auto basis = canonical_basis(h, n);
        if (basis.empty()) {
            if (strict) throw NotAnIdeal(src + ": zero subspace");
            return;
        }
        if (!is_ideal(g, basis)) {
            if (strict) throw NotAnIdeal(src + " is not an ideal");
            return;
        }
        if (!is_traceless_ideal(g, basis)) {
            if (strict) throw NotTraceless(src + " is an ideal but not traceless");
            return;
        }
        if (std::find(seen.begin(), seen.end(), basis) != seen.end()) return;
        seen.push_back(basis);
        MultiVector top = top_wedge(n, basis);
        if (!is_invariant(g, top)) throw std::logic_error("top wedge of traceless ideal not invariant");
        out.push_back({src, basis, top});
    };
    Series s = ideals_and_series(g);
    consider("center", s.center, false);
    for (std::size_t k = 0; k < s.lower_central.size(); ++k)
        consider("lower_central[" + std::to_string(k) + "]", s.lower_central[k], false);
    for (std::size_t k = 0; k < s.derived.size(); ++k) consider("derived[" + std::to_string(k) + "]", s.derived[k], false);
    for (std::size_t k = 0; k < user.size(); ++k) consider("user[" + std::to_string(k) + "]", user[k], true);
    return out;
}

std::vector<MultiVector> nilpotent_lambda2_candidates(const LieAlgebra& g) {
    Series s = ideals_and_series(g);
    if (!s.lower_central.back().empty()) return {};
    std::size_t p = s.lower_central.size() - 1; // g_{p)} = 0
    if (p < 2) return {};
    std::vector<MultiVector> out;
    for (const auto& z : s.center)
        for (const auto& v : s.lower_central[p - 2]) {
            MultiVector w = wedge(MultiVector::from_vector(z), MultiVector::from_vector(v));
            if (!w.is_zero()) out.push_back(w);
        }
    return out;
}

} // namespace lb
