#include "liebialg/grading.hpp"

#include <algorithm>

namespace lb {

Degree Gradation::normalize(Degree d) const {
    if (modulus)
        for (auto& x : d) x = ((x % *modulus) + *modulus) % *modulus;
    return d;
}

Degree Gradation::sum(const Degree& a, const Degree& b) const {
    Degree d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = a[i] + b[i];
    return normalize(d);
}

static std::string deg_str(const Degree& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

GradationCheck verify_gradation(const LieAlgebra& g, const Gradation& gr) {
    std::size_t n = g.dim();
    GradationCheck out;
    if (gr.degrees.size() != n) {
        out.reason = "degree list length differs from dimension";
        return out;
    }
    for (const auto& d : gr.degrees)
        if (d.size() != gr.k) {
            out.reason = "degree with wrong number of components";
            return out;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Degree want = gr.sum(gr.degrees[i], gr.degrees[j]);
            for (std::size_t l = 0; l < n; ++l)
                if (g.c(i, j, l) != 0 && gr.normalize(gr.degrees[l]) != want) {
                    out.reason = "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] has component e" +
                                 std::to_string(l + 1) + " of degree " + deg_str(gr.normalize(gr.degrees[l])) +
                                 ", expected " + deg_str(want);
                    return out;
                }
        }
    out.valid = true;

    // root test
    if (gr.modulus) {
        out.reason = "modular gradation is never a root gradation";
        return out;
    }
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i < n; ++i)
        if (std::all_of(gr.degrees[i].begin(), gr.degrees[i].end(), [](long x) { return x == 0; })) h.push_back(i);
    if (h.size() != gr.k) {
        out.reason = "degree-0 part has dimension " + std::to_string(h.size()) + ", not k";
        return out;
    }
    for (auto a : h)
        for (auto b : h)
            if (!is_zero(g.bracket_basis(a, b))) {
                out.reason = "degree-0 part is not abelian";
                return out;
            }
    // [h_s, e_a] = lambda(s,a) e_a, and lambda(s,a) = sum_t L(s,t) deg(a)_t
    std::size_t k = gr.k;
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t a = 0; a < n; ++a) {
            Vec br = g.bracket_basis(h[s], a);
            for (std::size_t l = 0; l < n; ++l)
                if (l != a && br[l] != 0) {
                    out.reason = "ad of degree-0 element is not diagonal on e" + std::to_string(a + 1);
                    return out;
                }
            Vec row(k * k);
            for (std::size_t t = 0; t < k; ++t) row[s * k + t] = gr.degrees[a][t];
            rows.push_back(row);
            rhs.push_back(br[a]);
        }
    auto sol = solve_linear(QMatrix::from_rows(rows, k * k), rhs);
    if (std::holds_alternative<Inconsistent>(sol)) {
        out.reason = "eigenvalues are not linear in the degree";
        return out;
    }
    const auto& x = std::get<AffineSolution>(sol);
    if (!x.kernel.empty()) {
        out.reason = "weight map not determined by the degrees";
        return out;
    }
    QMatrix L(k, k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) L(s, t) = x.particular[s * k + t];
    if (rank(L) != k) {
        out.reason = "weight map is not injective";
        return out;
    }
    out.root = true;
    return out;
}

Degree wedge_degree(const Gradation& gr, const Index& idx) {
    Degree d(gr.k, 0);
    for (auto i : idx) d = gr.sum(d, gr.degrees[i]);
    return gr.normalize(d);
}

std::map<Degree, std::vector<Vec>> decompose_lambda(const LieAlgebra& g, const Gradation& gr, std::size_t m) {
    std::size_t n = g.dim();
    const auto& b = wedge_basis(n, m);
    std::map<Degree, std::vector<Vec>> out;
    for (std::size_t i = 0; i < b.size(); ++i) out[wedge_degree(gr, b[i])].push_back(unit(b.size(), i));
    return out;
}

std::vector<Degree> limit_spaces(const LieAlgebra& g, const Gradation& gr) {
    std::size_t n = g.dim();
    auto l2 = decompose_lambda(g, gr, 2);
    auto l3 = decompose_lambda(g, gr, 3);
    std::vector<Degree> out;
    for (const auto& [deg, basis] : l2) {
        Degree twice = gr.sum(deg, deg);
        if (l3.count(twice)) continue;
        for (const auto& u : basis)
            for (const auto& v : basis) {
                auto br = schouten(g, MultiVector::from_coords(n, 2, u), MultiVector::from_coords(n, 2, v));
                if (!br.is_zero()) throw std::logic_error("limit space element with nonzero bracket");
            }
        out.push_back(deg);
    }
    return out;
}

Gradation catalog_gradation(const std::string& name, const Params& params) {
    auto z = [](std::vector<long> d) {
        Gradation gr;
        gr.k = 1;
        for (auto x : d) gr.degrees.push_back({x});
        return gr;
    };
    if (name == "sl2" || name == "r3m1") return z({0, 1, -1});
    if (name == "h") return z({1, 2, 3});
    if (name == "r3p0" || name == "r3") return name == "r3" ? z({1, 1, 0}) : z({0, 1, 1});
    if (name == "r31") return z({0, 1, 1});
    if (name == "su2") {
        Gradation gr = z({0, 1, 1});
        gr.modulus = 2;
        return gr;
    }
    if (name == "r31_z2") {
        Gradation gr;
        gr.k = 2;
        gr.degrees = {{0, 0}, {1, 0}, {0, 1}};
        return gr;
    }
    if (name == "r3l") {
        auto it = params.find("lambda");
        if (it == params.end()) throw std::invalid_argument("r3l gradation needs lambda");
        // e1 -> 1, e2 -> lambda, e3 -> 0, scaled by the denominator of lambda
        Q l = it->second;
        long q = l.get_den().get_si(), p = l.get_num().get_si();
        return z({q, p, 0});
    }
    if (name == "gl2") {
        Gradation gr;
        gr.k = 2;
        gr.degrees = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}};
        return gr;
    }
    if (name == "so22") {
        Gradation gr;
        gr.k = 2;
        gr.degrees = {{-1, 0}, {0, 0}, {1, 0}, {0, -1}, {0, 0}, {0, 1}};
        return gr;
    }
    throw std::invalid_argument("no catalog gradation for " + name);
}

} // namespace lb
