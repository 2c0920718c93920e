// One line per acceptance criterion. Exit status 0 when every criterion passes or fails only
// through pinned errata recorded in the fixtures.

#include "oracle.hpp"
#include "support.hpp"

#include "liebialg/grading.hpp"
#include "liebialg/invforms.hpp"

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

using namespace lb;
using support::flat;
using support::mat;

namespace {

struct Outcome {
    std::size_t checks = 0;
    std::size_t pinned = 0;
    std::vector<std::string> failures, pinned_items;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Outcome&)> run;
};

// Parameter samples for the parametric families.
const std::vector<Q> kSamples = {Q(-1, 2), Q(1, 2), Q(-1), Q(1), Q(2)};

std::vector<Vec> span_of(std::size_t n, std::size_t m, const std::vector<std::string>& labels) {
    std::vector<Vec> out;
    for (const auto& l : labels) {
        Index idx;
        for (char c : l.substr(1)) idx.push_back(std::size_t(c - '1'));
        out.push_back(unit(binom(n, m), wedge_index(n, idx)));
    }
    return out;
}

std::vector<Vec> full(std::size_t n, std::size_t m) {
    std::vector<Vec> out;
    for (std::size_t k = 0; k < binom(n, m); ++k) out.push_back(unit(binom(n, m), k));
    return out;
}

std::string str(const Params& p) { return p.empty() ? "" : "[" + params_str(p) + "]"; }

std::vector<Poly> polys(const std::vector<std::string>& src) {
    std::vector<Poly> out;
    for (const auto& s : src) out.push_back(parse_poly(s, 6).monic());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> sorted(std::vector<Poly> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void killing_forms(Outcome& o) {
    QMatrix k = killing_form(catalog("sl2"));
    o.expect(k == mat({{2, 0, 0}, {0, 0, 2}, {0, 2, 0}}), "sl2 Killing form");
    o.expect(extend_form(k, 2) == mat({{0, 4, 0}, {4, 0, 0}, {0, 0, -4}}), "sl2 Killing form on bivectors");
    o.expect(extend_form(k, 3) == mat({{-8}}), "sl2 Killing form on trivectors");
    QMatrix s = killing_form(catalog("su2"));
    o.expect(s == Q(-2) * QMatrix::identity(3), "su2 Killing form");
    o.expect(extend_form(s, 2) == Q(4) * QMatrix::identity(3), "su2 Killing form on bivectors");
    o.expect(extend_form(s, 3) == mat({{-8}}), "su2 Killing form on trivectors");
    o.expect(killing_form(catalog("h")).is_zero(), "Heisenberg Killing form");
}

void invariant_subspaces(Outcome& o) {
    auto check = [&](const LieAlgebra& g, const std::vector<Vec>& l2, const std::vector<Vec>& l3) {
        std::size_t n = g.dim();
        o.expect(canonical_basis(invariant_subspace(g, 2), binom(n, 2)) == canonical_basis(l2, binom(n, 2)),
                 g.name + str(g.params) + " bivector invariants");
        o.expect(canonical_basis(invariant_subspace(g, 3), binom(n, 3)) == canonical_basis(l3, binom(n, 3)),
                 g.name + str(g.params) + " trivector invariants");
    };
    check(catalog("sl2"), {}, full(3, 3));
    check(catalog("s1"), span_of(4, 2, {"e12"}), {});
    check(catalog("s2"), {}, {});
    check(catalog("s6"), {}, span_of(4, 3, {"e123"}));
    check(catalog("s7"), {}, span_of(4, 3, {"e123"}));
    check(catalog("n1"), span_of(4, 2, {"e12"}), span_of(4, 3, {"e123", "e124"}));
    check(catalog("gl2"), {}, span_of(4, 3, {"e123"}));

    std::size_t s3 = 0;
    for (const auto& a : kSamples)
        for (const auto& b : kSamples) {
            Params p{{"alpha", a}, {"beta", b}};
            LieAlgebra g;
            try {
                g = catalog("s3", p);
            } catch (const std::invalid_argument&) {
                continue;
            }
            ++s3;
            std::vector<std::string> l2;
            if (a == -1) l2.push_back("e12");
            if (b == -1) l2.push_back("e13");
            if (a + b == 0) l2.push_back("e23");
            check(g, span_of(4, 2, l2), a + b == -1 ? span_of(4, 3, {"e123"}) : std::vector<Vec>{});
        }
    o.expect(s3 >= 5, "s3 parameter samples");

    auto s4_samples = kSamples;
    s4_samples.push_back(-2);
    for (const auto& a : s4_samples) {
        LieAlgebra g = catalog("s4", {{"alpha", a}});
        check(g, a == -1 ? span_of(4, 2, {"e13"}) : std::vector<Vec>{},
              a == -2 ? span_of(4, 3, {"e123"}) : std::vector<Vec>{});
    }

    for (const auto& a : {Q(1, 2), Q(1), Q(2)}) {
        auto betas = kSamples;
        betas.push_back(0);
        betas.push_back(-a / 2);
        for (const auto& b : betas) {
            LieAlgebra g = catalog("s5", {{"alpha", a}, {"beta", b}});
            check(g, b == 0 ? span_of(4, 2, {"e23"}) : std::vector<Vec>{},
                  a + 2 * b == 0 ? span_of(4, 3, {"e123"}) : std::vector<Vec>{});
        }
    }

    for (const auto& a : {Q(-1, 2), Q(1, 2), Q(1)}) {
        LieAlgebra g = catalog("s8", {{"alpha", a}});
        check(g, a == Q(-1, 2) ? span_of(4, 2, {"e13"}) : std::vector<Vec>{}, {});
    }
}

void ybe_systems(Outcome& o) {
    auto sys = [](const std::string& n, const Params& p = {}) { return ybe_system(catalog(n, p)); };
    auto s1 = sys("s1");
    o.expect(sorted(s1.mcybe) == polys({"x3*x4", "x3*x6", "x5"}), "s1 mCYBE");
    o.expect(sorted(s1.cybe) == polys({"x3*x4", "x3*x6", "x5"}), "s1 CYBE");
    auto s7 = sys("s7");
    o.expect(sorted(s7.mcybe) == polys({"x5", "x6"}), "s7 mCYBE");
    o.expect(sorted(s7.cybe) == polys({"x4", "x5", "x6"}), "s7 CYBE");
    o.expect(sys("sl2").mcybe.empty(), "sl2 mCYBE is empty");

    for (const auto& a : {Q(1, 2), Q(1), Q(2)})
        for (const auto& b : kSamples) {
            Params p{{"alpha", a}, {"beta", b}};
            auto want = a + 2 * b == 0 ? polys({"x5", "x6"}) : polys({"x3*x4", "x5", "x6"});
            o.expect(sorted(sys("s5", p).mcybe) == want, "s5" + str(p) + " mCYBE");
        }

    o.expect(sorted(sys("s12").mcybe) ==
                 polys({"x2*x3 + x4*x5", "x1*x6 - 1/2*x2*x5 + 1/2*x3^2 + 1/2*x3*x4 + 1/2*x5^2",
                        "(x2 + x5)*x6", "(x3 - x4)*x6"}),
             "s12 mCYBE");
    auto gl2 = sys("gl2");
    o.expect(sorted(gl2.mcybe) == polys({"x1*x3 - x4*x5", "x2*x3 + x4*x6", "x2*x5 + x1*x6"}), "gl2 mCYBE");
    o.expect(sorted(gl2.cybe) ==
                 polys({"x1*x3 - x4*x5", "x2*x3 + x4*x6", "x2*x5 + x1*x6", "2*x1*x2 - x4^2"}),
             "gl2 CYBE");
}

void classification_tables(Outcome& o) {
    auto rows = load_orbit_rows(default_data_dir() + "/orbits.json");
    std::set<std::string> algebras;
    for (const auto& fx : rows) {
        LieAlgebra g = row_algebra(fx.row);
        algebras.insert(fx.row.algebra);
        auto rep = verify_classification_row(g, fx.row);
        Verdict v = judge_row(fx, rep);
        std::string what = fx.row.algebra + str(fx.row.params) + " " + fx.row.label;
        if (v == Verdict::known_erratum) {
            ++o.checks;
            ++o.pinned;
            o.pinned_items.push_back(what + ": " + fx.erratum_why);
            continue;
        }
        std::string detail;
        for (const auto& f : rep.failed) detail += f;
        o.expect(v == Verdict::pass, what + " (failed checks: " + (detail.empty() ? "stale erratum" : detail) + ")");
    }
    o.expect(algebras.size() >= 20, "table covers every classified algebra");
}

void bricks(Outcome& o) {
    auto contains = [](const std::vector<Poly>& v, const std::string& s) {
        return std::find(v.begin(), v.end(), parse_poly(s, 6)) != v.end();
    };
    auto s1 = find_bricks(catalog("s1"));
    o.expect(contains(s1.bricks, "x5") && contains(s1.bricks, "x6"), "s1 bricks contain x5 and x6");
    for (const char* n : {"s2", "s12"})
        o.expect(find_bricks(catalog(n)).bricks == std::vector<Poly>{parse_poly("x6", 6)},
                 std::string(n) + " bricks are exactly x6");
    for (const char* n : {"s1", "s2", "s12"}) {
        LieAlgebra g = catalog(n);
        for (const auto& b : find_bricks(g).bricks)
            o.expect(std::holds_alternative<DarbouxFamily>(check_darboux_family(g, {b}, 0)),
                     std::string(n) + " brick " + b.str() + " has constant cofactors");
    }
}

void center_extension(Outcome& o) {
    LieAlgebra s1 = catalog("s1");
    auto r = extend_center(s1);
    o.expect(std::holds_alternative<CenterExtension>(r), "s1 extension is feasible");
    if (auto* ce = std::get_if<CenterExtension>(&r)) {
        o.expect(ce->alphas == Vec{1, 1, 0, 0}, "s1 alphas");
        std::vector<QMatrix> want(4, QMatrix(5, 5));
        want[0](0, 4) = -1;
        want[1](0, 3) = -1;
        want[1](1, 4) = -1;
        want[2](2, 3) = -1;
        want[3](0, 1) = 1;
        want[3](2, 2) = 1;
        for (std::size_t i = 0; i < 4; ++i)
            o.expect(ce->rep[i] == want[i], "s1 matrix for e" + std::to_string(i + 1));
        o.expect(is_representation(s1, ce->rep), "s1 matrices satisfy the relations");
        o.expect(is_faithful(ce->rep), "s1 matrices have zero joint kernel");
    }
    o.expect(std::holds_alternative<Infeasible>(extend_center(catalog("s6_231"))), "six-dimensional example");
    o.expect(std::holds_alternative<Infeasible>(extend_center(catalog("n7"))), "seven-dimensional example");
}

void gl2_forms(Outcome& o) {
    auto fam = solve_invariant_forms(catalog("gl2"), 2, Symmetry::sym);
    auto A = mat({{0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
                  {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}});
    auto B = mat({{0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, -1, 0, 0},
                  {0, 0, -1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0}});
    auto C = mat({{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 0}});
    o.expect(fam.basis_forms.size() == 3, "three parameters");
    o.expect(canonical_basis(flat(fam.basis_forms), 36) == canonical_basis(flat({A, B, C}), 36),
             "echelon equality with the printed family");
}

// ---- property suite

std::vector<LieAlgebra> small_catalog() { return support::sample_catalog(4); }

int sgn(std::size_t k) { return k % 2 ? -1 : 1; }

void schouten_laws(Outcome& o) {
    oracle::Sampler s(2024);
    for (const auto& g : small_catalog()) {
        std::size_t n = g.dim();
        std::size_t bad = 0;
        for (int t = 0; t < 100; ++t) {
            std::size_t p = std::size_t(s.integer(1, 2)), q = std::size_t(s.integer(1, 2)),
                        r = std::size_t(s.integer(1, 2));
            auto mv = [&](std::size_t m) { return MultiVector::from_coords(n, m, s.sparse(binom(n, m))); };
            MultiVector u = mv(p), v = mv(q), w = mv(r);
            bool ok = schouten(g, u, v) == Q(-sgn((p - 1) * (q - 1))) * schouten(g, v, u);
            ok = ok && schouten(g, u, wedge(v, w)) ==
                           wedge(schouten(g, u, v), w) + Q(sgn((p + 1) * q)) * wedge(v, schouten(g, u, w));
            MultiVector jac = Q(sgn((p - 1) * (r - 1))) * schouten(g, u, schouten(g, v, w)) +
                              Q(sgn((q - 1) * (p - 1))) * schouten(g, v, schouten(g, w, u)) +
                              Q(sgn((r - 1) * (q - 1))) * schouten(g, w, schouten(g, u, v));
            ok = ok && jac.is_zero();
            bad += !ok;
        }
        o.expect(bad == 0, "(a) " + g.name + str(g.params) + ": " + std::to_string(bad) + " violations");
    }
}

void form_invariance(Outcome& o) {
    for (const auto& g : support::sample_catalog(5))
        for (std::size_t m = 1; m <= 3 && m <= g.dim(); ++m)
            for (auto sym : {Symmetry::sym, Symmetry::antisym}) {
                auto fam = solve_invariant_forms(g, m, sym);
                for (const auto& b : fam.basis_forms) {
                    bool ok = true;
                    for (std::size_t i = 0; i < g.dim(); ++i) {
                        QMatrix a = ad_lift(g, i, m);
                        ok = ok && (a.transpose() * b + b * a).is_zero();
                    }
                    o.expect(ok, "(b) " + g.name + str(g.params) + " form on degree " + std::to_string(m));
                }
            }
}

void cojacobi(Outcome& o) {
    oracle::Sampler s(7);
    for (const auto& g : support::sample_catalog(3)) {
        auto sys = ybe_system(g);
        std::size_t bad = 0;
        for (int t = 0; t < 50; ++t) {
            MultiVector r = MultiVector::from_coords(3, 2, s.sparse(3));
            bad += cojacobi_check(g, r) != check_solution(sys, r.coords()).mcybe;
        }
        o.expect(bad == 0, "(c) " + g.name + str(g.params) + ": " + std::to_string(bad) + " disagreements");
    }
}

void nondegeneracy(Outcome& o) {
    auto rows = [](const QMatrix& m) {
        oracle::Mat out;
        for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
        return out;
    };
    for (const char* n : {"sl2", "su2"}) {
        QMatrix k = killing_form(catalog(n));
        o.expect(oracle::det(rows(k)) != 0, std::string("(d) ") + n + " Killing form nondegenerate");
        for (std::size_t m = 2; m <= 3; ++m)
            o.expect(oracle::det(rows(extend_form(k, m))) != 0,
                     std::string("(d) ") + n + " extension to degree " + std::to_string(m));
    }
    oracle::Sampler s(11);
    for (int t = 0; t < 30; ++t) {
        QMatrix b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) b(i, j) = b(j, i) = s.rational();
        bool nd = oracle::det(rows(b)) != 0;
        for (std::size_t m = 2; m <= 3; ++m)
            o.expect((oracle::det(rows(extend_form(b, m))) != 0) == nd, "(d) random symmetric form");
    }
}

void limit_spaces_solve(Outcome& o) {
    LieAlgebra g = catalog("so22");
    Gradation gr = catalog_gradation("so22");
    auto parts = decompose_lambda(g, gr, 2);
    oracle::Sampler s(5);
    auto lim = limit_spaces(g, gr);
    o.expect(!lim.empty(), "(e) so22 has limit spaces");
    for (const auto& d : lim) {
        for (const auto& v : parts.at(d))
            o.expect(oracle::schouten_square(g, v) == Vec(20), "(e) so22 basis element of a limit space");
        for (int t = 0; t < 20; ++t) {
            Vec r(15);
            for (const auto& v : parts.at(d)) r = add(r, scaled(v, s.rational()));
            o.expect(oracle::schouten_square(g, r) == Vec(20), "(e) so22 random limit element");
        }
    }
}

// Automorphisms exp(tD) for nilpotent derivations D, computed exactly.
std::vector<QMatrix> unipotent_group(const LieAlgebra& g) {
    std::vector<QMatrix> out;
    for (const auto& d : derivations(g))
        for (const auto& t : {Q(1), Q(-1, 2)}) {
            auto e = exp_derivation(g, t * d);
            if (e.exact && !(e.exact_value == QMatrix::identity(g.dim()))) out.push_back(e.exact_value);
        }
    return out;
}

void locus_transport(Outcome& o) {
    auto tf = load_trees(default_data_dir() + "/trees.json");
    for (const auto& t : tf.trees) {
        LieAlgebra g = catalog(t.algebra, t.params);
        auto group = unipotent_group(g);
        std::vector<QMatrix> lifts;
        for (const auto& a : group) lifts.push_back(lift(a, 2, LiftMode::group));
        auto fm = fundamental_matrix(g);
        auto sys = ybe_system(g);
        std::size_t moved = 0, bad = 0;
        for (const auto& node : t.nodes) {
            auto res = check_tree_node(g, node, t.params, tf.radius, tf.cap);
            if (!res.report) continue;
            auto cons = node_constraints(node, binom(g.dim(), 2), t.params);
            const auto& pts = res.report->points;
            for (std::size_t i = 0; i < pts.size() && i < 8; ++i)
                for (const auto& l : lifts) {
                    Vec y = l.apply(pts[i].x);
                    bool ok = std::all_of(cons.begin(), cons.end(), [&](const Constraint& c) { return c.holds(y); });
                    ok = ok && rank(fm.at(y)) == pts[i].rank;
                    ok = ok && check_solution(sys, y).mcybe == pts[i].mcybe;
                    ++moved;
                    bad += !ok;
                }
        }
        o.expect(bad == 0, "(f) " + t.algebra + str(t.params) + ": " + std::to_string(bad) + " of " +
                               std::to_string(moved) + " transported points leave their node");
    }
}

void property_suite(Outcome& o) {
    schouten_laws(o);
    form_invariance(o);
    cojacobi(o);
    nondegeneracy(o);
    limit_spaces_solve(o);
    locus_transport(o);
}

void darboux_trees(Outcome& o) {
    auto tf = load_trees(default_data_dir() + "/trees.json");
    for (const auto& t : tf.trees) {
        LieAlgebra g = catalog(t.algebra, t.params);
        if (g.dim() != 4) continue;
        for (const auto& node : t.nodes) {
            auto r = check_tree_node(g, node, t.params, tf.radius, tf.cap);
            std::string what = t.algebra + str(t.params) + " node " + node.name;
            if (r.verdict == Verdict::known_erratum) {
                ++o.checks;
                ++o.pinned;
                o.pinned_items.push_back(what + ": " + r.reason);
                continue;
            }
            o.expect(r.verdict == Verdict::pass, what + ": " + r.reason);
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const std::vector<Criterion> criteria = {
        {1, "Killing forms", 1, killing_forms},
        {2, "invariant subspaces", 5, invariant_subspaces},
        {3, "YBE systems", 2, ybe_systems},
        {4, "classification tables", 30, classification_tables},
        {5, "bricks", 5, bricks},
        {6, "center extension", 1, center_extension},
        {7, "gl2 invariant forms", 1, gl2_forms},
        {8, "property suite", 30, property_suite},
        {9, "Darboux-tree fixtures", 30, darboux_trees},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        std::string crash;
        try {
            c.run(o);
        } catch (const std::exception& e) {
            crash = e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool over = dt > c.budget_s;
        std::string status;
        if (!crash.empty() || !o.failures.empty() || over)
            status = "FAIL";
        else if (o.pinned > 0)
            status = "FAIL (known errata, pinned)";
        else
            status = "PASS";
        if (status == "FAIL") all_ok = false;

        char line[256];
        std::snprintf(line, sizeof line, "criterion %d  %-24s %-28s %4zu checks, %3zu pinned  %7.3f s / %g s", c.id,
                      c.title, status.c_str(), o.checks, o.pinned, dt, c.budget_s);
        std::cout << line << "\n";
        if (!crash.empty()) std::cout << "    exception: " << crash << "\n";
        if (over) std::cout << "    over time budget\n";
        std::size_t shown = 0;
        for (const auto& f : o.failures)
            if (verbose || shown++ < 10) std::cout << "    " << f << "\n";
        if (verbose)
            for (const auto& p : o.pinned_items) std::cout << "    pinned: " << p << "\n";
        if (!verbose && o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
    }
    return all_ok ? 0 : 1;
}
