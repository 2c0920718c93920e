#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

#include "liebialg/darboux.hpp"

#include <algorithm>

using namespace lb;
using support::sample_catalog;

namespace {

Poly P(const std::string& s, std::size_t n = 6) { return parse_poly(s, n); }

std::vector<Constraint> cons(const std::vector<std::string>& src, std::size_t n = 6) {
    std::vector<Constraint> out;
    for (const auto& s : src) out.push_back(parse_constraint(s, n));
    return out;
}

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return a.monic() == b.monic() && (a.terms().size() == b.terms().size());
}

} // namespace

TEST_SUITE("darboux") {

TEST_CASE("fundamental matrix of s1") {
    auto fm = fundamental_matrix(catalog("s1"));
    REQUIRE(fm.rows.size() == 6);
    const std::vector<std::vector<std::string>> M = {{"2*x1", "x2", "x3", "x4", "x5", "0"},
                                                     {"0", "x4", "x5", "0", "0", "0"},
                                                     {"-x5", "-x6", "0", "0", "0", "0"},
                                                     {"x3", "0", "0", "-x6", "0", "0"},
                                                     {"0", "x2", "0", "x4", "0", "x6"},
                                                     {"0", "x3", "0", "x5", "0", "0"}};
    for (std::size_t d = 0; d < 6; ++d)
        for (std::size_t a = 0; a < 6; ++a) {
            INFO(d << "," << a);
            CHECK(fm.rows[d][a] == P(M[d][a]));
        }
    Vec p{1, 2, 3, 4, 5, 6};
    QMatrix at = fm.at(p);
    for (std::size_t d = 0; d < 6; ++d)
        for (std::size_t a = 0; a < 6; ++a) CHECK(at(d, a) == fm.rows[d][a].eval(p));

    CHECK(apply_field(fm, 0, P("x1")) == P("2*x1"));
    CHECK(apply_field(fm, 2, P("x1*x2")) == P("-x2*x5 - x1*x6"));
}

TEST_CASE("abelian algebras act by all of gl") {
    LieAlgebra a = build("ab3", 3, {});
    auto fm = fundamental_matrix(a);
    CHECK(fm.rows.size() == 9);
    CHECK(orbit_dims(a, MultiVector::basis(3, {0, 1})).inner == 0);
    CHECK(orbit_dims(a, MultiVector::basis(3, {0, 1})).aut == 3);
    CHECK(orbit_dims(a, MultiVector(3, 2)).aut == 0);
}

TEST_CASE("orbit dimensions agree with the oracle") {
    oracle::Sampler s(23);
    for (const auto& g : sample_catalog(5)) {
        INFO(g.name);
        std::size_t n = g.dim();
        for (int t = 0; t < 15; ++t) {
            Vec r = s.sparse(binom(n, 2));
            auto od = orbit_dims(g, MultiVector::from_coords(n, 2, r));
            CHECK(od.aut == oracle::orbit_dim(g, r));
            CHECK(od.inner == oracle::inner_orbit_dim(g, r));
            CHECK(od.inner <= od.aut);
        }
    }
    LieAlgebra s1 = catalog("s1");
    CHECK(orbit_dims(s1, MultiVector::basis(4, {0, 3})).aut == 3);
    CHECK(orbit_dims(s1, MultiVector::basis(4, {0, 1})).aut == 1);
    CHECK(orbit_dims(s1, MultiVector::basis(4, {1, 2})).aut == 2);
}

TEST_CASE("bricks") {
    auto s1 = find_bricks(catalog("s1"));
    CHECK(s1.bricks.size() == 2);
    CHECK(std::find(s1.bricks.begin(), s1.bricks.end(), P("x6")) != s1.bricks.end());
    CHECK(std::find(s1.bricks.begin(), s1.bricks.end(), P("x5")) != s1.bricks.end());
    CHECK_FALSE(s1.undetected_possible);

    auto s2 = find_bricks(catalog("s2"));
    CHECK(s2.bricks == std::vector<Poly>{P("x6")});

    auto s12 = find_bricks(catalog("s12"));
    CHECK(s12.bricks == std::vector<Poly>{P("x6")});
    CHECK(s12.undetected_possible);
}

TEST_CASE("bricks are eigenfunctions of every field") {
    for (const auto& g : sample_catalog(4)) {
        INFO(g.name);
        auto fm = fundamental_matrix(g);
        auto br = find_bricks(g);
        REQUIRE(br.eigenvalues.size() == br.bricks.size());
        for (std::size_t b = 0; b < br.bricks.size(); ++b) {
            for (std::size_t d = 0; d < fm.rows.size(); ++d)
                CHECK(apply_field(fm, d, br.bricks[b]) == br.eigenvalues[b][d] * br.bricks[b]);
            CHECK(std::holds_alternative<DarbouxFamily>(check_darboux_family(g, {br.bricks[b]}, 0)));
        }
    }
}

TEST_CASE("Darboux families") {
    LieAlgebra s1 = catalog("s1");
    auto fm = fundamental_matrix(s1);
    auto ok = check_darboux_family(s1, {P("x5"), P("x6")});
    REQUIRE(std::holds_alternative<DarbouxFamily>(ok));
    const auto& fam = std::get<DarbouxFamily>(ok);
    for (std::size_t d = 0; d < fm.rows.size(); ++d)
        for (std::size_t j = 0; j < fam.generators.size(); ++j) {
            Poly sum(6);
            for (std::size_t i = 0; i < fam.generators.size(); ++i)
                sum = sum + fam.cofactors[d][j][i] * fam.generators[i];
            CHECK(apply_field(fm, d, fam.generators[j]) == sum);
        }

    auto bad = check_darboux_family(s1, {P("x1")});
    REQUIRE(std::holds_alternative<NotDarboux>(bad));
    auto nd = std::get<NotDarboux>(bad);
    CHECK(nd.generator == 0);
    CHECK_FALSE(proportional(apply_field(fm, nd.field, P("x1")), P("x1")));

    auto sys = ybe_system(s1);
    CHECK(std::holds_alternative<DarbouxFamily>(check_darboux_family(s1, sys.mcybe, 1)));
    for (const auto& g : sample_catalog(4)) {
        INFO(g.name);
        auto ys = ybe_system(g);
        std::vector<Poly> nz;
        for (const auto& p : ys.mcybe_coeffs)
            if (!p.is_zero()) nz.push_back(p);
        if (!nz.empty()) CHECK(std::holds_alternative<DarbouxFamily>(check_darboux_family(g, nz, 1)));
    }
}

TEST_CASE("locus sampling on s1") {
    LieAlgebra s1 = catalog("s1");
    auto one = locus_report(s1, cons({"x5 = 0", "x6 = 0", "x3 = 0", "x4 = 0", "x2 = 0", "x1 != 0"}));
    REQUIRE(std::holds_alternative<LocusReport>(one));
    const auto& r1 = std::get<LocusReport>(one);
    CHECK(r1.constant_rank);
    CHECK(r1.min_rank == 1);
    CHECK(r1.candidates == 6);
    CHECK(r1.mcybe_count == r1.points.size());

    auto vi = std::get<LocusReport>(locus_report(s1, cons({"x5 = 0", "x6 = 0", "x4 = 0", "x3 != 0"}), 2));
    CHECK(vi.constant_rank);
    CHECK(vi.max_rank == 3);

    auto ns = std::get<LocusReport>(locus_report(s1, cons({"x5 != 0"}), 1, 40));
    CHECK(ns.mcybe_count == 0);
    CHECK(ns.points.size() == 40);

    auto mixed = std::get<LocusReport>(locus_report(s1, cons({"x5 = 0", "x6 = 0"}), 1));
    CHECK_FALSE(mixed.constant_rank);

    CHECK(std::holds_alternative<EmptySample>(locus_report(s1, cons({"x1 > 5", "x2 = 0"}), 2)));
    CHECK_THROWS_AS(locus_report(s1, {}, 20), std::invalid_argument);
}

TEST_CASE("rational roots and characteristic polynomials") {
    std::size_t left = 99;
    // (x - 1)(x + 2)(2x - 1)(x^2 + 1)
    Poly x = Poly::var(1, 0), one = Poly::constant(1, 1);
    Poly f = (x - one) * (x + Q(2) * one) * (Q(2) * x - one) * (x * x + one);
    std::vector<Q> c(6);
    for (const auto& [m, v] : f.terms()) c[m[0]] = v;
    auto roots = rational_roots(c, &left);
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<Q>{-2, Q(1, 2), 1});
    CHECK(left == 2);
    auto dbl = rational_roots({0, 0, 1}, &left);
    CHECK(dbl == std::vector<Q>{0, 0});
    CHECK(left == 0);

    QMatrix d(2, 2);
    d(0, 0) = 1;
    d(1, 1) = 2;
    CHECK(charpoly(d) == std::vector<Q>{2, -3, 1});

    oracle::Sampler s(6);
    for (int t = 0; t < 10; ++t) {
        QMatrix a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = s.rational();
        auto cp = charpoly(a);
        for (long z = -2; z <= 2; ++z) {
            oracle::Mat m(4, std::vector<Q>(4));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m[i][j] = (i == j ? Q(z) : Q(0)) - a(i, j);
            Q val = 0, pw = 1;
            for (const auto& k : cp) {
                val += k * pw;
                pw *= z;
            }
            CHECK(val == oracle::det(m));
        }
    }
}

} // TEST_SUITE
