#include "liebialg/darboux.hpp"
#include "liebialg/grading.hpp"
#include "liebialg/invforms.hpp"
#include "liebialg/io.hpp"
#include "liebialg/ybe.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <concepts>
#include <filesystem>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace lb;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSchema = "liebialg-report/1";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string target;
    std::string params;
    std::string out;
    std::string data_dir = default_data_dir();
    std::string r;
    std::string alphas;
    bool pretty = false;
    long grid_radius = -1; // fixture value unless set
    std::size_t cap = 0;
    unsigned cofactor_degree = 1;
    double float_tol = 1e-12;
    bool tables = false, killing = false, invariants = false, ybe = false, bricks = false, forms = false,
         gradation = false, all = false;
};

json jq(const Q& q) { return to_string(q); }

json jvec(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(jq(x));
    return a;
}

json jmat(const QMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvec(m.row(i)));
    return a;
}

json jpolys(const std::vector<Poly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.str());
    return a;
}

json jspan(std::size_t n, std::size_t m, const std::vector<Vec>& basis) {
    json a = json::array();
    for (const auto& v : basis) a.push_back(MultiVector::from_coords(n, m, v).str());
    return a;
}

Vec flatten(const QMatrix& m) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

QMatrix matrix_from_json(const json& j) {
    std::vector<Vec> rows;
    for (const auto& r : j) {
        Vec row;
        for (const auto& x : r) row.push_back(parse_rational(x.get<std::string>()));
        rows.push_back(row);
    }
    return QMatrix::from_rows(rows, rows.empty() ? 0 : rows[0].size());
}

std::vector<Poly> sorted_polys(std::vector<Poly> v) {
    std::sort(v.begin(), v.end());
    return v;
}

class Report {
public:
    explicit Report(std::string command) {
        doc_["schema"] = kSchema;
        doc_["tool"] = {{"name", "liebialg"}, {"version", kVersion}};
        doc_["command"] = std::move(command);
    }

    void algebra(const LieAlgebra& g) {
        json p = json::object();
        for (const auto& [k, v] : g.params) p[k] = jq(v);
        doc_["algebra"] = {{"name", g.name}, {"dim", g.dim()}, {"params", p}, {"basis", g.labels}};
    }

    json& operator[](const std::string& key) { return doc_[key]; }

    // status: pass, fail, known_erratum, skipped, error
    void check(const std::string& id, const std::string& anchor, const std::string& status, json detail = {}) {
        json c = {{"id", id}, {"anchor", anchor}, {"status", status}};
        if (!detail.is_null()) c["detail"] = std::move(detail);
        checks_.push_back(std::move(c));
        ++counts_[status];
    }

    template <class B>
        requires std::same_as<B, bool>
    void check(const std::string& id, const std::string& anchor, B ok, json detail = {}) {
        check(id, anchor, std::string(ok ? "pass" : "fail"), std::move(detail));
    }

    // Runs `body`; an exception from a module becomes an "error" check.
    template <class F>
    void guarded(const std::string& id, const std::string& anchor, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(id, anchor, "error", json{{"message", e.what()}});
        }
    }

    bool failed() const { return count("fail") + count("error") > 0; }

    json finish(double seconds) {
        doc_["checks"] = checks_;
        doc_["summary"] = {{"total", checks_.size()},         {"passed", count("pass")},
                           {"failed", count("fail")},         {"errors", count("error")},
                           {"known_errata", count("known_erratum")}, {"skipped", count("skipped")}};
        doc_["timing_s"] = seconds;
        return doc_;
    }

    const json& checks() const { return checks_; }

private:
    std::size_t count(const std::string& s) const {
        auto it = counts_.find(s);
        return it == counts_.end() ? 0 : it->second;
    }

    json doc_ = json::object();
    json checks_ = json::array();
    std::map<std::string, std::size_t> counts_;
};

Params resolve_params(const std::string& s) {
    if (s.empty()) return {};
    try {
        return parse_params(s);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad --params: ") + e.what());
    }
}

LieAlgebra resolve(const Options& o) {
    Params p = resolve_params(o.params);
    if (in_catalog(o.target)) {
        try {
            return catalog(o.target, p);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (std::filesystem::is_regular_file(o.target)) {
        if (!p.empty()) throw InputError("--params applies to catalog algebras only");
        return parse_algebra_file(o.target);
    }
    throw InputError("unknown target '" + o.target + "': neither a catalog name nor a file");
}

bool is_catalog_target(const Options& o) { return in_catalog(o.target); }

json load_references(const Options& o) {
    std::string path = o.data_dir + "/references.json";
    if (!std::filesystem::exists(path)) return json::object();
    return json::parse(read_file(path));
}

// reference entry for an unparametrised catalog algebra, or null
json reference(const json& refs, const std::string& section, const Options& o, const LieAlgebra& g) {
    if (!is_catalog_target(o) || !g.params.empty()) return nullptr;
    if (!refs.contains(section) || !refs[section].contains(g.name)) return nullptr;
    return refs[section][g.name];
}

Vec parse_bivector(const std::string& s, std::size_t n) {
    std::vector<std::pair<std::string, Q>> terms;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        try {
            if (eq == std::string::npos) terms.emplace_back(item, Q(1));
            else terms.emplace_back(item.substr(0, eq), parse_rational(item.substr(eq + 1)));
        } catch (const std::invalid_argument& e) {
            throw InputError("bad bivector term '" + item + "': " + e.what());
        }
    }
    try {
        return bivector_from_terms(n, terms);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad bivector: ") + e.what());
    }
}

std::string status_of(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::known_erratum: return "known_erratum";
    default: return "fail";
    }
}

bool params_match(const Params& want, const Params& have) {
    for (const auto& [k, v] : want) {
        auto it = have.find(k);
        if (it == have.end() || it->second != v) return false;
    }
    return true;
}

// ---- verify sections

// Without --params a parametric family is checked at every stored sample.
void verify_tables(Report& rep, const Options& o, const std::string& name, const Params& params) {
    const std::string anchor0 = "orbit table of " + name;
    if (!is_catalog_target(o)) {
        rep.check("tables", anchor0, "skipped", json{{"reason", "no table rows for a user algebra"}});
        return;
    }
    std::vector<RowFixture> rows;
    bool loaded = false;
    rep.guarded("tables", anchor0, [&] {
        rows = load_orbit_rows(o.data_dir + "/orbits.json", name);
        loaded = true;
    });
    std::map<std::string, LieAlgebra> algebras;
    std::size_t used = 0;
    for (const auto& fx : rows) {
        if (!params_match(params, fx.row.params)) continue;
        ++used;
        std::string ps = params_str(fx.row.params);
        std::string id = "tables/" + name + "/" + fx.row.label + (ps.empty() ? "" : "@" + ps);
        std::string anchor = "orbit table of " + name + ", row " + fx.row.label;
        rep.guarded(id, anchor, [&] {
            auto it = algebras.find(ps);
            if (it == algebras.end()) it = algebras.emplace(ps, row_algebra(fx.row)).first;
            const LieAlgebra& h = it->second;
            auto rr = verify_classification_row(h, fx.row);
            Verdict v = judge_row(fx, rr);
            json d = {{"representative", MultiVector::from_coords(h.dim(), 2, fx.row.rep).str()},
                      {"mcybe", rr.mcybe},
                      {"cybe", rr.cybe},
                      {"computed_dim", rr.computed_dim}};
            if (fx.row.published_dim) d["published_dim"] = *fx.row.published_dim;
            if (fx.row.starred) d["starred"] = *fx.row.starred;
            if (!rr.failed.empty()) d["failed_parts"] = rr.failed;
            if (v == Verdict::known_erratum) d["erratum"] = fx.erratum_why;
            rep.check(id, anchor, status_of(v), d);
        });
    }
    if (used == 0 && loaded) rep.check("tables", anchor0, "skipped", json{{"reason", "no rows for this algebra and parameters"}});
}

void verify_killing(Report& rep, const Options& o, const LieAlgebra& g, const json& refs) {
    json ref = reference(refs, "killing", o, g);
    QMatrix k = killing_form(g);
    for (std::size_t m = 1; m <= std::min<std::size_t>(3, g.dim()); ++m) {
        std::string id = "killing/" + g.name + "/Lambda" + std::to_string(m);
        std::string anchor = "Killing form of " + g.name + " on Lambda^" + std::to_string(m);
        rep.guarded(id, anchor, [&] {
            QMatrix km = extend_form(k, m);
            bool inv = is_invariant_form(g, km, m);
            json d = {{"matrix", jmat(km)}, {"invariant", inv}};
            bool ok = inv;
            std::string key = std::to_string(m);
            if (!ref.is_null() && ref.contains(key)) {
                bool eq = matrix_from_json(ref[key]) == km;
                d["matches_reference"] = eq;
                ok = ok && eq;
            }
            rep.check(id, anchor, ok, d);
        });
    }
}

void verify_invariants(Report& rep, const Options& o, const LieAlgebra& g, const json& refs) {
    json ref = reference(refs, "invariants", o, g);
    std::size_t n = g.dim();
    for (std::size_t m = 2; m <= std::min<std::size_t>(3, n); ++m) {
        std::string id = "invariants/" + g.name + "/Lambda" + std::to_string(m);
        std::string anchor = "invariant elements of Lambda^" + std::to_string(m) + " " + g.name;
        rep.guarded(id, anchor, [&] {
            auto basis = invariant_subspace(g, m);
            bool ok = true;
            for (const auto& v : basis) ok = ok && is_invariant(g, MultiVector::from_coords(n, m, v));
            json d = {{"basis", jspan(n, m, basis)}};
            std::string key = std::to_string(m);
            if (!ref.is_null() && ref.contains(key)) {
                std::vector<Vec> want;
                for (const auto& lbl : ref[key]) {
                    std::string s = lbl.get<std::string>();
                    Index idx;
                    for (std::size_t c = 1; c < s.size(); ++c) idx.push_back(std::size_t(s[c] - '1'));
                    want.push_back(unit(binom(n, m), wedge_index(n, idx)));
                }
                bool eq = same_span(want, basis, binom(n, m));
                d["matches_reference"] = eq;
                ok = ok && eq;
            }
            rep.check(id, anchor, ok, d);
        });
    }
    std::string id = "invariants/" + g.name + "/traceless-ideals";
    rep.guarded(id, "invariants from traceless ideals of " + g.name, [&] {
        json items = json::array();
        bool ok = true;
        for (const auto& t : traceless_ideal_invariants(g)) {
            bool inv = is_invariant(g, t.top);
            ok = ok && inv;
            items.push_back({{"source", t.source}, {"top", t.top.str()}, {"invariant", inv}});
        }
        rep.check(id, "invariants from traceless ideals of " + g.name, ok, json{{"items", items}});
    });
}

void verify_ybe(Report& rep, const Options& o, const LieAlgebra& g, const json& refs) {
    json ref = reference(refs, "ybe", o, g);
    std::size_t n = g.dim();
    std::string id = "ybe/" + g.name;
    std::string anchor = "Yang-Baxter equations of " + g.name;
    rep.guarded(id, anchor, [&] {
        auto sys = ybe_system(g);
        // every basis bivector and every pair sum: mCYBE from the system agrees with direct invariance
        bool consistent = true;
        std::size_t N = binom(n, 2);
        for (std::size_t a = 0; a < N && consistent; ++a)
            for (std::size_t b = a; b < N && consistent; ++b) {
                Vec r = unit(N, a);
                if (b != a) r = add(r, unit(N, b));
                bool m = check_solution(sys, r).mcybe;
                consistent = m == is_invariant(g, schouten_square(g, MultiVector::from_coords(n, 2, r)));
            }
        json d = {{"cybe", jpolys(sys.cybe)},
                  {"mcybe", jpolys(sys.mcybe)},
                  {"invariant_Lambda3", jspan(n, 3, sys.invariant3)},
                  {"consistent_with_invariance", consistent}};
        bool ok = consistent;
        for (const char* key : {"mcybe", "cybe"}) {
            if (ref.is_null() || !ref.contains(key)) continue;
            std::vector<Poly> want;
            for (const auto& s : ref[key]) want.push_back(parse_poly(s.get<std::string>(), N));
            const auto& got = std::string(key) == "mcybe" ? sys.mcybe : sys.cybe;
            bool eq = sorted_polys(want) == sorted_polys(got);
            d[std::string(key) + "_matches_reference"] = eq;
            ok = ok && eq;
        }
        rep.check(id, anchor, ok, d);
    });
}

json brick_detail(const LieAlgebra& g, const BrickResult& br, unsigned bound, bool& ok) {
    json items = json::array();
    for (std::size_t b = 0; b < br.bricks.size(); ++b) {
        bool darboux = std::holds_alternative<DarbouxFamily>(check_darboux_family(g, {br.bricks[b]}, bound));
        ok = ok && darboux;
        items.push_back({{"brick", br.bricks[b].str()}, {"eigenvalues", jvec(br.eigenvalues[b])}, {"darboux", darboux}});
    }
    return json{{"bricks", items}, {"undetected_possible", br.undetected_possible}, {"cofactor_degree", bound}};
}

void verify_bricks(Report& rep, const Options& o, const LieAlgebra& g, const json& refs) {
    json ref = reference(refs, "bricks", o, g);
    std::string id = "bricks/" + g.name;
    std::string anchor = "bricks of " + g.name;
    rep.guarded(id, anchor, [&] {
        auto br = find_bricks(g);
        bool ok = true;
        json d = brick_detail(g, br, o.cofactor_degree, ok);
        if (!ref.is_null()) {
            std::size_t N = binom(g.dim(), 2);
            auto has = [&](const std::string& s) {
                return std::find(br.bricks.begin(), br.bricks.end(), parse_poly(s, N)) != br.bricks.end();
            };
            bool eq = true;
            if (ref.contains("contains"))
                for (const auto& s : ref["contains"]) eq = eq && has(s.get<std::string>());
            if (ref.contains("exactly")) {
                eq = eq && ref["exactly"].size() == br.bricks.size();
                for (const auto& s : ref["exactly"]) eq = eq && has(s.get<std::string>());
            }
            d["matches_reference"] = eq;
            ok = ok && eq;
        }
        rep.check(id, anchor, ok, d);
    });
}

void verify_forms(Report& rep, const Options& o, const LieAlgebra& g, const json& refs) {
    json ref = reference(refs, "forms", o, g);
    std::size_t m = std::min<std::size_t>(2, g.dim());
    for (auto [sym, key] : {std::pair{Symmetry::sym, "sym2"}, std::pair{Symmetry::antisym, "antisym2"}}) {
        std::string id = "forms/" + g.name + "/" + key;
        std::string anchor = std::string(sym == Symmetry::sym ? "symmetric" : "antisymmetric") +
                             " invariant bilinear forms on Lambda^2 " + g.name;
        rep.guarded(id, anchor, [&] {
            auto fam = solve_invariant_forms(g, m, sym);
            bool ok = true;
            json forms = json::array();
            std::vector<Vec> got;
            for (const auto& f : fam.basis_forms) {
                ok = ok && is_invariant_form(g, f, m);
                forms.push_back(jmat(f));
                got.push_back(flatten(f));
            }
            json d = {{"dimension", fam.basis_forms.size()}, {"basis", forms}};
            if (!ref.is_null() && ref.contains(key)) {
                std::vector<Vec> want;
                for (const auto& f : ref[key]) want.push_back(flatten(matrix_from_json(f)));
                std::size_t N = binom(g.dim(), m);
                bool eq = same_span(want, got, N * N);
                d["matches_reference"] = eq;
                ok = ok && eq;
            }
            rep.check(id, anchor, ok, d);
        });
    }
}

void verify_gradation(Report& rep, const Options& o, const LieAlgebra& g) {
    std::string id = "gradation/" + g.name;
    std::string anchor = "gradation of " + g.name;
    if (!is_catalog_target(o)) {
        rep.check(id, anchor, "skipped", json{{"reason", "no stored gradation for a user algebra"}});
        return;
    }
    Gradation gr;
    try {
        gr = catalog_gradation(g.name, g.params);
    } catch (const std::invalid_argument&) {
        rep.check(id, anchor, "skipped", json{{"reason", "no stored gradation"}});
        return;
    }
    rep.guarded(id, anchor, [&] {
        auto chk = verify_gradation(g, gr);
        json degs = json::array();
        for (const auto& d : gr.degrees) degs.push_back(d);
        json limits = json::array();
        if (chk.valid)
            for (const auto& d : limit_spaces(g, gr)) limits.push_back(d);
        json d = {{"degrees", degs}, {"valid", chk.valid}, {"root", chk.root}, {"limit_degrees", limits}};
        if (gr.modulus) d["modulus"] = *gr.modulus;
        if (!chk.reason.empty()) d["reason"] = chk.reason;
        rep.check(id, anchor, chk.valid, d);
    });
}

// ---- subcommands

void run_catalog(Report& rep, const Options& o) {
    if (o.target.empty()) {
        json list = json::array();
        for (const auto& e : catalog_entries())
            list.push_back({{"name", e.name}, {"description", e.description}, {"params", e.param_names}});
        rep["entries"] = list;
        return;
    }
    if (!is_catalog_target(o)) throw InputError("unknown catalog entry '" + o.target + "'");
    LieAlgebra g = resolve(o);
    rep.algebra(g);
    json br = json::array();
    for (const auto& b : g.nonzero_brackets()) br.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", jvec(b.coeffs)}});
    rep["brackets"] = br;
}

// A catalog family named without --params is sampled: tables only.
bool family_sweep(const Options& o) {
    if (!o.params.empty() || !in_catalog(o.target)) return false;
    for (const auto& e : catalog_entries())
        if (e.name == o.target) return !e.param_names.empty();
    return false;
}

void run_verify(Report& rep, const Options& o) {
    bool any = o.tables || o.killing || o.invariants || o.ybe || o.bricks || o.forms || o.gradation;
    bool every = o.all || !any;
    if (family_sweep(o)) {
        if (!(o.tables && !every && !o.killing && !o.invariants && !o.ybe && !o.bricks && !o.forms && !o.gradation))
            throw InputError(o.target + " is a parametric family: give --params, or use --tables alone to sweep the stored samples");
        rep["algebra"] = {{"name", o.target}, {"params", "all stored samples"}};
        verify_tables(rep, o, o.target, {});
        return;
    }
    LieAlgebra g = resolve(o);
    rep.algebra(g);
    json refs = load_references(o);
    if (every || o.tables) verify_tables(rep, o, g.name, o.params.empty() ? Params{} : g.params);
    if (every || o.killing) verify_killing(rep, o, g, refs);
    if (every || o.invariants) verify_invariants(rep, o, g, refs);
    if (every || o.ybe) verify_ybe(rep, o, g, refs);
    if (every || o.bricks) verify_bricks(rep, o, g, refs);
    if (every || o.forms) verify_forms(rep, o, g, refs);
    if (every || o.gradation) verify_gradation(rep, o, g);
}

void run_ybe(Report& rep, const Options& o) {
    LieAlgebra g = resolve(o);
    rep.algebra(g);
    std::size_t n = g.dim();
    auto sys = ybe_system(g);
    rep["cybe"] = jpolys(sys.cybe);
    rep["mcybe"] = jpolys(sys.mcybe);
    rep["invariant_Lambda3"] = jspan(n, 3, sys.invariant3);
    if (o.r.empty()) return;
    Vec r = parse_bivector(o.r, n);
    MultiVector mv = MultiVector::from_coords(n, 2, r);
    auto st = check_solution(sys, r);
    json d = {{"r", mv.str()}, {"square", schouten_square(g, mv).str()}, {"cybe", st.cybe}};
    rep.check("ybe/mcybe", "modified Yang-Baxter equation for r", st.mcybe, d);
    rep.guarded("ybe/cocycle", "cocycle condition of the coboundary cocommutator",
                [&] { rep.check("ybe/cocycle", "cocycle condition of the coboundary cocommutator", cocycle_check(g, mv)); });
    rep.guarded("ybe/cojacobi", "Jacobi identity of the dual bracket", [&] {
        json delta = json::array();
        for (std::size_t i = 0; i < n; ++i) delta.push_back(cocommutator(g, mv, unit(n, i)).str());
        rep.check("ybe/cojacobi", "Jacobi identity of the dual bracket", cojacobi_check(g, mv),
                  json{{"cocommutator", delta}});
    });
}

void run_bricks(Report& rep, const Options& o) {
    LieAlgebra g = resolve(o);
    rep.algebra(g);
    std::string id = "bricks/" + g.name;
    rep.guarded(id, "bricks of " + g.name, [&] {
        auto br = find_bricks(g);
        bool ok = true;
        json d = brick_detail(g, br, o.cofactor_degree, ok);
        rep.check(id, "bricks of " + g.name, ok, d);
    });
    std::string fid = "darboux/" + g.name + "/mcybe";
    rep.guarded(fid, "mCYBE generators form a Darboux family", [&] {
        auto sys = ybe_system(g);
        std::vector<Poly> nz;
        for (const auto& p : sys.mcybe_coeffs)
            if (!p.is_zero()) nz.push_back(p);
        if (nz.empty()) {
            rep.check(fid, "mCYBE generators form a Darboux family", "skipped", json{{"reason", "mCYBE is empty"}});
            return;
        }
        auto res = check_darboux_family(g, nz, o.cofactor_degree);
        json d = {{"generators", jpolys(nz)}, {"cofactor_degree", o.cofactor_degree}};
        if (auto* nd = std::get_if<NotDarboux>(&res)) {
            d["generator"] = nd->generator + 1;
            d["field"] = nd->field + 1;
        }
        rep.check(fid, "mCYBE generators form a Darboux family", std::holds_alternative<DarbouxFamily>(res), d);
    });
}

void run_rep(Report& rep, const Options& o) {
    LieAlgebra g = resolve(o);
    rep.algebra(g);
    std::size_t n = g.dim();
    std::optional<Vec> alphas;
    if (!o.alphas.empty()) {
        Vec a;
        std::stringstream ss(o.alphas);
        std::string item;
        try {
            while (std::getline(ss, item, ',')) a.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("bad --alphas: ") + e.what());
        }
        if (a.size() != n) throw InputError("--alphas needs " + std::to_string(n) + " values");
        alphas = a;
    }
    auto ext = extend_center(g, alphas);
    if (auto* inf = std::get_if<Infeasible>(&ext)) {
        json fz = json::array();
        for (auto i : inf->forced_zero) fz.push_back(i + 1);
        rep.check("rep/extension", "faithful representation through a central extension", false,
                  json{{"reason", inf->reason}, {"forced_zero", fz}});
        return;
    }
    const auto& ce = std::get<CenterExtension>(ext);
    json mats = json::array();
    for (const auto& m : ce.rep) mats.push_back(jmat(m));
    json central = json::array();
    for (auto i : ce.central) central.push_back(i + 1);
    rep.check("rep/extension", "faithful representation through a central extension",
              is_representation(g, ce.rep) && is_faithful(ce.rep),
              json{{"alphas", jvec(ce.alphas)}, {"central", central}, {"matrices", mats}});
    for (std::size_t i = 0; i < n; ++i) {
        std::string id = "rep/exp/" + g.labels[i];
        std::string anchor = "exp(ad " + g.labels[i] + ") is an automorphism";
        rep.guarded(id, anchor, [&] {
            auto e = exp_derivation(g, g.ad(i), o.float_tol);
            if (e.exact) {
                rep.check(id, anchor, automorphism_check(g, e.exact_value),
                          json{{"exact", true}, {"matrix", jmat(e.exact_value)}});
            } else {
                rep.check(id, anchor, e.residual <= o.float_tol,
                          json{{"exact", false}, {"residual_le_tol", e.residual <= o.float_tol}});
            }
        });
    }
}

void run_orbit_dim(Report& rep, const Options& o) {
    LieAlgebra g = resolve(o);
    rep.algebra(g);
    if (o.r.empty()) throw InputError("orbit-dim needs --r");
    std::size_t n = g.dim();
    Vec r = parse_bivector(o.r, n);
    MultiVector mv = MultiVector::from_coords(n, 2, r);
    auto od = orbit_dims(g, mv);
    auto st = check_solution(ybe_system(g), r);
    rep["r"] = mv.str();
    rep["orbit_dim"] = {{"inner", od.inner}, {"aut", od.aut}};
    rep["mcybe"] = st.mcybe;
    rep["cybe"] = st.cybe;
    rep["reduced"] = reduce(g, mv).representative.str();
}

void run_darboux_tree(Report& rep, const Options& o) {
    if (!is_catalog_target(o)) throw InputError("darboux-tree needs a catalog algebra with a stored tree");
    Params want;
    if (family_sweep(o)) {
        rep["algebra"] = {{"name", o.target}, {"params", "all stored samples"}};
    } else {
        LieAlgebra g = resolve(o);
        rep.algebra(g);
        want = g.params;
    }
    const std::string& name = o.target;
    auto tf = load_trees(o.data_dir + "/trees.json", name);
    long radius = o.grid_radius >= 0 ? o.grid_radius : tf.radius;
    std::size_t cap = o.cap ? o.cap : tf.cap;
    rep["grid_radius"] = radius;
    rep["cap"] = cap;
    std::size_t used = 0;
    for (const auto& t : tf.trees) {
        if (!params_match(want, t.params)) continue;
        ++used;
        LieAlgebra h = catalog(t.algebra, t.params);
        std::string ps = params_str(t.params);
        for (const auto& node : t.nodes) {
            std::string id = "tree/" + t.algebra + "/" + node.name + (ps.empty() ? "" : "@" + ps);
            std::string anchor = "Darboux tree of " + t.algebra + ", node " + node.name;
            rep.guarded(id, anchor, [&] {
                auto res = check_tree_node(h, node, t.params, radius, cap);
                json d = json::object();
                if (res.report) {
                    const auto& lr = *res.report;
                    d = {{"candidates", lr.candidates}, {"sampled", lr.points.size()},
                         {"min_rank", lr.min_rank},     {"max_rank", lr.max_rank},
                         {"mcybe", lr.mcybe_count},     {"cybe", lr.cybe_count}};
                }
                if (node.expected_rank) d["expected_rank"] = *node.expected_rank;
                if (!res.reason.empty()) d["reason"] = res.reason;
                rep.check(id, anchor, status_of(res.verdict), d);
            });
        }
    }
    if (used == 0) throw InputError("no stored Darboux tree for " + name + (o.params.empty() ? "" : " at these parameters"));
}

// ---- output

void pretty_print(const Report& rep, std::ostream& os) {
    std::size_t w = 4;
    for (const auto& c : rep.checks()) w = std::max(w, c["id"].get<std::string>().size());
    for (const auto& c : rep.checks()) {
        std::string id = c["id"], st = c["status"], anchor = c["anchor"];
        os << id << std::string(w + 2 - id.size(), ' ') << st << std::string(15 - std::min<std::size_t>(14, st.size()), ' ')
           << anchor << '\n';
    }
}

void emit(const json& doc, const Options& o) {
    std::string text = doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

int fail_input(const Options& o, const std::string& command, const std::string& kind, const std::string& msg,
               std::optional<std::size_t> position = std::nullopt) {
    json doc = {{"schema", kSchema}, {"tool", {{"name", "liebialg"}, {"version", kVersion}}}, {"command", command}};
    doc["error"] = {{"kind", kind}, {"message", msg}};
    if (position) doc["error"]["position"] = *position;
    std::cerr << "liebialg: " << msg << '\n';
    try {
        emit(doc, o);
    } catch (const std::exception&) {
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification tool for coboundary Lie bialgebras on low-dimensional real Lie algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;

    auto common = [&](CLI::App* sc, bool needs_target) {
        auto* t = sc->add_option("target", o.target, "catalog name or algebra JSON file");
        if (needs_target) t->required();
        sc->add_option("--params", o.params, "parameter values, e.g. alpha=1/2,beta=-1/2");
        sc->add_option("--out", o.out, "write the JSON report here instead of stdout");
        sc->add_option("--data-dir", o.data_dir, "directory with orbits.json, trees.json and references.json");
        sc->add_flag("--pretty", o.pretty, "also print a table of checks to stderr");
    };

    auto* cat = app.add_subcommand("catalog", "list the catalog or show one algebra");
    common(cat, false);

    auto* ver = app.add_subcommand("verify", "run verification checks on an algebra");
    common(ver, true);
    ver->add_flag("--tables", o.tables, "orbit table rows");
    ver->add_flag("--killing", o.killing, "Killing form and its wedge extensions");
    ver->add_flag("--invariants", o.invariants, "invariant elements of Lambda^2 and Lambda^3");
    ver->add_flag("--ybe", o.ybe, "CYBE and mCYBE generator sets");
    ver->add_flag("--bricks", o.bricks, "bricks and their Darboux property");
    ver->add_flag("--forms", o.forms, "invariant bilinear forms on Lambda^2");
    ver->add_flag("--gradation", o.gradation, "stored gradation and its limit spaces");
    ver->add_flag("--all", o.all, "every check (the default when no check is selected)");
    ver->add_option("--cofactor-degree", o.cofactor_degree, "cofactor degree bound for Darboux checks");

    auto* yb = app.add_subcommand("ybe", "Yang-Baxter systems; with --r, check one bivector");
    common(yb, true);
    yb->add_option("--r", o.r, "bivector, e.g. e12=1,e34=-1/2");

    auto* bk = app.add_subcommand("bricks", "bricks and Darboux families");
    common(bk, true);
    bk->add_option("--cofactor-degree", o.cofactor_degree, "cofactor degree bound");

    auto* rp = app.add_subcommand("rep", "faithful representation via a central extension");
    common(rp, true);
    rp->add_option("--alphas", o.alphas, "comma-separated extension coefficients, one per basis vector");
    rp->add_option("--float-tol", o.float_tol, "tolerance for automorphism residuals on the float path");

    auto* od = app.add_subcommand("orbit-dim", "orbit dimensions of a bivector");
    common(od, true);
    od->add_option("--r", o.r, "bivector, e.g. e12=1,e34=-1/2")->required();

    auto* dt = app.add_subcommand("darboux-tree", "check the stored Darboux tree by grid sampling");
    common(dt, true);
    dt->add_option("--grid-radius", o.grid_radius, "grid radius (fixture value by default)");
    dt->add_option("--cap", o.cap, "maximum sampled points per node");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sc = app.get_subcommands().front();
    std::string command = sc->get_name();
    Report rep(command);
    auto start = std::chrono::steady_clock::now();
    try {
        if (sc == cat) run_catalog(rep, o);
        else if (sc == ver) run_verify(rep, o);
        else if (sc == yb) run_ybe(rep, o);
        else if (sc == bk) run_bricks(rep, o);
        else if (sc == rp) run_rep(rep, o);
        else if (sc == od) run_orbit_dim(rep, o);
        else run_darboux_tree(rep, o);
    } catch (const InputError& e) {
        return fail_input(o, command, "input", e.what());
    } catch (const ParseError& e) {
        return fail_input(o, command, "parse", e.what(), e.position);
    } catch (const JacobiViolation& e) {
        return fail_input(o, command, "jacobi", e.what());
    } catch (const std::exception& e) {
        return fail_input(o, command, "error", e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json doc = rep.finish(secs);
    try {
        emit(doc, o);
    } catch (const InputError& e) {
        std::cerr << "liebialg: " << e.what() << '\n';
        return 2;
    }
    if (o.pretty) pretty_print(rep, std::cerr);
    return rep.failed() ? 1 : 0;
}
