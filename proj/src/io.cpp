#include "liebialg/io.hpp"

#include "liebialg/ybe.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#ifndef LIEBIALG_DATA_DIR
#define LIEBIALG_DATA_DIR "data"
#endif

namespace lb {

using nlohmann::json;

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(pos ? msg + " (at byte " + std::to_string(pos) + ")" : msg), position(pos) {}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string default_data_dir() { return LIEBIALG_DATA_DIR; }

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

Q json_rational(const json& v) {
    if (v.is_number_integer()) return Q(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected an integer or a rational string, got " + v.dump());
}

template <class T>
T field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
    }
}

Params json_params(const json& obj) {
    Params p;
    if (obj.is_null()) return p;
    for (auto it = obj.begin(); it != obj.end(); ++it) p[it.key()] = json_rational(it.value());
    return p;
}

} // namespace

LieAlgebra parse_algebra_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("top level must be an object");
    auto name = j.value("name", std::string("custom"));
    auto n = field<std::size_t>(j, "dim");
    if (n == 0) throw ParseError("dim must be positive");
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        labels = field<std::vector<std::string>>(j, "basis");
        if (labels.size() != n) throw ParseError("basis has " + std::to_string(labels.size()) + " labels, dim is " +
                                                 std::to_string(n));
    }
    std::vector<BracketSpec> br;
    const json& list = j.contains("brackets") ? j.at("brackets") : json::array();
    if (!list.is_array()) throw ParseError("\"brackets\" must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
        const json& b = list[k];
        std::string where = "bracket #" + std::to_string(k + 1) + ": ";
        BracketSpec s{field<std::size_t>(b, "i"), field<std::size_t>(b, "j"), {}};
        const json& c = b.contains("coeffs") ? b.at("coeffs") : json();
        if (!c.is_array()) throw ParseError(where + "\"coeffs\" must be an array");
        if (c.size() != n)
            throw ParseError(where + "coeffs has length " + std::to_string(c.size()) + ", expected " +
                             std::to_string(n));
        for (const auto& v : c) s.coeffs.push_back(json_rational(v));
        if (s.i < 1 || s.i > n || s.j < 1 || s.j > n || s.i == s.j) throw ParseError(where + "bad index pair");
        br.push_back(std::move(s));
    }
    return build(name, n, br, labels);
}

LieAlgebra parse_algebra_file(const std::string& path) { return parse_algebra_json(read_file(path)); }

Vec bivector_from_terms(std::size_t n, const std::vector<std::pair<std::string, Q>>& terms) {
    Vec x(binom(n, 2));
    for (const auto& [key, c] : terms) {
        if (key.size() != 3 || key[0] != 'e' || !std::isdigit(static_cast<unsigned char>(key[1])) ||
            !std::isdigit(static_cast<unsigned char>(key[2])))
            throw ParseError("bad bivector key " + key);
        std::size_t a = key[1] - '1', b = key[2] - '1';
        if (a >= b || b >= n) throw ParseError("bad bivector key " + key);
        x[wedge_index(n, {a, b})] += c;
    }
    return x;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::known_erratum: return "known erratum";
    default: return "fail";
    }
}

LieAlgebra row_algebra(const OrbitRow& row) {
    Params ap;
    for (const auto& e : catalog_entries())
        if (e.name == row.algebra)
            for (const auto& nm : e.param_names) ap[nm] = row.params.at(nm);
    return catalog(row.algebra, ap);
}

Verdict judge_row(const RowFixture& fx, const RowReport& rep) {
    if (rep.pass()) return (fx.erratum_dim || fx.erratum_star) ? Verdict::fail : Verdict::pass;
    for (const auto& f : rep.failed) {
        if (f == "c" && fx.erratum_dim && *fx.erratum_dim == rep.computed_dim) continue;
        if (f == "b" && fx.erratum_star && *fx.erratum_star == !rep.cybe) continue;
        return Verdict::fail;
    }
    return Verdict::known_erratum;
}

std::vector<RowFixture> load_orbit_rows(const std::string& path, const std::string& only) {
    json j = parse_json(read_file(path));
    std::vector<Q> values;
    for (const auto& v : field<std::vector<std::string>>(j, "sample_values")) values.push_back(parse_rational(v));
    std::map<std::string, std::vector<std::string>> names;
    for (const auto& e : catalog_entries()) names[e.name] = e.param_names;

    std::vector<RowFixture> out;
    for (const auto& r : j.at("rows")) {
        auto alg = field<std::string>(r, "algebra");
        if (!only.empty() && alg != only) continue;
        if (!names.count(alg)) throw ParseError("unknown algebra " + alg + " in " + path);
        const auto& pnames = names[alg];
        std::vector<std::string> syms = pnames;
        if (r.contains("vary"))
            for (const auto& v : r.at("vary")) syms.push_back(v.get<std::string>());
        std::vector<std::string> when = r.value("when", std::vector<std::string>{});

        // candidate symbol assignments: the full sample grid plus explicit extras
        std::vector<Params> cands;
        std::vector<std::size_t> idx(syms.size(), 0);
        for (;;) {
            Params p;
            for (std::size_t k = 0; k < syms.size(); ++k) p[syms[k]] = values[idx[k]];
            cands.push_back(p);
            std::size_t k = syms.size();
            while (k > 0 && idx[k - 1] + 1 == values.size()) idx[--k] = 0;
            if (k == 0) break;
            ++idx[k - 1];
        }
        if (r.contains("extra"))
            for (const auto& e : r.at("extra")) cands.push_back(json_params(e));

        std::set<Params> seen;
        for (const auto& p : cands) {
            if (seen.count(p)) continue;
            seen.insert(p);
            Params ap;
            for (const auto& nm : pnames) {
                auto it = p.find(nm);
                if (it != p.end()) ap[nm] = it->second;
            }
            LieAlgebra g;
            try {
                g = catalog(alg, ap);
            } catch (const std::invalid_argument&) {
                continue; // outside the admissible range
            }
            bool ok = true;
            for (const auto& w : when)
                if (!parse_constraint(w, 0, p).holds({})) ok = false;
            if (!ok) continue;
            OrbitRow row;
            row.algebra = alg;
            row.params = p;
            row.label = field<std::string>(r, "label");
            std::vector<std::pair<std::string, Q>> terms;
            for (auto it = r.at("rep").begin(); it != r.at("rep").end(); ++it) {
                Poly c = parse_poly(it.value().get<std::string>(), 0, p);
                terms.emplace_back(it.key(), c.is_zero() ? Q(0) : c.terms().begin()->second);
            }
            row.rep = bivector_from_terms(g.dim(), terms);
            if (r.contains("dim") && !r.at("dim").is_null()) row.published_dim = r.at("dim").get<std::size_t>();
            if (r.contains("star") && !r.at("star").is_null()) row.starred = r.at("star").get<bool>();
            for (const auto& c : r.value("region", std::vector<std::string>{}))
                row.region.push_back(parse_constraint(c, binom(g.dim(), 2), p));
            row.note = r.value("note", std::string());
            RowFixture fx{std::move(row), {}, {}, {}};
            if (r.contains("erratum")) {
                const json& e = r.at("erratum");
                if (e.contains("dim")) fx.erratum_dim = e.at("dim").get<std::size_t>();
                if (e.contains("star")) fx.erratum_star = e.at("star").get<bool>();
                fx.erratum_why = e.value("why", std::string());
            }
            out.push_back(std::move(fx));
        }
    }
    return out;
}

TreeFile load_trees(const std::string& path, const std::string& only) {
    json j = parse_json(read_file(path));
    TreeFile tf;
    tf.radius = j.value("grid_radius", 3L);
    tf.cap = j.value("cap", std::size_t{64});
    for (const auto& t : j.at("trees")) {
        TreeFixture fx;
        fx.algebra = field<std::string>(t, "algebra");
        if (!only.empty() && fx.algebra != only) continue;
        fx.params = json_params(t.value("params", json()));
        for (const auto& nd : t.at("nodes")) {
            TreeNode node;
            node.name = nd.value("name", std::string());
            node.equalities = nd.value("equalities", std::vector<std::string>{});
            node.inequalities = nd.value("inequalities", std::vector<std::string>{});
            if (nd.contains("expected_rank") && !nd.at("expected_rank").is_null())
                node.expected_rank = nd.at("expected_rank").get<std::size_t>();
            auto label = field<std::string>(nd, "expected_label");
            if (label != "solutions" && label != "no solutions")
                throw ParseError("expected_label must be \"solutions\" or \"no solutions\"");
            node.solutions = label == "solutions";
            if (nd.contains("erratum")) node.erratum_rank = nd.at("erratum").at("rank").get<std::size_t>();
            fx.nodes.push_back(std::move(node));
        }
        tf.trees.push_back(std::move(fx));
    }
    return tf;
}

std::vector<Constraint> node_constraints(const TreeNode& node, std::size_t nvars, const Params& params) {
    std::vector<Constraint> cs;
    for (const auto& e : node.equalities) cs.push_back({parse_poly(e, nvars, params), Constraint::Rel::eq});
    for (const auto& s : node.inequalities) cs.push_back(parse_constraint(s, nvars, params));
    return cs;
}

NodeResult check_tree_node(const LieAlgebra& g, const TreeNode& node, const Params& params, long radius,
                           std::size_t cap) {
    NodeResult res;
    auto cs = node_constraints(node, binom(g.dim(), 2), params);
    auto lr = locus_report(g, cs, radius, cap);
    if (auto* e = std::get_if<EmptySample>(&lr)) {
        res.reason = "empty sample: " + e->reason;
        return res;
    }
    const auto& rep = std::get<LocusReport>(lr);
    res.report = rep;
    std::size_t n = rep.points.size();
    if (node.solutions && rep.mcybe_count != n) {
        res.reason = std::to_string(n - rep.mcybe_count) + " of " + std::to_string(n) + " samples fail the mCYBE";
    } else if (!node.solutions && rep.mcybe_count != 0) {
        res.reason = std::to_string(rep.mcybe_count) + " of " + std::to_string(n) + " samples solve the mCYBE";
    } else if (node.solutions && !rep.constant_rank) {
        res.reason = "rank varies between " + std::to_string(rep.min_rank) + " and " + std::to_string(rep.max_rank);
    } else if (node.expected_rank && rep.min_rank != *node.expected_rank) {
        res.reason = "rank " + std::to_string(rep.min_rank) + ", expected " + std::to_string(*node.expected_rank);
        if (node.erratum_rank && *node.erratum_rank == rep.min_rank) res.verdict = Verdict::known_erratum;
        return res;
    }
    if (!res.reason.empty()) return res;
    if (node.erratum_rank) {
        res.reason = "recorded erratum no longer reproduces";
        return res;
    }
    res.verdict = Verdict::pass;
    return res;
}

} // namespace lb
