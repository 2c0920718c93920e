#include "liebialg/liealg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lb {

namespace {

struct Term {
    std::size_t k;
    Q c;
};

// sparse bracket: [e_i, e_j] = sum c e_k
struct B {
    std::size_t i, j;
    std::vector<Term> terms;
};

LieAlgebra make(const std::string& name, std::size_t n, const std::vector<B>& bs, Params p = {},
                std::vector<std::string> labels = {}) {
    std::vector<BracketSpec> spec;
    for (const auto& b : bs) {
        Vec v(n);
        for (const auto& t : b.terms) v[t.k - 1] += t.c;
        spec.push_back({b.i, b.j, v});
    }
    return build(name, n, spec, std::move(labels), std::move(p));
}

const Q& need(const Params& p, const std::string& key, const std::string& alg) {
    auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument(alg + " requires parameter " + key);
    return it->second;
}

void admit(bool ok, const std::string& alg, const std::string& rule) {
    if (!ok) throw std::invalid_argument(alg + ": parameters outside admissible range (" + rule + ")");
}

std::vector<B> sl2_brackets(std::size_t off = 0) {
    // [e1,e2]=e2, [e1,e3]=-e3, [e3,e2]=-e1
    return {{1 + off, 2 + off, {{2 + off, 1}}}, {1 + off, 3 + off, {{3 + off, -1}}}, {2 + off, 3 + off, {{1 + off, 1}}}};
}

using Maker = std::function<LieAlgebra(const Params&)>;

struct Item {
    CatalogEntry entry;
    Maker make;
};

const std::vector<Item>& items() {
    static const std::vector<Item> list = [] {
        std::vector<Item> v;
        auto add = [&](std::string name, std::string desc, std::vector<std::string> ps, Maker m) {
            v.push_back({{std::move(name), std::move(desc), std::move(ps)}, std::move(m)});
        };
        // three-dimensional classes
        add("sl2", "sl(2,R)", {}, [](const Params&) { return make("sl2", 3, sl2_brackets()); });
        add("su2", "su(2)", {}, [](const Params&) {
            return make("su2", 3, {{1, 2, {{3, 1}}}, {1, 3, {{2, -1}}}, {3, 2, {{1, -1}}}});
        });
        add("h", "Heisenberg algebra", {}, [](const Params&) { return make("h", 3, {{1, 2, {{3, 1}}}}); });
        add("r3p0", "r'_{3,0}", {}, [](const Params&) {
            return make("r3p0", 3, {{1, 2, {{3, -1}}}, {1, 3, {{2, 1}}}});
        });
        add("r3m1", "r_{3,-1}", {}, [](const Params&) {
            return make("r3m1", 3, {{1, 2, {{2, 1}}}, {1, 3, {{3, -1}}}});
        });
        add("r31", "r_{3,1}", {}, [](const Params&) {
            return make("r31", 3, {{1, 2, {{2, 1}}}, {1, 3, {{3, 1}}}});
        });
        add("r3", "r_3", {}, [](const Params&) {
            return make("r3", 3, {{1, 3, {{1, -1}}}, {3, 2, {{1, 1}, {2, 1}}}});
        });
        add("r3l", "r_{3,lambda}, -1 < lambda < 1", {"lambda"}, [](const Params& p) {
            Q l = need(p, "lambda", "r3l");
            admit(l > -1 && l < 1, "r3l", "-1 < lambda < 1");
            return make("r3l", 3, {{1, 3, {{1, -1}}}, {3, 2, {{2, l}}}}, {{"lambda", l}});
        });
        add("r3pl", "r'_{3,lambda}, lambda > 0", {"lambda"}, [](const Params& p) {
            Q l = need(p, "lambda", "r3pl");
            admit(l > 0, "r3pl", "lambda > 0");
            return make("r3pl", 3, {{1, 3, {{2, 1}, {1, -l}}}, {3, 2, {{2, l}, {1, 1}}}}, {{"lambda", l}});
        });
        // four-dimensional indecomposable classes
        add("s1", "s_1", {}, [](const Params&) {
            return make("s1", 4, {{2, 4, {{1, -1}}}, {3, 4, {{3, -1}}}});
        });
        add("s2", "s_2", {}, [](const Params&) {
            return make("s2", 4, {{1, 4, {{1, -1}}}, {2, 4, {{1, -1}, {2, -1}}}, {3, 4, {{2, -1}, {3, -1}}}});
        });
        add("s3", "s_3, 0 < |beta| <= |alpha| <= 1, (alpha,beta) != (-1,-1), alpha >= beta if |alpha| = |beta|",
            {"alpha", "beta"}, [](const Params& p) {
                Q a = need(p, "alpha", "s3"), b = need(p, "beta", "s3");
                Q aa = abs(a), ab = abs(b);
                admit(0 < ab && ab <= aa && aa <= 1, "s3", "0 < |beta| <= |alpha| <= 1");
                admit(!(a == -1 && b == -1), "s3", "(alpha,beta) != (-1,-1)");
                admit(aa != ab || a >= b, "s3", "alpha >= beta when |alpha| = |beta|");
                return make("s3", 4, {{1, 4, {{1, -1}}}, {2, 4, {{2, -a}}}, {3, 4, {{3, -b}}}},
                            {{"alpha", a}, {"beta", b}});
            });
        add("s4", "s_4, alpha != 0", {"alpha"}, [](const Params& p) {
            Q a = need(p, "alpha", "s4");
            admit(a != 0, "s4", "alpha != 0");
            return make("s4", 4, {{1, 4, {{1, -1}}}, {2, 4, {{1, -1}, {2, -1}}}, {3, 4, {{3, -a}}}}, {{"alpha", a}});
        });
        add("s5", "s_5, alpha > 0", {"alpha", "beta"}, [](const Params& p) {
            Q a = need(p, "alpha", "s5"), b = need(p, "beta", "s5");
            admit(a > 0, "s5", "alpha > 0");
            return make("s5", 4, {{1, 4, {{1, -a}}}, {2, 4, {{2, -b}, {3, 1}}}, {3, 4, {{2, -1}, {3, -b}}}},
                        {{"alpha", a}, {"beta", b}});
        });
        add("s6", "s_6", {}, [](const Params&) {
            return make("s6", 4, {{2, 3, {{1, 1}}}, {2, 4, {{2, -1}}}, {3, 4, {{3, 1}}}});
        });
        add("s7", "s_7", {}, [](const Params&) {
            return make("s7", 4, {{2, 3, {{1, 1}}}, {2, 4, {{3, 1}}}, {3, 4, {{2, -1}}}});
        });
        add("s8", "s_8, -1 < alpha <= 1, alpha != 0", {"alpha"}, [](const Params& p) {
            Q a = need(p, "alpha", "s8");
            admit(a > -1 && a <= 1 && a != 0, "s8", "-1 < alpha <= 1, alpha != 0");
            return make("s8", 4, {{1, 4, {{1, -(1 + a)}}}, {2, 3, {{1, 1}}}, {2, 4, {{2, -1}}}, {3, 4, {{3, -a}}}},
                        {{"alpha", a}});
        });
        add("s9", "s_9, alpha > 0", {"alpha"}, [](const Params& p) {
            Q a = need(p, "alpha", "s9");
            admit(a > 0, "s9", "alpha > 0");
            return make("s9", 4,
                        {{1, 4, {{1, -2 * a}}}, {2, 3, {{1, 1}}}, {2, 4, {{2, -a}, {3, 1}}}, {3, 4, {{2, -1}, {3, -a}}}},
                        {{"alpha", a}});
        });
        add("s10", "s_10", {}, [](const Params&) {
            return make("s10", 4, {{1, 4, {{1, -2}}}, {2, 3, {{1, 1}}}, {2, 4, {{2, -1}}}, {3, 4, {{2, -1}, {3, -1}}}});
        });
        add("s11", "s_11", {}, [](const Params&) {
            return make("s11", 4, {{1, 4, {{1, -1}}}, {2, 3, {{1, 1}}}, {2, 4, {{2, -1}}}});
        });
        add("s12", "s_12", {}, [](const Params&) {
            return make("s12", 4, {{1, 3, {{1, -1}}}, {1, 4, {{2, 1}}}, {2, 3, {{2, -1}}}, {2, 4, {{1, -1}}}});
        });
        add("n1", "n_1", {}, [](const Params&) { return make("n1", 4, {{2, 4, {{1, 1}}}, {3, 4, {{2, 1}}}}); });
        // reductive examples
        add("gl2", "gl(2,R) = sl(2,R) + R, e4 central", {}, [](const Params&) {
            return make("gl2", 4, sl2_brackets());
        });
        add("so22", "so(2,2) = sl(2,R) + sl(2,R), basis e-, e0, e+, f-, f0, f+", {}, [](const Params&) {
            // per copy: [x-,x0]=x-, [x-,x+]=-x0, [x0,x+]=x+
            std::vector<B> bs;
            for (std::size_t off : {0u, 3u}) {
                bs.push_back({1 + off, 2 + off, {{1 + off, 1}}});
                bs.push_back({1 + off, 3 + off, {{2 + off, -1}}});
                bs.push_back({2 + off, 3 + off, {{3 + off, 1}}});
            }
            return make("so22", 6, bs, {}, {"e-", "e0", "e+", "f-", "f0", "f+"});
        });
        // algebras with nontrivial center used for the center extension
        add("s6_231", "six-dimensional solvable algebra with center <e4>", {}, [](const Params&) {
            return make("s6_231", 6,
                        {{2, 3, {{1, 1}}}, {5, 1, {{1, 1}}}, {5, 2, {{2, 1}}}, {6, 1, {{1, 1}}}, {6, 3, {{3, 1}}},
                         {6, 5, {{4, 1}}}});
        });
        add("n7", "seven-dimensional nilpotent algebra with center <e7>", {}, [](const Params&) {
            return make("n7", 7,
                        {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}, {1, 4, {{5, 1}}}, {1, 6, {{7, 1}}}, {2, 3, {{6, 1}}},
                         {2, 4, {{7, 1}}}, {2, 5, {{7, 1}}}, {2, 6, {{7, 1}}}, {3, 4, {{7, -1}}}});
        });
        return v;
    }();
    return list;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> e = [] {
        std::vector<CatalogEntry> out;
        for (const auto& it : items()) out.push_back(it.entry);
        return out;
    }();
    return e;
}

bool in_catalog(const std::string& name) {
    const auto& l = items();
    return std::any_of(l.begin(), l.end(), [&](const Item& it) { return it.entry.name == name; });
}

LieAlgebra catalog(const std::string& name, const Params& params) {
    for (const auto& it : items())
        if (it.entry.name == name) {
            for (const auto& [k, v] : params)
                if (std::find(it.entry.param_names.begin(), it.entry.param_names.end(), k) == it.entry.param_names.end())
                    throw std::invalid_argument(name + " has no parameter " + k);
            return it.make(params);
        }
    throw std::invalid_argument("unknown catalog algebra " + name);
}

Params parse_params(const std::string& s) {
    Params p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' lacks '='");
        std::string key = item.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        if (key == "α") key = "alpha";
        if (key == "β") key = "beta";
        if (key == "λ") key = "lambda";
        p[key] = parse_rational(item.substr(eq + 1));
    }
    return p;
}

std::string params_str(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty()) s += ",";
        s += k + "=" + to_string(v);
    }
    return s;
}

} // namespace lb
