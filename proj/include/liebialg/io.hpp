#pragma once
// JSON ingestion: user algebras, orbit-table rows, Darboux-tree fixtures.

#include "liebialg/darboux.hpp"

#include <optional>
#include <string>

namespace lb {

struct ParseError : std::runtime_error {
    std::size_t position = 0; // byte offset, 0 when unknown
    ParseError(const std::string& msg, std::size_t pos = 0);
};

// {"name": ..., "dim": n, "basis": [...], "brackets": [{"i": 1, "j": 2, "coeffs": [...]}]}
LieAlgebra parse_algebra_json(const std::string& text);
LieAlgebra parse_algebra_file(const std::string& path);
std::string read_file(const std::string& path);

// Directory holding the shipped fixtures.
std::string default_data_dir();

// Coordinates of sum c * e_ij in the Lambda^2 wedge basis; keys look like "e12".
Vec bivector_from_terms(std::size_t n, const std::vector<std::pair<std::string, Q>>& terms);

// Outcome of comparing a computation with a printed value. A known erratum is a pinned
// disagreement: the computed value equals the recorded correction, not the printed one.
enum class Verdict { pass, known_erratum, fail };
const char* verdict_name(Verdict v);

struct RowFixture {
    OrbitRow row;
    std::optional<std::size_t> erratum_dim;
    std::optional<bool> erratum_star;
    std::string erratum_why;
};
// Rows of the orbit tables, expanded over the parameter samples.
// `only` restricts to one algebra when non-empty.
std::vector<RowFixture> load_orbit_rows(const std::string& path, const std::string& only = "");
Verdict judge_row(const RowFixture& fx, const RowReport& rep);
// Instantiates the row's algebra from the catalog parameters stored in the row.
LieAlgebra row_algebra(const OrbitRow& row);

struct TreeNode {
    std::string name;
    std::vector<std::string> equalities;   // polynomials that vanish
    std::vector<std::string> inequalities; // full relations, e.g. "x3 != 0"
    std::optional<std::size_t> expected_rank;
    std::optional<std::size_t> erratum_rank;
    bool solutions = true;
};
struct TreeFixture {
    std::string algebra;
    Params params;
    std::vector<TreeNode> nodes;
};
struct TreeFile {
    long radius = 3;
    std::size_t cap = 64;
    std::vector<TreeFixture> trees;
};
TreeFile load_trees(const std::string& path, const std::string& only = "");

std::vector<Constraint> node_constraints(const TreeNode& node, std::size_t nvars, const Params& params);

struct NodeResult {
    Verdict verdict = Verdict::fail;
    std::string reason; // empty on success
    std::optional<LocusReport> report;
};
NodeResult check_tree_node(const LieAlgebra& g, const TreeNode& node, const Params& params, long radius,
                           std::size_t cap);

} // namespace lb
