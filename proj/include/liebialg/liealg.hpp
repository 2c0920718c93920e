#pragma once
// Lie algebras given by structure constants.

#include "liebialg/exact.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace lb {

struct JacobiViolation : std::runtime_error {
    std::size_t i, j, k, l; // 1-based triple and component
    JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, std::size_t l_);
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// [e_i, e_j] = sum_k coeffs[k] e_k, 1-based indices, i != j.
struct BracketSpec {
    std::size_t i, j;
    Vec coeffs;
};

using Params = std::map<std::string, Q>;

class LieAlgebra {
public:
    std::string name;
    std::vector<std::string> labels;
    Params params;

    std::size_t dim() const { return n_; }
    // structure constant c_ij^k, 0-based
    const Q& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    Vec bracket(const Vec& v, const Vec& w) const;
    Vec bracket_basis(std::size_t i, std::size_t j) const;
    QMatrix ad(std::size_t i) const;
    QMatrix ad(const Vec& v) const;
    std::vector<BracketSpec> nonzero_brackets() const; // i<j, 1-based

    friend LieAlgebra build(const std::string&, std::size_t, const std::vector<BracketSpec>&,
                            std::vector<std::string>, Params);

private:
    std::size_t n_ = 0;
    std::vector<Q> c_;
};

// Validates indices and the Jacobi identity exhaustively.
LieAlgebra build(const std::string& name, std::size_t dim, const std::vector<BracketSpec>& brackets,
                 std::vector<std::string> labels = {}, Params params = {});

// Jacobi residual for i<j<k, component l (0-based).
Q jacobi_residual(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

QMatrix killing_form(const LieAlgebra& g);

// Canonical basis of der(g); D(e_j) = sum_a D(a,j) e_a.
std::vector<QMatrix> derivations(const LieAlgebra& g);
bool is_derivation(const LieAlgebra& g, const QMatrix& d);

struct Series {
    std::vector<Vec> center;
    std::vector<std::vector<Vec>> lower_central; // g, [g,g], [g,[g,g]], ... until stable
    std::vector<std::vector<Vec>> derived;       // g, [g,g], ... until stable
};
Series ideals_and_series(const LieAlgebra& g);
std::vector<Vec> bracket_span(const LieAlgebra& g, const std::vector<Vec>& a, const std::vector<Vec>& b);

bool automorphism_check(const LieAlgebra& g, const QMatrix& t);

struct ExpResult {
    bool exact = false;
    QMatrix exact_value;        // valid when exact
    std::vector<double> approx; // row-major n*n, valid when !exact
    double residual = 0;        // max |T[x,y] - [Tx,Ty]| over basis pairs (float path)
};
ExpResult exp_derivation(const LieAlgebra& g, const QMatrix& d, double tol = 1e-12);
double automorphism_residual(const LieAlgebra& g, const std::vector<double>& t);

struct CenterExtension {
    Vec alphas;                        // one per basis vector
    std::vector<std::size_t> central;  // 0-based indices of central basis vectors
    std::vector<std::size_t> order;    // center-first basis order used internally
    std::vector<QMatrix> rep;          // (n+1)x(n+1), R_{e_i}
};
struct Infeasible {
    std::string reason;
    std::vector<std::size_t> forced_zero; // central indices whose alpha is forced to 0 (0-based)
};
std::variant<CenterExtension, Infeasible> extend_center(const LieAlgebra& g,
                                                         const std::optional<Vec>& alphas = std::nullopt);
QMatrix center_rep_matrix(const LieAlgebra& g, const Vec& alphas, std::size_t i);
bool is_representation(const LieAlgebra& g, const std::vector<QMatrix>& rep);
bool is_faithful(const std::vector<QMatrix>& rep);

// ---- catalog
struct CatalogEntry {
    std::string name;
    std::string description;
    std::vector<std::string> param_names;
};
const std::vector<CatalogEntry>& catalog_entries();
bool in_catalog(const std::string& name);
// Throws std::invalid_argument on unknown name, missing or inadmissible parameters.
LieAlgebra catalog(const std::string& name, const Params& params = {});
// Parses "alpha=1/2,beta=-1/2" (also accepts the Greek letter names).
Params parse_params(const std::string& s);
std::string params_str(const Params& p);

} // namespace lb
