#pragma once
// Classical Yang-Baxter equations and coboundary cocommutators.

#include "liebialg/grassmann.hpp"

#include <optional>

namespace lb {

MultiVector schouten_square(const LieAlgebra& g, const MultiVector& r);

// Coefficients of [r,r] for the generic bivector r = sum x_a e_a, one per Lambda^3 basis element.
std::vector<Poly> generic_square(const LieAlgebra& g);

struct YbeSystem {
    std::size_t n = 0;
    std::vector<Poly> cybe_coeffs;  // raw [r,r] coordinates
    std::vector<Poly> mcybe_coeffs; // coordinates left after eliminating invariant directions
    std::vector<Vec> invariant3;    // canonical basis of (Lambda^3 g)^g
    std::vector<Poly> cybe;         // simplified, monic, sorted generator sets
    std::vector<Poly> mcybe;
};
YbeSystem ybe_system(const LieAlgebra& g);

// Drops zeros, makes generators monic, replaces pure monomials by their support, splits
// positive sums of even powers into their variables and substitutes linear generators into
// the others. Preserves the real zero set.
std::vector<Poly> simplify_generators(std::vector<Poly> gens);
Poly substitute(const Poly& p, std::size_t i, const Poly& value);

struct SolutionStatus {
    bool mcybe = false;
    bool cybe = false;
};
SolutionStatus check_solution(const YbeSystem& sys, const Vec& r);

MultiVector cocommutator(const LieAlgebra& g, const MultiVector& r, const Vec& v);
bool cocycle_check(const LieAlgebra& g, const MultiVector& r);
bool cojacobi_check(const LieAlgebra& g, const MultiVector& r);
bool same_cocommutator(const LieAlgebra& g, const MultiVector& r1, const MultiVector& r2);

struct OrbitRow {
    std::string algebra;
    Params params;
    std::string label;
    Vec rep; // coordinates in the Lambda^2 wedge basis
    std::optional<std::size_t> published_dim;
    std::optional<bool> starred; // true: fails the CYBE
    std::vector<Constraint> region;
    std::string note;
};

struct RowReport {
    bool mcybe = false;       // (a)
    bool star_ok = true;      // (b)
    bool dim_ok = true;       // (c)
    bool region_ok = true;    // (d)
    bool cybe = false;
    std::size_t computed_dim = 0;
    std::vector<std::string> failed; // subset of "a","b","c","d"
    bool pass() const { return failed.empty(); }
};
RowReport verify_classification_row(const LieAlgebra& g, const OrbitRow& row);

} // namespace lb
