#pragma once
// Fundamental vector fields on Lambda^2 g, bricks, Darboux families and locus sampling.

#include "liebialg/ybe.hpp"

#include <variant>

namespace lb {

struct FundamentalMatrix {
    std::size_t vars = 0;
    std::vector<QMatrix> lifts;          // derivation lifts to Lambda^2, one per derivation basis element
    std::vector<std::vector<Poly>> rows; // rows[d][a] = a-th coordinate of lift_d(x)
    QMatrix at(const Vec& p) const;
};
FundamentalMatrix fundamental_matrix(const LieAlgebra& g);
// X_d f for the vector field of row d.
Poly apply_field(const FundamentalMatrix& fm, std::size_t d, const Poly& f);

struct OrbitDims {
    std::size_t inner = 0;
    std::size_t aut = 0;
};
OrbitDims orbit_dims(const LieAlgebra& g, const MultiVector& w);

struct BrickResult {
    std::vector<Poly> bricks;          // canonical linear forms
    std::vector<Vec> eigenvalues;      // eigenvalue of each brick under every field
    bool undetected_possible = false;  // some lifted derivation has non-rational eigenvalues
};
BrickResult find_bricks(const LieAlgebra& g);
// Rational roots of a univariate polynomial (coefficients low to high), with multiplicity.
std::vector<Q> rational_roots(std::vector<Q> coeffs, std::size_t* leftover_degree = nullptr);
std::vector<Q> charpoly(const QMatrix& a); // low to high, monic

struct DarbouxFamily {
    std::vector<Poly> generators;
    // cofactors[d][j][i]: X_d f_j = sum_i cofactors[d][j][i] f_i
    std::vector<std::vector<std::vector<Poly>>> cofactors;
};
struct NotDarboux {
    std::size_t generator; // 0-based
    std::size_t field;     // 0-based derivation index
};
std::variant<DarbouxFamily, NotDarboux> check_darboux_family(const LieAlgebra& g, const std::vector<Poly>& gens,
                                                              unsigned cofactor_degree_bound = 1);

struct LocusPoint {
    Vec x;
    std::size_t rank = 0;
    bool mcybe = false;
    bool cybe = false;
};
struct LocusReport {
    std::vector<LocusPoint> points;
    std::size_t candidates = 0; // grid points passing all constraints
    std::size_t min_rank = 0, max_rank = 0;
    bool constant_rank = false;
    std::size_t mcybe_count = 0, cybe_count = 0;
};
struct EmptySample {
    std::string reason;
};
std::variant<LocusReport, EmptySample> locus_report(const LieAlgebra& g, const std::vector<Constraint>& constraints,
                                                    long radius = 3, std::size_t cap = 64);

} // namespace lb
