#pragma once
// Exterior algebra of a Lie algebra: multivectors, Schouten bracket, lifts.

#include "liebialg/liealg.hpp"

#include <map>
#include <vector>

namespace lb {

using Index = std::vector<std::size_t>; // strictly increasing, 0-based

// Lexicographic basis of Lambda^m of an n-dimensional space.
const std::vector<Index>& wedge_basis(std::size_t n, std::size_t m);
std::size_t wedge_index(std::size_t n, const Index& idx);
std::size_t binom(std::size_t n, std::size_t k);
std::string wedge_label(const Index& idx); // "e12", "e134"

class MultiVector {
public:
    MultiVector() = default;
    MultiVector(std::size_t n, std::size_t m) : n_(n), m_(m) {}
    static MultiVector basis(std::size_t n, const Index& idx, const Q& c = 1);
    static MultiVector from_vector(const Vec& v); // degree 1
    static MultiVector from_coords(std::size_t n, std::size_t m, const Vec& coords);

    std::size_t dim() const { return n_; }
    std::size_t degree() const { return m_; }
    const std::map<Index, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // coefficient for an arbitrary index tuple, with permutation sign
    void add(const Index& idx, const Q& c);
    Q coeff(const Index& sorted) const;
    Vec coords() const;
    std::string str() const;

    MultiVector operator-() const;
    friend MultiVector operator+(const MultiVector& a, const MultiVector& b);
    friend MultiVector operator-(const MultiVector& a, const MultiVector& b);
    friend MultiVector operator*(const Q& s, const MultiVector& a);
    friend bool operator==(const MultiVector& a, const MultiVector& b) {
        return a.n_ == b.n_ && (a.t_ == b.t_) && (a.t_.empty() || a.m_ == b.m_);
    }

private:
    std::size_t n_ = 0, m_ = 0;
    std::map<Index, Q> t_;
};

MultiVector wedge(const MultiVector& a, const MultiVector& b);
MultiVector schouten(const LieAlgebra& g, const MultiVector& u, const MultiVector& v);

enum class LiftMode { derivation, group };
QMatrix lift(const QMatrix& t, std::size_t m, LiftMode mode);
// Schouten action [e_i, .] on Lambda^m as a matrix, equal to the derivation lift of ad_i.
QMatrix ad_lift(const LieAlgebra& g, std::size_t i, std::size_t m);

std::vector<Vec> invariant_subspace(const LieAlgebra& g, std::size_t m);

struct ReducedClass {
    MultiVector representative; // normal form modulo the invariant subspace
    std::vector<Vec> invariant_basis;
    friend bool operator==(const ReducedClass& a, const ReducedClass& b) {
        return a.representative.coords() == b.representative.coords();
    }
};
ReducedClass reduce(const LieAlgebra& g, const MultiVector& w);
ReducedClass reduced_bracket(const LieAlgebra& g, const ReducedClass& a, const ReducedClass& b);

struct NotAnIdeal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotTraceless : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_ideal(const LieAlgebra& g, const std::vector<Vec>& h);
bool is_traceless_ideal(const LieAlgebra& g, const std::vector<Vec>& h);
MultiVector top_wedge(std::size_t n, const std::vector<Vec>& h);

struct TracelessInvariant {
    std::string source; // "center", "lower_central[k]", "derived[k]", "user[k]"
    std::vector<Vec> ideal;
    MultiVector top;
};
// Candidates: center, series terms, user subspaces (user ones throw on failure).
std::vector<TracelessInvariant> traceless_ideal_invariants(const LieAlgebra& g,
                                                           const std::vector<std::vector<Vec>>& user = {});
// z(g) wedge g_{p-2} for nilpotent g of step p; empty otherwise.
std::vector<MultiVector> nilpotent_lambda2_candidates(const LieAlgebra& g);

bool is_invariant(const LieAlgebra& g, const MultiVector& w);

} // namespace lb
