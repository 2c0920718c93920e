#pragma once
// Exact rational scalars, dense matrices and sparse polynomials.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lb {

using Q = mpq_class;
using Vec = std::vector<Q>;

Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const Q& s);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Q dot(const Vec& a, const Vec& b);
Vec unit(std::size_t n, std::size_t i);

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Q& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    QMatrix transpose() const;
    Vec apply(const Vec& v) const;
    bool is_zero() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Q& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

struct Echelon {
    QMatrix r;                       // reduced row echelon form, zero rows removed
    std::vector<std::size_t> pivots; // pivot column of each row
};
Echelon rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);
Q det(const QMatrix& m);

struct RankKernel {
    std::size_t rank;
    std::vector<Vec> kernel; // rows of a reduced echelon matrix
};
RankKernel rank_kernel(const QMatrix& m);

// Canonical basis of span(vs): nonzero rows of the RREF.
std::vector<Vec> canonical_basis(const std::vector<Vec>& vs, std::size_t dim);
bool in_span(const std::vector<Vec>& basis, const Vec& v);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);
// Remove from v its components along the pivots of a canonical basis.
Vec reduce_mod(const std::vector<Vec>& canon, const Vec& v);
// Intersection of two subspaces of Q^dim, canonical basis.
std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t dim);

struct Inconsistent {
    std::size_t row; // echelon row that reads 0 = nonzero
};
struct AffineSolution {
    Vec particular;
    std::vector<Vec> kernel;
};
std::variant<AffineSolution, Inconsistent> solve_linear(const QMatrix& a, const Vec& b);

// Sparse polynomial over Q in a fixed number of variables, dense exponents.
class Poly {
public:
    using Mono = std::vector<unsigned>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : n_(nvars) {}
    static Poly constant(std::size_t nvars, const Q& c);
    static Poly var(std::size_t nvars, std::size_t i);
    static Poly linear(const Vec& coeffs);

    std::size_t vars() const { return n_; }
    const std::map<Mono, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    int degree() const;
    void add_term(const Mono& m, const Q& c);

    Q eval(const Vec& x) const;
    Poly derivative(std::size_t i) const;
    Poly substitute_zero(std::size_t i) const;
    // Lexicographic order with x1 > x2 > ...; largest monomial leads.
    const Mono& leading_monomial() const;
    const Q& leading_coeff() const;
    Poly monic() const;
    // Linear coefficients if total degree <= 1 and no constant term.
    std::optional<Vec> as_linear_form() const;
    std::string str() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Q& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator<(const Poly& a, const Poly& b);

private:
    std::size_t n_ = 0;
    std::map<Mono, Q> t_;
};

Q poly_eval(const Poly& p, const Vec& point);

// Monomials of total degree <= d in n variables, graded then lexicographic.
std::vector<Poly::Mono> monomials_up_to(std::size_t n, unsigned d);

// Parser for expressions like "2*x1*x6 + (1+alpha)*x3*x4 - x5^2".
// Identifiers other than x<i> are looked up in `symbols`.
struct PolyParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Poly parse_poly(const std::string& s, std::size_t nvars,
                const std::map<std::string, Q>& symbols = {});

// Polynomial relation used for region and locus descriptions.
struct Constraint {
    enum class Rel { eq, ne, gt, lt, ge, le };
    Poly p;
    Rel rel = Rel::eq;
    bool holds(const Vec& x) const;
    std::string str() const;
};
// "x3*x4 != 0", "x1 > 0", "x2 = 0", "x1*x6 + x3*x4 == 0"
Constraint parse_constraint(const std::string& s, std::size_t nvars, const std::map<std::string, Q>& symbols = {});

} // namespace lb
