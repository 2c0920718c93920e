#pragma once
// Invariant bilinear and multilinear forms.

#include "liebialg/grassmann.hpp"

#include <functional>

namespace lb {

struct SymForm {
    std::string algebra;
    std::size_t degree = 1;
    QMatrix matrix; // in the lexicographic wedge basis
};

struct FormFamily {
    std::vector<std::string> parameters;
    std::vector<QMatrix> basis_forms;
};

SymForm killing_symform(const LieAlgebra& g);
SymForm extend_form(const SymForm& b, std::size_t m, std::size_t n);
QMatrix extend_form(const QMatrix& b, std::size_t m);

enum class Symmetry { sym, antisym, none };
FormFamily solve_invariant_forms(const LieAlgebra& g, std::size_t m, Symmetry s);

// b(A x, y) + b(x, A y) = 0 for every lifted ad action A on Lambda^m.
bool is_invariant_form(const LieAlgebra& g, const QMatrix& b, std::size_t m);

// Dense k-linear form on g, entry index i1*n^{k-1} + ... + ik.
struct KForm {
    std::size_t n = 0, k = 0;
    std::vector<Q> values;
    const Q& at(const std::vector<std::size_t>& idx) const;
};

struct NotACasimir : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DerivedKind { trace_sym, trace_antisym, casimir };
// For casimir, `c` is a dense symmetric tensor in g^{(x)k} with the same layout.
KForm derived_forms(const LieAlgebra& g, std::size_t k, DerivedKind kind, const std::vector<Q>& c = {});
bool is_invariant_kform(const LieAlgebra& g, const KForm& f);
// Quadratic Casimir dual to a nondegenerate Killing form.
std::vector<Q> killing_casimir(const LieAlgebra& g);

} // namespace lb
