#pragma once
// Gradations of Lie algebras over Z^k (optionally reduced modulo an integer).

#include "liebialg/grassmann.hpp"

#include <optional>

namespace lb {

using Degree = std::vector<long>;

struct Gradation {
    std::size_t k = 1;
    std::optional<long> modulus;
    std::vector<Degree> degrees; // one per basis vector
    Degree normalize(Degree d) const;
    Degree sum(const Degree& a, const Degree& b) const;
};

struct GradationCheck {
    bool valid = false;
    bool root = false;
    std::string reason; // first failing pair, or why the root test failed
};
GradationCheck verify_gradation(const LieAlgebra& g, const Gradation& gr);

// degree of each Lambda^m basis element -> canonical basis of that homogeneous space
std::map<Degree, std::vector<Vec>> decompose_lambda(const LieAlgebra& g, const Gradation& gr, std::size_t m);
Degree wedge_degree(const Gradation& gr, const Index& idx);

// Degrees alpha of Lambda^2 with (Lambda^3)^{(2 alpha)} = 0; each is checked by computing the brackets.
std::vector<Degree> limit_spaces(const LieAlgebra& g, const Gradation& gr);

// Catalog gradations: "sl2", "h", "su2", "r3m1", "r31", "r31_z2", "r3", "r3l", "gl2", "so22".
Gradation catalog_gradation(const std::string& name, const Params& params = {});

} // namespace lb
