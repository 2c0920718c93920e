#pragma once
// Shared fixtures for the unit and acceptance tests.

#include "liebialg/io.hpp"

#include <vector>

namespace support {

using namespace lb;

inline QMatrix mat(const std::vector<std::vector<Q>>& rows) {
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// Row-major flattening, so spans of matrices can be compared as vectors.
inline std::vector<Vec> flat(const std::vector<QMatrix>& ms) {
    std::vector<Vec> out;
    for (const auto& m : ms) {
        Vec v;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
        out.push_back(v);
    }
    return out;
}

// Every catalog algebra at one admissible parameter point.
inline std::vector<LieAlgebra> sample_catalog(std::size_t max_dim = 64) {
    std::vector<LieAlgebra> out;
    const std::vector<Params> tries = {{},
                                       {{"lambda", Q(1, 2)}},
                                       {{"alpha", Q(1, 2)}, {"beta", Q(-1, 2)}},
                                       {{"alpha", Q(1, 2)}},
                                       {{"alpha", Q(1)}, {"beta", Q(1, 2)}}};
    for (const auto& e : catalog_entries()) {
        for (const auto& p : tries) {
            bool fits = p.size() == e.param_names.size();
            for (const auto& nm : e.param_names) fits = fits && p.count(nm);
            if (!fits) continue;
            try {
                auto g = catalog(e.name, p);
                if (g.dim() <= max_dim) out.push_back(g);
                break;
            } catch (const std::invalid_argument&) {
            }
        }
    }
    return out;
}

inline std::vector<LieAlgebra> three_dimensional() {
    std::vector<LieAlgebra> out;
    for (auto& g : sample_catalog(3)) out.push_back(g);
    // a second point on each one-parameter family
    out.push_back(catalog("r3l", {{"lambda", Q(-1, 2)}}));
    out.push_back(catalog("r3pl", {{"lambda", Q(2)}}));
    return out;
}

} // namespace support
