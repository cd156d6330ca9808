#pragma once

#include "parkhull/errors.hpp"
#include "parkhull/numeric.hpp"
#include "parkhull/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <thread>
#include <vector>

namespace parkhull {

/// Sorted list of vertex indices into the canonical vertex order.
using VertexIndexSet = std::vector<std::uint32_t>;

/// Vertex-facet incidence: tight[f][v] is true when vertex v satisfies
/// facet f with equality.
struct IncidenceMatrix {
    int n = 0;
    FacetSystem facets;
    std::vector<Vertex> vertices;
    std::vector<std::vector<bool>> tight;
};

inline IncidenceMatrix incidence_matrix(int n) {
    IncidenceMatrix im;
    im.n = n;
    im.facets = facet_system(n);
    im.vertices = polytope_vertices(n);
    im.tight.resize(im.facets.inequalities.size());
    for (std::size_t f = 0; f < im.facets.inequalities.size(); ++f) {
        const auto& ineq = im.facets.inequalities[f];
        im.tight[f].resize(im.vertices.size());
        for (std::size_t v = 0; v < im.vertices.size(); ++v) {
            long long dot = 0;
            for (int i = 0; i < n; ++i)
                dot += static_cast<long long>(ineq.coefficients[i]) * im.vertices[v].entries[i];
            im.tight[f][v] = (dot == ineq.rhs);
        }
    }
    return im;
}

/// Rank of a rational matrix by Gaussian elimination with exact pivots.
inline int exact_rank(std::vector<std::vector<BigRational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto& prow = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const BigRational ratio = rows[r][c] / prow[c];
            for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] -= ratio * prow[cc];
        }
        ++rank;
    }
    return rank;
}

/// Affine dimension of a set of vertices: rank of the differences to the
/// first point, computed exactly.
inline int affine_dimension(const VertexIndexSet& face, const std::vector<Vertex>& vertices) {
    if (face.size() <= 1) return 0;
    const auto& base = vertices[face[0]].entries;
    std::vector<std::vector<BigRational>> rows;
    rows.reserve(face.size() - 1);
    for (std::size_t i = 1; i < face.size(); ++i) {
        const auto& p = vertices[face[i]].entries;
        std::vector<BigRational> row(base.size());
        for (std::size_t c = 0; c < base.size(); ++c) row[c] = BigRational(p[c] - base[c]);
        rows.push_back(std::move(row));
    }
    return exact_rank(std::move(rows));
}

namespace detail {

inline VertexIndexSet intersect_sets(const VertexIndexSet& a, const VertexIndexSet& b) {
    VertexIndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// Independent face-lattice oracle: faces are recovered as intersections of
/// facet vertex-sets, closed under intersection from a worklist seeded with
/// the single-facet tight sets; dimensions come from exact affine rank.
/// Returns dimension -> set of faces (each a sorted vertex-index set).
/// The worklist may be partitioned over worker threads; the final map does
/// not depend on the partitioning.
inline std::map<int, std::set<VertexIndexSet>> face_lattice_oracle(int n, int worker_threads = 1) {
    if (n < 2 || n > 5)
        throw ResourceBoundError("face_lattice_oracle", "practical bound 2 <= n <= 5");
    const IncidenceMatrix im = incidence_matrix(n);

    std::vector<VertexIndexSet> seeds;
    for (const auto& row : im.tight) {
        VertexIndexSet s;
        for (std::uint32_t v = 0; v < row.size(); ++v)
            if (row[v]) s.push_back(v);
        seeds.push_back(std::move(s));
    }

    std::set<VertexIndexSet> faces(seeds.begin(), seeds.end());
    std::vector<VertexIndexSet> frontier(faces.begin(), faces.end());
    while (!frontier.empty()) {
        std::vector<VertexIndexSet> discovered;
        auto process = [&](std::size_t begin, std::size_t end, std::vector<VertexIndexSet>& out) {
            for (std::size_t i = begin; i < end; ++i) {
                for (const auto& seed : seeds) {
                    VertexIndexSet meet = detail::intersect_sets(frontier[i], seed);
                    if (!meet.empty() && !faces.contains(meet)) out.push_back(std::move(meet));
                }
            }
        };
        if (worker_threads <= 1 || frontier.size() < 2) {
            process(0, frontier.size(), discovered);
        } else {
            const std::size_t parts = std::min<std::size_t>(worker_threads, frontier.size());
            std::vector<std::vector<VertexIndexSet>> buckets(parts);
            std::vector<std::thread> pool;
            const std::size_t chunk = (frontier.size() + parts - 1) / parts;
            for (std::size_t p = 0; p < parts; ++p) {
                const std::size_t b = p * chunk;
                const std::size_t e = std::min(frontier.size(), b + chunk);
                pool.emplace_back([&, b, e, p] { process(b, e, buckets[p]); });
            }
            for (auto& t : pool) t.join();
            for (auto& bucket : buckets)
                for (auto& s : bucket) discovered.push_back(std::move(s));
        }
        frontier.clear();
        for (auto& s : discovered) {
            if (faces.insert(s).second) frontier.push_back(std::move(s));
        }
    }

    std::map<int, std::set<VertexIndexSet>> by_dimension;
    for (const auto& face : faces)
        by_dimension[affine_dimension(face, im.vertices)].insert(face);
    return by_dimension;
}

} // namespace parkhull
