#pragma once

#include "parkhull/numeric.hpp"
#include "parkhull/polytope.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

namespace parkhull {

/// Face descriptor blocks (B_{-1}, B_0, B_1, ..., B_k) of {1..n}: indices
/// where a maximizing direction is negative, zero, and then grouped by
/// increasing positive value. B_1..B_k are nonempty. The degenerate
/// patterns (l_{-1}=0, l_0=1) and (l_{-1}=0, l_0=0, l_1=1) are excluded;
/// each face corresponds to exactly one remaining partition.
struct OrderedPartition {
    std::vector<int> negative;              // B_{-1}, sorted
    std::vector<int> zero;                  // B_0, sorted
    std::vector<std::vector<int>> positive; // B_1..B_k, each sorted
};

struct FaceDescriptor {
    OrderedPartition partition;
    int dimension = 0; // n - k - l_{-1}
};

/// (f_0, f_1, ..., f_{n-1}) with
/// f_{n-s} = sum_{m=0, m!=1}^{s} C(n,m) (s-m)! S(n-m+1, s-m+1).
/// The s = 0 term (the polytope itself) is not part of the vector.
inline std::vector<BigInt> f_vector(int n) {
    if (n < 1) throw std::domain_error("f_vector: n must be >= 1");
    std::vector<BigInt> f(n);
    for (int s = 1; s <= n; ++s) {
        BigInt total{0};
        for (int m = 0; m <= s; ++m) {
            if (m == 1) continue;
            total += binomial(n, m) * factorial(s - m) * stirling2(n - m + 1, s - m + 1);
        }
        f[n - s] = total;
    }
    return f;
}

/// n V / 2 where V is the vertex count; P_n's graph is n-regular.
inline BigInt edge_count(int n) {
    if (n < 2) throw std::domain_error("edge_count: needs n >= 2");
    return n * vertex_count(n) / 2;
}

/// Visits every valid ordered partition with dimension d exactly once.
/// Iterates m = |B_{-1}| (choosing B_{-1}), then B_0, then distributes the
/// remainder over k = n - d - m ordered nonempty blocks.
template <class Visit>
void for_each_face(int n, int d, Visit&& visit) {
    if (n < 1 || d < 0 || d > n)
        throw std::domain_error("for_each_face: need n >= 1 and 0 <= d <= n");
    if (d == n) {
        // improper face: the polytope itself, c = 0
        FaceDescriptor fd;
        for (int i = 1; i <= n; ++i) fd.partition.zero.push_back(i);
        fd.dimension = n;
        visit(std::as_const(fd));
        return;
    }
    std::vector<int> universe(n);
    for (int i = 0; i < n; ++i) universe[i] = i + 1;

    auto for_each_subset = [](const std::vector<int>& elems, int size, auto&& fn) {
        std::vector<int> pick(size);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == size) {
                fn(std::as_const(pick));
                return;
            }
            for (int i = start; i <= static_cast<int>(elems.size()) - (size - depth); ++i) {
                pick[depth] = elems[i];
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    };

    for (int m = 0; m <= n - d && m <= n; ++m) {
        const int k = n - d - m;
        for_each_subset(universe, m, [&](const std::vector<int>& bneg) {
            std::vector<int> rest;
            for (int e : universe)
                if (!std::binary_search(bneg.begin(), bneg.end(), e)) rest.push_back(e);
            for (int l0 = 0; l0 <= static_cast<int>(rest.size()); ++l0) {
                if (static_cast<int>(rest.size()) - l0 < k) break;
                if (m == 0 && l0 == 1) continue; // degenerate: zero block of size 1
                for_each_subset(rest, l0, [&](const std::vector<int>& bzero) {
                    std::vector<int> movable;
                    for (int e : rest)
                        if (!std::binary_search(bzero.begin(), bzero.end(), e)) movable.push_back(e);
                    if (k == 0) {
                        if (!movable.empty()) return;
                        FaceDescriptor fd;
                        fd.partition.negative = bneg;
                        fd.partition.zero = bzero;
                        fd.dimension = d;
                        visit(std::as_const(fd));
                        return;
                    }
                    // distribute movable elements over k ordered nonempty blocks
                    std::vector<std::vector<int>> blocks(k);
                    auto place = [&](auto&& self, std::size_t idx, int empty_left) -> void {
                        if (static_cast<int>(movable.size() - idx) < empty_left) return;
                        if (idx == movable.size()) {
                            if (empty_left != 0) return;
                            if (m == 0 && l0 == 0 && blocks[0].size() == 1) return; // degenerate
                            FaceDescriptor fd;
                            fd.partition.negative = bneg;
                            fd.partition.zero = bzero;
                            fd.partition.positive = blocks;
                            fd.dimension = d;
                            visit(std::as_const(fd));
                            return;
                        }
                        for (int b = 0; b < k; ++b) {
                            const bool was_empty = blocks[b].empty();
                            blocks[b].push_back(movable[idx]);
                            self(self, idx + 1, empty_left - (was_empty ? 1 : 0));
                            blocks[b].pop_back();
                        }
                    };
                    place(place, 0, k);
                });
            }
        });
    }
}

inline std::vector<FaceDescriptor> enumerate_faces(int n, int d) {
    std::vector<FaceDescriptor> out;
    for_each_face(n, d, [&](const FaceDescriptor& fd) { out.push_back(fd); });
    return out;
}

/// The vertices of the face described by fd, as sorted coordinate tuples:
/// 1 on B_{-1}; on B_0 a permutation of (1,...,1, j+1, ..., l_{-1}+l_0) for
/// some j in [l_{-1}, l_{-1}+l_0]; on each B_i a permutation of the next
/// consecutive value run.
inline std::vector<std::vector<int>> face_vertices(const FaceDescriptor& fd, int n) {
    const auto& part = fd.partition;
    const int lneg = static_cast<int>(part.negative.size());
    const int l0 = static_cast<int>(part.zero.size());
    std::vector<std::vector<int>> result;
    std::vector<int> point(n, 0);
    for (int i : part.negative) point[i - 1] = 1;

    // value runs for the positive blocks
    std::vector<std::vector<int>> runs;
    int offset = lneg + l0;
    for (const auto& block : part.positive) {
        std::vector<int> run(block.size());
        for (std::size_t t = 0; t < block.size(); ++t) run[t] = offset + 1 + static_cast<int>(t);
        offset += static_cast<int>(block.size());
        runs.push_back(std::move(run));
    }

    auto assign_blocks = [&](auto&& self, std::size_t bi) -> void {
        if (bi == part.positive.size()) {
            result.push_back(point);
            return;
        }
        std::vector<int> perm = runs[bi];
        std::sort(perm.begin(), perm.end());
        do {
            for (std::size_t t = 0; t < perm.size(); ++t)
                point[part.positive[bi][t] - 1] = perm[t];
            self(self, bi + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    for (int j = lneg; j <= lneg + l0; ++j) {
        std::vector<int> zero_pattern;
        for (int t = 0; t < j - lneg; ++t) zero_pattern.push_back(1);
        for (int v = j + 1; v <= lneg + l0; ++v) zero_pattern.push_back(v);
        std::sort(zero_pattern.begin(), zero_pattern.end());
        do {
            for (std::size_t t = 0; t < zero_pattern.size(); ++t)
                point[part.zero[t] - 1] = zero_pattern[t];
            assign_blocks(assign_blocks, 0);
        } while (std::next_permutation(zero_pattern.begin(), zero_pattern.end()));
    }
    // when B_{-1} is empty the j = l_{-1} and j = l_{-1}+1 zero-block
    // patterns coincide, so the construction can emit repeats
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

} // namespace parkhull
