#pragma once

#include "parkhull/errors.hpp"
#include "parkhull/numeric.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace parkhull {

inline constexpr int kMaxScanDimension = 16;

/// Work budget for brute-force scanners, measured in candidate points.
struct ScanOptions {
    std::uint64_t point_budget = 100'000'000;
    int shards = 1;
};

/// True iff every entry lies in [1, n] and the increasing rearrangement b
/// satisfies b_i <= i, where n is the tuple length.
inline bool is_parking_function(std::span<const int> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return false;
    std::vector<int> b(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b.front() < 1 || b.back() > n) return false;
    for (int i = 0; i < n; ++i)
        if (b[i] > i + 1) return false;
    return true;
}

/// Visits every parking function of length n exactly once, in lexicographic
/// order. A prefix is extended only while padding the remaining positions
/// with ones could still complete it.
template <class Visit>
void for_each_parking_function(int n, Visit&& visit) {
    if (n < 1) throw std::domain_error("for_each_parking_function: n must be >= 1");
    std::vector<int> a(n);
    std::vector<int> value_count(n + 1, 0);
    auto feasible = [&](int filled) {
        int at_most_j = 0;
        for (int j = 1; j <= n; ++j) {
            at_most_j += value_count[j];
            if (at_most_j + (n - filled) < j) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            visit(std::as_const(a));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            a[pos] = v;
            ++value_count[v];
            if (feasible(pos + 1)) self(self, pos + 1);
            --value_count[v];
        }
    };
    rec(rec, 0);
}

inline std::vector<std::vector<int>> all_parking_functions(int n) {
    std::vector<std::vector<int>> out;
    for_each_parking_function(n, [&](const std::vector<int>& a) { out.push_back(a); });
    return out;
}

/// Right-hand side of the size-k upper bound: (n-k+1) + ... + n.
inline long long top_sum_bound(int n, int k) {
    return static_cast<long long>(k) * n - static_cast<long long>(k) * (k - 1) / 2;
}

/// One facet inequality c . x <= rhs; lower bounds appear as -x_i <= -1.
struct FacetInequality {
    std::vector<int> coefficients;
    long long rhs = 0;
};

struct FacetSystem {
    int dimension = 0;
    std::vector<FacetInequality> inequalities;
};

/// The canonical inequality description: n lower bounds plus one sum bound
/// per subset of size k for k in {1..n-2, n}. Subsets of size n-1 are not
/// facets and are deliberately absent. Total count is 2^n - 1.
inline FacetSystem facet_system(int n) {
    if (n < 2)
        throw std::domain_error("facet_system: degenerate dimension, P_1 is a point");
    FacetSystem sys;
    sys.dimension = n;
    for (int i = 0; i < n; ++i) {
        FacetInequality ineq;
        ineq.coefficients.assign(n, 0);
        ineq.coefficients[i] = -1;
        ineq.rhs = -1;
        sys.inequalities.push_back(std::move(ineq));
    }
    auto add_subset_bounds = [&](int k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            FacetInequality ineq;
            ineq.coefficients.assign(n, 0);
            for (int i : pick) ineq.coefficients[i] = 1;
            ineq.rhs = top_sum_bound(n, k);
            sys.inequalities.push_back(std::move(ineq));
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    };
    for (int k = 1; k <= n - 2; ++k) add_subset_bounds(k);
    add_subset_bounds(n);
    return sys;
}

/// Membership in the m-fold dilation of P_n. Checks x_i >= m and, for each
/// k in {1..n-2, n}, that the k largest coordinates sum to at most
/// m * ((n-k+1) + ... + n); this is equivalent to all C(n, k) subset bounds.
template <class Scalar>
bool membership(std::span<const Scalar> x, int dilation = 1) {
    const int n = static_cast<int>(x.size());
    if (n == 0) return false;
    using Acc = std::conditional_t<std::is_integral_v<Scalar>, long long, Scalar>;
    for (const Scalar& xi : x)
        if (xi < dilation) return false;
    std::vector<Scalar> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    Acc prefix{0};
    for (int k = 1; k <= n; ++k) {
        prefix += sorted[k - 1];
        if (k == n - 1) continue;
        if (prefix > Acc(dilation) * top_sum_bound(n, k)) return false;
    }
    return true;
}

struct Vertex {
    std::vector<int> entries;
    int layer = 0;
};

/// Layer n - k for a vertex permuting (1,...,1, k+1,...,n) with k ones.
inline int vertex_layer(std::span<const int> v) {
    int ones = 0;
    for (int c : v) ones += (c == 1);
    return static_cast<int>(v.size()) - ones;
}

/// n! (1/1! + 1/2! + ... + 1/n!) as an exact integer.
inline BigInt vertex_count(int n) {
    if (n < 1) throw std::domain_error("vertex_count: n must be >= 1");
    BigInt total{0};
    BigInt term{1};
    for (int k = n - 1; k >= 1; --k) term *= k + 1;          // term = n!/k!
    for (int k = 1; k <= n; ++k) {
        total += term;
        term /= k + 1;                                        // n!/(k+1)!
    }
    return total;
}

/// Visits vertices in canonical order: by layer ascending, then
/// lexicographically within a layer.
template <class Visit>
void for_each_vertex(int n, Visit&& visit) {
    if (n < 1) throw std::domain_error("for_each_vertex: n must be >= 1");
    for (int k = n; k >= 1; --k) {
        std::vector<int> pattern(n);
        for (int i = 0; i < k; ++i) pattern[i] = 1;
        for (int i = k; i < n; ++i) pattern[i] = i + 1;
        do {
            visit(std::as_const(pattern), n - k);
        } while (std::next_permutation(pattern.begin(), pattern.end()));
    }
}

inline std::vector<Vertex> polytope_vertices(int n) {
    std::vector<Vertex> out;
    for_each_vertex(n, [&](const std::vector<int>& v, int layer) {
        out.push_back(Vertex{v, layer});
    });
    return out;
}

/// The n neighbors of a vertex, by the canonical adjacency rules conjugated
/// through coordinate permutation. With k ones:
///  (a) same layer: swap the positions holding values j and j+1, for
///      k+1 <= j <= n-1 (for k = 1 the range is 1 <= j <= n-1);
///  (b) layer up (k >= 2): overwrite any one of the k ones with the value k;
///  (c) layer down (k <= n-1): overwrite the position holding k+1 with 1.
inline std::vector<std::vector<int>> vertex_neighbors(std::span<const int> v) {
    const int n = static_cast<int>(v.size());
    const int k = n - vertex_layer(v);
    std::vector<int> position_of(n + 2, -1);
    for (int i = 0; i < n; ++i)
        if (position_of[v[i]] < 0) position_of[v[i]] = i;
    std::vector<std::vector<int>> out;
    out.reserve(n);
    const int j_low = (k == 1) ? 1 : k + 1;
    for (int j = j_low; j <= n - 1; ++j) {
        std::vector<int> u(v.begin(), v.end());
        std::swap(u[position_of[j]], u[position_of[j + 1]]);
        out.push_back(std::move(u));
    }
    if (k >= 2) {
        for (int i = 0; i < n; ++i) {
            if (v[i] != 1) continue;
            std::vector<int> u(v.begin(), v.end());
            u[i] = k;
            out.push_back(std::move(u));
        }
    }
    if (k <= n - 1) {
        std::vector<int> u(v.begin(), v.end());
        u[position_of[k + 1]] = 1;
        out.push_back(std::move(u));
    }
    return out;
}

struct EdgeGraph {
    std::vector<Vertex> vertices;                    // canonical order
    std::vector<std::vector<std::int32_t>> adjacency; // sorted neighbor indices

    std::size_t edge_count() const {
        std::size_t deg = 0;
        for (const auto& nb : adjacency) deg += nb.size();
        return deg / 2;
    }
};

inline EdgeGraph edge_graph(int n) {
    if (n < 2) throw std::domain_error("edge_graph: needs n >= 2");
    EdgeGraph g;
    g.vertices = polytope_vertices(n);
    std::map<std::vector<int>, std::int32_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index.emplace(g.vertices[i].entries, static_cast<std::int32_t>(i));
    g.adjacency.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (auto& u : vertex_neighbors(std::span<const int>(g.vertices[i].entries))) {
            g.adjacency[i].push_back(index.at(u));
        }
        std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
    }
    return g;
}

namespace detail {

/// Point test used by the box scanners: sort a copy descending, then check
/// prefix sums against the dilated bounds (k = n-1 skipped, as in the facet
/// list). Lower bounds hold by box construction.
inline bool scan_point_inside(const int* x, int n, const long long* dilated_bound) {
    std::array<int, kMaxScanDimension> s;
    std::copy(x, x + n, s.begin());
    for (int i = 1; i < n; ++i) {
        const int v = s[i];
        int j = i - 1;
        while (j >= 0 && s[j] < v) {
            s[j + 1] = s[j];
            --j;
        }
        s[j + 1] = v;
    }
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += s[k - 1];
        if (k == n - 1) continue;
        if (prefix > dilated_bound[k]) return false;
    }
    return true;
}

/// Odometer scan of the box [m, m n]^n restricted to first coordinate in
/// [x0_lo, x0_hi]; counts points of the m-fold dilation.
inline std::uint64_t scan_box_chunk(int n, int m, int x0_lo, int x0_hi) {
    std::array<long long, kMaxScanDimension + 1> bound{};
    for (int k = 1; k <= n; ++k) bound[k] = static_cast<long long>(m) * top_sum_bound(n, k);
    const int lo = m;
    const int hi = m * n;
    std::array<int, kMaxScanDimension> x{};
    std::uint64_t count = 0;
    for (int x0 = x0_lo; x0 <= x0_hi; ++x0) {
        x[0] = x0;
        for (int i = 1; i < n; ++i) x[i] = lo;
        while (true) {
            count += scan_point_inside(x.data(), n, bound.data());
            int i = n - 1;
            while (i >= 1 && x[i] == hi) {
                x[i] = lo;
                --i;
            }
            if (i == 0) break;
            ++x[i];
        }
    }
    return count;
}

} // namespace detail

/// Counts |mP_n ∩ Z^n| by scanning the box [m, mn]^n, optionally sharded
/// over the first coordinate. The total is the sum of disjoint shard counts
/// and does not depend on the shard count.
inline std::uint64_t count_dilated_lattice_points(int n, int m, const ScanOptions& opts,
                                                  const std::string& method) {
    if (n < 1) throw std::domain_error(method + ": n must be >= 1");
    if (m == 0) return 1;
    if (n > kMaxScanDimension)
        throw ResourceBoundError(method, "dimension exceeds scanner limit");
    const int side = m * (n - 1) + 1;
    BigInt total_points = boost::multiprecision::pow(BigInt(side), static_cast<unsigned>(n));
    if (total_points > opts.point_budget)
        throw ResourceBoundError(method, "scan of " + total_points.str() + " points exceeds budget of " +
                                             std::to_string(opts.point_budget));
    const int shards = std::clamp(opts.shards, 1, side);
    if (shards == 1) return detail::scan_box_chunk(n, m, m, m * n);
    std::vector<std::uint64_t> partial(shards, 0);
    std::vector<std::thread> workers;
    const int span_per_shard = side / shards;
    const int remainder = side % shards;
    int next = m;
    for (int s = 0; s < shards; ++s) {
        const int len = span_per_shard + (s < remainder ? 1 : 0);
        const int lo = next;
        const int hi = next + len - 1;
        next = hi + 1;
        workers.emplace_back([&partial, s, n, m, lo, hi] {
            partial[s] = detail::scan_box_chunk(n, m, lo, hi);
        });
    }
    for (auto& w : workers) w.join();
    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;
    return total;
}

} // namespace parkhull
