#pragma once

#include "parkhull/errors.hpp"
#include "parkhull/numeric.hpp"
#include "parkhull/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace parkhull {

/// Decomposition of a coordinate-sum level S: either the bottom slice S = n
/// (the all-ones point) or the unique pair (r, k) with 2 <= r <= k+1 whose
/// sorted vertex type is (1,...,1, r, k+2, ..., n) with k ones.
struct SliceSpec {
    int n = 0;
    long long sum = 0;
    bool all_ones = false;
    int r = 0;
    int k = 0;
};

namespace detail {

inline long long consecutive_sum(int a, int b) { // a + (a+1) + ... + b, 0 when a > b
    if (a > b) return 0;
    return (static_cast<long long>(a) + b) * (b - a + 1) / 2;
}

} // namespace detail

/// Locates the slice at sum level S by the bracketing inequality
/// 1+...+1+(k+2)+...+n < S <= 1+...+1+(k+1)+...+n over k = 1..n-1.
inline SliceSpec slice_spec(int n, long long S) {
    if (n < 1) throw std::domain_error("slice_spec: n must be >= 1");
    const long long max_sum = detail::consecutive_sum(1, n);
    if (S < n || S > max_sum)
        throw std::domain_error("slice_spec: sum level outside [n, n(n+1)/2]");
    SliceSpec spec;
    spec.n = n;
    spec.sum = S;
    if (S == n) {
        spec.all_ones = true;
        return spec;
    }
    for (int k = 1; k <= n - 1; ++k) {
        const long long low = (k + 1) + detail::consecutive_sum(k + 2, n);  // r = 1, degenerate
        const long long high = k + detail::consecutive_sum(k + 1, n);       // r = k + 1
        if (low < S && S <= high) {
            spec.k = k;
            spec.r = static_cast<int>(S - low + 1);
            return spec;
        }
    }
    throw IntegrityError("slice_spec: bracketing search failed");
}

/// Sorted vertex type of the slice: all ones, or (1,...,1, r, k+2, ..., n).
inline std::vector<int> slice_vertex_type(const SliceSpec& spec) {
    std::vector<int> x;
    if (spec.all_ones) {
        x.assign(spec.n, 1);
        return x;
    }
    for (int i = 0; i < spec.k; ++i) x.push_back(1);
    x.push_back(spec.r);
    for (int v = spec.k + 2; v <= spec.n; ++v) x.push_back(v);
    return x;
}

/// Alternating binomial transform y_j = sum_{i=0}^{j-1} (-1)^i C(j-1, i)
/// x_{j-i} of an ascending tuple; inverse is x_j = sum_i C(j-1, i-1) y_i.
inline std::vector<BigInt> y_coordinates(std::span<const int> x) {
    if (!std::is_sorted(x.begin(), x.end()))
        throw std::invalid_argument("y_coordinates: input must be ascending");
    const int n = static_cast<int>(x.size());
    std::vector<BigInt> y(n);
    for (int j = 1; j <= n; ++j) {
        BigInt acc{0};
        for (int i = 0; i < j; ++i) {
            const BigInt term = binomial(j - 1, i) * x[j - 1 - i];
            acc += (i % 2 == 0) ? term : -term;
        }
        y[j - 1] = acc;
    }
    return y;
}

/// Union bound check: every choice of k of the subsets has union of size at
/// least k+1. Subsets are bitmasks over {1..n} (bit i-1 for element i).
inline bool dragon_condition(std::span<const std::uint32_t> subsets, int n) {
    (void)n;
    const int m = static_cast<int>(subsets.size());
    for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
        std::uint32_t merged = 0;
        for (int i = 0; i < m; ++i)
            if (pick & (1u << i)) merged |= subsets[i];
        if (std::popcount(merged) < std::popcount(pick) + 1) return false;
    }
    return true;
}

namespace detail {

inline bool kuhn_augment(int idx, const std::vector<std::uint32_t>& subsets, std::uint32_t banned,
                         std::vector<bool>& visited, std::vector<int>& owner_of_element) {
    for (int e = 0; e < static_cast<int>(owner_of_element.size()); ++e) {
        const std::uint32_t bit = 1u << e;
        if (!(subsets[idx] & bit) || (banned & bit) || visited[e]) continue;
        visited[e] = true;
        if (owner_of_element[e] < 0 ||
            kuhn_augment(owner_of_element[e], subsets, banned, visited, owner_of_element)) {
            owner_of_element[e] = idx;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Matching certificate for the same condition: for every excluded element
/// j the family (S_i minus j) must have a matching saturating all indices.
inline bool dragon_condition_matching(std::span<const std::uint32_t> subsets, int n) {
    const std::vector<std::uint32_t> family(subsets.begin(), subsets.end());
    for (int j = 0; j < n; ++j) {
        const std::uint32_t banned = 1u << j;
        std::vector<int> owner_of_element(n, -1);
        for (std::size_t i = 0; i < family.size(); ++i) {
            std::vector<bool> visited(n, false);
            if (!detail::kuhn_augment(static_cast<int>(i), family, banned, visited, owner_of_element))
                return false;
        }
    }
    return true;
}

/// Integer points on the slice at sum level S, by the bracket sum over
/// dragon-condition collections: with y from the slice vertex type and
/// Y_I = y_|I|, each collection contributes raising factorials grouped by
/// subset multiplicity, the full set [n] contributing base Y_[n] + 1; the
/// grand total divides exactly by (n-1)!.
inline BigInt postnikov_slice_count(int n, long long S) {
    if (n > kMaxScanDimension)
        throw ResourceBoundError("postnikov_slice_count", "dimension exceeds enumeration limit");
    const SliceSpec spec = slice_spec(n, S);
    const std::vector<int> x = slice_vertex_type(spec);
    const std::vector<BigInt> y_big = y_coordinates(std::span<const int>(x));
    std::vector<long long> y(n);
    for (int i = 0; i < n; ++i) y[i] = y_big[i].convert_to<long long>();

    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    const int slots = n - 1;

    // Candidate subsets: size >= 2 (smaller ones always fail the union
    // bound) and nonzero Y value unless the subset is [n] itself.
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int size = std::popcount(mask);
        if (size < 2) continue;
        if (mask != full && y[size - 1] == 0) continue;
        candidates.push_back(mask);
    }

    BigInt total{0};
    if (slots == 0) {
        total = 1; // the empty collection
    } else {
        std::vector<std::uint32_t> prefix_union(std::size_t{1} << slots, 0);
        std::vector<int> multiplicity(std::size_t{1} << n, 0);
        auto dfs = [&](auto&& self, int depth, const BigInt& product) -> void {
            if (depth == slots) {
                total += product;
                return;
            }
            const std::uint32_t new_bit = 1u << depth;
            for (const std::uint32_t cand : candidates) {
                // incremental union bound over every index subset ending here
                bool ok = true;
                for (std::uint32_t mu = 0; mu < new_bit; ++mu) {
                    const std::uint32_t merged = prefix_union[mu] | cand;
                    if (std::popcount(merged) < std::popcount(mu) + 2) {
                        ok = false;
                        break;
                    }
                    prefix_union[mu | new_bit] = merged;
                }
                if (!ok) continue;
                const long long base = (cand == full) ? y[n - 1] + 1 : y[std::popcount(cand) - 1];
                const long long factor = base + multiplicity[cand];
                if (factor == 0) continue; // the whole subtree contributes zero
                ++multiplicity[cand];
                self(self, depth + 1, product * factor);
                --multiplicity[cand];
            }
        };
        dfs(dfs, 0, BigInt(1));
    }

    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(total, factorial(static_cast<unsigned>(n - 1)), quotient, remainder);
    if (remainder != 0)
        throw IntegrityError("postnikov_slice_count: bracket sum not divisible by (n-1)!");
    return quotient;
}

/// Integer points of P_n with coordinate sum S, by direct scan of the sum
/// level inside [1, n]^n.
inline BigInt slice_count_bruteforce(int n, long long S) {
    (void)slice_spec(n, S); // validates the range
    if (n > kMaxScanDimension)
        throw ResourceBoundError("slice_count_bruteforce", "dimension exceeds scanner limit");
    std::array<long long, kMaxScanDimension + 1> bound{};
    for (int k = 1; k <= n; ++k) bound[k] = top_sum_bound(n, k);
    std::array<int, kMaxScanDimension> x{};
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
        const int left = n - pos - 1;
        if (left == 0) {
            if (remaining < 1 || remaining > n) return;
            x[pos] = static_cast<int>(remaining);
            count += detail::scan_point_inside(x.data(), n, bound.data());
            return;
        }
        const int lo = static_cast<int>(std::max<long long>(1, remaining - static_cast<long long>(left) * n));
        const int hi = static_cast<int>(std::min<long long>(n, remaining - left));
        for (int v = lo; v <= hi; ++v) {
            x[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, S);
    return BigInt(count);
}

enum class CountMethod { closed, bruteforce };

/// Worst-case leaf count of the closed-method collection enumeration,
/// saturating at the budget ceiling.
inline std::uint64_t closed_method_leaf_estimate(int n) {
    const std::uint64_t limit = ~std::uint64_t{0};
    if (n >= 16) return limit;
    const std::uint64_t candidates = (std::uint64_t{1} << n) - 1 - n;
    std::uint64_t est = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (est > limit / std::max<std::uint64_t>(candidates, 1)) return limit;
        est *= candidates;
    }
    return est;
}

/// Total number of integer points of P_n, either as the sum of the closed
/// slice counts over S = n .. n(n+1)/2 or by brute-force box scan.
inline BigInt lattice_count(int n, CountMethod method, const ScanOptions& opts = {}) {
    if (n < 1) throw std::domain_error("lattice_count: n must be >= 1");
    if (method == CountMethod::bruteforce) {
        return BigInt(count_dilated_lattice_points(n, 1, opts, "lattice_count(bruteforce)"));
    }
    if (closed_method_leaf_estimate(n) > opts.point_budget)
        throw ResourceBoundError("lattice_count(closed)",
                                 "collection enumeration exceeds budget of " +
                                     std::to_string(opts.point_budget));
    BigInt total{0};
    const long long max_sum = detail::consecutive_sum(1, n);
    for (long long S = n; S <= max_sum; ++S) total += postnikov_slice_count(n, S);
    return total;
}

} // namespace parkhull
