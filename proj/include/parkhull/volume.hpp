#pragma once

#include "parkhull/numeric.hpp"
#include "parkhull/polytope.hpp"
#include "parkhull/series.hpp"

#include <cstddef>
#include <vector>

namespace parkhull {

/// Memoized table of exact volumes V_n, with V_0 = 1, V_1 = 0 and
/// V_n = (1/n) sum_{k=0}^{n-1} C(n,k) (n-k)^{n-k-1} (n+k-1)/2 V_k for n >= 2.
class VolumeTable {
public:
    const BigRational& value(std::size_t n) {
        while (values_.size() <= n) {
            const std::size_t m = values_.size();
            BigRational acc{0};
            for (std::size_t k = 0; k + 1 <= m; ++k) {
                const BigInt numer = binomial(static_cast<unsigned>(m), static_cast<long long>(k)) *
                                     boost::multiprecision::pow(BigInt(m - k), static_cast<unsigned>(m - k - 1)) *
                                     BigInt(m + k - 1);
                acc += BigRational(numer, BigInt(2)) * values_[k];
            }
            values_.push_back(acc / BigRational(m));
        }
        return values_[n];
    }

private:
    std::vector<BigRational> values_{BigRational(1), BigRational(0)};
};

/// Exact volume of P_n (a point for n = 1, so V_1 = 0).
inline BigRational volume(std::size_t n) {
    thread_local VolumeTable table;
    return table.value(n);
}

struct EgfIdentityReport {
    bool equal = false;
    RationalSeries residual;
};

/// Checks, coefficient by coefficient up to the given order, that the EGF
/// of the volume sequence equals exp(integral of x (g'(x))^2 / 2) where
/// g(x) = sum_{n>=1} n^{n-1} x^n / n!.
inline EgfIdentityReport egf_identity_check(std::size_t order = 10) {
    if (order < 1) throw std::domain_error("egf_identity_check: order must be >= 1");
    const RationalSeries g = RationalSeries::generate(order, [](std::size_t i) {
        if (i == 0) return BigRational(0);
        return BigRational(boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(i - 1)),
                           factorial(static_cast<unsigned>(i)));
    });
    const RationalSeries gp = g.differentiated();
    const RationalSeries integrand = (gp * gp).shifted_up().scaled(BigRational(1, 2));
    const RationalSeries rhs = integrand.integrated().truncated(order).exponential();

    VolumeTable volumes;
    const RationalSeries lhs = RationalSeries::generate(order, [&](std::size_t i) {
        return volumes.value(i) / BigRational(factorial(static_cast<unsigned>(i)));
    });
    RationalSeries residual = lhs - rhs;
    const bool equal = residual.is_zero();
    return EgfIdentityReport{equal, std::move(residual)};
}

/// |mP_n ∩ Z^n| by box scan; m = 0 yields the single origin point.
inline BigInt ehrhart_count(int n, int m, const ScanOptions& opts = {}) {
    if (n < 1) throw std::domain_error("ehrhart_count: n must be >= 1");
    if (m < 0) throw std::domain_error("ehrhart_count: m must be >= 0");
    return BigInt(count_dilated_lattice_points(n, m, opts, "ehrhart_count"));
}

/// Leading coefficient of the degree-n polynomial interpolating the counts
/// (m, |mP_n ∩ Z^n|) for m = 0..n, via exact forward differences. For an
/// n-dimensional lattice polytope this is its volume.
inline BigRational volume_oracle(int n, const ScanOptions& opts = {}) {
    if (n < 1 || n > 5)
        throw ResourceBoundError("volume_oracle", "practical bound 1 <= n <= 5");
    std::vector<BigRational> diffs;
    for (int m = 0; m <= n; ++m) diffs.emplace_back(ehrhart_count(n, m, opts));
    for (int round = 0; round < n; ++round)
        for (std::size_t i = 0; i + 1 + round < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    return diffs[0] / BigRational(factorial(static_cast<unsigned>(n)));
}

} // namespace parkhull
