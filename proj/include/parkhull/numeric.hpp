#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace parkhull {

/// Exact arbitrary-precision integer. Canonical zero, never rounds.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always reduced to lowest terms with positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r{1};
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, k) built from Pascal rows; 0 whenever k < 0 or k > n.
inline BigInt binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return BigInt{0};
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        row[i] = 1;
        for (unsigned j = i - 1; j >= 1; --j) row[j] += row[j - 1];
    }
    return row[static_cast<std::size_t>(k)];
}

/// Stirling number of the second kind S(n, k) via the triangle recurrence
/// S(n, k) = k S(n-1, k) + S(n-1, k-1), memoized per thread.
inline BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) return BigInt{0};
    thread_local std::vector<std::vector<BigInt>> triangle{{BigInt{1}}};
    while (triangle.size() <= n) {
        const std::size_t m = triangle.size();
        const auto& prev = triangle[m - 1];
        std::vector<BigInt> row(m + 1);
        for (std::size_t j = 1; j <= m; ++j) {
            row[j] = prev[j - 1];
            if (j < m) row[j] += BigInt(j) * prev[j];
        }
        triangle.push_back(std::move(row));
    }
    return triangle[n][k];
}

/// Raising factorial y (y+1) ... (y+a-1); equals 1 when a = 0.
inline BigInt raising_factorial(const BigInt& y, unsigned a) {
    BigInt r{1};
    for (unsigned i = 0; i < a; ++i) r *= y + i;
    return r;
}

/// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
inline std::string rational_string(const BigRational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace parkhull
