#pragma once

#include "parkhull/numeric.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace parkhull {

/// Truncated formal power series over exact rationals.
///
/// A series of order N stores the coefficients of x^0 .. x^N and nothing
/// else; arithmetic never reads or invents coefficients beyond the stored
/// order. Binary operations require both operands to share the same order.
/// Values are immutable once constructed.
class RationalSeries {
public:
    /// Zero series of the given truncation order.
    explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Series whose coefficient of x^i is gen(i), for i = 0..order.
    template <class Gen>
    static RationalSeries generate(std::size_t order, Gen&& gen) {
        RationalSeries s(order);
        for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = gen(i);
        return s;
    }

    static RationalSeries from_coefficients(std::vector<BigRational> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs a constant term");
        RationalSeries s(coeffs.size() - 1);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const BigRational& operator[](std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    RationalSeries operator+(const RationalSeries& other) const {
        check_same_order(other);
        RationalSeries r(order());
        for (std::size_t i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
        return r;
    }

    RationalSeries operator-(const RationalSeries& other) const {
        check_same_order(other);
        RationalSeries r(order());
        for (std::size_t i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
        return r;
    }

    /// Product modulo x^(order+1).
    RationalSeries operator*(const RationalSeries& other) const {
        check_same_order(other);
        RationalSeries r(order());
        for (std::size_t i = 0; i <= order(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= order(); ++j)
                r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
        }
        return r;
    }

    RationalSeries scaled(const BigRational& c) const {
        RationalSeries r(order());
        for (std::size_t i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] * c;
        return r;
    }

    /// Termwise derivative. The result is one order shorter because the top
    /// coefficient of the input carries no information about it.
    RationalSeries differentiated() const {
        if (order() == 0) throw std::invalid_argument("cannot differentiate an order-0 series");
        RationalSeries r(order() - 1);
        for (std::size_t i = 0; i + 1 <= order(); ++i)
            r.coeffs_[i] = coeffs_[i + 1] * BigRational(i + 1);
        return r;
    }

    /// Antiderivative with constant term 0; one order longer, exactly.
    RationalSeries integrated() const {
        RationalSeries r(order() + 1);
        for (std::size_t i = 0; i <= order(); ++i)
            r.coeffs_[i + 1] = coeffs_[i] / BigRational(i + 1);
        return r;
    }

    /// Multiplication by x; one order longer, exactly.
    RationalSeries shifted_up() const {
        RationalSeries r(order() + 1);
        for (std::size_t i = 0; i <= order(); ++i) r.coeffs_[i + 1] = coeffs_[i];
        return r;
    }

    /// exp of a series with zero constant term, via the standard recurrence
    /// e_m = (1/m) sum_{i=1..m} i h_i e_{m-i}.
    RationalSeries exponential() const {
        if (coeffs_[0] != 0)
            throw std::invalid_argument("series exp requires a zero constant term");
        RationalSeries r(order());
        r.coeffs_[0] = 1;
        for (std::size_t m = 1; m <= order(); ++m) {
            BigRational acc{0};
            for (std::size_t i = 1; i <= m; ++i)
                acc += BigRational(i) * coeffs_[i] * r.coeffs_[m - i];
            r.coeffs_[m] = acc / BigRational(m);
        }
        return r;
    }

    /// log of a series with constant term 1; inverse of exponential().
    RationalSeries logarithm() const {
        if (coeffs_[0] != 1)
            throw std::invalid_argument("series log requires constant term 1");
        RationalSeries r(order());
        for (std::size_t m = 1; m <= order(); ++m) {
            BigRational acc{0};
            for (std::size_t i = 1; i < m; ++i)
                acc += BigRational(i) * r.coeffs_[i] * coeffs_[m - i];
            r.coeffs_[m] = coeffs_[m] - acc / BigRational(m);
        }
        return r;
    }

    /// Drops coefficients above new_order (which must not exceed order()).
    RationalSeries truncated(std::size_t new_order) const {
        if (new_order > order())
            throw std::invalid_argument("cannot extend a series by truncation");
        RationalSeries r(new_order);
        for (std::size_t i = 0; i <= new_order; ++i) r.coeffs_[i] = coeffs_[i];
        return r;
    }

private:
    void check_same_order(const RationalSeries& other) const {
        if (order() != other.order())
            throw std::invalid_argument("series operands must share a truncation order");
    }

    std::vector<BigRational> coeffs_;
};

} // namespace parkhull
