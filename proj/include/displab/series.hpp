#pragma once

#include <span>
#include <vector>

#include "displab/polynomial.hpp"

namespace displab {

// Power series c_0 + c_1 X + ... + c_N X^N known exactly through order N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    // order = coeffs.size() - 1; coeffs must be non-empty.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

    TruncatedSeries truncated(std::size_t order) const;
    // Order drops by one; a series of order 0 differentiates to the order-0 zero series.
    TruncatedSeries derivative() const;
    // Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// exp(cX) through order N.
TruncatedSeries exp_series(const Rational& c, std::size_t order);
// I_m(kX): coefficient of X^{m+2s} is k^{m+2s} / (2^{m+2s} s! (m+s)!).
TruncatedSeries bessel_I_series(unsigned m, const Rational& k, std::size_t order);
TruncatedSeries poly_to_series(const Polynomial& p, std::size_t order);
// Exponential generating series sum counters[i] X^i / i!; order = counters.size() - 1.
TruncatedSeries series_from_counters(std::span<const BigInt> counters);

}  // namespace displab
