#include "displab/series.hpp"

#include <algorithm>

#include "displab/combinatorics.hpp"
#include "displab/error.hpp"

namespace displab {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw DomainError("cannot extend a truncated series");
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    std::vector<Rational> out(order());
    for (std::size_t k = 1; k <= order(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<unsigned long>(k));
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] == 0) throw DomainError("series inverse needs a nonzero constant term");
    std::vector<Rational> out(coeffs_.size());
    out[0] = 1 / coeffs_[0];
    for (std::size_t k = 1; k < out.size(); ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out[k - j];
        out[k] = -acc * out[0];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = a.coeffs_[k] + b.coeffs_[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + Rational(-1) * b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const Rational& c, TruncatedSeries a) {
    for (auto& v : a.coeffs_) v *= c;
    return a;
}

TruncatedSeries exp_series(const Rational& c, std::size_t order) {
    std::vector<Rational> out(order + 1);
    Rational term = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        out[k] = term;
        term = term * c / Rational(static_cast<unsigned long>(k + 1));
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries bessel_I_series(unsigned m, const Rational& k, std::size_t order) {
    std::vector<Rational> out(order + 1);
    for (std::size_t s = 0; m + 2 * s <= order; ++s) {
        const std::size_t e = m + 2 * s;
        Rational half_k = k / 2;
        Rational pw = 1;
        for (std::size_t t = 0; t < e; ++t) pw *= half_k;
        out[e] = pw / Rational(factorial(static_cast<long>(s)) * factorial(static_cast<long>(m + s)));
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries poly_to_series(const Polynomial& p, std::size_t order) {
    std::vector<Rational> out(order + 1);
    for (std::size_t k = 0; k <= order; ++k) out[k] = p.coeff(k);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_from_counters(std::span<const BigInt> counters) {
    if (counters.empty()) throw DomainError("series_from_counters needs at least one counter");
    std::vector<Rational> out(counters.size());
    for (std::size_t k = 0; k < counters.size(); ++k) {
        out[k] = Rational(counters[k]) / Rational(factorial(static_cast<long>(k)));
    }
    return TruncatedSeries(std::move(out));
}

}  // namespace displab
