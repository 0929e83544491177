#include "displab/laguerre.hpp"

#include <map>
#include <mutex>

#include "displab/error.hpp"

namespace displab {

Polynomial laguerre(long n) {
    if (n < 0) throw DomainError("laguerre: negative index");
    static std::mutex mu;
    static std::vector<Polynomial> cache{Polynomial::constant(1)};
    std::lock_guard lock(mu);
    while (static_cast<long>(cache.size()) <= n) {
        const Polynomial& prev = cache.back();
        cache.push_back((prev.derivative() - prev).antiderivative(1));
    }
    return cache[static_cast<std::size_t>(n)];
}

Polynomial generalized_laguerre(long n, long alpha) {
    if (n < 0) throw DomainError("generalized_laguerre: negative index");
    Polynomial prev = Polynomial::constant(1);
    if (n == 0) return prev;
    Polynomial cur({Rational(1 + alpha), Rational(-1)});
    for (long k = 1; k < n; ++k) {
        Polynomial factor({Rational(2 * k + 1 + alpha), Rational(-1)});
        Polynomial next = (factor * cur - Rational(k + alpha) * prev) * make_rational(1, k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace displab
