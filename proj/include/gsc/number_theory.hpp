#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gsc {

/// N = s * m^2 with s square-free.
struct SquareFactorization {
    std::int64_t square_free_part;
    std::int64_t square_root_part;
};

inline SquareFactorization square_factorization(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("square_factorization: n must be positive");
    std::int64_t s = 1, m = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) m *= p;
        if (e % 2) s *= p;
    }
    s *= n;
    return {s, m};
}

inline bool is_square_free(std::int64_t n) { return n > 0 && square_factorization(n).square_root_part == 1; }

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace gsc
