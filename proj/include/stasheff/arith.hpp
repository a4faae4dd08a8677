#pragma once

#include <cstdint>
#include <vector>

namespace stasheff {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<int> primes_up_to(int limit) {
    std::vector<int> out;
    for (int p = 2; p <= limit; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

/// Representative of a mod p in [0, p).
inline int mod_p(std::int64_t a, int p) {
    const auto r = static_cast<int>(a % p);
    return r < 0 ? r + p : r;
}

inline int pow_mod(std::int64_t base, std::int64_t exp, int p) {
    std::int64_t result = 1 % p;
    base = mod_p(base, p);
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<int>(result);
}

/// Inverse of a nonzero residue modulo a prime.
inline int inverse_mod(std::int64_t a, int p) { return pow_mod(a, p - 2, p); }

}  // namespace stasheff
