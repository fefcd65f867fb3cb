#pragma once

#include <cstdint>

#include "adr/errors.hpp"

namespace adr {

// Arithmetic in the prime field F_p. Elements are canonical representatives
// 0 <= x < p stored as uint32_t. p is restricted to 16 bits so products fit
// comfortably in 64-bit accumulators.
struct PrimeField {
    uint32_t p = 101;

    PrimeField() = default;

    explicit PrimeField(uint32_t prime) : p(prime) {
        if (prime < 2 || prime > 65521 || !is_prime(prime))
            throw ParseError("not a prime in [2, 65521]: " + std::to_string(prime));
    }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DimensionMismatch("division by zero in F_p");
        return pow(a, p - 2);
    }

    // Reduce an arbitrary signed integer into [0, p).
    uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
};

}  // namespace adr
