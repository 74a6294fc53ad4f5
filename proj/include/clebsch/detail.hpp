#pragma once

// Shared helpers: exception types and overflow-checked integer arithmetic.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace clebsch {

// Thrown when two weights or patterns of different rank are combined.
class rank_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical step of the coefficient construction does not
// reproduce an exact property it must have (null-space size, residuals).
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return r;
}

__extension__ using uint128 = unsigned __int128;

// binom(n, k), zero for k < 0 or n < k.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    uint128 r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        // r * (n - i) / (i + 1) is exact at every step
        r = r * static_cast<uint128>(n - i) / static_cast<uint128>(i + 1);
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(r);
}

// Exact rational accumulator for products that are known to be integral.
class RationalProduct {
public:
    void multiply(std::int64_t num, std::int64_t den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g1 = std::gcd(num, den_);
        std::int64_t g2 = std::gcd(num_, den);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        num_ = checked_mul(num_ / g2, num / g1);
        den_ = checked_mul(den_ / g1, den / g2);
    }

    std::int64_t integer() const {
        if (num_ % den_ != 0) {
            throw std::logic_error("rational product is not integral");
        }
        return num_ / den_;
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

private:
    std::int64_t num_ = 1;
    std::int64_t den_ = 1;
};

} // namespace detail
} // namespace clebsch
