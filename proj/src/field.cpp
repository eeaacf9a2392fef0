#include "frobtor/field.hpp"

namespace frobtor {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t n) const noexcept {
    value_type result = 1 % p_;
    while (n) {
        if (n & 1) result = mul(result, a);
        a = mul(a, a);
        n >>= 1;
    }
    return result;
}

}  // namespace frobtor
