#pragma once

#include <cstdint>

namespace frobtor {

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in the prime field F_p, p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) noexcept : p_(p) {}

    std::uint32_t characteristic() const noexcept { return p_; }

    value_type reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type add(value_type a, value_type b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }
    value_type pow(value_type a, std::uint64_t n) const noexcept;
    /// Inverse of a nonzero element.
    value_type inv(value_type a) const noexcept { return pow(a, p_ - 2); }

private:
    std::uint32_t p_;
};

}  // namespace frobtor
