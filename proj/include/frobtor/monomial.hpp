#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobtor/field.hpp"

namespace frobtor {

/// Hard limit on the number of ring variables; monomials are stored inline.
inline constexpr std::size_t kMaxVars = 8;

enum class MonomialOrder { grevlex, lex };

std::string_view to_string(MonomialOrder order) noexcept;

/// Exponent vector with its cached weighted degree. Unused slots are zero.
struct Monomial {
    std::array<std::int32_t, kMaxVars> exp{};
    std::int64_t degree = 0;

    bool operator==(const Monomial& other) const noexcept { return exp == other.exp; }

    bool is_one() const noexcept { return degree == 0 && exp == std::array<std::int32_t, kMaxVars>{}; }

    /// Bit signature used to reject divisibility tests quickly.
    std::uint32_t divmask() const noexcept;
};

bool divides(const Monomial& a, const Monomial& b) noexcept;
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a) noexcept;
Monomial product(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b) noexcept;

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

/// The ambient polynomial ring F_p[x_1..x_n] with a positive weighted grading and a monomial order.
class RingDescriptor {
public:
    /// Validates and builds a descriptor; empty `weights` means all ones.
    static RingPtr make(std::uint32_t p, std::vector<std::string> names, std::vector<std::int32_t> weights = {},
                        MonomialOrder order = MonomialOrder::grevlex);

    std::uint32_t characteristic() const noexcept { return p_; }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::int32_t>& weights() const noexcept { return weights_; }
    MonomialOrder order() const noexcept { return order_; }

    /// Index of a variable name, or -1.
    int index_of(std::string_view name) const noexcept;

    Monomial one() const noexcept { return Monomial{}; }
    Monomial variable(std::size_t index, std::int32_t power = 1) const;
    Monomial monomial(std::span<const std::int32_t> exponents) const;
    std::int64_t weighted_degree(const Monomial& m) const noexcept;
    Monomial lcm(const Monomial& a, const Monomial& b) const noexcept;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
        if (order_ == MonomialOrder::grevlex) {
            if (a.degree != b.degree) return a.degree <=> b.degree;
            for (std::size_t j = names_.size(); j-- > 0;)
                if (a.exp[j] != b.exp[j]) return b.exp[j] <=> a.exp[j];
            return std::strong_ordering::equal;
        }
        for (std::size_t j = 0; j < names_.size(); ++j)
            if (a.exp[j] != b.exp[j]) return a.exp[j] <=> b.exp[j];
        return std::strong_ordering::equal;
    }

    std::string to_string(const Monomial& m) const;
    /// Canonical presentation used in cache keys and reports.
    std::string canonical() const;

    bool operator==(const RingDescriptor& other) const noexcept {
        return p_ == other.p_ && names_ == other.names_ && weights_ == other.weights_ && order_ == other.order_;
    }

private:
    RingDescriptor(std::uint32_t p, std::vector<std::string> names, std::vector<std::int32_t> weights,
                   MonomialOrder order);

    std::uint32_t p_;
    PrimeField field_;
    std::vector<std::string> names_;
    std::vector<std::int32_t> weights_;
    MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || (a && b && *a == *b); }

inline std::strong_ordering order_compare(const RingDescriptor& ring, const Monomial& a, const Monomial& b) noexcept {
    return ring.compare(a, b);
}

}  // namespace frobtor
