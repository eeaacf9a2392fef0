#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobtor/groebner.hpp"

namespace frobtor {

/// Laurent polynomial with integer coefficients: sum coeffs[k] * t^(offset + k).
struct LaurentPoly {
    std::int64_t offset = 0;
    std::vector<std::int64_t> coeffs;

    bool is_zero() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly shifted(std::int64_t by) const;
    void trim();
};

/// Numerator K(t) of the Hilbert series of S/J, HS = K(t) / prod_j (1 - t^{w_j}), for a monomial
/// ideal J given by generators (pivot recursion on variable powers).
LaurentPoly hilbert_numerator(std::span<const Monomial> gens, const RingDescriptor& ring);

/// Numerator of the Hilbert series of S^rank / M for the submodule with Groebner basis G, using
/// the basis shifts of G.
LaurentPoly hilbert_numerator(const GroebnerBasis& G);

/// Numerator of a graded free module of the quotient ring S/I: sum_j t^{shift_j} * K(S/I).
LaurentPoly free_module_numerator(const LaurentPoly& ring_numerator, std::span<const std::int64_t> shifts);

struct FiniteLength {
    bool finite = false;
    std::uint64_t length = 0;
    /// Lowest and highest degree carrying a nonzero graded piece (finite, nonzero case).
    std::optional<std::int64_t> low_degree;
    std::optional<std::int64_t> top_degree;
    /// Dimension of each graded piece from low_degree up (finite case).
    std::vector<std::int64_t> hilbert_function;
};

/// Divides a numerator by prod_j (1 - t^{w_j}); the module has finite length exactly when the
/// division is exact, and the length is then the sum of the quotient's coefficients.
FiniteLength length_from_numerator(const LaurentPoly& numerator, const RingDescriptor& ring);

}  // namespace frobtor
