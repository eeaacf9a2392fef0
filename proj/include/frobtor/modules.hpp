#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobtor/complex.hpp"

namespace frobtor {

/// Groebner basis in S^rank of the submodule generated by `gens` together with I * S^rank, i.e.
/// the preimage of a submodule of R^rank. Entries of `gens` need not be reduced.
GroebnerBasis submodule_basis(const QuotientRing& R, std::size_t rank, std::span<const std::int64_t> shifts,
                              std::span<const VectorElement> gens);

/// Generators of the kernel of D : R^cols -> R^rows, reduced mod I and nonzero. `row_shifts`
/// grade the target; homogeneous input yields homogeneous generators.
std::vector<VectorElement> kernel_over_ring(const QuotientRing& R, const Matrix& D,
                                            std::span<const std::int64_t> row_shifts);

struct MinimalGenerators {
    std::vector<VectorElement> gens;  ///< reduced mod I, sorted by degree
    std::vector<std::int64_t> degrees;
};

/// A minimal homogeneous generating set (mod I) of the submodule of R^rank spanned by `candidates`.
/// Throws GradingError when a candidate is not homogeneous for `shifts`.
MinimalGenerators minimal_generators(const QuotientRing& R, std::size_t rank, std::span<const std::int64_t> shifts,
                                     std::span<const VectorElement> candidates);

}  // namespace frobtor
