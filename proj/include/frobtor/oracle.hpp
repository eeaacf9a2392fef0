#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobtor/complex.hpp"

namespace frobtor {

struct DegreewiseHomology {
    std::map<std::int64_t, std::uint64_t> by_degree;  ///< only degrees with nonzero homology
    std::uint64_t total = 0;
    std::int64_t degree_bound = 0;
};

/// dim_k H_i(C)_t for every degree t <= D by dense linear algebra over the standard monomials of
/// R. Throws CapacityError when a single graded piece exceeds `max_dimension`.
DegreewiseHomology dense_degreewise_homology(const FreeComplex& C, std::size_t i, std::int64_t D,
                                             std::size_t max_dimension = 6000);

/// A support bound used when no certificate is available: topdeg(R/m^[q]) + max shift of C_i,
/// where C is the twisted complex F^e(G).
std::int64_t standalone_degree_bound(const FreeComplex& C, std::size_t i, unsigned e);

struct StaircaseCount {
    bool finite = false;
    std::uint64_t count = 0;
};

/// Monomials outside the monomial ideal (inside `box` when given: exponent j < box[j]).
StaircaseCount staircase_length(std::span<const Monomial> gens, std::size_t nvars,
                                std::optional<std::vector<std::int32_t>> box = std::nullopt);

struct CrosscheckReport {
    std::string label;
    std::size_t spot = 0;
    bool finite = false;
    std::uint64_t gb_length = 0;
    std::uint64_t oracle_length = 0;
    std::int64_t degree_bound = 0;
    bool match = false;
    /// Degrees where the two paths disagree: (degree, gb dimension, oracle dimension).
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> diff;
};

/// Runs homology_length and the dense oracle (bounded by the length certificate plus a trailing
/// window of width `window`) and compares them degree by degree.
CrosscheckReport oracle_crosscheck(const FreeComplex& C, std::size_t i, std::string label = {},
                                   std::int64_t window = -1);

}  // namespace frobtor
