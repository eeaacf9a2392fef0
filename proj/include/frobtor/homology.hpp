#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtor/complex.hpp"
#include "frobtor/hilbert.hpp"

namespace frobtor {

/// F^e(C): every entry raised to the q-th power (q = p^e) and reduced mod I; shifts scaled by q.
FreeComplex frobenius_complex(const FreeComplex& C, unsigned e);

struct HomologyPresentation {
    std::size_t spot = 0;
    std::vector<VectorElement> cycle_gens;       ///< minimal generators of ker ∂_i, in R^{r_i}
    std::vector<std::int64_t> cycle_degrees;
    std::vector<VectorElement> boundary_lifts;   ///< columns of ∂_{i+1} written in the cycle generators
    std::vector<VectorElement> relations;        ///< boundary lifts followed by cycle syzygies, in R^{m}
    LengthCount length{false, 0};
};

/// Presentation H_i = R^m / relations, where m is the number of cycle generators.
HomologyPresentation homology_presentation(const FreeComplex& C, std::size_t i);

/// Exact F_p-dimension of H_i(C). For graded complexes this also carries the degree range of the
/// homology, which bounds the support for independent degreewise checks.
FiniteLength homology_length(const FreeComplex& C, std::size_t i);

/// Whether c * H_i(C) = 0. Throws InvalidMultiplier if c lies in I.
bool annihilates_homology(const Polynomial& c, const FreeComplex& C, std::size_t i);

struct PhantomReport {
    std::size_t spot = 0;
    std::string multiplier;
    std::vector<bool> annihilates;  ///< index e = 0..e_max
    bool stably_phantom_up_to_emax = false;
    std::string note;
};

/// Checks c * H_i(F^e(C)) = 0 for e = 0..e_max. One-directional evidence only.
PhantomReport empirical_stably_phantom(const FreeComplex& C, std::size_t i, const Polynomial& c, unsigned e_max,
                                       unsigned threads = 1);

}  // namespace frobtor
