#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobtor/complex.hpp"

namespace frobtor {

struct ResolutionRequest {
    QuotientRingPtr ring;
    /// Generators of J for the cyclic module R/J; empty means the residue field k = R/m.
    std::optional<std::vector<Polynomial>> cyclic;
    std::size_t length = 1;
    std::size_t betti_guard = 512;

    static ResolutionRequest residue_field(QuotientRingPtr ring, std::size_t length);
    static ResolutionRequest cyclic_module(QuotientRingPtr ring, std::vector<Polynomial> J, std::size_t length);
};

/// Truncated minimal graded free resolution G_0 <- ... <- G_L of k or R/J. Deterministic for a
/// fixed request. Throws CapacityError when a Betti number exceeds the guard.
FreeComplex minimal_free_resolution(const ResolutionRequest& req);

/// Cancels unit pivots until no entry is a nonzero constant; homology is unchanged.
FreeComplex minimize_complex(const FreeComplex& C);

struct ResolutionCertificate {
    bool is_complex = true;
    bool is_minimal = true;
    bool exact = true;                 ///< zero homology at spots 1..L-1
    std::vector<std::size_t> inexact_spots;
    std::vector<std::string> failures;

    bool ok() const { return is_complex && is_minimal && exact; }
};

ResolutionCertificate resolution_certificate(const FreeComplex& C);

}  // namespace frobtor
