#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobtor/groebner.hpp"

namespace frobtor {

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// R = S/I for a homogeneous ideal I contained in the irrelevant ideal m = (x_1..x_n); the graded
/// stand-in for a local ring (R, m, k) with k = F_p.
class QuotientRing {
public:
    /// Rejects inhomogeneous generators (GradingError) and the unit ideal (DegenerateRing).
    /// Zero generators are dropped.
    static QuotientRingPtr make(RingPtr descriptor, std::vector<Polynomial> ideal_gens,
                                bool equidimensional = false);
    /// Rebuilds a ring from a previously computed basis (cache restore); the basis is trusted.
    static QuotientRingPtr from_basis(RingPtr descriptor, std::vector<Polynomial> ideal_gens, GroebnerBasis gb,
                                      bool equidimensional = false);

    const RingPtr& descriptor() const noexcept { return descriptor_; }
    const std::vector<Polynomial>& ideal_gens() const noexcept { return ideal_gens_; }
    const GroebnerBasis& gb() const noexcept { return gb_; }
    /// Krull dimension d of R.
    int dim() const noexcept { return dim_; }
    std::size_t embdim() const noexcept { return descriptor_->nvars(); }
    /// User assertion that R is equidimensional (R = R^eq); never computed.
    bool equidimensional() const noexcept { return equidimensional_; }

    Polynomial reduce(const Polynomial& f) const;
    VectorElement reduce(const VectorElement& v) const;
    bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

    /// g * e_j for every basis element g of I and every position j < rank.
    std::vector<VectorElement> relations(std::size_t rank) const;

    /// Canonical text of the presentation (descriptor plus generators) for hashing and reports.
    std::string canonical() const;

private:
    QuotientRing() = default;

    RingPtr descriptor_;
    std::vector<Polynomial> ideal_gens_;
    GroebnerBasis gb_;
    int dim_ = 0;
    bool equidimensional_ = false;
};

/// The text QuotientRing::canonical() would produce for this presentation (zero generators skipped).
std::string presentation_text(const RingDescriptor& descriptor, std::span<const Polynomial> ideal_gens,
                              bool equidimensional);

/// The bracket power I^[q]: q-th powers of the generators, q = p^e.
std::vector<Polynomial> bracket_power(std::span<const Polynomial> ideal_gens, unsigned e);

}  // namespace frobtor
