#include "frobtor/quotient_ring.hpp"

#include "frobtor/errors.hpp"

namespace frobtor {

QuotientRingPtr QuotientRing::make(RingPtr descriptor, std::vector<Polynomial> ideal_gens, bool equidimensional) {
    std::vector<Polynomial> gens;
    for (auto& g : ideal_gens) {
        if (!same_ring(descriptor, g.ring())) throw DescriptorMismatch();
        if (g.is_zero()) continue;
        if (!g.weighted_degree()) throw GradingError("ideal generator '" + g.to_string() + "' is not homogeneous");
        if (*g.weighted_degree() == 0) throw DegenerateRing();
        gens.push_back(std::move(g));
    }
    auto gb = ideal_basis(descriptor, gens);
    return from_basis(std::move(descriptor), std::move(gens), std::move(gb), equidimensional);
}

QuotientRingPtr QuotientRing::from_basis(RingPtr descriptor, std::vector<Polynomial> ideal_gens, GroebnerBasis gb,
                                         bool equidimensional) {
    if (gb.is_unit()) throw DegenerateRing();
    auto ring = std::shared_ptr<QuotientRing>(new QuotientRing());
    ring->descriptor_ = std::move(descriptor);
    ring->ideal_gens_ = std::move(ideal_gens);
    ring->gb_ = std::move(gb);
    ring->dim_ = krull_dimension(ring->gb_).dim;
    ring->equidimensional_ = equidimensional;
    return ring;
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
    if (gb_.generators.empty()) return f;
    return normal_form(f, gb_);
}

VectorElement QuotientRing::reduce(const VectorElement& v) const {
    if (gb_.generators.empty() || v.is_zero()) return v;
    auto parts = v.components();
    for (auto& p : parts) p = reduce(p);
    return VectorElement::from_components(descriptor_, parts);
}

std::vector<VectorElement> QuotientRing::relations(std::size_t rank) const {
    std::vector<VectorElement> out;
    for (std::size_t j = 0; j < rank; ++j)
        for (const auto& g : gb_.generators) out.push_back(VectorElement::single(rank, j, g.component(0)));
    return out;
}

std::string QuotientRing::canonical() const { return presentation_text(*descriptor_, ideal_gens_, equidimensional_); }

std::string presentation_text(const RingDescriptor& descriptor, std::span<const Polynomial> ideal_gens,
                              bool equidimensional) {
    std::string out = descriptor.canonical() + ";ideal=";
    bool first = true;
    for (const auto& g : ideal_gens) {
        if (g.is_zero()) continue;
        out += (first ? "" : ",") + g.to_string();
        first = false;
    }
    if (equidimensional) out += ";equidimensional";
    return out;
}

std::vector<Polynomial> bracket_power(std::span<const Polynomial> ideal_gens, unsigned e) {
    std::vector<Polynomial> out;
    out.reserve(ideal_gens.size());
    for (const auto& f : ideal_gens) out.push_back(frobenius_power(f, e));
    return out;
}

}  // namespace frobtor
