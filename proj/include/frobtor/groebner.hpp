#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobtor/polynomial.hpp"

namespace frobtor {

struct ModuleTerm {
    std::uint32_t coeff;
    std::uint32_t pos;
    Monomial mono;
};

/// Element of a free module S^rank. Terms are sorted descending in the position-over-term order:
/// a smaller position index is larger, ties broken by the ring's monomial order.
class VectorElement {
public:
    VectorElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

    static VectorElement from_components(RingPtr ring, std::span<const Polynomial> components);
    static VectorElement unit(RingPtr ring, std::size_t rank, std::size_t pos);
    /// `f` placed at position `pos`.
    static VectorElement single(std::size_t rank, std::size_t pos, const Polynomial& f);
    static VectorElement from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<ModuleTerm>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const ModuleTerm& lead() const { return terms_.front(); }

    Polynomial component(std::size_t pos) const;
    std::vector<Polynomial> components() const;

    /// this += c * m * g
    void add_scaled(const VectorElement& g, const Monomial& m, std::uint32_t c);
    VectorElement& operator+=(const VectorElement& g);
    VectorElement& operator-=(const VectorElement& g);
    friend VectorElement operator+(VectorElement a, const VectorElement& b) { return a += b; }
    friend VectorElement operator-(VectorElement a, const VectorElement& b) { return a -= b; }

    VectorElement scaled(std::uint32_t c) const;
    VectorElement times(const Monomial& m, std::uint32_t c = 1) const;
    VectorElement times(const Polynomial& f) const;
    VectorElement monic() const;

    /// The first `count` coordinates as a vector of rank `count`.
    VectorElement truncated(std::size_t count) const;

    /// Weighted degree of a homogeneous element for the given basis shifts; nullopt if
    /// inhomogeneous or zero.
    std::optional<std::int64_t> degree(std::span<const std::int64_t> shifts) const;

    bool operator==(const VectorElement& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rank_;
    std::vector<ModuleTerm> terms_;
};

/// Reduced Groebner basis of a submodule of S^rank (rank 1 for ideals).
struct GroebnerBasis {
    RingPtr ring;
    std::size_t rank = 1;
    std::vector<std::int64_t> shifts;      ///< grading shifts of the ambient basis
    std::vector<VectorElement> generators; ///< monic, sorted ascending by leading term
    bool reduced = true;

    bool is_unit() const;
    std::vector<std::pair<std::uint32_t, Monomial>> leading_module() const;
    /// Leading monomials at one position.
    std::vector<Monomial> leading_monomials(std::size_t pos) const;
};

/// Reduced Groebner basis of the submodule generated by `gens`. The pair queue follows the normal
/// strategy (lowest lcm degree first, ties by creation order) with Gebauer-Moeller pruning, so the
/// output is a deterministic function of the input list.
GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, std::span<const VectorElement> gens,
                         std::span<const std::int64_t> shifts = {});

/// Convenience: basis of an ideal of S.
GroebnerBasis ideal_basis(const RingPtr& ring, std::span<const Polynomial> gens);

struct NormalForm {
    VectorElement remainder;
    std::vector<Polynomial> quotients;  ///< one per basis generator, empty unless requested
};

/// Full reduction: the remainder has no term divisible by a leading term of the basis and
/// v = sum(quotients[i] * G[i]) + remainder.
NormalForm normal_form(const VectorElement& v, const GroebnerBasis& G, bool with_quotients = false);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Schreyer syzygies of the basis generators: one per S-pair whose lcm quotient is a minimal
/// generator, corrected by the division quotients. Vectors live in S^{|G|}.
std::vector<VectorElement> module_syzygies(const GroebnerBasis& G);

/// Generators of the syzygy module of an arbitrary generating list (vectors in S^{|gens|}).
std::vector<VectorElement> syzygies(const RingPtr& ring, std::size_t rank, std::span<const VectorElement> gens,
                                    std::span<const std::int64_t> shifts = {});

/// Checks Buchberger's criterion post hoc: every S-pair reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

struct KrullDimension {
    int dim;         ///< -1 for the unit ideal
    bool unit_ideal;
};

/// Dimension of S/I from the initial ideal: the largest variable subset no leading monomial lives in.
KrullDimension krull_dimension(const GroebnerBasis& G);

struct LengthCount {
    bool finite;
    std::uint64_t count;  ///< meaningful only when finite

    bool operator==(const LengthCount&) const = default;
};

/// Number of standard (position, monomial) pairs, i.e. the F_p-dimension of S^rank / submodule.
LengthCount standard_monomial_count(const GroebnerBasis& G);

/// Number of monomials outside a monomial ideal; infinite unless every variable has a pure power.
LengthCount count_standard_monomials(std::span<const Monomial> leading, std::size_t nvars);

}  // namespace frobtor
