#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobtor/monomial.hpp"

namespace frobtor {

struct Term {
    std::uint32_t coeff;
    Monomial mono;
};

/// Sparse polynomial over F_p. Terms are kept strictly descending in the ring's monomial order,
/// with no zero coefficients; the zero polynomial has no terms.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff = 1);
    /// Sorts, merges duplicate monomials and drops zero coefficients.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    /// Takes terms that are already canonical.
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Term& lead() const { return terms_.front(); }

    /// Nonzero constant.
    bool is_unit() const noexcept { return terms_.size() == 1 && terms_.front().mono.is_one(); }
    /// The coefficient of the monomial 1.
    std::uint32_t constant_term() const noexcept;

    /// Common weighted degree, or nullopt when inhomogeneous. Throws UndefinedDegree on zero.
    std::optional<std::int64_t> weighted_degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Polynomial& g);
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

    Polynomial scaled(std::uint32_t c) const;
    /// c * m * this
    Polynomial times(const Monomial& m, std::uint32_t c = 1) const;
    /// Divide by the leading coefficient.
    Polynomial monic() const;

    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

private:
    Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_;
};

enum class ArithKind { add, sub, mul };

/// Checked ring arithmetic; throws DescriptorMismatch when the operands live in different rings.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithKind kind);

/// p^e, or CapacityError if it does not fit in 32 bits.
std::uint64_t frobenius_q(std::uint32_t p, unsigned e);

/// f^(p^e), computed by scaling every exponent by q (coefficients lie in the prime field).
Polynomial frobenius_power(const Polynomial& f, unsigned e);

/// f^n by square-and-multiply.
Polynomial power(const Polynomial& f, std::uint64_t n);

/// Parses the polynomial grammar: identifiers, integer literals, + - * ^ and parentheses.
/// Coefficients are reduced mod p. Throws ParseError with a 1-based column.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Splits a comma separated list and parses each entry; empty input gives an empty list.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

}  // namespace frobtor
