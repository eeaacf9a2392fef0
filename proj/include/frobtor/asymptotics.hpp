#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobtor/complex.hpp"

namespace frobtor {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
double to_double(const Rational& r);

struct LengthEntry {
    unsigned e = 0;
    std::uint64_t q = 1;
    std::uint64_t lambda = 0;
};

struct LengthSequence {
    std::string ring;     ///< canonical presentation of the ring
    std::size_t spot = 0;
    int d = 0;            ///< normalization exponent: lengths are divided by q^d
    std::vector<LengthEntry> entries;
    /// Set when the sequence stopped early; entries hold everything computed before the failure.
    std::optional<std::string> error;

    Rational normalized(const LengthEntry& entry) const;
};

struct LimitEstimate {
    Rational c;                   ///< leading coefficient, clamped at 0
    Rational b;                   ///< subleading coefficient
    Rational relative_residual;   ///< max |residual| / max lambda over the fitted entries
    std::string method;           ///< "least-squares" or "interpolation"
    unsigned e_first = 0;
    unsigned e_last = 0;
    bool low_confidence = false;  ///< interpolation, or transient entries had to be used
    bool clamped = false;         ///< the raw fit gave c < 0
};

/// Fits lambda(e) ~ c q^d + b q^{d-1}. Entries with e >= 2 are used when there are at least two of
/// them; otherwise entries with e >= 1 (flagged low confidence). Throws InsufficientData when fewer
/// than two usable entries remain.
LimitEstimate limit_estimate(const LengthSequence& seq);

/// lambda(H_i(F^e(G))) for e = e_min..e_max, for a precomputed resolution G (L >= i + 1).
LengthSequence tor_length_sequence(const FreeComplex& G, std::size_t i, unsigned e_max, unsigned e_min = 1,
                                   unsigned threads = 1);
/// Resolves k to length L, then computes the sequence.
LengthSequence tor_length_sequence(const QuotientRingPtr& ring, std::size_t i, unsigned e_max, std::size_t L,
                                   unsigned e_min = 1, unsigned threads = 1);

struct HilbertKunz {
    LengthSequence sequence;
    LimitEstimate estimate;
};

/// lambda(R/m^[q]) for e = 1..e_max (e_max >= 2) with its limit estimate.
HilbertKunz hilbert_kunz(const QuotientRingPtr& ring, unsigned e_max, unsigned threads = 1);

struct TightClosureEvidence {
    LengthSequence sequence;   ///< lambda(W^[q] / N^[q])
    std::optional<LimitEstimate> estimate;
    bool evidence_w_in_tight_closure = false;  ///< c <= tol (all-zero sequences count)
    double tol = 1e-2;
};

/// Throws PreconditionError unless N is contained in W and W/N has finite length.
TightClosureEvidence tight_closure_evidence(const QuotientRingPtr& ring, const std::vector<Polynomial>& N,
                                            const std::vector<Polynomial>& W, unsigned e_max, double tol = 1e-2,
                                            unsigned threads = 1);

struct CompareReport {
    std::size_t spot = 0;
    std::string req;                 ///< canonical presentation of R^eq
    LengthSequence over_r;
    LengthSequence over_req;
    std::vector<Rational> gaps;      ///< normalized(R) - normalized(R^eq) per entry
    std::optional<LimitEstimate> estimate_r;
    std::optional<LimitEstimate> estimate_req;
    bool consistent = false;         ///< both estimates exist and |c_R - c_eq| <= tol
    double tol = 1e-2;
};

/// Compares lambda(H_i(F^e(G))) over R with lambda(H_i(F^e(G ⊗ R^eq))) where R^eq = S/req and G
/// resolves k over R. Throws PreconditionError if req does not contain I.
CompareReport compare_req(const QuotientRingPtr& ring, const std::vector<Polynomial>& req, std::size_t i,
                          unsigned e_max, std::size_t L, double tol = 1e-2, unsigned threads = 1);

/// R is regular exactly when its embedding dimension dim_k m/(m^2 + I) equals its Krull dimension.
bool direct_regularity_oracle(const QuotientRing& ring);

enum class VerdictKind { RegularCertified, RegularEvidence, NonRegularEvidence, Inconclusive };

std::string to_string(VerdictKind kind);

struct SpotEvidence {
    LengthSequence sequence;
    std::optional<LimitEstimate> estimate;
    std::string diagnostic;  ///< why no estimate is available, if so
    bool identically_zero = false;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    bool oracle_regular = false;
    /// Some spot vanished identically while the oracle says the ring is singular.
    bool inconsistency = false;
    std::optional<std::size_t> witness_spot;
    std::vector<SpotEvidence> spots;
    double tol = 1e-2;
    unsigned e_max = 0;
    std::size_t length = 0;
    std::string diagnostics;
};

Verdict regularity_verdict(const QuotientRingPtr& ring, const std::vector<std::size_t>& spots, unsigned e_max,
                           std::size_t L = 0, double tol = 1e-2, unsigned threads = 1);
/// Same, reusing a resolution of k of length at least max(spots) + 1.
Verdict regularity_verdict(const FreeComplex& G, const std::vector<std::size_t>& spots, unsigned e_max, double tol,
                           unsigned threads = 1);

}  // namespace frobtor
