#include "frobtor/asymptotics.hpp"

#include <algorithm>

#include "frobtor/errors.hpp"
#include "frobtor/field.hpp"
#include "frobtor/hilbert.hpp"
#include "frobtor/homology.hpp"
#include "frobtor/parallel.hpp"
#include "frobtor/resolution.hpp"

namespace frobtor {

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

Rational power_of(std::uint64_t q, int exponent) {
    Rational out = 1;
    for (int k = 0; k < std::abs(exponent); ++k) out *= q;
    return exponent >= 0 ? out : Rational(1) / out;
}

Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

Rational LengthSequence::normalized(const LengthEntry& entry) const {
    return Rational(entry.lambda) / power_of(entry.q, d);
}

LimitEstimate limit_estimate(const LengthSequence& seq) {
    auto usable = [&](unsigned from) {
        std::vector<LengthEntry> out;
        for (const auto& entry : seq.entries)
            if (entry.e >= from) out.push_back(entry);
        return out;
    };
    LimitEstimate est;
    auto points = usable(2);
    if (points.size() < 2) {
        points = usable(1);
        est.low_confidence = true;
    }
    if (points.size() < 2)
        throw InsufficientData("limit estimate needs at least two entries with e >= 1 (got " +
                               std::to_string(points.size()) + ")");

    Rational suu = 0, suv = 0, svv = 0, suy = 0, svy = 0;
    for (const auto& pt : points) {
        const Rational u = power_of(pt.q, seq.d);
        const Rational v = power_of(pt.q, seq.d - 1);
        const Rational y = pt.lambda;
        suu += u * u;
        suv += u * v;
        svv += v * v;
        suy += u * y;
        svy += v * y;
    }
    const Rational det = suu * svv - suv * suv;
    if (det == 0) throw InsufficientData("limit estimate needs two distinct values of q");
    est.c = (suy * svv - svy * suv) / det;
    est.b = (suu * svy - suv * suy) / det;

    Rational worst = 0, scale = 0;
    for (const auto& pt : points) {
        const Rational fit = est.c * power_of(pt.q, seq.d) + est.b * power_of(pt.q, seq.d - 1);
        worst = std::max(worst, abs_of(Rational(pt.lambda) - fit));
        scale = std::max(scale, Rational(pt.lambda));
    }
    est.relative_residual = scale == 0 ? Rational(0) : worst / scale;
    est.method = points.size() == 2 ? "interpolation" : "least-squares";
    est.low_confidence = est.low_confidence || points.size() == 2;
    est.e_first = points.front().e;
    est.e_last = points.back().e;
    if (est.c < 0) {
        est.c = 0;
        est.clamped = true;
    }
    return est;
}

namespace {

void check_emax(unsigned e_min, unsigned e_max) {
    if (e_max < e_min) throw PreconditionError("e_max must be at least " + std::to_string(e_min));
}

// Runs compute(e) for each e and keeps the longest error-free prefix.
template <class Compute>
void fill_sequence(LengthSequence& seq, std::uint32_t p, unsigned e_min, unsigned e_max, unsigned threads,
                   Compute&& compute) {
    const std::size_t n = e_max - e_min + 1;
    std::vector<std::optional<std::uint64_t>> values(n);
    std::vector<std::string> errors(n);
    parallel_for(n, threads, [&](std::size_t k) {
        try {
            values[k] = compute(static_cast<unsigned>(e_min + k));
        } catch (const Error& err) {
            errors[k] = err.what();
        }
    });
    for (std::size_t k = 0; k < n; ++k) {
        const unsigned e = e_min + static_cast<unsigned>(k);
        if (!values[k]) {
            seq.error = "e=" + std::to_string(e) + ": " + errors[k];
            break;
        }
        seq.entries.push_back({e, frobenius_q(p, e), *values[k]});
    }
}

std::uint64_t finite_length(const FiniteLength& h, const std::string& what) {
    if (!h.finite) throw InternalError(what + " has infinite length");
    return h.length;
}

}  // namespace

LengthSequence tor_length_sequence(const FreeComplex& G, std::size_t i, unsigned e_max, unsigned e_min,
                                   unsigned threads) {
    if (G.length() < i + 1) throw PreconditionError("resolution length must be at least i + 1");
    check_emax(e_min, e_max);
    LengthSequence seq;
    seq.ring = G.ring()->canonical();
    seq.spot = i;
    seq.d = G.ring()->dim();
    fill_sequence(seq, G.ring()->descriptor()->characteristic(), e_min, e_max, threads, [&](unsigned e) {
        return finite_length(homology_length(frobenius_complex(G, e), i), "Tor_" + std::to_string(i));
    });
    return seq;
}

LengthSequence tor_length_sequence(const QuotientRingPtr& ring, std::size_t i, unsigned e_max, std::size_t L,
                                   unsigned e_min, unsigned threads) {
    if (L < i + 1) throw PreconditionError("resolution length must be at least i + 1");
    auto G = minimal_free_resolution(ResolutionRequest::residue_field(ring, L));
    return tor_length_sequence(G, i, e_max, e_min, threads);
}

namespace {

// lambda(S / (I + (f^q : f in gens))) computed from the Hilbert series.
FiniteLength bracket_colength(const QuotientRing& R, const std::vector<Polynomial>& gens, unsigned e) {
    auto all = R.ideal_gens();
    auto bracket = bracket_power(gens, e);
    all.insert(all.end(), bracket.begin(), bracket.end());
    return length_from_numerator(hilbert_numerator(ideal_basis(R.descriptor(), all)), *R.descriptor());
}

LaurentPoly bracket_numerator(const QuotientRing& R, const std::vector<Polynomial>& gens, unsigned e) {
    auto all = R.ideal_gens();
    auto bracket = bracket_power(gens, e);
    all.insert(all.end(), bracket.begin(), bracket.end());
    return hilbert_numerator(ideal_basis(R.descriptor(), all));
}

}  // namespace

HilbertKunz hilbert_kunz(const QuotientRingPtr& ring, unsigned e_max, unsigned threads) {
    if (e_max < 2) throw PreconditionError("Hilbert-Kunz estimation needs e_max >= 2");
    const auto& S = ring->descriptor();
    std::vector<Polynomial> vars;
    for (std::size_t j = 0; j < S->nvars(); ++j) vars.push_back(Polynomial::variable(S, j));
    HilbertKunz hk;
    hk.sequence.ring = ring->canonical();
    hk.sequence.spot = 0;
    hk.sequence.d = ring->dim();
    fill_sequence(hk.sequence, S->characteristic(), 1, e_max, threads, [&](unsigned e) {
        return finite_length(bracket_colength(*ring, vars, e), "R/m^[q]");
    });
    hk.estimate = limit_estimate(hk.sequence);
    return hk;
}

TightClosureEvidence tight_closure_evidence(const QuotientRingPtr& ring, const std::vector<Polynomial>& N,
                                            const std::vector<Polynomial>& W, unsigned e_max, double tol,
                                            unsigned threads) {
    check_emax(1, e_max);
    const auto& R = *ring;
    const auto& S = R.descriptor();
    auto w_gens = R.ideal_gens();
    w_gens.insert(w_gens.end(), W.begin(), W.end());
    const auto w_basis = ideal_basis(S, w_gens);
    for (const auto& f : N)
        if (!normal_form(f, w_basis).is_zero())
            throw PreconditionError("N is not contained in W: " + f.to_string() + " is not in W");

    auto quotient_length = [&](unsigned e) {
        LaurentPoly num = bracket_numerator(R, N, e);
        num -= bracket_numerator(R, W, e);
        num.trim();
        return length_from_numerator(num, *S);
    };
    if (!quotient_length(0).finite) throw PreconditionError("W/N does not have finite length");

    TightClosureEvidence out;
    out.tol = tol;
    out.sequence.ring = R.canonical();
    out.sequence.d = R.dim();
    fill_sequence(out.sequence, S->characteristic(), 1, e_max, threads,
                  [&](unsigned e) { return finite_length(quotient_length(e), "W^[q]/N^[q]"); });
    const bool all_zero = std::all_of(out.sequence.entries.begin(), out.sequence.entries.end(),
                                      [](const LengthEntry& x) { return x.lambda == 0; });
    try {
        out.estimate = limit_estimate(out.sequence);
    } catch (const InsufficientData&) {
    }
    out.evidence_w_in_tight_closure =
        (!out.sequence.entries.empty() && all_zero) || (out.estimate && to_double(out.estimate->c) <= tol);
    return out;
}

CompareReport compare_req(const QuotientRingPtr& ring, const std::vector<Polynomial>& req, std::size_t i,
                          unsigned e_max, std::size_t L, double tol, unsigned threads) {
    const auto& S = ring->descriptor();
    auto req_ring = QuotientRing::make(S, req);
    for (const auto& f : ring->ideal_gens())
        if (!req_ring->is_zero(f))
            throw PreconditionError("the R^eq ideal does not contain the generator " + f.to_string() + " of I");
    if (L < i + 1) L = i + 1;
    auto G = minimal_free_resolution(ResolutionRequest::residue_field(ring, L));

    CompareReport out;
    out.spot = i;
    out.tol = tol;
    out.req = req_ring->canonical();
    out.over_r = tor_length_sequence(G, i, e_max, 1, threads);
    out.over_req = tor_length_sequence(G.base_change(req_ring), i, e_max, 1, threads);
    out.over_req.d = out.over_r.d;
    const std::size_t n = std::min(out.over_r.entries.size(), out.over_req.entries.size());
    for (std::size_t k = 0; k < n; ++k)
        out.gaps.push_back(out.over_r.normalized(out.over_r.entries[k]) -
                           out.over_req.normalized(out.over_req.entries[k]));
    try {
        out.estimate_r = limit_estimate(out.over_r);
        out.estimate_req = limit_estimate(out.over_req);
    } catch (const InsufficientData&) {
    }
    out.consistent = out.estimate_r && out.estimate_req &&
                     std::abs(to_double(out.estimate_r->c - out.estimate_req->c)) <= tol;
    return out;
}

bool direct_regularity_oracle(const QuotientRing& ring) {
    const auto& S = *ring.descriptor();
    const auto& F = S.field();
    const std::size_t n = S.nvars();
    // Rows: the coefficients of the variables occurring as single terms in each generator.
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& f : ring.ideal_gens()) {
        std::vector<std::uint32_t> row(n, 0);
        for (const auto& t : f.terms()) {
            std::size_t nonzero = 0, which = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (t.mono.exp[j] != 0) ++nonzero, which = j;
            if (nonzero == 1 && t.mono.exp[which] == 1) row[which] = t.coeff;
        }
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                  [col](const auto& r) { return r[col] != 0; });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[rank]);
        const auto inv = F.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const auto factor = rows[r][col];
            for (std::size_t j = 0; j < n; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return static_cast<std::size_t>(ring.dim()) == n - rank;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::RegularCertified: return "RegularCertified";
        case VerdictKind::RegularEvidence: return "RegularEvidence";
        case VerdictKind::NonRegularEvidence: return "NonRegularEvidence";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

Verdict regularity_verdict(const FreeComplex& G, const std::vector<std::size_t>& spots, unsigned e_max, double tol,
                           unsigned threads) {
    if (spots.empty()) throw PreconditionError("a verdict needs at least one spot");
    if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
    for (auto i : spots) {
        if (i == 0) throw PreconditionError("verdict spots must be positive");
        if (G.length() < i + 1) throw PreconditionError("resolution length must exceed every spot");
    }
    check_emax(1, e_max);

    Verdict v;
    v.tol = tol;
    v.e_max = e_max;
    v.length = G.length();
    v.oracle_regular = direct_regularity_oracle(*G.ring());
    for (auto i : spots) {
        SpotEvidence s;
        s.sequence = tor_length_sequence(G, i, e_max, 1, threads);
        s.identically_zero = !s.sequence.error && !s.sequence.entries.empty() &&
                             std::all_of(s.sequence.entries.begin(), s.sequence.entries.end(),
                                         [](const LengthEntry& x) { return x.lambda == 0; });
        try {
            s.estimate = limit_estimate(s.sequence);
        } catch (const InsufficientData& err) {
            s.diagnostic = err.what();
        }
        if (s.sequence.error) s.diagnostic += (s.diagnostic.empty() ? "" : "; ") + *s.sequence.error;
        v.spots.push_back(std::move(s));
    }

    for (std::size_t k = 0; k < spots.size(); ++k) {
        if (!v.spots[k].identically_zero) continue;
        if (v.oracle_regular) {
            v.kind = VerdictKind::RegularCertified;
            v.witness_spot = spots[k];
            v.diagnostics = "Tor vanishes at spot " + std::to_string(spots[k]) + " for e <= " +
                            std::to_string(e_max) + " and the ring is regular";
        } else {
            v.inconsistency = true;
            v.kind = VerdictKind::Inconclusive;
            v.witness_spot = spots[k];
            v.diagnostics = "Tor vanishes at spot " + std::to_string(spots[k]) +
                            " but the direct oracle reports a singular ring";
        }
        return v;
    }

    auto above = [tol](const SpotEvidence& s) { return s.estimate && to_double(s.estimate->c) > tol; };
    if (std::all_of(v.spots.begin(), v.spots.end(), above)) {
        v.kind = VerdictKind::NonRegularEvidence;
        v.witness_spot = spots.front();
        v.diagnostics = "every spot has an estimated limit above the tolerance";
        return v;
    }
    for (std::size_t k = 0; k < spots.size(); ++k) {
        const auto& s = v.spots[k];
        if (v.oracle_regular && s.estimate && to_double(s.estimate->c) <= tol) {
            v.kind = VerdictKind::RegularEvidence;
            v.witness_spot = spots[k];
            v.diagnostics = "estimated limit within tolerance at spot " + std::to_string(spots[k]) +
                            " and the ring is regular, but Tor does not vanish identically";
            return v;
        }
    }
    v.kind = VerdictKind::Inconclusive;
    for (const auto& s : v.spots)
        if (!s.diagnostic.empty()) {
            v.diagnostics = "spot " + std::to_string(s.sequence.spot) + ": " + s.diagnostic;
            return v;
        }
    v.diagnostics = "estimates straddle the tolerance";
    return v;
}

Verdict regularity_verdict(const QuotientRingPtr& ring, const std::vector<std::size_t>& spots, unsigned e_max,
                           std::size_t L, double tol, unsigned threads) {
    if (spots.empty()) throw PreconditionError("a verdict needs at least one spot");
    const std::size_t need = *std::max_element(spots.begin(), spots.end()) + 1;
    auto G = minimal_free_resolution(ResolutionRequest::residue_field(ring, std::max(L, need)));
    return regularity_verdict(G, spots, e_max, tol, threads);
}

}  // namespace frobtor
