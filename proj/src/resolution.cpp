#include "frobtor/resolution.hpp"

#include "frobtor/errors.hpp"
#include "frobtor/homology.hpp"
#include "frobtor/modules.hpp"

namespace frobtor {

ResolutionRequest ResolutionRequest::residue_field(QuotientRingPtr ring, std::size_t length) {
    return ResolutionRequest{std::move(ring), std::nullopt, length};
}

ResolutionRequest ResolutionRequest::cyclic_module(QuotientRingPtr ring, std::vector<Polynomial> J,
                                                   std::size_t length) {
    return ResolutionRequest{std::move(ring), std::move(J), length};
}

FreeComplex minimal_free_resolution(const ResolutionRequest& req) {
    if (!req.ring) throw PreconditionError("resolution request has no ring");
    if (req.length < 1) throw PreconditionError("resolution length must be at least 1");
    const auto& R = *req.ring;
    const auto& S = R.descriptor();

    std::vector<VectorElement> first;
    if (req.cyclic) {
        for (const auto& f : *req.cyclic) {
            if (!same_ring(f.ring(), S)) throw DescriptorMismatch();
            if (f.constant_term() != 0) throw PreconditionError("J must lie in the maximal ideal");
            first.push_back(VectorElement::single(1, 0, f));
        }
    } else {
        for (std::size_t j = 0; j < S->nvars(); ++j)
            first.push_back(VectorElement::single(1, 0, Polynomial::variable(S, j)));
    }

    FreeComplex G(req.ring, {0});
    std::vector<VectorElement> candidates = std::move(first);
    for (std::size_t i = 1; i <= req.length; ++i) {
        const std::size_t rows = G.rank(i - 1);
        auto mg = minimal_generators(R, rows, G.shifts(i - 1), candidates);
        if (mg.gens.size() > req.betti_guard)
            throw CapacityError("Betti number " + std::to_string(mg.gens.size()) + " at homological degree " +
                                std::to_string(i) + " exceeds the guard " + std::to_string(req.betti_guard));
        Matrix d = Matrix::from_columns(S, rows, mg.gens);
        G.append(std::move(d), std::move(mg.degrees));
        if (i < req.length) candidates = kernel_over_ring(R, G.d(i), G.shifts(i - 1));
    }
    return G;
}

namespace {

Matrix drop(const Matrix& m, std::optional<std::size_t> row, std::optional<std::size_t> col) {
    Matrix out(m.ring(), m.rows() - (row ? 1 : 0), m.cols() - (col ? 1 : 0));
    for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
        if (row && r == *row) continue;
        for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
            if (col && c == *col) continue;
            out.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
    }
    return out;
}

template <class T>
std::vector<T> erase_at(std::vector<T> v, std::size_t k) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
    return v;
}

}  // namespace

FreeComplex minimize_complex(const FreeComplex& C) {
    const auto& R = *C.ring();
    const auto& F = R.descriptor()->field();
    std::vector<std::vector<std::int64_t>> shifts;
    for (std::size_t i = 0; i <= C.length(); ++i) shifts.push_back(C.shifts(i));
    std::vector<Matrix> d;  // d[i-1] = ∂_i
    for (std::size_t i = 1; i <= C.length(); ++i) {
        Matrix m = C.d(i);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = R.reduce(m.at(r, c));
        d.push_back(std::move(m));
    }

    for (std::size_t i = 1; i <= d.size(); ++i) {
        for (;;) {
            Matrix& D = d[i - 1];
            std::optional<std::pair<std::size_t, std::size_t>> pivot;
            for (std::size_t r = 0; r < D.rows() && !pivot; ++r)
                for (std::size_t c = 0; c < D.cols() && !pivot; ++c)
                    if (D.at(r, c).is_unit()) pivot = {r, c};
            if (!pivot) break;
            const auto [pr, pc] = *pivot;
            const auto a_inv = F.inv(D.at(pr, pc).constant_term());

            Matrix next(D.ring(), D.rows() - 1, D.cols() - 1);
            for (std::size_t r = 0, rr = 0; r < D.rows(); ++r) {
                if (r == pr) continue;
                const auto factor = D.at(r, pc).scaled(a_inv);
                for (std::size_t c = 0, cc = 0; c < D.cols(); ++c) {
                    if (c == pc) continue;
                    auto entry = D.at(r, c);
                    if (!factor.is_zero() && !D.at(pr, c).is_zero()) entry -= factor * D.at(pr, c);
                    next.at(rr, cc++) = R.reduce(entry);
                }
                ++rr;
            }
            D = std::move(next);
            if (i < d.size()) d[i] = drop(d[i], pc, std::nullopt);
            if (i >= 2) d[i - 2] = drop(d[i - 2], std::nullopt, pr);
            shifts[i] = erase_at(shifts[i], pc);
            shifts[i - 1] = erase_at(shifts[i - 1], pr);
        }
    }
    return FreeComplex::from_differentials(C.ring(), std::move(d), {}, std::move(shifts));
}

ResolutionCertificate resolution_certificate(const FreeComplex& C) {
    ResolutionCertificate cert;
    auto report = verify_complex(C);
    cert.is_complex = report.is_complex;
    cert.is_minimal = report.is_minimal;
    cert.failures = report.failures;
    for (std::size_t i = 1; i < C.length(); ++i) {
        auto h = homology_length(C, i);
        if (!h.finite || h.length != 0) {
            cert.exact = false;
            cert.inexact_spots.push_back(i);
            cert.failures.push_back("homology at spot " + std::to_string(i) + " is nonzero");
        }
    }
    return cert;
}

}  // namespace frobtor
