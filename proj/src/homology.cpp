#include "frobtor/homology.hpp"

#include <algorithm>

#include "frobtor/errors.hpp"
#include "frobtor/modules.hpp"
#include "frobtor/parallel.hpp"
#include "groebner_engine.hpp"

namespace frobtor {

FreeComplex frobenius_complex(const FreeComplex& C, unsigned e) {
    if (e == 0) return C;
    const auto& S = C.ring()->descriptor();
    const auto q = static_cast<std::int64_t>(frobenius_q(S->characteristic(), e));
    std::vector<Matrix> d;
    for (std::size_t i = 1; i <= C.length(); ++i) {
        const auto& D = C.d(i);
        Matrix m(S, D.rows(), D.cols());
        for (std::size_t r = 0; r < D.rows(); ++r)
            for (std::size_t c = 0; c < D.cols(); ++c) m.at(r, c) = frobenius_power(D.at(r, c), e);
        d.push_back(std::move(m));
    }
    std::vector<std::vector<std::int64_t>> shifts;
    for (std::size_t i = 0; i <= C.length(); ++i) {
        auto s = C.shifts(i);
        for (auto& x : s) {
            if (__builtin_mul_overflow(x, q, &x)) throw CapacityError("shift overflow in Frobenius twist");
        }
        shifts.push_back(std::move(s));
    }
    return FreeComplex::from_differentials(C.ring(), std::move(d), {}, std::move(shifts));
}

namespace {

bool graded(const FreeComplex& C) {
    for (std::size_t i = 1; i <= C.length(); ++i) {
        const auto& D = C.d(i);
        for (std::size_t r = 0; r < D.rows(); ++r)
            for (std::size_t c = 0; c < D.cols(); ++c) {
                const auto& f = D.at(r, c);
                if (f.is_zero()) continue;
                auto deg = f.weighted_degree();
                if (!deg || *deg != C.shifts(i)[c] - C.shifts(i - 1)[r]) return false;
            }
    }
    return true;
}

// Numerator of the Hilbert series of coker(∂_i : G_i -> G_{i-1}); ∂_{L+1} is zero.
LaurentPoly coker_numerator(const FreeComplex& C, std::size_t i) {
    const auto& R = *C.ring();
    const auto& target = C.shifts(i - 1);
    if (target.empty()) return {};
    std::vector<VectorElement> cols;
    if (i <= C.length()) cols = C.d(i).columns();
    return hilbert_numerator(submodule_basis(R, target.size(), target, cols));
}

Matrix differential(const FreeComplex& C, std::size_t i) {
    if (i >= 1 && i <= C.length()) return C.d(i);
    return Matrix(C.ring()->descriptor(), i == 0 ? 0 : C.rank(i - 1), C.rank(i));
}

std::vector<VectorElement> cycles(const FreeComplex& C, std::size_t i) {
    if (i == 0) {
        std::vector<VectorElement> out;
        for (std::size_t k = 0; k < C.rank(0); ++k)
            out.push_back(VectorElement::unit(C.ring()->descriptor(), C.rank(0), k));
        return out;
    }
    return kernel_over_ring(*C.ring(), C.d(i), C.shifts(i - 1));
}

}  // namespace

HomologyPresentation homology_presentation(const FreeComplex& C, std::size_t i) {
    HomologyPresentation P;
    P.spot = i;
    if (i > C.length()) {
        P.length = {true, 0};
        return P;
    }
    const auto& R = *C.ring();
    const auto& S = R.descriptor();
    const std::size_t rank = C.rank(i);
    const auto& shifts = C.shifts(i);

    auto cyc = cycles(C, i);
    const bool homogeneous = graded(C);
    if (homogeneous) {
        auto mg = minimal_generators(R, rank, shifts, cyc);
        P.cycle_gens = std::move(mg.gens);
        P.cycle_degrees = std::move(mg.degrees);
    } else {
        P.cycle_gens = std::move(cyc);
        P.cycle_degrees.assign(P.cycle_gens.size(), 0);
    }
    const std::size_t m = P.cycle_gens.size();
    if (m == 0) {
        P.length = {true, 0};
        return P;
    }

    detail::GroebnerEngine engine(S, rank, shifts, m);
    for (std::size_t k = 0; k < m; ++k) engine.add_input(P.cycle_gens[k], VectorElement::unit(S, m, k));
    for (auto& rel : R.relations(rank)) engine.add_input(std::move(rel), VectorElement(S, m));
    engine.run();
    const auto D = differential(C, i + 1);
    for (std::size_t c = 0; c < D.cols(); ++c) {
        VectorElement b = D.column(c);
        VectorElement tag(S, m);
        engine.reduce(b, &tag);
        if (!b.is_zero()) throw InternalError("boundary is not a cycle: the input is not a complex");
        P.boundary_lifts.push_back(R.reduce(VectorElement(S, m) - tag));
    }

    P.relations = P.boundary_lifts;
    auto syz = kernel_over_ring(R, Matrix::from_columns(S, rank, P.cycle_gens), shifts);
    P.relations.insert(P.relations.end(), syz.begin(), syz.end());
    P.length = standard_monomial_count(submodule_basis(R, m, P.cycle_degrees, P.relations));
    return P;
}

FiniteLength homology_length(const FreeComplex& C, std::size_t i) {
    if (i > C.length()) return FiniteLength{true, 0, {}, {}, {}};
    if (!graded(C)) {
        auto P = homology_presentation(C, i);
        FiniteLength out;
        out.finite = P.length.finite;
        out.length = P.length.count;
        return out;
    }
    const auto& S = *C.ring()->descriptor();
    LaurentPoly N = coker_numerator(C, i + 1);
    if (i >= 1) {
        N += coker_numerator(C, i);
        N -= free_module_numerator(hilbert_numerator(C.ring()->gb()), C.shifts(i - 1));
    }
    N.trim();
    return length_from_numerator(N, S);
}

bool annihilates_homology(const Polynomial& c, const FreeComplex& C, std::size_t i) {
    const auto& R = *C.ring();
    if (!same_ring(c.ring(), R.descriptor())) throw DescriptorMismatch();
    if (R.is_zero(c)) throw InvalidMultiplier("multiplier " + c.to_string() + " lies in the defining ideal");
    if (i > C.length()) return true;
    auto cyc = cycles(C, i);
    if (cyc.empty()) return true;
    const auto D = differential(C, i + 1);
    auto B = submodule_basis(R, C.rank(i), C.shifts(i), D.columns());
    for (const auto& z : cyc)
        if (!normal_form(z.times(c), B).remainder.is_zero()) return false;
    return true;
}

PhantomReport empirical_stably_phantom(const FreeComplex& C, std::size_t i, const Polynomial& c, unsigned e_max,
                                       unsigned threads) {
    PhantomReport report;
    report.spot = i;
    report.multiplier = c.to_string();
    if (C.ring()->is_zero(c))
        throw InvalidMultiplier("multiplier " + c.to_string() + " lies in the defining ideal");
    std::vector<char> hits(e_max + 1, 0);
    parallel_for(e_max + 1, threads, [&](std::size_t e) {
        hits[e] = annihilates_homology(c, frobenius_complex(C, static_cast<unsigned>(e)), i) ? 1 : 0;
    });
    report.annihilates.assign(hits.begin(), hits.end());
    report.stably_phantom_up_to_emax = std::all_of(hits.begin(), hits.end(), [](char h) { return h != 0; });
    report.note = "only c outside I is checked; c must avoid every minimal prime for this to be evidence";
    return report;
}

}  // namespace frobtor
