#include "doctest.h"
#include "frobtor/errors.hpp"
#include "frobtor/homology.hpp"
#include "frobtor/oracle.hpp"
#include "frobtor/resolution.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::uint64_t colength(const QuotientRingPtr& R, std::vector<Polynomial> extra) {
    auto gens = R->ideal_gens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    auto fl = length_from_numerator(hilbert_numerator(ideal_basis(R->descriptor(), gens)), *R->descriptor());
    REQUIRE(fl.finite);
    return fl.length;
}

}  // namespace

TEST_CASE("frobenius twist of a complex") {
    auto R = qring(5, {"x", "y"}, "");
    const auto& S = R->descriptor();
    auto K = koszul_complex(R, Ps(S, "x, y"));
    auto F = frobenius_complex(K, 1);
    CHECK(F.d(1) == Matrix::from_rows(S, {Ps(S, "x^5, y^5")}));
    CHECK(F.d(2) == Matrix::from_rows(S, {Ps(S, "-y^5"), Ps(S, "x^5")}));
    CHECK(F.shifts(1) == std::vector<std::int64_t>{5, 5});
    CHECK(F.shifts(2) == std::vector<std::int64_t>{10});
    CHECK(frobenius_complex(K, 0).differentials() == K.differentials());
}

TEST_CASE("frobenius twists compose") {
    for (const char* ideal : {"x*y", "x^2 - y*z", "x*y, y*z"}) {
        auto R = qring(3, {"x", "y", "z"}, ideal);
        auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, 2));
        CHECK(frobenius_complex(frobenius_complex(G, 1), 1).differentials() == frobenius_complex(G, 2).differentials());
        CHECK(frobenius_complex(frobenius_complex(G, 1), 1).shifts(2) == frobenius_complex(G, 2).shifts(2));
    }
}

TEST_CASE("H_0 of the twisted resolution of k is R/m^[q]") {
    for (const char* ideal : {"", "x*y", "x^2", "x^3 - y^2*z"}) {
        auto R = qring(3, {"x", "y", "z"}, ideal);
        auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, 1));
        for (unsigned e = 0; e <= 2; ++e) {
            CAPTURE(ideal);
            CAPTURE(e);
            CHECK(homology_length(frobenius_complex(G, e), 0).length ==
                  colength(R, bracket_power(Ps(R->descriptor(), "x, y, z"), e)));
        }
    }
}

TEST_CASE("homology presentations") {
    auto R = qring(5, {"x", "y"}, "");
    const auto& S = R->descriptor();

    auto Kx = koszul_complex(R, Ps(S, "x"));
    CHECK_FALSE(homology_presentation(Kx, 0).length.finite);
    CHECK_FALSE(homology_length(Kx, 0).finite);

    auto K = koszul_complex(R, Ps(S, "x^3, y^3"));
    auto h0 = homology_presentation(K, 0);
    CHECK(h0.length == LengthCount{true, 9});
    CHECK(h0.cycle_gens.size() == 1);
    CHECK(homology_length(K, 0).length == 9);
    CHECK(homology_length(K, 1).length == 0);
    CHECK(homology_length(K, 2).length == 0);

    auto node = qring(5, {"x", "y"}, "x*y");
    auto Kn = koszul_complex(node, Ps(node->descriptor(), "x^2, y^2"));
    CHECK(homology_length(Kn, 0).length == 3);
    CHECK(homology_length(Kn, 1).length == 3);
    CHECK(homology_length(Kn, 2).length == 0);
}

TEST_CASE("presentation lengths agree with hilbert series lengths") {
    int finite = 0;
    for (const char* ideal : {"x*y", "x^2", "x*y - z^2", "x*y, x*z, y*z"}) {
        auto R = qring(3, {"x", "y", "z"}, ideal);
        auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, 3));
        for (unsigned e = 0; e <= 1; ++e) {
            auto F = frobenius_complex(G, e);
            for (std::size_t i = 0; i <= 2; ++i) {
                CAPTURE(ideal);
                CAPTURE(e);
                CAPTURE(i);
                auto pres = homology_presentation(F, i);
                auto hs = homology_length(F, i);
                CHECK(pres.length.finite == hs.finite);
                if (hs.finite) {
                    ++finite;
                    CHECK(pres.length.count == hs.length);
                }
            }
        }
    }
    CHECK(finite > 10);
}

TEST_CASE("annihilation of homology") {
    auto R = qring(5, {"x", "y"}, "");
    const auto& S = R->descriptor();
    auto K = koszul_complex(R, Ps(S, "x, y"));
    CHECK(annihilates_homology(P(S, "x"), K, 0));
    CHECK(annihilates_homology(P(S, "x+y"), K, 0));
    CHECK_FALSE(annihilates_homology(P(S, "1"), K, 0));

    auto K3 = koszul_complex(R, Ps(S, "x^3, y^3"));
    CHECK_FALSE(annihilates_homology(P(S, "x^2"), K3, 0));
    CHECK_FALSE(annihilates_homology(P(S, "x^2*y^2"), K3, 0));
    CHECK(annihilates_homology(P(S, "x^3"), K3, 0));

    auto node = qring(5, {"x", "y"}, "x*y");
    auto Kn = koszul_complex(node, Ps(node->descriptor(), "x, y"));
    CHECK_THROWS_AS(annihilates_homology(P(node->descriptor(), "x*y"), Kn, 0), InvalidMultiplier);
    CHECK(annihilates_homology(P(node->descriptor(), "x+y"), Kn, 1));
    CHECK_FALSE(annihilates_homology(P(node->descriptor(), "1"), Kn, 1));
}

TEST_CASE("phantom reports") {
    auto R = qring(5, {"x", "y"}, "x*y");
    auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, 2));
    auto rep = empirical_stably_phantom(G, 1, P(R->descriptor(), "x+y"), 2);
    CHECK(rep.spot == 1);
    CHECK(rep.annihilates.size() == 3);
    CHECK(rep.stably_phantom_up_to_emax ==
          std::all_of(rep.annihilates.begin(), rep.annihilates.end(), [](bool b) { return b; }));
    CHECK_FALSE(rep.note.empty());
    auto par = empirical_stably_phantom(G, 1, P(R->descriptor(), "x+y"), 2, 3);
    CHECK(par.annihilates == rep.annihilates);
}

TEST_CASE("variables to the q annihilate twisted tor of k") {
    const std::vector<std::pair<const char*, std::vector<std::int32_t>>> rings = {
        {"x*y", {}}, {"x^2", {}}, {"y^2 - x^3", {2, 3}}};
    for (const auto& [ideal, weights] : rings) {
        auto R = qring(3, {"x", "y"}, ideal, weights);
        const auto& S = R->descriptor();
        auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, 3));
        for (unsigned e = 0; e <= 2; ++e) {
            auto F = frobenius_complex(G, e);
            const auto q = frobenius_q(3, e);
            for (std::size_t i = 0; i <= 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    auto xq = Polynomial::monomial(S, S->variable(j, static_cast<std::int32_t>(q)));
                    if (R->is_zero(xq)) continue;
                    CAPTURE(ideal);
                    CAPTURE(e);
                    CAPTURE(i);
                    CHECK(annihilates_homology(xq, F, i));
                }
        }
    }
}

TEST_CASE("frobenius is exact over polynomial rings on random monomial resolutions") {
    Gen gen(8080);
    auto R = qring(2, {"x", "y", "z"}, "");
    const auto& S = R->descriptor();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> J;
        for (std::size_t j = 0; j < 3; ++j)
            J.push_back(Polynomial::monomial(S, S->variable(j, static_cast<std::int32_t>(gen.uniform(1, 3)))));
        for (int k = 0; k < 2; ++k) {
            auto m = gen.monomial(S, 2);
            if (!m.is_one()) J.push_back(Polynomial::monomial(S, m));
        }
        auto G = minimal_free_resolution(ResolutionRequest::cyclic_module(R, J, 3));
        for (unsigned e = 0; e <= 2; ++e) {
            auto F = frobenius_complex(G, e);
            std::vector<Monomial> lead;
            for (const auto& f : bracket_power(J, e)) lead.push_back(f.lead().mono);
            CHECK(homology_length(F, 0).length == staircase_length(lead, 3).count);
            for (std::size_t i = 1; i <= 2; ++i) CHECK(homology_length(F, i).length == 0);
        }
    }
}
