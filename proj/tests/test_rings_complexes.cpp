#include "doctest.h"
#include "frobtor/errors.hpp"
#include "frobtor/homology.hpp"
#include "frobtor/oracle.hpp"
#include "frobtor/resolution.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("quotient ring construction") {
    CHECK(qring(5, {"x", "y"}, "")->dim() == 2);
    CHECK(qring(5, {"x", "y"}, "x*y")->dim() == 1);
    auto cusp = qring(5, {"x", "y"}, "y^2-x^3", {2, 3});
    CHECK(cusp->dim() == 1);
    CHECK(cusp->embdim() == 2);
    CHECK_THROWS_AS(qring(5, {"x", "y"}, "x+y^2"), GradingError);
    CHECK_THROWS_AS(qring(5, {"x", "y"}, "3"), DegenerateRing);
    CHECK_THROWS_AS(qring(5, {"x", "y"}, "x, y, x - 1"), GradingError);
    CHECK(qring(5, {"x", "y"}, "0, x*y")->ideal_gens().size() == 1);
}

TEST_CASE("bracket powers") {
    auto S = ring(5, {"x", "y"});
    CHECK(bracket_power(Ps(S, "x, y"), 1) == Ps(S, "x^5, y^5"));
    CHECK(bracket_power(Ps(S, "x+y, x*y"), 0) == Ps(S, "x+y, x*y"));
    CHECK(bracket_power(Ps(S, "x+y, x*y"), 1) == Ps(S, "x^5+y^5, x^5*y^5"));
}

TEST_CASE("bracket power composition on random ideals") {
    Gen gen(2718);
    int checked = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto S = ring(p, {"x", "y", "z"});
        for (int trial = 0; trial < 34; ++trial, ++checked) {
            std::vector<Polynomial> I;
            for (int k = 0, n = static_cast<int>(gen.uniform(1, 4)); k < n; ++k) I.push_back(gen.poly(S, 4, 3));
            const auto e1 = static_cast<unsigned>(gen.uniform(0, 2));
            const auto e2 = static_cast<unsigned>(gen.uniform(0, 2));
            CHECK(bracket_power(bracket_power(I, e1), e2) == bracket_power(I, e1 + e2));
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("colength of I + m^[q] matches the staircase for monomial I") {
    Gen gen(31);
    auto S = ring(3, {"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> I;
        for (int k = 0; k < 3; ++k) I.push_back(Polynomial::monomial(S, gen.monomial(S, 3)));
        std::erase_if(I, [](const Polynomial& f) { return f.is_unit(); });
        for (unsigned e = 0; e <= 2; ++e) {
            auto gens = I;
            auto box = bracket_power(Ps(S, "x, y, z"), e);
            gens.insert(gens.end(), box.begin(), box.end());
            auto fl = length_from_numerator(hilbert_numerator(ideal_basis(S, gens)), *S);
            std::vector<Monomial> monos;
            for (const auto& g : gens) monos.push_back(g.lead().mono);
            auto st = staircase_length(monos, 3);
            REQUIRE(st.finite);
            CHECK(fl.length == st.count);
        }
    }
}

TEST_CASE("koszul complexes") {
    auto R = qring(5, {"x", "y"}, "");
    const auto& S = R->descriptor();
    auto K = koszul_complex(R, Ps(S, "x, y"));
    CHECK(K.ranks() == std::vector<std::size_t>{1, 2, 1});
    CHECK(K.d(1) == Matrix::from_rows(S, {Ps(S, "x, y")}));
    CHECK(K.d(2) == Matrix::from_rows(S, {Ps(S, "-y"), Ps(S, "x")}));
    auto rep = verify_complex(K);
    CHECK(rep.is_complex);
    CHECK(rep.is_minimal);
    CHECK(rep.homogeneous);

    auto K1 = koszul_complex(R, Ps(S, "x^2+y^2"));
    CHECK(K1.ranks() == std::vector<std::size_t>{1, 1});
    CHECK(K1.d(1) == Matrix::from_rows(S, {Ps(S, "x^2+y^2")}));

    auto K0 = koszul_complex(R, {});
    CHECK(K0.length() == 0);
    CHECK(K0.rank(0) == 1);

    auto R3 = qring(3, {"x", "y", "z"}, "");
    auto K3 = koszul_complex(R3, Ps(R3->descriptor(), "x, y, z"));
    CHECK(K3.ranks() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(verify_complex(K3).is_complex);
    CHECK_THROWS_AS(koszul_complex(R, Ps(S, "x + 1")), PreconditionError);
}

TEST_CASE("koszul complexes on random forms always verify, and are acyclic on regular sequences") {
    Gen gen(5);
    auto R = qring(7, {"x", "y", "z"}, "x^2 - y*z");
    const auto& S = R->descriptor();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> f;
        for (int k = 0; k < 3; ++k) f.push_back(gen.homogeneous(S, gen.uniform(1, 2), 3));
        CHECK(verify_complex(koszul_complex(R, f)).is_complex);
    }
    auto Sreg = qring(7, {"x", "y", "z"}, "");
    auto K = koszul_complex(Sreg, Ps(Sreg->descriptor(), "x^2, y^3 + x*y^2, z"));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(homology_length(K, i).length == 0);
}

TEST_CASE("verify_complex detects non-complexes") {
    auto S = ring(5, {"x"});
    auto C = FreeComplex::from_differentials(QuotientRing::make(S, {}),
                                             {Matrix::from_rows(S, {Ps(S, "x")}), Matrix::from_rows(S, {Ps(S, "x")})});
    CHECK_FALSE(verify_complex(C).is_complex);
    auto D = FreeComplex::from_differentials(QuotientRing::make(S, Ps(S, "x^2")),
                                             {Matrix::from_rows(S, {Ps(S, "x")}), Matrix::from_rows(S, {Ps(S, "x")})});
    CHECK(verify_complex(D).is_complex);
    auto U = FreeComplex::from_differentials(QuotientRing::make(S, {}), {Matrix::from_rows(S, {Ps(S, "1")})});
    CHECK_FALSE(verify_complex(U).is_minimal);
}

TEST_CASE("mapping cones") {
    auto R = qring(5, {"x", "y"}, "");
    const auto& S = R->descriptor();
    auto K = koszul_complex(R, Ps(S, "x, y"));

    SUBCASE("identity on an exact complex is contractible") {
        auto cone = mapping_cone(ChainMap::identity(K));
        CHECK(verify_complex(cone).is_complex);
        for (std::size_t i = 0; i <= cone.length(); ++i) CHECK(homology_length(cone, i).length == 0);
        CHECK(minimize_complex(cone).ranks() == std::vector<std::size_t>(cone.length() + 1, 0));
    }
    SUBCASE("zero map from the zero complex") {
        FreeComplex zero(R, {});
        ChainMap alpha{zero, K, {}};
        auto cone = mapping_cone(alpha);
        for (std::size_t i = 0; i <= K.length(); ++i) {
            auto a = homology_length(cone, i), b = homology_length(K, i);
            CHECK(a.finite == b.finite);
            CHECK(a.length == b.length);
        }
    }
    SUBCASE("multiplication by x") {
        ChainMap alpha{K, K, {}};
        for (std::size_t i = 0; i <= K.length(); ++i) {
            Matrix m = Matrix::identity(S, K.rank(i));
            for (std::size_t k = 0; k < K.rank(i); ++k) m.at(k, k) = P(S, "x");
            alpha.maps.push_back(m);
        }
        // Source degrees shifted by one make multiplication by x homogeneous.
        std::vector<std::vector<std::int64_t>> shifts;
        for (std::size_t i = 0; i <= K.length(); ++i) {
            auto s = K.shifts(i);
            for (auto& x : s) x += 1;
            shifts.push_back(s);
        }
        alpha.source = FreeComplex::from_differentials(R, K.differentials(), {}, shifts);
        CHECK(alpha.commutes());
        auto cone = mapping_cone(alpha);
        CHECK(verify_complex(cone).is_complex);
        auto h0 = homology_length(cone, 0);
        auto dense = dense_degreewise_homology(cone, 0, 6);
        CHECK(h0.length == 1);
        CHECK(dense.total == h0.length);
    }
    SUBCASE("non-commuting maps are rejected") {
        ChainMap alpha{K, K, {Matrix::identity(S, 1)}};
        CHECK_THROWS_AS(mapping_cone(alpha), PreconditionError);
    }
}

TEST_CASE("random cones verify") {
    Gen gen(11);
    auto R = qring(5, {"x", "y", "z"}, "x*y - z^2");
    auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, 3));
    for (int trial = 0; trial < 5; ++trial) {
        auto c = gen.homogeneous(R->descriptor(), 1, 3);
        ChainMap alpha{G, G, {}};
        for (std::size_t i = 0; i <= G.length(); ++i) {
            Matrix m(R->descriptor(), G.rank(i), G.rank(i));
            for (std::size_t k = 0; k < G.rank(i); ++k) m.at(k, k) = c;
            alpha.maps.push_back(m);
        }
        std::vector<std::vector<std::int64_t>> shifts;
        for (std::size_t i = 0; i <= G.length(); ++i) {
            auto s = G.shifts(i);
            for (auto& x : s) x += 1;
            shifts.push_back(s);
        }
        alpha.source = FreeComplex::from_differentials(R, G.differentials(), {}, shifts);
        auto cone = mapping_cone(alpha);
        auto rep = verify_complex(cone);
        CHECK(rep.is_complex);
        CHECK(rep.homogeneous);
    }
}
