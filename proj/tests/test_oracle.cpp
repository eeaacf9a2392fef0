#include "doctest.h"
#include "frobtor/errors.hpp"
#include "frobtor/homology.hpp"
#include "frobtor/oracle.hpp"
#include "frobtor/resolution.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("dense homology of small complexes") {
    auto R = qring(5, {"x", "y"}, "");
    const auto& S = R->descriptor();
    auto K = koszul_complex(R, Ps(S, "x^2, y^2"));
    auto h0 = dense_degreewise_homology(K, 0, 6);
    CHECK(h0.total == 4);
    CHECK(h0.by_degree == std::map<std::int64_t, std::uint64_t>{{0, 1}, {1, 2}, {2, 1}});
    CHECK(dense_degreewise_homology(K, 1, 6).total == 0);

    auto node = qring(5, {"x", "y"}, "x*y");
    auto G = minimal_free_resolution(ResolutionRequest::residue_field(node, 3));
    auto t1 = dense_degreewise_homology(frobenius_complex(G, 1), 1, 12);
    CHECK(t1.total == 8);
}

TEST_CASE("dense homology refuses oversized pieces") {
    auto R = qring(5, {"x", "y", "z"}, "");
    auto K = koszul_complex(R, Ps(R->descriptor(), "x^9, y^9, z^9"));
    CHECK_THROWS_AS(dense_degreewise_homology(K, 0, 40, 20), CapacityError);
}

TEST_CASE("staircase examples") {
    auto S = ring(5, {"x", "y"});
    auto mono = [&](const char* t) { return P(S, t).lead().mono; };
    CHECK(staircase_length(std::vector{mono("x^2"), mono("y^3")}, 2).count == 6);
    CHECK(staircase_length(std::vector{mono("x^2"), mono("x*y"), mono("y^2")}, 2).count == 3);
    CHECK_FALSE(staircase_length(std::vector{mono("x*y")}, 2).finite);
    CHECK(staircase_length(std::vector{mono("x*y")}, 2, std::vector<std::int32_t>{3, 3}).count == 5);
    CHECK(staircase_length(std::vector{mono("1")}, 2).count == 0);
    CHECK(staircase_length(std::vector<Monomial>{}, 2, std::vector<std::int32_t>{2, 4}).count == 8);
}

TEST_CASE("staircase counts match brute-force box enumeration") {
    Gen gen(99);
    auto S = ring(5, {"x", "y", "z"});
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Monomial> gens;
        for (int k = 0, n = static_cast<int>(gen.uniform(0, 5)); k < n; ++k) gens.push_back(gen.monomial(S, 4));
        std::vector<std::int32_t> box{static_cast<std::int32_t>(gen.uniform(1, 6)), static_cast<std::int32_t>(gen.uniform(1, 6)),
                                      static_cast<std::int32_t>(gen.uniform(1, 6))};
        std::uint64_t brute = 0;
        for (std::int32_t a = 0; a < box[0]; ++a)
            for (std::int32_t b = 0; b < box[1]; ++b)
                for (std::int32_t c = 0; c < box[2]; ++c) {
                    auto m = S->monomial(std::vector<std::int32_t>{a, b, c});
                    brute += std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
                }
        CHECK(staircase_length(gens, 3, box).count == brute);
        auto with_powers = gens;
        for (std::size_t j = 0; j < 3; ++j) with_powers.push_back(S->variable(j, box[j]));
        auto fin = staircase_length(with_powers, 3);
        CHECK(fin.finite);
        CHECK(fin.count == brute);
    }
}

TEST_CASE("the dense oracle agrees with the groebner route on the corpus") {
    struct Ring {
        const char* ideal;
        std::vector<std::string> vars;
        std::vector<std::int32_t> weights;
    };
    const std::vector<Ring> corpus = {
        {"x*y", {"x", "y"}, {}},          {"x^2", {"x", "y"}, {}},          {"y^2 - x^3", {"x", "y"}, {2, 3}},
        {"x*y - z^2", {"x", "y", "z"}, {}}, {"x*y, x*z", {"x", "y", "z"}, {}}, {"", {"x", "y"}, {}},
    };
    int checked = 0;
    for (const auto& r : corpus) {
        auto R = qring(3, r.vars, r.ideal, r.weights);
        auto G = minimal_free_resolution(ResolutionRequest::residue_field(R, 3));
        for (unsigned e = 0; e <= 1; ++e) {
            auto F = frobenius_complex(G, e);
            for (std::size_t i = 0; i <= 2; ++i) {
                auto rep = oracle_crosscheck(F, i, r.ideal);
                CAPTURE(r.ideal);
                CAPTURE(e);
                CAPTURE(i);
                if (!rep.finite) continue;
                ++checked;
                CHECK(rep.match);
                CHECK(rep.gb_length == rep.oracle_length);
                CHECK(rep.diff.empty());
            }
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("the crosscheck reports disagreement on a planted unit entry") {
    auto R = qring(5, {"x", "y"}, "");
    const auto& S = R->descriptor();
    auto K = koszul_complex(R, Ps(S, "x, y"));
    auto good = oracle_crosscheck(K, 0);
    CHECK(good.match);
    CHECK(good.gb_length == 1);

    // A unit entry kills H_0 in every degree.
    auto U = FreeComplex::from_differentials(R, {Matrix::from_rows(S, {Ps(S, "x, y, 1")})}, {0}, {{0}, {1, 1, 0}});
    auto rep = oracle_crosscheck(U, 0);
    CHECK(rep.match);
    CHECK(rep.gb_length == 0);
}

TEST_CASE("standalone degree bounds") {
    auto node = qring(5, {"x", "y"}, "x*y");
    auto G = minimal_free_resolution(ResolutionRequest::residue_field(node, 2));
    for (unsigned e = 0; e <= 2; ++e) {
        auto F = frobenius_complex(G, e);
        auto dense = dense_degreewise_homology(F, 1, standalone_degree_bound(F, 1, e));
        CHECK(dense.total == homology_length(F, 1).length);
    }
}
