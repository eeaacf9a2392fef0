#include "doctest.h"
#include "frobtor/errors.hpp"
#include "frobtor/groebner.hpp"
#include "frobtor/hilbert.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<Polynomial> basis_polys(const GroebnerBasis& G) {
    std::vector<Polynomial> out;
    for (const auto& g : G.generators) out.push_back(g.component(0));
    return out;
}

bool is_reduced(const GroebnerBasis& G) {
    for (std::size_t a = 0; a < G.generators.size(); ++a) {
        if (G.generators[a].lead().coeff != 1) return false;
        for (const auto& t : G.generators[a].terms())
            for (std::size_t b = 0; b < G.generators.size(); ++b) {
                if (a == b) continue;
                const auto& lb = G.generators[b].lead();
                if (lb.pos == t.pos && divides(lb.mono, t.mono)) return false;
            }
    }
    return true;
}

// The x-degree of the image of f under y -> x^2, z -> x^3.
std::map<std::int64_t, std::int64_t> twisted_cubic_image(const Polynomial& f, std::int64_t p) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& t : f.terms()) {
        auto& slot = out[t.mono.exp[0] + 2 * t.mono.exp[1] + 3 * t.mono.exp[2]];
        slot = (slot + t.coeff) % p;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("monomial ideals are their own basis") {
    auto S = ring(5, {"x", "y"});
    auto G = ideal_basis(S, Ps(S, "x^2, y^3"));
    auto polys = basis_polys(G);
    CHECK(polys.size() == 2);
    CHECK(std::find(polys.begin(), polys.end(), P(S, "x^2")) != polys.end());
    CHECK(std::find(polys.begin(), polys.end(), P(S, "y^3")) != polys.end());
    CHECK(ideal_basis(S, {}).generators.empty());
}

TEST_CASE("lex basis of the twisted cubic") {
    auto S = ring(5, {"x", "y", "z"}, {}, MonomialOrder::lex);
    auto G = ideal_basis(S, Ps(S, "y - x^2, z - x^3"));
    bool has_x2 = false;
    for (const auto& g : G.generators) {
        if (g.lead().mono == S->monomial(std::vector<std::int32_t>{2, 0, 0})) has_x2 = true;
        // Members of the ideal vanish under the parametrization.
        CHECK(twisted_cubic_image(g.component(0), 5).empty());
    }
    CHECK(has_x2);
    CHECK(satisfies_buchberger_criterion(G));
    CHECK(is_reduced(G));
    for (const auto& f : Ps(S, "y - x^2, z - x^3, y^3 - z^2")) CHECK(normal_form(f, G).is_zero());
}

TEST_CASE("random ideal bases are reduced Groebner bases of the same ideal") {
    Gen gen(1234);
    for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
        auto S = ring(7, {"x", "y", "z"}, {}, order);
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Polynomial> gens;
            for (int k = 0, n = static_cast<int>(gen.uniform(1, 3)); k < n; ++k)
                gens.push_back(gen.homogeneous(S, gen.uniform(1, 3), 3));
            auto G = ideal_basis(S, gens);
            CHECK(satisfies_buchberger_criterion(G));
            CHECK(is_reduced(G));
            for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
            auto again = ideal_basis(S, gens);
            CHECK(basis_polys(again) == basis_polys(G));
        }
    }
}

TEST_CASE("normal form is idempotent and reconstructs its input") {
    Gen gen(55);
    auto S = ring(5, {"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VectorElement> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(VectorElement::from_components(S, std::vector{gen.poly(S, 3, 2), gen.poly(S, 3, 2)}));
        auto G = buchberger(S, 2, gens);
        CHECK(satisfies_buchberger_criterion(G));
        auto v = VectorElement::from_components(S, std::vector{gen.poly(S, 5, 4), gen.poly(S, 5, 4)});
        auto nf = normal_form(v, G, true);
        CHECK(normal_form(nf.remainder, G).remainder == nf.remainder);
        VectorElement rebuilt = nf.remainder;
        for (std::size_t k = 0; k < G.generators.size(); ++k) rebuilt += G.generators[k].times(nf.quotients[k]);
        CHECK(rebuilt == v);
        for (const auto& t : nf.remainder.terms())
            for (const auto& g : G.generators) CHECK_FALSE((g.lead().pos == t.pos && divides(g.lead().mono, t.mono)));
    }
}

TEST_CASE("syzygies annihilate their generators") {
    auto S = ring(5, {"x", "y", "z"});
    std::vector<VectorElement> gens{VectorElement::single(1, 0, P(S, "x*y")), VectorElement::single(1, 0, P(S, "x*z"))};
    auto syz = syzygies(S, 1, gens);
    REQUIRE(syz.size() == 1);
    CHECK(syz[0].monic() == VectorElement::from_components(S, Ps(S, "z, -y")).monic());

    Gen gen(77);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<VectorElement> g;
        for (int k = 0; k < 3; ++k)
            g.push_back(VectorElement::from_components(S, std::vector{gen.homogeneous(S, 2, 3), gen.homogeneous(S, 2, 3)}));
        for (const auto& s : syzygies(S, 2, g)) {
            VectorElement sum(S, 2);
            auto coeffs = s.components();
            for (std::size_t k = 0; k < g.size(); ++k) sum += g[k].times(coeffs[k]);
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("krull dimension agrees with the pole order of the Hilbert series") {
    auto S = ring(5, {"x", "y"});
    CHECK(krull_dimension(ideal_basis(S, {})).dim == 2);
    CHECK(krull_dimension(ideal_basis(S, Ps(S, "x*y"))).dim == 1);
    CHECK(krull_dimension(ideal_basis(S, Ps(S, "1"))).unit_ideal);

    Gen gen(404);
    auto T = ring(3, {"x", "y", "z", "w"});
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0, n = static_cast<int>(gen.uniform(0, 3)); k < n; ++k)
            gens.push_back(gen.homogeneous(T, gen.uniform(1, 3), 3));
        auto G = ideal_basis(T, gens);
        if (G.is_unit()) continue;
        // Strip factors (1 - t) from the numerator; dim = n - (number removed).
        auto num = hilbert_numerator(G);
        int removed = 0;
        for (;;) {
            std::int64_t at_one = 0;
            for (auto c : num.coeffs) at_one += c;
            if (at_one != 0 || num.is_zero()) break;
            // divide by (1 - t)
            std::vector<std::int64_t> quotient(num.coeffs.size() - 1);
            std::int64_t carry = 0;
            for (std::size_t k = 0; k + 1 < num.coeffs.size(); ++k) {
                carry += num.coeffs[k];
                quotient[k] = carry;
            }
            num.coeffs = quotient;
            ++removed;
        }
        CHECK(krull_dimension(G).dim == 4 - removed);
    }
}

TEST_CASE("standard monomial count matches enumeration in a box") {
    Gen gen(8);
    auto S = ring(5, {"x", "y", "z"});
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens = Ps(S, "x^4, y^5, z^3");
        for (int k = 0; k < 3; ++k) gens.push_back(gen.homogeneous(S, gen.uniform(2, 4), 3));
        auto G = ideal_basis(S, gens);
        auto count = standard_monomial_count(G);
        REQUIRE(count.finite);
        std::uint64_t brute = 0;
        auto leads = G.leading_monomials(0);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 3; ++c) {
                    auto m = S->monomial(std::vector<std::int32_t>{a, b, c});
                    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, m); })) ++brute;
                }
        CHECK(count.count == brute);
        auto fl = length_from_numerator(hilbert_numerator(G), *S);
        CHECK(fl.finite);
        CHECK(fl.length == brute);
    }
    CHECK_FALSE(standard_monomial_count(ideal_basis(S, Ps(S, "x*y, z^2"))).finite);
}

TEST_CASE("module bases over a weighted ring") {
    auto S = ring(5, {"x", "y"}, {2, 3});
    std::vector<VectorElement> gens{VectorElement::from_components(S, Ps(S, "y, x")),
                                    VectorElement::from_components(S, Ps(S, "x^3, y^2"))};
    auto G = buchberger(S, 2, gens, std::vector<std::int64_t>{0, 1});
    CHECK(satisfies_buchberger_criterion(G));
    for (const auto& g : gens) CHECK(normal_form(g, G).remainder.is_zero());
}
