#include "doctest.h"
#include "frobtor/asymptotics.hpp"
#include "frobtor/errors.hpp"
#include "frobtor/oracle.hpp"
#include "frobtor/resolution.hpp"
#include "support.hpp"

using namespace testing;

namespace {

LengthSequence synthetic(std::uint32_t p, int d, std::vector<std::pair<unsigned, std::uint64_t>> values) {
    LengthSequence seq;
    seq.d = d;
    for (auto [e, lambda] : values) seq.entries.push_back({e, frobenius_q(p, e), lambda});
    return seq;
}

std::uint64_t ipow(std::uint64_t b, int k) {
    std::uint64_t r = 1;
    while (k-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("limit estimates on exact data") {
    auto seq = synthetic(5, 1, {{1, 9}, {2, 49}, {3, 249}, {4, 1249}});
    auto est = limit_estimate(seq);
    CHECK(est.c == 2);
    CHECK(est.b == -1);
    CHECK(est.relative_residual == 0);
    CHECK(est.method == "least-squares");
    CHECK(est.e_first == 2);
    CHECK(est.e_last == 4);
    CHECK(est.low_confidence == false);

    auto two = limit_estimate(synthetic(5, 1, {{1, 9}, {2, 49}}));
    CHECK(two.c == 2);
    CHECK(two.b == -1);
    CHECK(two.method == "interpolation");
    CHECK(two.low_confidence);
    CHECK(two.e_first == 1);

    auto clamped = limit_estimate(synthetic(3, 1, {{2, 5}, {3, 2}}));
    CHECK(clamped.c == 0);
    CHECK(clamped.clamped);

    CHECK_THROWS_AS(limit_estimate(synthetic(5, 1, {{1, 9}})), InsufficientData);
    CHECK_THROWS_AS(limit_estimate(synthetic(5, 1, {{0, 1}, {1, 9}})), InsufficientData);
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-2)) == "-2");
}

TEST_CASE("limit estimates recover planted coefficients") {
    Gen gen(606);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[static_cast<std::size_t>(gen.uniform(0, 2))];
        const int d = static_cast<int>(gen.uniform(1, 3));
        const std::int64_t A = gen.uniform(1, 20);
        const std::int64_t B = gen.uniform(-A, 20);
        std::vector<std::pair<unsigned, std::uint64_t>> values;
        for (unsigned e = 1; e <= 5; ++e) {
            const auto q = frobenius_q(p, e);
            const auto lam = A * static_cast<std::int64_t>(ipow(q, d)) + B * static_cast<std::int64_t>(ipow(q, d - 1));
            values.push_back({e, static_cast<std::uint64_t>(std::max<std::int64_t>(lam, 0))});
        }
        if (std::any_of(values.begin() + 1, values.end(), [](auto v) { return v.second == 0; })) continue;
        auto est = limit_estimate(synthetic(p, d, values));
        CAPTURE(p);
        CAPTURE(A);
        CAPTURE(B);
        CHECK(est.c == A);
        CHECK(est.b == B);
        CHECK(est.relative_residual == 0);
    }
}

TEST_CASE("noisy data gives a positive residual") {
    auto est = limit_estimate(synthetic(3, 1, {{2, 19}, {3, 52}, {4, 161}}));
    CHECK(est.relative_residual > 0);
    CHECK(est.relative_residual < Rational(1, 10));
    CHECK(to_double(est.c) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("tor length sequences of small rings") {
    auto node = qring(5, {"x", "y"}, "x*y");
    auto seq = tor_length_sequence(node, 1, 3, 2);
    REQUIRE(seq.entries.size() == 3);
    CHECK(seq.d == 1);
    CHECK(seq.spot == 1);
    CHECK_FALSE(seq.error);
    for (const auto& en : seq.entries) CHECK(en.lambda == 2 * en.q - 2);
    CHECK(seq.normalized(seq.entries[0]) == Rational(8, 5));

    auto cusp = qring(5, {"x", "y"}, "y^2 - x^3", {2, 3});
    for (const auto& en : tor_length_sequence(cusp, 2, 2, 3).entries) CHECK(en.lambda == 2 * en.q);

    auto quadric = qring(3, {"x", "y", "z"}, "x*y - z^2");
    auto qs = tor_length_sequence(quadric, 1, 3, 2);
    CHECK(qs.d == 2);
    for (const auto& en : qs.entries) CHECK(en.lambda == en.q * en.q - 1);

    auto plane = qring(5, {"x", "y"}, "");
    for (std::size_t i = 1; i <= 2; ++i)
        for (const auto& en : tor_length_sequence(plane, i, 2, 3, 0).entries) CHECK(en.lambda == 0);

    auto par = tor_length_sequence(quadric, 1, 3, 2, 1, 4);
    CHECK(par.entries.size() == qs.entries.size());
    for (std::size_t k = 0; k < qs.entries.size(); ++k) CHECK(par.entries[k].lambda == qs.entries[k].lambda);
}

TEST_CASE("sequences keep the computed prefix when a step fails") {
    auto node = qring(65537, {"x", "y"}, "x*y");
    auto seq = tor_length_sequence(node, 1, 2, 2);
    REQUIRE(seq.error);
    REQUIRE(seq.entries.size() == 1);
    CHECK(seq.entries[0].lambda == 2 * 65537 - 2);
}

TEST_CASE("hilbert-kunz multiplicities") {
    auto node = qring(5, {"x", "y"}, "x*y");
    auto hk = hilbert_kunz(node, 4);
    for (const auto& en : hk.sequence.entries) CHECK(en.lambda == 2 * en.q - 1);
    CHECK(hk.estimate.c == 2);
    CHECK(hk.estimate.b == -1);

    auto plane = qring(3, {"x", "y"}, "");
    auto hp = hilbert_kunz(plane, 3);
    CHECK(hp.estimate.c == 1);
    for (const auto& en : hp.sequence.entries) CHECK(en.lambda == en.q * en.q);

    auto quadric = qring(3, {"x", "y", "z"}, "x*y - z^2");
    auto hq = hilbert_kunz(quadric, 3);
    CHECK(to_double(hq.estimate.c) == doctest::Approx(1.5).epsilon(0.05));

    CHECK_THROWS(hilbert_kunz(node, 1));
}

TEST_CASE("tight closure evidence") {
    auto R = qring(7, {"x", "y", "z"}, "x^3 + y^3 + z^3");
    const auto& S = R->descriptor();
    auto ev = tight_closure_evidence(R, Ps(S, "x, y"), Ps(S, "x, y, z^2"), 3);
    for (const auto& en : ev.sequence.entries) CHECK(en.lambda == 1);
    CHECK(ev.sequence.normalized(ev.sequence.entries[0]) == Rational(1, 49));
    CHECK(ev.evidence_w_in_tight_closure);

    auto plane = qring(5, {"x", "y"}, "");
    const auto& T = plane->descriptor();
    auto no = tight_closure_evidence(plane, Ps(T, "x^2, y^2"), Ps(T, "x^2, x*y, y^2"), 3);
    for (const auto& en : no.sequence.entries) CHECK(en.lambda == en.q * en.q);
    CHECK_FALSE(no.evidence_w_in_tight_closure);

    auto same = tight_closure_evidence(plane, Ps(T, "x, y"), Ps(T, "x, y"), 2);
    CHECK(same.evidence_w_in_tight_closure);

    CHECK_THROWS_AS(tight_closure_evidence(plane, Ps(T, "x"), Ps(T, "y"), 2), PreconditionError);
    CHECK_THROWS_AS(tight_closure_evidence(plane, Ps(T, "x^2"), Ps(T, "x"), 2), PreconditionError);
}

TEST_CASE("comparison with the equidimensional quotient") {
    auto R = qring(3, {"x", "y", "z"}, "x*y, x*z");
    const auto& S = R->descriptor();
    auto rep = compare_req(R, Ps(S, "x"), 0, 4, 1);
    REQUIRE(rep.gaps.size() == 4);
    for (std::size_t k = 0; k < rep.gaps.size(); ++k) {
        const Rational q = frobenius_q(3, static_cast<unsigned>(k + 1));
        CHECK(rep.gaps[k] == (q - 1) / (q * q));
    }
    CHECK(rep.consistent);

    CHECK_THROWS_AS(compare_req(R, Ps(S, "y"), 0, 2, 1), PreconditionError);

    auto same = compare_req(R, R->ideal_gens(), 1, 2, 2);
    for (const auto& g : same.gaps) CHECK(g == 0);
}

TEST_CASE("the direct regularity oracle") {
    CHECK(direct_regularity_oracle(*qring(5, {"x", "y"}, "")));
    CHECK(direct_regularity_oracle(*qring(5, {"x", "y", "z"}, "z")));
    CHECK(direct_regularity_oracle(*qring(5, {"x", "y", "z"}, "z, x")));
    CHECK_FALSE(direct_regularity_oracle(*qring(5, {"x", "y"}, "x*y")));
    CHECK_FALSE(direct_regularity_oracle(*qring(5, {"x", "y"}, "x^2")));
    CHECK_FALSE(direct_regularity_oracle(*qring(5, {"x", "y", "z"}, "x*y - z^2")));
}

TEST_CASE("regularity verdicts") {
    auto plane = qring(5, {"x", "y"}, "");
    auto v = regularity_verdict(plane, {1, 2}, 2);
    CHECK(v.kind == VerdictKind::RegularCertified);
    CHECK(v.oracle_regular);
    CHECK_FALSE(v.inconsistency);

    auto node = qring(5, {"x", "y"}, "x*y");
    auto n = regularity_verdict(node, {1}, 3);
    CHECK(n.kind == VerdictKind::NonRegularEvidence);
    CHECK_FALSE(n.oracle_regular);
    REQUIRE(n.spots.size() == 1);
    REQUIRE(n.spots[0].estimate);
    CHECK(n.spots[0].estimate->c == 2);

    auto short_run = regularity_verdict(node, {1}, 1);
    CHECK(short_run.kind == VerdictKind::Inconclusive);
    CHECK_FALSE(short_run.spots[0].estimate);
    CHECK_FALSE(short_run.spots[0].diagnostic.empty());

    CHECK(to_string(VerdictKind::RegularCertified) == "RegularCertified");
    CHECK(to_string(VerdictKind::Inconclusive) == "Inconclusive");
}

TEST_CASE("verdicts agree with the direct oracle on a small corpus") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> corpus = {
        {"", {"x", "y"}},           {"x*y", {"x", "y"}},          {"x^2", {"x", "y"}},
        {"y^2 - x^3", {"x", "y"}},  {"x*y - z^2", {"x", "y", "z"}}, {"z, x*y - z^2", {"x", "y", "z"}},
        {"x*y, x*z, y*z", {"x", "y", "z"}},
    };
    for (const auto& [ideal, vars] : corpus) {
        CAPTURE(ideal);
        auto R = qring(3, vars, ideal, ideal == "y^2 - x^3" ? std::vector<std::int32_t>{2, 3} : std::vector<std::int32_t>{});
        auto v = regularity_verdict(R, {1}, 3);
        CHECK_FALSE(v.inconsistency);
        if (direct_regularity_oracle(*R))
            CHECK(v.kind == VerdictKind::RegularCertified);
        else
            CHECK(v.kind == VerdictKind::NonRegularEvidence);
    }
}
