#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "frobtor/complex.hpp"
#include "frobtor/quotient_ring.hpp"

namespace testing {

using namespace frobtor;

inline RingPtr ring(std::uint32_t p, std::vector<std::string> names, std::vector<std::int32_t> weights = {},
                    MonomialOrder order = MonomialOrder::grevlex) {
    return RingDescriptor::make(p, std::move(names), std::move(weights), order);
}

inline Polynomial P(const RingPtr& S, const std::string& text) { return parse_polynomial(S, text); }
inline std::vector<Polynomial> Ps(const RingPtr& S, const std::string& text) { return parse_polynomial_list(S, text); }

inline QuotientRingPtr qring(std::uint32_t p, std::vector<std::string> names, const std::string& ideal,
                             std::vector<std::int32_t> weights = {}) {
    auto S = ring(p, std::move(names), std::move(weights));
    return QuotientRing::make(S, Ps(S, ideal));
}

/// Dictionary representation used by the naive reference arithmetic.
using Dict = std::map<std::vector<std::int64_t>, std::int64_t>;

inline Dict to_dict(const Polynomial& f) {
    Dict d;
    const auto n = f.ring()->nvars();
    for (const auto& t : f.terms()) d[std::vector<std::int64_t>(t.mono.exp.begin(), t.mono.exp.begin() + n)] = t.coeff;
    return d;
}

/// Schoolbook product with coefficients reduced mod p at the end.
inline Dict naive_mul(const Dict& a, const Dict& b, std::int64_t p) {
    Dict out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto e = ea;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            out[e] = (out[e] + ca * cb) % p;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Dict naive_power(const Dict& a, std::uint64_t n, std::int64_t p, std::size_t nvars) {
    Dict out{{std::vector<std::int64_t>(nvars, 0), 1}};
    for (std::uint64_t k = 0; k < n; ++k) out = naive_mul(out, a, p);
    return out;
}

/// Seeded generator of random test data.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Monomial monomial(const RingPtr& S, int max_exp) {
        std::vector<std::int32_t> e(S->nvars());
        for (auto& x : e) x = static_cast<std::int32_t>(uniform(0, max_exp));
        return S->monomial(e);
    }

    Polynomial poly(const RingPtr& S, int max_terms, int max_exp) {
        std::vector<Term> terms;
        const auto count = uniform(0, max_terms);
        for (std::int64_t k = 0; k < count; ++k)
            terms.push_back({static_cast<std::uint32_t>(uniform(1, S->characteristic() - 1)), monomial(S, max_exp)});
        return Polynomial::from_terms(S, std::move(terms));
    }

    /// Random monomial of exact weighted degree d, or nullopt if none exists.
    std::optional<Monomial> monomial_of_degree(const RingPtr& S, std::int64_t d) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<std::int32_t> e(S->nvars(), 0);
            std::int64_t left = d;
            std::vector<std::size_t> order(S->nvars());
            for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
            std::shuffle(order.begin(), order.end(), rng_);
            for (std::size_t k = 0; k + 1 < order.size(); ++k) {
                const auto j = order[k];
                const auto w = S->weights()[j];
                e[j] = static_cast<std::int32_t>(uniform(0, left / w));
                left -= e[j] * w;
            }
            const auto last = order.back();
            if (left % S->weights()[last] != 0) continue;
            e[last] = static_cast<std::int32_t>(left / S->weights()[last]);
            return S->monomial(e);
        }
        return std::nullopt;
    }

    Polynomial homogeneous(const RingPtr& S, std::int64_t d, int max_terms) {
        std::vector<Term> terms;
        const auto count = uniform(1, max_terms);
        for (std::int64_t k = 0; k < count; ++k)
            if (auto m = monomial_of_degree(S, d))
                terms.push_back({static_cast<std::uint32_t>(uniform(1, S->characteristic() - 1)), *m});
        return Polynomial::from_terms(S, std::move(terms));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing
