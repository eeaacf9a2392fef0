#include "frobtor/monomial.hpp"

#include <algorithm>
#include <set>

#include "frobtor/errors.hpp"

namespace frobtor {

std::string_view to_string(MonomialOrder order) noexcept {
    return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

std::uint32_t Monomial::divmask() const noexcept {
    // Four threshold bits per variable.
    static constexpr std::array<std::int32_t, 4> kThresholds{1, 3, 16, 128};
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j < kMaxVars; ++j)
        for (std::size_t k = 0; k < kThresholds.size(); ++k)
            if (exp[j] >= kThresholds[k]) mask |= 1u << (4 * j + k);
    return mask;
}

bool divides(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree > b.degree) return false;
    for (std::size_t j = 0; j < kMaxVars; ++j)
        if (a.exp[j] > b.exp[j]) return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) noexcept {
    Monomial r;
    for (std::size_t j = 0; j < kMaxVars; ++j) r.exp[j] = b.exp[j] - a.exp[j];
    r.degree = b.degree - a.degree;
    return r;
}

Monomial product(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t j = 0; j < kMaxVars; ++j)
        if (__builtin_add_overflow(a.exp[j], b.exp[j], &r.exp[j])) throw CapacityError("exponent overflow");
    if (__builtin_add_overflow(a.degree, b.degree, &r.degree)) throw CapacityError("degree overflow");
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t j = 0; j < kMaxVars; ++j)
        if (a.exp[j] != 0 && b.exp[j] != 0) return false;
    return true;
}

RingDescriptor::RingDescriptor(std::uint32_t p, std::vector<std::string> names, std::vector<std::int32_t> weights,
                               MonomialOrder order)
    : p_(p), field_(p), names_(std::move(names)), weights_(std::move(weights)), order_(order) {}

RingPtr RingDescriptor::make(std::uint32_t p, std::vector<std::string> names, std::vector<std::int32_t> weights,
                             MonomialOrder order) {
    if (!is_prime(p)) throw PreconditionError("p must be prime (got " + std::to_string(p) + ")");
    if (p >= (1u << 31)) throw CapacityError("p must be below 2^31");
    if (names.empty()) throw PreconditionError("a ring needs at least one variable");
    if (names.size() > kMaxVars)
        throw CapacityError("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty()) throw PreconditionError("empty variable name");
        if (!seen.insert(name).second) throw PreconditionError("duplicate variable name '" + name + "'");
    }
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) throw PreconditionError("weight count does not match variable count");
    for (auto w : weights)
        if (w < 1) throw PreconditionError("weights must be positive");
    return RingPtr(new RingDescriptor(p, std::move(names), std::move(weights), order));
}

int RingDescriptor::index_of(std::string_view name) const noexcept {
    for (std::size_t j = 0; j < names_.size(); ++j)
        if (names_[j] == name) return static_cast<int>(j);
    return -1;
}

Monomial RingDescriptor::variable(std::size_t index, std::int32_t power) const {
    if (index >= names_.size()) throw PreconditionError("variable index out of range");
    Monomial m;
    m.exp[index] = power;
    m.degree = static_cast<std::int64_t>(weights_[index]) * power;
    return m;
}

Monomial RingDescriptor::monomial(std::span<const std::int32_t> exponents) const {
    if (exponents.size() != names_.size()) throw PreconditionError("exponent vector has wrong length");
    Monomial m;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        if (exponents[j] < 0) throw PreconditionError("negative exponent");
        m.exp[j] = exponents[j];
    }
    m.degree = weighted_degree(m);
    return m;
}

std::int64_t RingDescriptor::weighted_degree(const Monomial& m) const noexcept {
    std::int64_t d = 0;
    for (std::size_t j = 0; j < names_.size(); ++j) d += static_cast<std::int64_t>(weights_[j]) * m.exp[j];
    return d;
}

Monomial RingDescriptor::lcm(const Monomial& a, const Monomial& b) const noexcept {
    Monomial r;
    for (std::size_t j = 0; j < kMaxVars; ++j) r.exp[j] = std::max(a.exp[j], b.exp[j]);
    r.degree = weighted_degree(r);
    return r;
}

std::string RingDescriptor::to_string(const Monomial& m) const {
    std::string out;
    for (std::size_t j = 0; j < names_.size(); ++j) {
        if (m.exp[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += names_[j];
        if (m.exp[j] != 1) out += '^' + std::to_string(m.exp[j]);
    }
    return out.empty() ? "1" : out;
}

std::string RingDescriptor::canonical() const {
    std::string out = "p=" + std::to_string(p_) + ";vars=";
    for (std::size_t j = 0; j < names_.size(); ++j) out += (j ? "," : "") + names_[j];
    out += ";weights=";
    for (std::size_t j = 0; j < weights_.size(); ++j) out += (j ? "," : "") + std::to_string(weights_[j]);
    out += ";order=" + std::string(frobtor::to_string(order_));
    return out;
}

}  // namespace frobtor
