#include "frobtor/hilbert.hpp"

#include <algorithm>

#include "frobtor/errors.hpp"

namespace frobtor {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CapacityError("Hilbert series coefficient overflow");
    return r;
}

// Polynomial with nonnegative exponents, coefficient k at t^k.
using Poly = std::vector<std::int64_t>;

void add_into(Poly& a, const Poly& b, std::int64_t shift, std::int64_t sign) {
    if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t k = 0; k < b.size(); ++k) {
        std::int64_t v = sign * b[k];
        a[k + static_cast<std::size_t>(shift)] = checked_add(a[k + static_cast<std::size_t>(shift)], v);
    }
}

Poly mul_one_minus(const Poly& a, std::int64_t d) {
    Poly out(a.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = checked_add(out[k], a[k]);
        out[k + static_cast<std::size_t>(d)] = checked_add(out[k + static_cast<std::size_t>(d)], -a[k]);
    }
    return out;
}

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.exp < b.exp;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    gens.swap(out);
}

class NumeratorComputer {
public:
    explicit NumeratorComputer(const RingDescriptor& ring) : ring_(ring), n_(ring.nvars()) {}

    Poly compute(std::vector<Monomial> gens) {
        minimalize(gens);
        if (gens.empty()) return Poly{1};
        for (const auto& g : gens)
            if (g.is_one()) return Poly{};

        // Pairwise coprime generators: the numerator factors.
        bool disjoint = true;
        for (std::size_t a = 0; a < gens.size() && disjoint; ++a)
            for (std::size_t b = a + 1; b < gens.size() && disjoint; ++b)
                if (!coprime(gens[a], gens[b])) disjoint = false;
        if (disjoint) {
            Poly out{1};
            for (const auto& g : gens) out = mul_one_minus(out, g.degree);
            return out;
        }

        // Pivot x_v^e on the variable shared by most non-pure generators.
        std::vector<int> counts(n_, 0);
        for (const auto& g : gens) {
            if (support_size(g) < 2) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (g.exp[j] > 0) ++counts[j];
        }
        std::size_t v = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
        std::vector<std::int32_t> exps;
        for (const auto& g : gens)
            if (support_size(g) >= 2 && g.exp[v] > 0) exps.push_back(g.exp[v]);
        std::sort(exps.begin(), exps.end());
        const std::int32_t e = exps[(exps.size() - 1) / 2];
        Monomial pivot = ring_.variable(v, e);

        // K(J) = K(J + pivot) + t^{deg pivot} K(J : pivot)
        std::vector<Monomial> with = gens;
        with.push_back(pivot);
        std::vector<Monomial> colon;
        colon.reserve(gens.size());
        for (const auto& g : gens) {
            Monomial c = g;
            c.exp[v] = std::max(0, g.exp[v] - e);
            c.degree = ring_.weighted_degree(c);
            colon.push_back(c);
        }
        Poly out = compute(std::move(with));
        add_into(out, compute(std::move(colon)), pivot.degree, 1);
        return out;
    }

private:
    int support_size(const Monomial& m) const {
        int s = 0;
        for (std::size_t j = 0; j < n_; ++j) s += m.exp[j] > 0;
        return s;
    }

    const RingDescriptor& ring_;
    std::size_t n_;
};

}  // namespace

bool LaurentPoly::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

void LaurentPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead == coeffs.size()) {
        coeffs.clear();
        offset = 0;
        return;
    }
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
    offset += static_cast<std::int64_t>(lead);
}

LaurentPoly LaurentPoly::shifted(std::int64_t by) const {
    LaurentPoly out = *this;
    out.offset += by;
    return out;
}

namespace {

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, std::int64_t sign) {
    if (b.coeffs.empty()) return a;
    if (a.coeffs.empty()) {
        LaurentPoly out = b;
        for (auto& c : out.coeffs) c *= sign;
        return out;
    }
    LaurentPoly out;
    out.offset = std::min(a.offset, b.offset);
    const auto top = std::max(a.offset + static_cast<std::int64_t>(a.coeffs.size()),
                              b.offset + static_cast<std::int64_t>(b.coeffs.size()));
    out.coeffs.assign(static_cast<std::size_t>(top - out.offset), 0);
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        out.coeffs[static_cast<std::size_t>(a.offset - out.offset) + k] = a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
        auto& slot = out.coeffs[static_cast<std::size_t>(b.offset - out.offset) + k];
        slot = checked_add(slot, sign * b.coeffs[k]);
    }
    out.trim();
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) { return *this = combine(*this, other, 1); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this = combine(*this, other, -1); }

LaurentPoly hilbert_numerator(std::span<const Monomial> gens, const RingDescriptor& ring) {
    LaurentPoly out;
    out.coeffs = NumeratorComputer(ring).compute(std::vector<Monomial>(gens.begin(), gens.end()));
    out.trim();
    return out;
}

LaurentPoly hilbert_numerator(const GroebnerBasis& G) {
    LaurentPoly total;
    for (std::size_t pos = 0; pos < G.rank; ++pos) {
        auto leads = G.leading_monomials(pos);
        const auto shift = G.shifts.empty() ? 0 : G.shifts[pos];
        total += hilbert_numerator(leads, *G.ring).shifted(shift);
    }
    return total;
}

LaurentPoly free_module_numerator(const LaurentPoly& ring_numerator, std::span<const std::int64_t> shifts) {
    LaurentPoly total;
    for (auto s : shifts) total += ring_numerator.shifted(s);
    return total;
}

FiniteLength length_from_numerator(const LaurentPoly& numerator, const RingDescriptor& ring) {
    LaurentPoly N = numerator;
    N.trim();
    if (N.coeffs.empty()) return {true, 0, std::nullopt, std::nullopt, {}};
    Poly cur = N.coeffs;
    for (auto w : ring.weights()) {
        // Q (1 - t^w) = cur  =>  Q_k = cur_k + Q_{k-w}
        const auto d = static_cast<std::size_t>(w);
        if (cur.size() <= d) return {false, 0, std::nullopt, std::nullopt, {}};
        Poly q(cur.size() - d, 0);
        for (std::size_t k = 0; k < q.size(); ++k) q[k] = checked_add(cur[k], k >= d ? q[k - d] : 0);
        for (std::size_t k = q.size(); k < cur.size(); ++k)
            if (checked_add(cur[k], k >= d ? q[k - d] : 0) != 0) return {false, 0, std::nullopt, std::nullopt, {}};
        cur = std::move(q);
    }
    LaurentPoly Q{N.offset, cur};
    Q.trim();
    FiniteLength out;
    out.finite = true;
    std::int64_t sum = 0;
    for (auto c : Q.coeffs) {
        if (c < 0) throw InternalError("negative Hilbert function value");
        sum = checked_add(sum, c);
    }
    out.length = static_cast<std::uint64_t>(sum);
    if (!Q.coeffs.empty()) {
        out.low_degree = Q.offset;
        out.top_degree = Q.offset + static_cast<std::int64_t>(Q.coeffs.size()) - 1;
        out.hilbert_function = Q.coeffs;
    }
    return out;
}

}  // namespace frobtor
