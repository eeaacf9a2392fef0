#include "frobtor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "frobtor/errors.hpp"
#include "frobtor/hilbert.hpp"
#include "frobtor/homology.hpp"

namespace frobtor {

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 0;
        for (auto x : m.exp) h = h * 1000003u + static_cast<std::size_t>(x);
        return h;
    }
};

struct MonomialEq {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a.exp == b.exp; }
};

// Standard monomials of R graded by weighted degree, plus memoized normal forms of monomials.
class StandardBasis {
public:
    explicit StandardBasis(const QuotientRing& R) : R_(R), S_(*R.descriptor()), leads_(R.gb().leading_monomials(0)) {}

    const std::vector<Monomial>& in_degree(std::int64_t t) {
        auto it = by_degree_.find(t);
        if (it != by_degree_.end()) return it->second;
        std::vector<Monomial> out;
        if (t >= 0) {
            Monomial m{};
            enumerate(0, t, m, out);
        }
        std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return S_.compare(a, b) > 0; });
        auto& slot = by_degree_[t];
        slot = std::move(out);
        auto& idx = index_[t];
        for (std::size_t k = 0; k < slot.size(); ++k) idx.emplace(slot[k], k);
        return slot;
    }

    std::size_t position(std::int64_t t, const Monomial& m) {
        in_degree(t);
        return index_.at(t).at(m);
    }

    const Polynomial& normal_form_of(const Monomial& m) {
        auto it = nf_.find(m);
        if (it != nf_.end()) return it->second;
        return nf_.emplace(m, R_.reduce(Polynomial::monomial(R_.descriptor(), m))).first->second;
    }

private:
    void enumerate(std::size_t j, std::int64_t remaining, Monomial& m, std::vector<Monomial>& out) {
        const std::size_t n = S_.nvars();
        if (j + 1 == n) {
            const auto w = S_.weights()[j];
            if (remaining % w != 0) return;
            m.exp[j] = static_cast<std::int32_t>(remaining / w);
            m.degree = S_.weighted_degree(m);
            bool standard = std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return divides(l, m); });
            if (standard) out.push_back(m);
            m.exp[j] = 0;
            return;
        }
        for (std::int64_t k = 0; k * S_.weights()[j] <= remaining; ++k) {
            m.exp[j] = static_cast<std::int32_t>(k);
            enumerate(j + 1, remaining - k * S_.weights()[j], m, out);
        }
        m.exp[j] = 0;
    }

    const QuotientRing& R_;
    const RingDescriptor& S_;
    std::vector<Monomial> leads_;
    std::map<std::int64_t, std::vector<Monomial>> by_degree_;
    std::map<std::int64_t, std::unordered_map<Monomial, std::size_t, MonomialHash, MonomialEq>> index_;
    std::unordered_map<Monomial, Polynomial, MonomialHash, MonomialEq> nf_;
};

using DenseMatrix = std::vector<std::vector<std::uint32_t>>;  // list of columns

std::size_t rank_mod_p(DenseMatrix cols, const PrimeField& F) {
    std::size_t rank = 0;
    if (cols.empty()) return 0;
    const std::size_t rows = cols.front().size();
    for (std::size_t r = 0; r < rows && rank < cols.size(); ++r) {
        std::size_t pivot = rank;
        while (pivot < cols.size() && cols[pivot][r] == 0) ++pivot;
        if (pivot == cols.size()) continue;
        std::swap(cols[pivot], cols[rank]);
        const auto inv = F.inv(cols[rank][r]);
        for (std::size_t c = rank + 1; c < cols.size(); ++c) {
            if (cols[c][r] == 0) continue;
            const auto factor = F.mul(cols[c][r], inv);
            for (std::size_t k = r; k < rows; ++k)
                if (cols[rank][k]) cols[c][k] = F.sub(cols[c][k], F.mul(factor, cols[rank][k]));
        }
        ++rank;
    }
    return rank;
}

// Degree-t piece of ∂_i : (G_i)_t -> (G_{i-1})_t as dense columns.
DenseMatrix degree_piece(StandardBasis& B, const FreeComplex& C, std::size_t i, std::int64_t t, std::size_t guard) {
    const auto& src = C.shifts(i);
    const auto& dst = C.shifts(i - 1);
    std::vector<std::size_t> offset(dst.size() + 1, 0);
    for (std::size_t r = 0; r < dst.size(); ++r) offset[r + 1] = offset[r] + B.in_degree(t - dst[r]).size();
    if (offset.back() > guard) throw CapacityError("degreewise matrix too large for the dense oracle");
    const auto& D = C.d(i);
    const auto& S = *C.ring()->descriptor();
    DenseMatrix cols;
    for (std::size_t c = 0; c < src.size(); ++c) {
        for (const auto& m : B.in_degree(t - src[c])) {
            std::vector<std::uint32_t> col(offset.back(), 0);
            for (std::size_t r = 0; r < dst.size(); ++r) {
                for (const auto& term : D.at(r, c).terms()) {
                    const Monomial prod = product(m, term.mono);
                    for (const auto& u : B.normal_form_of(prod).terms()) {
                        auto& slot = col[offset[r] + B.position(t - dst[r], u.mono)];
                        slot = S.field().add(slot, S.field().mul(term.coeff, u.coeff));
                    }
                }
            }
            cols.push_back(std::move(col));
        }
    }
    return cols;
}

}  // namespace

DegreewiseHomology dense_degreewise_homology(const FreeComplex& C, std::size_t i, std::int64_t D,
                                             std::size_t max_dimension) {
    if (D < 0) throw PreconditionError("degree bound must be non-negative");
    DegreewiseHomology out;
    out.degree_bound = D;
    if (i > C.length() || C.rank(i) == 0) return out;
    StandardBasis B(*C.ring());
    const auto& F = C.ring()->descriptor()->field();
    const auto& shifts = C.shifts(i);
    const std::int64_t low = *std::min_element(shifts.begin(), shifts.end());
    for (std::int64_t t = std::min<std::int64_t>(low, 0); t <= D; ++t) {
        std::size_t dim = 0;
        for (auto s : shifts) dim += B.in_degree(t - s).size();
        if (dim == 0) continue;
        if (dim > max_dimension) throw CapacityError("graded piece too large for the dense oracle");
        std::size_t rank_out = 0, rank_in = 0;
        if (i >= 1 && i <= C.length() && C.rank(i - 1) > 0)
            rank_out = rank_mod_p(degree_piece(B, C, i, t, max_dimension), F);
        if (i + 1 <= C.length() && C.rank(i + 1) > 0)
            rank_in = rank_mod_p(degree_piece(B, C, i + 1, t, max_dimension), F);
        const std::uint64_t h = dim - rank_out - rank_in;
        if (h) out.by_degree[t] = h;
        out.total += h;
    }
    return out;
}

std::int64_t standalone_degree_bound(const FreeComplex& C, std::size_t i, unsigned e) {
    const auto& R = *C.ring();
    const auto& S = R.descriptor();
    std::vector<Polynomial> gens = R.ideal_gens();
    for (std::size_t j = 0; j < S->nvars(); ++j) gens.push_back(frobenius_power(Polynomial::variable(S, j), e));
    auto fl = length_from_numerator(hilbert_numerator(ideal_basis(S, gens)), *S);
    std::int64_t top = fl.top_degree.value_or(0);
    std::int64_t shift = 0;
    if (i <= C.length() && C.rank(i) > 0) shift = *std::max_element(C.shifts(i).begin(), C.shifts(i).end());
    return top + shift;
}

StaircaseCount staircase_length(std::span<const Monomial> gens, std::size_t nvars,
                                std::optional<std::vector<std::int32_t>> box) {
    std::vector<std::int32_t> bound(nvars, -1);
    if (box) {
        if (box->size() != nvars) throw PreconditionError("box needs one bound per variable");
        bound = *box;
    } else {
        for (const auto& g : gens) {
            std::size_t support = 0, which = 0;
            for (std::size_t j = 0; j < nvars; ++j)
                if (g.exp[j]) ++support, which = j;
            if (support == 0) return {true, 0};
            if (support == 1 && (bound[which] < 0 || g.exp[which] < bound[which])) bound[which] = g.exp[which];
        }
        if (std::any_of(bound.begin(), bound.end(), [](std::int32_t b) { return b < 0; })) return {false, 0};
    }

    using Exps = std::vector<std::int32_t>;
    std::vector<Exps> start;
    for (const auto& g : gens) start.emplace_back(g.exp.begin(), g.exp.begin() + static_cast<std::ptrdiff_t>(nvars));

    // count(box, J) = count(box, J - g) - count(box - g, (J - g) : g)
    std::function<std::uint64_t(const Exps&, std::vector<Exps>)> count = [&](const Exps& b, std::vector<Exps> J) {
        for (auto x : b)
            if (x <= 0) return std::uint64_t{0};
        // Drop generators outside the box and non-minimal ones.
        std::erase_if(J, [&](const Exps& g) {
            for (std::size_t j = 0; j < nvars; ++j)
                if (g[j] >= b[j]) return true;
            return false;
        });
        std::sort(J.begin(), J.end(), [](const Exps& a, const Exps& c) {
            std::int64_t sa = 0, sc = 0;
            for (auto x : a) sa += x;
            for (auto x : c) sc += x;
            return sa != sc ? sa < sc : a < c;
        });
        std::vector<Exps> minimal;
        for (const auto& g : J) {
            bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Exps& h) {
                for (std::size_t j = 0; j < nvars; ++j)
                    if (h[j] > g[j]) return false;
                return true;
            });
            if (!redundant) minimal.push_back(g);
        }
        std::uint64_t volume = 1;
        for (auto x : b) volume *= static_cast<std::uint64_t>(x);
        if (minimal.empty()) return volume;
        Exps g = minimal.back();
        minimal.pop_back();
        if (std::all_of(g.begin(), g.end(), [](std::int32_t x) { return x == 0; })) return std::uint64_t{0};
        Exps shrunk(nvars);
        for (std::size_t j = 0; j < nvars; ++j) shrunk[j] = b[j] - g[j];
        std::vector<Exps> colon;
        for (const auto& h : minimal) {
            Exps c(nvars);
            for (std::size_t j = 0; j < nvars; ++j) c[j] = std::max(h[j] - g[j], 0);
            colon.push_back(std::move(c));
        }
        return count(b, minimal) - count(shrunk, std::move(colon));
    };
    return {true, count(bound, std::move(start))};
}

CrosscheckReport oracle_crosscheck(const FreeComplex& C, std::size_t i, std::string label, std::int64_t window) {
    CrosscheckReport rep;
    rep.label = std::move(label);
    rep.spot = i;
    auto h = homology_length(C, i);
    rep.finite = h.finite;
    rep.gb_length = h.length;
    if (!h.finite) return rep;
    const auto& S = *C.ring()->descriptor();
    if (window < 0) {
        std::int64_t w = 1;
        for (std::size_t j = 0; j < S.nvars(); ++j) w = std::max<std::int64_t>(w, S.weights()[j]);
        window = w + 1;
    }
    std::int64_t top = h.top_degree.value_or(0);
    if (i <= C.length() && C.rank(i) > 0)
        top = std::max(top, *std::max_element(C.shifts(i).begin(), C.shifts(i).end()));
    rep.degree_bound = top + window;
    auto dense = dense_degreewise_homology(C, i, rep.degree_bound);
    rep.oracle_length = dense.total;

    std::map<std::int64_t, std::int64_t> gb;
    if (h.low_degree)
        for (std::size_t k = 0; k < h.hilbert_function.size(); ++k)
            if (h.hilbert_function[k]) gb[*h.low_degree + static_cast<std::int64_t>(k)] = h.hilbert_function[k];
    std::map<std::int64_t, std::int64_t> all_degrees;
    for (auto [t, v] : gb) all_degrees[t] = 0;
    for (auto [t, v] : dense.by_degree) all_degrees[t] = 0;
    for (auto [t, unused] : all_degrees) {
        const std::int64_t a = gb.count(t) ? gb[t] : 0;
        const std::int64_t b = dense.by_degree.count(t) ? static_cast<std::int64_t>(dense.by_degree[t]) : 0;
        if (a != b) rep.diff.emplace_back(t, a, b);
    }
    rep.match = rep.diff.empty() && rep.gb_length == rep.oracle_length;
    return rep;
}

}  // namespace frobtor
