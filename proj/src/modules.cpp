#include "frobtor/modules.hpp"

#include <algorithm>
#include <numeric>

#include "frobtor/errors.hpp"
#include "groebner_engine.hpp"

namespace frobtor {

GroebnerBasis submodule_basis(const QuotientRing& R, std::size_t rank, std::span<const std::int64_t> shifts,
                              std::span<const VectorElement> gens) {
    std::vector<VectorElement> all(gens.begin(), gens.end());
    auto rel = R.relations(rank);
    all.insert(all.end(), rel.begin(), rel.end());
    return buchberger(R.descriptor(), rank, all, shifts);
}

std::vector<VectorElement> kernel_over_ring(const QuotientRing& R, const Matrix& D,
                                            std::span<const std::int64_t> row_shifts) {
    const auto& S = R.descriptor();
    const std::size_t cols = D.cols();
    if (cols == 0) return {};
    if (D.rows() == 0) {
        std::vector<VectorElement> out;
        for (std::size_t c = 0; c < cols; ++c) out.push_back(VectorElement::unit(S, cols, c));
        return out;
    }
    std::vector<VectorElement> gens = D.columns();
    auto rel = R.relations(D.rows());
    gens.insert(gens.end(), rel.begin(), rel.end());
    std::vector<std::int64_t> rs(row_shifts.begin(), row_shifts.end());
    if (rs.empty()) rs.assign(D.rows(), 0);
    auto syz = syzygies(S, D.rows(), gens, rs);
    std::vector<VectorElement> out;
    for (auto& v : syz) {
        auto k = R.reduce(v.truncated(cols));
        if (!k.is_zero()) out.push_back(std::move(k));
    }
    return out;
}

MinimalGenerators minimal_generators(const QuotientRing& R, std::size_t rank, std::span<const std::int64_t> shifts,
                                     std::span<const VectorElement> candidates) {
    const auto& S = R.descriptor();
    std::vector<std::int64_t> sh(shifts.begin(), shifts.end());
    if (sh.empty()) sh.assign(rank, 0);

    std::vector<std::pair<std::int64_t, std::size_t>> order;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (candidates[k].is_zero()) continue;
        auto deg = candidates[k].degree(sh);
        if (!deg) throw GradingError("module generator " + candidates[k].to_string() + " is not homogeneous");
        order.emplace_back(*deg, k);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    detail::GroebnerEngine engine(S, rank, sh);
    for (auto& r : R.relations(rank)) engine.add_input(std::move(r));

    MinimalGenerators out;
    for (const auto& [deg, k] : order) {
        engine.run(deg);
        VectorElement v = candidates[k];
        engine.reduce(v);
        if (v.is_zero()) continue;
        engine.add_input(v);
        out.gens.push_back(R.reduce(candidates[k]));
        out.degrees.push_back(deg);
    }
    return out;
}

}  // namespace frobtor
