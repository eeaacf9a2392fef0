#pragma once

// Buchberger engine shared by the Groebner, syzygy and resolution code. Not part of the public API.

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "frobtor/groebner.hpp"

namespace frobtor::detail {

inline int compare_terms(const RingDescriptor& R, std::uint32_t pa, const Monomial& a, std::uint32_t pb,
                         const Monomial& b) noexcept {
    if (pa != pb) return pa < pb ? 1 : -1;
    auto c = R.compare(a, b);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

/// out = a + c * m * b over term ranges that are sorted descending.
void merge_scaled(const RingDescriptor& R, const ModuleTerm* a, const ModuleTerm* a_end, const ModuleTerm* b,
                  const ModuleTerm* b_end, const Monomial& m, std::uint32_t c, std::vector<ModuleTerm>& out);

/// Leading terms indexed by position for divisor lookup.
class LeadIndex {
public:
    explicit LeadIndex(std::size_t rank) : by_pos_(rank) {}

    void insert(std::size_t id, std::uint32_t pos, const Monomial& lead) {
        by_pos_[pos].push_back({lead, lead.divmask(), id});
    }
    void erase(std::size_t id, std::uint32_t pos);
    /// First inserted element whose leading monomial divides m.
    std::optional<std::size_t> find(std::uint32_t pos, const Monomial& m) const;

private:
    struct Entry {
        Monomial lead;
        std::uint32_t mask;
        std::size_t id;
    };
    std::vector<std::vector<Entry>> by_pos_;
};

/// A monic basis (optionally carrying tag vectors) that can reduce vectors.
struct TaggedBasis {
    std::vector<VectorElement> vecs;
    std::vector<VectorElement> tags;  ///< empty when untracked

    const VectorElement* tag(std::size_t k) const { return tags.empty() ? nullptr : &tags[k]; }
};

/// Fully reduces v by the elements in `index`; mirrors every step on `tag` and records quotient
/// terms per element id when requested.
template <class Lookup>
void reduce_by(const RingDescriptor& R, const LeadIndex& index, Lookup&& lookup, VectorElement& v,
               VectorElement* tag, std::vector<std::vector<Term>>* quotients);

class GroebnerEngine {
public:
    GroebnerEngine(RingPtr ring, std::size_t rank, std::vector<std::int64_t> shifts, std::size_t tag_rank = 0);

    /// Queues a generator; with tag tracking enabled the tag records it in input coordinates.
    void add_input(VectorElement v, std::optional<VectorElement> tag = std::nullopt);

    /// Processes queued inputs and S-pairs, stopping before the first item above max_degree.
    void run(std::optional<std::int64_t> max_degree = std::nullopt);

    /// Full reduction by the current active elements.
    void reduce(VectorElement& v, VectorElement* tag = nullptr) const;

    /// Interreduced copy of the current basis plus tags (when tracked).
    TaggedBasis finish() const;

    GroebnerBasis basis() const;

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<std::int64_t>& shifts() const noexcept { return shifts_; }

private:
    struct Element {
        VectorElement vec;
        std::optional<VectorElement> tag;
        Monomial lead;
        std::uint32_t pos;
        bool active;
    };
    struct Item {
        std::size_t i, j;  // j unused for inputs
        bool input;
    };

    std::int64_t degree_of(std::uint32_t pos, const Monomial& m) const { return m.degree + shifts_[pos]; }
    void insert(VectorElement v, std::optional<VectorElement> tag);
    void update(std::size_t h);

    RingPtr ring_;
    std::size_t rank_;
    std::vector<std::int64_t> shifts_;
    std::size_t tag_rank_;
    std::deque<Element> elements_;
    std::vector<std::pair<VectorElement, std::optional<VectorElement>>> inputs_;
    LeadIndex index_;
    std::map<std::pair<std::int64_t, std::uint64_t>, Item> queue_;
    std::uint64_t seq_ = 0;
};

template <class Lookup>
void reduce_by(const RingDescriptor& R, const LeadIndex& index, Lookup&& lookup, VectorElement& v,
               VectorElement* tag, std::vector<std::vector<Term>>* quotients) {
    if (v.is_zero()) return;
    const auto& F = R.field();
    const auto rank = v.rank();
    std::vector<ModuleTerm> cur = v.terms();
    std::vector<ModuleTerm> next;
    std::vector<ModuleTerm> rem;
    std::size_t idx = 0;
    while (idx < cur.size()) {
        const ModuleTerm t = cur[idx];
        auto hit = index.find(t.pos, t.mono);
        if (!hit) {
            rem.push_back(t);
            ++idx;
            continue;
        }
        auto [gvec, gtag] = lookup(*hit);
        const auto& gt = gvec->terms();
        Monomial m = quotient(t.mono, gt.front().mono);
        const std::uint32_t factor = gt.front().coeff == 1 ? t.coeff : F.mul(t.coeff, F.inv(gt.front().coeff));
        std::uint32_t c = F.neg(factor);
        next.clear();
        merge_scaled(R, cur.data() + idx + 1, cur.data() + cur.size(), gt.data() + 1, gt.data() + gt.size(), m, c,
                     next);
        std::swap(cur, next);
        idx = 0;
        if (tag && gtag) tag->add_scaled(*gtag, m, c);
        if (quotients) (*quotients)[*hit].push_back({factor, m});
    }
    v = VectorElement::from_sorted_terms(v.ring(), rank, std::move(rem));
}

}  // namespace frobtor::detail
