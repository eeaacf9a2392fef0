#include "frobtor/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "frobtor/errors.hpp"
#include "groebner_engine.hpp"

namespace frobtor {

using detail::compare_terms;

// ---------------------------------------------------------------- VectorElement

VectorElement VectorElement::from_components(RingPtr ring, std::span<const Polynomial> components) {
    VectorElement v(ring, components.size());
    for (std::size_t pos = 0; pos < components.size(); ++pos) {
        if (!same_ring(ring, components[pos].ring())) throw DescriptorMismatch();
        for (const auto& t : components[pos].terms())
            v.terms_.push_back({t.coeff, static_cast<std::uint32_t>(pos), t.mono});
    }
    return v;
}

VectorElement VectorElement::unit(RingPtr ring, std::size_t rank, std::size_t pos) {
    VectorElement v(std::move(ring), rank);
    v.terms_.push_back({1, static_cast<std::uint32_t>(pos), Monomial{}});
    return v;
}

VectorElement VectorElement::single(std::size_t rank, std::size_t pos, const Polynomial& f) {
    VectorElement v(f.ring(), rank);
    for (const auto& t : f.terms()) v.terms_.push_back({t.coeff, static_cast<std::uint32_t>(pos), t.mono});
    return v;
}

VectorElement VectorElement::from_sorted_terms(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms) {
    VectorElement v(std::move(ring), rank);
    v.terms_ = std::move(terms);
    return v;
}

Polynomial VectorElement::component(std::size_t pos) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.pos == pos) out.push_back({t.coeff, t.mono});
    return Polynomial::from_sorted_terms(ring_, std::move(out));
}

std::vector<Polynomial> VectorElement::components() const {
    std::vector<std::vector<Term>> parts(rank_);
    for (const auto& t : terms_) parts[t.pos].push_back({t.coeff, t.mono});
    std::vector<Polynomial> out;
    out.reserve(rank_);
    for (auto& part : parts) out.push_back(Polynomial::from_sorted_terms(ring_, std::move(part)));
    return out;
}

void VectorElement::add_scaled(const VectorElement& g, const Monomial& m, std::uint32_t c) {
    if (!same_ring(ring_, g.ring_) || rank_ != g.rank_) throw DescriptorMismatch();
    if (g.is_zero() || c % ring_->characteristic() == 0) return;
    std::vector<ModuleTerm> out;
    detail::merge_scaled(*ring_, terms_.data(), terms_.data() + terms_.size(), g.terms_.data(),
                         g.terms_.data() + g.terms_.size(), m, c % ring_->characteristic(), out);
    terms_ = std::move(out);
}

VectorElement& VectorElement::operator+=(const VectorElement& g) {
    add_scaled(g, Monomial{}, 1);
    return *this;
}

VectorElement& VectorElement::operator-=(const VectorElement& g) {
    add_scaled(g, Monomial{}, ring_->characteristic() - 1);
    return *this;
}

VectorElement VectorElement::scaled(std::uint32_t c) const { return times(Monomial{}, c); }

VectorElement VectorElement::times(const Monomial& m, std::uint32_t c) const {
    VectorElement out(ring_, rank_);
    c %= ring_->characteristic();
    if (c == 0) return out;
    const auto& F = ring_->field();
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({F.mul(t.coeff, c), t.pos, product(t.mono, m)});
    return out;
}

VectorElement VectorElement::times(const Polynomial& f) const {
    if (!same_ring(ring_, f.ring())) throw DescriptorMismatch();
    VectorElement out(ring_, rank_);
    for (const auto& t : f.terms()) out.add_scaled(*this, t.mono, t.coeff);
    return out;
}

VectorElement VectorElement::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(lead().coeff));
}

VectorElement VectorElement::truncated(std::size_t count) const {
    VectorElement out(ring_, count);
    for (const auto& t : terms_)
        if (t.pos < count) out.terms_.push_back(t);
    return out;
}

std::optional<std::int64_t> VectorElement::degree(std::span<const std::int64_t> shifts) const {
    if (terms_.empty()) return std::nullopt;
    auto shift = [&](std::uint32_t pos) { return shifts.empty() ? std::int64_t{0} : shifts[pos]; };
    const auto d = terms_.front().mono.degree + shift(terms_.front().pos);
    for (const auto& t : terms_)
        if (t.mono.degree + shift(t.pos) != d) return std::nullopt;
    return d;
}

bool VectorElement::operator==(const VectorElement& other) const {
    if (!same_ring(ring_, other.ring_) || rank_ != other.rank_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& a = terms_[k];
        const auto& b = other.terms_[k];
        if (a.coeff != b.coeff || a.pos != b.pos || !(a.mono == b.mono)) return false;
    }
    return true;
}

std::string VectorElement::to_string() const {
    std::string out = "[";
    auto parts = components();
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k].to_string();
    return out + "]";
}

// ---------------------------------------------------------------- engine

namespace detail {

void merge_scaled(const RingDescriptor& R, const ModuleTerm* a, const ModuleTerm* a_end, const ModuleTerm* b,
                  const ModuleTerm* b_end, const Monomial& m, std::uint32_t c, std::vector<ModuleTerm>& out) {
    const auto& F = R.field();
    out.reserve(static_cast<std::size_t>((a_end - a) + (b_end - b)));
    if (b == b_end) {
        out.insert(out.end(), a, a_end);
        return;
    }
    ModuleTerm bt{F.mul(c, b->coeff), b->pos, product(b->mono, m)};
    while (a != a_end) {
        int cmp = compare_terms(R, a->pos, a->mono, bt.pos, bt.mono);
        if (cmp > 0) {
            out.push_back(*a++);
            continue;
        }
        if (cmp == 0) {
            auto s = F.add(a->coeff, bt.coeff);
            if (s != 0) out.push_back({s, a->pos, a->mono});
            ++a;
        } else {
            out.push_back(bt);
        }
        if (++b == b_end) break;
        bt = {F.mul(c, b->coeff), b->pos, product(b->mono, m)};
    }
    if (a != a_end) {
        out.insert(out.end(), a, a_end);
        return;
    }
    for (; b != b_end; ++b) out.push_back({F.mul(c, b->coeff), b->pos, product(b->mono, m)});
}

void LeadIndex::erase(std::size_t id, std::uint32_t pos) {
    auto& list = by_pos_[pos];
    list.erase(std::remove_if(list.begin(), list.end(), [id](const Entry& e) { return e.id == id; }), list.end());
}

std::optional<std::size_t> LeadIndex::find(std::uint32_t pos, const Monomial& m) const {
    if (pos >= by_pos_.size()) return std::nullopt;
    const auto& list = by_pos_[pos];
    if (list.empty()) return std::nullopt;
    const auto mask = m.divmask();
    for (const auto& e : list)
        if ((e.mask & ~mask) == 0 && divides(e.lead, m)) return e.id;
    return std::nullopt;
}

GroebnerEngine::GroebnerEngine(RingPtr ring, std::size_t rank, std::vector<std::int64_t> shifts,
                               std::size_t tag_rank)
    : ring_(std::move(ring)), rank_(rank), shifts_(std::move(shifts)), tag_rank_(tag_rank), index_(rank) {
    if (shifts_.empty()) shifts_.assign(rank_, 0);
    if (shifts_.size() != rank_) throw PreconditionError("shift count does not match module rank");
}

void GroebnerEngine::add_input(VectorElement v, std::optional<VectorElement> tag) {
    if (!same_ring(ring_, v.ring()) || v.rank() != rank_) throw DescriptorMismatch();
    if (v.is_zero()) return;
    if (tag_rank_ > 0 && !tag) throw PreconditionError("tag tracking requires a tag for every input");
    const auto& lt = v.lead();
    auto deg = degree_of(lt.pos, lt.mono);
    inputs_.emplace_back(std::move(v), std::move(tag));
    queue_.emplace(std::pair{deg, seq_++}, Item{inputs_.size() - 1, 0, true});
}

void GroebnerEngine::reduce(VectorElement& v, VectorElement* tag) const {
    auto lookup = [this](std::size_t id) {
        const auto& e = elements_[id];
        return std::pair<const VectorElement*, const VectorElement*>{&e.vec, e.tag ? &*e.tag : nullptr};
    };
    reduce_by(*ring_, index_, lookup, v, tag, nullptr);
}

void GroebnerEngine::run(std::optional<std::int64_t> max_degree) {
    const auto& F = ring_->field();
    while (!queue_.empty()) {
        auto it = queue_.begin();
        if (max_degree && it->first.first > *max_degree) break;
        Item item = it->second;
        queue_.erase(it);

        VectorElement v(ring_, rank_);
        std::optional<VectorElement> tag;
        if (item.input) {
            v = inputs_[item.i].first;
            tag = inputs_[item.i].second;
        } else {
            const auto& a = elements_[item.i];
            const auto& b = elements_[item.j];
            Monomial l = ring_->lcm(a.lead, b.lead);
            Monomial ma = quotient(l, a.lead);
            Monomial mb = quotient(l, b.lead);
            v = a.vec.times(ma);
            v.add_scaled(b.vec, mb, F.neg(1));
            if (tag_rank_ > 0) {
                tag = a.tag->times(ma);
                tag->add_scaled(*b.tag, mb, F.neg(1));
            }
        }
        reduce(v, tag ? &*tag : nullptr);
        if (!v.is_zero()) insert(std::move(v), std::move(tag));
    }
}

void GroebnerEngine::insert(VectorElement v, std::optional<VectorElement> tag) {
    const auto inv = ring_->field().inv(v.lead().coeff);
    v = v.scaled(inv);
    if (tag) *tag = tag->scaled(inv);
    const auto lead = v.lead().mono;
    const auto pos = v.lead().pos;
    elements_.push_back(Element{std::move(v), std::move(tag), lead, pos, false});
    update(elements_.size() - 1);
}

void GroebnerEngine::update(std::size_t h) {
    const auto& H = elements_[h];
    const bool ideal = rank_ == 1;
    const RingDescriptor& R = *ring_;

    std::vector<std::size_t> same;
    for (std::size_t g = 0; g < elements_.size(); ++g)
        if (g != h && elements_[g].active && elements_[g].pos == H.pos) same.push_back(g);

    std::vector<Monomial> lcms;
    lcms.reserve(same.size());
    for (auto g : same) lcms.push_back(R.lcm(H.lead, elements_[g].lead));

    // Chain criterion among the new pairs; coprime pairs are kept only to prune others.
    std::vector<std::size_t> kept;  // indices into `same`
    for (std::size_t a = 0; a < same.size(); ++a) {
        bool keep = ideal && coprime(H.lead, elements_[same[a]].lead);
        if (!keep) {
            keep = true;
            for (std::size_t b = a + 1; b < same.size() && keep; ++b)
                if (divides(lcms[b], lcms[a])) keep = false;
            for (auto b : kept)
                if (keep && divides(lcms[b], lcms[a])) keep = false;
        }
        if (keep) kept.push_back(a);
    }

    // Prune old pairs whose lcm is divisible by lead(h) without sharing an lcm with h.
    for (auto it = queue_.begin(); it != queue_.end();) {
        const Item& item = it->second;
        if (!item.input && elements_[item.i].pos == H.pos) {
            const auto& a = elements_[item.i];
            const auto& b = elements_[item.j];
            Monomial l = R.lcm(a.lead, b.lead);
            if (divides(H.lead, l) && !(R.lcm(a.lead, H.lead) == l) && !(R.lcm(H.lead, b.lead) == l)) {
                it = queue_.erase(it);
                continue;
            }
        }
        ++it;
    }

    for (auto a : kept) {
        const auto g = same[a];
        if (ideal && coprime(H.lead, elements_[g].lead)) continue;
        queue_.emplace(std::pair{degree_of(H.pos, lcms[a]), seq_++}, Item{g, h, false});
    }

    for (auto g : same) {
        if (divides(H.lead, elements_[g].lead)) {
            elements_[g].active = false;
            index_.erase(g, elements_[g].pos);
        }
    }
    elements_[h].active = true;
    index_.insert(h, H.pos, H.lead);
}

TaggedBasis GroebnerEngine::finish() const {
    TaggedBasis out;
    for (const auto& e : elements_) {
        if (!e.active) continue;
        out.vecs.push_back(e.vec);
        if (tag_rank_ > 0) out.tags.push_back(*e.tag);
    }
    const bool tracked = tag_rank_ > 0;
    // Sort ascending by leading term so the result does not depend on discovery order.
    std::vector<std::size_t> order(out.vecs.size());
    std::iota(order.begin(), order.end(), 0);
    const RingDescriptor& R = *ring_;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ta = out.vecs[a].lead();
        const auto& tb = out.vecs[b].lead();
        return compare_terms(R, ta.pos, ta.mono, tb.pos, tb.mono) < 0;
    });
    TaggedBasis sorted;
    for (auto k : order) {
        sorted.vecs.push_back(std::move(out.vecs[k]));
        if (tracked) sorted.tags.push_back(std::move(out.tags[k]));
    }

    LeadIndex index(rank_);
    for (std::size_t k = 0; k < sorted.vecs.size(); ++k)
        index.insert(k, sorted.vecs[k].lead().pos, sorted.vecs[k].lead().mono);
    auto lookup = [&sorted](std::size_t id) {
        return std::pair<const VectorElement*, const VectorElement*>{&sorted.vecs[id], sorted.tag(id)};
    };
    const auto& F = R.field();
    for (std::size_t k = 0; k < sorted.vecs.size(); ++k) {
        auto& v = sorted.vecs[k];
        const ModuleTerm lead = v.lead();
        auto tail = VectorElement::from_sorted_terms(
            ring_, rank_, std::vector<ModuleTerm>(v.terms().begin() + 1, v.terms().end()));
        VectorElement tag_delta(ring_, tag_rank_);
        reduce_by(R, index, lookup, tail, tracked ? &tag_delta : nullptr, nullptr);
        std::vector<ModuleTerm> terms{lead};
        terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
        v = VectorElement::from_sorted_terms(ring_, rank_, std::move(terms));
        if (tracked) sorted.tags[k] += tag_delta;
    }
    (void)F;
    return sorted;
}

GroebnerBasis GroebnerEngine::basis() const {
    auto tb = finish();
    return GroebnerBasis{ring_, rank_, shifts_, std::move(tb.vecs), true};
}

}  // namespace detail

// ---------------------------------------------------------------- public API

bool GroebnerBasis::is_unit() const {
    for (const auto& g : generators)
        if (g.lead().mono.is_one()) return true;
    return false;
}

std::vector<std::pair<std::uint32_t, Monomial>> GroebnerBasis::leading_module() const {
    std::vector<std::pair<std::uint32_t, Monomial>> out;
    for (const auto& g : generators) out.emplace_back(g.lead().pos, g.lead().mono);
    return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials(std::size_t pos) const {
    std::vector<Monomial> out;
    for (const auto& g : generators)
        if (g.lead().pos == pos) out.push_back(g.lead().mono);
    return out;
}

GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, std::span<const VectorElement> gens,
                         std::span<const std::int64_t> shifts) {
    detail::GroebnerEngine engine(ring, rank, std::vector<std::int64_t>(shifts.begin(), shifts.end()));
    for (const auto& g : gens) engine.add_input(g);
    engine.run();
    return engine.basis();
}

GroebnerBasis ideal_basis(const RingPtr& ring, std::span<const Polynomial> gens) {
    std::vector<VectorElement> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) vs.push_back(VectorElement::single(1, 0, g));
    return buchberger(ring, 1, vs);
}

namespace {

detail::LeadIndex index_of_basis(const GroebnerBasis& G) {
    detail::LeadIndex index(G.rank);
    for (std::size_t k = 0; k < G.generators.size(); ++k)
        index.insert(k, G.generators[k].lead().pos, G.generators[k].lead().mono);
    return index;
}

}  // namespace

NormalForm normal_form(const VectorElement& v, const GroebnerBasis& G, bool with_quotients) {
    if (!same_ring(v.ring(), G.ring) || v.rank() != G.rank) throw DescriptorMismatch();
    auto index = index_of_basis(G);
    auto lookup = [&G](std::size_t id) {
        return std::pair<const VectorElement*, const VectorElement*>{&G.generators[id], nullptr};
    };
    NormalForm out{v, {}};
    std::vector<std::vector<Term>> q(with_quotients ? G.generators.size() : 0);
    detail::reduce_by(*G.ring, index, lookup, out.remainder, nullptr, with_quotients ? &q : nullptr);
    if (with_quotients)
        for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(G.ring, std::move(terms)));
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (G.rank != 1) throw PreconditionError("polynomial normal form needs an ideal basis");
    return normal_form(VectorElement::single(1, 0, f), G, false).remainder.component(0);
}

namespace {

// Schreyer syzygies of a monic basis; tag k is the image of e_k in the caller's coordinates.
std::vector<VectorElement> schreyer(const RingPtr& ring, const detail::TaggedBasis& B) {
    const RingDescriptor& R = *ring;
    const auto& F = R.field();
    const std::size_t s = B.vecs.size();
    const std::size_t rank = s ? B.vecs.front().rank() : 0;
    detail::LeadIndex index(rank);
    for (std::size_t k = 0; k < s; ++k) index.insert(k, B.vecs[k].lead().pos, B.vecs[k].lead().mono);
    auto lookup = [&B](std::size_t id) {
        return std::pair<const VectorElement*, const VectorElement*>{&B.vecs[id], B.tag(id)};
    };

    std::vector<VectorElement> out;
    for (std::size_t j = 0; j < s; ++j) {
        const auto& lj = B.vecs[j].lead();
        std::vector<std::pair<std::size_t, Monomial>> cands;
        for (std::size_t i = 0; i < j; ++i) {
            const auto& li = B.vecs[i].lead();
            if (li.pos != lj.pos) continue;
            cands.emplace_back(i, quotient(R.lcm(li.mono, lj.mono), lj.mono));
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            bool minimal = true;
            for (std::size_t b = 0; b < cands.size() && minimal; ++b) {
                if (b == a) continue;
                if (divides(cands[b].second, cands[a].second) &&
                    (!(cands[b].second == cands[a].second) || b < a))
                    minimal = false;
            }
            if (!minimal) continue;
            const auto i = cands[a].first;
            const auto& li = B.vecs[i].lead();
            Monomial l = R.lcm(li.mono, lj.mono);
            Monomial mi = quotient(l, li.mono);
            Monomial mj = cands[a].second;
            VectorElement v = B.vecs[i].times(mi);
            v.add_scaled(B.vecs[j], mj, F.neg(1));
            VectorElement tag = B.tag(i)->times(mi);
            tag.add_scaled(*B.tag(j), mj, F.neg(1));
            detail::reduce_by(R, index, lookup, v, &tag, nullptr);
            if (!v.is_zero()) throw InternalError("S-pair of a Groebner basis did not reduce to zero");
            if (!tag.is_zero()) out.push_back(std::move(tag));
        }
    }
    return out;
}

}  // namespace

std::vector<VectorElement> module_syzygies(const GroebnerBasis& G) {
    detail::TaggedBasis B;
    B.vecs = G.generators;
    for (std::size_t k = 0; k < G.generators.size(); ++k)
        B.tags.push_back(VectorElement::unit(G.ring, G.generators.size(), k));
    return schreyer(G.ring, B);
}

std::vector<VectorElement> syzygies(const RingPtr& ring, std::size_t rank, std::span<const VectorElement> gens,
                                    std::span<const std::int64_t> shifts) {
    const std::size_t m = gens.size();
    if (m == 0) return {};
    detail::GroebnerEngine engine(ring, rank, std::vector<std::int64_t>(shifts.begin(), shifts.end()), m);
    for (std::size_t k = 0; k < m; ++k) engine.add_input(gens[k], VectorElement::unit(ring, m, k));
    engine.run();
    auto B = engine.finish();
    auto out = schreyer(ring, B);

    detail::LeadIndex index(rank);
    for (std::size_t k = 0; k < B.vecs.size(); ++k) index.insert(k, B.vecs[k].lead().pos, B.vecs[k].lead().mono);
    auto lookup = [&B](std::size_t id) {
        return std::pair<const VectorElement*, const VectorElement*>{&B.vecs[id], B.tag(id)};
    };
    for (std::size_t k = 0; k < m; ++k) {
        VectorElement v = gens[k];
        VectorElement tag = VectorElement::unit(ring, m, k);
        detail::reduce_by(*ring, index, lookup, v, &tag, nullptr);
        if (!v.is_zero()) throw InternalError("generator not in the span of its own Groebner basis");
        if (!tag.is_zero()) out.push_back(std::move(tag));
    }
    return out;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
    const RingDescriptor& R = *G.ring;
    const auto& F = R.field();
    for (std::size_t j = 0; j < G.generators.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto& a = G.generators[i];
            const auto& b = G.generators[j];
            if (a.lead().pos != b.lead().pos) continue;
            Monomial l = R.lcm(a.lead().mono, b.lead().mono);
            VectorElement s = a.times(quotient(l, a.lead().mono), F.inv(a.lead().coeff));
            s.add_scaled(b, quotient(l, b.lead().mono), F.neg(F.inv(b.lead().coeff)));
            if (!normal_form(s, G).remainder.is_zero()) return false;
        }
    }
    return true;
}

KrullDimension krull_dimension(const GroebnerBasis& G) {
    if (G.rank != 1) throw PreconditionError("Krull dimension needs an ideal basis");
    if (G.is_unit()) return {-1, true};
    const std::size_t n = G.ring->nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& g : G.generators) {
        std::uint32_t s = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (g.lead().mono.exp[j] > 0) s |= 1u << j;
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t Y = 0; Y < (1u << n); ++Y) {
        int size = __builtin_popcount(Y);
        if (size <= best) continue;
        bool independent = true;
        for (auto s : supports)
            if ((s & ~Y) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return {best, false};
}

namespace {

// Slice recursion on the last variable: monomials outside the ideal are grouped by their exponent
// in x_{n-1}; the slice ideal only changes at exponents that occur among the generators.
std::uint64_t count_outside(std::vector<Monomial> gens, std::size_t n) {
    if (n == 0) return gens.empty() ? 1 : 0;
    const std::size_t v = n - 1;
    std::vector<std::int32_t> levels{0};
    std::int32_t bound = -1;
    for (const auto& g : gens) {
        levels.push_back(g.exp[v]);
        bool pure = true;
        for (std::size_t j = 0; j < v; ++j)
            if (g.exp[j] != 0) pure = false;
        if (pure && (bound < 0 || g.exp[v] < bound)) bound = g.exp[v];
    }
    if (bound < 0) throw InternalError("count_outside called on an infinite staircase");
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < levels.size() && levels[k] < bound; ++k) {
        const std::int32_t lo = levels[k];
        const std::int32_t hi = (k + 1 < levels.size()) ? std::min(levels[k + 1], bound) : bound;
        std::vector<Monomial> slice;
        for (const auto& g : gens) {
            if (g.exp[v] > lo) continue;
            Monomial s = g;
            s.exp[v] = 0;
            slice.push_back(s);
        }
        const std::uint64_t width = static_cast<std::uint64_t>(hi - lo);
        std::uint64_t inner = count_outside(std::move(slice), v);
        std::uint64_t add;
        if (__builtin_mul_overflow(width, inner, &add) || __builtin_add_overflow(total, add, &total))
            throw CapacityError("standard monomial count overflow");
    }
    return total;
}

}  // namespace

LengthCount count_standard_monomials(std::span<const Monomial> leading, std::size_t nvars) {
    for (const auto& m : leading)
        if (m.is_one()) return {true, 0};
    for (std::size_t j = 0; j < nvars; ++j) {
        bool has_pure = false;
        for (const auto& m : leading) {
            bool pure = m.exp[j] > 0;
            for (std::size_t k = 0; k < nvars && pure; ++k)
                if (k != j && m.exp[k] != 0) pure = false;
            if (pure) has_pure = true;
        }
        if (!has_pure) return {false, 0};
    }
    return {true, count_outside(std::vector<Monomial>(leading.begin(), leading.end()), nvars)};
}

LengthCount standard_monomial_count(const GroebnerBasis& G) {
    std::uint64_t total = 0;
    for (std::size_t pos = 0; pos < G.rank; ++pos) {
        auto leads = G.leading_monomials(pos);
        auto c = count_standard_monomials(leads, G.ring->nvars());
        if (!c.finite) return {false, 0};
        if (__builtin_add_overflow(total, c.count, &total)) throw CapacityError("standard monomial count overflow");
    }
    return {true, total};
}

}  // namespace frobtor
