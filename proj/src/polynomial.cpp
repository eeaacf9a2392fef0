#include "frobtor/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "frobtor/errors.hpp"

namespace frobtor {

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw DescriptorMismatch();
}

// Merge a + c*b for canonical term lists.
std::vector<Term> merge_axpy(const RingDescriptor& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                             std::uint32_t c) {
    const auto& F = ring.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto cmp = ring.compare(a[i].mono, b[j].mono);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({F.mul(c, b[j].coeff), b[j].mono});
            ++j;
        } else {
            auto s = F.add(a[i].coeff, F.mul(c, b[j].coeff));
            if (s != 0) out.push_back({s, a[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({F.mul(c, b[j].coeff), b[j].mono});
    return out;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    auto r = ring->field().reduce(c);
    if (r == 0) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {Term{r, Monomial{}}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    auto m = ring->variable(index);
    return Polynomial(std::move(ring), {Term{1, m}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff) {
    coeff %= ring->characteristic();
    if (coeff == 0) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {Term{coeff, m}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& R = *ring;
    std::sort(terms.begin(), terms.end(),
              [&R](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        t.coeff %= R.characteristic();
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = R.field().add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(t);
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms));
}

std::uint32_t Polynomial::constant_term() const noexcept {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

std::optional<std::int64_t> Polynomial::weighted_degree() const {
    if (terms_.empty()) throw UndefinedDegree();
    auto d = terms_.front().mono.degree;
    for (const auto& t : terms_)
        if (t.mono.degree != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->characteristic() - 1); }

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    require_same(ring_, g.ring_);
    terms_ = merge_axpy(*ring_, terms_, g.terms_, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    require_same(ring_, g.ring_);
    terms_ = merge_axpy(*ring_, terms_, g.terms_, ring_->characteristic() - 1);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) { return *this = *this * g; }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same(f.ring_, g.ring_);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    const auto& F = f.ring_->field();
    if (f.size() == 1) return g.times(f.lead().mono, f.lead().coeff);
    if (g.size() == 1) return f.times(g.lead().mono, g.lead().coeff);
    std::vector<Term> all;
    all.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_) all.push_back({F.mul(a.coeff, b.coeff), product(a.mono, b.mono)});
    return Polynomial::from_terms(f.ring_, std::move(all));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    const auto& F = ring_->field();
    c %= ring_->characteristic();
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff = F.mul(t.coeff, c);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times(const Monomial& m, std::uint32_t c) const {
    const auto& F = ring_->field();
    c %= ring_->characteristic();
    if (c == 0) return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({F.mul(t.coeff, c), product(t.mono, m)});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(lead().coeff));
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].coeff != other.terms_[k].coeff || !(terms_[k].mono == other.terms_[k].mono)) return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        if (t.mono.is_one()) {
            out += std::to_string(t.coeff);
        } else {
            if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
            out += ring_->to_string(t.mono);
        }
    }
    return out;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return f + g;
        case ArithKind::sub: return f - g;
        case ArithKind::mul: return f * g;
    }
    throw InternalError("unknown arithmetic kind");
}

std::uint64_t frobenius_q(std::uint32_t p, unsigned e) {
    std::uint64_t q = 1;
    for (unsigned k = 0; k < e; ++k) {
        q *= p;
        if (q > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
            throw CapacityError("p^e exceeds the exponent range");
    }
    return q;
}

Polynomial frobenius_power(const Polynomial& f, unsigned e) {
    const auto q = static_cast<std::int64_t>(frobenius_q(f.ring()->characteristic(), e));
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Term s{t.coeff, {}};
        for (std::size_t j = 0; j < kMaxVars; ++j) {
            std::int64_t x = t.mono.exp[j] * q;
            if (x > std::numeric_limits<std::int32_t>::max()) throw CapacityError("exponent overflow in Frobenius power");
            s.mono.exp[j] = static_cast<std::int32_t>(x);
        }
        if (__builtin_mul_overflow(t.mono.degree, q, &s.mono.degree)) throw CapacityError("degree overflow");
        out.push_back(s);
    }
    // Scaling exponents by q preserves both monomial orders, so the term list stays sorted.
    return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

Polynomial power(const Polynomial& f, std::uint64_t n) {
    Polynomial result = Polynomial::constant(f.ring(), 1);
    Polynomial base = f;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

namespace {

class PolyParser {
public:
    PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse() {
        skip_ws();
        if (pos_ == text_.size()) fail("empty polynomial");
        auto f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        auto f = term();
        for (;;) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    Polynomial term() {
        auto f = unary();
        while (accept('*')) f *= unary();
        return f;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return factor();
    }

    Polynomial factor() {
        auto base = atom();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a non-negative integer exponent");
            std::uint64_t n = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                n = n * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
                if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
                    throw CapacityError("exponent literal too large");
            }
            if (base.size() == 1) {
                const auto& t = base.lead();
                Monomial m;
                for (std::size_t j = 0; j < kMaxVars; ++j) {
                    std::int64_t x = static_cast<std::int64_t>(t.mono.exp[j]) * static_cast<std::int64_t>(n);
                    if (x > std::numeric_limits<std::int32_t>::max()) throw CapacityError("exponent overflow");
                    m.exp[j] = static_cast<std::int32_t>(x);
                }
                m.degree = ring_->weighted_degree(m);
                return Polynomial::monomial(ring_, m, ring_->field().pow(t.coeff, n));
            }
            return power(base, n);
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto p = static_cast<std::int64_t>(ring_->characteristic());
            std::int64_t value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                value = (value * 10 + (text_[pos_++] - '0')) % p;
            return Polynomial::constant(ring_, value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            int idx = ring_->index_of(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
    std::vector<Polynomial> out;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            out.push_back(parse_polynomial(ring, piece));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), 1, e.column() + static_cast<int>(start));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace frobtor
