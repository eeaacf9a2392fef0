#include "frobtor/complex.hpp"

#include <algorithm>

#include "frobtor/errors.hpp"

namespace frobtor {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Polynomial::constant(ring, 1);
    return m;
}

Matrix Matrix::from_columns(RingPtr ring, std::size_t rows, std::span<const VectorElement> columns) {
    Matrix m(ring, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].rank() != rows) throw PreconditionError("column rank does not match row count");
        auto parts = columns[c].components();
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = std::move(parts[r]);
    }
    return m;
}

Matrix Matrix::from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(ring, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

VectorElement Matrix::column(std::size_t c) const {
    std::vector<Polynomial> parts;
    parts.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) parts.push_back(at(r, c));
    return VectorElement::from_components(ring_, parts);
}

std::vector<VectorElement> Matrix::columns() const {
    std::vector<VectorElement> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw PreconditionError("matrix shapes do not compose");
    if (!same_ring(ring_, other.ring_)) throw DescriptorMismatch();
    Matrix out(ring_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                if (!other.at(k, c).is_zero()) out.at(r, c) += a * other.at(k, c);
        }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& f : out.data_) f = -f;
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r ? "; " : "";
        for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + at(r, c).to_string();
    }
    return out + "]";
}

// ---------------------------------------------------------------- FreeComplex

FreeComplex::FreeComplex(QuotientRingPtr ring, std::vector<std::int64_t> shifts0)
    : ring_(std::move(ring)), shifts_{std::move(shifts0)} {}

FreeComplex FreeComplex::from_differentials(QuotientRingPtr ring, std::vector<Matrix> differentials,
                                            std::vector<std::int64_t> shifts0,
                                            std::vector<std::vector<std::int64_t>> shifts) {
    if (!shifts.empty() && shifts.size() != differentials.size() + 1)
        throw PreconditionError("shift list must cover every module of the complex");
    if (shifts.empty()) {
        const std::size_t r0 = differentials.empty() ? shifts0.size() : differentials.front().rows();
        if (shifts0.empty()) shifts0.assign(r0, 0);
        if (shifts0.size() != r0) throw PreconditionError("G_0 shift count does not match rank");
    } else {
        shifts0 = shifts.front();
    }
    FreeComplex C(ring, shifts0);
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        auto& d = differentials[i];
        if (!same_ring(d.ring(), ring->descriptor())) throw DescriptorMismatch();
        if (d.rows() != C.rank(i)) throw PreconditionError("differential shapes do not chain");
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c) d.at(r, c) = ring->reduce(d.at(r, c));
        std::vector<std::int64_t> col_shifts;
        if (!shifts.empty()) {
            col_shifts = shifts[i + 1];
            if (col_shifts.size() != d.cols()) throw PreconditionError("shift count does not match rank");
        } else {
            const auto& prev = C.shifts_.back();
            for (std::size_t c = 0; c < d.cols(); ++c) {
                std::int64_t s = 0;
                for (std::size_t r = 0; r < d.rows(); ++r) {
                    const auto& f = d.at(r, c);
                    if (f.is_zero()) continue;
                    if (auto deg = f.weighted_degree()) {
                        s = *deg + prev[r];
                        break;
                    }
                }
                col_shifts.push_back(s);
            }
        }
        C.append(std::move(d), std::move(col_shifts));
    }
    return C;
}

std::vector<std::size_t> FreeComplex::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& s : shifts_) out.push_back(s.size());
    return out;
}

void FreeComplex::append(Matrix differential, std::vector<std::int64_t> shifts) {
    if (differential.rows() != shifts_.back().size() || differential.cols() != shifts.size())
        throw PreconditionError("appended differential has the wrong shape");
    differentials_.push_back(std::move(differential));
    shifts_.push_back(std::move(shifts));
}

FreeComplex FreeComplex::base_change(QuotientRingPtr target) const {
    if (!same_ring(target->descriptor(), ring_->descriptor())) throw DescriptorMismatch();
    std::vector<std::vector<std::int64_t>> shifts = shifts_;
    return from_differentials(std::move(target), differentials_, {}, std::move(shifts));
}

// ---------------------------------------------------------------- ChainMap

Matrix ChainMap::map(std::size_t i) const {
    if (i < maps.size()) return maps[i];
    return Matrix(target.ring()->descriptor(), target.rank(i), source.rank(i));
}

namespace {

bool zero_mod(const QuotientRing& R, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!R.is_zero(m.at(r, c))) return false;
    return true;
}

Matrix zero_matrix(const FreeComplex& C, std::size_t rows, std::size_t cols) {
    return Matrix(C.ring()->descriptor(), rows, cols);
}

// ∂_i, or the zero map of the right shape outside 1..L.
Matrix differential_or_zero(const FreeComplex& C, std::size_t i) {
    if (i >= 1 && i <= C.length()) return C.d(i);
    return zero_matrix(C, i == 0 ? 0 : C.rank(i - 1), C.rank(i));
}

}  // namespace

bool ChainMap::commutes() const {
    const auto& R = *target.ring();
    const std::size_t top = std::max(source.length(), target.length());
    for (std::size_t i = 1; i <= top; ++i) {
        Matrix lhs = differential_or_zero(target, i) * map(i);
        Matrix rhs = map(i - 1) * differential_or_zero(source, i);
        for (std::size_t r = 0; r < lhs.rows(); ++r)
            for (std::size_t c = 0; c < lhs.cols(); ++c)
                if (!R.is_zero(lhs.at(r, c) - rhs.at(r, c))) return false;
    }
    return true;
}

ChainMap ChainMap::identity(const FreeComplex& C) {
    ChainMap alpha{C, C, {}};
    for (std::size_t i = 0; i <= C.length(); ++i) alpha.maps.push_back(Matrix::identity(C.ring()->descriptor(), C.rank(i)));
    return alpha;
}

// ---------------------------------------------------------------- constructions

FreeComplex koszul_complex(const QuotientRingPtr& ring, std::span<const Polynomial> elements) {
    const auto& S = ring->descriptor();
    const std::size_t n = elements.size();
    if (n > 20) throw CapacityError("Koszul complex on more than 20 elements");
    std::vector<Polynomial> f;
    std::vector<std::int64_t> deg;
    for (const auto& e : elements) {
        auto r = ring->reduce(e);
        if (e.constant_term() != 0) throw PreconditionError("Koszul elements must lie in the maximal ideal");
        deg.push_back(r.is_zero() ? 0 : r.weighted_degree().value_or(0));
        f.push_back(std::move(r));
    }
    // Subsets of size i in lexicographic order.
    std::vector<std::vector<std::uint32_t>> by_size(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    for (auto& list : by_size)
        std::sort(list.begin(), list.end(), [n](std::uint32_t a, std::uint32_t b) {
            for (std::size_t j = 0; j < n; ++j) {
                bool ia = a >> j & 1, ib = b >> j & 1;
                if (ia != ib) return ia;
            }
            return false;
        });
    auto shift_of = [&](std::uint32_t mask) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1) s += deg[j];
        return s;
    };
    FreeComplex C(ring, {0});
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& rows = by_size[i - 1];
        const auto& cols = by_size[i];
        Matrix d(S, rows.size(), cols.size());
        std::vector<std::int64_t> shifts;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto T = cols[c];
            shifts.push_back(shift_of(T));
            int k = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(T >> j & 1)) continue;
                const auto sub = T & ~(1u << j);
                const auto r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), sub) - rows.begin());
                d.at(r, c) = (k % 2 == 0) ? f[j] : -f[j];
                ++k;
            }
        }
        C.append(std::move(d), std::move(shifts));
    }
    return C;
}

FreeComplex mapping_cone(const ChainMap& alpha) {
    const auto& T = alpha.target;
    const auto& Src = alpha.source;
    if (!same_ring(T.ring()->descriptor(), Src.ring()->descriptor())) throw DescriptorMismatch();
    if (!alpha.commutes()) throw PreconditionError("mapping cone needs a chain map that commutes");
    const auto& S = T.ring()->descriptor();
    const std::size_t L = std::max(T.length(), Src.length() + 1);

    auto module_shifts = [&](std::size_t i) {
        std::vector<std::int64_t> s;
        if (i <= T.length()) s = T.shifts(i);
        if (i >= 1 && i - 1 <= Src.length()) {
            const auto& extra = Src.shifts(i - 1);
            s.insert(s.end(), extra.begin(), extra.end());
        }
        return s;
    };

    FreeComplex cone(T.ring(), module_shifts(0));
    for (std::size_t i = 1; i <= L; ++i) {
        const std::size_t t_rows = T.rank(i - 1);
        const std::size_t s_rows = i >= 2 ? Src.rank(i - 2) : 0;
        const std::size_t t_cols = T.rank(i);
        const std::size_t s_cols = Src.rank(i - 1);
        Matrix d(S, t_rows + s_rows, t_cols + s_cols);
        if (i <= T.length()) {
            const auto& dt = T.d(i);
            for (std::size_t r = 0; r < t_rows; ++r)
                for (std::size_t c = 0; c < t_cols; ++c) d.at(r, c) = dt.at(r, c);
        }
        const Matrix a = alpha.map(i - 1);
        for (std::size_t r = 0; r < t_rows; ++r)
            for (std::size_t c = 0; c < s_cols; ++c) d.at(r, t_cols + c) = a.at(r, c);
        if (i >= 2 && i - 1 <= Src.length()) {
            const auto& ds = Src.d(i - 1);
            for (std::size_t r = 0; r < s_rows; ++r)
                for (std::size_t c = 0; c < s_cols; ++c) d.at(t_rows + r, t_cols + c) = -ds.at(r, c);
        }
        cone.append(std::move(d), module_shifts(i));
    }
    return cone;
}

ComplexReport verify_complex(const FreeComplex& C) {
    ComplexReport report;
    const auto& R = *C.ring();
    for (std::size_t i = 2; i <= C.length(); ++i) {
        if (!zero_mod(R, C.d(i - 1) * C.d(i))) {
            report.is_complex = false;
            report.failures.push_back("d" + std::to_string(i - 1) + "*d" + std::to_string(i) + " is not zero mod I");
        }
    }
    for (std::size_t i = 1; i <= C.length(); ++i) {
        const auto& d = C.d(i);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c) {
                const auto f = R.reduce(d.at(r, c));
                if (f.is_zero()) continue;
                if (f.constant_term() != 0 && report.is_minimal) {
                    report.is_minimal = false;
                    report.failures.push_back("d" + std::to_string(i) + " has a unit entry at (" + std::to_string(r) +
                                              "," + std::to_string(c) + ")");
                }
                auto deg = f.weighted_degree();
                if ((!deg || *deg != C.shifts(i)[c] - C.shifts(i - 1)[r]) && report.homogeneous) {
                    report.homogeneous = false;
                    report.failures.push_back("d" + std::to_string(i) + " entry (" + std::to_string(r) + "," +
                                              std::to_string(c) + ") does not match the basis shifts");
                }
            }
    }
    return report;
}

}  // namespace frobtor
