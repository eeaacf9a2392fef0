#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtor/quotient_ring.hpp"

namespace frobtor {

/// Dense rows x cols matrix of polynomials, row-major.
class Matrix {
public:
    Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

    static Matrix identity(RingPtr ring, std::size_t n);
    /// Columns must all have rank `rows`.
    static Matrix from_columns(RingPtr ring, std::size_t rows, std::span<const VectorElement> columns);
    /// Row-major nested initializer, e.g. {{x, y}} for a 1x2 matrix.
    static Matrix from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Polynomial& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Polynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    VectorElement column(std::size_t c) const;
    std::vector<VectorElement> columns() const;

    bool is_zero() const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-() const;
    bool operator==(const Matrix& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> data_;
};

/// Left complex 0 <- G_0 <- G_1 <- ... <- G_L of graded free R-modules. d(i) = ∂_i : G_i -> G_{i-1}
/// is an r_{i-1} x r_i matrix whose entries are normal forms modulo I; shifts(i) holds the degrees
/// of the basis of G_i, so that entry (r, c) of ∂_i is homogeneous of degree shift_i[c] - shift_{i-1}[r].
class FreeComplex {
public:
    /// Single module G_0 (rank r0) with no differentials.
    FreeComplex(QuotientRingPtr ring, std::vector<std::int64_t> shifts0);
    /// Builds a complex from its differentials, reducing entries mod I. Column shifts are inferred
    /// from the first nonzero homogeneous entry of each column (0 for zero columns) unless given.
    /// A nonempty `shifts` lists G_0..G_L and overrides `shifts0`.
    static FreeComplex from_differentials(QuotientRingPtr ring, std::vector<Matrix> differentials,
                                          std::vector<std::int64_t> shifts0 = {},
                                          std::vector<std::vector<std::int64_t>> shifts = {});

    const QuotientRingPtr& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return shifts_.size() - 1; }
    std::size_t rank(std::size_t i) const { return i < shifts_.size() ? shifts_[i].size() : 0; }
    std::vector<std::size_t> ranks() const;
    const std::vector<std::int64_t>& shifts(std::size_t i) const { return shifts_.at(i); }
    /// ∂_i for 1 <= i <= length.
    const Matrix& d(std::size_t i) const { return differentials_.at(i - 1); }
    const std::vector<Matrix>& differentials() const noexcept { return differentials_; }

    /// Appends G_{L+1} with the given differential ∂_{L+1} and basis shifts.
    void append(Matrix differential, std::vector<std::int64_t> shifts);

    /// Same matrices viewed over another quotient of the same polynomial ring (entries re-reduced).
    FreeComplex base_change(QuotientRingPtr target) const;

private:
    QuotientRingPtr ring_;
    std::vector<std::vector<std::int64_t>> shifts_;
    std::vector<Matrix> differentials_;
};

/// Chain map α : source -> target; maps[i] is rank(target_i) x rank(source_i). Missing degrees are zero.
struct ChainMap {
    FreeComplex source;
    FreeComplex target;
    std::vector<Matrix> maps;

    /// α_i, or a zero matrix of the right shape.
    Matrix map(std::size_t i) const;
    /// ∂^target_i α_i == α_{i-1} ∂^source_i mod I for all i.
    bool commutes() const;
    static ChainMap identity(const FreeComplex& C);
};

/// Koszul complex on the given elements; basis e_T for |T| = i with subsets in lexicographic order
/// and ∂(e_T) = sum_k (-1)^k f_{T[k]} e_{T \ T[k]}.
FreeComplex koszul_complex(const QuotientRingPtr& ring, std::span<const Polynomial> elements);

/// Cone(α)_i = target_i ⊕ source_{i-1} with ∂ = [[∂^target, α], [0, -∂^source]].
FreeComplex mapping_cone(const ChainMap& alpha);

struct ComplexReport {
    bool is_complex = true;
    bool is_minimal = true;
    bool homogeneous = true;
    std::vector<std::string> failures;
};

ComplexReport verify_complex(const FreeComplex& C);

}  // namespace frobtor
