#pragma once

#include <optional>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

/// Dense matrix of exact rationals, row-major. Sizes here are tiny (graded
/// slices of finite-type algebras), so everything is plain Gaussian
/// elimination with first-nonzero pivoting. All routines are deterministic:
/// identical input bytes give identical output bytes.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Rational> row(int r) const;
    void set_row(int r, const std::vector<Rational>& v);
    void append_row(const std::vector<Rational>& v);

    RMatrix transposed() const;

    bool operator==(const RMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form in place; returns the pivot column indices.
std::vector<int> rref(RMatrix& m);

/// RREF with zero rows dropped: a canonical basis of the row space.
RMatrix row_space(const RMatrix& m);

int rank(const RMatrix& m);

/// Canonical basis of {x : m * x = 0} (columns of m index the unknowns).
/// One basis row per free column, in ascending free-column order.
RMatrix null_space(const RMatrix& m);

/// A particular solution of m * x = b with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RMatrix& m, const std::vector<Rational>& b);

/// Reduces v against the rows of an RREF matrix; the remainder is zero
/// exactly when v lies in the row space.
std::vector<Rational> reduce_against(const RMatrix& rref_rows, std::vector<Rational> v);

bool in_row_space(const RMatrix& rref_rows, const std::vector<Rational>& v);

/// Coordinates of v in terms of the rows of an RREF matrix, or nullopt when
/// v is outside the row space.
std::optional<std::vector<Rational>> coordinates_in(const RMatrix& rref_rows, const std::vector<Rational>& v);

bool is_zero_vector(const std::vector<Rational>& v);

}  // namespace rht
