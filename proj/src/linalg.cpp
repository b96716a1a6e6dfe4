#include "rht/linalg.hpp"

#include <stdexcept>

namespace rht {

std::string rational_str(const Rational& x) {
    return x.str();
}

std::vector<Rational> RMatrix::row(int r) const {
    std::vector<Rational> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void RMatrix::set_row(int r, const std::vector<Rational>& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void RMatrix::append_row(const std::vector<Rational>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("append_row: size mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

RMatrix RMatrix::transposed() const {
    RMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<int> rref(RMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) != 0) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        }
        const Rational lead = m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) /= lead;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RMatrix row_space(const RMatrix& m) {
    RMatrix work = m;
    const std::vector<int> pivots = rref(work);
    RMatrix out(static_cast<int>(pivots.size()), m.cols());
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
        for (int c = 0; c < m.cols(); ++c) out.at(i, c) = work.at(i, c);
    return out;
}

int rank(const RMatrix& m) {
    RMatrix work = m;
    return static_cast<int>(rref(work).size());
}

RMatrix null_space(const RMatrix& m) {
    RMatrix work = m;
    const std::vector<int> pivots = rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    RMatrix basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
            v[pivots[i]] = -work.at(i, f);
        basis.append_row(v);
    }
    if (basis.rows() == 0) basis = RMatrix(0, m.cols());
    return basis;
}

std::optional<std::vector<Rational>> solve(const RMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    RMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    const std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
        x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

std::vector<Rational> reduce_against(const RMatrix& rref_rows, std::vector<Rational> v) {
    for (int r = 0; r < rref_rows.rows(); ++r) {
        int pivot = -1;
        for (int c = 0; c < rref_rows.cols(); ++c) {
            if (rref_rows.at(r, c) != 0) { pivot = c; break; }
        }
        if (pivot < 0 || v[pivot] == 0) continue;
        const Rational f = v[pivot];
        for (int c = 0; c < rref_rows.cols(); ++c) v[c] -= f * rref_rows.at(r, c);
    }
    return v;
}

bool in_row_space(const RMatrix& rref_rows, const std::vector<Rational>& v) {
    return is_zero_vector(reduce_against(rref_rows, v));
}

std::optional<std::vector<Rational>> coordinates_in(const RMatrix& rref_rows, const std::vector<Rational>& v) {
    std::vector<Rational> coords(rref_rows.rows());
    std::vector<Rational> rest = v;
    for (int r = 0; r < rref_rows.rows(); ++r) {
        int pivot = -1;
        for (int c = 0; c < rref_rows.cols(); ++c) {
            if (rref_rows.at(r, c) != 0) { pivot = c; break; }
        }
        if (pivot < 0) continue;
        coords[r] = rest[pivot];
        if (coords[r] == 0) continue;
        for (int c = 0; c < rref_rows.cols(); ++c) rest[c] -= coords[r] * rref_rows.at(r, c);
    }
    if (!is_zero_vector(rest)) return std::nullopt;
    return coords;
}

bool is_zero_vector(const std::vector<Rational>& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace rht
