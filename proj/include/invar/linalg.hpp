#ifndef INVAR_LINALG_HPP
#define INVAR_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "invar/poly.hpp"
#include "invar/util.hpp"

namespace invar {

// Dense matrix over an exact field, row major.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;
    size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(const F& fld, size_t r, size_t c) : rows(r), cols(c), a(r * c, fld.zero()) {}
    Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

template <class F>
struct LinSolveResult {
    bool consistent = false;
    std::vector<typename F::Elem> solution;    // a particular solution when consistent
    std::vector<typename F::Elem> farkas;      // y with y^T A = 0, y^T b != 0 otherwise
};

// Row-reduce [A | b]; deterministic first-nonzero pivoting. The row-operation
// transform is carried along so inconsistency comes out as an exact Farkas
// certificate.
template <class F>
LinSolveResult<F> solve_linear(const F& fld, const Matrix<F>& A,
                               const std::vector<typename F::Elem>& b)
{
    using Elem = typename F::Elem;
    require(b.size() == A.rows, "solve_linear: dimension mismatch");
    size_t m = A.rows, n = A.cols;
    Matrix<F> M = A;
    std::vector<Elem> rhs = b;
    // U tracks row operations: U * A_original = current M
    Matrix<F> U(fld, m, m);
    for (size_t i = 0; i < m; ++i)
        U.at(i, i) = fld.one();

    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = m;
        for (size_t i = row; i < m; ++i)
            if (!fld.is_zero(M.at(i, col))) {
                pr = i;
                break;
            }
        if (pr == m)
            continue;
        if (pr != row) {
            for (size_t j = 0; j < n; ++j)
                std::swap(M.at(pr, j), M.at(row, j));
            for (size_t j = 0; j < m; ++j)
                std::swap(U.at(pr, j), U.at(row, j));
            std::swap(rhs[pr], rhs[row]);
        }
        Elem inv = fld.inv(M.at(row, col));
        for (size_t j = col; j < n; ++j)
            M.at(row, j) = fld.mul(M.at(row, j), inv);
        for (size_t j = 0; j < m; ++j)
            U.at(row, j) = fld.mul(U.at(row, j), inv);
        rhs[row] = fld.mul(rhs[row], inv);
        for (size_t i = 0; i < m; ++i) {
            if (i == row || fld.is_zero(M.at(i, col)))
                continue;
            Elem f = M.at(i, col);
            for (size_t j = col; j < n; ++j)
                M.at(i, j) = fld.sub(M.at(i, j), fld.mul(f, M.at(row, j)));
            for (size_t j = 0; j < m; ++j)
                U.at(i, j) = fld.sub(U.at(i, j), fld.mul(f, U.at(row, j)));
            rhs[i] = fld.sub(rhs[i], fld.mul(f, rhs[row]));
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinSolveResult<F> out;
    for (size_t i = row; i < m; ++i) {
        if (!fld.is_zero(rhs[i])) {
            out.consistent = false;
            out.farkas.assign(m, fld.zero());
            for (size_t j = 0; j < m; ++j)
                out.farkas[j] = U.at(i, j);
            return out;
        }
    }
    out.consistent = true;
    out.solution.assign(n, fld.zero());
    for (size_t r = 0; r < pivot_col.size(); ++r)
        out.solution[pivot_col[r]] = rhs[r];
    return out;
}

// Basis of the null space of A.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& fld, const Matrix<F>& A)
{
    using Elem = typename F::Elem;
    size_t m = A.rows, n = A.cols;
    Matrix<F> M = A;
    std::vector<size_t> pivot_of_col(n, SIZE_MAX);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = m;
        for (size_t i = row; i < m; ++i)
            if (!fld.is_zero(M.at(i, col))) {
                pr = i;
                break;
            }
        if (pr == m)
            continue;
        if (pr != row)
            for (size_t j = 0; j < n; ++j)
                std::swap(M.at(pr, j), M.at(row, j));
        Elem inv = fld.inv(M.at(row, col));
        for (size_t j = col; j < n; ++j)
            M.at(row, j) = fld.mul(M.at(row, j), inv);
        for (size_t i = 0; i < m; ++i) {
            if (i == row || fld.is_zero(M.at(i, col)))
                continue;
            Elem f = M.at(i, col);
            for (size_t j = col; j < n; ++j)
                M.at(i, j) = fld.sub(M.at(i, j), fld.mul(f, M.at(row, j)));
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<std::vector<Elem>> basis;
    for (size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != SIZE_MAX)
            continue;
        std::vector<Elem> v(n, fld.zero());
        v[col] = fld.one();
        for (size_t c = 0; c < n; ++c) {
            if (pivot_of_col[c] == SIZE_MAX)
                continue;
            v[c] = fld.neg(M.at(pivot_of_col[c], col));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
size_t matrix_rank(const F& fld, Matrix<F> M)
{
    size_t m = M.rows, n = M.cols, row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = m;
        for (size_t i = row; i < m; ++i)
            if (!fld.is_zero(M.at(i, col))) {
                pr = i;
                break;
            }
        if (pr == m)
            continue;
        if (pr != row)
            for (size_t j = 0; j < n; ++j)
                std::swap(M.at(pr, j), M.at(row, j));
        typename F::Elem inv = fld.inv(M.at(row, col));
        for (size_t j = col; j < n; ++j)
            M.at(row, j) = fld.mul(M.at(row, j), inv);
        for (size_t i = row + 1; i < m; ++i) {
            if (fld.is_zero(M.at(i, col)))
                continue;
            typename F::Elem f = M.at(i, col);
            for (size_t j = col; j < n; ++j)
                M.at(i, j) = fld.sub(M.at(i, j), fld.mul(f, M.at(row, j)));
        }
        ++row;
    }
    return row;
}

// Rank of a matrix with polynomial entries via fraction-free Bareiss
// elimination; avoids rational-function arithmetic entirely.
template <class F>
size_t bareiss_rank(std::vector<std::vector<Polynomial<F>>> M)
{
    if (M.empty())
        return 0;
    size_t m = M.size(), n = M.front().size();
    const RingPtr<F>& ring = M.front().front().ring();
    Polynomial<F> prev = Polynomial<F>::constant(ring, ring->field().one());
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = m;
        for (size_t i = row; i < m; ++i)
            if (!M[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr == m)
            continue;
        if (pr != row)
            std::swap(M[pr], M[row]);
        for (size_t i = row + 1; i < m; ++i) {
            for (size_t j = col + 1; j < n; ++j) {
                Polynomial<F> num = M[row][col] * M[i][j] - M[i][col] * M[row][j];
                M[i][j] = num.is_zero() ? num : num.exact_div(prev);
            }
            M[i][col] = Polynomial<F>::zero(ring);
        }
        prev = M[row][col];
        ++row;
    }
    return row;
}

} // namespace invar

#endif
