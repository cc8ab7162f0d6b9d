#ifndef TRUNCSYM_LINALG_HPP
#define TRUNCSYM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "truncsym/field.hpp"
#include "truncsym/partition.hpp"

namespace truncsym {

/* Coefficient rows of homogeneous symmetric polynomials of one degree
 * over a fixed ordered partition basis. */
template <class F>
struct GradedMatrix {
    using Elem = typename F::Elem;

    explicit GradedMatrix(F f) : field(std::move(f)) {}

    F field;
    std::size_t vars = 1;
    unsigned long long degree = 0;
    std::vector<Partition> column_basis;  // strictly increasing in grlex order
    std::vector<std::vector<Elem>> rows;

    std::size_t cols() const { return column_basis.size(); }

    void validate() const
    {
        for (std::size_t j = 1; j < column_basis.size(); ++j) {
            if (!grlex_less(column_basis[j - 1], column_basis[j]))
                throw std::invalid_argument("GradedMatrix: column basis out of order");
        }
        for (const Partition& la : column_basis) {
            if (la.weight() != degree || la.length() > vars)
                throw std::invalid_argument("GradedMatrix: column basis member off-degree");
        }
        for (const auto& row : rows) {
            if (row.size() != column_basis.size())
                throw std::invalid_argument("GradedMatrix: row length mismatch");
        }
    }
};

template <class F>
struct RowReduction {
    explicit RowReduction(GradedMatrix<F> m) : reduced(std::move(m)) {}

    /* Reduced row-echelon form; zero rows sink to the bottom. */
    GradedMatrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
    /* When requested: reduced.rows[i] = sum_j transform[i][j] * input.rows[j]. */
    std::vector<std::vector<typename F::Elem>> transform;
};

/* Gauss-Jordan elimination with deterministic pivoting: first nonzero
 * column, first candidate row. */
template <class F>
RowReduction<F> row_reduce(const GradedMatrix<F>& input, bool want_transform = false)
{
    using Elem = typename F::Elem;
    const F& field = input.field;
    const std::size_t nrows = input.rows.size();
    const std::size_t ncols = input.cols();

    RowReduction<F> out(input);
    auto& rows = out.reduced.rows;

    std::vector<std::vector<Elem>> tf;
    if (want_transform) {
        tf.assign(nrows, std::vector<Elem>(nrows, field.zero()));
        for (std::size_t i = 0; i < nrows; ++i)
            tf[i][i] = field.one();
    }

    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t pivot = r;
        while (pivot < nrows && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(rows[pivot], rows[r]);
        if (want_transform)
            std::swap(tf[pivot], tf[r]);

        if (!rows[r][col].is_one()) {
            const Elem inv = field.invert(rows[r][col]);
            for (std::size_t j = col; j < ncols; ++j)
                rows[r][j] = rows[r][j] * inv;
            if (want_transform) {
                for (std::size_t j = 0; j < nrows; ++j)
                    tf[r][j] = tf[r][j] * inv;
            }
        }
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][col].is_zero())
                continue;
            const Elem factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = rows[i][j] - factor * rows[r][j];
            if (want_transform) {
                for (std::size_t j = 0; j < nrows; ++j)
                    tf[i][j] = tf[i][j] - factor * tf[r][j];
            }
        }
        out.pivot_columns.push_back(col);
        ++r;
    }
    out.rank = r;
    out.transform = std::move(tf);
    return out;
}

/* Remainder of v after elimination against the reduced rows; empty
 * residue means v lies in the row space. */
template <class F>
std::vector<typename F::Elem> reduce_against(const std::vector<typename F::Elem>& v,
                                             const RowReduction<F>& red,
                                             std::vector<typename F::Elem>* combination = nullptr)
{
    if (v.size() != red.reduced.cols())
        throw std::invalid_argument("in_span: vector length " + std::to_string(v.size()) +
                                    " does not match column count " +
                                    std::to_string(red.reduced.cols()));
    std::vector<typename F::Elem> w = v;
    if (combination)
        combination->assign(red.rank, red.reduced.field.zero());
    for (std::size_t k = 0; k < red.rank; ++k) {
        const std::size_t col = red.pivot_columns[k];
        if (w[col].is_zero())
            continue;
        const typename F::Elem factor = w[col];
        const auto& row = red.reduced.rows[k];
        for (std::size_t j = col; j < w.size(); ++j)
            w[j] = w[j] - factor * row[j];
        if (combination)
            (*combination)[k] = factor;
    }
    return w;
}

template <class F>
bool is_zero_vector(const std::vector<typename F::Elem>& v, const F&)
{
    for (const auto& x : v) {
        if (!x.is_zero())
            return false;
    }
    return true;
}

template <class F>
bool in_span(const std::vector<typename F::Elem>& v, const RowReduction<F>& red)
{
    return is_zero_vector(reduce_against(v, red), red.reduced.field);
}

template <class F>
bool in_span(const std::vector<typename F::Elem>& v, const GradedMatrix<F>& M)
{
    return in_span(v, row_reduce(M));
}

/* Coefficients over the original rows of M reproducing v, when v lies in
 * the row space. */
template <class F>
std::optional<std::vector<typename F::Elem>> span_certificate(const std::vector<typename F::Elem>& v,
                                                              const GradedMatrix<F>& M)
{
    const RowReduction<F> red = row_reduce(M, /*want_transform=*/true);
    std::vector<typename F::Elem> over_reduced;
    if (!is_zero_vector(reduce_against(v, red, &over_reduced), M.field))
        return std::nullopt;
    std::vector<typename F::Elem> cert(M.rows.size(), M.field.zero());
    for (std::size_t k = 0; k < red.rank; ++k) {
        if (over_reduced[k].is_zero())
            continue;
        for (std::size_t j = 0; j < M.rows.size(); ++j)
            cert[j] = cert[j] + over_reduced[k] * red.transform[k][j];
    }
    return cert;
}

}  // namespace truncsym

#endif  // TRUNCSYM_LINALG_HPP
