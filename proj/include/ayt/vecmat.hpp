#pragma once

#include "field.hpp"

#include <optional>
#include <vector>

namespace ayt {

template <class K> using Vec = std::vector<K>;

/* Dense row-major matrix over an exact field. Acts on column vectors:
 * (A*x)_i = sum_j A(i,j) x_j, so "f then g" has matrix G*F. */
template <class K> class Matrix {
  public:
    Matrix() : r_(0), c_(0) {}
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::vector<K> data) : r_(rows), c_(cols), d_(std::move(data))
    {
        AYT_CHECK(d_.size() == r_ * c_, "matrix: data size mismatch");
    }

    static Matrix identity(size_t n)
    {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = K(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    K& at(size_t i, size_t j) { return d_[i * c_ + j]; }
    const K& at(size_t i, size_t j) const { return d_[i * c_ + j]; }
    const std::vector<K>& data() const { return d_; }
    void bind(const FieldSpec& f)
    {
        for (auto& x : d_)
            x = bind_scalar(x, f);
    }

    bool is_zero() const
    {
        for (auto& x : d_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        AYT_CHECK(a.c_ == b.r_, "matrix product: dimension mismatch");
        Matrix out(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const K& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (size_t j = 0; j < b.c_; ++j)
                    out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }
    friend Vec<K> operator*(const Matrix& a, const Vec<K>& x)
    {
        AYT_CHECK(a.c_ == x.size(), "matrix-vector: dimension mismatch");
        Vec<K> out(a.r_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t j = 0; j < a.c_; ++j)
                if (!a.at(i, j).is_zero())
                    out[i] += a.at(i, j) * x[j];
        return out;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        AYT_CHECK(a.r_ == b.r_ && a.c_ == b.c_, "matrix sum: dimension mismatch");
        Matrix out = a;
        for (size_t i = 0; i < out.d_.size(); ++i)
            out.d_[i] += b.d_[i];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        AYT_CHECK(a.r_ == b.r_ && a.c_ == b.c_, "matrix diff: dimension mismatch");
        Matrix out = a;
        for (size_t i = 0; i < out.d_.size(); ++i)
            out.d_[i] -= b.d_[i];
        return out;
    }
    Matrix operator-() const
    {
        Matrix out = *this;
        for (auto& x : out.d_)
            x = -x;
        return out;
    }
    friend Matrix operator*(const K& c, const Matrix& a)
    {
        Matrix out = a;
        for (auto& x : out.d_)
            x = c * x;
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        if (a.r_ != b.r_ || a.c_ != b.c_)
            return false;
        for (size_t i = 0; i < a.d_.size(); ++i)
            if (a.d_[i] != b.d_[i])
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix out(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j)
                out.at(j, i) = at(i, j);
        return out;
    }

    Vec<K> row(size_t i) const
    {
        Vec<K> out(c_);
        for (size_t j = 0; j < c_; ++j)
            out[j] = at(i, j);
        return out;
    }
    Vec<K> col(size_t j) const
    {
        Vec<K> out(r_);
        for (size_t i = 0; i < r_; ++i)
            out[i] = at(i, j);
        return out;
    }
    void set_col(size_t j, const Vec<K>& v)
    {
        for (size_t i = 0; i < r_; ++i)
            at(i, j) = v[i];
    }

    Matrix submatrix(size_t i0, size_t j0, size_t nr, size_t nc) const
    {
        Matrix out(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j)
                out.at(i, j) = at(i0 + i, j0 + j);
        return out;
    }
    void set_block(size_t i0, size_t j0, const Matrix& b)
    {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j)
                at(i0 + i, j0 + j) = b.at(i, j);
    }

    static Matrix from_cols(size_t nrows, const std::vector<Vec<K>>& cols)
    {
        Matrix out(nrows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            AYT_CHECK(cols[j].size() == nrows, "from_cols: length mismatch");
            out.set_col(j, cols[j]);
        }
        return out;
    }
    static Matrix from_rows(size_t ncols, const std::vector<Vec<K>>& rows)
    {
        Matrix out(rows.size(), ncols);
        for (size_t i = 0; i < rows.size(); ++i) {
            AYT_CHECK(rows[i].size() == ncols, "from_rows: length mismatch");
            for (size_t j = 0; j < ncols; ++j)
                out.at(i, j) = rows[i][j];
        }
        return out;
    }

  private:
    size_t r_, c_;
    std::vector<K> d_;
};

template <class K> Vec<K> vec_add(Vec<K> a, const Vec<K>& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}
template <class K> Vec<K> vec_sub(Vec<K> a, const Vec<K>& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}
template <class K> Vec<K> vec_scale(const K& c, Vec<K> a)
{
    for (auto& x : a)
        x = c * x;
    return a;
}
template <class K> bool vec_is_zero(const Vec<K>& a)
{
    for (auto& x : a)
        if (!x.is_zero())
            return false;
    return true;
}
template <class K> Vec<K> unit_vec(size_t n, size_t i)
{
    Vec<K> v(n);
    v[i] = K(1);
    return v;
}
template <class K> void bind_vec(Vec<K>& v, const FieldSpec& f)
{
    for (auto& x : v)
        x = bind_scalar(x, f);
}

/* Incrementally maintained row space in reduced echelon form with
 * first-nonzero (leftmost) pivoting. Optionally tracks how each stored row
 * was expressed in the inserted generators (coordinate tail). */
template <class K> class RowSpan {
  public:
    explicit RowSpan(size_t width, bool track = false) : w_(width), track_(track), ngen_(0) {}

    size_t width() const { return w_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<Vec<K>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return piv_; }
    const std::vector<Vec<K>>& coords() const { return coords_; }

    /* Reduce v against the span; returns the residue (and the expression of
     * the removed part in the generators, if tracking). */
    Vec<K> residue(Vec<K> v, Vec<K>* expr = nullptr) const
    {
        if (expr)
            expr->assign(ngen_, K(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[piv_[r]];
            if (c.is_zero())
                continue;
            K f = c;
            for (size_t j = piv_[r]; j < w_; ++j)
                v[j] -= f * rows_[r][j];
            if (expr && track_)
                for (size_t g = 0; g < ngen_; ++g)
                    (*expr)[g] += f * coords_[r][g];
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return vec_is_zero(residue(v)); }

    /* Insert a generator; returns true if it enlarged the span. */
    bool insert(Vec<K> v)
    {
        Vec<K> e;
        if (track_) {
            e.assign(ngen_ + 1, K(0));
            e[ngen_] = K(1);
        }
        ++ngen_;
        for (auto& c : coords_)
            c.push_back(K(0));
        Vec<K> expr(track_ ? ngen_ : 0, K(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[piv_[r]];
            if (c.is_zero())
                continue;
            K f = c;
            for (size_t j = piv_[r]; j < w_; ++j)
                v[j] -= f * rows_[r][j];
            if (track_)
                for (size_t g = 0; g < ngen_; ++g)
                    e[g] -= f * coords_[r][g];
        }
        size_t p = w_;
        for (size_t j = 0; j < w_; ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p == w_)
            return false;
        K inv = v[p].inv();
        for (size_t j = p; j < w_; ++j)
            v[j] = inv * v[j];
        if (track_)
            for (auto& x : e)
                x = inv * x;
        /* back-substitute into existing rows to keep reduced form */
        for (size_t r = 0; r < rows_.size(); ++r) {
            const K& c = rows_[r][p];
            if (c.is_zero())
                continue;
            K f = c;
            for (size_t j = p; j < w_; ++j)
                rows_[r][j] -= f * v[j];
            if (track_)
                for (size_t g = 0; g < ngen_; ++g)
                    coords_[r][g] -= f * e[g];
        }
        size_t pos = 0;
        while (pos < piv_.size() && piv_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        piv_.insert(piv_.begin() + pos, p);
        if (track_)
            coords_.insert(coords_.begin() + pos, std::move(e));
        return true;
    }

    /* Express v in the span as combination of stored rows; nullopt if outside. */
    std::optional<Vec<K>> solve_in_span(Vec<K> v) const
    {
        Vec<K> sol(rows_.size(), K(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[piv_[r]];
            if (c.is_zero())
                continue;
            K f = c;
            sol[r] = f;
            for (size_t j = piv_[r]; j < w_; ++j)
                v[j] -= f * rows_[r][j];
        }
        if (!vec_is_zero(v))
            return std::nullopt;
        return sol;
    }

    /* Standard basis indices not used as pivots (a complement of the span). */
    std::vector<size_t> complement() const
    {
        std::vector<size_t> out;
        size_t r = 0;
        for (size_t j = 0; j < w_; ++j) {
            if (r < piv_.size() && piv_[r] == j)
                ++r;
            else
                out.push_back(j);
        }
        return out;
    }

  private:
    size_t w_;
    bool track_;
    size_t ngen_;
    std::vector<Vec<K>> rows_;
    std::vector<size_t> piv_;
    std::vector<Vec<K>> coords_;
};

/* rank via elimination */
template <class K> size_t rank(const Matrix<K>& a)
{
    RowSpan<K> sp(a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        sp.insert(a.row(i));
    return sp.dim();
}

/* Basis of { x : A x = 0 }, as columns. Deterministic: free variables are the
 * non-pivot columns in increasing order. */
template <class K> std::vector<Vec<K>> kernel_basis(const Matrix<K>& a)
{
    RowSpan<K> sp(a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        sp.insert(a.row(i));
    std::vector<Vec<K>> out;
    for (size_t f : sp.complement()) {
        Vec<K> x(a.cols(), K(0));
        x[f] = K(1);
        const auto& rows = sp.rows();
        const auto& piv = sp.pivots();
        for (size_t r = 0; r < rows.size(); ++r)
            x[piv[r]] = -rows[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

/* Solve A x = b exactly. */
template <class K> struct LinSolution {
    std::optional<Vec<K>> particular;
    std::vector<Vec<K>> kernel;
};

template <class K> LinSolution<K> solve_linear(const Matrix<K>& a, const Vec<K>& b)
{
    AYT_CHECK(a.rows() == b.size(), "solve_linear: dimension mismatch");
    /* eliminate on [A | b] */
    RowSpan<K> sp(a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        Vec<K> row = a.row(i);
        row.push_back(b[i]);
        sp.insert(std::move(row));
    }
    LinSolution<K> out;
    out.kernel = kernel_basis(a);
    bool consistent = true;
    for (size_t r = 0; r < sp.dim(); ++r)
        if (sp.pivots()[r] == a.cols())
            consistent = false;
    if (consistent) {
        Vec<K> x(a.cols(), K(0));
        const auto& rows = sp.rows();
        const auto& piv = sp.pivots();
        for (size_t r = 0; r < sp.dim(); ++r)
            x[piv[r]] = rows[r][a.cols()];
        out.particular = std::move(x);
    }
    return out;
}

/* Solve A X = B columnwise; nullopt if any column is inconsistent. */
template <class K>
std::optional<Matrix<K>> solve_matrix(const Matrix<K>& a, const Matrix<K>& b)
{
    AYT_CHECK(a.rows() == b.rows(), "solve_matrix: dimension mismatch");
    RowSpan<K> sp(a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        Vec<K> row = a.row(i);
        for (size_t j = 0; j < b.cols(); ++j)
            row.push_back(b.at(i, j));
        sp.insert(std::move(row));
    }
    for (size_t r = 0; r < sp.dim(); ++r)
        if (sp.pivots()[r] >= a.cols())
            return std::nullopt;
    Matrix<K> x(a.cols(), b.cols());
    const auto& rows = sp.rows();
    const auto& piv = sp.pivots();
    for (size_t r = 0; r < sp.dim(); ++r)
        for (size_t j = 0; j < b.cols(); ++j)
            x.at(piv[r], j) = rows[r][a.cols() + j];
    return x;
}

template <class K> std::optional<Matrix<K>> inverse(const Matrix<K>& a)
{
    if (a.rows() != a.cols())
        return std::nullopt;
    auto x = solve_matrix(a, Matrix<K>::identity(a.rows()));
    if (!x)
        return std::nullopt;
    if (rank(a) != a.rows())
        return std::nullopt;
    return x;
}

template <class K> bool is_invertible(const Matrix<K>& a)
{
    return a.rows() == a.cols() && rank(a) == a.rows();
}

template <class K> K det(Matrix<K> a)
{
    AYT_CHECK(a.rows() == a.cols(), "det: square matrices only");
    size_t n = a.rows();
    K d(1);
    for (size_t j = 0; j < n; ++j) {
        size_t piv = n;
        for (size_t i = j; i < n; ++i)
            if (!a.at(i, j).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n)
            return K(0);
        if (piv != j) {
            for (size_t k = 0; k < n; ++k)
                std::swap(a.at(piv, k), a.at(j, k));
            d = -d;
        }
        d = d * a.at(j, j);
        K inv = a.at(j, j).inv();
        for (size_t i = j + 1; i < n; ++i) {
            if (a.at(i, j).is_zero())
                continue;
            K f = inv * a.at(i, j);
            for (size_t k = j; k < n; ++k)
                a.at(i, k) -= f * a.at(j, k);
        }
    }
    return d;
}

/* Intersection of two spans (vectors of common length). */
template <class K>
std::vector<Vec<K>> span_intersection(size_t width, const std::vector<Vec<K>>& u,
                                      const std::vector<Vec<K>>& v)
{
    /* x = U a = V b  <=>  [U | -V] (a,b)^T = 0 */
    Matrix<K> m(width, u.size() + v.size());
    for (size_t j = 0; j < u.size(); ++j)
        m.set_col(j, u[j]);
    for (size_t j = 0; j < v.size(); ++j) {
        Vec<K> c = v[j];
        for (auto& x : c)
            x = -x;
        m.set_col(u.size() + j, c);
    }
    std::vector<Vec<K>> out;
    RowSpan<K> dedup(width);
    for (auto& k : kernel_basis(m)) {
        Vec<K> x(width, K(0));
        for (size_t j = 0; j < u.size(); ++j)
            if (!k[j].is_zero())
                x = vec_add(std::move(x), vec_scale(k[j], u[j]));
        if (dedup.insert(x))
            out.push_back(std::move(x));
    }
    return out;
}

} // namespace ayt
