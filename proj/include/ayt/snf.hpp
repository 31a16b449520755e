#pragma once

#include "field.hpp"

#include <gmpxx.h>
#include <vector>

namespace ayt {

using ZMat = std::vector<std::vector<mpz_class>>;

inline ZMat zmat(size_t r, size_t c) { return ZMat(r, std::vector<mpz_class>(c, 0)); }
inline ZMat zidentity(size_t n)
{
    ZMat m = zmat(n, n);
    for (size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}
inline ZMat zmul(const ZMat& a, const ZMat& b)
{
    size_t r = a.size(), m = b.size(), c = m ? b[0].size() : 0;
    ZMat out = zmat(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < m; ++k) {
            if (a[i][k] == 0)
                continue;
            for (size_t j = 0; j < c; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

struct SmithResult {
    std::vector<mpz_class> diag; /* d_1 | d_2 | ..., nonnegative */
    ZMat left, right;            /* left*A*right is diagonal(diag), both unimodular */
};

/* Smith normal form by elementary row/column operations (exact, GMP). */
inline SmithResult smith_normal_form(ZMat a)
{
    size_t r = a.size(), c = r ? a[0].size() : 0;
    SmithResult out;
    out.left = zidentity(r);
    out.right = zidentity(c);
    auto row_add = [&](size_t i, size_t j, const mpz_class& f) { /* row_i += f*row_j */
        for (size_t k = 0; k < c; ++k)
            a[i][k] += f * a[j][k];
        for (size_t k = 0; k < r; ++k)
            out.left[i][k] += f * out.left[j][k];
    };
    auto col_add = [&](size_t i, size_t j, const mpz_class& f) { /* col_i += f*col_j */
        for (size_t k = 0; k < r; ++k)
            a[k][i] += f * a[k][j];
        for (size_t k = 0; k < c; ++k)
            out.right[k][i] += f * out.right[k][j];
    };
    auto row_swap = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(out.left[i], out.left[j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t k = 0; k < r; ++k)
            std::swap(a[k][i], a[k][j]);
        for (size_t k = 0; k < c; ++k)
            std::swap(out.right[k][i], out.right[k][j]);
    };
    auto row_neg = [&](size_t i) {
        for (size_t k = 0; k < c; ++k)
            a[i][k] = -a[i][k];
        for (size_t k = 0; k < r; ++k)
            out.left[i][k] = -out.left[i][k];
    };

    size_t t = 0;
    while (t < r && t < c) {
        /* find pivot of least absolute value in the remaining block */
        size_t pi = r, pj = c;
        mpz_class best = 0;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < c; ++j)
                if (a[i][j] != 0) {
                    mpz_class v = abs(a[i][j]);
                    if (best == 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi == r)
            break;
        if (pi != t)
            row_swap(pi, t);
        if (pj != t)
            col_swap(pj, t);
        bool clean = true;
        for (size_t i = t + 1; i < r; ++i)
            if (a[i][t] != 0) {
                mpz_class q = a[i][t] / a[t][t]; /* truncated division keeps remainders small */
                if (q != 0)
                    row_add(i, t, -q);
                if (a[i][t] != 0)
                    clean = false;
            }
        for (size_t j = t + 1; j < c; ++j)
            if (a[t][j] != 0) {
                mpz_class q = a[t][j] / a[t][t];
                if (q != 0)
                    col_add(j, t, -q);
                if (a[t][j] != 0)
                    clean = false;
            }
        if (!clean)
            continue; /* smaller remainders appeared; pick a new pivot */
        /* enforce divisibility d_t | rest of the block */
        bool redo = false;
        for (size_t i = t + 1; i < r && !redo; ++i)
            for (size_t j = t + 1; j < c && !redo; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_add(t, i, 1);
                    redo = true;
                }
        if (redo)
            continue;
        if (a[t][t] < 0)
            row_neg(t);
        ++t;
    }
    for (size_t i = 0; i < std::min(r, c); ++i)
        out.diag.push_back(i < t ? a[i][i] : mpz_class(0));
    return out;
}

inline std::vector<long long> snf_diagonal(const ZMat& a)
{
    auto s = smith_normal_form(a);
    std::vector<long long> d;
    for (auto& x : s.diag)
        d.push_back(x.get_si());
    return d;
}

} // namespace ayt
