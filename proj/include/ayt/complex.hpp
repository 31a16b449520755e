#pragma once

#include "modcat_ops.hpp"

#include <map>
#include <memory>

namespace ayt {

/* Fixed list of pairwise non-isomorphic indecomposables that complex terms
 * are built from (indecomposable projectives, or the summands of N for the
 * add(N)-complexes of the Auslander-Yoneda constructions). */
template <class K> struct SummandPool {
    AlgebraPtr<K> algebra;
    std::vector<FDModule<K>> mods;
    std::vector<std::string> names;
};
template <class K> using PoolPtr = std::shared_ptr<const SummandPool<K>>;

template <class K> PoolPtr<K> projective_pool(const AlgebraPtr<K>& a)
{
    auto pool = std::make_shared<SummandPool<K>>();
    pool->algebra = a;
    for (size_t i = 0; i < a->idem.size(); ++i) {
        pool->mods.push_back(projective_column(a, i));
        pool->names.push_back("P" + std::to_string(i + 1));
    }
    return pool;
}

template <class K> struct Term {
    std::vector<int> parts;      /* pool indices; may be empty when untagged */
    std::vector<size_t> offsets; /* block offsets, parts.size()+1 entries */
    FDModule<K> mod;

    bool tagged() const { return offsets.size() == parts.size() + 1; }
};

template <class K>
Term<K> make_term(const PoolPtr<K>& pool, const std::vector<int>& parts)
{
    Term<K> t;
    t.parts = parts;
    std::vector<const FDModule<K>*> ptrs;
    for (int p : parts)
        ptrs.push_back(&pool->mods[p]);
    if (parts.empty()) {
        t.mod = zero_module(pool->algebra);
        t.offsets = {0};
        return t;
    }
    auto ds = direct_sum(pool->algebra, ptrs);
    t.mod = std::move(ds.mod);
    t.offsets = std::move(ds.offsets);
    return t;
}

template <class K> Term<K> make_untagged_term(FDModule<K> m)
{
    Term<K> t;
    t.mod = std::move(m);
    return t;
}

/* Bounded cochain complex ... -> X^i -> X^(i+1) -> ...; diff[k] maps
 * terms[k] to terms[k+1]. Degree of terms[0] is lo. */
template <class K> struct Complex {
    AlgebraPtr<K> algebra;
    PoolPtr<K> pool; /* may be null */
    int lo = 0;
    std::vector<Term<K>> terms;
    std::vector<Matrix<K>> diff;

    int hi() const { return lo + (int)terms.size() - 1; } /* degree of last term */
    bool in_range(int d) const { return d >= lo && d <= hi(); }
    const Term<K>* term(int d) const { return in_range(d) ? &terms[d - lo] : nullptr; }
    size_t term_dim(int d) const
    {
        auto* t = term(d);
        return t ? t->mod.dim : 0;
    }
    const Matrix<K>* differential(int d) const
    { /* d: X^d -> X^(d+1) */
        if (d >= lo && d + 1 <= hi())
            return &diff[d - lo];
        return nullptr;
    }

    bool is_zero() const
    {
        for (auto& t : terms)
            if (t.mod.dim > 0)
                return false;
        return true;
    }

    void trim()
    {
        while (!terms.empty() && terms.front().mod.dim == 0) {
            terms.erase(terms.begin());
            if (!diff.empty())
                diff.erase(diff.begin());
            ++lo;
        }
        while (!terms.empty() && terms.back().mod.dim == 0) {
            terms.pop_back();
            if (!diff.empty())
                diff.pop_back();
        }
        if (terms.empty()) {
            lo = 0;
            diff.clear();
        }
    }

    void verify() const
    {
        for (size_t k = 0; k + 1 < terms.size(); ++k) {
            AYT_CHECK(diff[k].rows() == terms[k + 1].mod.dim &&
                          diff[k].cols() == terms[k].mod.dim,
                      "complex: differential shape mismatch");
            /* module map check */
            for (size_t g : algebra->generator_indices())
                AYT_CHECK(diff[k] * terms[k].mod.act[g] == terms[k + 1].mod.act[g] * diff[k],
                          "complex: differential is not a module map");
        }
        for (size_t k = 0; k + 2 < terms.size(); ++k)
            AYT_CHECK((diff[k + 1] * diff[k]).is_zero(), "complex: d^2 != 0");
    }
};

template <class K>
Complex<K> stalk_complex(const AlgebraPtr<K>& a, const PoolPtr<K>& pool, Term<K> t, int degree)
{
    Complex<K> x;
    x.algebra = a;
    x.pool = pool;
    x.lo = degree;
    x.terms.push_back(std::move(t));
    return x;
}

/* (X[n])^i = X^(i+n); differentials pick up the sign (-1)^n. */
template <class K> Complex<K> shift_complex(const Complex<K>& x, int n)
{
    Complex<K> y = x;
    y.lo = x.lo - n;
    if (n % 2 != 0)
        for (auto& d : y.diff)
            d = -d;
    return y;
}

/* brutal truncations */
template <class K> Complex<K> truncate_below(const Complex<K>& x, int i)
{ /* sigma_{<i}: keep degrees < i */
    Complex<K> y;
    y.algebra = x.algebra;
    y.pool = x.pool;
    y.lo = x.lo;
    for (int d = x.lo; d <= x.hi() && d < i; ++d) {
        y.terms.push_back(*x.term(d));
        if (d + 1 <= x.hi() && d + 1 < i)
            y.diff.push_back(*x.differential(d));
    }
    y.trim();
    return y;
}
template <class K> Complex<K> truncate_at_least(const Complex<K>& x, int i)
{ /* sigma_{>=i} */
    Complex<K> y;
    y.algebra = x.algebra;
    y.pool = x.pool;
    y.lo = std::max(x.lo, i);
    for (int d = y.lo; d <= x.hi(); ++d) {
        y.terms.push_back(*x.term(d));
        if (d + 1 <= x.hi())
            y.diff.push_back(*x.differential(d));
    }
    y.trim();
    return y;
}

template <class K> Complex<K> direct_sum_complex(const Complex<K>& x, const Complex<K>& y)
{
    AYT_CHECK(x.algebra.get() == y.algebra.get(), "complex sum: algebra mismatch");
    Complex<K> z;
    z.algebra = x.algebra;
    z.pool = x.pool ? x.pool : y.pool;
    if (x.is_zero() || x.terms.empty())
        return y;
    if (y.is_zero() || y.terms.empty())
        return x;
    z.lo = std::min(x.lo, y.lo);
    int hi = std::max(x.hi(), y.hi());
    for (int d = z.lo; d <= hi; ++d) {
        const Term<K>*tx = x.term(d), *ty = y.term(d);
        Term<K> t;
        std::vector<const FDModule<K>*> ptrs;
        if (tx) {
            ptrs.push_back(&tx->mod);
            t.parts.insert(t.parts.end(), tx->parts.begin(), tx->parts.end());
        }
        if (ty) {
            ptrs.push_back(&ty->mod);
            t.parts.insert(t.parts.end(), ty->parts.begin(), ty->parts.end());
        }
        auto ds = direct_sum(z.algebra, ptrs);
        t.mod = std::move(ds.mod);
        /* rebuild block offsets from both terms */
        t.offsets = {0};
        bool tagged = (!tx || tx->tagged()) && (!ty || ty->tagged());
        if (tagged) {
            size_t base = 0;
            if (tx) {
                for (size_t s = 0; s + 1 < tx->offsets.size(); ++s)
                    t.offsets.push_back(base + tx->offsets[s + 1]);
                base += tx->mod.dim;
            }
            if (ty)
                for (size_t s = 0; s + 1 < ty->offsets.size(); ++s)
                    t.offsets.push_back(base + ty->offsets[s + 1]);
        } else {
            t.parts.clear();
            t.offsets.clear();
        }
        z.terms.push_back(std::move(t));
    }
    for (int d = z.lo; d < hi; ++d) {
        size_t rx = x.term_dim(d + 1), ry = y.term_dim(d + 1);
        size_t cx = x.term_dim(d), cy = y.term_dim(d);
        Matrix<K> m(rx + ry, cx + cy);
        if (auto* dx = x.differential(d))
            m.set_block(0, 0, *dx);
        if (auto* dy = y.differential(d))
            m.set_block(rx, cx, *dy);
        z.diff.push_back(std::move(m));
    }
    z.trim();
    return z;
}

/* Express a module as a tagged term over the pool (Krull-Schmidt matching);
 * also returns the base change C: pooled coords -> module coords. */
template <class K> struct Retagged {
    Term<K> term;
    Matrix<K> base_change;
};

template <class K>
Retagged<K> retag(const FDModule<K>& m, const PoolPtr<K>& pool, uint64_t seed)
{
    Retagged<K> out;
    if (m.dim == 0) {
        out.term.mod = m;
        out.term.offsets = {0};
        out.base_change = Matrix<K>(0, 0);
        return out;
    }
    auto dec = decompose_with_incl(m, seed);
    std::vector<int> parts;
    std::vector<Matrix<K>> blocks; /* pool_mod -> part -> M */
    for (size_t s = 0; s < dec.parts.size(); ++s) {
        int found = -1;
        Matrix<K> isom;
        for (size_t p = 0; p < pool->mods.size(); ++p) {
            auto f = find_iso(pool->mods[p], dec.parts[s]);
            if (f) {
                found = (int)p;
                isom = *f;
                break;
            }
        }
        AYT_CHECK(found >= 0, "retag: summand not in the pool (term not in add(N))");
        parts.push_back(found);
        blocks.push_back(dec.incl[s] * isom);
    }
    out.term = make_term(pool, parts);
    out.base_change = Matrix<K>(m.dim, out.term.mod.dim);
    for (size_t s = 0; s < parts.size(); ++s)
        out.base_change.set_block(0, out.term.offsets[s], blocks[s]);
    AYT_CHECK(is_invertible(out.base_change), "retag: base change not invertible");
    return out;
}

/* Gaussian elimination of invertible diagonal blocks of the differentials:
 * produces the homotopy-equivalent radical complex. */
template <class K> Complex<K> normalize_radical(Complex<K> x)
{
    AYT_CHECK(x.pool != nullptr, "normalize_radical: needs a tagged complex");
    for (auto& t : x.terms)
        AYT_CHECK(t.tagged(), "normalize_radical: untagged term");
    bool changed = true;
    while (changed) {
        changed = false;
        for (int d = x.lo; d < x.hi() && !changed; ++d) {
            const Term<K>& src = *x.term(d);
            const Term<K>& dst = *x.term(d + 1);
            const Matrix<K>& m = *x.differential(d);
            for (size_t s = 0; s < src.parts.size() && !changed; ++s)
                for (size_t t = 0; t < dst.parts.size() && !changed; ++t) {
                    if (src.parts[s] != dst.parts[t])
                        continue;
                    size_t n0 = x.pool->mods[src.parts[s]].dim;
                    Matrix<K> f = m.submatrix(dst.offsets[t], src.offsets[s], n0, n0);
                    if (!is_invertible(f))
                        continue;
                    /* split off the contractible pair (s in degree d, t in d+1) */
                    auto finv = *inverse(f);
                    auto keep_src = [&](size_t col) {
                        return col < src.offsets[s] || col >= src.offsets[s] + n0;
                    };
                    auto keep_dst = [&](size_t row) {
                        return row < dst.offsets[t] || row >= dst.offsets[t] + n0;
                    };
                    size_t cs = src.mod.dim - n0, ct = dst.mod.dim - n0;
                    /* beta: other-src -> t-block; gamma: s-block -> other-dst */
                    Matrix<K> beta(n0, cs), gamma(ct, n0), delta(ct, cs);
                    {
                        size_t cj = 0;
                        for (size_t j = 0; j < src.mod.dim; ++j) {
                            if (!keep_src(j))
                                continue;
                            for (size_t i = 0; i < n0; ++i)
                                beta.at(i, cj) = m.at(dst.offsets[t] + i, j);
                            size_t ri = 0;
                            for (size_t i = 0; i < dst.mod.dim; ++i) {
                                if (!keep_dst(i))
                                    continue;
                                delta.at(ri, cj) = m.at(i, j);
                                ++ri;
                            }
                            ++cj;
                        }
                        size_t ri = 0;
                        for (size_t i = 0; i < dst.mod.dim; ++i) {
                            if (!keep_dst(i))
                                continue;
                            for (size_t j = 0; j < n0; ++j)
                                gamma.at(ri, j) = m.at(i, src.offsets[s] + j);
                            ++ri;
                        }
                    }
                    Matrix<K> nd = delta - gamma * finv * beta;
                    /* rebuild terms */
                    auto drop = [&](const Term<K>& tm, size_t idx) {
                        std::vector<int> parts;
                        for (size_t k = 0; k < tm.parts.size(); ++k)
                            if (k != idx)
                                parts.push_back(tm.parts[k]);
                        return make_term(x.pool, parts);
                    };
                    Term<K> nsrc = drop(src, s), ndst = drop(dst, t);
                    /* adjacent differentials: remove s-rows from d^(d-1), t-cols from d^(d+1) */
                    if (auto* prev = x.differential(d - 1)) {
                        Matrix<K> np(cs, prev->cols());
                        size_t ri = 0;
                        for (size_t i = 0; i < src.mod.dim; ++i) {
                            if (!keep_src(i))
                                continue;
                            for (size_t j = 0; j < prev->cols(); ++j)
                                np.at(ri, j) = prev->at(i, j);
                            ++ri;
                        }
                        x.diff[d - 1 - x.lo] = std::move(np);
                    }
                    if (auto* next = x.differential(d + 1)) {
                        Matrix<K> nn(next->rows(), ct);
                        size_t cj = 0;
                        for (size_t j = 0; j < dst.mod.dim; ++j) {
                            if (!keep_dst(j))
                                continue;
                            for (size_t i = 0; i < next->rows(); ++i)
                                nn.at(i, cj) = next->at(i, j);
                            ++cj;
                        }
                        x.diff[d + 1 - x.lo] = std::move(nn);
                    }
                    x.terms[d - x.lo] = std::move(nsrc);
                    x.terms[d + 1 - x.lo] = std::move(ndst);
                    x.diff[d - x.lo] = std::move(nd);
                    changed = true;
                }
        }
    }
    x.trim();
    return x;
}

/* every differential block between equal pool summands non-invertible */
template <class K> bool is_radical_complex(const Complex<K>& x)
{
    for (int d = x.lo; d < x.hi(); ++d) {
        const Term<K>& src = *x.term(d);
        const Term<K>& dst = *x.term(d + 1);
        const Matrix<K>& m = *x.differential(d);
        if (!src.tagged() || !dst.tagged())
            return false;
        for (size_t s = 0; s < src.parts.size(); ++s)
            for (size_t t = 0; t < dst.parts.size(); ++t) {
                if (src.parts[s] != dst.parts[t])
                    continue;
                size_t n0 = x.pool->mods[src.parts[s]].dim;
                if (is_invertible(m.submatrix(dst.offsets[t], src.offsets[s], n0, n0)))
                    return false;
            }
    }
    return true;
}

/* image of every differential inside rad(A) * target (projective terms) */
template <class K> bool differentials_have_radical_image(const Complex<K>& x)
{
    for (int d = x.lo; d < x.hi(); ++d) {
        auto rad = radical_subspace(x.term(d + 1)->mod);
        RowSpan<K> sp(x.term_dim(d + 1));
        for (auto& r : rad)
            sp.insert(r);
        const Matrix<K>& m = *x.differential(d);
        for (size_t j = 0; j < m.cols(); ++j)
            if (!sp.contains(m.col(j)))
                return false;
    }
    return true;
}

/* ---- Hom in the homotopy category ---- */

template <class K> struct HomKSpace {
    int lo = 0, hi = -1;                        /* degree window carrying variables */
    std::vector<std::vector<Matrix<K>>> hbase;  /* hom bases per degree lo..hi */
    std::vector<size_t> offsets;                /* coordinate offsets per degree */
    size_t coord_dim = 0;
    std::vector<std::vector<Matrix<K>>> reps;   /* chain-map representatives */
    RowSpan<K> span{0, true};                   /* boundaries then reps, tracked */
    size_t nboundary = 0;
    std::vector<size_t> rep_gen; /* generator index of each representative */

    size_t dim() const { return reps.size(); }

    /* coordinates of a chain map (given per-degree components on lo..hi) in
     * the representative basis, modulo boundaries */
    Vec<K> coords_of(const std::vector<Matrix<K>>& comps) const
    {
        Vec<K> v(coord_dim, K(0));
        for (int d = lo; d <= hi; ++d) {
            const auto& hb = hbase[d - lo];
            if (hb.empty())
                continue;
            /* express comps[d-lo] in hom basis */
            size_t r = hb[0].rows(), c = hb[0].cols();
            Matrix<K> bm(r * c, hb.size());
            for (size_t k = 0; k < hb.size(); ++k) {
                Vec<K> f;
                for (size_t i = 0; i < r; ++i)
                    for (size_t j = 0; j < c; ++j)
                        f.push_back(hb[k].at(i, j));
                bm.set_col(k, f);
            }
            Vec<K> f;
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j)
                    f.push_back(comps[d - lo].at(i, j));
            auto sol = solve_matrix(bm, Matrix<K>::from_cols(r * c, {f}));
            AYT_CHECK(sol.has_value(), "homK coords: component not a module map");
            for (size_t k = 0; k < hb.size(); ++k)
                v[offsets[d - lo] + k] = sol->col(0)[k];
        }
        Vec<K> expr;
        Vec<K> res = span.residue(v, &expr);
        AYT_CHECK(vec_is_zero(res), "homK coords: not in the span (not a chain map?)");
        Vec<K> out(reps.size(), K(0));
        for (size_t k = 0; k < reps.size(); ++k)
            out[k] = expr[rep_gen[k]];
        return out;
    }
};

/* Basis of Hom_{K}(X, Y[n]) with machinery to take coordinates. */
template <class K>
HomKSpace<K> hom_in_K(const Complex<K>& x, const Complex<K>& yraw, int n)
{
    AYT_CHECK(x.algebra.get() == yraw.algebra.get(), "hom_in_K: algebra mismatch");
    Complex<K> y = shift_complex(yraw, n);
    HomKSpace<K> out;
    out.lo = std::max(x.lo, y.lo);
    out.hi = std::min(x.hi(), y.hi());
    if (out.lo > out.hi) {
        out.span = RowSpan<K>(0, true);
        return out;
    }
    size_t off = 0;
    for (int d = out.lo; d <= out.hi; ++d) {
        out.offsets.push_back(off);
        if (x.term_dim(d) && y.term_dim(d)) {
            out.hbase.push_back(hom_space(x.term(d)->mod, y.term(d)->mod));
            off += out.hbase.back().size();
        } else
            out.hbase.push_back({});
    }
    out.coord_dim = off;
    out.span = RowSpan<K>(off, true);

    auto comp_from_coords = [&](const Vec<K>& v) {
        std::vector<Matrix<K>> comps;
        for (int d = out.lo; d <= out.hi; ++d) {
            Matrix<K> m(y.term_dim(d), x.term_dim(d));
            const auto& hb = out.hbase[d - out.lo];
            for (size_t k = 0; k < hb.size(); ++k) {
                const K& c = v[out.offsets[d - out.lo] + k];
                if (!c.is_zero())
                    m = m + c * hb[k];
            }
            comps.push_back(std::move(m));
        }
        return comps;
    };

    /* chain constraints: for each d, f^(d+1) dX^d = dY^d f^d on overlap */
    std::vector<Vec<K>> rows;
    for (int d = out.lo - 1; d <= out.hi; ++d) {
        size_t rdim = y.term_dim(d + 1) * x.term_dim(d);
        if (rdim == 0)
            continue;
        /* build constraint rows by evaluating on each coordinate basis vector */
        std::vector<Vec<K>> cons(rdim, Vec<K>(off, K(0)));
        for (size_t var = 0; var < off; ++var) {
            Vec<K> unit = unit_vec<K>(off, var);
            auto comps = comp_from_coords(unit);
            Matrix<K> lhs(y.term_dim(d + 1), x.term_dim(d));
            if (d + 1 >= out.lo && d + 1 <= out.hi && x.differential(d) &&
                x.term_dim(d + 1) && y.term_dim(d + 1))
                lhs = lhs + comps[d + 1 - out.lo] * (*x.differential(d));
            if (d >= out.lo && d <= out.hi && y.differential(d) && y.term_dim(d))
                lhs = lhs - (*y.differential(d)) * comps[d - out.lo];
            size_t rix = 0;
            for (size_t i = 0; i < lhs.rows(); ++i)
                for (size_t j = 0; j < lhs.cols(); ++j)
                    cons[rix++][var] = lhs.at(i, j);
        }
        for (auto& r : cons)
            rows.push_back(std::move(r));
    }
    Matrix<K> sys = Matrix<K>::from_rows(off, rows);
    auto zcycles = kernel_basis(sys);

    /* boundaries: s^d: X^d -> Y^(d-1); induced chain map ds + sd */
    std::vector<Vec<K>> boundaries;
    for (int d = out.lo; d <= out.hi + 1; ++d) {
        if (x.term_dim(d) == 0 || y.term_dim(d - 1) == 0)
            continue;
        for (auto& s : hom_space(x.term(d)->mod, y.term(d - 1)->mod)) {
            Vec<K> v(off, K(0));
            /* contributes to f^d = dY^(d-1) s^d and f^(d-1) = s^d dX^(d-1) */
            auto put = [&](int deg, const Matrix<K>& m) {
                if (deg < out.lo || deg > out.hi)
                    return;
                const auto& hb = out.hbase[deg - out.lo];
                if (hb.empty()) {
                    AYT_CHECK(m.is_zero(), "homK: boundary misses hom basis");
                    return;
                }
                size_t r = hb[0].rows(), c = hb[0].cols();
                Matrix<K> bm(r * c, hb.size());
                for (size_t k = 0; k < hb.size(); ++k) {
                    Vec<K> f;
                    for (size_t i = 0; i < r; ++i)
                        for (size_t j = 0; j < c; ++j)
                            f.push_back(hb[k].at(i, j));
                    bm.set_col(k, f);
                }
                Vec<K> f;
                for (size_t i = 0; i < r; ++i)
                    for (size_t j = 0; j < c; ++j)
                        f.push_back(m.at(i, j));
                auto sol = solve_matrix(bm, Matrix<K>::from_cols(r * c, {f}));
                AYT_CHECK(sol.has_value(), "homK: boundary component not in hom basis");
                for (size_t k = 0; k < hb.size(); ++k)
                    v[out.offsets[deg - out.lo] + k] += sol->col(0)[k];
            };
            if (y.differential(d - 1) && y.term_dim(d))
                put(d, (*y.differential(d - 1)) * s);
            if (x.differential(d - 1) && x.term_dim(d - 1))
                put(d - 1, s * (*x.differential(d - 1)));
            boundaries.push_back(std::move(v));
        }
    }
    for (auto& b : boundaries)
        out.span.insert(b);
    out.nboundary = boundaries.size(); /* generator count, indexes the coords tail */
    size_t attempts = 0;
    for (auto& z : zcycles) {
        Vec<K> zz = z;
        bool fresh = out.span.insert(std::move(zz));
        if (fresh) {
            out.reps.push_back(comp_from_coords(z));
            out.rep_gen.push_back(out.nboundary + attempts);
        }
        ++attempts;
    }
    return out;
}

template <class K> size_t hom_k_dim(const Complex<K>& x, const Complex<K>& y, int n)
{
    return hom_in_K(x, y, n).dim();
}

/* identity chain map components on the window of h */
template <class K>
std::vector<Matrix<K>> identity_chain(const Complex<K>& x, const HomKSpace<K>& h)
{
    std::vector<Matrix<K>> comps;
    for (int d = h.lo; d <= h.hi; ++d)
        comps.push_back(Matrix<K>::identity(x.term_dim(d)));
    return comps;
}

template <class K>
std::vector<Matrix<K>> compose_chain(const HomKSpace<K>& h, const std::vector<Matrix<K>>& f,
                                     const std::vector<Matrix<K>>& g)
{ /* f then g, degreewise */
    std::vector<Matrix<K>> out;
    for (size_t k = 0; k < f.size(); ++k)
        out.push_back(g[k] * f[k]);
    return out;
}

} // namespace ayt
