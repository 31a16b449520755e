#pragma once

#include "snf.hpp"
#include "vecmat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace ayt {

inline size_t ceil_log2(size_t n)
{
    size_t k = 0, v = 1;
    while (v < n) {
        v <<= 1;
        ++k;
    }
    return k;
}

/* Finite-dimensional associative unital algebra over K, by structure
 * constants. Multiplication is written left-to-right: mul(a,b) = "a then b"
 * in endomorphism-style algebras, matching path concatenation a.b. */
template <class K> struct FDAlgebra {
    FieldSpec field;
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<Matrix<K>> lmul; /* lmul[a]: x -> b_a * x */
    std::vector<Matrix<K>> rmul; /* rmul[a]: x -> x * b_a */
    Vec<K> unit;
    std::vector<Vec<K>> idem; /* complete primitive orthogonal idempotents (optional) */
    std::vector<Vec<K>> rad;  /* radical basis (optional) */
    bool rad_known = false;
    std::vector<size_t> gens; /* generating set as basis indices; empty = use all */

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const
    {
        Vec<K> out(dim, K(0));
        for (size_t a = 0; a < dim; ++a)
            if (!x[a].is_zero())
                out = vec_add(std::move(out), vec_scale(x[a], lmul[a] * y));
        return out;
    }
    Matrix<K> left_mult_matrix(const Vec<K>& x) const
    {
        Matrix<K> m(dim, dim);
        for (size_t a = 0; a < dim; ++a)
            if (!x[a].is_zero())
                m = m + x[a] * lmul[a];
        return m;
    }
    Matrix<K> right_mult_matrix(const Vec<K>& x) const
    {
        Matrix<K> m(dim, dim);
        for (size_t a = 0; a < dim; ++a)
            if (!x[a].is_zero())
                m = m + x[a] * rmul[a];
        return m;
    }
    bool is_nilpotent_elem(const Vec<K>& x) const
    {
        Vec<K> p = x;
        size_t it = ceil_log2(dim + 2) + 1;
        for (size_t i = 0; i < it; ++i) {
            if (vec_is_zero(p))
                return true;
            p = mul(p, p);
        }
        return vec_is_zero(p);
    }
    std::vector<size_t> generator_indices() const
    {
        if (!gens.empty())
            return gens;
        std::vector<size_t> all(dim);
        for (size_t i = 0; i < dim; ++i)
            all[i] = i;
        return all;
    }
    K scalar(long long n) const { return scalar_from_int<K>(n, field); }

    void fill_rmul()
    {
        rmul.assign(dim, Matrix<K>(dim, dim));
        for (size_t a = 0; a < dim; ++a) /* col c of rmul[a] = b_c * b_a */
            for (size_t c = 0; c < dim; ++c)
                rmul[a].set_col(c, lmul[c].col(a));
    }

    /* bind every stored scalar to the field (no-op over Q) */
    void bind_data()
    {
        for (auto& m : lmul)
            m.bind(field);
        for (auto& m : rmul)
            m.bind(field);
        bind_vec(unit, field);
        for (auto& e : idem)
            bind_vec(e, field);
        for (auto& r : rad)
            bind_vec(r, field);
    }

    void verify(bool check_assoc = true) const
    {
        AYT_CHECK(left_mult_matrix(unit) == Matrix<K>::identity(dim) &&
                      right_mult_matrix(unit) == Matrix<K>::identity(dim),
                  "algebra: unit law fails");
        if (check_assoc) {
            for (size_t a = 0; a < dim; ++a)
                for (size_t b = 0; b < dim; ++b) {
                    Vec<K> ab = lmul[a].col(b); /* b_a * b_b */
                    AYT_CHECK(left_mult_matrix(ab) == lmul[a] * lmul[b],
                              "algebra: associativity fails on basis pair");
                }
        }
        if (!idem.empty()) {
            Vec<K> s(dim, K(0));
            for (auto& e : idem) {
                AYT_CHECK(mul(e, e) == e, "algebra: idempotent not idempotent");
                s = vec_add(std::move(s), e);
            }
            AYT_CHECK(s == unit, "algebra: idempotents do not sum to the unit");
            for (size_t i = 0; i < idem.size(); ++i)
                for (size_t j = 0; j < idem.size(); ++j)
                    if (i != j)
                        AYT_CHECK(vec_is_zero(mul(idem[i], idem[j])),
                                  "algebra: idempotents not orthogonal");
        }
    }
};

template <class K> using AlgebraPtr = std::shared_ptr<const FDAlgebra<K>>;

/* Two-sided ideal given by an echelonized basis. */
template <class K> struct AlgebraIdeal {
    AlgebraPtr<K> parent;
    std::vector<Vec<K>> basis;

    size_t dim() const { return basis.size(); }

    static AlgebraIdeal closure(const AlgebraPtr<K>& a, const std::vector<Vec<K>>& gens)
    {
        RowSpan<K> sp(a->dim);
        std::vector<Vec<K>> queue;
        for (auto& g : gens)
            if (sp.insert(g))
                queue.push_back(g);
        for (size_t q = 0; q < queue.size(); ++q)
            for (size_t b = 0; b < a->dim; ++b) {
                Vec<K> l = a->lmul[b] * queue[q];
                if (sp.insert(l))
                    queue.push_back(std::move(l));
                Vec<K> r = a->rmul[b] * queue[q];
                if (sp.insert(r))
                    queue.push_back(std::move(r));
            }
        return AlgebraIdeal{a, sp.rows()};
    }

    bool is_ideal() const
    {
        RowSpan<K> sp(parent->dim);
        for (auto& v : basis)
            sp.insert(v);
        for (auto& v : basis)
            for (size_t b = 0; b < parent->dim; ++b)
                if (!sp.contains(parent->lmul[b] * v) || !sp.contains(parent->rmul[b] * v))
                    return false;
        return true;
    }

    bool contains(const Vec<K>& v) const
    {
        RowSpan<K> sp(parent->dim);
        for (auto& b : basis)
            sp.insert(b);
        return sp.contains(v);
    }
};

/* Quotient algebra A/I with the projection and a linear section. */
template <class K> struct QuotientAlgebra {
    std::shared_ptr<FDAlgebra<K>> alg;
    Matrix<K> proj;  /* dim(A/I) x dim(A) */
    Matrix<K> embed; /* dim(A) x dim(A/I), section of proj */
};

template <class K>
QuotientAlgebra<K> quotient_by_ideal(const AlgebraPtr<K>& a, const AlgebraIdeal<K>& ideal)
{
    AYT_CHECK(ideal.parent.get() == a.get(), "quotient: ideal of a different algebra");
    AYT_CHECK(ideal.is_ideal(), "quotient: basis is not a two-sided ideal");
    RowSpan<K> sp(a->dim);
    for (auto& v : ideal.basis)
        sp.insert(v);
    auto comp = sp.complement();
    size_t nd = comp.size();
    Matrix<K> proj(nd, a->dim);
    for (size_t j = 0; j < a->dim; ++j) {
        Vec<K> r = sp.residue(unit_vec<K>(a->dim, j));
        for (size_t i = 0; i < nd; ++i)
            proj.at(i, j) = r[comp[i]];
    }
    Matrix<K> embed(a->dim, nd);
    for (size_t i = 0; i < nd; ++i)
        embed.at(comp[i], i) = K(1);

    auto q = std::make_shared<FDAlgebra<K>>();
    q->field = a->field;
    q->dim = nd;
    for (size_t i = 0; i < nd; ++i)
        q->labels.push_back(a->labels.empty() ? "q" + std::to_string(i) : a->labels[comp[i]]);
    q->lmul.resize(nd);
    for (size_t i = 0; i < nd; ++i)
        q->lmul[i] = proj * a->left_mult_matrix(embed.col(i)) * embed;
    q->fill_rmul();
    q->unit = proj * a->unit;
    for (auto& e : a->idem) {
        Vec<K> eq = proj * e;
        if (!vec_is_zero(eq))
            q->idem.push_back(eq);
    }
    if (a->rad_known) { /* rad(A/I) = (rad A + I)/I */
        RowSpan<K> rsp(nd);
        for (auto& r : a->rad)
            rsp.insert(proj * r);
        q->rad = rsp.rows();
        q->rad_known = true;
    }
    q->bind_data();
    return QuotientAlgebra<K>{q, proj, embed};
}

/* ---- element analysis in split algebras and their corners ---- */

/* minimal polynomial of x relative to the given unit: returns c with
 * x^m = c[0]*unit + c[1]*x + ... + c[m-1]*x^(m-1). */
template <class K>
std::vector<K> minpoly_coeffs(const FDAlgebra<K>& a, const Vec<K>& unit, const Vec<K>& x)
{
    RowSpan<K> sp(a.dim, /*track=*/true);
    Vec<K> p = unit;
    for (size_t k = 0; k <= a.dim + 1; ++k) {
        Vec<K> saved = p;
        if (!sp.insert(p)) {
            Vec<K> expr;
            sp.residue(saved, &expr);
            std::vector<K> c(expr.begin(), expr.end());
            c.pop_back(); /* drop the failed generator itself */
            return c;
        }
        p = a.mul(p, x);
    }
    throw AytError("minpoly: no dependence found (dimension bug)");
}

/* If x - e*unit is nilpotent for a (necessarily unique) scalar e, return e.
 * Assumes the ambient unital algebra is local split, so the minimal
 * polynomial is (t-e)^m; extraction handles char p | m via the identity
 * (t-e)^(p^v m') = (t^(p^v) - e)^(m') over the prime field. */
template <class K>
std::optional<K> split_local_eigenvalue(const FDAlgebra<K>& a, const Vec<K>& unit, const Vec<K>& x)
{
    std::vector<K> c = minpoly_coeffs(a, unit, x);
    size_t m = c.size();
    if (m == 0)
        return std::nullopt;
    long long p = a.field.rational ? 0 : a.field.p;
    size_t pv = 1, mprime = m;
    if (p > 1)
        while (mprime % (size_t)p == 0) {
            mprime /= (size_t)p;
            pv *= (size_t)p;
        }
    size_t idx = pv * (mprime - 1); /* < m */
    K e = c[idx] * scalar_from_int<K>((long long)mprime, a.field).inv();
    if (a.is_nilpotent_elem(vec_sub(x, vec_scale(e, unit))))
        return e;
    return std::nullopt;
}

/* The corner algebra e*A*e with its embedding basis. */
template <class K> struct Corner {
    FDAlgebra<K> alg; /* unital with unit = e */
    std::vector<Vec<K>> basis;
};

template <class K> Corner<K> corner_algebra(const FDAlgebra<K>& a, const Vec<K>& e)
{
    Matrix<K> pe = a.left_mult_matrix(e) * a.right_mult_matrix(e); /* x -> e x e */
    RowSpan<K> sp(a.dim);
    for (size_t j = 0; j < a.dim; ++j)
        sp.insert(pe.col(j));
    std::vector<Vec<K>> basis = sp.rows();
    Corner<K> out;
    out.basis = basis;
    out.alg.field = a.field;
    out.alg.dim = basis.size();
    Matrix<K> bmat = Matrix<K>::from_cols(a.dim, basis);
    out.alg.lmul.resize(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        Matrix<K> prod(a.dim, basis.size());
        for (size_t j = 0; j < basis.size(); ++j)
            prod.set_col(j, a.mul(basis[i], basis[j]));
        auto coords = solve_matrix(bmat, prod);
        AYT_CHECK(coords.has_value(), "corner: products leave the corner");
        out.alg.lmul[i] = *coords;
    }
    out.alg.fill_rmul();
    auto ucoords = solve_matrix(bmat, Matrix<K>::from_cols(a.dim, {e}));
    AYT_CHECK(ucoords.has_value(), "corner: unit not inside");
    out.alg.unit = ucoords->col(0);
    for (size_t i = 0; i < basis.size(); ++i)
        out.alg.labels.push_back("c" + std::to_string(i));
    out.alg.bind_data();
    return out;
}

/* Certify split local; returns the radical basis on success. */
template <class K>
std::optional<std::vector<Vec<K>>> split_local_radical(const FDAlgebra<K>& c)
{
    if (c.dim == 0)
        return std::nullopt;
    RowSpan<K> sp(c.dim);
    for (size_t i = 0; i < c.dim; ++i) {
        Vec<K> x = unit_vec<K>(c.dim, i);
        auto e = split_local_eigenvalue(c, c.unit, x);
        if (!e)
            return std::nullopt;
        sp.insert(vec_sub(x, vec_scale(*e, c.unit)));
    }
    std::vector<Vec<K>> rad = sp.rows();
    if (rad.size() + 1 != c.dim)
        return std::nullopt;
    for (auto& r : rad)
        for (size_t b = 0; b < c.dim; ++b)
            if (!sp.contains(c.lmul[b] * r) || !sp.contains(c.rmul[b] * r))
                return std::nullopt;
    std::vector<Vec<K>> cur = rad;
    for (size_t step = 0; step <= c.dim + 1 && !cur.empty(); ++step) {
        RowSpan<K> nxt(c.dim);
        for (auto& u : cur)
            for (auto& r : rad)
                nxt.insert(c.mul(u, r));
        cur = nxt.rows();
    }
    if (!cur.empty())
        return std::nullopt;
    return rad;
}

/* ---- polynomial helpers (dense, ascending coefficients) ---- */
namespace polyk {

template <class K> std::vector<K> trim(std::vector<K> p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    return p;
}
template <class K> std::vector<K> sub(std::vector<K> a, const std::vector<K>& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), K(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    return trim(std::move(a));
}
template <class K> std::vector<K> mul(const std::vector<K>& a, const std::vector<K>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<K> out(a.size() + b.size() - 1, K(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return trim(std::move(out));
}
template <class K>
std::pair<std::vector<K>, std::vector<K>> divmod(std::vector<K> a, const std::vector<K>& b)
{
    std::vector<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, K(0));
    K lead = b.back().inv();
    while (a.size() >= b.size()) {
        K f = a.back() * lead;
        size_t shift = a.size() - b.size();
        if (shift < q.size())
            q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        a = trim(std::move(a));
        if (a.empty())
            break;
    }
    return {trim(std::move(q)), a};
}
template <class K>
std::tuple<std::vector<K>, std::vector<K>, std::vector<K>> xgcd(std::vector<K> a,
                                                               std::vector<K> b)
{
    std::vector<K> s0{K(1)}, s1, t0, t1{K(1)};
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
        auto ns = sub(s0, mul(q, s1));
        s0 = s1;
        s1 = ns;
        auto nt = sub(t0, mul(q, t1));
        t0 = t1;
        t1 = nt;
    }
    return {a, s0, t0};
}
template <class K>
Vec<K> eval_at(const FDAlgebra<K>& alg, const Vec<K>& unit, const Vec<K>& x,
               const std::vector<K>& p)
{
    Vec<K> out(alg.dim, K(0));
    Vec<K> pw = unit;
    for (size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_zero())
            out = vec_add(std::move(out), vec_scale(p[i], pw));
        pw = alg.mul(pw, x);
    }
    return out;
}

} // namespace polyk

/* Split e*A*e into two orthogonal idempotents if possible (seeded search,
 * minimal-polynomial splitting at a linear root). */
template <class K>
std::optional<std::pair<Vec<K>, Vec<K>>>
try_split_idempotent(const FDAlgebra<K>& a, const Vec<K>& e, uint64_t seed, int budget = 32)
{
    Corner<K> c = corner_algebra(a, e);
    if (c.alg.dim <= 1)
        return std::nullopt;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<Vec<K>> candidates;
    for (size_t i = 0; i < c.alg.dim; ++i)
        candidates.push_back(unit_vec<K>(c.alg.dim, i));
    for (int t = 0; t < budget; ++t) {
        Vec<K> v(c.alg.dim, K(0));
        for (size_t i = 0; i < c.alg.dim; ++i)
            v[i] = scalar_from_int<K>((long long)(rng() % 7) - 3, a.field);
        candidates.push_back(std::move(v));
    }
    for (auto& x : candidates) {
        std::vector<K> mc = minpoly_coeffs(c.alg, c.alg.unit, x);
        size_t m = mc.size();
        if (m <= 1)
            continue;
        std::vector<K> mu(m + 1, K(0));
        mu[m] = K(1);
        for (size_t k = 0; k < m; ++k)
            mu[k] = -mc[k];
        std::vector<K> roots;
        auto try_root = [&](K r) {
            K val(0), pw(1);
            for (size_t i = 0; i <= m; ++i) {
                val += mu[i] * pw;
                pw = pw * r;
            }
            if (val.is_zero())
                roots.push_back(r);
        };
        if (!a.field.rational && a.field.p <= 257)
            for (long long r = 0; r < a.field.p; ++r)
                try_root(scalar_from_int<K>(r, a.field));
        else
            for (long long r = -8; r <= 8; ++r)
                try_root(scalar_from_int<K>(r, a.field));
        for (auto& r : roots) {
            std::vector<K> lin{-r, K(1)};
            std::vector<K> f1{K(1)};
            std::vector<K> g = mu;
            while (true) {
                auto [q, rem] = polyk::divmod(g, lin);
                if (!rem.empty())
                    break;
                f1 = polyk::mul(f1, lin);
                g = q;
                if (g.size() <= 1)
                    break;
            }
            if (f1.size() <= 1 || g.size() <= 1)
                continue;
            auto [gg, s, t] = polyk::xgcd(f1, g);
            if (gg.size() != 1)
                continue;
            K ginv = gg[0].inv();
            for (auto& cc : s)
                cc = cc * ginv;
            std::vector<K> h = polyk::mul(s, f1); /* == 0 mod f1, == 1 mod g */
            Vec<K> idc = polyk::eval_at(c.alg, c.alg.unit, x, h);
            if (vec_is_zero(idc) || idc == c.alg.unit)
                continue;
            AYT_CHECK(c.alg.mul(idc, idc) == idc, "idempotent split: not idempotent");
            Vec<K> e1(a.dim, K(0));
            for (size_t i = 0; i < c.alg.dim; ++i)
                if (!idc[i].is_zero())
                    e1 = vec_add(std::move(e1), vec_scale(idc[i], c.basis[i]));
            return std::make_pair(e1, vec_sub(e, e1));
        }
    }
    return std::nullopt;
}

/* Complete set of primitive orthogonal idempotents (split case). */
template <class K>
std::vector<Vec<K>> complete_primitive_idempotents(const FDAlgebra<K>& a, uint64_t seed)
{
    std::vector<Vec<K>> done, work{a.unit};
    while (!work.empty()) {
        Vec<K> e = work.back();
        work.pop_back();
        Corner<K> c = corner_algebra(a, e);
        if (c.alg.dim == 1) {
            done.push_back(e);
            continue;
        }
        auto sp = try_split_idempotent(a, e, seed);
        if (sp) {
            work.push_back(sp->first);
            work.push_back(sp->second);
            continue;
        }
        AYT_CHECK(split_local_radical(c.alg).has_value(),
                  "idempotent completion: corner neither splits nor certifies local "
                  "(non-split simple?)");
        done.push_back(e);
    }
    return done;
}

/* Isomorphism test Ae_i = Ae_j for primitive idempotents of a split algebra:
 * some basis pair u in e_iAe_j, v in e_jAe_i has uv invertible in e_iAe_i. */
template <class K> bool column_iso(const FDAlgebra<K>& a, const Vec<K>& ei, const Vec<K>& ej)
{
    auto block = [&](const Vec<K>& e1, const Vec<K>& e2) {
        Matrix<K> p = a.left_mult_matrix(e1) * a.right_mult_matrix(e2);
        RowSpan<K> sp(a.dim);
        for (size_t j = 0; j < a.dim; ++j)
            sp.insert(p.col(j));
        return sp.rows();
    };
    auto uij = block(ei, ej), vji = block(ej, ei);
    if (uij.size() != vji.size())
        return false;
    Corner<K> ci = corner_algebra(a, ei);
    Matrix<K> bmat = Matrix<K>::from_cols(a.dim, ci.basis);
    for (auto& u : uij)
        for (auto& v : vji) {
            auto coords = solve_matrix(bmat, Matrix<K>::from_cols(a.dim, {a.mul(u, v)}));
            if (!coords)
                continue;
            auto ev = split_local_eigenvalue(ci.alg, ci.alg.unit, coords->col(0));
            if (ev && !ev->is_zero())
                return true;
        }
    return false;
}

template <class K> bool is_basic(const FDAlgebra<K>& a)
{
    AYT_CHECK(!a.idem.empty(), "is_basic: needs idempotents");
    for (size_t i = 0; i < a.idem.size(); ++i)
        for (size_t j = i + 1; j < a.idem.size(); ++j)
            if (column_iso(a, a.idem[i], a.idem[j]))
                return false;
    return true;
}

/* Radical of a basic split algebra with known primitive idempotents. */
template <class K> void compute_radical_basic(FDAlgebra<K>& a)
{
    AYT_CHECK(!a.idem.empty(), "radical: needs idempotents");
    AYT_CHECK(is_basic(a), "radical: algebra is not basic (isomorphic projective columns)");
    RowSpan<K> sp(a.dim);
    for (size_t i = 0; i < a.idem.size(); ++i)
        for (size_t j = 0; j < a.idem.size(); ++j) {
            if (i == j)
                continue;
            Matrix<K> p = a.left_mult_matrix(a.idem[i]) * a.right_mult_matrix(a.idem[j]);
            for (size_t c = 0; c < a.dim; ++c)
                sp.insert(p.col(c));
        }
    for (auto& e : a.idem) {
        Corner<K> c = corner_algebra(a, e);
        auto rad = split_local_radical(c.alg);
        AYT_CHECK(rad.has_value(), "radical: corner not split local");
        for (auto& r : *rad) {
            Vec<K> v(a.dim, K(0));
            for (size_t i = 0; i < c.alg.dim; ++i)
                if (!r[i].is_zero())
                    v = vec_add(std::move(v), vec_scale(r[i], c.basis[i]));
            sp.insert(v);
        }
    }
    a.rad = sp.rows();
    a.rad_known = true;
}

/* Fill idempotents (if missing) and radical on an abstract algebra. */
template <class K> void complete_split_data(FDAlgebra<K>& a, uint64_t seed)
{
    if (a.idem.empty())
        a.idem = complete_primitive_idempotents(a, seed);
    if (!a.rad_known)
        compute_radical_basic(a);
}

/* Cartan matrix: entry (i,j) = dim_K e_i A e_j. */
template <class K> ZMat cartan_matrix(const FDAlgebra<K>& a)
{
    AYT_CHECK(!a.idem.empty(), "cartan: missing idempotents");
    size_t n = a.idem.size();
    ZMat c = zmat(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            c[i][j] =
                (long)rank(a.left_mult_matrix(a.idem[i]) * a.right_mult_matrix(a.idem[j]));
    return c;
}

template <class K> size_t center_dim(const FDAlgebra<K>& a)
{
    Matrix<K> stacked(a.dim * a.dim, a.dim);
    for (size_t b = 0; b < a.dim; ++b)
        stacked.set_block(b * a.dim, 0, a.lmul[b] - a.rmul[b]);
    return kernel_basis(stacked).size();
}

template <class K> size_t loewy_length(const FDAlgebra<K>& a)
{
    AYT_CHECK(a.rad_known, "loewy: radical unknown");
    std::vector<Vec<K>> cur = a.rad;
    size_t n = 1;
    while (!cur.empty()) {
        ++n;
        RowSpan<K> nxt(a.dim);
        for (auto& u : cur)
            for (auto& r : a.rad)
                nxt.insert(a.mul(u, r));
        cur = nxt.rows();
        AYT_CHECK(n <= a.dim + 2, "loewy: radical not nilpotent");
    }
    return n;
}

struct InvariantReport {
    size_t num_simples = 0;
    ZMat cartan;
    std::vector<long long> cartan_snf;
    size_t dim_algebra = 0;
    size_t dim_center = 0;
    size_t loewy = 0;
};

template <class K> InvariantReport invariant_report(const FDAlgebra<K>& a)
{
    InvariantReport r;
    r.num_simples = a.idem.size();
    r.cartan = cartan_matrix(a);
    r.cartan_snf = snf_diagonal(r.cartan);
    r.dim_algebra = a.dim;
    r.dim_center = center_dim(a);
    r.loewy = a.rad_known ? loewy_length(a) : 0;
    return r;
}

struct ReportComparison {
    bool consistent = false;
    bool simples_equal = false;
    bool snf_equal = false;
};

inline ReportComparison compare_reports(const InvariantReport& a, const InvariantReport& b)
{
    ReportComparison c;
    c.simples_equal = a.num_simples == b.num_simples;
    c.snf_equal = a.cartan_snf == b.cartan_snf;
    c.consistent = c.simples_equal && c.snf_equal;
    return c;
}

/* opposite algebra (used by the duality D) */
template <class K> FDAlgebra<K> opposite_algebra(const FDAlgebra<K>& a)
{
    FDAlgebra<K> op;
    op.field = a.field;
    op.dim = a.dim;
    op.labels = a.labels;
    op.lmul = a.rmul; /* b *op x = x * b */
    op.rmul = a.lmul;
    op.unit = a.unit;
    op.idem = a.idem;
    op.rad = a.rad;
    op.rad_known = a.rad_known;
    op.gens = a.gens;
    return op;
}

} // namespace ayt
