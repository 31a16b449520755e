#pragma once

#include "module.hpp"

#include <map>
#include <mutex>
#include <random>

namespace ayt {

/* Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0 truncated at a
 * cap, built from iterated projective covers (differentials are radical). */
template <class K> struct ProjResolution {
    FDModule<K> module;
    size_t cap = 0;
    std::vector<FDModule<K>> terms;            /* P_0 .. P_len */
    std::vector<std::vector<size_t>> parts;    /* idempotent indices per term */
    std::vector<std::vector<size_t>> offsets;  /* block offsets per term */
    std::vector<Matrix<K>> d;                  /* d[i]: P_(i+1) -> P_i */
    Matrix<K> aug;                             /* P_0 -> M */
    bool finite = false;                       /* resolution stopped early */
    size_t pd = 0;                             /* projective dimension when finite */

    const FDModule<K>& term(size_t i) const
    {
        AYT_CHECK(i < terms.size(), "resolution: term beyond cap");
        return terms[i];
    }
};

template <class K> ProjResolution<K> min_proj_resolution(const FDModule<K>& m, size_t cap);

/* Shared resolution table: insert-once per (key, cap), safe for concurrent
 * readers. Longer resolutions replace shorter ones for the same key. */
template <class K> class ResolutionCache {
  public:
    std::shared_ptr<const ProjResolution<K>> get(const std::string& key, const FDModule<K>& m,
                                                 size_t cap)
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(key);
        if (it != table_.end() && it->second->cap >= cap)
            return it->second;
        auto res = std::make_shared<const ProjResolution<K>>(min_proj_resolution(m, cap));
        table_[key] = res;
        return res;
    }

  private:
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const ProjResolution<K>>> table_;
};

template <class K>
ProjResolution<K> min_proj_resolution(const FDModule<K>& m, size_t cap)
{
    ProjResolution<K> res;
    res.module = m;
    res.cap = cap;
    FDModule<K> cur = m;       /* module being covered */
    Matrix<K> incl_prev;       /* syzygy -> previous P */
    for (size_t i = 0; i <= cap; ++i) {
        if (cur.dim == 0) {
            res.finite = true;
            res.pd = i == 0 ? 0 : i - 1;
            break;
        }
        auto pc = projective_cover(cur);
        res.terms.push_back(pc.proj);
        res.parts.push_back(pc.parts);
        res.offsets.push_back(pc.offsets);
        if (i == 0)
            res.aug = pc.epi;
        else
            res.d.push_back(incl_prev * pc.epi); /* P_i -> Omega^i -> P_(i-1) */
        /* next syzygy */
        auto ker = kernel_basis(pc.epi);
        auto sub = submodule(pc.proj, ker, false);
        cur = sub.mod;
        incl_prev = sub.map;
        if (cur.dim == 0 && i + 1 <= cap) {
            res.finite = true;
            res.pd = i;
            break;
        }
    }
    return res;
}

/* syzygy module together with its inclusion into P_0 */
template <class K> struct SyzygyData {
    FDModule<K> mod;
    Matrix<K> incl; /* into P_0 */
    Matrix<K> coaug; /* P_1 -> Omega, corestriction of d_1 */
};

template <class K> SyzygyData<K> syzygy_of_resolution(const ProjResolution<K>& r)
{
    SyzygyData<K> out;
    auto ker = kernel_basis(r.aug);
    auto sub = submodule(r.terms[0], ker, false);
    out.mod = sub.mod;
    out.incl = sub.map;
    if (r.d.empty()) {
        AYT_CHECK(out.mod.dim == 0, "syzygy_of_resolution: truncated too early");
        out.coaug = Matrix<K>(0, 0);
        return out;
    }
    auto c = solve_matrix(out.incl, r.d[0]);
    AYT_CHECK(c.has_value(), "syzygy_of_resolution: d_1 does not land in the syzygy");
    out.coaug = *c;
    return out;
}

/* The resolution of Omega(M) obtained by chopping the head off a minimal
 * resolution of M (shared tail). */
template <class K>
ProjResolution<K> shifted_resolution(const ProjResolution<K>& r, const SyzygyData<K>& syz)
{
    AYT_CHECK(r.terms.size() >= 2, "shifted_resolution: need at least two terms");
    ProjResolution<K> out;
    out.module = syz.mod;
    out.cap = r.cap - 1;
    out.terms.assign(r.terms.begin() + 1, r.terms.end());
    out.parts.assign(r.parts.begin() + 1, r.parts.end());
    out.offsets.assign(r.offsets.begin() + 1, r.offsets.end());
    out.d.assign(r.d.begin() + 1, r.d.end());
    out.aug = syz.coaug;
    out.finite = r.finite;
    out.pd = r.finite && r.pd > 0 ? r.pd - 1 : 0;
    return out;
}

/* Ext^deg(M, N) with normalized cocycle representatives and coordinates. */
template <class K> struct ExtSpace {
    size_t deg = 0;
    std::vector<Matrix<K>> cbase;  /* hom basis of Hom(P_deg, N) */
    std::vector<Matrix<K>> reps;   /* cocycle representatives */
    std::vector<Vec<K>> rep_coords;
    RowSpan<K> span{0, true};      /* boundaries then reps, tracked */
    size_t nboundary = 0;
    std::vector<size_t> rep_gen;

    size_t dim() const { return reps.size(); }

    Vec<K> coords_in_cbase(const Matrix<K>& cocycle) const
    {
        if (cbase.empty()) {
            AYT_CHECK(cocycle.is_zero(), "ext coords: nonzero cocycle in zero space");
            return {};
        }
        size_t r = cbase[0].rows(), c = cbase[0].cols();
        Matrix<K> bm(r * c, cbase.size());
        for (size_t k = 0; k < cbase.size(); ++k) {
            Vec<K> f;
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j)
                    f.push_back(cbase[k].at(i, j));
            bm.set_col(k, f);
        }
        Vec<K> f;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                f.push_back(cocycle.at(i, j));
        auto sol = solve_matrix(bm, Matrix<K>::from_cols(r * c, {f}));
        AYT_CHECK(sol.has_value(), "ext coords: cocycle not a module map");
        return sol->col(0);
    }

    /* class coordinates of a cocycle */
    Vec<K> class_of(const Matrix<K>& cocycle) const
    {
        Vec<K> v = coords_in_cbase(cocycle);
        Vec<K> expr;
        Vec<K> res = span.residue(v, &expr);
        AYT_CHECK(vec_is_zero(res), "ext class: not a cocycle");
        Vec<K> out(reps.size(), K(0));
        for (size_t k = 0; k < reps.size(); ++k)
            out[k] = expr[rep_gen[k]];
        return out;
    }
};

/* cochain differential Hom(P_i, N) -> Hom(P_(i+1), N), h -> d_(i+1) then h */
template <class K>
ExtSpace<K> ext_group(const ProjResolution<K>& rm, const FDModule<K>& n, size_t deg)
{
    AYT_CHECK(deg <= rm.cap, "ext_group: degree beyond resolution cap");
    AYT_CHECK(deg + 1 < rm.terms.size() || rm.finite,
              "ext_group: resolution must extend one step past the degree (raise cap)");
    ExtSpace<K> out;
    out.deg = deg;
    if (deg >= rm.terms.size())
        return out; /* resolution terminated: Ext = 0 */
    out.cbase = hom_space(rm.terms[deg], n);
    out.span = RowSpan<K>(out.cbase.size(), true);
    /* boundaries: image of Hom(P_(deg-1), N) */
    std::vector<Vec<K>> boundaries;
    if (deg > 0) {
        for (auto& h : hom_space(rm.terms[deg - 1], n))
            boundaries.push_back(out.coords_in_cbase(h * rm.d[deg - 1]));
    }
    for (auto& b : boundaries)
        out.span.insert(b);
    out.nboundary = boundaries.size();
    /* cocycles: kernel of post-composition with d_(deg+1), if present */
    std::vector<Vec<K>> cocycles;
    if (deg + 1 < rm.terms.size()) {
        size_t w = out.cbase.size();
        std::vector<Vec<K>> rows;
        size_t rdim = n.dim * rm.terms[deg + 1].dim;
        std::vector<Vec<K>> cons(rdim, Vec<K>(w, K(0)));
        for (size_t k = 0; k < w; ++k) {
            Matrix<K> img = out.cbase[k] * rm.d[deg];
            size_t rix = 0;
            for (size_t i = 0; i < img.rows(); ++i)
                for (size_t j = 0; j < img.cols(); ++j)
                    cons[rix++][k] = img.at(i, j);
        }
        Matrix<K> sys = Matrix<K>::from_rows(w, cons);
        cocycles = kernel_basis(sys);
    } else {
        for (size_t k = 0; k < out.cbase.size(); ++k)
            cocycles.push_back(unit_vec<K>(out.cbase.size(), k));
    }
    size_t attempts = 0;
    for (auto& z : cocycles) {
        Vec<K> zz = z;
        if (out.span.insert(std::move(zz))) {
            Matrix<K> rep(n.dim, rm.terms[deg].dim);
            for (size_t k = 0; k < out.cbase.size(); ++k)
                if (!z[k].is_zero())
                    rep = rep + z[k] * out.cbase[k];
            out.reps.push_back(std::move(rep));
            out.rep_coords.push_back(z);
            out.rep_gen.push_back(out.nboundary + attempts);
        }
        ++attempts;
    }
    return out;
}

/* comparison lift of a degree-i cocycle phi: P^X_i -> Y to a chain of maps
 * Phi_k: P^X_(i+k) -> P^Y_k, k = 0..levels */
template <class K>
std::vector<Matrix<K>> comparison_lift(const ProjResolution<K>& rx, size_t i,
                                       const Matrix<K>& phi, const ProjResolution<K>& ry,
                                       size_t levels, uint64_t perturb_seed = 0)
{
    std::vector<Matrix<K>> out;
    AYT_CHECK(i + levels < rx.terms.size() || rx.finite,
              "comparison_lift: resolution too short");
    /* Phi_0: aug_Y then nothing = phi  =>  aug_Y * Phi_0 = phi */
    auto solve_step = [&](const FDModule<K>& src, const FDModule<K>& dst, const Matrix<K>& a,
                          const Matrix<K>& b, uint64_t seed) {
        /* find module map F: src -> dst with a*F = b (post-composition) */
        auto hb = hom_space(src, dst);
        size_t rd = b.rows(), cd = b.cols();
        Matrix<K> sys(rd * cd, hb.size());
        for (size_t k = 0; k < hb.size(); ++k) {
            Matrix<K> img = a * hb[k];
            Vec<K> f;
            for (size_t u = 0; u < rd; ++u)
                for (size_t v = 0; v < cd; ++v)
                    f.push_back(img.at(u, v));
            sys.set_col(k, f);
        }
        Vec<K> rhs;
        for (size_t u = 0; u < rd; ++u)
            for (size_t v = 0; v < cd; ++v)
                rhs.push_back(b.at(u, v));
        auto sol = solve_linear(sys, rhs);
        AYT_CHECK(sol.particular.has_value(), "comparison lift: step unsolvable");
        Vec<K> coef = *sol.particular;
        if (seed != 0 && !sol.kernel.empty()) {
            std::mt19937_64 rng(seed);
            for (auto& kv : sol.kernel) {
                long long c = (long long)(rng() % 3) - 1;
                if (c)
                    coef = vec_add(std::move(coef),
                                   vec_scale(scalar_from_int<K>(c, src.algebra->field), kv));
            }
        }
        Matrix<K> f(dst.dim, src.dim);
        for (size_t k = 0; k < hb.size(); ++k)
            if (!coef[k].is_zero())
                f = f + coef[k] * hb[k];
        return f;
    };
    for (size_t k = 0; k <= levels; ++k) {
        size_t xlev = i + k;
        if (xlev >= rx.terms.size() || k >= ry.terms.size()) {
            /* source or target term vanished: lift is zero from here on */
            size_t srcd = xlev < rx.terms.size() ? rx.terms[xlev].dim : 0;
            size_t dstd = k < ry.terms.size() ? ry.terms[k].dim : 0;
            out.push_back(Matrix<K>(dstd, srcd));
            continue;
        }
        if (k == 0)
            out.push_back(solve_step(rx.terms[i], ry.terms[0], ry.aug, phi,
                                     perturb_seed ? perturb_seed + 1 : 0));
        else {
            Matrix<K> rhs = out[k - 1] * rx.d[i + k - 1]; /* Phi_(k-1) after d^X */
            out.push_back(solve_step(rx.terms[xlev], ry.terms[k], ry.d[k - 1], rhs,
                                     perturb_seed ? perturb_seed + 1 + k : 0));
        }
    }
    return out;
}

/* Yoneda composite: f in Ext^i(X,Y) (cocycle phi_f over rx), g in Ext^j(Y,Z)
 * (cocycle phi_g over ry) -> cocycle of f then g[i] in Ext^(i+j)(X,Z). */
template <class K>
Matrix<K> yoneda_cocycle(const ProjResolution<K>& rx, size_t i, const Matrix<K>& phi_f,
                         const ProjResolution<K>& ry, size_t j, const Matrix<K>& phi_g,
                         uint64_t perturb_seed = 0)
{
    if (i + j >= rx.terms.size()) {
        AYT_CHECK(rx.finite, "yoneda: resolution cap exceeded (raise cap)");
        size_t zn = phi_g.rows();
        return Matrix<K>(zn, 0);
    }
    if (j == 0)
        return phi_g.rows() == 0 ? Matrix<K>(0, rx.terms[i + j].dim)
                                 : phi_g * comparison_lift(rx, i, phi_f, ry, 0, perturb_seed)[0];
    auto lift = comparison_lift(rx, i, phi_f, ry, j, perturb_seed);
    return phi_g * lift[j];
}

/* max over simples of the projective dimension, truncated at cap */
struct GlobalDimension {
    bool bounded = false;
    size_t value = 0; /* valid when bounded; otherwise "=> cap" */
};

template <class K> GlobalDimension global_dimension(const AlgebraPtr<K>& a, size_t cap)
{
    AYT_CHECK(cap >= 1, "global_dimension: cap must be positive");
    GlobalDimension out;
    out.bounded = true;
    for (size_t i = 0; i < a->idem.size(); ++i) {
        auto s = simple_module(a, i);
        AYT_CHECK(hom_dim(s, s) == 1, "global_dimension: non-split simple");
        auto r = min_proj_resolution(s, cap);
        if (!r.finite) {
            out.bounded = false;
            out.value = cap;
            return out;
        }
        out.value = std::max(out.value, r.pd);
    }
    return out;
}

/* Transport of a positive-degree class along the syzygy (shift instance of
 * the theta maps): Ext^k(X,X) -> Ext^k(Omega X, Omega X). */
template <class K>
Matrix<K> syzygy_transport_cocycle(const ProjResolution<K>& rx, const SyzygyData<K>& syz,
                                   size_t k, const Matrix<K>& phi)
{
    AYT_CHECK(k >= 1, "syzygy transport: undefined in degree 0");
    AYT_CHECK(k + 1 < rx.terms.size() || rx.finite, "syzygy transport: resolution too short");
    if (k + 1 >= rx.terms.size())
        return Matrix<K>(syz.mod.dim, 0);
    auto lift = comparison_lift(rx, k, phi, rx, 1);
    return syz.coaug * lift[1]; /* P_(k+1) -> P_1 -> Omega X */
}

} // namespace ayt
