#pragma once

#include "complex.hpp"
#include "snf.hpp"

namespace ayt {

/* decomposition of a radical complex into indecomposable direct summands,
 * with inclusion/projection chain maps (per-degree, over the full window) */
template <class K> struct ComplexDecomposition {
    std::vector<Complex<K>> parts;
    std::vector<std::vector<Matrix<K>>> incl; /* part term -> X term, per degree of X */
    std::vector<std::vector<Matrix<K>>> proj; /* X term -> part term */
    int lo = 0, hi = -1;                      /* degree window of X */
};

namespace detail {

/* strict idempotent chain map from a homotopy-idempotent representative on a
 * radical complex (null-homotopic self-maps there are nilpotent) */
template <class K>
std::vector<Matrix<K>> lift_strict_idempotent(std::vector<Matrix<K>> g)
{
    auto square = [&](const std::vector<Matrix<K>>& f) {
        std::vector<Matrix<K>> out;
        for (size_t k = 0; k < f.size(); ++k)
            out.push_back(f[k] * f[k]);
        return out;
    };
    for (int it = 0; it < 64; ++it) {
        auto g2 = square(g);
        bool strict = true;
        for (size_t k = 0; k < g.size(); ++k)
            if (!(g2[k] - g[k]).is_zero()) {
                strict = false;
                break;
            }
        if (strict)
            return g;
        /* g <- 3g^2 - 2g^3 */
        std::vector<Matrix<K>> ng;
        K three = K(3), two = K(2);
        for (size_t k = 0; k < g.size(); ++k) {
            Matrix<K> g3 = g2[k] * g[k];
            ng.push_back(three * g2[k] - two * g3);
        }
        g = std::move(ng);
    }
    throw AytError("idempotent lift: did not converge (complex not radical?)");
}

} // namespace detail

template <class K>
FDAlgebra<K> end_algebra_raw(const Complex<K>& x, const HomKSpace<K>& h)
{
    size_t n = h.dim();
    FDAlgebra<K> b;
    b.field = x.algebra->field;
    b.dim = n;
    b.lmul.assign(n, Matrix<K>(n, n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto comp = compose_chain(h, h.reps[i], h.reps[j]); /* i then j */
            b.lmul[i].set_col(j, h.coords_of(comp));
        }
    b.fill_rmul();
    b.unit = h.coords_of(identity_chain(x, h));
    for (size_t i = 0; i < n; ++i)
        b.labels.push_back("f" + std::to_string(i));
    b.bind_data();
    return b;
}

template <class K>
ComplexDecomposition<K> decompose_complex(const Complex<K>& xin, uint64_t seed)
{
    Complex<K> x = normalize_radical(xin);
    ComplexDecomposition<K> out;
    out.lo = x.lo;
    out.hi = x.hi();
    if (x.terms.empty() || x.is_zero())
        return out;
    auto h = hom_in_K(x, x, 0);
    auto window_id = [&] {
        std::vector<Matrix<K>> id;
        for (int d = x.lo; d <= x.hi(); ++d)
            id.push_back(Matrix<K>::identity(x.term_dim(d)));
        return id;
    };
    auto pad = [&](const std::vector<Matrix<K>>& comps) {
        /* h's window may be smaller than x's degree range */
        std::vector<Matrix<K>> full;
        for (int d = x.lo; d <= x.hi(); ++d) {
            if (d >= h.lo && d <= h.hi)
                full.push_back(comps[d - h.lo]);
            else
                full.push_back(Matrix<K>(x.term_dim(d), x.term_dim(d)));
        }
        return full;
    };
    bool split_found = false;
    std::vector<Matrix<K>> e_strict;
    if (h.dim() > 1) {
        FDAlgebra<K> b = end_algebra_raw(x, h);
        auto sp = try_split_idempotent(b, b.unit, seed);
        if (sp) {
            /* realize the class as a strict chain map and lift */
            std::vector<Matrix<K>> g;
            for (int d = h.lo; d <= h.hi; ++d) {
                Matrix<K> m(x.term_dim(d), x.term_dim(d));
                for (size_t k = 0; k < h.dim(); ++k)
                    if (!sp->first[k].is_zero())
                        m = m + sp->first[k] * h.reps[k][d - h.lo];
                g.push_back(std::move(m));
            }
            e_strict = detail::lift_strict_idempotent(pad(g));
            split_found = true;
        } else {
            AYT_CHECK(split_local_radical(b).has_value(),
                      "decompose_complex: End neither splits nor certifies local");
        }
    }
    if (!split_found) {
        out.parts.push_back(x);
        out.incl.push_back(window_id());
        out.proj.push_back(window_id());
        return out;
    }
    /* chain-map check, then split termwise into ker(e) and im(e) */
    for (size_t k = 0; k + 1 < e_strict.size(); ++k)
        AYT_CHECK(e_strict[k + 1] * (*x.differential(x.lo + (int)k)) ==
                      (*x.differential(x.lo + (int)k)) * e_strict[k],
                  "decompose_complex: lifted idempotent is not a chain map");
    struct Piece {
        Complex<K> cpx;
        std::vector<Matrix<K>> incl, proj;
    };
    auto build_piece = [&](bool image) {
        Piece p;
        p.cpx.algebra = x.algebra;
        p.cpx.pool = x.pool;
        p.cpx.lo = x.lo;
        std::vector<Matrix<K>> incls;
        std::vector<FDModule<K>> mods;
        for (int d = x.lo; d <= x.hi(); ++d) {
            const Matrix<K>& e = e_strict[d - x.lo];
            std::vector<Vec<K>> span;
            if (image) {
                for (size_t j = 0; j < e.cols(); ++j)
                    span.push_back(e.col(j));
            } else
                span = kernel_basis(e);
            auto sub = submodule(x.term(d)->mod, span, false);
            mods.push_back(sub.mod);
            incls.push_back(sub.map);
        }
        /* differentials restrict */
        for (int d = x.lo; d < x.hi(); ++d) {
            auto c = solve_matrix(incls[d + 1 - x.lo],
                                  (*x.differential(d)) * incls[d - x.lo]);
            AYT_CHECK(c.has_value(), "decompose_complex: differential does not restrict");
            p.cpx.diff.push_back(*c);
        }
        /* retag terms over the pool and change bases */
        std::vector<Matrix<K>> bases;
        for (int d = x.lo; d <= x.hi(); ++d) {
            auto rt = retag(mods[d - x.lo], x.pool, seed + 17 * (d - x.lo));
            p.cpx.terms.push_back(rt.term);
            bases.push_back(rt.base_change);
        }
        for (int d = x.lo; d < x.hi(); ++d) {
            auto inv = inverse(bases[d + 1 - x.lo]);
            p.cpx.diff[d - x.lo] = (*inv) * p.cpx.diff[d - x.lo] * bases[d - x.lo];
        }
        /* inclusion/projection in pooled coordinates */
        for (int d = x.lo; d <= x.hi(); ++d) {
            Matrix<K> incl_pooled = incls[d - x.lo] * bases[d - x.lo];
            p.incl.push_back(incl_pooled);
        }
        return p;
    };
    Piece pk = build_piece(false), pi = build_piece(true);
    /* projections: [incl_k | incl_i]^(-1), rows split */
    std::vector<Matrix<K>> projk, proji;
    for (int d = x.lo; d <= x.hi(); ++d) {
        size_t n = x.term_dim(d);
        size_t nk = pk.incl[d - x.lo].cols(), ni = pi.incl[d - x.lo].cols();
        Matrix<K> c(n, nk + ni);
        c.set_block(0, 0, pk.incl[d - x.lo]);
        c.set_block(0, nk, pi.incl[d - x.lo]);
        auto cinv = inverse(c);
        AYT_CHECK(cinv.has_value(), "decompose_complex: splitting not a direct sum");
        projk.push_back(cinv->submatrix(0, 0, nk, n));
        proji.push_back(cinv->submatrix(nk, 0, ni, n));
    }
    pk.proj = projk;
    pi.proj = proji;
    for (auto* piece : {&pk, &pi}) {
        piece->cpx.trim();
        auto sub = decompose_complex(piece->cpx, seed + 31);
        for (size_t s = 0; s < sub.parts.size(); ++s) {
            out.parts.push_back(sub.parts[s]);
            /* compose inclusions/projections, re-padding to x's window */
            std::vector<Matrix<K>> ci, cp;
            for (int d = x.lo; d <= x.hi(); ++d) {
                size_t pd = sub.parts[s].term_dim(d);
                /* sub's incl/proj live on its own degree window */
                Matrix<K> sincl = (d >= sub.lo && d <= sub.hi)
                                      ? sub.incl[s][d - sub.lo]
                                      : Matrix<K>(0, 0);
                Matrix<K> sproj = (d >= sub.lo && d <= sub.hi)
                                      ? sub.proj[s][d - sub.lo]
                                      : Matrix<K>(0, 0);
                if (pd == 0 || sincl.rows() == 0) {
                    ci.push_back(Matrix<K>(x.term_dim(d), pd));
                    cp.push_back(Matrix<K>(pd, x.term_dim(d)));
                } else {
                    ci.push_back(piece->incl[d - x.lo] * sincl);
                    cp.push_back(sproj * piece->proj[d - x.lo]);
                }
            }
            out.incl.push_back(std::move(ci));
            out.proj.push_back(std::move(cp));
        }
    }
    return out;
}

/* End_K of a complex, with idempotents from the indecomposable summands. */
template <class K> struct EndOfComplex {
    Complex<K> normalized;
    HomKSpace<K> hom;
    std::shared_ptr<FDAlgebra<K>> alg;
    ComplexDecomposition<K> dec;
};

template <class K>
EndOfComplex<K> end_algebra_of_complex(const Complex<K>& xin, uint64_t seed,
                                       bool want_radical = true)
{
    EndOfComplex<K> out;
    out.normalized = normalize_radical(xin);
    out.hom = hom_in_K(out.normalized, out.normalized, 0);
    auto alg = std::make_shared<FDAlgebra<K>>(end_algebra_raw(out.normalized, out.hom));
    out.dec = decompose_complex(out.normalized, seed);
    for (size_t s = 0; s < out.dec.parts.size(); ++s) {
        /* idempotent = proj_s then incl_s as a chain self-map */
        std::vector<Matrix<K>> comps;
        for (int d = out.hom.lo; d <= out.hom.hi; ++d)
            comps.push_back(out.dec.incl[s][d - out.dec.lo] *
                            out.dec.proj[s][d - out.dec.lo]);
        alg->idem.push_back(out.hom.coords_of(comps));
    }
    {
        /* order idempotents deterministically as found; sanity checks */
        Vec<K> s(alg->dim, K(0));
        for (auto& e : alg->idem)
            s = vec_add(std::move(s), e);
        AYT_CHECK(s == alg->unit, "end_algebra: summand projections do not sum to 1");
    }
    if (want_radical)
        compute_radical_basic(*alg);
    alg->verify();
    out.alg = alg;
    return out;
}

/* ---- tilting report ---- */

enum class Generation { ByConstruction, NecessaryOnly };

struct TiltingReport {
    bool self_orthogonal = true;
    int failing_shift = 0;
    size_t k0_rank = 0;
    size_t num_projectives = 0;
    bool k0_rank_full = false;
    Generation generation = Generation::NecessaryOnly;
    bool verdict = false;
};

template <class K>
TiltingReport tilting_report(const Complex<K>& tin, Generation gen, uint64_t seed)
{
    Complex<K> t = normalize_radical(tin);
    TiltingReport rep;
    rep.generation = gen;
    int w = t.terms.empty() ? 0 : t.hi() - t.lo;
    for (int i = -w; i <= w; ++i) {
        if (i == 0)
            continue;
        if (hom_k_dim(t, t, i) != 0) {
            rep.self_orthogonal = false;
            rep.failing_shift = i;
            break;
        }
    }
    auto dec = decompose_complex(t, seed);
    size_t np = t.pool->mods.size();
    rep.num_projectives = np;
    ZMat classes = zmat(dec.parts.size(), np);
    for (size_t s = 0; s < dec.parts.size(); ++s)
        for (int d = dec.parts[s].lo; d <= dec.parts[s].hi(); ++d)
            for (int p : dec.parts[s].term(d)->parts)
                classes[s][p] += (d % 2 == 0 ? 1 : -1);
    auto snf = snf_diagonal(classes);
    for (auto x : snf)
        if (x != 0)
            ++rep.k0_rank;
    rep.k0_rank_full = rep.k0_rank == np;
    rep.verdict = rep.self_orthogonal && rep.k0_rank_full;
    return rep;
}

/* termwise Nakayama functor on a complex of projectives */
template <class K> Complex<K> nakayama_complex(const Complex<K>& t)
{
    Complex<K> out;
    out.algebra = t.algebra;
    out.lo = t.lo;
    std::vector<NakayamaImage<K>> imgs;
    for (int d = t.lo; d <= t.hi(); ++d) {
        imgs.push_back(nakayama(t.term(d)->mod));
        out.terms.push_back(make_untagged_term(imgs.back().mod));
    }
    for (int d = t.lo; d < t.hi(); ++d)
        out.diff.push_back(
            nakayama_on_map(*t.differential(d), imgs[d - t.lo], imgs[d + 1 - t.lo]));
    return out;
}

/* almost nu-stable condition for a pair (T in degrees <= 0, Qbar in >= 0) */
template <class K>
bool is_almost_nu_stable(const Complex<K>& t, const Complex<K>& qbar, uint64_t seed)
{
    AYT_CHECK(t.terms.empty() || t.hi() <= 0, "almost nu-stable: T must live in degrees <= 0");
    AYT_CHECK(qbar.terms.empty() || qbar.lo >= 0,
              "almost nu-stable: Qbar must live in degrees >= 0");
    auto side = [&](const Complex<K>& c, bool negative) {
        std::vector<FDModule<K>> mods;
        for (int d = c.lo; d <= c.hi(); ++d) {
            if (negative && d >= 0)
                continue;
            if (!negative && d <= 0)
                continue;
            if (c.term_dim(d))
                mods.push_back(c.term(d)->mod);
        }
        if (mods.empty())
            return true;
        std::vector<const FDModule<K>*> ptrs;
        for (auto& m : mods)
            ptrs.push_back(&m);
        auto u = direct_sum(c.algebra, ptrs).mod;
        auto nu = nakayama(u).mod;
        return add_equal(add_class(u, seed), add_class(nu, seed));
    };
    return side(t, true) && side(qbar, false);
}

/* ---- quotient complex T/IT and the subcomplex IT ---- */

template <class K> struct QuotientComplexData {
    QuotientAlgebra<K> qa;
    Complex<K> tbar;           /* over A/I, retagged over its projectives */
    Complex<K> tbar_as_A;      /* same terms viewed as A-modules (untagged) */
    Complex<K> it;             /* subcomplex I T (over A, untagged) */
    std::vector<Matrix<K>> pi; /* T^d -> (T/IT)^d */
};

template <class K>
QuotientComplexData<K> quotient_complex(const Complex<K>& t, const AlgebraIdeal<K>& ideal,
                                        uint64_t seed)
{
    QuotientComplexData<K> out;
    out.qa = quotient_by_ideal(t.algebra, ideal);
    AlgebraPtr<K> abar = out.qa.alg;
    out.tbar.algebra = abar;
    out.tbar.pool = projective_pool(abar);
    out.tbar.lo = t.lo;
    out.tbar_as_A.algebra = t.algebra;
    out.tbar_as_A.lo = t.lo;
    out.it.algebra = t.algebra;
    out.it.lo = t.lo;
    std::vector<Matrix<K>> it_incl, qsection;
    std::vector<FDModule<K>> tbar_over_A;
    for (int d = t.lo; d <= t.hi(); ++d) {
        const FDModule<K>& m = t.term(d)->mod;
        std::vector<Vec<K>> span;
        for (auto& r : ideal.basis) {
            Matrix<K> rm = m.act_of(r);
            for (size_t j = 0; j < m.dim; ++j)
                span.push_back(rm.col(j));
        }
        auto sub = submodule(m, span, false);
        out.it.terms.push_back(make_untagged_term(sub.mod));
        it_incl.push_back(sub.map);
        auto quot = quotient_module(m, span);
        out.pi.push_back(quot.map);
        tbar_over_A.push_back(quot.mod);
        out.tbar_as_A.terms.push_back(make_untagged_term(quot.mod));
        /* section of pi */
        auto s = solve_matrix(quot.map, Matrix<K>::identity(quot.mod.dim));
        AYT_CHECK(s.has_value(), "quotient_complex: projection has no section");
        qsection.push_back(*s);
        /* as an A/I-module */
        FDModule<K> mb;
        mb.algebra = abar;
        mb.dim = quot.mod.dim;
        mb.act.resize(abar->dim);
        for (size_t k = 0; k < abar->dim; ++k)
            mb.act[k] = quot.mod.act_of(out.qa.embed.col(k));
        auto rt = retag(mb, out.tbar.pool, seed + (d - t.lo));
        out.tbar.terms.push_back(rt.term);
        qsection.back() = qsection.back() * rt.base_change; /* pooled -> T^d */
        out.pi.back() = [&] {
            auto inv = inverse(rt.base_change);
            return (*inv) * out.pi.back();
        }();
    }
    for (int d = t.lo; d < t.hi(); ++d) {
        const Matrix<K>& dd = *t.differential(d);
        out.it.diff.push_back([&] {
            auto c = solve_matrix(it_incl[d + 1 - t.lo], dd * it_incl[d - t.lo]);
            AYT_CHECK(c.has_value(), "quotient_complex: IT differential");
            return *c;
        }());
        Matrix<K> dbar = out.pi[d + 1 - t.lo] * dd * qsection[d - t.lo];
        out.tbar.diff.push_back(dbar);
        out.tbar_as_A.diff.push_back(dbar);
    }
    /* tbar_as_A terms must match the pooled coordinates */
    for (int d = t.lo; d <= t.hi(); ++d) {
        FDModule<K> ma;
        ma.algebra = t.algebra;
        ma.dim = out.tbar.term(d)->mod.dim;
        ma.act.resize(t.algebra->dim);
        for (size_t k = 0; k < t.algebra->dim; ++k)
            ma.act[k] = out.tbar.term(d)->mod.act_of(out.qa.proj.col(k));
        out.tbar_as_A.terms[d - t.lo] = make_untagged_term(ma);
    }
    /* keep degree alignment with T (no trimming); zero terms are harmless */
    return out;
}

} // namespace ayt
