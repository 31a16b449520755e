#pragma once

#include "module.hpp"

namespace ayt {

/* e*A as a left A^op-module (i.e. a right A-module). */
template <class K>
FDModule<K> eA_as_op_module(const AlgebraPtr<K>& a, const AlgebraPtr<K>& aop, const Vec<K>& e)
{
    Matrix<K> le = a->left_mult_matrix(e);
    std::vector<Vec<K>> cols;
    for (size_t j = 0; j < a->dim; ++j)
        cols.push_back(le.col(j));
    FDModule<K> reg_op = regular_module(aop); /* A as left A^op-module = right A-module */
    auto sub = submodule(reg_op, cols, false);
    sub.mod.name = "eA";
    return sub.mod;
}

/* D(eA) as a left A-module. */
template <class K>
FDModule<K> dual_of_eA(const AlgebraPtr<K>& a, const AlgebraPtr<K>& aop, const Vec<K>& e)
{
    FDModule<K> ea = eA_as_op_module(a, aop, e);
    FDModule<K> d = duality_D(ea, a);
    d.name = "D(eA)";
    return d;
}

template <class K> Vec<K> idempotent_sum(const FDAlgebra<K>& a, const std::vector<size_t>& eset)
{
    Vec<K> e(a.dim, K(0));
    for (size_t i : eset) {
        AYT_CHECK(i < a.idem.size(), "idempotent index out of range");
        e = vec_add(std::move(e), a.idem[i]);
    }
    return e;
}

/* add(Ae) = add(D(eA)) (the hypothesis for idempotent tilting complexes) */
template <class K>
bool add_Ae_equals_add_DeA(const AlgebraPtr<K>& a, const std::vector<size_t>& eset, uint64_t seed)
{
    auto aop = std::make_shared<const FDAlgebra<K>>(opposite_algebra(*a));
    Vec<K> e = idempotent_sum(*a, eset);
    std::vector<FDModule<K>> cols;
    std::vector<const FDModule<K>*> ptrs;
    for (size_t i : eset)
        cols.push_back(projective_column(a, i));
    for (auto& c : cols)
        ptrs.push_back(&c);
    auto ae = direct_sum(a, ptrs).mod;
    auto dea = dual_of_eA(a, aop, e);
    return add_equal(add_class(ae, seed), add_class(dea, seed));
}

/* Is every indecomposable projective also injective? (nu P_i projective) */
template <class K> bool is_selfinjective(const FDAlgebra<K>& a, uint64_t seed = 0)
{
    AYT_CHECK(!a.idem.empty(), "is_selfinjective: needs idempotents");
    auto ap = std::make_shared<const FDAlgebra<K>>(a);
    (void)seed;
    for (size_t i = 0; i < a.idem.size(); ++i) {
        auto p = projective_column(ap, i);
        auto np = nakayama(p).mod;
        bool proj = false;
        for (size_t j = 0; j < a.idem.size(); ++j)
            if (indec_iso(np, projective_column(ap, j))) {
                proj = true;
                break;
            }
        if (!proj)
            return false;
    }
    return true;
}

/* Maximal nu-stable module: sum of the indecomposable projectives P with
 * nu^i P projective-injective for all i >= 0, detected by chasing the
 * partial permutation nu induces on projectives. */
template <class K> struct MaxNuStable {
    std::vector<size_t> indices; /* surviving projectives */
    FDModule<K> module;
};

template <class K> MaxNuStable<K> max_nu_stable(const AlgebraPtr<K>& a)
{
    size_t n = a->idem.size();
    std::vector<FDModule<K>> projs;
    for (size_t i = 0; i < n; ++i)
        projs.push_back(projective_column(a, i));
    std::vector<int> nu_to(n, -1); /* j if nu P_i = P_j, else -1 */
    for (size_t i = 0; i < n; ++i) {
        auto np = nakayama(projs[i]).mod;
        for (size_t j = 0; j < n; ++j)
            if (indec_iso(np, projs[j])) {
                nu_to[i] = (int)j;
                break;
            }
    }
    /* P_i qualifies iff the forward nu-orbit stays inside dom(nu_to) and every
     * orbit point is also injective, i.e. lies in the image of nu_to. */
    std::vector<bool> in_image(n, false);
    for (size_t i = 0; i < n; ++i)
        if (nu_to[i] >= 0)
            in_image[nu_to[i]] = true;
    MaxNuStable<K> out;
    for (size_t i = 0; i < n; ++i) {
        bool ok = true;
        size_t cur = i;
        std::vector<bool> seen(n, false);
        while (true) {
            if (!in_image[cur] || nu_to[cur] < 0) {
                ok = in_image[cur] && nu_to[cur] >= 0;
                break;
            }
            if (seen[cur])
                break; /* entered a cycle of projective-injectives */
            seen[cur] = true;
            cur = (size_t)nu_to[cur];
        }
        if (ok)
            out.indices.push_back(i);
    }
    std::vector<const FDModule<K>*> ptrs;
    for (size_t i : out.indices)
        ptrs.push_back(&projs[i]);
    out.module = out.indices.empty() ? zero_module(a) : direct_sum(a, ptrs).mod;
    out.module.name = "E";
    return out;
}

/* nabla(e) = { a : e A a = 0 }, the largest left ideal killed by e; it is
 * automatically two-sided (checked). When add(Ae)=add(D(eA)) also checks
 * nabla(e) e = 0. */
template <class K>
AlgebraIdeal<K> nabla_ideal(const AlgebraPtr<K>& a, const std::vector<size_t>& eset,
                            bool check_right_kill = false)
{
    Vec<K> e = idempotent_sum(*a, eset);
    /* basis of eA */
    RowSpan<K> ea(a->dim);
    Matrix<K> le = a->left_mult_matrix(e);
    for (size_t j = 0; j < a->dim; ++j)
        ea.insert(le.col(j));
    Matrix<K> stacked(ea.dim() * a->dim, a->dim);
    for (size_t r = 0; r < ea.dim(); ++r)
        stacked.set_block(r * a->dim, 0, a->left_mult_matrix(ea.rows()[r]));
    AlgebraIdeal<K> out;
    out.parent = a;
    out.basis = kernel_basis(stacked);
    AYT_CHECK(out.is_ideal(), "nabla: result is not a two-sided ideal");
    if (check_right_kill)
        for (auto& v : out.basis)
            AYT_CHECK(vec_is_zero(a->mul(v, e)), "nabla: I e != 0 despite add(Ae)=add(D(eA))");
    return out;
}

/* soc(P) for a sum of projective columns, as an ideal of A (two-sidedness is
 * automatic for basic self-injective algebras and is checked). */
template <class K>
AlgebraIdeal<K> socle_ideal(const AlgebraPtr<K>& a, const std::vector<size_t>& p_indices)
{
    std::vector<Vec<K>> gens;
    for (size_t i : p_indices) {
        Matrix<K> re = a->right_mult_matrix(a->idem[i]);
        RowSpan<K> sp(a->dim);
        for (size_t j = 0; j < a->dim; ++j)
            sp.insert(re.col(j));
        auto col = submodule(regular_module(a), sp.rows(), false);
        for (auto& v : socle_subspace(col.mod))
            gens.push_back(col.map * v);
    }
    AlgebraIdeal<K> out;
    out.parent = a;
    RowSpan<K> sp(a->dim);
    for (auto& g : gens)
        sp.insert(g);
    out.basis = sp.rows();
    AYT_CHECK(out.is_ideal(), "socle ideal: soc(P) is not two-sided here");
    return out;
}

/* Minimal right add(X)-approximation of target. */
template <class K> struct MinApprox {
    FDModule<K> source;
    Matrix<K> phi; /* dim_target x dim_source */
};

template <class K>
MinApprox<K> min_right_approximation(const FDModule<K>& target, const FDModule<K>& x,
                                     uint64_t seed)
{
    auto a = target.algebra;
    AYT_CHECK(x.algebra.get() == a.get(), "approximation: algebra mismatch");
    auto dec = decompose_with_incl(x, seed);
    /* distinct summand classes */
    std::vector<FDModule<K>> classes;
    for (auto& p : dec.parts) {
        bool known = false;
        for (auto& c : classes)
            if (indec_iso(c, p)) {
                known = true;
                break;
            }
        if (!known)
            classes.push_back(p);
    }
    /* universal map: one copy of X_k per basis element of Hom(X_k, target) */
    std::vector<FDModule<K>> copies;
    std::vector<Matrix<K>> maps;
    for (auto& c : classes)
        for (auto& h : hom_space(c, target)) {
            copies.push_back(c);
            maps.push_back(h);
        }
    std::vector<const FDModule<K>*> ptrs;
    for (auto& c : copies)
        ptrs.push_back(&c);
    FDModule<K> src = copies.empty() ? zero_module(a) : direct_sum(a, ptrs).mod;
    Matrix<K> phi(target.dim, src.dim);
    {
        size_t off = 0;
        for (size_t s = 0; s < copies.size(); ++s) {
            phi.set_block(0, off, maps[s]);
            off += copies[s].dim;
        }
    }
    /* testing X-sum for the approximation property */
    std::vector<const FDModule<K>*> cls_ptrs;
    for (auto& c : classes)
        cls_ptrs.push_back(&c);
    FDModule<K> xsum = classes.empty() ? zero_module(a) : direct_sum(a, cls_ptrs).mod;
    auto hom_to_target = hom_space(xsum, target);

    auto is_approx = [&](const FDModule<K>& s, const Matrix<K>& f) {
        if (hom_to_target.empty())
            return true;
        auto hs = hom_space(xsum, s);
        Matrix<K> flat(target.dim * xsum.dim, hs.size());
        for (size_t k = 0; k < hs.size(); ++k) {
            Matrix<K> comp = f * hs[k];
            Vec<K> v;
            for (size_t i = 0; i < comp.rows(); ++i)
                for (size_t j = 0; j < comp.cols(); ++j)
                    v.push_back(comp.at(i, j));
            flat.set_col(k, v);
        }
        /* surjective onto Hom(xsum, target)? */
        Matrix<K> full(target.dim * xsum.dim, hs.size() + hom_to_target.size());
        full.set_block(0, 0, flat);
        for (size_t k = 0; k < hom_to_target.size(); ++k) {
            Vec<K> v;
            for (size_t i = 0; i < hom_to_target[k].rows(); ++i)
                for (size_t j = 0; j < hom_to_target[k].cols(); ++j)
                    v.push_back(hom_to_target[k].at(i, j));
            full.set_col(hs.size() + k, v);
        }
        return rank(flat) == rank(full);
    };
    AYT_CHECK(is_approx(src, phi), "approximation: universal map failed (bug)");

    /* right-minimality: kill summands through Fitting on endomorphisms g with
     * g-then-phi = 0 (phi vanishes on im g). */
    std::mt19937_64 rng(seed ^ 0xabcdef12345ull);
    while (src.dim > 0) {
        auto ends = hom_space(src, src);
        /* U = { g : phi * g = 0 } */
        std::vector<Matrix<K>> u;
        {
            Matrix<K> sys(target.dim * src.dim, ends.size());
            for (size_t k = 0; k < ends.size(); ++k) {
                Matrix<K> comp = phi * ends[k];
                Vec<K> v;
                for (size_t i = 0; i < comp.rows(); ++i)
                    for (size_t j = 0; j < comp.cols(); ++j)
                        v.push_back(comp.at(i, j));
                sys.set_col(k, v);
            }
            for (auto& kv : kernel_basis(sys)) {
                Matrix<K> g(src.dim, src.dim);
                for (size_t k = 0; k < ends.size(); ++k)
                    if (!kv[k].is_zero())
                        g = g + kv[k] * ends[k];
                u.push_back(std::move(g));
            }
        }
        if (u.empty())
            break;
        Matrix<K> pick(src.dim, src.dim);
        bool found = false;
        std::vector<Matrix<K>> cands = u;
        for (int t = 0; t < 16; ++t) {
            Matrix<K> v(src.dim, src.dim);
            for (auto& g : u) {
                long long c = (long long)(rng() % 5) - 2;
                if (c)
                    v = v + scalar_from_int<K>(c, a->field) * g;
            }
            cands.push_back(std::move(v));
        }
        for (auto& g : cands) {
            Matrix<K> p = g;
            size_t it = ceil_log2(src.dim + 1) + 1;
            for (size_t i = 0; i < it; ++i)
                p = p * p;
            if (!p.is_zero()) {
                pick = p;
                found = true;
                break;
            }
        }
        if (!found)
            break; /* all of U nilpotent: right minimal */
        auto ker = kernel_basis(pick);
        AYT_CHECK(ker.size() < src.dim, "approximation: degenerate Fitting");
        auto sub = submodule(src, ker, false);
        phi = phi * sub.map;
        src = sub.mod;
        AYT_CHECK(is_approx(src, phi), "approximation: minimization broke surjectivity");
    }
    MinApprox<K> out;
    out.source = std::move(src);
    out.phi = std::move(phi);
    return out;
}

} // namespace ayt
