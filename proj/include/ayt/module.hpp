#pragma once

#include "algebra.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace ayt {

/* Finitely generated left module over an FDAlgebra: one action matrix per
 * algebra basis element, (a*b)m = a(bm). */
template <class K> struct FDModule {
    AlgebraPtr<K> algebra;
    size_t dim = 0;
    std::vector<Matrix<K>> act;
    std::string name;

    Matrix<K> act_of(const Vec<K>& x) const
    {
        Matrix<K> m(dim, dim);
        for (size_t a = 0; a < x.size(); ++a)
            if (!x[a].is_zero())
                m = m + x[a] * act[a];
        return m;
    }
    void verify() const
    {
        const auto& A = *algebra;
        AYT_CHECK(act.size() == A.dim, "module: action table size mismatch");
        AYT_CHECK(act_of(A.unit) == Matrix<K>::identity(dim), "module: unit acts nontrivially");
        for (size_t a = 0; a < A.dim; ++a)
            for (size_t b = 0; b < A.dim; ++b)
                AYT_CHECK(act_of(A.lmul[a].col(b)) == act[a] * act[b],
                          "module: action violates structure constants");
    }
};

template <class K> FDModule<K> zero_module(const AlgebraPtr<K>& a)
{
    FDModule<K> m;
    m.algebra = a;
    m.dim = 0;
    m.act.assign(a->dim, Matrix<K>(0, 0));
    m.name = "0";
    return m;
}

template <class K> FDModule<K> regular_module(const AlgebraPtr<K>& a)
{
    FDModule<K> m;
    m.algebra = a;
    m.dim = a->dim;
    m.act = a->lmul;
    m.name = "A";
    return m;
}

/* A e_i as a submodule of the regular module. */
template <class K> FDModule<K> projective_column(const AlgebraPtr<K>& a, size_t i);

/* direct sum with block offsets */
template <class K> struct DirectSum {
    FDModule<K> mod;
    std::vector<size_t> offsets; /* block start per summand; sum of dims at the end */
};

template <class K> DirectSum<K> direct_sum(const AlgebraPtr<K>& a,
                                           const std::vector<const FDModule<K>*>& parts)
{
    DirectSum<K> out;
    out.mod.algebra = a;
    size_t total = 0;
    for (auto* p : parts) {
        out.offsets.push_back(total);
        total += p->dim;
    }
    out.offsets.push_back(total);
    out.mod.dim = total;
    out.mod.act.assign(a->dim, Matrix<K>(total, total));
    for (size_t b = 0; b < a->dim; ++b)
        for (size_t s = 0; s < parts.size(); ++s)
            out.mod.act[b].set_block(out.offsets[s], out.offsets[s], parts[s]->act[b]);
    return out;
}

/* submodule spanned by the given vectors (must be action-stable) */
template <class K> struct SubQuotient {
    FDModule<K> mod;
    Matrix<K> map; /* inclusion (dim_M x dim_sub) or projection (dim_quot x dim_M) */
};

template <class K>
SubQuotient<K> submodule(const FDModule<K>& m, const std::vector<Vec<K>>& span,
                         bool check_stable = true)
{
    RowSpan<K> sp(m.dim);
    for (auto& v : span)
        sp.insert(v);
    std::vector<Vec<K>> basis = sp.rows();
    if (check_stable)
        for (auto& v : basis)
            for (size_t a = 0; a < m.act.size(); ++a)
                AYT_CHECK(sp.contains(m.act[a] * v), "submodule: span not action-stable");
    SubQuotient<K> out;
    out.map = Matrix<K>::from_cols(m.dim, basis);
    out.mod.algebra = m.algebra;
    out.mod.dim = basis.size();
    out.mod.act.resize(m.act.size());
    for (size_t a = 0; a < m.act.size(); ++a) {
        auto coords = solve_matrix(out.map, m.act[a] * out.map);
        AYT_CHECK(coords.has_value(), "submodule: action does not restrict");
        out.mod.act[a] = *coords;
    }
    return out;
}

template <class K>
SubQuotient<K> quotient_module(const FDModule<K>& m, const std::vector<Vec<K>>& span)
{
    RowSpan<K> sp(m.dim);
    for (auto& v : span)
        sp.insert(v);
    auto comp = sp.complement();
    SubQuotient<K> out;
    out.map = Matrix<K>(comp.size(), m.dim);
    for (size_t j = 0; j < m.dim; ++j) {
        Vec<K> r = sp.residue(unit_vec<K>(m.dim, j));
        for (size_t i = 0; i < comp.size(); ++i)
            out.map.at(i, j) = r[comp[i]];
    }
    Matrix<K> embed(m.dim, comp.size());
    for (size_t i = 0; i < comp.size(); ++i)
        embed.at(comp[i], i) = K(1);
    out.mod.algebra = m.algebra;
    out.mod.dim = comp.size();
    out.mod.act.resize(m.act.size());
    for (size_t a = 0; a < m.act.size(); ++a)
        out.mod.act[a] = out.map * m.act[a] * embed;
    return out;
}

template <class K> FDModule<K> projective_column(const AlgebraPtr<K>& a, size_t i)
{
    Matrix<K> re = a->right_mult_matrix(a->idem[i]); /* x -> x e_i */
    std::vector<Vec<K>> cols;
    for (size_t j = 0; j < a->dim; ++j)
        cols.push_back(re.col(j));
    auto reg = regular_module(a);
    auto sub = submodule(reg, cols, false);
    sub.mod.name = "P" + std::to_string(i + 1);
    return sub.mod;
}

/* basis of Hom_A(M, N) as matrices (intertwiners), deterministic order */
template <class K>
std::vector<Matrix<K>> hom_space(const FDModule<K>& m, const FDModule<K>& n)
{
    AYT_CHECK(m.algebra.get() == n.algebra.get(), "hom_space: algebra mismatch");
    size_t dm = m.dim, dn = n.dim;
    if (dm == 0 || dn == 0)
        return {};
    auto gens = m.algebra->generator_indices();
    Matrix<K> sys(gens.size() * dn * dm, dn * dm);
    size_t row = 0;
    for (size_t g : gens) {
        /* act_N[g] F - F act_M[g] = 0, F flattened row-major (i,j) -> i*dm+j */
        for (size_t i = 0; i < dn; ++i)
            for (size_t j = 0; j < dm; ++j) {
                for (size_t k = 0; k < dn; ++k) {
                    const K& c = n.act[g].at(i, k);
                    if (!c.is_zero())
                        sys.at(row, k * dm + j) += c;
                }
                for (size_t k = 0; k < dm; ++k) {
                    const K& c = m.act[g].at(k, j);
                    if (!c.is_zero())
                        sys.at(row, i * dm + k) -= c;
                }
                ++row;
            }
    }
    std::vector<Matrix<K>> out;
    for (auto& v : kernel_basis(sys)) {
        Matrix<K> f(dn, dm);
        for (size_t i = 0; i < dn; ++i)
            for (size_t j = 0; j < dm; ++j)
                f.at(i, j) = v[i * dm + j];
        out.push_back(std::move(f));
    }
    return out;
}

template <class K> size_t hom_dim(const FDModule<K>& m, const FDModule<K>& n)
{
    return hom_space(m, n).size();
}

/* radical rad(A)M, socle ann_M(rad A), top M/rad M */
template <class K> std::vector<Vec<K>> radical_subspace(const FDModule<K>& m)
{
    AYT_CHECK(m.algebra->rad_known, "radical_subspace: algebra radical unknown");
    RowSpan<K> sp(m.dim);
    for (auto& r : m.algebra->rad) {
        Matrix<K> ra = m.act_of(r);
        for (size_t j = 0; j < m.dim; ++j)
            sp.insert(ra.col(j));
    }
    return sp.rows();
}

template <class K> std::vector<Vec<K>> socle_subspace(const FDModule<K>& m)
{
    AYT_CHECK(m.algebra->rad_known, "socle_subspace: algebra radical unknown");
    const auto& rad = m.algebra->rad;
    if (rad.empty()) {
        std::vector<Vec<K>> all;
        for (size_t j = 0; j < m.dim; ++j)
            all.push_back(unit_vec<K>(m.dim, j));
        return all;
    }
    Matrix<K> stacked(rad.size() * m.dim, m.dim);
    for (size_t r = 0; r < rad.size(); ++r)
        stacked.set_block(r * m.dim, 0, m.act_of(rad[r]));
    return kernel_basis(stacked);
}

template <class K> struct SocRadTop {
    SubQuotient<K> socle, radical, top;
};

template <class K> SocRadTop<K> socle_radical_top(const FDModule<K>& m)
{
    SocRadTop<K> out;
    auto rad = radical_subspace(m);
    out.radical = submodule(m, rad, false);
    out.top = quotient_module(m, rad);
    out.socle = submodule(m, socle_subspace(m), false);
    return out;
}

template <class K> FDModule<K> simple_module(const AlgebraPtr<K>& a, size_t i)
{
    auto p = projective_column(a, i);
    auto top = quotient_module(p, radical_subspace(p));
    top.mod.name = "S" + std::to_string(i + 1);
    return top.mod;
}

/* duality D = Hom_k(-, k): left A-module -> left A^op-module */
template <class K>
FDModule<K> duality_D(const FDModule<K>& m, const AlgebraPtr<K>& opposite)
{
    FDModule<K> d;
    d.algebra = opposite;
    d.dim = m.dim;
    d.act.resize(m.act.size());
    for (size_t a = 0; a < m.act.size(); ++a)
        d.act[a] = m.act[a].transpose();
    d.name = "D(" + m.name + ")";
    return d;
}

/* Nakayama functor on a projective module: nu P = D Hom_A(P, A).
 * Returns the module together with the Hom_A(P,A) basis used (so nu can be
 * applied to maps in matching coordinates). */
template <class K> struct NakayamaImage {
    FDModule<K> mod;
    std::vector<Matrix<K>> hom_basis; /* basis of Hom_A(P, A) */
};

template <class K> struct ProjCover;
template <class K> ProjCover<K> projective_cover(const FDModule<K>& m);

/* M projective iff its cover splits (zero syzygy) */
template <class K> bool is_projective_module(const FDModule<K>& m)
{
    if (m.dim == 0)
        return true;
    auto pc = projective_cover(m);
    return pc.proj.dim == m.dim;
}

template <class K> NakayamaImage<K> nakayama(const FDModule<K>& p, bool check_projective = true)
{
    if (check_projective)
        AYT_CHECK(is_projective_module(p), "nakayama: input module is not projective");
    const auto& a = *p.algebra;
    auto reg = regular_module(p.algebra);
    NakayamaImage<K> out;
    out.hom_basis = hom_space(p, reg);
    size_t h = out.hom_basis.size();
    /* right action of A on Hom(P,A): (f.b)(x) = f(x) b; as matrices rmul[b] F */
    std::vector<Matrix<K>> flat;
    for (auto& f : out.hom_basis) {
        Vec<K> v;
        for (size_t i = 0; i < f.rows(); ++i)
            for (size_t j = 0; j < f.cols(); ++j)
                v.push_back(f.at(i, j));
        flat.push_back(Matrix<K>::from_cols(v.size(), {v}));
    }
    Matrix<K> basis_mat(a.dim * p.dim, h);
    for (size_t k = 0; k < h; ++k)
        basis_mat.set_col(k, flat[k].col(0));
    out.mod.algebra = p.algebra;
    out.mod.dim = h;
    out.mod.act.resize(a.dim);
    for (size_t b = 0; b < a.dim; ++b) {
        Matrix<K> images(a.dim * p.dim, h);
        for (size_t k = 0; k < h; ++k) {
            Matrix<K> g = a.rmul[b] * out.hom_basis[k];
            Vec<K> v;
            for (size_t i = 0; i < g.rows(); ++i)
                for (size_t j = 0; j < g.cols(); ++j)
                    v.push_back(g.at(i, j));
            images.set_col(k, v);
        }
        auto rho = solve_matrix(basis_mat, images);
        AYT_CHECK(rho.has_value(), "nakayama: right action leaves the hom space");
        out.mod.act[b] = rho->transpose(); /* D turns the right action into a left one */
    }
    out.mod.name = "nu(" + p.name + ")";
    return out;
}

/* nu on a map f: P -> Q of projectives, in the coordinates produced by
 * nakayama(P) and nakayama(Q): Hom(Q,A) -> Hom(P,A), g -> f then g, dualized. */
template <class K>
Matrix<K> nakayama_on_map(const Matrix<K>& f, const NakayamaImage<K>& np,
                          const NakayamaImage<K>& nq)
{
    size_t hp = np.hom_basis.size(), hq = nq.hom_basis.size();
    if (hp == 0 || hq == 0)
        return Matrix<K>(hp, hq);
    size_t rows = np.hom_basis[0].rows() * np.hom_basis[0].cols();
    Matrix<K> basis_mat(rows, hp);
    for (size_t k = 0; k < hp; ++k) {
        Vec<K> v;
        for (size_t i = 0; i < np.hom_basis[k].rows(); ++i)
            for (size_t j = 0; j < np.hom_basis[k].cols(); ++j)
                v.push_back(np.hom_basis[k].at(i, j));
        basis_mat.set_col(k, v);
    }
    Matrix<K> images(rows, hq);
    for (size_t k = 0; k < hq; ++k) {
        Matrix<K> comp = nq.hom_basis[k] * f; /* f then g */
        Vec<K> v;
        for (size_t i = 0; i < comp.rows(); ++i)
            for (size_t j = 0; j < comp.cols(); ++j)
                v.push_back(comp.at(i, j));
        images.set_col(k, v);
    }
    auto m = solve_matrix(basis_mat, images);
    AYT_CHECK(m.has_value(), "nakayama_on_map: composite leaves the hom space");
    return m->transpose();
}

/* projective cover P(M) -> M and the syzygy */
template <class K> struct ProjCover {
    FDModule<K> proj;
    std::vector<size_t> parts;   /* idempotent index per indecomposable summand */
    std::vector<size_t> offsets; /* block offsets in proj */
    Matrix<K> epi;               /* dim_M x dim_P */
};

template <class K> ProjCover<K> projective_cover(const FDModule<K>& m)
{
    const auto& a = *m.algebra;
    AYT_CHECK(!a.idem.empty() && a.rad_known, "projective_cover: needs idempotents + radical");
    auto radspan = radical_subspace(m);
    auto top = quotient_module(m, radspan);
    ProjCover<K> out;
    std::vector<FDModule<K>> columns;
    std::vector<Vec<K>> gens; /* lifted generators in M */
    for (size_t v = 0; v < a.idem.size(); ++v) {
        Matrix<K> etop = top.mod.act_of(a.idem[v]);
        RowSpan<K> img(top.mod.dim);
        std::vector<size_t> fresh;
        for (size_t j = 0; j < top.mod.dim; ++j)
            if (img.insert(etop.col(j)))
                fresh.push_back(j);
        /* lift: x = e_v * (preimage of top basis vector) */
        Matrix<K> ev = m.act_of(a.idem[v]);
        for (size_t j : fresh) {
            /* preimage of unit vector j under proj: pick any, then project to e_v M */
            auto sol = solve_linear(top.map, etop.col(j));
            AYT_CHECK(sol.particular.has_value(), "projective_cover: lift failed");
            gens.push_back(ev * *sol.particular);
            out.parts.push_back(v);
            columns.push_back(projective_column(m.algebra, v));
        }
    }
    std::vector<const FDModule<K>*> ptrs;
    for (auto& c : columns)
        ptrs.push_back(&c);
    auto ds = direct_sum(m.algebra, ptrs);
    out.proj = std::move(ds.mod);
    out.offsets = std::move(ds.offsets);
    out.epi = Matrix<K>(m.dim, out.proj.dim);
    for (size_t s = 0; s < columns.size(); ++s) {
        /* P_v basis vector b (inside A) maps to act_M(b) * gen */
        Matrix<K> incl(a.dim, columns[s].dim); /* basis of Ae_v inside A */
        {
            Matrix<K> re = a.right_mult_matrix(a.idem[out.parts[s]]);
            RowSpan<K> sp(a.dim);
            std::vector<Vec<K>> basis;
            for (size_t j = 0; j < a.dim; ++j)
                sp.insert(re.col(j));
            basis = sp.rows();
            incl = Matrix<K>::from_cols(a.dim, basis);
        }
        for (size_t j = 0; j < columns[s].dim; ++j) {
            Vec<K> b = incl.col(j);
            Vec<K> img = m.act_of(b) * gens[s];
            for (size_t i = 0; i < m.dim; ++i)
                out.epi.at(i, out.offsets[s] + j) = img[i];
        }
    }
    AYT_CHECK(rank(out.epi) == m.dim, "projective_cover: not surjective");
    return out;
}

template <class K> FDModule<K> syzygy(const FDModule<K>& m)
{
    if (m.dim == 0)
        return zero_module(m.algebra);
    auto pc = projective_cover(m);
    auto ker = kernel_basis(pc.epi);
    auto sub = submodule(pc.proj, ker, false);
    sub.mod.name = "Omega(" + m.name + ")";
    return sub.mod;
}

/* End(M) as an abstract algebra in a given hom basis; mult = "then". */
template <class K>
FDAlgebra<K> endomorphism_algebra(const FDModule<K>& m, const std::vector<Matrix<K>>& homs)
{
    size_t n = homs.size();
    FDAlgebra<K> e;
    e.field = m.algebra->field;
    e.dim = n;
    if (n == 0)
        return e;
    size_t fl = m.dim * m.dim;
    Matrix<K> basis_mat(fl, n);
    for (size_t k = 0; k < n; ++k) {
        Vec<K> v;
        for (size_t i = 0; i < m.dim; ++i)
            for (size_t j = 0; j < m.dim; ++j)
                v.push_back(homs[k].at(i, j));
        basis_mat.set_col(k, v);
    }
    auto coords_of = [&](const Matrix<K>& f) {
        Vec<K> v;
        for (size_t i = 0; i < m.dim; ++i)
            for (size_t j = 0; j < m.dim; ++j)
                v.push_back(f.at(i, j));
        auto sol = solve_matrix(basis_mat, Matrix<K>::from_cols(fl, {v}));
        AYT_CHECK(sol.has_value(), "endomorphism_algebra: product escapes basis");
        return sol->col(0);
    };
    e.lmul.assign(n, Matrix<K>(n, n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            e.lmul[i].set_col(j, coords_of(homs[j] * homs[i])); /* i then j */
    e.fill_rmul();
    e.unit = coords_of(Matrix<K>::identity(m.dim));
    for (size_t i = 0; i < n; ++i)
        e.labels.push_back("f" + std::to_string(i));
    e.bind_data();
    return e;
}

/* Krull-Schmidt decomposition via Fitting on seeded random endomorphisms;
 * indecomposability is certified by split_local_radical of End. Inclusion
 * matrices (part -> M) come along for later base changes. */
template <class K> struct Decomposition {
    std::vector<FDModule<K>> parts;
    std::vector<Matrix<K>> incl;
};

template <class K>
Decomposition<K> decompose_with_incl(const FDModule<K>& m, uint64_t seed, int budget = 32)
{
    Decomposition<K> out;
    if (m.dim == 0)
        return out;
    auto homs = hom_space(m, m);
    if (homs.size() == 1) {
        out.parts = {m};
        out.incl = {Matrix<K>::identity(m.dim)};
        return out;
    }
    std::mt19937_64 rng(seed ^ (m.dim * 0x2545f4914f6cdd1dull));
    std::vector<Matrix<K>> candidates;
    for (auto& h : homs)
        candidates.push_back(h);
    for (int t = 0; t < budget; ++t) {
        Matrix<K> v(m.dim, m.dim);
        for (auto& h : homs) {
            long long c = (long long)(rng() % 7) - 3;
            if (c)
                v = v + scalar_from_int<K>(c, m.algebra->field) * h;
        }
        candidates.push_back(std::move(v));
    }
    for (auto& phi : candidates) {
        Matrix<K> p = phi;
        size_t it = ceil_log2(m.dim + 1) + 1;
        for (size_t i = 0; i < it; ++i)
            p = p * p; /* phi^(2^it) with 2^it >= dim */
        auto ker = kernel_basis(p);
        if (ker.empty() || ker.size() == m.dim)
            continue;
        std::vector<Vec<K>> im;
        for (size_t j = 0; j < m.dim; ++j)
            im.push_back(p.col(j));
        auto sub_k = submodule(m, ker, false);
        auto sub_i = submodule(m, im, false);
        AYT_CHECK(sub_k.mod.dim + sub_i.mod.dim == m.dim, "decompose: Fitting failed");
        for (auto* sub : {&sub_k, &sub_i}) {
            auto d = decompose_with_incl(sub->mod, seed + 1 + (sub == &sub_i), budget);
            for (size_t s = 0; s < d.parts.size(); ++s) {
                out.parts.push_back(std::move(d.parts[s]));
                out.incl.push_back(sub->map * d.incl[s]);
            }
        }
        return out;
    }
    /* no splitting found: certify indecomposable */
    auto endalg = endomorphism_algebra(m, homs);
    if (split_local_radical(endalg).has_value()) {
        out.parts = {m};
        out.incl = {Matrix<K>::identity(m.dim)};
        return out;
    }
    throw AytError("decompose: failed to split within retry budget (raise budget or change "
                   "seed)");
}

template <class K>
std::vector<FDModule<K>> decompose(const FDModule<K>& m, uint64_t seed, int budget = 32)
{
    return decompose_with_incl(m, seed, budget).parts;
}

/* explicit isomorphism between indecomposables, if one exists */
template <class K>
std::optional<Matrix<K>> find_iso(const FDModule<K>& m, const FDModule<K>& n)
{
    if (m.dim != n.dim)
        return std::nullopt;
    if (m.dim == 0)
        return Matrix<K>(0, 0);
    auto mn = hom_space(m, n);
    if (mn.empty())
        return std::nullopt;
    auto nm = hom_space(n, m);
    for (auto& f : mn)
        for (auto& g : nm)
            if (is_invertible(g * f))
                return f;
    return std::nullopt;
}

/* isomorphism test for indecomposable modules (sound given local End) */
template <class K> bool indec_iso(const FDModule<K>& m, const FDModule<K>& n)
{
    if (m.dim != n.dim)
        return false;
    if (m.dim == 0)
        return true;
    auto mn = hom_space(m, n);
    if (mn.empty())
        return false;
    auto nm = hom_space(n, m);
    for (auto& f : mn)
        for (auto& g : nm)
            if (is_invertible(g * f)) /* f then g invertible => f iso */
                return true;
    return false;
}

/* multiset of indecomposables up to isomorphism */
template <class K> struct AddClass {
    std::vector<FDModule<K>> reps;
    std::vector<size_t> mult;

    void add(const FDModule<K>& indec)
    {
        for (size_t i = 0; i < reps.size(); ++i)
            if (indec_iso(reps[i], indec)) {
                ++mult[i];
                return;
            }
        reps.push_back(indec);
        mult.push_back(1);
    }
};

template <class K> AddClass<K> add_class(const FDModule<K>& m, uint64_t seed)
{
    AddClass<K> out;
    for (auto& s : decompose(m, seed))
        out.add(s);
    return out;
}

/* add(X) = add(Y): same sets of indecomposable summand classes */
template <class K>
bool add_equal(const AddClass<K>& x, const AddClass<K>& y)
{
    if (x.reps.size() != y.reps.size())
        return false;
    for (auto& r : x.reps) {
        bool found = false;
        for (auto& s : y.reps)
            if (indec_iso(r, s)) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

} // namespace ayt
