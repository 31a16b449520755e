#pragma once

#include "admissible.hpp"
#include "complex_ops.hpp"
#include "resolution.hpp"

#include <mutex>
#include <tuple>

namespace ayt {

/* The Phi-Auslander-Yoneda algebra E^Phi_A(M) of a tagged direct sum
 * M = M_1 + ... + M_r, as explicit structure constants. Basis elements are
 * Ext^d(M_s, M_t)-classes for d in Phi; the product of degrees d and d' is
 * the Yoneda composite when d+d' lies in Phi and zero otherwise. */
template <class K> struct AYAlgebra {
    AlgebraPtr<K> base;
    std::vector<FDModule<K>> summands;
    DegreeSet phi;
    size_t cap = 0;
    bool finite = true;

    std::shared_ptr<FDAlgebra<K>> alg;
    struct BasisInfo {
        size_t deg, src, dst, index;
    };
    std::vector<BasisInfo> info;
    std::vector<ProjResolution<K>> res;                         /* per summand */
    std::map<std::tuple<size_t, size_t, size_t>, ExtSpace<K>> ext; /* (s,t,d) */
    std::map<std::tuple<size_t, size_t, size_t>, size_t> start;    /* basis offset */

    size_t offset(size_t s, size_t t, size_t d) const
    {
        auto it = start.find({s, t, d});
        AYT_CHECK(it != start.end(), "ay: no such graded block");
        return it->second;
    }
    const ExtSpace<K>& space(size_t s, size_t t, size_t d) const
    {
        auto it = ext.find({s, t, d});
        AYT_CHECK(it != ext.end(), "ay: no such ext space");
        return it->second;
    }
    /* global coordinates of a degree-d cocycle P^(M_s)_d -> M_t */
    Vec<K> coords_of(size_t s, size_t t, size_t d, const Matrix<K>& cocycle) const
    {
        Vec<K> out(alg->dim, K(0));
        if (!phi.contains(d))
            return out;
        auto cls = space(s, t, d).class_of(cocycle);
        size_t off = offset(s, t, d);
        for (size_t k = 0; k < cls.size(); ++k)
            out[off + k] = cls[k];
        return out;
    }
    /* coordinates of iota_0(f) for a module map f: M_s -> M_t */
    Vec<K> coords_of_hom(size_t s, size_t t, const Matrix<K>& f) const
    {
        return coords_of(s, t, 0, f * res[s].aug);
    }
    std::map<uint64_t, size_t> graded_dims() const
    {
        std::map<uint64_t, size_t> out;
        for (auto& b : info)
            out[b.deg]++;
        return out;
    }
};

template <class K>
AYAlgebra<K> build_ay_algebra(const AlgebraPtr<K>& a, std::vector<FDModule<K>> summands,
                              const DegreeSet& phi, size_t cap, bool require_basic = true)
{
    AYT_CHECK(phi.contains(0), "ay: 0 must lie in Phi");
    AYT_CHECK(phi.max() + 1 <= cap, "ay: resolution cap below max(Phi)+1");
    AYAlgebra<K> ay;
    ay.base = a;
    ay.summands = std::move(summands);
    ay.phi = phi;
    ay.cap = cap;
    ay.finite = !phi.cap.has_value();
    size_t r = ay.summands.size();
    if (require_basic)
        for (size_t s = 0; s < r; ++s)
            for (size_t t = s + 1; t < r; ++t)
                AYT_CHECK(!indec_iso(ay.summands[s], ay.summands[t]),
                          "ay: tagged summands must be pairwise non-isomorphic");
    for (auto& m : ay.summands)
        ay.res.push_back(min_proj_resolution(m, cap));
    /* graded basis */
    size_t dim = 0;
    for (uint64_t d : phi.elements)
        for (size_t s = 0; s < r; ++s)
            for (size_t t = 0; t < r; ++t) {
                auto es = ext_group(ay.res[s], ay.summands[t], d);
                ay.start[{s, t, d}] = dim;
                for (size_t k = 0; k < es.dim(); ++k)
                    ay.info.push_back({d, s, t, k});
                dim += es.dim();
                ay.ext.emplace(std::make_tuple(s, t, (size_t)d), std::move(es));
            }
    auto alg = std::make_shared<FDAlgebra<K>>();
    ay.alg = alg; /* coords_of needs alg->dim during construction */
    alg->field = a->field;
    alg->dim = dim;
    for (auto& b : ay.info)
        alg->labels.push_back("x[" + std::to_string(b.deg) + ";" + std::to_string(b.src + 1) +
                              "->" + std::to_string(b.dst + 1) + ";" + std::to_string(b.index) +
                              "]");
    alg->lmul.assign(dim, Matrix<K>(dim, dim));
    for (size_t i = 0; i < dim; ++i) {
        const auto& bi = ay.info[i];
        const Matrix<K>& phi_f = ay.space(bi.src, bi.dst, bi.deg).reps[bi.index];
        for (size_t j = 0; j < dim; ++j) {
            const auto& bj = ay.info[j];
            if (bj.src != bi.dst)
                continue;
            uint64_t dd = bi.deg + bj.deg;
            if (!ay.phi.contains(dd))
                continue;
            const Matrix<K>& phi_g = ay.space(bj.src, bj.dst, bj.deg).reps[bj.index];
            Matrix<K> cz = yoneda_cocycle(ay.res[bi.src], bi.deg, phi_f, ay.res[bi.dst],
                                          bj.deg, phi_g);
            alg->lmul[i].set_col(j, ay.coords_of(bi.src, bj.dst, dd, cz));
        }
    }
    alg->fill_rmul();
    alg->unit.assign(dim, K(0));
    for (size_t s = 0; s < r; ++s) {
        Vec<K> e = ay.coords_of_hom(s, s, Matrix<K>::identity(ay.summands[s].dim));
        alg->idem.push_back(e);
        alg->unit = vec_add(std::move(alg->unit), e);
    }
    /* radical: rad of the degree-0 part plus everything in positive degree */
    {
        /* degree-0 subalgebra */
        std::vector<size_t> deg0;
        for (size_t i = 0; i < dim; ++i)
            if (ay.info[i].deg == 0)
                deg0.push_back(i);
        FDAlgebra<K> e0;
        e0.field = a->field;
        e0.dim = deg0.size();
        e0.lmul.assign(deg0.size(), Matrix<K>(deg0.size(), deg0.size()));
        for (size_t i = 0; i < deg0.size(); ++i)
            for (size_t j = 0; j < deg0.size(); ++j) {
                Vec<K> prod = alg->lmul[deg0[i]].col(deg0[j]);
                for (size_t k = 0; k < deg0.size(); ++k)
                    e0.lmul[i].at(k, j) = prod[deg0[k]];
            }
        e0.fill_rmul();
        e0.unit.assign(deg0.size(), K(0));
        for (size_t k = 0; k < deg0.size(); ++k)
            e0.unit[k] = alg->unit[deg0[k]];
        for (size_t s = 0; s < r; ++s) {
            Vec<K> e(deg0.size(), K(0));
            for (size_t k = 0; k < deg0.size(); ++k)
                e[k] = alg->idem[s][deg0[k]];
            e0.idem.push_back(e);
        }
        e0.bind_data();
        if (require_basic) {
            compute_radical_basic(e0);
            for (auto& rv : e0.rad) {
                Vec<K> full(dim, K(0));
                for (size_t k = 0; k < deg0.size(); ++k)
                    full[deg0[k]] = rv[k];
                alg->rad.push_back(full);
            }
            for (size_t i = 0; i < dim; ++i)
                if (ay.info[i].deg > 0)
                    alg->rad.push_back(unit_vec<K>(dim, i));
            alg->rad_known = true;
        }
    }
    alg->bind_data();
    alg->verify(false);
    return ay;
}

struct AssocReport {
    bool associative = true;
    std::array<size_t, 3> witness{0, 0, 0};
    std::array<uint64_t, 3> witness_degrees{0, 0, 0};
};

template <class K> AssocReport check_associativity(const AYAlgebra<K>& ay)
{
    AssocReport rep;
    const auto& alg = *ay.alg;
    for (size_t i = 0; i < alg.dim; ++i)
        for (size_t j = 0; j < alg.dim; ++j) {
            Vec<K> ij = alg.lmul[i].col(j);
            for (size_t k = 0; k < alg.dim; ++k) {
                Vec<K> l = alg.mul(ij, unit_vec<K>(alg.dim, k));
                Vec<K> r = alg.lmul[i] * alg.lmul[j].col(k);
                if (!(l == r)) {
                    rep.associative = false;
                    rep.witness = {i, j, k};
                    rep.witness_degrees = {ay.info[i].deg, ay.info[j].deg, ay.info[k].deg};
                    return rep;
                }
            }
        }
    return rep;
}

/* E(N, V_s) = Ebar e_s as a left module over the AY algebra, with the
 * inclusion of the column into the regular module. */
template <class K> struct AYColumn {
    FDModule<K> mod;
    Matrix<K> incl;
};

template <class K> AYColumn<K> ay_column(const AYAlgebra<K>& ay, size_t s)
{
    auto ap = AlgebraPtr<K>(ay.alg);
    Matrix<K> re = ay.alg->right_mult_matrix(ay.alg->idem[s]);
    std::vector<Vec<K>> cols;
    for (size_t j = 0; j < ay.alg->dim; ++j)
        cols.push_back(re.col(j));
    auto reg = regular_module(ap);
    auto sub = submodule(reg, cols, false);
    sub.mod.name = "E(N," + std::to_string(s + 1) + ")";
    return AYColumn<K>{sub.mod, sub.map};
}

template <class K> PoolPtr<K> ay_column_pool(const AYAlgebra<K>& ay)
{
    auto pool = std::make_shared<SummandPool<K>>();
    pool->algebra = AlgebraPtr<K>(ay.alg);
    for (size_t s = 0; s < ay.summands.size(); ++s) {
        auto c = ay_column(ay, s);
        pool->mods.push_back(c.mod);
        pool->names.push_back(c.mod.name);
    }
    return pool;
}

/* Termwise application of E(N,-) to a complex with terms in add(N). The
 * input complex must be tagged over the pool of N's summands; the output is
 * a complex of projectives over the AY algebra of N, tagged over the column
 * pool. E(N, f) for f: N_s -> N_t is right multiplication by iota_0(f). */
template <class K>
Complex<K> ay_on_complex(const AYAlgebra<K>& ay, const PoolPtr<K>& ay_pool,
                         const Complex<K>& x)
{
    for (auto& t : x.terms)
        AYT_CHECK(t.tagged(), "ay_on_complex: complex must be tagged over N's summands");
    /* the tags must actually refer to N's summands (term in add(N)) */
    {
        std::vector<int> used;
        for (auto& t : x.terms)
            for (int p : t.parts)
                used.push_back(p);
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        for (int p : used) {
            AYT_CHECK(p >= 0 && (size_t)p < ay.summands.size() && x.pool &&
                          (size_t)p < x.pool->mods.size(),
                      "ay_on_complex: term not in add(N)");
            AYT_CHECK(indec_iso(x.pool->mods[p], ay.summands[p]),
                      "ay_on_complex: term not in add(N)");
        }
    }
    Complex<K> out;
    out.algebra = AlgebraPtr<K>(ay.alg);
    out.pool = ay_pool;
    out.lo = x.lo;
    std::vector<AYColumn<K>> columns;
    for (size_t s = 0; s < ay.summands.size(); ++s)
        columns.push_back(ay_column(ay, s));
    for (auto& t : x.terms)
        out.terms.push_back(make_term(ay_pool, t.parts));
    for (int d = x.lo; d < x.hi(); ++d) {
        const Term<K>& src = *x.term(d);
        const Term<K>& dst = *x.term(d + 1);
        const Matrix<K>& m = *x.differential(d);
        Matrix<K> od(out.term_dim(d + 1), out.term_dim(d));
        for (size_t s = 0; s < src.parts.size(); ++s)
            for (size_t t = 0; t < dst.parts.size(); ++t) {
                size_t ms = ay.summands[src.parts[s]].dim;
                size_t mt = ay.summands[dst.parts[t]].dim;
                Matrix<K> block = m.submatrix(dst.offsets[t], src.offsets[s], mt, ms);
                if (block.is_zero())
                    continue;
                /* iota_0(block) as an element of e_s Ebar e_t */
                Vec<K> u = ay.coords_of_hom(src.parts[s], dst.parts[t], block);
                /* right multiplication on the columns */
                Matrix<K> ru = ay.alg->right_mult_matrix(u);
                auto cblock = solve_matrix(columns[dst.parts[t]].incl,
                                           ru * columns[src.parts[s]].incl);
                AYT_CHECK(cblock.has_value(), "ay_on_complex: E(N,f) leaves the column");
                od.set_block(out.term(d + 1)->offsets[t], out.term(d)->offsets[s], *cblock);
            }
        out.diff.push_back(std::move(od));
    }
    out.verify();
    return out;
}

} // namespace ayt
