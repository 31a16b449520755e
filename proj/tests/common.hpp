#pragma once

/* shared builders and small brute-force oracles for the test suite */
#include "ayt/presentation.hpp"
#include "ayt/module.hpp"

#include <vector>

namespace aytt {

using namespace ayt;

/* k[t]/(t^m) */
inline PathPresentation nakayama_pres(int m, FieldSpec f)
{
    PathPresentation p;
    p.quiver.nv = 1;
    p.quiver.arrows.push_back({"t", 0, 0});
    Relation r;
    r.terms.push_back({1, 1, std::vector<int>((size_t)m, 0)});
    p.relations.push_back(r);
    p.field = f;
    p.cap = m;
    return p;
}

/* linear A_n quiver 1 -> 2 -> ... -> n, no relations (hereditary) */
inline PathPresentation linear_quiver_pres(int n, FieldSpec f)
{
    PathPresentation p;
    p.quiver.nv = n;
    for (int i = 0; i + 1 < n; ++i)
        p.quiver.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    p.field = f;
    p.cap = n; /* no path of length n exists */
    return p;
}

/* linear A_3 with the zero relation a1 a2 = 0 */
inline PathPresentation a3_zero_rel_pres(FieldSpec f)
{
    PathPresentation p = linear_quiver_pres(3, f);
    Relation r;
    r.terms.push_back({1, 1, {0, 1}});
    p.relations.push_back(r);
    p.cap = 2;
    return p;
}

/* product k x k: two vertices, no arrows */
inline PathPresentation kxk_pres(FieldSpec f)
{
    PathPresentation p;
    p.quiver.nv = 2;
    p.field = f;
    p.cap = 1;
    return p;
}

/* (1 -> 2) x k[u]/(u^2): three vertices */
inline PathPresentation mixed_product_pres(FieldSpec f)
{
    PathPresentation p;
    p.quiver.nv = 3;
    p.quiver.arrows.push_back({"a", 0, 1});
    p.quiver.arrows.push_back({"u", 2, 2});
    Relation r;
    r.terms.push_back({1, 1, {1, 1}});
    p.relations.push_back(r);
    p.field = f;
    p.cap = 2;
    return p;
}

/* the 12-dim self-injective algebra on three vertices (the char-2 A4 group
 * algebra shape): alpha_i: i -> i+1, beta_i: i -> i-1 (mod 3) */
inline PathPresentation a4block_pres(FieldSpec f)
{
    PathPresentation p;
    p.quiver.nv = 3;
    for (int i = 0; i < 3; ++i)
        p.quiver.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % 3});
    for (int i = 0; i < 3; ++i)
        p.quiver.arrows.push_back({"b" + std::to_string(i + 1), i, (i + 2) % 3});
    auto A = [](int i) { return (i - 1) % 3; };
    auto B = [](int i) { return 3 + (i - 1) % 3; };
    auto idx = [](int i) { return (i - 1) % 3 + 1; };
    for (int i = 1; i <= 3; ++i) {
        Relation comm;
        comm.terms.push_back({1, 1, {A(idx(i)), B(idx(i + 1))}});
        comm.terms.push_back({-1, 1, {B(idx(i)), A(idx(i + 2))}});
        p.relations.push_back(comm);
        Relation aa;
        aa.terms.push_back({1, 1, {A(idx(i)), A(idx(i + 1))}});
        p.relations.push_back(aa);
        Relation bb;
        bb.terms.push_back({1, 1, {B(idx(i)), B(idx(i + 2))}});
        p.relations.push_back(bb);
    }
    p.field = f;
    p.cap = 3;
    return p;
}

/* End of the idempotent tilting complex at e1+e3 of the algebra above
 * (the principal-block-of-A5 shape) */
inline PathPresentation a5block_pres(FieldSpec f)
{
    PathPresentation p;
    p.quiver.nv = 3;
    p.quiver.arrows.push_back({"al", 0, 1});
    p.quiver.arrows.push_back({"be", 1, 2});
    p.quiver.arrows.push_back({"ga", 2, 1});
    p.quiver.arrows.push_back({"de", 1, 0});
    Relation r1;
    r1.terms.push_back({1, 1, {0, 3}});
    p.relations.push_back(r1);
    Relation r2;
    r2.terms.push_back({1, 1, {2, 1}});
    p.relations.push_back(r2);
    Relation r3;
    r3.terms.push_back({1, 1, {3, 0, 1, 2}});
    r3.terms.push_back({-1, 1, {1, 2, 3, 0}});
    p.relations.push_back(r3);
    p.field = f;
    p.cap = 5;
    return p;
}

/* Presentations of the truncated generalized Yoneda algebras of k[t]/(t^m).
 * Vertex 1 carries the algebra summand, vertex 2 the (co)generator part;
 * the weight-2 loop is only present once n >= 2. */
inline PathPresentation yoneda_quiver_gen_pres(int m, int n, FieldSpec f, std::vector<uint64_t>* weights)
{
    bool z2 = n >= 2;
    PathPresentation p;
    p.quiver.nv = 2;
    p.quiver.arrows.push_back({"al", 0, 0});
    p.quiver.arrows.push_back({"be", 0, 1});
    p.quiver.arrows.push_back({"ga", 1, 0});
    p.quiver.arrows.push_back({"d1", 1, 1});
    if (z2)
        p.quiver.arrows.push_back({"d2", 1, 1});
    if (weights) {
        *weights = {0, 0, 0, 1};
        if (z2)
            weights->push_back(2);
    }
    auto mono = [&](std::vector<int> w) {
        Relation r;
        r.terms.push_back({1, 1, std::move(w)});
        p.relations.push_back(std::move(r));
    };
    {
        Relation r; /* al^(m-1) = be.ga */
        r.terms.push_back({1, 1, std::vector<int>((size_t)m - 1, 0)});
        r.terms.push_back({-1, 1, {1, 2}});
        p.relations.push_back(std::move(r));
    }
    mono({0, 1});
    mono({2, 0});
    mono({2, 1});
    mono({3, 2});
    mono({1, 3});
    mono({3, 3});
    if (z2) {
        mono({4, 2});
        mono({1, 4});
        Relation r;
        r.terms.push_back({1, 1, {3, 4}});
        r.terms.push_back({-1, 1, {4, 3}});
        p.relations.push_back(std::move(r));
        if (n % 2 == 1)
            mono(std::vector<int>((size_t)(n / 2 + 1), 4));
        else {
            std::vector<int> w{3};
            for (int i = 0; i < n / 2; ++i)
                w.push_back(4);
            mono(w);
            mono(std::vector<int>((size_t)(n / 2 + 1), 4));
        }
    }
    p.field = f;
    p.cap = 2 * m;
    return p;
}

inline PathPresentation yoneda_quiver_syz_pres(int m, int n, FieldSpec f, std::vector<uint64_t>* weights)
{
    bool z2 = n >= 2;
    PathPresentation p;
    p.quiver.nv = 2;
    p.quiver.arrows.push_back({"x", 0, 1});
    p.quiver.arrows.push_back({"y", 1, 0});
    p.quiver.arrows.push_back({"z1", 1, 1});
    if (z2)
        p.quiver.arrows.push_back({"z2", 1, 1});
    if (weights) {
        *weights = {0, 0, 1};
        if (z2)
            weights->push_back(2);
    }
    auto mono = [&](std::vector<int> w) {
        Relation r;
        r.terms.push_back({1, 1, std::move(w)});
        p.relations.push_back(std::move(r));
    };
    mono({0, 2});
    mono({2, 1});
    mono({2, 2});
    { /* (y x)^(m-1) */
        std::vector<int> w;
        for (int i = 0; i < m - 1; ++i) {
            w.push_back(1);
            w.push_back(0);
        }
        mono(w);
    }
    if (z2) {
        mono({0, 3});
        mono({3, 1});
        Relation r;
        r.terms.push_back({1, 1, {2, 3}});
        r.terms.push_back({-1, 1, {3, 2}});
        p.relations.push_back(std::move(r));
        if (n % 2 == 1)
            mono(std::vector<int>((size_t)(n / 2 + 1), 3));
        else {
            std::vector<int> w{2};
            for (int i = 0; i < n / 2; ++i)
                w.push_back(3);
            mono(w);
            mono(std::vector<int>((size_t)(n / 2 + 1), 3));
        }
    }
    p.field = f;
    p.cap = 2 * m + 1;
    return p;
}

/* uniserial modules A/J^i over k[t]/(t^m), i = 1..m */
template <class K>
FDModule<K> uniserial(const AlgebraPtr<K>& a, const std::vector<Vec<K>>& radbasis, int i)
{
    auto reg = regular_module(a);
    std::vector<Vec<K>> pw = radbasis;
    for (int k = 1; k < i; ++k) {
        std::vector<Vec<K>> nxt;
        for (auto& r : radbasis)
            for (auto& v : pw)
                nxt.push_back(a->mul(r, v));
        pw = nxt;
    }
    RowSpan<K> sp(a->dim);
    for (auto& v : pw)
        sp.insert(v);
    auto q = quotient_module(reg, sp.rows());
    q.mod.name = "A/J^" + std::to_string(i);
    return q.mod;
}

/* brute force over F_2: dimension of the intertwiner space Hom_A(M,N) by
 * enumerating all matrices (only for tiny dimensions) */
inline size_t brute_hom_dim_f2(const FDModule<Fp>& m, const FDModule<Fp>& n)
{
    size_t vars = m.dim * n.dim;
    AYT_CHECK(vars <= 20, "brute hom: too large");
    size_t count = 0;
    for (size_t bits = 0; bits < (1ull << vars); ++bits) {
        Matrix<Fp> f(n.dim, m.dim);
        for (size_t i = 0; i < n.dim; ++i)
            for (size_t j = 0; j < m.dim; ++j)
                if (bits & (1ull << (i * m.dim + j)))
                    f.at(i, j) = Fp(1, 2);
        bool ok = true;
        for (size_t b = 0; b < m.algebra->dim && ok; ++b)
            ok = f * m.act[b] == n.act[b] * f;
        if (ok)
            ++count;
    }
    /* count = 2^dim of the solution space */
    size_t d = 0;
    while ((1ull << d) < count)
        ++d;
    AYT_CHECK((1ull << d) == count, "brute hom: count not a power of two");
    return d;
}

} // namespace aytt
