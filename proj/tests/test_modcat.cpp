#include "common.hpp"

#include "ayt/modcat_ops.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace aytt;

namespace {
struct T3 {
    PresentedAlgebra<Fp> pa;
    AlgebraPtr<Fp> a;
    FDModule<Fp> reg, k;
    T3()
        : pa(from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)))), a(pa.alg),
          reg(regular_module(a)), k(simple_module(a, 0))
    {
    }
};
} // namespace

TEST_CASE("hom spaces")
{
    T3 t;
    /* Hom(A, M) has dim M (free module) */
    CHECK(hom_dim(t.reg, t.reg) == 3);
    CHECK(hom_dim(t.reg, t.k) == 1);
    auto w = syzygy(t.k);
    CHECK(hom_dim(t.reg, w) == w.dim);
    /* Hom(k, A) = socle embedding, one-dimensional */
    CHECK(hom_dim(t.k, t.reg) == 1);
    /* brute-force oracle agreement over F2 */
    CHECK(brute_hom_dim_f2(t.k, t.reg) == 1);
    CHECK(brute_hom_dim_f2(t.reg, t.k) == 1);
    CHECK(brute_hom_dim_f2(w, w) == hom_dim(w, w));
    /* distinct simples over the A4-block algebra */
    auto ex1 = from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)));
    auto a1 = AlgebraPtr<Fp>(ex1.alg);
    CHECK(hom_dim(simple_module(a1, 0), simple_module(a1, 1)) == 0);
    /* algebra mismatch is rejected */
    CHECK_THROWS(hom_space(t.k, simple_module(a1, 0)));
}

TEST_CASE("socle, radical, top")
{
    T3 t;
    auto srt = socle_radical_top(t.reg);
    CHECK(srt.socle.mod.dim == 1);
    CHECK(srt.radical.mod.dim == 2);
    CHECK(srt.top.mod.dim == 1);
    auto ssimple = socle_radical_top(t.k);
    CHECK(ssimple.socle.mod.dim == 1);
    CHECK(ssimple.radical.mod.dim == 0);
    CHECK(ssimple.top.mod.dim == 1);
    /* direct-sum additivity: soc(A + k) has dim 2 */
    std::vector<const FDModule<Fp>*> ptrs{&t.reg, &t.k};
    auto mk = direct_sum(t.a, ptrs).mod;
    CHECK(socle_radical_top(mk).socle.mod.dim == 2);
}

TEST_CASE("duality and Nakayama")
{
    T3 t;
    auto aop = std::make_shared<const FDAlgebra<Fp>>(opposite_algebra(*t.pa.alg));
    auto d = duality_D(t.reg, aop);
    auto dd = duality_D(d, t.a);
    CHECK(indec_iso(dd, t.reg)); /* D D = id */
    /* nu A = A for the self-injective Nakayama algebra */
    auto nu = nakayama(t.reg);
    CHECK(nu.mod.dim == 3);
    CHECK(indec_iso(nu.mod, t.reg));
    nu.mod.verify();
    /* hereditary 1 -> 2: nu of the simple projective is the big injective */
    auto a2 = from_presentation<Fp>(linear_quiver_pres(2, FieldSpec::Fp(2)));
    auto ap = AlgebraPtr<Fp>(a2.alg);
    auto p1 = projective_column(ap, 0); /* 1-dimensional */
    auto p2 = projective_column(ap, 1); /* 2-dimensional */
    auto nu1 = nakayama(p1).mod;
    CHECK(nu1.dim == 2);
    CHECK(indec_iso(nu1, p2)); /* injective envelope of S1 is P2 here */
    auto nu2 = nakayama(p2).mod;
    CHECK(nu2.dim == 1);
    CHECK(!indec_iso(nu2, p1)); /* the other injective is the non-projective simple */
}

TEST_CASE("nu P is the injective envelope: simple socle, matching index")
{
    for (auto pres : {nakayama_pres(3, FieldSpec::Fp(2)), linear_quiver_pres(2, FieldSpec::Fp(2)),
                      a4block_pres(FieldSpec::Fp(2))}) {
        auto pa = from_presentation<Fp>(pres);
        auto a = AlgebraPtr<Fp>(pa.alg);
        for (size_t i = 0; i < pa.alg->idem.size(); ++i) {
            auto p = projective_column(a, i);
            auto nu = nakayama(p).mod;
            auto soc = socle_radical_top(nu).socle.mod;
            CHECK(indec_iso(soc, simple_module(a, i))); /* envelope of S_i */
        }
    }
    /* non-projective input is rejected */
    auto pa = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    auto a = AlgebraPtr<Fp>(pa.alg);
    CHECK_THROWS_WITH(nakayama(simple_module(a, 0)),
                      Catch::Matchers::ContainsSubstring("not projective"));
}

TEST_CASE("projective cover and syzygies")
{
    T3 t;
    auto pc = projective_cover(t.k);
    CHECK(pc.proj.dim == 3);
    CHECK(rank(pc.epi) == 1);
    auto w = syzygy(t.k);
    CHECK(w.dim == 2);
    CHECK(syzygy(t.reg).dim == 0); /* projectives have no syzygy */
    auto w2 = syzygy(w);
    CHECK(w2.dim == 1);
    CHECK(indec_iso(w2, t.k)); /* Omega^2(k) = k over k[t]/(t^3) */
}

TEST_CASE("syzygy is additive on direct sums")
{
    T3 t;
    auto w = syzygy(t.k);
    std::vector<const FDModule<Fp>*> ptrs{&t.k, &w};
    auto sum = direct_sum(t.a, ptrs).mod;
    auto os = syzygy(sum);
    auto parts = decompose(os, 5);
    REQUIRE(parts.size() == 2);
    bool match = (indec_iso(parts[0], syzygy(t.k)) && indec_iso(parts[1], syzygy(w))) ||
                 (indec_iso(parts[1], syzygy(t.k)) && indec_iso(parts[0], syzygy(w)));
    CHECK(match);
}

TEST_CASE("decompose")
{
    T3 t;
    std::vector<const FDModule<Fp>*> ptrs{&t.reg, &t.reg};
    auto aa = direct_sum(t.a, ptrs).mod;
    auto parts = decompose(aa, 1);
    REQUIRE(parts.size() == 2);
    CHECK(indec_iso(parts[0], t.reg));
    CHECK(indec_iso(parts[1], t.reg));
    CHECK(decompose(t.reg, 1).size() == 1); /* local algebra: A indecomposable */
    /* two uniserials presented as one module */
    auto u1 = uniserial(t.a, t.pa.alg->rad, 1); /* A/J: dim 1 */
    auto u2 = uniserial(t.a, t.pa.alg->rad, 2); /* A/J^2: dim 2 */
    std::vector<const FDModule<Fp>*> ptrs2{&u1, &u2};
    auto m = direct_sum(t.a, ptrs2).mod;
    auto parts2 = decompose(m, 2);
    REQUIRE(parts2.size() == 2);
    std::vector<size_t> dims{parts2[0].dim, parts2[1].dim};
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<size_t>{1, 2});
    /* determinism given the seed */
    auto again = decompose(m, 2);
    CHECK(again.size() == 2);
    CHECK(again[0].dim == parts2[0].dim);
}

TEST_CASE("minimal right approximations")
{
    T3 t;
    /* target in add(X): the identity */
    auto appr = min_right_approximation(t.reg, t.reg, 1);
    CHECK(appr.source.dim == t.reg.dim);
    CHECK(is_invertible(appr.phi));
    /* Hom(X, target) = 0: zero map from 0 */
    auto ex1 = from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)));
    auto a1 = AlgebraPtr<Fp>(ex1.alg);
    auto s1 = simple_module(a1, 0);
    auto s2 = simple_module(a1, 1);
    auto z = min_right_approximation(s1, s2, 1);
    CHECK(z.source.dim == 0);
    /* hereditary 1 -> 2: approximating the big projective by the simple one
     * gives the socle inclusion */
    auto a2 = from_presentation<Fp>(linear_quiver_pres(2, FieldSpec::Fp(2)));
    auto ap = AlgebraPtr<Fp>(a2.alg);
    auto p1 = projective_column(ap, 0);
    auto p2 = projective_column(ap, 1);
    auto incl = min_right_approximation(p2, p1, 1);
    CHECK(incl.source.dim == 1);
    CHECK(rank(incl.phi) == 1);
}

TEST_CASE("maximal nu-stable module")
{
    T3 t;
    auto e = max_nu_stable(t.a);
    CHECK(e.indices.size() == 1); /* self-injective: everything */
    auto a2 = from_presentation<Fp>(linear_quiver_pres(2, FieldSpec::Fp(2)));
    auto e2 = max_nu_stable(AlgebraPtr<Fp>(a2.alg));
    CHECK(e2.indices.empty());
    CHECK(e2.module.dim == 0);
    /* (1 -> 2) x k[u]/(u^2): only the self-injective block survives */
    auto mx = from_presentation<Fp>(mixed_product_pres(FieldSpec::Fp(2)));
    auto e3 = max_nu_stable(AlgebraPtr<Fp>(mx.alg));
    REQUIRE(e3.indices.size() == 1);
    CHECK(e3.indices[0] == 2);
    CHECK(e3.module.dim == 2);
}

TEST_CASE("nabla ideals")
{
    /* k x k: nabla of the first factor is the second factor */
    auto kk = from_presentation<Fp>(kxk_pres(FieldSpec::Fp(2)));
    auto kkp = AlgebraPtr<Fp>(kk.alg);
    auto n1 = nabla_ideal(kkp, {0});
    REQUIRE(n1.dim() == 1);
    CHECK(n1.basis[0] == kk.alg->idem[1]);
    /* e = 1: nabla = 0 */
    auto nall = nabla_ideal(kkp, {0, 1});
    CHECK(nall.dim() == 0);
    /* the A4-block algebra at the complement of vertex 2: the ideal <a2.b3> */
    auto ex1 = from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)));
    auto a1 = AlgebraPtr<Fp>(ex1.alg);
    auto nd = nabla_ideal(a1, {0, 2}, true);
    REQUIRE(nd.dim() == 1);
    size_t a2b3 = 0;
    for (size_t i = 0; i < ex1.alg->labels.size(); ++i)
        if (ex1.alg->labels[i] == "a2.b3")
            a2b3 = i;
    CHECK(!nd.basis[0][a2b3].is_zero());
    /* maximality spot check: the ideal generated by a2.b3 is killed by e1+e3
     * and indeed lands inside nabla */
    auto gen = AlgebraIdeal<Fp>::closure(a1, {unit_vec<Fp>(ex1.alg->dim, a2b3)});
    for (auto& v : gen.basis)
        CHECK(nd.contains(v));
    /* the single-vertex nabla at e2 is bigger (dimension 4) */
    CHECK(nabla_ideal(a1, {1}).dim() == 4);
}

TEST_CASE("add-class machinery")
{
    T3 t;
    auto w = syzygy(t.k);
    std::vector<const FDModule<Fp>*> p1{&t.k, &w};
    std::vector<const FDModule<Fp>*> p2{&w, &t.k, &t.k};
    auto x = direct_sum(t.a, p1).mod;
    auto y = direct_sum(t.a, p2).mod;
    CHECK(add_equal(add_class(x, 1), add_class(y, 1)));
    std::vector<const FDModule<Fp>*> p3{&t.k};
    auto z = direct_sum(t.a, p3).mod;
    CHECK(!add_equal(add_class(x, 1), add_class(z, 1)));
}

TEST_CASE("add(Ae) = add(D(eA)) detection")
{
    auto ex1 = from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)));
    auto a1 = AlgebraPtr<Fp>(ex1.alg);
    CHECK(add_Ae_equals_add_DeA(a1, {0ul, 2ul}, 1));
    CHECK(add_Ae_equals_add_DeA(a1, {1ul}, 1));
    auto a2 = from_presentation<Fp>(linear_quiver_pres(2, FieldSpec::Fp(2)));
    CHECK(!add_Ae_equals_add_DeA(AlgebraPtr<Fp>(a2.alg), {0ul}, 1));
}
