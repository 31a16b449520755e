#include "common.hpp"

#include "ayt/modcat_ops.hpp"
#include "ayt/resolution.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace aytt;

TEST_CASE("from_presentation: monomial Nakayama algebra")
{
    auto pa = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    CHECK(pa.alg->dim == 3);
    CHECK(pa.alg->labels == std::vector<std::string>{"e1", "t", "t.t"});
    pa.alg->verify();
    CHECK(pa.alg->rad.size() == 2);
    CHECK(loewy_length(*pa.alg) == 3);
}

TEST_CASE("from_presentation: the A4-block algebra has dimension 12")
{
    auto pa = from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)));
    CHECK(pa.alg->dim == 12);
    auto cart = cartan_matrix(*pa.alg);
    ZMat expect = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    CHECK(cart == expect);
    /* dim A = sum of Cartan entries for split basic algebras */
    mpz_class sum = 0;
    for (auto& row : cart)
        for (auto& x : row)
            sum += x;
    CHECK(sum == pa.alg->dim);
    CHECK(invariant_report(*pa.alg).cartan_snf == std::vector<long long>{1, 1, 4});
}

TEST_CASE("from_presentation: the A5-block shape has dimension 18 and its Cartan matrix")
{
    for (auto field : {FieldSpec::Fp(2), FieldSpec::Q()}) {
        if (field.rational) {
            auto pb = from_presentation<Rat>(a5block_pres(field));
            CHECK(pb.alg->dim == 18);
        } else {
            auto pb = from_presentation<Fp>(a5block_pres(field));
            CHECK(pb.alg->dim == 18);
            ZMat expect = {{2, 2, 1}, {2, 4, 2}, {1, 2, 2}};
            CHECK(cartan_matrix(*pb.alg) == expect);
        }
    }
}

TEST_CASE("from_presentation: error paths")
{
    /* a relation with a length-1 component */
    PathPresentation p = nakayama_pres(3, FieldSpec::Fp(2));
    Relation bad;
    bad.terms.push_back({1, 1, {0}});
    p.relations.push_back(bad);
    CHECK_THROWS_WITH(from_presentation<Fp>(p),
                      Catch::Matchers::ContainsSubstring("length < 2"));

    /* nilpotency not reached: no relations on a loop */
    PathPresentation q;
    q.quiver.nv = 1;
    q.quiver.arrows.push_back({"t", 0, 0});
    q.field = FieldSpec::Fp(2);
    q.cap = 4;
    CHECK_THROWS_WITH(from_presentation<Fp>(q),
                      Catch::Matchers::ContainsSubstring("nilpotency"));

    /* the inhomogeneous trap t^2 = t^3: the quotient is not nilpotent and the
     * certificate must refuse it rather than silently truncate */
    PathPresentation r;
    r.quiver.nv = 1;
    r.quiver.arrows.push_back({"t", 0, 0});
    Relation rel;
    rel.terms.push_back({1, 1, {0, 0}});
    rel.terms.push_back({-1, 1, {0, 0, 0}});
    r.relations.push_back(rel);
    r.field = FieldSpec::Q();
    r.cap = 6;
    CHECK_THROWS_WITH(from_presentation<Rat>(r),
                      Catch::Matchers::ContainsSubstring("certified"));
}

TEST_CASE("from_presentation: certified inhomogeneous quotient (Yoneda quiver, m = 4)")
{
    std::vector<uint64_t> w;
    auto p = yoneda_quiver_gen_pres(4, 3, FieldSpec::Q(), &w);
    auto pa = from_presentation<Rat>(p);
    /* graded dims: weight 0: m+3 = 7; weights 1..3: one each */
    auto gd = presented_graded_dims(p.quiver, pa.basis_arrows, p.relations, w);
    CHECK(gd[0] == 7);
    CHECK(gd[1] == 1);
    CHECK(gd[2] == 1);
    CHECK(gd[3] == 1);
    CHECK(pa.alg->dim == 10);
}

TEST_CASE("cartan matrices of the small examples")
{
    auto t3 = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    CHECK(cartan_matrix(*t3.alg) == ZMat{{3}});
    auto kk = from_presentation<Fp>(kxk_pres(FieldSpec::Fp(2)));
    CHECK(cartan_matrix(*kk.alg) == (ZMat{{1, 0}, {0, 1}}));
}

TEST_CASE("quotients of algebras")
{
    auto pa = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    auto a = AlgebraPtr<Fp>(pa.alg);
    /* by the socle: k[t]/(t^3) -> k[t]/(t^2) */
    auto soc = socle_ideal(a, std::vector<size_t>{0});
    auto q = quotient_by_ideal(a, soc);
    CHECK(q.alg->dim == 2);
    CHECK(loewy_length(*q.alg) == 2);
    /* by the radical: a product of fields */
    AlgebraIdeal<Fp> rad;
    rad.parent = a;
    rad.basis = pa.alg->rad;
    auto qr = quotient_by_ideal(a, rad);
    CHECK(qr.alg->dim == 1);
    CHECK(qr.alg->rad.empty());
    /* by zero */
    AlgebraIdeal<Fp> zero;
    zero.parent = a;
    auto qz = quotient_by_ideal(a, zero);
    CHECK(qz.alg->dim == 3);
}

TEST_CASE("global dimension")
{
    auto a2 = from_presentation<Fp>(linear_quiver_pres(2, FieldSpec::Fp(2)));
    auto g = global_dimension(AlgebraPtr<Fp>(a2.alg), 8);
    CHECK(g.bounded);
    CHECK(g.value == 1);

    auto t2 = from_presentation<Fp>(nakayama_pres(2, FieldSpec::Fp(2)));
    auto g2 = global_dimension(AlgebraPtr<Fp>(t2.alg), 10);
    CHECK(!g2.bounded);

    auto kk = from_presentation<Fp>(kxk_pres(FieldSpec::Fp(2)));
    auto g3 = global_dimension(AlgebraPtr<Fp>(kk.alg), 4);
    CHECK(g3.bounded);
    CHECK(g3.value == 0);
}

TEST_CASE("self-injectivity")
{
    auto t3 = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    CHECK(is_selfinjective(*t3.alg));
    auto a2 = from_presentation<Fp>(linear_quiver_pres(2, FieldSpec::Fp(2)));
    CHECK(!is_selfinjective(*a2.alg));
    auto ex1 = from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)));
    CHECK(is_selfinjective(*ex1.alg));
}

TEST_CASE("presentation round trip")
{
    auto check_roundtrip = [](const PathPresentation& p) {
        auto pa = from_presentation<Fp>(p);
        auto pres = presentation_of(*pa.alg, p.cap);
        auto round = from_presentation<Fp>(pres);
        CHECK(round.alg->dim == pa.alg->dim);
        CHECK(cartan_matrix(*round.alg) == cartan_matrix(*pa.alg));
        CHECK(invariant_report(*round.alg).cartan_snf ==
              invariant_report(*pa.alg).cartan_snf);
    };
    check_roundtrip(nakayama_pres(3, FieldSpec::Fp(2)));
    check_roundtrip(linear_quiver_pres(2, FieldSpec::Fp(2)));
    check_roundtrip(kxk_pres(FieldSpec::Fp(2)));
    check_roundtrip(a4block_pres(FieldSpec::Fp(2)));
    check_roundtrip(a5block_pres(FieldSpec::Fp(2)));
}

TEST_CASE("presentation_of: shape of k[t]/(t^3)")
{
    auto pa = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    auto pres = presentation_of(*pa.alg, 3);
    CHECK(pres.quiver.nv == 1);
    CHECK(pres.quiver.arrows.size() == 1);
    REQUIRE(pres.relations.size() == 1);
    CHECK(pres.relations[0].terms.size() == 1);
    CHECK(pres.relations[0].terms[0].arrows.size() == 3);
    /* semisimple k x k: two vertices, no arrows */
    auto kk = from_presentation<Fp>(kxk_pres(FieldSpec::Fp(2)));
    auto pres2 = presentation_of(*kk.alg, 1);
    CHECK(pres2.quiver.nv == 2);
    CHECK(pres2.quiver.arrows.empty());
}

TEST_CASE("invariant comparison")
{
    auto t3 = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    auto kk = from_presentation<Fp>(kxk_pres(FieldSpec::Fp(2)));
    auto r1 = invariant_report(*t3.alg);
    CHECK(compare_reports(r1, r1).consistent);
    auto cmp = compare_reports(r1, invariant_report(*kk.alg));
    CHECK(!cmp.consistent);
    CHECK(!cmp.simples_equal);
}

TEST_CASE("abstract split data: idempotents and radical recovered from structure constants")
{
    /* strip the idempotents/radical off the A4-block algebra and recompute them */
    auto pa = from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)));
    FDAlgebra<Fp> raw = *pa.alg;
    raw.idem.clear();
    raw.rad.clear();
    raw.rad_known = false;
    raw.gens.clear();
    complete_split_data(raw, 3);
    CHECK(raw.idem.size() == 3);
    raw.verify();
    CHECK(raw.rad.size() == 9);
    CHECK(cartan_matrix(raw) == cartan_matrix(*pa.alg));
}
