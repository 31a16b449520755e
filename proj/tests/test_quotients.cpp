#include "common.hpp"

#include "ayt/quotients.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace aytt;

namespace {
struct Ex1 {
    PresentedAlgebra<Fp> pa;
    AlgebraPtr<Fp> a;
    Ex1() : pa(from_presentation<Fp>(a4block_pres(FieldSpec::Fp(2)))), a(pa.alg) {}
};
} // namespace

TEST_CASE("idempotent tilting: e = everything gives A[1]")
{
    auto t3 = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    auto a = AlgebraPtr<Fp>(t3.alg);
    auto tilt = idempotent_tilting(a, {0}, 1);
    CHECK(tilt.t.lo == -1);
    CHECK(tilt.t.hi() == -1);
    CHECK(tilt.t.term_dim(-1) == 3);
    auto e = end_algebra_of_complex(tilt.t, 1);
    CHECK(e.alg->dim == 3);
    CHECK(invariant_report(*e.alg).cartan_snf == invariant_report(*t3.alg).cartan_snf);
}

TEST_CASE("idempotent tilting: the A4-block algebra at e = {1,3} gives the 18-dim block")
{
    Ex1 x;
    auto tilt = idempotent_tilting(x.a, {0, 2}, 1);
    CHECK(tilt.t.lo == -1);
    CHECK(tilt.t.term_dim(-1) == 16);
    CHECK(tilt.t.term_dim(0) == 4);
    CHECK(is_radical_complex(tilt.t));
    auto rep = tilting_report(tilt.t, Generation::ByConstruction, 1);
    CHECK(rep.verdict);
    auto endt = end_algebra_of_complex(tilt.t, 1);
    CHECK(endt.alg->dim == 18);
    CHECK(endt.dec.parts.size() == 3);
    /* fingerprint match with the presented B */
    auto pb = from_presentation<Fp>(a5block_pres(FieldSpec::Fp(2)));
    auto r1 = invariant_report(*endt.alg);
    auto r2 = invariant_report(*pb.alg);
    CHECK(compare_reports(r1, r2).consistent);
    CHECK(r1.cartan_snf == std::vector<long long>{1, 1, 4});
    CHECK(is_selfinjective(*endt.alg));
}

TEST_CASE("idempotent tilting: precondition failure on the hereditary algebra")
{
    auto a2 = from_presentation<Fp>(linear_quiver_pres(2, FieldSpec::Fp(2)));
    CHECK_THROWS_WITH(idempotent_tilting(AlgebraPtr<Fp>(a2.alg), {0}, 1),
                      Catch::Matchers::ContainsSubstring("add(Ae)"));
}

TEST_CASE("End(T at e = {1,3}) satisfies the presented relations of B")
{
    Ex1 x;
    auto tilt = idempotent_tilting(x.a, {0, 2}, 1);
    auto endt = end_algebra_of_complex(tilt.t, 1);
    /* extract the quiver of End(T); it must match B's arrow pattern and the
     * relations alpha delta = gamma beta = 0,
     * delta alpha beta gamma = beta gamma delta alpha */
    auto pres = presentation_of(*endt.alg, 5);
    REQUIRE(pres.quiver.nv == 3);
    REQUIRE(pres.quiver.arrows.size() == 4);
    /* arrow-count matrix: one vertex (the middle) exchanges arrows with the
     * two others */
    std::vector<std::vector<int>> counts(3, std::vector<int>(3, 0));
    for (auto& ar : pres.quiver.arrows)
        counts[ar.src][ar.dst]++;
    int middle = -1;
    for (int v = 0; v < 3; ++v) {
        int deg = 0;
        for (int w = 0; w < 3; ++w)
            deg += counts[v][w] + counts[w][v];
        if (deg == 4)
            middle = v;
        else
            CHECK(deg == 2);
    }
    REQUIRE(middle >= 0);
    int left = -1, right = -1;
    for (int v = 0; v < 3; ++v) {
        if (v == middle)
            continue;
        CHECK(counts[v][middle] == 1);
        CHECK(counts[middle][v] == 1);
        (left < 0 ? left : right) = v;
    }
    /* identify the arrows */
    auto arrow_elem = [&](int s, int d) {
        for (size_t i = 0; i < pres.quiver.arrows.size(); ++i)
            if (pres.quiver.arrows[i].src == s && pres.quiver.arrows[i].dst == d) {
                /* evaluate the lift inside End(T) via from_presentation of the
                 * extracted presentation is circular; instead rebuild the lift
                 * directly: e_s rad e_d modulo rad^2 is one-dimensional */
                const auto& alg = *endt.alg;
                RowSpan<Fp> rad2(alg.dim);
                for (auto& r : alg.rad)
                    for (auto& t : alg.rad)
                        rad2.insert(alg.mul(r, t));
                for (auto& r : alg.rad) {
                    Vec<Fp> v = alg.mul(alg.mul(alg.idem[s], r), alg.idem[d]);
                    if (!rad2.contains(v))
                        return v;
                }
                throw AytError("arrow element not found");
            }
        throw AytError("no such arrow");
    };
    auto al = arrow_elem(left, middle);
    auto be = arrow_elem(middle, right);
    auto ga = arrow_elem(right, middle);
    auto de = arrow_elem(middle, left);
    const auto& alg = *endt.alg;
    /* al.de = 0 and ga.be = 0 (paths around the two leaves) */
    CHECK(vec_is_zero(alg.mul(al, de)));
    CHECK(vec_is_zero(alg.mul(ga, be)));
    /* de.al.be.ga = be.ga.de.al (the two four-cycles at the middle agree);
     * the relation is scalar-independent since both sides use each arrow
     * exactly once */
    Vec<Fp> lhs = alg.mul(alg.mul(de, al), alg.mul(be, ga));
    Vec<Fp> rhs = alg.mul(alg.mul(be, ga), alg.mul(de, al));
    CHECK(lhs == rhs);
    CHECK(!vec_is_zero(lhs));
}

TEST_CASE("theorem 4.2 on the stalk: any ideal works and gives the identity pair")
{
    auto t3 = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    auto a = AlgebraPtr<Fp>(t3.alg);
    auto pool = projective_pool(a);
    auto st = stalk_complex(a, pool, make_term(pool, {0}), 0);
    auto soc = socle_ideal(a, std::vector<size_t>{0});
    auto rep = quotient_criterion_check(a, st, soc, 1);
    CHECK(rep.conditions);
    CHECK(rep.verdict);
    CHECK(rep.qd.qa.alg->dim == 2);
    CHECK(rep.bbar->dim == 2);
    CHECK(rep.j.dim() == 1);
}

TEST_CASE("socle transfer on the P2-homogeneous tilt")
{
    Ex1 x;
    auto tilt = idempotent_tilting(x.a, {1}, 1);
    CHECK(tilt.t.term_dim(-1) == 12); /* P2 + P2 + P2 */
    CHECK(tilt.t.term_dim(0) == 8);   /* P1 + P3 */
    auto endt = end_algebra_of_complex(tilt.t, 1);
    CHECK(endt.alg->dim == 12);
    auto p1 = socle_transfer_check(x.a, tilt.t, 0, 1);
    auto p2 = socle_transfer_check(x.a, tilt.t, 1, 1);
    auto p3 = socle_transfer_check(x.a, tilt.t, 2, 1);
    CHECK(p1.has_value());
    CHECK(!p2.has_value()); /* P2 occurs in nu T^(-1) */
    CHECK(p3.has_value());
    /* on the stalk, every projective passes and maps to itself */
    auto pool = projective_pool(x.a);
    auto st = stalk_complex(x.a, pool, make_term(pool, {0, 1, 2}), 0);
    for (size_t p = 0; p < 3; ++p) {
        auto r = socle_transfer_check(x.a, st, p, 1);
        REQUIRE(r.has_value());
    }
}

TEST_CASE("soc(P) T is a stalk complex when P avoids the shifted terms")
{
    Ex1 x;
    auto tilt = idempotent_tilting(x.a, {1}, 1); /* T^(-1) is P2-homogeneous */
    auto soc = socle_ideal(x.a, std::vector<size_t>{0, 2});
    auto qd = quotient_complex(tilt.t, soc, 1);
    auto it = qd.it;
    it.trim();
    REQUIRE(!it.terms.empty());
    CHECK(it.lo == 0);
    CHECK(it.hi() == 0);
    CHECK(it.term_dim(0) == 2); /* soc(P1) + soc(P3) = S1 + S3 */
    auto s1 = simple_module(x.a, 0);
    auto parts = decompose(it.term(0)->mod, 1);
    REQUIRE(parts.size() == 2);
    CHECK((indec_iso(parts[0], s1) || indec_iso(parts[1], s1)));
}

TEST_CASE("socle quotient pair on the A4-block algebra")
{
    Ex1 x;
    auto tilt = idempotent_tilting(x.a, {1}, 1);
    auto rep = socle_quotient_pair(x.a, tilt.t, {0, 2}, 1);
    CHECK(rep.t42.conditions);
    CHECK(rep.j_equals_socle);
    CHECK(rep.verdict);
    CHECK(rep.t42.qd.qa.alg->dim == 10);
    CHECK(rep.t42.bbar->dim == 10);
    auto cmp = compare_reports(invariant_report(*rep.t42.qd.qa.alg),
                               invariant_report(*rep.t42.bbar));
    CHECK(cmp.consistent);
    /* soc(P2) fails: P2 is a summand of T^(-1) */
    auto bad = socle_ideal(x.a, std::vector<size_t>{1});
    auto t42 = quotient_criterion_check(x.a, tilt.t, bad, 1);
    CHECK(!t42.conditions);
    /* and the produced Tbar indeed fails a tilting axiom over A/I */
    auto tb = tilting_report(t42.qd.tbar, Generation::NecessaryOnly, 1);
    CHECK(!tb.verdict);
    /* the preconditions guard socle_quotient_pair */
    CHECK_THROWS(socle_quotient_pair(x.a, tilt.t, {1}, 1));
}

TEST_CASE("nabla quotient pair on the A4-block algebra")
{
    Ex1 x;
    auto rep = nabla_quotient_pair(x.a, {0, 2}, 1);
    CHECK(rep.verdict);
    CHECK(rep.nabla_e.dim() == 1);
    CHECK(rep.t42.qd.qa.alg->dim == 11); /* A / <a2.b3> */
    CHECK(rep.t42.b->dim == 18);
    CHECK(rep.t42.j.dim() == 1);
    CHECK(rep.t42.bbar->dim == 17); /* B / <be.ga.de.al> */
    CHECK(rep.j_equals_nabla_etilde);
    auto fa = invariant_report(*rep.t42.qd.qa.alg);
    auto fb = invariant_report(*rep.t42.bbar);
    CHECK(fa.num_simples == 3);
    CHECK(fb.num_simples == 3);
    CHECK(fa.cartan_snf == std::vector<long long>{1, 1, 1});
    CHECK(compare_reports(fa, fb).consistent);
}

TEST_CASE("nabla quotient pair: degenerate cases")
{
    /* e = 1: nabla = 0 and the pair is (A, End(A[1])) */
    auto t3 = from_presentation<Fp>(nakayama_pres(3, FieldSpec::Fp(2)));
    auto a = AlgebraPtr<Fp>(t3.alg);
    auto rep = nabla_quotient_pair(a, {0}, 1);
    CHECK(rep.verdict);
    CHECK(rep.nabla_e.dim() == 0);
    CHECK(rep.t42.qd.qa.alg->dim == 3);
    CHECK(rep.t42.bbar->dim == 3);
    /* k x k with e = first factor: the pair collapses to (k, k) */
    auto kk = from_presentation<Fp>(kxk_pres(FieldSpec::Fp(2)));
    auto kkp = AlgebraPtr<Fp>(kk.alg);
    auto rep2 = nabla_quotient_pair(kkp, {0}, 1);
    CHECK(rep2.verdict);
    CHECK(rep2.t42.qd.qa.alg->dim == 1);
    CHECK(rep2.t42.bbar->dim == 1);
}
