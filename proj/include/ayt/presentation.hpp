#pragma once

#include "algebra.hpp"
#include "quiver.hpp"

#include <map>
#include <memory>
#include <set>
#include <tuple>

namespace ayt {

template <class K> struct PresentedAlgebra {
    std::shared_ptr<FDAlgebra<K>> alg;
    Quiver quiver;
    std::vector<std::vector<int>> basis_arrows; /* arrow sequence of each basis path */
    std::vector<int> basis_src;                 /* source vertex of each basis path */
};

namespace detail {

template <class K>
SparseVec<K> relation_vec(const PathEnumerator& pe, const Relation& rel, const FieldSpec& field,
                          int* src = nullptr, int* dst = nullptr)
{
    std::map<int, K> acc;
    for (auto& t : rel.terms) {
        AYT_CHECK(t.arrows.size() >= 2, "relation has a component of length < 2");
        int s = pe.quiver().arrows[t.arrows.front()].src;
        int id = pe.locate(s, t.arrows);
        AYT_CHECK(id != -2, "relation path not composable");
        AYT_CHECK(id >= 0, "relation longer than the truncation level");
        if (src) {
            if (*src < 0) {
                *src = pe.node(id).src;
                *dst = pe.node(id).dst;
            } else
                AYT_CHECK(*src == pe.node(id).src && *dst == pe.node(id).dst,
                          "relation mixes source/target pairs");
        }
        K c = scalar_from_frac<K>(t.num, t.den, field);
        auto [it, fresh] = acc.emplace(id, c);
        if (!fresh)
            it->second += c;
    }
    SparseVec<K> v;
    for (auto& [id, c] : acc)
        if (!c.is_zero())
            v.t.push_back({id, c});
    return v;
}

/* Closure of a span under front/back arrow extension inside the truncated
 * path space (products beyond maxlen are dropped termwise); supports
 * incremental insertion. */
template <class K> class TruncatedIdealClosure {
  public:
    explicit TruncatedIdealClosure(const PathEnumerator& pe) : pe_(pe) {}

    const SparseSpan<K>& span() const { return span_; }

    void add(SparseVec<K> v)
    {
        push(std::move(v));
        const auto& q = pe_.quiver();
        for (size_t qi = cursor_; qi < queue_.size(); ++qi) {
            SparseVec<K> cur = queue_[qi]; /* copy: queue may reallocate */
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                SparseVec<K> front, back;
                for (auto& [id, c] : cur.t) {
                    const auto& nd = pe_.node(id);
                    if (q.arrows[a].dst == nd.src) { /* arrow then path */
                        int pid = pe_.locate(q.arrows[a].src, [&] {
                            std::vector<int> s{(int)a};
                            auto t = pe_.arrow_seq(id);
                            s.insert(s.end(), t.begin(), t.end());
                            return s;
                        }());
                        if (pid >= 0)
                            front.t.push_back({pid, c});
                    }
                    if (nd.dst == q.arrows[a].src) { /* path then arrow */
                        int pid = nd.child[a];
                        if (pid >= 0)
                            back.t.push_back({pid, c});
                    }
                }
                auto sortv = [](SparseVec<K>& v2) {
                    std::sort(v2.t.begin(), v2.t.end(),
                              [](auto& x, auto& y) { return x.first < y.first; });
                };
                if (!front.empty()) {
                    sortv(front);
                    push(std::move(front));
                }
                if (!back.empty()) {
                    sortv(back);
                    push(std::move(back));
                }
            }
        }
        cursor_ = queue_.size();
    }

  private:
    void push(SparseVec<K> v)
    {
        SparseVec<K> w = v;
        if (span_.insert(std::move(v)))
            queue_.push_back(std::move(w));
    }
    const PathEnumerator& pe_;
    SparseSpan<K> span_;
    std::vector<SparseVec<K>> queue_;
    size_t cursor_ = 0;
};

template <class K>
SparseSpan<K> truncated_ideal_closure(const PathEnumerator& pe,
                                      const std::vector<SparseVec<K>>& rels)
{
    TruncatedIdealClosure<K> cl(pe);
    for (auto& r : rels)
        cl.add(r);
    return cl.span();
}

/* Untruncated ideal slice P = span{ u r v : every term within maxlen }:
 * breadth-first over (relation, u, v) triples. */
template <class K>
SparseSpan<K> exact_ideal_slice(const PathEnumerator& pe, const std::vector<Relation>& rels,
                                const FieldSpec& field)
{
    SparseSpan<K> span;
    const auto& q = pe.quiver();
    struct Item {
        int rel, u, v; /* path ids in pe (u ends at rel src, v starts at rel dst) */
    };
    std::vector<SparseVec<K>> base;
    std::vector<int> rsrc(rels.size()), rdst(rels.size()), rmax(rels.size(), 0);
    for (size_t r = 0; r < rels.size(); ++r) {
        int s = -1, d = -1;
        base.push_back(relation_vec<K>(pe, rels[r], field, &s, &d));
        rsrc[r] = s;
        rdst[r] = d;
        for (auto& t : rels[r].terms)
            rmax[r] = std::max(rmax[r], (int)t.arrows.size());
    }
    std::set<std::tuple<int, int, int>> seen;
    std::vector<Item> queue;
    auto vec_of = [&](const Item& it) {
        /* u . r . v as a sparse vector */
        SparseVec<K> out;
        for (auto& [id, c] : base[it.rel].t) {
            int m = pe.concat(it.u, id);
            if (m >= 0)
                m = pe.concat(m, it.v);
            AYT_CHECK(m >= 0, "exact slice: term left the enumeration");
            out.t.push_back({m, c});
        }
        std::sort(out.t.begin(), out.t.end(), [](auto& x, auto& y) { return x.first < y.first; });
        return out;
    };
    auto push = [&](Item it) {
        if (!seen.emplace(it.rel, it.u, it.v).second)
            return;
        queue.push_back(it);
        span.insert(vec_of(it));
    };
    for (size_t r = 0; r < rels.size(); ++r)
        if (rsrc[r] >= 0)
            push({(int)r, rsrc[r], rdst[r]});
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Item cur = queue[qi];
        int used = pe.node(cur.u).len + rmax[cur.rel] + pe.node(cur.v).len;
        if (used + 1 > pe.maxlen())
            continue;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].dst == pe.node(cur.u).src) {
                int nu = pe.locate(q.arrows[a].src, [&] {
                    std::vector<int> s{(int)a};
                    auto t = pe.arrow_seq(cur.u);
                    s.insert(s.end(), t.begin(), t.end());
                    return s;
                }());
                if (nu >= 0)
                    push({cur.rel, nu, cur.v});
            }
            if (pe.node(cur.v).dst == q.arrows[a].src) {
                int nv = pe.node(cur.v).child[a];
                if (nv >= 0)
                    push({cur.rel, cur.u, nv});
            }
        }
    }
    return span;
}

} // namespace detail

/* Quotient of the path algebra by the two-sided ideal generated by the
 * relations. The ideal must contain all paths of length cap; this is
 * certified, not assumed (see ledger note on inhomogeneous relations). */
template <class K> PresentedAlgebra<K> from_presentation(const PathPresentation& pres)
{
    pres.quiver.validate();
    AYT_CHECK(pres.cap >= 1, "from_presentation: cap must be positive");
    int maxrel = 0;
    for (auto& r : pres.relations)
        for (auto& t : r.terms) {
            AYT_CHECK(t.arrows.size() >= 2,
                      "relation ideal not admissible: component of length < 2");
            maxrel = std::max(maxrel, (int)t.arrows.size());
        }
    AYT_CHECK(maxrel <= pres.cap, "from_presentation: cap smaller than a relation term");

    const int L = pres.cap;
    PathEnumerator pe(pres.quiver, L);
    AYT_CHECK(pe.count() <= 4000000, "from_presentation: path space too large at this cap");
    std::vector<SparseVec<K>> rvecs;
    bool homogeneous = true;
    for (auto& r : pres.relations) {
        int s = -1, d = -1;
        rvecs.push_back(detail::relation_vec<K>(pe, r, pres.field, &s, &d));
        size_t len0 = r.terms.front().arrows.size();
        for (auto& t : r.terms)
            if (t.arrows.size() != len0)
                homogeneous = false;
    }
    SparseSpan<K> closure = detail::truncated_ideal_closure(pe, rvecs);

    const int cutoff = pe.first_of_length(L); /* first id of length cap */
    auto nilpotency_ok = [&](const SparseSpan<K>& sp, const PathEnumerator& en) {
        for (int id = en.first_of_length(L); id < en.first_of_length(L + 1); ++id) {
            SparseVec<K> v;
            v.t.push_back({id, K(1)});
            if (!sp.contains(std::move(v)))
                return false;
        }
        return true;
    };

    if (homogeneous) {
        AYT_CHECK(nilpotency_ok(closure, pe),
                  "relation ideal not admissible: nilpotency not reached at cap");
    } else {
        bool certified = false;
        for (int L2 = L + 1; L2 <= L + maxrel + 3 && !certified; ++L2) {
            PathEnumerator pe2(pres.quiver, L2);
            if (pe2.count() > 4000000)
                break;
            SparseSpan<K> exact = detail::exact_ideal_slice<K>(pe2, pres.relations, pres.field);
            if (!nilpotency_ok(exact, pe2))
                continue;
            /* the two closures must agree below the cap */
            bool agree = true;
            for (auto& [piv, row] : closure.rows())
                if (piv < cutoff && !exact.contains(row)) {
                    agree = false;
                    break;
                }
            if (agree)
                for (auto& [piv, row] : exact.rows())
                    if (piv < cutoff && !closure.contains(row)) {
                        agree = false;
                        break;
                    }
            certified = agree;
        }
        AYT_CHECK(certified, "relation ideal not admissible: nilpotency at cap could not be "
                             "certified (raise cap?)");
    }

    /* quotient basis: non-pivot paths of length < cap */
    std::vector<int> basis_ids;
    std::vector<int> index_of(cutoff, -1);
    for (int id = 0; id < cutoff; ++id)
        if (!closure.is_pivot(id)) {
            index_of[id] = (int)basis_ids.size();
            basis_ids.push_back(id);
        }
    size_t dim = basis_ids.size();
    std::vector<Vec<K>> red(cutoff); /* reduction of each path to basis coords */
    for (int id = 0; id < cutoff; ++id) {
        SparseVec<K> v;
        v.t.push_back({id, K(1)});
        SparseVec<K> r = closure.residue(std::move(v));
        Vec<K> out(dim, K(0));
        for (auto& [pid, c] : r.t) {
            AYT_CHECK(pid < cutoff && index_of[pid] >= 0, "reduction left the basis");
            out[index_of[pid]] = c;
        }
        red[id] = std::move(out);
    }

    PresentedAlgebra<K> out;
    out.quiver = pres.quiver;
    auto alg = std::make_shared<FDAlgebra<K>>();
    alg->field = pres.field;
    alg->dim = dim;
    for (int id : basis_ids) {
        alg->labels.push_back(pe.str(id));
        out.basis_arrows.push_back(pe.arrow_seq(id));
        out.basis_src.push_back(pe.node(id).src);
    }
    alg->lmul.assign(dim, Matrix<K>(dim, dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            int u = basis_ids[i], v = basis_ids[j];
            if (pe.node(u).len + pe.node(v).len >= L)
                continue; /* lands in J^cap which is inside the ideal */
            int m = pe.concat(u, v);
            if (m == -2)
                continue;
            AYT_CHECK(m >= 0, "structure constants: concat left the enumeration");
            alg->lmul[i].set_col(j, m < cutoff ? red[m] : Vec<K>(dim, K(0)));
        }
    alg->fill_rmul();
    alg->unit.assign(dim, K(0));
    for (int v = 0; v < pres.quiver.nv; ++v) {
        AYT_CHECK(index_of[v] >= 0, "trivial path eliminated (bad relations)");
        alg->unit[index_of[v]] = K(1);
        alg->idem.push_back(unit_vec<K>(dim, index_of[v]));
    }
    for (size_t i = 0; i < dim; ++i)
        if (pe.node(basis_ids[i]).len > 0)
            alg->rad.push_back(unit_vec<K>(dim, i));
    alg->rad_known = true;
    for (int v = 0; v < pres.quiver.nv; ++v)
        alg->gens.push_back((size_t)index_of[v]);
    for (size_t a = 0; a < pres.quiver.arrows.size(); ++a) {
        int id = pres.quiver.nv + (int)a;
        AYT_CHECK(index_of[id] >= 0, "arrow eliminated by relations (length-1 component?)");
        alg->gens.push_back((size_t)index_of[id]);
    }
    alg->bind_data();
    alg->verify();
    out.alg = alg;
    return out;
}

/* Dimensions of the presented algebra by total arrow weight. Valid when all
 * relations are weight-homogeneous (checked). */
inline std::map<uint64_t, size_t> presented_graded_dims(const Quiver& q,
                                                        const std::vector<std::vector<int>>& basis,
                                                        const std::vector<Relation>& rels,
                                                        const std::vector<uint64_t>& weights)
{
    AYT_CHECK(weights.size() == q.arrows.size(), "graded dims: weight per arrow required");
    auto wt = [&](const std::vector<int>& arrows) {
        uint64_t w = 0;
        for (int a : arrows)
            w += weights[a];
        return w;
    };
    for (auto& r : rels) {
        uint64_t w0 = wt(r.terms.front().arrows);
        for (auto& t : r.terms)
            AYT_CHECK(wt(t.arrows) == w0, "graded dims: relation not weight-homogeneous");
    }
    std::map<uint64_t, size_t> out;
    for (auto& b : basis)
        out[wt(b)]++;
    return out;
}

inline std::pair<long long, long long> scalar_to_frac(const Fp& x) { return {x.value(), 1}; }
inline std::pair<long long, long long> scalar_to_frac(const Rat& x)
{
    AYT_CHECK(x.value().get_num().fits_slong_p() && x.value().get_den().fits_slong_p(),
              "scalar_to_frac: coefficient too large");
    return {x.value().get_num().get_si(), x.value().get_den().get_si()};
}

/* Quiver-with-relations presentation of a basic split algebra: arrows i->j
 * are lifts of a basis of e_i (rad/rad^2) e_j; relations are a basis of the
 * kernel of the path-algebra surjection up to length cap. */
template <class K> PathPresentation presentation_of(const FDAlgebra<K>& a, int cap)
{
    AYT_CHECK(!a.idem.empty() && a.rad_known, "presentation_of: needs idempotents and radical");
    AYT_CHECK(is_basic(a), "presentation_of: algebra must be basic");
    AYT_CHECK((size_t)cap + 1 >= loewy_length(a), "presentation_of: cap below Loewy length");

    size_t nv = a.idem.size();
    /* rad^2 */
    RowSpan<K> rad2(a.dim);
    for (auto& r : a.rad)
        for (auto& s : a.rad)
            rad2.insert(a.mul(r, s));

    PathPresentation pres;
    pres.field = a.field;
    pres.cap = cap;
    pres.quiver.nv = (int)nv;
    std::vector<Vec<K>> arrow_lift;
    int arrow_no = 0;
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j) {
            RowSpan<K> seen(a.dim);
            for (auto& v : rad2.rows())
                seen.insert(a.mul(a.mul(a.idem[i], v), a.idem[j]));
            for (auto& r : a.rad) {
                Vec<K> v = a.mul(a.mul(a.idem[i], r), a.idem[j]);
                if (seen.insert(v)) {
                    pres.quiver.arrows.push_back(
                        {"x" + std::to_string(++arrow_no), (int)i, (int)j});
                    arrow_lift.push_back(v);
                }
            }
        }

    /* kernel of the surjection, per (source, target) pair and path length <= cap */
    PathEnumerator pe(pres.quiver, cap);
    std::vector<Vec<K>> value(pe.count());
    for (int id = 0; id < pe.count(); ++id) {
        if (pe.node(id).len == 0)
            value[id] = a.idem[pe.node(id).src];
        else
            value[id] = a.mul(value[pe.node(id).parent], arrow_lift[pe.node(id).arrow]);
    }
    std::vector<std::pair<int, Relation>> candidates; /* (max term length, relation) */
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = 0; j < nv; ++j) {
            std::vector<int> ids;
            for (int id = 0; id < pe.count(); ++id)
                if (pe.node(id).src == (int)i && pe.node(id).dst == (int)j)
                    ids.push_back(id);
            if (ids.empty())
                continue;
            Matrix<K> ev(a.dim, ids.size());
            for (size_t c = 0; c < ids.size(); ++c)
                ev.set_col(c, value[ids[c]]);
            for (auto& k : kernel_basis(ev)) {
                Relation rel;
                int maxlen = 0;
                for (size_t c = 0; c < ids.size(); ++c) {
                    if (k[c].is_zero())
                        continue;
                    PathTerm t;
                    t.arrows = pe.arrow_seq(ids[c]);
                    AYT_CHECK(t.arrows.size() >= 2, "presentation_of: kernel met length <= 1");
                    maxlen = std::max(maxlen, (int)t.arrows.size());
                    std::tie(t.num, t.den) = scalar_to_frac(k[c]);
                    rel.terms.push_back(std::move(t));
                }
                if (!rel.terms.empty())
                    candidates.push_back({maxlen, std::move(rel)});
            }
        }
    /* keep only the kernel elements that enlarge the relation ideal, shortest
     * first (a greedy generating subset) */
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](auto& x, auto& y) { return x.first < y.first; });
    detail::TruncatedIdealClosure<K> closure(pe);
    for (auto& [len, rel] : candidates) {
        SparseVec<K> v = detail::relation_vec<K>(pe, rel, a.field);
        if (closure.span().contains(v))
            continue;
        closure.add(std::move(v));
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

} // namespace ayt
