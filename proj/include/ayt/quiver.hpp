#pragma once

#include "vecmat.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace ayt {

struct Arrow {
    std::string label;
    int src = 0, dst = 0; /* vertices are 0-based internally */
};

struct Quiver {
    int nv = 0;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string& label) const
    {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].label == label)
                return (int)i;
        return -1;
    }
    void validate() const
    {
        AYT_CHECK(nv > 0, "quiver: need at least one vertex");
        std::map<std::string, int> seen;
        for (auto& a : arrows) {
            AYT_CHECK(a.src >= 0 && a.src < nv && a.dst >= 0 && a.dst < nv,
                      "quiver: arrow endpoint out of range");
            AYT_CHECK(seen.emplace(a.label, 1).second, "quiver: duplicate arrow label " + a.label);
        }
    }
};

/* One summand of a relation: coeff * (arrow path, composed left to right). */
struct PathTerm {
    long long num = 1, den = 1;
    std::vector<int> arrows;
};

struct Relation {
    std::vector<PathTerm> terms;
};

struct PathPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    FieldSpec field;
    int cap = 0; /* the two-sided ideal must contain every path of this length */
};

/* All composable paths of length <= maxlen, indexed by creation order
 * (breadth-first by length, then by (prefix, arrow)); ids are therefore
 * monotone in length. Trivial paths e_v get ids 0..nv-1. */
class PathEnumerator {
  public:
    struct Node {
        int src, dst, len;
        int parent, arrow; /* path = parent followed by arrow; -1 for e_v */
        std::vector<int> child;
    };

    PathEnumerator(const Quiver& q, int maxlen) : q_(q), maxlen_(maxlen)
    {
        for (int v = 0; v < q.nv; ++v) {
            nodes_.push_back({v, v, 0, -1, -1, std::vector<int>(q.arrows.size(), -1)});
            len_start_.resize(1, 0);
        }
        size_t lo = 0, hi = nodes_.size();
        for (int len = 1; len <= maxlen; ++len) {
            len_start_.push_back((int)nodes_.size());
            for (size_t i = lo; i < hi; ++i)
                for (size_t a = 0; a < q.arrows.size(); ++a)
                    if (q.arrows[a].src == nodes_[i].dst) {
                        nodes_[i].child[a] = (int)nodes_.size();
                        nodes_.push_back({nodes_[i].src, q.arrows[a].dst, len, (int)i, (int)a,
                                          std::vector<int>(q.arrows.size(), -1)});
                    }
            lo = hi;
            hi = nodes_.size();
        }
        len_start_.push_back((int)nodes_.size());
    }

    const Quiver& quiver() const { return q_; }
    int maxlen() const { return maxlen_; }
    int count() const { return (int)nodes_.size(); }
    const Node& node(int id) const { return nodes_[id]; }
    /* first id of paths of the given length (== count() past maxlen) */
    int first_of_length(int len) const
    {
        return len <= maxlen_ ? len_start_[len] : (int)nodes_.size();
    }

    /* id of path given by arrow sequence starting at src; -1 if too long */
    int locate(int src, const std::vector<int>& arrows) const
    {
        int id = src;
        for (int a : arrows) {
            if (q_.arrows[a].src != nodes_[id].dst)
                return -2; /* not composable */
            id = nodes_[id].child[a];
            if (id < 0)
                return -1;
        }
        return id;
    }

    /* concatenation u.v; -1 if it leaves the enumerated range, -2 if not composable */
    int concat(int u, int v) const
    {
        std::vector<int> seq = arrow_seq(v);
        if (nodes_[u].dst != nodes_[v].src)
            return -2;
        int id = u;
        for (int a : seq) {
            id = nodes_[id].child[a];
            if (id < 0)
                return -1;
        }
        return id;
    }

    std::vector<int> arrow_seq(int id) const
    {
        std::vector<int> seq;
        while (nodes_[id].parent >= 0) {
            seq.push_back(nodes_[id].arrow);
            id = nodes_[id].parent;
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
    }

    std::string str(int id) const
    {
        if (nodes_[id].len == 0)
            return "e" + std::to_string(nodes_[id].src + 1);
        std::string s;
        for (int a : arrow_seq(id)) {
            if (!s.empty())
                s += ".";
            s += q_.arrows[a].label;
        }
        return s;
    }

  private:
    Quiver q_;
    int maxlen_;
    std::vector<Node> nodes_;
    std::vector<int> len_start_;
};

/* Sparse vector on path ids, kept sorted by id. */
template <class K> struct SparseVec {
    std::vector<std::pair<int, K>> t; /* ascending ids, nonzero coeffs */

    bool empty() const { return t.empty(); }
    int pivot() const { return t.back().first; } /* largest id */
    void normalize_at_pivot()
    {
        K inv = t.back().second.inv();
        for (auto& e : t)
            e.second = inv * e.second;
    }
    static SparseVec axpy(const SparseVec& x, const K& c, const SparseVec& y)
    { /* x + c*y */
        SparseVec out;
        out.t.reserve(x.t.size() + y.t.size());
        size_t i = 0, j = 0;
        while (i < x.t.size() || j < y.t.size()) {
            if (j == y.t.size() || (i < x.t.size() && x.t[i].first < y.t[j].first))
                out.t.push_back(x.t[i++]);
            else if (i == x.t.size() || y.t[j].first < x.t[i].first) {
                K v = c * y.t[j].second;
                if (!v.is_zero())
                    out.t.push_back({y.t[j].first, v});
                ++j;
            } else {
                K v = x.t[i].second + c * y.t[j].second;
                if (!v.is_zero())
                    out.t.push_back({x.t[i].first, v});
                ++i;
                ++j;
            }
        }
        return out;
    }
};

/* Echelonized span of sparse vectors with pivot = largest id. Rows are
 * normalized to pivot coefficient 1. Since a row's support is bounded by its
 * pivot, the rows with pivot < c span exactly (span) ∩ (ids < c). */
template <class K> class SparseSpan {
  public:
    bool insert(SparseVec<K> v)
    {
        reduce(v);
        if (v.empty())
            return false;
        v.normalize_at_pivot();
        int p = v.pivot();
        rows_.emplace(p, std::move(v));
        return true;
    }
    void reduce(SparseVec<K>& v) const
    {
        while (!v.empty()) {
            auto it = rows_.find(v.pivot());
            if (it == rows_.end())
                return;
            K c = -v.t.back().second;
            v = SparseVec<K>::axpy(v, c, it->second);
        }
    }
    bool contains(SparseVec<K> v) const
    {
        reduce(v);
        return v.empty();
    }
    /* fully reduce: eliminate every pivotal id occurring in v */
    SparseVec<K> residue(SparseVec<K> v) const
    {
        SparseVec<K> done;
        while (!v.empty()) {
            auto it = rows_.find(v.pivot());
            if (it == rows_.end()) {
                done.t.push_back(v.t.back());
                v.t.pop_back();
            } else {
                K c = -v.t.back().second;
                v = SparseVec<K>::axpy(v, c, it->second);
            }
        }
        std::reverse(done.t.begin(), done.t.end());
        return done;
    }
    bool is_pivot(int id) const { return rows_.count(id) != 0; }
    size_t dim() const { return rows_.size(); }
    const std::map<int, SparseVec<K>>& rows() const { return rows_; }

  private:
    std::map<int, SparseVec<K>> rows_;
};

} // namespace ayt
