#pragma once

#include "field.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ayt {

/* A finite set of natural numbers, kept strictly increasing. An optional cap
 * records that the set is the truncation of a parametric/infinite family. */
struct DegreeSet {
    std::vector<uint64_t> elements;
    std::optional<uint64_t> cap;

    static DegreeSet of(std::vector<uint64_t> xs, std::optional<uint64_t> cap = std::nullopt)
    {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        if (cap)
            AYT_CHECK(xs.empty() || xs.back() <= *cap, "DegreeSet: element above cap");
        return DegreeSet{std::move(xs), cap};
    }

    bool contains(uint64_t x) const
    {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
    uint64_t max() const { return elements.empty() ? 0 : elements.back(); }
    size_t size() const { return elements.size(); }

    std::string str() const
    {
        std::string s = "{";
        for (size_t i = 0; i < elements.size(); ++i)
            s += (i ? "," : "") + std::to_string(elements[i]);
        return s + "}";
    }
};

struct AdmissibleReport {
    bool admissible = false;
    bool missing_zero = false;
    std::optional<std::array<uint64_t, 3>> witness; /* violating (i,j,k) */
};

/* 0 in S, and for all i,j,k in S with i+j+k in S: i+j in S iff j+k in S.
 * Exhaustive O(|S|^3); the sets are tiny. */
inline AdmissibleReport is_admissible(const DegreeSet& s)
{
    AdmissibleReport rep;
    if (!s.contains(0)) {
        rep.missing_zero = true;
        return rep;
    }
    for (uint64_t i : s.elements)
        for (uint64_t j : s.elements)
            for (uint64_t k : s.elements) {
                if (!s.contains(i + j + k))
                    continue;
                if (s.contains(i + j) != s.contains(j + k)) {
                    rep.witness = {i, j, k};
                    return rep;
                }
            }
    rep.admissible = true;
    return rep;
}

/* Phi(n,m) = { x*n : 0 <= x < m+1 }, materialized below an explicit cap when
 * m is infinite. */
inline DegreeSet phi_family(uint64_t n, std::optional<uint64_t> m, std::optional<uint64_t> cap)
{
    AYT_CHECK(n > 0, "phi_family: n must be positive");
    AYT_CHECK(m.has_value() || cap.has_value(), "phi_family: infinite family requires a cap");
    std::vector<uint64_t> xs;
    for (uint64_t x = 0;; ++x) {
        if (m && x >= *m + 1)
            break;
        uint64_t v = x * n;
        if (cap && v > *cap)
            break;
        xs.push_back(v);
        if (!m && !cap)
            break;
    }
    return DegreeSet::of(std::move(xs), cap);
}

enum class SetOp { Scale, Intersect, Power };

struct SetOpResult {
    DegreeSet result;
    AdmissibleReport admissible_report;
};

inline SetOpResult set_ops(const DegreeSet& s1, const std::optional<DegreeSet>& s2, SetOp op,
                           uint64_t m = 0)
{
    std::vector<uint64_t> xs;
    switch (op) {
    case SetOp::Scale:
        for (uint64_t x : s1.elements)
            xs.push_back(m * x);
        break;
    case SetOp::Intersect: {
        AYT_CHECK(s2.has_value(), "set_ops: intersect needs a second operand");
        for (uint64_t x : s1.elements)
            if (s2->contains(x))
                xs.push_back(x);
        break;
    }
    case SetOp::Power: {
        AYT_CHECK(m >= 1, "set_ops: power needs m >= 1");
        for (uint64_t x : s1.elements) {
            uint64_t v = 1;
            for (uint64_t i = 0; i < m; ++i)
                v *= x;
            xs.push_back(v);
        }
        break;
    }
    }
    SetOpResult out{DegreeSet::of(std::move(xs)), {}};
    out.admissible_report = is_admissible(out.result);
    return out;
}

} // namespace ayt
