/* ayt: exact computations with quiver algebras, tilting complexes and
 * Phi-Auslander-Yoneda algebras. */
#include "ayt/admissible.hpp"
#include "ayt/shift_instance.hpp"
#include "ayt/textio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace ayt;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string command;
    std::string algebra_file, algebra_file2;
    std::string module_spec = "regular", module_spec2;
    std::string complex_name, complex_name2;
    std::string set1, set2, op = "intersect";
    std::string phi = "0";
    std::string eset, pset, ideal_soc, ideal_nabla;
    uint64_t family_n = 1;
    long long family_m = -1; /* -1 = infinity */
    long long set_cap = -1;
    long long scale_m = 1;
    int shift = 0;
    long long cap_path = 0; /* 0 = from file */
    long long cap_resolution = 8;
    long long cap_degree = -1;
    uint64_t seed = 0;
    int deg1 = 1, idx1 = 0, deg2 = 1, idx2 = 0;
    bool json = false;
    std::string field_override;
};

std::vector<uint64_t> parse_nat_list(const std::string& s)
{
    std::vector<uint64_t> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty())
            out.push_back((uint64_t)std::stoull(tok));
    return out;
}

std::vector<size_t> parse_vertex_list(const std::string& s, size_t nv)
{
    std::vector<size_t> out;
    for (auto v : parse_nat_list(s)) {
        AYT_CHECK(v >= 1 && v <= nv, "vertex index out of range: " + std::to_string(v));
        out.push_back((size_t)v - 1);
    }
    return out;
}

ordered_json snf_json(const std::vector<long long>& v)
{
    ordered_json a = ordered_json::array();
    for (auto x : v)
        a.push_back(x);
    return a;
}

ordered_json zmat_json(const ZMat& m)
{
    ordered_json rows = ordered_json::array();
    for (auto& r : m) {
        ordered_json row = ordered_json::array();
        for (auto& x : r)
            row.push_back(x.get_str());
        rows.push_back(row);
    }
    return rows;
}

ordered_json invariant_json(const InvariantReport& r)
{
    ordered_json j;
    j["num_simples"] = r.num_simples;
    j["cartan"] = zmat_json(r.cartan);
    j["cartan_snf"] = snf_json(r.cartan_snf);
    j["dim_algebra"] = r.dim_algebra;
    j["dim_center"] = r.dim_center;
    j["loewy_length"] = r.loewy;
    return j;
}

void render_plain(const ordered_json& j, std::ostream& os, int indent = 0)
{
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object() || (it->is_array() && !it->empty() && it->begin()->is_object())) {
                os << pad << it.key() << ":\n";
                render_plain(*it, os, indent + 2);
            } else
                os << pad << it.key() << ": " << it->dump() << "\n";
        }
    } else if (j.is_array()) {
        for (auto& el : j) {
            os << pad << "-\n";
            render_plain(el, os, indent + 2);
        }
    } else
        os << pad << j.dump() << "\n";
}

int emit(const Options& opt, ordered_json& doc, bool math_ok)
{
    doc["status"] = math_ok ? "ok" : "condition-failed";
    if (opt.json)
        std::cout << doc.dump(2) << "\n";
    else
        render_plain(doc, std::cout);
    return math_ok ? 0 : 1;
}

template <class K> struct Loaded {
    AlgebraFile file;
    PresentedAlgebra<K> pa;
    AlgebraPtr<K> a;
};

template <class K> Loaded<K> load_algebra(const Options& opt, const std::string& path)
{
    Loaded<K> out;
    out.file = parse_algebra_file(path);
    if (!opt.field_override.empty()) {
        if (opt.field_override == "rational")
            out.file.pres.field = FieldSpec::Q();
        else
            out.file.pres.field = FieldSpec::Fp(std::stoll(opt.field_override.substr(2)));
    }
    if (opt.cap_path > 0)
        out.file.pres.cap = (int)opt.cap_path;
    out.pa = from_presentation<K>(out.file.pres);
    out.a = AlgebraPtr<K>(out.pa.alg);
    return out;
}

/* module spec: regular | simple:<v> | proj:<v> | syzygy:<spec> | file:<name>,
 * with '+' for direct sums */
template <class K>
FDModule<K> module_from_spec(const Loaded<K>& L, const std::string& spec)
{
    std::vector<FDModule<K>> parts;
    std::istringstream in(spec);
    std::string tok;
    std::function<FDModule<K>(const std::string&)> one = [&](const std::string& t) {
        if (t == "regular")
            return regular_module(L.a);
        if (t.rfind("simple:", 0) == 0) {
            size_t v = (size_t)std::stoul(t.substr(7));
            AYT_CHECK(v >= 1 && v <= L.a->idem.size(), "module spec: bad vertex in " + t);
            return simple_module(L.a, v - 1);
        }
        if (t.rfind("proj:", 0) == 0) {
            size_t v = (size_t)std::stoul(t.substr(5));
            AYT_CHECK(v >= 1 && v <= L.a->idem.size(), "module spec: bad vertex in " + t);
            return projective_column(L.a, v - 1);
        }
        if (t.rfind("syzygy:", 0) == 0)
            return syzygy(one(t.substr(7)));
        if (t.rfind("file:", 0) == 0) {
            std::string name = t.substr(5);
            for (auto& mt : L.file.modules)
                if (mt.name == name)
                    return module_from_text(L.pa, mt);
            throw AytError("module spec: no module '" + name + "' in the algebra file");
        }
        throw AytError("module spec: unknown term '" + t + "'");
    };
    while (std::getline(in, tok, '+'))
        if (!tok.empty())
            parts.push_back(one(tok));
    AYT_CHECK(!parts.empty(), "module spec: empty");
    if (parts.size() == 1)
        return parts[0];
    std::vector<const FDModule<K>*> ptrs;
    for (auto& p : parts)
        ptrs.push_back(&p);
    auto ds = direct_sum(L.a, ptrs);
    ds.mod.name = spec;
    return ds.mod;
}

template <class K>
Complex<K> complex_from_file(const Loaded<K>& L, const std::string& name)
{
    for (auto& ct : L.file.complexes)
        if (ct.name == name) {
            auto pool = projective_pool(L.a);
            Complex<K> c;
            c.algebra = L.a;
            c.pool = pool;
            AYT_CHECK(!ct.terms.empty(), "complex " + name + ": no terms");
            int lo = ct.terms.begin()->first, hi = ct.terms.rbegin()->first;
            c.lo = lo;
            for (int d = lo; d <= hi; ++d) {
                auto it = ct.terms.find(d);
                c.terms.push_back(
                    make_term(pool, it == ct.terms.end() ? std::vector<int>{} : it->second));
            }
            for (int d = lo; d < hi; ++d) {
                Matrix<K> m(c.term_dim(d + 1), c.term_dim(d));
                auto it = ct.maps.find(d);
                if (it != ct.maps.end()) {
                    AYT_CHECK(it->second.size() == m.rows(),
                              "complex " + name + ": map " + std::to_string(d) +
                                  " row count mismatch");
                    for (size_t i = 0; i < m.rows(); ++i) {
                        AYT_CHECK(it->second[i].size() == m.cols(),
                                  "complex " + name + ": map " + std::to_string(d) +
                                      " column count mismatch");
                        for (size_t j = 0; j < m.cols(); ++j)
                            m.at(i, j) = scalar_from_frac<K>(it->second[i][j].first,
                                                             it->second[i][j].second,
                                                             L.a->field);
                    }
                } else
                    AYT_CHECK(m.rows() == 0 || m.cols() == 0,
                              "complex " + name + ": missing map " + std::to_string(d));
                c.diff.push_back(std::move(m));
            }
            c.verify();
            return c;
        }
    throw AytError("no complex named '" + name + "' in the algebra file");
}

DegreeSet parse_phi(const std::string& s, long long cap)
{
    auto xs = parse_nat_list(s);
    return DegreeSet::of(xs, cap >= 0 ? std::optional<uint64_t>((uint64_t)cap) : std::nullopt);
}

template <class K> int run_typed(const Options& opt)
{
    ordered_json doc;
    doc["command"] = opt.command;

    if (opt.command == "admissible-check") {
        auto s = DegreeSet::of(parse_nat_list(opt.set1));
        auto rep = is_admissible(s);
        doc["set"] = s.str();
        doc["admissible"] = rep.admissible;
        if (rep.missing_zero)
            doc["witness"] = "missing-zero";
        else if (rep.witness) {
            doc["witness"] = ordered_json::array(
                {(*rep.witness)[0], (*rep.witness)[1], (*rep.witness)[2]});
        }
        return emit(opt, doc, rep.admissible);
    }
    if (opt.command == "admissible-family") {
        std::optional<uint64_t> m =
            opt.family_m < 0 ? std::nullopt : std::optional<uint64_t>((uint64_t)opt.family_m);
        std::optional<uint64_t> cap =
            opt.set_cap < 0 ? std::nullopt : std::optional<uint64_t>((uint64_t)opt.set_cap);
        auto s = phi_family(opt.family_n, m, cap);
        doc["set"] = s.str();
        doc["admissible"] = is_admissible(s).admissible;
        return emit(opt, doc, true);
    }
    if (opt.command == "admissible-ops") {
        auto s1 = DegreeSet::of(parse_nat_list(opt.set1));
        std::optional<DegreeSet> s2;
        if (!opt.set2.empty())
            s2 = DegreeSet::of(parse_nat_list(opt.set2));
        SetOp op = opt.op == "scale"     ? SetOp::Scale
                   : opt.op == "power"   ? SetOp::Power
                                         : SetOp::Intersect;
        auto r = set_ops(s1, s2, op, (uint64_t)opt.scale_m);
        doc["result"] = r.result.str();
        doc["admissible"] = r.admissible_report.admissible;
        if (r.admissible_report.witness)
            doc["witness"] = ordered_json::array({(*r.admissible_report.witness)[0],
                                                  (*r.admissible_report.witness)[1],
                                                  (*r.admissible_report.witness)[2]});
        return emit(opt, doc, true);
    }

    auto L = load_algebra<K>(opt, opt.algebra_file);
    doc["field"] = L.pa.alg->field.str();

    if (opt.command == "algebra-info") {
        doc["dim"] = L.pa.alg->dim;
        doc["basis"] = [&] {
            ordered_json a = ordered_json::array();
            for (auto& l : L.pa.alg->labels)
                a.push_back(l);
            return a;
        }();
        auto rep = invariant_report(*L.pa.alg);
        doc["invariants"] = invariant_json(rep);
        doc["selfinjective"] = is_selfinjective(*L.a);
        return emit(opt, doc, true);
    }
    if (opt.command == "algebra-present") {
        int cap = (int)(opt.cap_path > 0 ? opt.cap_path : (long long)loewy_length(*L.pa.alg));
        auto pres = presentation_of(*L.pa.alg, cap);
        doc["presentation"] = presentation_to_text(pres);
        auto round = from_presentation<K>(pres);
        doc["roundtrip_dim"] = round.alg->dim;
        doc["dim_matches"] = round.alg->dim == L.pa.alg->dim;
        return emit(opt, doc, round.alg->dim == L.pa.alg->dim);
    }
    if (opt.command == "algebra-quotient") {
        AlgebraIdeal<K> ideal;
        if (!opt.ideal_soc.empty())
            ideal = socle_ideal(L.a, parse_vertex_list(opt.ideal_soc, L.a->idem.size()));
        else if (!opt.ideal_nabla.empty())
            ideal = nabla_ideal(L.a, parse_vertex_list(opt.ideal_nabla, L.a->idem.size()));
        else
            throw AytError("algebra quotient: give --soc or --nabla");
        auto q = quotient_by_ideal(L.a, ideal);
        refresh_idempotents(*q.alg, opt.seed);
        doc["ideal_dim"] = ideal.dim();
        doc["quotient_dim"] = q.alg->dim;
        doc["invariants"] = invariant_json(invariant_report(*q.alg));
        return emit(opt, doc, true);
    }
    if (opt.command == "algebra-gldim") {
        auto g = global_dimension(L.a, (size_t)opt.cap_resolution);
        doc["cap"] = opt.cap_resolution;
        doc["global_dimension"] =
            g.bounded ? ordered_json(g.value)
                      : ordered_json(">=" + std::to_string(opt.cap_resolution));
        return emit(opt, doc, true);
    }

    if (opt.command == "module-hom") {
        auto m = module_from_spec(L, opt.module_spec);
        auto n = module_from_spec(L, opt.module_spec2.empty() ? opt.module_spec
                                                              : opt.module_spec2);
        doc["dim_hom"] = hom_dim(m, n);
        return emit(opt, doc, true);
    }
    if (opt.command == "module-socle") {
        auto m = module_from_spec(L, opt.module_spec);
        auto srt = socle_radical_top(m);
        doc["dim"] = m.dim;
        doc["socle_dim"] = srt.socle.mod.dim;
        doc["radical_dim"] = srt.radical.mod.dim;
        doc["top_dim"] = srt.top.mod.dim;
        return emit(opt, doc, true);
    }
    if (opt.command == "module-syzygy") {
        auto m = module_from_spec(L, opt.module_spec);
        auto s = syzygy(m);
        doc["dim"] = m.dim;
        doc["syzygy_dim"] = s.dim;
        return emit(opt, doc, true);
    }
    if (opt.command == "module-decompose") {
        auto m = module_from_spec(L, opt.module_spec);
        auto parts = decompose(m, opt.seed);
        ordered_json arr = ordered_json::array();
        for (auto& p : parts)
            arr.push_back(p.dim);
        doc["summand_dims"] = arr;
        return emit(opt, doc, true);
    }
    if (opt.command == "module-nustable") {
        auto e = max_nu_stable(L.a);
        ordered_json arr = ordered_json::array();
        for (auto i : e.indices)
            arr.push_back(i + 1);
        doc["nu_stable_projectives"] = arr;
        doc["dim"] = e.module.dim;
        return emit(opt, doc, true);
    }

    if (opt.command == "complex-normalize") {
        auto c = complex_from_file(L, opt.complex_name);
        auto n = normalize_radical(c);
        ordered_json arr = ordered_json::array();
        for (int d = n.lo; d <= n.hi(); ++d) {
            ordered_json t;
            t["degree"] = d;
            t["dim"] = n.term_dim(d);
            ordered_json parts = ordered_json::array();
            for (int p : n.term(d)->parts)
                parts.push_back("P" + std::to_string(p + 1));
            t["summands"] = parts;
            arr.push_back(t);
        }
        doc["radical_complex"] = arr;
        doc["radical"] = is_radical_complex(n);
        return emit(opt, doc, true);
    }
    if (opt.command == "complex-homk") {
        auto c = complex_from_file(L, opt.complex_name);
        auto c2 = complex_from_file(L, opt.complex_name2.empty() ? opt.complex_name
                                                                 : opt.complex_name2);
        doc["shift"] = opt.shift;
        doc["dim_hom"] = hom_k_dim(c, c2, opt.shift);
        return emit(opt, doc, true);
    }
    if (opt.command == "complex-end") {
        auto c = complex_from_file(L, opt.complex_name);
        auto e = end_algebra_of_complex(c, opt.seed);
        doc["end_dim"] = e.alg->dim;
        doc["summands"] = e.dec.parts.size();
        doc["invariants"] = invariant_json(invariant_report(*e.alg));
        return emit(opt, doc, true);
    }
    if (opt.command == "complex-tilt-report") {
        auto c = complex_from_file(L, opt.complex_name);
        auto r = tilting_report(c, Generation::NecessaryOnly, opt.seed);
        doc["self_orthogonal"] = r.self_orthogonal;
        if (!r.self_orthogonal)
            doc["failing_shift"] = r.failing_shift;
        doc["k0_rank"] = r.k0_rank;
        doc["k0_rank_full"] = r.k0_rank_full;
        doc["generation"] = "necessary-only";
        doc["verdict"] = r.verdict;
        return emit(opt, doc, r.verdict);
    }

    if (opt.command == "ext-table") {
        auto m = module_from_spec(L, opt.module_spec);
        auto n = opt.module_spec2.empty() ? m : module_from_spec(L, opt.module_spec2);
        size_t cap = (size_t)(opt.cap_degree >= 0 ? opt.cap_degree : 4);
        auto res = min_proj_resolution(m, cap + 1);
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i <= cap; ++i)
            arr.push_back(ext_group(res, n, i).dim());
        doc["ext_dims"] = arr;
        return emit(opt, doc, true);
    }
    if (opt.command == "ext-product") {
        auto m = module_from_spec(L, opt.module_spec);
        size_t cap = (size_t)(opt.cap_degree >= 0 ? opt.cap_degree
                                                  : (long long)(opt.deg1 + opt.deg2) + 1);
        auto res = min_proj_resolution(m, cap);
        auto e1 = ext_group(res, m, (size_t)opt.deg1);
        auto e2 = ext_group(res, m, (size_t)opt.deg2);
        AYT_CHECK((size_t)opt.idx1 < e1.dim() && (size_t)opt.idx2 < e2.dim(),
                  "ext product: class index out of range");
        auto prod = yoneda_cocycle(res, (size_t)opt.deg1, e1.reps[opt.idx1], res,
                                   (size_t)opt.deg2, e2.reps[opt.idx2]);
        auto e12 = ext_group(res, m, (size_t)(opt.deg1 + opt.deg2));
        auto cls = e12.class_of(prod);
        ordered_json arr = ordered_json::array();
        for (auto& c : cls)
            arr.push_back(c.str());
        doc["degree"] = opt.deg1 + opt.deg2;
        doc["coordinates"] = arr;
        doc["zero"] = vec_is_zero(cls);
        return emit(opt, doc, true);
    }
    if (opt.command == "ext-transport") {
        auto m = module_from_spec(L, opt.module_spec);
        AYT_CHECK(is_selfinjective(*L.a), "transport: algebra must be self-injective");
        size_t cap = (size_t)(opt.cap_degree >= 0 ? opt.cap_degree : opt.deg1 + 2);
        auto res = min_proj_resolution(m, cap);
        auto syz = syzygy_of_resolution(res);
        auto e = ext_group(res, m, (size_t)opt.deg1);
        AYT_CHECK((size_t)opt.idx1 < e.dim(), "transport: class index out of range");
        auto tr = syzygy_transport_cocycle(res, syz, (size_t)opt.deg1, e.reps[opt.idx1]);
        auto res_o = shifted_resolution(res, syz);
        auto eo = ext_group(res_o, syz.mod, (size_t)opt.deg1);
        auto cls = eo.class_of(tr);
        ordered_json arr = ordered_json::array();
        for (auto& c : cls)
            arr.push_back(c.str());
        doc["transported_coordinates"] = arr;
        doc["zero"] = vec_is_zero(cls);
        return emit(opt, doc, true);
    }

    if (opt.command == "ayoneda-build" || opt.command == "ayoneda-assoc") {
        auto m = module_from_spec(L, opt.module_spec);
        auto phi = parse_phi(opt.phi, opt.set_cap);
        size_t cap =
            (size_t)(opt.cap_degree >= 0 ? (uint64_t)opt.cap_degree : phi.max() + 1);
        auto parts = decompose(m, opt.seed);
        auto ay = build_ay_algebra(L.a, parts, phi, cap);
        doc["phi"] = phi.str();
        doc["finite"] = ay.finite; /* false when Phi is a capped infinite family */
        doc["dim"] = ay.alg->dim;
        ordered_json gd;
        for (auto& [d, n] : ay.graded_dims())
            gd[std::to_string(d)] = n;
        doc["graded_dims"] = gd;
        if (opt.command == "ayoneda-assoc") {
            auto rep = check_associativity(ay);
            doc["admissible"] = is_admissible(phi).admissible;
            doc["associative"] = rep.associative;
            if (!rep.associative)
                doc["witness_degrees"] =
                    ordered_json::array({rep.witness_degrees[0], rep.witness_degrees[1],
                                         rep.witness_degrees[2]});
            return emit(opt, doc, rep.associative);
        }
        doc["invariants"] = invariant_json(invariant_report(*ay.alg));
        return emit(opt, doc, true);
    }
    if (opt.command == "ayoneda-verify") {
        auto x = module_from_spec(L, opt.module_spec);
        auto phi = parse_phi(opt.phi, opt.set_cap);
        size_t cap =
            (size_t)(opt.cap_degree >= 0 ? (uint64_t)opt.cap_degree : phi.max() + 1);
        auto rep = verify_shift_instance(L.a, x, phi, cap, opt.seed);
        doc["phi"] = phi.str();
        doc["trivial"] = rep.trivial;
        if (!rep.trivial) {
            doc["tilting_verdict"] = rep.tilting.verdict;
            doc["self_orthogonal"] = rep.tilting.self_orthogonal;
            doc["k0_rank"] = rep.tilting.k0_rank;
            doc["end_dim"] = rep.end_dim;
            doc["ay_dim"] = rep.ay_dim;
            doc["fingerprint_end"] = invariant_json(rep.fp_end);
            doc["fingerprint_ay_M"] = invariant_json(rep.fp_m);
            doc["fingerprint_ay_N"] = invariant_json(rep.fp_n);
            doc["fingerprints_consistent"] = rep.fingerprints_consistent;
        }
        doc["verdict"] = rep.verdict;
        return emit(opt, doc, rep.verdict);
    }

    if (opt.command == "tilt-idem") {
        auto eset = parse_vertex_list(opt.eset, L.a->idem.size());
        auto tilt = idempotent_tilting(L.a, eset, opt.seed);
        ordered_json arr = ordered_json::array();
        for (int d = tilt.t.lo; d <= tilt.t.hi(); ++d) {
            ordered_json t;
            t["degree"] = d;
            ordered_json parts = ordered_json::array();
            for (int p : tilt.t.term(d)->parts)
                parts.push_back("P" + std::to_string(p + 1));
            t["summands"] = parts;
            arr.push_back(t);
        }
        doc["complex"] = arr;
        auto trep = tilting_report(tilt.t, Generation::ByConstruction, opt.seed);
        doc["tilting_verdict"] = trep.verdict;
        auto e = end_algebra_of_complex(tilt.t, opt.seed);
        doc["end_dim"] = e.alg->dim;
        doc["end_invariants"] = invariant_json(invariant_report(*e.alg));
        return emit(opt, doc, trep.verdict);
    }
    if (opt.command == "quot-check42" || opt.command == "quot-socle" ||
        opt.command == "quot-nabla") {
        if (opt.command == "quot-nabla") {
            auto eset = parse_vertex_list(opt.eset, L.a->idem.size());
            auto rep = nabla_quotient_pair(L.a, eset, opt.seed);
            doc["conditions"] = rep.t42.conditions;
            doc["dim_A_quotient"] = rep.t42.qd.qa.alg->dim;
            doc["dim_B"] = rep.t42.b->dim;
            doc["dim_J"] = rep.t42.j.dim();
            doc["dim_B_quotient"] = rep.t42.bbar->dim;
            doc["J_equals_nabla_etilde"] = rep.j_equals_nabla_etilde;
            doc["A_quotient"] = invariant_json(invariant_report(*rep.t42.qd.qa.alg));
            doc["B_quotient"] = invariant_json(invariant_report(*rep.t42.bbar));
            auto cmp = compare_reports(invariant_report(*rep.t42.qd.qa.alg),
                                       invariant_report(*rep.t42.bbar));
            doc["fingerprints_consistent"] = cmp.consistent;
            doc["verdict"] = rep.verdict;
            return emit(opt, doc, rep.verdict);
        }
        auto eset = parse_vertex_list(opt.eset, L.a->idem.size());
        auto tilt = idempotent_tilting(L.a, eset, opt.seed);
        if (opt.command == "quot-socle") {
            auto pset = parse_vertex_list(opt.pset, L.a->idem.size());
            auto rep = socle_quotient_pair(L.a, tilt.t, pset, opt.seed);
            doc["conditions"] = rep.t42.conditions;
            doc["dim_A_quotient"] = rep.t42.qd.qa.alg->dim;
            doc["dim_B_quotient"] = rep.t42.bbar->dim;
            doc["J_equals_socle"] = rep.j_equals_socle;
            doc["A_quotient"] = invariant_json(invariant_report(*rep.t42.qd.qa.alg));
            doc["B_quotient"] = invariant_json(invariant_report(*rep.t42.bbar));
            doc["verdict"] = rep.verdict;
            return emit(opt, doc, rep.verdict);
        }
        /* check42 with an explicit ideal */
        AlgebraIdeal<K> ideal;
        if (!opt.ideal_soc.empty())
            ideal = socle_ideal(L.a, parse_vertex_list(opt.ideal_soc, L.a->idem.size()));
        else if (!opt.ideal_nabla.empty())
            ideal = nabla_ideal(L.a, parse_vertex_list(opt.ideal_nabla, L.a->idem.size()));
        else
            throw AytError("quot check42: give --soc or --nabla for the ideal");
        auto rep = quotient_criterion_check(L.a, tilt.t, ideal, opt.seed);
        doc["hom_T_IT_vanishes"] = rep.hom_t_it_vanishes;
        if (!rep.hom_t_it_vanishes)
            doc["failing_shift"] = rep.failing_shift;
        doc["hom_Tbar_minus1_vanishes"] = rep.hom_tbar_minus1_vanishes;
        doc["conditions"] = rep.conditions;
        doc["dim_B"] = rep.b->dim;
        doc["dim_J"] = rep.j.dim();
        doc["dim_End_Tbar"] = rep.end_tbar->dim;
        doc["dim_matches"] = rep.dim_matches;
        doc["fingerprints_consistent"] = rep.fingerprints.consistent;
        doc["verdict"] = rep.verdict;
        return emit(opt, doc, rep.verdict);
    }

    if (opt.command == "invariants-compare") {
        auto L2 = load_algebra<K>(opt, opt.algebra_file2);
        auto r1 = invariant_report(*L.pa.alg);
        auto r2 = invariant_report(*L2.pa.alg);
        doc["first"] = invariant_json(r1);
        doc["second"] = invariant_json(r2);
        auto cmp = compare_reports(r1, r2);
        doc["simples_equal"] = cmp.simples_equal;
        doc["cartan_snf_equal"] = cmp.snf_equal;
        doc["consistent"] = cmp.consistent;
        return emit(opt, doc, cmp.consistent);
    }

    throw AytError("unknown command: " + opt.command);
}

int run(const Options& opt)
{
    bool rational = opt.field_override == "rational";
    if (!rational && opt.field_override.empty() && !opt.algebra_file.empty()) {
        /* peek at the file's field */
        auto f = parse_algebra_file(opt.algebra_file);
        rational = f.pres.field.rational;
    }
    if (rational)
        return run_typed<Rat>(opt);
    return run_typed<Fp>(opt);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations with quiver algebras, tilting complexes and "
                 "Auslander-Yoneda algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* c, bool needs_algebra) {
        c->add_flag("--json", opt.json, "machine-readable output");
        c->add_option("--seed", opt.seed, "seed for the randomized kernels");
        c->add_option("--field", opt.field_override, "override: p=<prime> or rational");
        c->add_option("--cap-path", opt.cap_path, "path-length cap override");
        c->add_option("--cap-resolution", opt.cap_resolution, "resolution cap");
        c->add_option("--cap-degree", opt.cap_degree, "degree cap");
        if (needs_algebra)
            c->add_option("--algebra", opt.algebra_file, "algebra file")->required();
    };

    auto adm = app.add_subcommand("admissible", "admissible subsets of N");
    auto adm_check = adm->add_subcommand("check", "test a set");
    adm_check->add_option("set", opt.set1, "comma-separated naturals")->required();
    add_common(adm_check, false);
    auto adm_family = adm->add_subcommand("family", "the family Phi(n,m)");
    adm_family->add_option("--n", opt.family_n)->required();
    adm_family->add_option("--m", opt.family_m, "-1 for infinity");
    adm_family->add_option("--cap", opt.set_cap);
    add_common(adm_family, false);
    auto adm_ops = adm->add_subcommand("ops", "scale/intersect/power");
    adm_ops->add_option("--op", opt.op, "scale|intersect|power")->required();
    adm_ops->add_option("--s1", opt.set1)->required();
    adm_ops->add_option("--s2", opt.set2);
    adm_ops->add_option("--m", opt.scale_m);
    add_common(adm_ops, false);

    auto alg = app.add_subcommand("algebra", "finite-dimensional algebras");
    auto alg_info = alg->add_subcommand("info", "dimensions and invariants");
    add_common(alg_info, true);
    auto alg_present = alg->add_subcommand("present", "quiver-with-relations presentation");
    add_common(alg_present, true);
    auto alg_quot = alg->add_subcommand("quotient", "quotient by a named ideal");
    alg_quot->add_option("--soc", opt.ideal_soc, "socle ideal of these projectives");
    alg_quot->add_option("--nabla", opt.ideal_nabla, "nabla ideal of these idempotents");
    add_common(alg_quot, true);
    auto alg_gldim = alg->add_subcommand("gldim", "global dimension up to a cap");
    add_common(alg_gldim, true);

    auto mod = app.add_subcommand("module", "module-category operations");
    for (auto name : {"hom", "socle", "syzygy", "decompose", "nustable"}) {
        auto c = mod->add_subcommand(name, name);
        add_common(c, true);
        c->add_option("--module", opt.module_spec, "module spec");
        if (std::string(name) == "hom")
            c->add_option("--module2", opt.module_spec2, "second module");
    }

    auto cpx = app.add_subcommand("complex", "homotopy-category operations");
    for (auto name : {"normalize", "homk", "end", "tilt-report"}) {
        auto c = cpx->add_subcommand(name, name);
        add_common(c, true);
        c->add_option("--complex", opt.complex_name, "complex name")->required();
        if (std::string(name) == "homk") {
            c->add_option("--complex2", opt.complex_name2, "second complex");
            c->add_option("--shift", opt.shift, "shift n");
        }
    }

    auto ext = app.add_subcommand("ext", "Ext groups and Yoneda products");
    auto ext_table = ext->add_subcommand("table", "dims of Ext^i(M,N)");
    add_common(ext_table, true);
    ext_table->add_option("--module", opt.module_spec);
    ext_table->add_option("--module2", opt.module_spec2);
    auto ext_prod = ext->add_subcommand("product", "Yoneda product of two classes");
    add_common(ext_prod, true);
    ext_prod->add_option("--module", opt.module_spec);
    ext_prod->add_option("--deg1", opt.deg1);
    ext_prod->add_option("--idx1", opt.idx1);
    ext_prod->add_option("--deg2", opt.deg2);
    ext_prod->add_option("--idx2", opt.idx2);
    auto ext_tr = ext->add_subcommand("transport", "syzygy transport of a class");
    add_common(ext_tr, true);
    ext_tr->add_option("--module", opt.module_spec);
    ext_tr->add_option("--deg", opt.deg1);
    ext_tr->add_option("--idx", opt.idx1);

    auto ay = app.add_subcommand("ayoneda", "Phi-Auslander-Yoneda algebras");
    for (auto name : {"build", "assoc", "verify"}) {
        auto c = ay->add_subcommand(name, name);
        add_common(c, true);
        c->add_option("--module", opt.module_spec);
        c->add_option("--phi", opt.phi, "comma-separated degree set")->required();
        c->add_option("--phi-cap", opt.set_cap, "cap marker for truncated families");
    }

    auto tilt = app.add_subcommand("tilt", "tilting complexes");
    auto tilt_idem = tilt->add_subcommand("idem", "idempotent tilting complex");
    add_common(tilt_idem, true);
    tilt_idem->add_option("--e", opt.eset, "idempotent indices")->required();

    auto quot = app.add_subcommand("quot", "derived equivalences for quotients");
    auto q42 = quot->add_subcommand("check42", "both conditions of the quotient criterion");
    add_common(q42, true);
    q42->add_option("--e", opt.eset, "idempotents of the tilting complex")->required();
    q42->add_option("--soc", opt.ideal_soc);
    q42->add_option("--nabla", opt.ideal_nabla);
    auto qsoc = quot->add_subcommand("socle", "socle quotient pair");
    add_common(qsoc, true);
    qsoc->add_option("--e", opt.eset, "idempotents of the tilting complex")->required();
    qsoc->add_option("--p", opt.pset, "projectives whose socle is factored out")->required();
    auto qnab = quot->add_subcommand("nabla", "annihilator quotient pair");
    add_common(qnab, true);
    qnab->add_option("--e", opt.eset, "idempotent indices")->required();

    auto inv = app.add_subcommand("invariants", "derived-invariant fingerprints");
    auto inv_cmp = inv->add_subcommand("compare", "compare two algebras");
    add_common(inv_cmp, true);
    inv_cmp->add_option("--algebra2", opt.algebra_file2, "second algebra file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; /* bad arguments are input errors */
    }

    for (auto* sub : app.get_subcommands()) {
        std::string base = sub->get_name();
        for (auto* ss : sub->get_subcommands())
            opt.command = base + "-" + ss->get_name();
    }

    try {
        return run(opt);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const AytError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
