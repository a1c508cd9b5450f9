#include "monogen/report_json.hpp"

namespace monogen {

namespace {

Json point_json(const LatticePoint& pt)
{
    return Json::array({pt.i, pt.v});
}

Json triple_json(const Triple& t)
{
    return Json::array({t[0].get_str(), t[1].get_str(), t[2].get_str()});
}

Json mod_factors_json(const std::vector<ModFactor>& factors)
{
    Json arr = Json::array();
    for (const auto& fac : factors)
        arr.push_back({{"factor", fac.factor.to_string()}, {"multiplicity", fac.multiplicity}});
    return arr;
}

Json optional_string(const std::optional<std::string>& s)
{
    return s ? Json(*s) : Json(nullptr);
}

Json integers_json(const std::vector<Integer>& xs)
{
    Json arr = Json::array();
    for (const auto& x : xs)
        arr.push_back(x.get_str());
    return arr;
}

Json header(const char* schema, const IntPoly& f)
{
    return {{"schema", schema}, {"polynomial", f.to_string()}, {"coefficients", to_json(f)}};
}

} // namespace

Json to_json(const Integer& n)
{
    return n.get_str();
}

Json to_json(const IntPoly& f)
{
    Json arr = Json::array();
    for (long i = 0; i <= f.degree(); ++i)
        arr.push_back(f[static_cast<std::size_t>(i)].get_str());
    return arr;
}

Json to_json(const Factorization& fac)
{
    Json factors = Json::array();
    for (const auto& pp : fac.factors)
        factors.push_back({{"p", pp.prime.get_str()}, {"e", pp.exponent}});
    return {{"value", fac.value.get_str()},
            {"factors", std::move(factors)},
            {"cofactor", fac.cofactor.get_str()},
            {"complete", fac.complete()}};
}

Json to_json(const IndexValuation& v)
{
    return {{"kind", v.exact() ? "Exact" : "LowerBound"}, {"value", v.value}};
}

Json analyze_json(const MonogenityReport& r)
{
    Json out = header(kAnalyzeSchema, r.f);
    out["degree"] = r.f.degree();
    out["discriminant"] = r.disc.get_str();
    out["discriminant_factorization"] = to_json(r.disc_factors);
    out["irreducibility"] = {{"status", r.irreducibility.status == Irreducibility::Certified ? "Certified" : "Attested"},
                             {"evidence", r.irreducibility.evidence}};
    Json ledger = Json::array();
    for (const auto& row : r.ledger) {
        ledger.push_back({{"p", row.p.get_str()},
                          {"disc_exponent", row.disc_exponent},
                          {"method", to_string(row.method)},
                          {"nu_index", to_json(row.nu_index)},
                          {"splitting", optional_string(row.splitting ? std::optional(row.splitting->to_string())
                                                                      : std::nullopt)},
                          {"dedekind_witness",
                           optional_string(row.dedekind_witness ? std::optional(row.dedekind_witness->to_string())
                                                                : std::nullopt)}});
    }
    out["ledger"] = std::move(ledger);
    out["verdict"] = to_string(r.verdict);
    out["witnesses"] = integers_json(r.witnesses);
    out["index"] = r.index ? Json(r.index->get_str()) : Json(nullptr);
    out["field_discriminant"] = {{"exact", r.field_disc.exact},
                                 {"value", r.field_disc.exact ? Json(r.field_disc.value.get_str()) : Json(nullptr)},
                                 {"unresolved", integers_json(r.field_disc.unresolved)}};
    out["common_index_divisors"] = integers_json(r.common_index_divisors);
    out["reasons"] = r.reasons;
    out["unresolved"] = integers_json(r.unresolved);
    out["notes"] = r.notes;
    return out;
}

Json dedekind_json(const IntPoly& f, const std::vector<DedekindResult>& results)
{
    Json out = header(kDedekindSchema, f);
    Json arr = Json::array();
    for (const auto& res : results) {
        arr.push_back({{"p", res.p.get_str()},
                       {"factors", mod_factors_json(res.factors)},
                       {"m", res.m.to_string()},
                       {"divides_index", res.divides_index},
                       {"witness", optional_string(res.witness ? std::optional(res.witness->to_string())
                                                               : std::nullopt)},
                       {"splitting", optional_string(res.splitting ? std::optional(res.splitting->to_string())
                                                                   : std::nullopt)}});
    }
    out["results"] = std::move(arr);
    return out;
}

Json polygon_json(const IntPoly& f, const OreAnalysis& analysis, const std::vector<std::size_t>& selected)
{
    Json out = header(kPolygonSchema, f);
    out["p"] = analysis.p.get_str();
    Json phis = Json::array();
    for (std::size_t idx : selected) {
        const PhiReport& rep = analysis.phis.at(idx);
        const ModPoly phi_bar = reduce_mod(rep.phi, checked_prime(analysis.p));
        Json points = Json::array();
        for (const auto& pt : rep.polygon.points)
            points.push_back(point_json(pt));
        Json vertices = Json::array();
        for (const auto& pt : rep.polygon.vertices())
            vertices.push_back(point_json(pt));
        Json sides = Json::array();
        for (const auto& s : rep.polygon.sides)
            sides.push_back({{"start", point_json(s.start)},
                             {"end", point_json(s.end)},
                             {"slope", s.slope_string()},
                             {"length", s.length},
                             {"height", s.height},
                             {"degree", s.degree}});
        Json residuals = Json::array();
        const ExtensionField field(phi_bar.p, phi_bar.coeffs);
        for (std::size_t k = 0; k < rep.residuals.size(); ++k) {
            const auto& ra = rep.residuals[k];
            Json factors = Json::array();
            for (const auto& fac : ra.factors)
                factors.push_back({{"factor", ff::to_string(field, fac.factor, 'y')},
                                   {"multiplicity", fac.multiplicity}});
            residuals.push_back({{"side", k},
                                 {"polynomial", ra.residual.to_string()},
                                 {"factors", std::move(factors)},
                                 {"squarefree", ra.squarefree}});
        }
        phis.push_back({{"phi", phi_bar.to_string()},
                        {"multiplicity", rep.multiplicity},
                        {"points", std::move(points)},
                        {"vertices", std::move(vertices)},
                        {"sides", std::move(sides)},
                        {"residuals", std::move(residuals)},
                        {"phi_index", rep.phi_index},
                        {"regular", rep.regular}});
    }
    out["phis"] = std::move(phis);
    out["nu_index"] = to_json(analysis.verdict);
    out["splitting"] = analysis.regular() ? Json(ore_factorization(analysis).to_string()) : Json(nullptr);
    return out;
}

Json quartic_json(const GeneratorSearch& s, const std::optional<Integer>& disc_k, const std::vector<OracleCheck>& checks)
{
    Json out = header(kQuarticSchema, s.setup.f);
    out["m"] = s.setup.m.get_str();
    out["d"] = s.setup.d.get_str();
    out["n_xi"] = s.setup.n_xi.get_str();
    out["i_m"] = s.setup.i_m.get_str();
    out["bounds"] = {{"thue", s.bounds.thue}, {"pq", s.bounds.pq}, {"xyz", s.bounds.xyz}, {"q0", s.bounds.q0}};
    out["F"] = s.cubic.to_string('u', 'v');
    out["F_irreducible"] = to_string(s.cubic_irreducible);
    out["Q1"] = s.q1.to_string();
    out["Q2"] = s.q2.to_string();
    Json uv = Json::array();
    for (const auto& [u, v] : s.cubic_solutions)
        uv.push_back(Json::array({u.get_str(), v.get_str()}));
    out["cubic_solutions"] = std::move(uv);

    Json branches = Json::array();
    for (const auto& br : s.branches) {
        Json b;
        b["u"] = br.u.get_str();
        b["v"] = br.v.get_str();
        b["Q0"] = br.q0.to_string();
        b["base"] = br.base ? triple_json(*br.base) : Json(nullptr);
        b["method"] = br.method == BranchReport::Method::Parametrized ? "Parametrized" : "DirectFallback";
        b["note"] = br.note;
        if (br.param) {
            const auto& par = *br.param;
            Json c = Json::array();
            for (const auto& ci : par.c)
                c.push_back(ci.get_str());
            Json matrix = Json::array();
            for (const auto& row : par.matrix)
                matrix.push_back(Json::array({row[0].get_str(), row[1].get_str(), row[2].get_str()}));
            b["parametrization"] = {{"c", std::move(c)},
                                    {"matrix", std::move(matrix)},
                                    {"d0", par.d0.get_str()},
                                    {"det", par.det.get_str()},
                                    {"k_divisors", integers_json(par.k_divisors)}};
        } else {
            b["parametrization"] = nullptr;
        }
        if (br.thue) {
            const auto& t = *br.thue;
            b["thue"] = {{"F1", t.f1.to_string('p', 'q')},
                         {"rhs1", t.rhs1.get_str()},
                         {"F1_irreducible", to_string(t.f1_irreducible)},
                         {"F2", t.f2.to_string('p', 'q')},
                         {"rhs2", t.rhs2.get_str()},
                         {"F2_irreducible", to_string(t.f2_irreducible)}};
        } else {
            b["thue"] = nullptr;
        }
        Json sols = Json::array();
        for (const auto& t : br.solutions)
            sols.push_back(triple_json(t));
        b["solutions"] = std::move(sols);
        branches.push_back(std::move(b));
    }
    out["branches"] = std::move(branches);
    out["field_discriminant"] = disc_k ? Json(disc_k->get_str()) : Json(nullptr);

    Json sols = Json::array();
    for (std::size_t i = 0; i < s.solutions.size(); ++i) {
        const auto& sol = s.solutions[i];
        Json j;
        j["xyz"] = triple_json(sol.xyz);
        j["u"] = sol.u.get_str();
        j["v"] = sol.v.get_str();
        const OracleCheck* chk = i < checks.size() ? &checks[i] : nullptr;
        if (chk && chk->index) {
            j["oracle_index"] = chk->index->get_str();
            j["oracle_ok"] = *chk->index == s.setup.m;
        } else {
            j["oracle_index"] = nullptr;
            j["oracle_ok"] = nullptr;
        }
        if (chk && !chk->error.empty())
            j["oracle_error"] = chk->error;
        sols.push_back(std::move(j));
    }
    out["solutions"] = std::move(sols);
    return out;
}

Json corpus_json(const std::string& family, const std::vector<CorpusRow>& rows)
{
    Json out{{"schema", kCorpusSchema}, {"family", family}};
    Json arr = Json::array();
    std::size_t mismatches = 0;
    for (const auto& row : rows) {
        if (!row.agrees)
            ++mismatches;
        Json j{{"label", row.label},
               {"polynomial", row.f.to_string()},
               {"verdict", row.verdict ? Json(to_string(*row.verdict)) : Json(nullptr)}};
        if (!row.error.empty())
            j["error"] = row.error;
        j["oracle"] = {{"verdict", to_string(row.oracle.verdict)},
                       {"field_level", row.oracle.field_level},
                       {"reason", row.oracle.reason}};
        j["agrees"] = row.agrees;
        arr.push_back(std::move(j));
    }
    out["instances"] = std::move(arr);
    out["total"] = rows.size();
    out["mismatches"] = mismatches;
    return out;
}

} // namespace monogen
