#include "monogen/cli.hpp"

#include "monogen/arith.hpp"
#include "monogen/dedekind.hpp"
#include "monogen/family.hpp"
#include "monogen/monogenity.hpp"
#include "monogen/newton.hpp"
#include "monogen/polynomial.hpp"
#include "monogen/quartic.hpp"
#include "monogen/report_json.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace monogen {

namespace {

struct GlobalOptions {
    bool json = false;
    std::int64_t bound = 0;
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t seed = 1;

    AnalysisConfig analysis() const
    {
        AnalysisConfig c;
        c.factor.trial_limit = trial_limit;
        c.factor.seed = seed;
        c.seed = seed;
        return c;
    }
};

Integer parse_integer(const std::string& text, const char* what)
{
    Integer n;
    if (text.empty() || n.set_str(text, 10) != 0)
        throw InputError(std::string("invalid ") + what + ": '" + text + "'");
    return n;
}

std::int64_t parse_i64(std::string_view text)
{
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw InputError("invalid integer '" + std::string(text) + "'");
    return v;
}

std::string factorization_string(const Factorization& fac)
{
    std::string out = fac.value < 0 ? "-1" : "";
    for (const auto& pp : fac.factors) {
        if (!out.empty())
            out += " * ";
        out += pp.prime.get_str();
        if (pp.exponent > 1)
            out += "^" + std::to_string(pp.exponent);
    }
    if (!fac.complete())
        out += (out.empty() ? "" : " * ") + std::string("[") + fac.cofactor.get_str() + "]";
    return out.empty() ? "1" : out;
}

void print_json(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

// Rows from the top valuation down; '*' vertex, '+' on a side, 'o' above.
std::string polygon_sketch(const NewtonPolygon& poly)
{
    std::int64_t max_i = 0, max_v = 0;
    for (const auto& pt : poly.points) {
        max_i = std::max(max_i, pt.i);
        max_v = std::max(max_v, pt.v);
    }
    if (max_i > 60 || max_v > 40)
        return "  (too large to sketch)\n";
    const auto vertices = poly.vertices();
    auto on_side = [&](const LatticePoint& pt) {
        for (const auto& s : poly.sides) {
            if (pt.i < s.start.i || pt.i > s.end.i)
                continue;
            // (v - start.v) * length == -(i - start.i) * height
            if ((pt.v - s.start.v) * s.length == -(pt.i - s.start.i) * s.height)
                return true;
        }
        return false;
    };
    std::ostringstream os;
    for (std::int64_t v = max_v; v >= 0; --v) {
        os << std::setw(4) << v << " |";
        for (std::int64_t i = 0; i <= max_i; ++i) {
            const LatticePoint pt{i, v};
            char ch = '.';
            if (std::find(poly.points.begin(), poly.points.end(), pt) != poly.points.end())
                ch = 'o';
            if (std::find(vertices.begin(), vertices.end(), pt) != vertices.end())
                ch = '*';
            else if (ch == 'o' && on_side(pt))
                ch = '+';
            os << ' ' << ch;
        }
        os << '\n';
    }
    os << "     +" << std::string(static_cast<std::size_t>(2 * (max_i + 1)), '-') << '\n' << "      ";
    for (std::int64_t i = 0; i <= max_i; ++i)
        os << ' ' << (i % 10);
    os << '\n';
    return os.str();
}

int cmd_analyze(const GlobalOptions& g, const std::string& text, std::ostream& out)
{
    const IntPoly f = parse_poly(text);
    const MonogenityReport r = analyze(f, g.analysis());
    if (g.json) {
        print_json(out, analyze_json(r));
    } else {
        out << "f(x) = " << f.to_string() << '\n';
        out << "D(f) = " << r.disc.get_str() << " = " << factorization_string(r.disc_factors) << '\n';
        out << "irreducibility: " << (r.irreducibility.status == Irreducibility::Certified ? "certified" : "attested")
            << " (" << r.irreducibility.evidence << ")\n";
        for (const auto& row : r.ledger) {
            out << "  p = " << row.p.get_str() << "  v_p(D) = " << row.disc_exponent << "  " << to_string(row.method)
                << "  nu_p(ind) = " << row.nu_index.to_string();
            if (row.splitting)
                out << "  splitting " << row.splitting->to_string();
            if (row.dedekind_witness)
                out << "  witness " << row.dedekind_witness->to_string();
            out << '\n';
        }
        out << "verdict: " << to_string(r.verdict) << '\n';
        if (r.index)
            out << "ind(f) = " << r.index->get_str() << '\n';
        if (r.field_disc.exact)
            out << "D_K = " << r.field_disc.value.get_str() << '\n';
        for (const auto& p : r.common_index_divisors)
            out << "common index divisor: " << p.get_str() << " (no monogenic generator exists)\n";
        for (const auto& reason : r.reasons)
            out << "inconclusive: " << reason << '\n';
        for (const auto& note : r.notes)
            out << "note: " << note << '\n';
    }
    return r.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitDefinite;
}

int cmd_dedekind(const GlobalOptions& g, const std::string& text, const std::string& p_text, std::ostream& out)
{
    const IntPoly f = parse_poly(text);
    if (!f.is_monic() || f.degree() < 1)
        throw InputError("dedekind: polynomial must be monic of positive degree");
    std::vector<Integer> primes;
    if (!p_text.empty()) {
        const Integer p = parse_integer(p_text, "prime");
        checked_prime(p);
        primes.push_back(p);
    } else {
        const Integer disc = discriminant(f);
        if (disc == 0)
            throw InputError("dedekind: f has a repeated root");
        const Factorization fac = factorize(disc, g.analysis().factor);
        for (const auto& pp : fac.factors)
            primes.push_back(pp.prime);
    }
    std::vector<DedekindResult> results;
    for (const auto& p : primes)
        results.push_back(dedekind_test(f, p, g.seed));
    if (g.json) {
        print_json(out, dedekind_json(f, results));
        return kExitDefinite;
    }
    out << "f(x) = " << f.to_string() << '\n';
    for (const auto& res : results) {
        out << "p = " << res.p.get_str() << ": f mod p =";
        for (const auto& fac : res.factors) {
            out << " (" << fac.factor.to_string() << ")";
            if (fac.multiplicity > 1)
                out << '^' << fac.multiplicity;
        }
        out << "\n  M = " << res.m.to_string() << '\n';
        if (res.divides_index)
            out << "  p divides ind(f); witness " << res.witness->to_string() << '\n';
        else
            out << "  p does not divide ind(f); splitting " << res.splitting->to_string() << '\n';
    }
    return kExitDefinite;
}

int cmd_polygon(const GlobalOptions& g, const std::string& text, const std::string& p_text,
                const std::string& phi_text, std::ostream& out)
{
    const IntPoly f = parse_poly(text);
    if (!f.is_monic() || f.degree() < 1)
        throw InputError("polygon: polynomial must be monic of positive degree");
    const Integer p = parse_integer(p_text, "prime");
    const std::uint64_t pw = checked_prime(p);
    const OreAnalysis analysis = ore_analysis(f, p, g.seed);

    std::vector<std::size_t> selected;
    if (!phi_text.empty()) {
        const IntPoly phi = parse_poly(phi_text);
        if (!phi.is_monic() || phi.degree() < 1)
            throw InputError("polygon: phi must be monic of positive degree");
        const ModPoly phi_bar = reduce_mod(phi, pw);
        if (!is_irreducible_mod_p(phi_bar))
            throw InputError("polygon: phi = " + phi.to_string() + " is reducible mod " + p.get_str());
        for (std::size_t i = 0; i < analysis.phis.size(); ++i)
            if (reduce_mod(analysis.phis[i].phi, pw) == phi_bar)
                selected.push_back(i);
        if (selected.empty())
            throw InputError("polygon: phi does not divide f mod " + p.get_str());
    } else {
        for (std::size_t i = 0; i < analysis.phis.size(); ++i)
            selected.push_back(i);
    }
    const int code = analysis.regular() ? kExitDefinite : kExitInconclusive;
    if (g.json) {
        print_json(out, polygon_json(f, analysis, selected));
        return code;
    }
    out << "f(x) = " << f.to_string() << ", p = " << p.get_str() << '\n';
    for (std::size_t idx : selected) {
        const PhiReport& rep = analysis.phis[idx];
        const ModPoly phi_bar = reduce_mod(rep.phi, pw);
        out << "phi = " << phi_bar.to_string() << " (multiplicity " << rep.multiplicity << ")\n";
        out << "  vertices:";
        for (const auto& v : rep.polygon.vertices())
            out << " (" << v.i << "," << v.v << ")";
        out << '\n';
        for (std::size_t k = 0; k < rep.polygon.sides.size(); ++k) {
            const auto& s = rep.polygon.sides[k];
            const auto& ra = rep.residuals[k];
            out << "  side (" << s.start.i << "," << s.start.v << ")-(" << s.end.i << "," << s.end.v
                << ") slope " << s.slope_string() << " degree " << s.degree << ": residual "
                << ra.residual.to_string() << (ra.squarefree ? " (squarefree)" : " (not squarefree)") << '\n';
        }
        out << polygon_sketch(rep.polygon);
        out << "  ind_phi = " << rep.phi_index << (rep.regular ? "" : " (not regular)") << '\n';
    }
    out << "nu_p(ind) = " << analysis.verdict.to_string() << '\n';
    if (analysis.regular())
        out << "splitting " << ore_factorization(analysis).to_string() << '\n';
    return code;
}

struct QuarticOptions {
    std::string m = "1";
    std::string d = "1";
    std::string n_xi;
    std::int64_t thue = 0;
    std::int64_t pq = 0;
    std::int64_t xyz = 0;
    std::int64_t q0 = 0;
    unsigned threads = 0;
};

int cmd_quartic(const GlobalOptions& g, const std::string& text, const QuarticOptions& q, std::ostream& out)
{
    const IntPoly f = parse_poly(text);
    if (f.degree() != 4 || !f.is_monic())
        throw InputError("quartic: polynomial must be a monic quartic");
    const MonogenityReport report = analyze(f, g.analysis());
    Integer n_xi;
    if (!q.n_xi.empty())
        n_xi = parse_integer(q.n_xi, "n_xi");
    else if (report.index)
        n_xi = *report.index;
    else
        throw InputError("quartic: ind(f) is not resolved; pass --n-xi");
    const QuarticSetup setup =
        QuarticSetup::make(f, parse_integer(q.m, "m"), parse_integer(q.d, "d"), n_xi);

    SearchBounds bounds;
    if (g.bound > 0)
        bounds.thue = bounds.pq = bounds.xyz = bounds.q0 = g.bound;
    if (q.thue > 0)
        bounds.thue = q.thue;
    if (q.pq > 0)
        bounds.pq = q.pq;
    if (q.xyz > 0)
        bounds.xyz = q.xyz;
    if (q.q0 > 0)
        bounds.q0 = q.q0;
    bounds.threads = q.threads;
    const GeneratorSearch search = find_generators(setup, bounds);

    std::optional<Integer> disc_k;
    if (report.field_disc.exact)
        disc_k = report.field_disc.value;
    std::vector<OracleCheck> checks;
    bool all_ok = disc_k.has_value();
    for (const auto& sol : search.solutions) {
        OracleCheck chk{sol.xyz, std::nullopt, {}};
        if (disc_k) {
            try {
                chk.index = index_of_element(f, sol.xyz, setup.d, *disc_k);
            } catch (const DomainError& e) {
                chk.error = e.what();
            }
        }
        all_ok = all_ok && chk.index && *chk.index == setup.m;
        checks.push_back(std::move(chk));
    }

    if (g.json) {
        print_json(out, quartic_json(search, disc_k, checks));
    } else {
        out << "f(x) = " << f.to_string() << ", m = " << setup.m.get_str() << ", d = " << setup.d.get_str()
            << ", n_xi = " << setup.n_xi.get_str() << ", i_m = " << setup.i_m.get_str() << '\n';
        out << "F(u,v) = " << search.cubic.to_string() << " (" << to_string(search.cubic_irreducible) << ")\n";
        out << "Q1 = " << search.q1.to_string() << "\nQ2 = " << search.q2.to_string() << '\n';
        for (const auto& br : search.branches) {
            out << "(u,v) = (" << br.u.get_str() << "," << br.v.get_str() << "): Q0 = " << br.q0.to_string();
            if (br.base)
                out << ", base " << to_string(*br.base);
            out << ", "
                << (br.method == BranchReport::Method::Parametrized ? "parametrized" : "direct search");
            if (!br.note.empty())
                out << " (" << br.note << ")";
            out << '\n';
            if (br.thue)
                out << "  F1(p,q) = " << br.thue->f1.to_string('p', 'q') << "\n  F2(p,q) = "
                    << br.thue->f2.to_string('p', 'q') << '\n';
            for (const auto& t : br.solutions)
                out << "  " << to_string(t) << '\n';
        }
        out << search.solutions.size() << " generator(s) up to equivalence:\n";
        for (std::size_t i = 0; i < search.solutions.size(); ++i) {
            out << "  " << to_string(search.solutions[i].xyz);
            if (checks[i].index)
                out << "  I(alpha) = " << checks[i].index->get_str();
            else if (!checks[i].error.empty())
                out << "  oracle error: " << checks[i].error;
            out << '\n';
        }
    }
    // An empty bounded search proves nothing.
    return all_ok && !search.solutions.empty() ? kExitDefinite : kExitInconclusive;
}

std::vector<FamilyInstance> corpus_instances(const std::string& family, const std::string& n_text,
                                             const std::string& m_text, const std::string& a_text,
                                             const std::string& b_text)
{
    auto range = [](const std::string& text, const char* fallback) {
        return parse_range(text.empty() ? fallback : text);
    };
    std::vector<FamilyInstance> out;
    if (family == "xn-x-1") {
        const IntRange n = range(n_text, "2..9");
        if (n.lo < 2 || n.hi > 64)
            throw InputError("corpus xn-x-1: n must lie in 2..64");
        for (std::int64_t k = n.lo; k <= n.hi; ++k)
            out.push_back(XnMinusXMinusOneFamily{static_cast<unsigned>(k)});
    } else if (family == "binomial12") {
        const IntRange m = range(m_text, "-50..50");
        for (std::int64_t k = m.lo; k <= m.hi; ++k)
            out.push_back(BinomialFamily{12, from_i64(k)});
    } else if (family == "jones-white") {
        const IntRange n = range(n_text, "2..6");
        const IntRange m = range(m_text, "1..5");
        const IntRange a = range(a_text, "1..6");
        const IntRange b = range(b_text, "1..6");
        if (n.lo < 2 || n.hi > 64 || m.lo < 1)
            throw InputError("corpus jones-white: need 2 <= n <= 64 and m >= 1");
        for (std::int64_t nn = n.lo; nn <= n.hi; ++nn)
            for (std::int64_t mm = m.lo; mm <= std::min(m.hi, nn - 1); ++mm) {
                if (nn % mm != 0)
                    continue;
                for (std::int64_t aa = a.lo; aa <= a.hi; ++aa)
                    for (std::int64_t bb = b.lo; bb <= b.hi; ++bb)
                        out.push_back(JonesWhiteFamily{static_cast<unsigned>(nn), static_cast<unsigned>(mm),
                                                       from_i64(aa), from_i64(bb)});
            }
    } else {
        throw InputError("corpus: unknown family '" + family + "' (expected xn-x-1, binomial12 or jones-white)");
    }
    if (out.size() > 100000)
        throw InputError("corpus: too many instances");
    return out;
}

int cmd_corpus(const GlobalOptions& g, const std::string& family, const std::string& n_text,
               const std::string& m_text, const std::string& a_text, const std::string& b_text, std::ostream& out)
{
    const auto instances = corpus_instances(family, n_text, m_text, a_text, b_text);
    std::vector<CorpusRow> rows(instances.size());
    const AnalysisConfig config = g.analysis();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            CorpusRow& row = rows[i];
            row.label = family_label(instances[i]);
            row.f = family_polynomial(instances[i]);
            row.oracle = family_oracle(instances[i], config.factor);
            try {
                row.verdict = analyze(row.f, config).verdict;
                row.agrees = oracle_agrees(row.oracle, *row.verdict);
            } catch (const InputError& e) {
                row.error = e.what();
                row.agrees = row.oracle.verdict == OracleVerdict::NotApplicable;
            } catch (const std::exception& e) {
                row.error = e.what();
                row.agrees = false;
            }
        }
    };
    const unsigned threads =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(instances.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    const auto mismatches =
        static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CorpusRow& r) { return !r.agrees; }));
    if (g.json) {
        print_json(out, corpus_json(family, rows));
    } else {
        for (const auto& row : rows) {
            out << std::left << std::setw(24) << row.label << ' ' << std::setw(18)
                << (row.verdict ? to_string(*row.verdict) : std::string("error")) << ' ' << std::setw(14)
                << to_string(row.oracle.verdict) << (row.agrees ? "ok" : "MISMATCH");
            if (!row.error.empty())
                out << "  (" << row.error << ")";
            out << '\n';
        }
        out << rows.size() << " instances, " << mismatches << " mismatches\n";
    }
    return mismatches == 0 ? kExitDefinite : kExitInconclusive;
}

// "--m -50..50" would otherwise read the value as an option.
std::vector<std::string> normalize_args(int argc, const char* const* argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        const bool long_opt = a.size() > 2 && a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
        if (long_opt && i + 1 < argc) {
            const std::string next = argv[i + 1];
            if (next.size() > 1 && next[0] == '-' && std::isdigit(static_cast<unsigned char>(next[1]))) {
                args.push_back(a + "=" + next);
                ++i;
                continue;
            }
        }
        args.push_back(std::move(a));
    }
    std::reverse(args.begin(), args.end());
    return args;
}

} // namespace

IntRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_i64(text);
    } else {
        r.lo = parse_i64(std::string_view(text).substr(0, dots));
        r.hi = parse_i64(std::string_view(text).substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw InputError("empty range '" + text + "'");
    return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monogenity toolkit: index valuations, Newton polygons and quartic generators"};
    app.name("monogen");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--bound", g.bound, "Search box for every quartic step")->check(CLI::PositiveNumber);
    app.add_option("--trial-limit", g.trial_limit, "Trial division limit for factoring")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized steps");

    std::string poly, prime, phi, family, n_text, m_text, a_text, b_text;
    QuarticOptions q;

    auto* analyze_cmd = app.add_subcommand("analyze", "Decide monogenity of a monic polynomial");
    analyze_cmd->add_option("polynomial", poly, "Polynomial in x")->required();

    auto* dedekind_cmd = app.add_subcommand("dedekind", "Dedekind criterion at one prime or every prime of D(f)");
    dedekind_cmd->add_option("polynomial", poly, "Polynomial in x")->required();
    dedekind_cmd->add_option("-p,--prime", prime, "Prime");

    auto* polygon_cmd = app.add_subcommand("polygon", "phi-Newton polygons and residual polynomials");
    polygon_cmd->add_option("polynomial", poly, "Polynomial in x")->required();
    polygon_cmd->add_option("-p,--prime", prime, "Prime")->required();
    polygon_cmd->add_option("--phi", phi, "Irreducible factor of f mod p");

    auto* quartic_cmd = app.add_subcommand("quartic", "Generators of index m in a quartic field");
    quartic_cmd->add_option("polynomial", poly, "Monic quartic in x")->required();
    quartic_cmd->add_option("-m,--index", q.m, "Target index m");
    quartic_cmd->add_option("-d,--denominator", q.d, "Common denominator d");
    quartic_cmd->add_option("--n-xi", q.n_xi, "Index of xi (default: ind(f))");
    quartic_cmd->add_option("--thue-bound", q.thue, "Box for (u, v)")->check(CLI::PositiveNumber);
    quartic_cmd->add_option("--pq-bound", q.pq, "Box for (p, q)")->check(CLI::PositiveNumber);
    quartic_cmd->add_option("--xyz-bound", q.xyz, "Box for the direct (x, y, z) search")->check(CLI::PositiveNumber);
    quartic_cmd->add_option("--q0-bound", q.q0, "Box for a zero of Q0")->check(CLI::PositiveNumber);
    quartic_cmd->add_option("--threads", q.threads, "Worker threads (0: all cores)");

    auto* corpus_cmd = app.add_subcommand("corpus", "Sweep a family against its theorem oracle");
    corpus_cmd->add_option("family", family, "xn-x-1, binomial12 or jones-white")->required();
    corpus_cmd->add_option("--n", n_text, "Degree range a..b");
    corpus_cmd->add_option("--m", m_text, "Parameter m range a..b");
    corpus_cmd->add_option("--a", a_text, "Coefficient A range (jones-white)");
    corpus_cmd->add_option("--b", b_text, "Coefficient B range (jones-white)");

    try {
        app.parse(normalize_args(argc, argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitDefinite : kExitInputError;
    }

    try {
        if (analyze_cmd->parsed())
            return cmd_analyze(g, poly, out);
        if (dedekind_cmd->parsed())
            return cmd_dedekind(g, poly, prime, out);
        if (polygon_cmd->parsed())
            return cmd_polygon(g, poly, prime, phi, out);
        if (quartic_cmd->parsed())
            return cmd_quartic(g, poly, q, out);
        if (corpus_cmd->parsed())
            return cmd_corpus(g, family, n_text, m_text, a_text, b_text, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    }
    return kExitInputError;
}

} // namespace monogen
