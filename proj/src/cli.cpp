#include "twoside/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "twoside/analysis_brackets.hpp"
#include "twoside/divisors.hpp"
#include "twoside/jordan_measure.hpp"
#include "twoside/lattice_pick.hpp"
#include "twoside/probability_games.hpp"
#include "twoside/serialize.hpp"

namespace twoside {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Everything a command emits; rendered once in the requested format.
struct Document {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    Json json;
    std::vector<std::string> footer;  // table format only
    int code = exit_code::ok;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

std::string render_document(const Document& doc, Format fmt)
{
    std::ostringstream os;
    switch (fmt) {
    case Format::json:
        os << doc.json.dump(2) << "\n";
        break;
    case Format::csv:
        for (const auto* row : {&doc.header}) {
            for (std::size_t i = 0; i < row->size(); ++i)
                os << (i ? "," : "") << csv_field((*row)[i]);
            os << "\n";
        }
        for (const auto& row : doc.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_field(row[i]);
            os << "\n";
        }
        break;
    case Format::table: {
        std::vector<std::size_t> w(doc.header.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] = doc.header[i].size();
        for (const auto& row : doc.rows)
            for (std::size_t i = 0; i < row.size() && i < w.size(); ++i)
                w[i] = std::max(w[i], std::min<std::size_t>(row[i].size(), 40));
        auto line = [&](const std::vector<std::string>& row) {
            std::string s;
            for (std::size_t i = 0; i < row.size(); ++i) {
                s += row[i];
                if (i + 1 < row.size())
                    s += std::string(row[i].size() < w[i] ? w[i] - row[i].size() + 2 : 2, ' ');
            }
            while (!s.empty() && s.back() == ' ')
                s.pop_back();
            os << s << "\n";
        };
        line(doc.header);
        for (const auto& row : doc.rows)
            line(row);
        for (const auto& f : doc.footer)
            os << f << "\n";
        break;
    }
    }
    return os.str();
}

Rational parse_rational(const std::string& text, const std::string& what)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
}

// ---- check -----------------------------------------------------------------

std::vector<const SuiteEntry*> resolve(const std::vector<std::string>& selectors)
{
    if (selectors.empty())
        throw UsageError("check needs at least one suite id (see 'list')");
    std::vector<const SuiteEntry*> out;
    std::set<std::string> seen;
    for (const auto& sel : selectors) {
        const auto hits = select_suites(sel);
        if (hits.empty())
            throw UsageError("unknown suite id: " + sel);
        for (const auto* e : hits)
            if (seen.insert(e->id).second)
                out.push_back(e);
    }
    return out;
}

std::string witness_text(const IdentityReport& r)
{
    if (!r.witness)
        return r.note;
    std::string s;
    for (const auto& p : r.witness->params)
        s += (s.empty() ? "" : ", ") + p.name + "=" + p.value;
    s += ": " + r.witness->lhs + " vs " + r.witness->rhs;
    if (!r.note.empty())
        s += " (" + r.note + ")";
    return s;
}

Document reports_document(const std::vector<const SuiteEntry*>& suites, const SuiteParams& params)
{
    // suites run concurrently; results are emitted in selection order
    std::vector<std::future<std::vector<IdentityReport>>> jobs;
    for (const auto* e : suites)
        jobs.push_back(std::async(std::launch::async, [e, &params] { return e->run(params); }));

    Document doc;
    doc.header = {"status", "suite", "case", "lhs", "rel", "rhs", "witness/note"};
    Json reports = Json::array();
    long counts[4] = {0, 0, 0, 0};
    std::vector<std::string> errors;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::vector<IdentityReport> rows;
        try {
            rows = jobs[i].get();
        } catch (const std::exception& ex) {
            errors.push_back(suites[i]->id + ": " + ex.what());
            continue;
        }
        for (const auto& r : rows) {
            const Status st = r.status();
            ++counts[static_cast<int>(st)];
            doc.rows.push_back({std::string(status_name(st)), r.suite, r.case_label(), render(r.lhs),
                                std::string(relation_symbol(r.relation)), render(r.rhs), witness_text(r)});
            reports.push_back(report_json(r));
        }
    }
    const long pass = counts[static_cast<int>(Status::pass)];
    const long fail = counts[static_cast<int>(Status::fail)];
    const long xfail = counts[static_cast<int>(Status::expected_fail)];
    const long warn = counts[static_cast<int>(Status::warn)];
    doc.json["reports"] = std::move(reports);
    doc.json["summary"] = {{"checks", pass + fail + xfail + warn},
                           {"pass", pass},
                           {"fail", fail},
                           {"expected_fail", xfail},
                           {"warn", warn},
                           {"errors", errors}};
    doc.footer.push_back(std::to_string(pass + fail + xfail + warn) + " checks: " + std::to_string(pass) + " pass, " +
                         std::to_string(xfail) + " expected-fail, " + std::to_string(warn) + " warn, " +
                         std::to_string(fail) + " fail");
    for (const auto& e : errors)
        doc.footer.push_back("error: " + e);
    if (fail > 0 || !errors.empty())
        doc.code = exit_code::check_failed;
    return doc;
}

Document list_document()
{
    Document doc;
    doc.header = {"id", "tag", "description"};
    doc.json = Json::array();
    for (const auto& e : suite_registry()) {
        doc.rows.push_back({e.id, e.tag, e.description});
        doc.json.push_back({{"id", e.id}, {"tag", e.tag}, {"description", e.description}});
    }
    return doc;
}

// ---- converge --------------------------------------------------------------

class Recording final : public BracketGenerator {
public:
    explicit Recording(BracketGenerator& inner) : inner_(inner) {}
    std::string parameter() const override { return inner_.parameter(); }

    std::vector<std::pair<std::string, Bracket>> log;

protected:
    Bracket next() override
    {
        Bracket b = inner_.step();
        log.emplace_back(inner_.parameter(), b);
        return b;
    }

private:
    BracketGenerator& inner_;
};

std::unique_ptr<BracketGenerator> make_generator(const RunConfig& cfg)
{
    const std::string& g = cfg.generator;
    const Rational eps = parse_rational(cfg.eps, "--eps");
    if (eps.sign() <= 0)
        throw UsageError("--eps must be positive");
    if (g == "pi")
        return std::make_unique<PiGenerator>(eps);
    if (g == "circle" || g == "cylinder") {
        const Rational r = parse_rational(cfg.r.value_or("1"), "--r");
        const Rational m = parse_rational(cfg.m, "--m");
        if (r.sign() <= 0 || m.sign() <= 0)
            throw UsageError("radius and height must be positive");
        return std::make_unique<PiGenerator>(eps, g == "circle" ? r * r : r * r * m);
    }
    if (g == "nth_root")
        return std::make_unique<NthRootGenerator>();
    if (g == "real_power") {
        const Rational a = parse_rational(cfg.a.value_or("2"), "--a");
        if (a.sign() <= 0)
            throw UsageError("--a must be positive");
        return std::make_unique<RealPowerGenerator>(a);
    }
    if (g == "riemann") {
        if (cfg.power < 1 || cfg.power > 3)
            throw UsageError("--power must be 1, 2 or 3");
        return std::make_unique<RiemannGenerator>(MonomialIntegrand{1, static_cast<int>(cfg.power), 1});
    }
    if (g == "geometric") {
        const Rational a = parse_rational(cfg.a.value_or("1"), "--a");
        const Rational r = parse_rational(cfg.r.value_or("1/2"), "--r");
        if (!(r.abs() < 1))
            throw UsageError("--r must satisfy |r| < 1");
        return std::make_unique<GeometricGenerator>(a, r);
    }
    if (g == "swineshead")
        return std::make_unique<SwinesheadGenerator>();
    throw UsageError("unknown generator: " + g +
                     " (pi, circle, cylinder, nth_root, real_power, riemann, geometric, swineshead)");
}

Document converge_document(const RunConfig& cfg)
{
    if (cfg.tol && cfg.doublings)
        throw UsageError("--tol and --doublings are exclusive");
    auto inner = make_generator(cfg);
    Recording rec(*inner);
    Document doc;
    std::optional<std::string> failure;
    if (cfg.tol) {
        const Rational tol = parse_rational(*cfg.tol, "--tol");
        if (tol.sign() <= 0)
            throw UsageError("--tol must be positive");
        try {
            squeeze_limit(rec, tol, static_cast<std::size_t>(cfg.steps.value_or(64)));
        } catch (const NonConvergenceError& e) {
            failure = e.what();
        }
    } else {
        const long count = cfg.doublings ? *cfg.doublings + 1 : cfg.steps.value_or(10);
        if (count < 1)
            throw UsageError("step count must be positive");
        for (long i = 0; i < count; ++i)
            rec.step();
    }

    doc.header = {"step", "parameter", "lo", "hi", "width", "lo_decimal", "hi_decimal", "width_decimal"};
    Json steps = Json::array();
    for (std::size_t i = 0; i < rec.log.size(); ++i) {
        const auto& [param, b] = rec.log[i];
        doc.rows.push_back({std::to_string(i), param, b.lo().str(), b.hi().str(), b.width().str(),
                            b.lo().decimal(15), b.hi().decimal(15), b.width().decimal(15)});
        Json row = {{"step", i}, {"parameter", param}};
        row["bracket"] = bracket_json(b);
        steps.push_back(std::move(row));
    }
    doc.json["generator"] = cfg.generator;
    doc.json["steps"] = std::move(steps);
    doc.json["converged"] = !failure.has_value();
    if (failure) {
        doc.json["error"] = *failure;
        doc.footer.push_back("error: " + *failure);
        doc.code = exit_code::check_failed;
    }
    return doc;
}

// ---- divisors --------------------------------------------------------------

Document divisors_document(const RunConfig& cfg)
{
    if (cfg.n < 1 || cfg.n > 10000000)
        throw UsageError("--n must be in 1..10^7");
    const DivisorBounds b = divisor_average_bounds(cfg.n);
    const DivisorSweep sweep = divisor_sweep(cfg.n);
    const bool identity = b.divisor_sum == b.floor_sum;

    Document doc;
    doc.header = {"quantity", "exact", "decimal"};
    auto row = [&](const std::string& k, const Rational& v) {
        doc.rows.push_back({k, v.str(), v.decimal(12)});
    };
    row("n", Rational(cfg.n));
    row("sum d(k)", Rational(b.divisor_sum));
    row("sum floor(n/k)", Rational(b.floor_sum));
    row("H_n - 1", b.lower);
    row("average", b.avg);
    row("H_n", b.upper);
    doc.rows.push_back({"identity", identity ? "PASS" : "FAIL", ""});
    doc.rows.push_back({"sandwich", b.pass ? "PASS" : "FAIL", b.upper_attained ? "upper attained" : ""});

    doc.json["n"] = cfg.n;
    doc.json["divisor_sum"] = b.divisor_sum.get_str();
    doc.json["floor_sum"] = b.floor_sum.get_str();
    doc.json["lower"] = rational_json(b.lower);
    doc.json["average"] = rational_json(b.avg);
    doc.json["upper"] = rational_json(b.upper);
    doc.json["average_decimal"] = b.avg.decimal(12);
    doc.json["identity"] = identity ? "PASS" : "FAIL";
    doc.json["sandwich"] = b.pass ? "PASS" : "FAIL";
    doc.json["sweep"] = {{"max_n", sweep.max_n},
                         {"identity_failures", sweep.identity_failures},
                         {"bound_failures", sweep.bound_failures},
                         {"upper_attained_at", sweep.upper_attained_at}};

    std::string attained;
    for (long k : sweep.upper_attained_at)
        attained += (attained.empty() ? "" : ", ") + std::to_string(k);
    doc.footer.push_back("sweep 1.." + std::to_string(cfg.n) + ": " + std::to_string(sweep.identity_failures) +
                         " identity failures, " + std::to_string(sweep.bound_failures) +
                         " bound failures; average = H_n at n = " + attained);
    if (!identity || !b.pass || sweep.identity_failures || sweep.bound_failures)
        doc.code = exit_code::check_failed;
    return doc;
}

// ---- jordan ----------------------------------------------------------------

std::vector<Rational> split_numbers(const std::string& s, char sep, const std::string& what)
{
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(parse_rational(item, what));
    return out;
}

Region parse_region(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("region must be disk:<r>, disk:<cx>,<cy>,<r> or poly:<x>,<y>;...");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    try {
        if (kind == "disk") {
            const auto v = split_numbers(body, ',', "disk");
            if (v.size() == 1)
                return make_disk({0, 0}, v[0]);
            if (v.size() == 3)
                return make_disk({v[0], v[1]}, v[2]);
            throw UsageError("disk needs r or cx,cy,r");
        }
        if (kind == "poly") {
            std::vector<RatPoint> pts;
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ';')) {
                const auto v = split_numbers(item, ',', "vertex");
                if (v.size() != 2)
                    throw UsageError("vertex needs x,y: '" + item + "'");
                pts.push_back({v[0], v[1]});
            }
            return ConvexPolygon(std::move(pts));
        }
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("bad region: ") + e.what());
    }
    throw UsageError("unknown region kind: " + kind);
}

Document jordan_document(const RunConfig& cfg)
{
    const Region region = parse_region(cfg.region);
    const Rational tol = parse_rational(cfg.jordan_tol, "--tol");
    if (tol.sign() <= 0)
        throw UsageError("--tol must be positive");
    if (cfg.max_grid < 1)
        throw UsageError("--max-n must be positive");

    // dyadic refinement, tabulated step by step so a non-converged run still shows its table
    Document doc;
    doc.header = {"n", "inner", "outer", "lo", "hi", "width", "lo_decimal", "hi_decimal"};
    Json table = Json::array();
    bool converged = false;
    bool nested = true;
    std::optional<Bracket> prev;
    for (long n = 1; n <= cfg.max_grid; n *= 2) {
        const JordanCounts c = jordan_cells(region, n);
        const Bracket& b = c.bracket;
        if (prev && !prev->contains(b))
            nested = false;
        prev = b;
        doc.rows.push_back({std::to_string(n), std::to_string(c.inner_cells), std::to_string(c.outer_cells),
                            b.lo().str(), b.hi().str(), b.width().str(), b.lo().decimal(10), b.hi().decimal(10)});
        Json row = {{"n", n}, {"inner_cells", c.inner_cells}, {"outer_cells", c.outer_cells}};
        row["bracket"] = bracket_json(b, 10);
        table.push_back(std::move(row));
        if (b.width() <= tol) {
            converged = true;
            break;
        }
    }
    doc.json["region"] = cfg.region;
    doc.json["tol"] = tol.str();
    doc.json["table"] = std::move(table);
    doc.json["nested"] = nested;
    doc.json["converged"] = converged;
    if (const auto* poly = std::get_if<ConvexPolygon>(&region)) {
        const Rational area = poly->area();
        doc.json["area"] = area.str();
        doc.footer.push_back("exact area " + area.str() + (prev->contains(area) ? " (contained)" : " (NOT contained)"));
        if (!prev->contains(area))
            doc.code = exit_code::check_failed;
    }
    if (!nested) {
        doc.footer.push_back("error: brackets not nested");
        doc.code = exit_code::check_failed;
    }
    if (!converged) {
        doc.footer.push_back("error: width above " + tol.str() + " at n = " + std::to_string(cfg.max_grid));
        doc.code = exit_code::check_failed;
    }
    return doc;
}

// ---- pick ------------------------------------------------------------------

Document pick_document(const RunConfig& cfg)
{
    if (cfg.seeds < 1 || cfg.extent < 2)
        throw UsageError("--seeds must be positive and --extent at least 2");
    Document doc;
    doc.header = {"seed", "vertices", "area", "h_boundary", "b_interior", "pick", "tri_boundary_first", "tri_interior_first",
                  "h+2b-2", "status"};
    doc.json = Json::array();
    long failures = 0;
    for (long i = 0; i < cfg.seeds; ++i) {
        const std::uint64_t seed = cfg.params.seed + static_cast<std::uint64_t>(i);
        const LatticePolygon poly = random_lattice_polygon(seed, cfg.extent);
        const IdentityReport pick = pick_check(poly);
        const auto t1 = empty_triangulation(poly, RefineOrder::boundary_first_lowest);
        const auto t2 = empty_triangulation(poly, RefineOrder::interior_first_highest);
        const bool ok = pick.pass && t1.pass() && t2.pass();
        failures += ok ? 0 : 1;
        const long expected = t1.h + 2 * t1.b - 2;
        doc.rows.push_back({std::to_string(seed), std::to_string(poly.size()), shoelace_area(poly).str(),
                            std::to_string(t1.h), std::to_string(t1.b), pick.pass ? "PASS" : "FAIL",
                            std::to_string(t1.triangles.size()), std::to_string(t2.triangles.size()),
                            std::to_string(expected), ok ? "PASS" : "FAIL"});
        Json verts = Json::array();
        for (const auto& v : poly.vertices())
            verts.push_back({v.x, v.y});
        doc.json.push_back({{"seed", seed},
                            {"vertices", std::move(verts)},
                            {"area", shoelace_area(poly).str()},
                            {"h", t1.h},
                            {"b", t1.b},
                            {"pick", pick.pass ? "PASS" : "FAIL"},
                            {"triangles", {t1.triangles.size(), t2.triangles.size()}},
                            {"status", ok ? "PASS" : "FAIL"}});
    }
    doc.footer.push_back(std::to_string(cfg.seeds - failures) + "/" + std::to_string(cfg.seeds) + " polygons pass");
    if (failures)
        doc.code = exit_code::check_failed;
    return doc;
}

// ---- prob ------------------------------------------------------------------

Document prob_document(const RunConfig& cfg)
{
    const long trials = cfg.params.trials.value_or(1000000);
    if (trials < 1)
        throw UsageError("--trials must be positive");
    GameReport g;
    std::optional<Rational> closed;
    if (cfg.game == "dice") {
        g = dice_game(cfg.terms.value_or(40), trials, cfg.params.seed);
    } else if (cfg.game == "coin") {
        if (cfg.coin_n < 1 || cfg.coin_n > 200)
            throw UsageError("--n must be in 1..200");
        g = coin_game(cfg.coin_n, cfg.terms.value_or(60), trials, cfg.params.seed);
        closed = coin_game_closed_form(cfg.coin_n);
    } else {
        throw UsageError("unknown game: " + cfg.game + " (dice, coin)");
    }
    const auto& mc = g.monte_carlo;
    const bool series_ok = g.series_bracket.contains(g.exact);
    const bool closed_ok = !closed || *closed == g.exact;

    Document doc;
    doc.header = {"quantity", "exact", "decimal"};
    doc.rows.push_back({"exact", g.exact.str(), g.exact.decimal(12)});
    if (closed)
        doc.rows.push_back({"closed form", closed->str(), closed_ok ? "PASS" : "FAIL"});
    doc.rows.push_back({"series lo (K=" + std::to_string(g.terms) + ")", g.series_bracket.lo().str(),
                        g.series_bracket.lo().decimal(12)});
    doc.rows.push_back({"series hi", g.series_bracket.hi().str(), g.series_bracket.hi().decimal(12)});
    doc.rows.push_back({"series width", g.series_bracket.width().str(), g.series_bracket.width().decimal(12)});
    doc.rows.push_back({"series contains exact", series_ok ? "PASS" : "FAIL", ""});
    doc.rows.push_back({"monte carlo", std::to_string(mc.hits) + "/" + std::to_string(mc.trials),
                        mc.estimate.decimal(6)});
    std::ostringstream dev;
    dev.precision(3);
    dev << std::fixed << mc.deviation;
    doc.rows.push_back({"deviation (sigma)", dev.str(), std::string(status_name(mc.status))});

    doc.json["game"] = cfg.game;
    if (cfg.game == "coin")
        doc.json["n"] = cfg.coin_n;
    doc.json["exact"] = g.exact.str();
    if (closed)
        doc.json["closed_form"] = closed->str();
    doc.json["series_terms"] = g.terms;
    doc.json["series_bracket"] = bracket_json(g.series_bracket, 12);
    doc.json["monte_carlo"] = {{"trials", mc.trials},     {"hits", mc.hits},
                               {"estimate", mc.estimate.str()}, {"seed", cfg.params.seed},
                               {"sigma", mc.sigma},       {"deviation", mc.deviation},
                               {"status", std::string(status_name(mc.status))}};
    if (!series_ok || !closed_ok || mc.status == Status::fail)
        doc.code = exit_code::check_failed;
    return doc;
}

Document execute(const RunConfig& cfg)
{
    const auto& c = cfg.command;
    if (c == "list")
        return list_document();
    if (c == "check")
        return reports_document(resolve(cfg.selectors), cfg.params);
    if (c == "euclid") {
        std::vector<std::string> ids;
        if (cfg.euclid_suite == "ceva")
            ids = {"geo.ceva", "geo.ceva_converse"};
        else if (cfg.euclid_suite == "squares")
            ids = {"geo.squares"};
        else
            throw UsageError("unknown euclid suite: " + cfg.euclid_suite + " (ceva, squares)");
        return reports_document(resolve(ids), cfg.params);
    }
    if (c == "converge")
        return converge_document(cfg);
    if (c == "divisors")
        return divisors_document(cfg);
    if (c == "jordan")
        return jordan_document(cfg);
    if (c == "pick")
        return pick_document(cfg);
    if (c == "prob")
        return prob_document(cfg);
    throw UsageError("unknown command: " + c);
}

} // namespace

std::optional<Format> parse_format(const std::string& s)
{
    if (s == "table")
        return Format::table;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    return std::nullopt;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.params.max_n < 1) {
        err << "error: --max-n must be positive\n";
        return exit_code::usage;
    }
    Document doc;
    try {
        doc = execute(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::check_failed;
    }
    const std::string text = render_document(doc, cfg.format);
    if (cfg.output) {
        std::ofstream f(*cfg.output, std::ios::binary);
        if (!f || !(f << text) || !f.flush()) {
            err << "error: cannot write " << *cfg.output << "\n";
            return exit_code::io;
        }
    } else if (!(out << text) || !out.flush()) {
        err << "error: cannot write to standard output\n";
        return exit_code::io;
    }
    return doc.code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    std::string format = "table";
    std::string output;

    CLI::App app{"Two-sided exact checks: identities, brackets, enclosures."};
    app.require_subcommand(1);
    app.add_option("--format", format, "table, json or csv (TWOSIDE_FORMAT overrides)")->capture_default_str();
    app.add_option("--output,-o", output, "write to this file instead of standard output");
    app.fallthrough();

    app.add_subcommand("list", "list suite ids with topic tags");

    auto* check = app.add_subcommand("check", "run identity suites");
    check->add_option("suites", cfg.selectors, "suite ids, prefix.* or all")->required();
    check->add_option("--max-n", cfg.params.max_n, "range bound for parametrized suites")->capture_default_str();
    check->add_option("--seed", cfg.params.seed, "seed for randomized suites")->capture_default_str();
    check->add_option("--trials", cfg.params.trials, "trials for randomized suites");

    auto* converge = app.add_subcommand("converge", "tabulate a bracket generator");
    converge->add_option("generator", cfg.generator,
                         "pi, circle, cylinder, nth_root, real_power, riemann, geometric, swineshead")
        ->required();
    converge->add_option("--tol", cfg.tol, "stop at width <= p/q");
    converge->add_option("--doublings", cfg.doublings, "emit D+1 brackets");
    converge->add_option("--steps", cfg.steps, "emit N brackets (step cap with --tol, default 64)");
    converge->add_option("--eps", cfg.eps, "rounding grid for pi/circle/cylinder")->capture_default_str();
    converge->add_option("--a", cfg.a, "real_power base / geometric first term");
    converge->add_option("--r", cfg.r, "geometric ratio / circle and cylinder radius");
    converge->add_option("--m", cfg.m, "cylinder height")->capture_default_str();
    converge->add_option("--power", cfg.power, "riemann: integrand x^k on [0,1]")->capture_default_str();

    auto* divisors = app.add_subcommand("divisors", "divisor-count identity and harmonic bounds");
    divisors->add_option("--n", cfg.n, "upper limit")->capture_default_str();

    auto* jordan = app.add_subcommand("jordan", "grid inner/outer area refinement");
    jordan->add_option("--region", cfg.region, "disk:r | disk:cx,cy,r | poly:x,y;x,y;...")->capture_default_str();
    jordan->add_option("--tol", cfg.jordan_tol, "target width p/q")->capture_default_str();
    jordan->add_option("--max-n", cfg.max_grid, "largest grid resolution")->capture_default_str();

    auto* pick = app.add_subcommand("pick", "Pick's formula and empty triangulations on random polygons");
    pick->add_option("--seeds", cfg.seeds, "number of polygons")->capture_default_str();
    pick->add_option("--extent", cfg.extent, "coordinates in [-E, E]")->capture_default_str();
    pick->add_option("--seed", cfg.params.seed, "first seed")->capture_default_str();

    auto* prob = app.add_subcommand("prob", "exact, series and simulated game probabilities");
    prob->add_option("game", cfg.game, "dice or coin")->required();
    prob->add_option("--n", cfg.coin_n, "coin: heads needed")->capture_default_str();
    prob->add_option("--trials", cfg.params.trials, "Monte Carlo trials (default 10^6)");
    prob->add_option("--terms", cfg.terms, "series terms (dice 40, coin 60)");
    prob->add_option("--seed", cfg.params.seed, "Monte Carlo seed")->capture_default_str();

    auto* euclid = app.add_subcommand("euclid", "seeded Ceva and squares checks");
    euclid->add_option("--suite", cfg.euclid_suite, "ceva or squares")->capture_default_str();
    euclid->add_option("--trials", cfg.params.trials, "cases (default 100)");
    euclid->add_option("--seed", cfg.params.seed, "seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (const char* env = std::getenv("TWOSIDE_FORMAT"); env && *env)
        format = env;
    const auto fmt = parse_format(format);
    if (!fmt) {
        err << "error: unknown format '" << format << "' (table, json, csv)\n";
        return exit_code::usage;
    }
    cfg.format = *fmt;
    if (!output.empty())
        cfg.output = output;
    return run(cfg, out, err);
}

} // namespace twoside
