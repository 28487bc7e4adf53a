// Command-line front end: catalog verification, Groebner bases and
// dimensions, and lifting solves for user-supplied case files. Every report
// is JSON (schema 1); text output is rendered from the same JSON.

#include "nichols/cases_data.hpp"
#include "nichols/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using nichols::AlgebraError;
using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw AlgebraError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Loads a case either from the embedded catalog (by id) or from disk.
nichols::catalog::CaseFile load_case(const std::string& ref)
{
    std::string_view text = nichols::catalog::data::find(ref);
    if (!text.empty())
        return nichols::catalog::CaseFile::parse(std::string(text));
    return nichols::catalog::CaseFile::parse(slurp(ref));
}

/// Text output is a rendering of the JSON report, never computed separately.
void render_text(const json& j, std::ostream& os, int indent = 0)
{
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_structured())) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            os << pad << "-\n";
            render_text(v, os, indent + 1);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& rep, const std::string& format)
{
    if (format == "text")
        render_text(rep, std::cout);
    else
        std::cout << rep.dump(2) << "\n";
}

json error_report(const std::string& ref, const std::string& what)
{
    return json{{"schema", 1}, {"id", ref}, {"ok", false}, {"error", what}};
}

std::size_t realization_index(const nichols::catalog::CaseFile& cf, const std::string& tag)
{
    if (tag.empty()) {
        for (std::size_t i = 0; i < cf.realizations.size(); ++i)
            if (cf.realizations[i].solve)
                return i;
        return 0;
    }
    for (std::size_t i = 0; i < cf.realizations.size(); ++i)
        if (cf.realizations[i].tag == tag)
            return i;
    throw AlgebraError("no realization tagged '" + tag + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lifting algorithm for finite-dimensional Nichols algebras of diagonal type"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Run catalog verification");
    std::vector<std::string> verify_ids;
    bool verify_all = false;
    unsigned jobs = 1;
    nichols::verify::Options vopt = nichols::verify::Options::from_env();
    bool no_flatness = false, no_hopf = false;
    cmd_verify->add_option("case", verify_ids, "Catalog ids or case-file paths");
    cmd_verify->add_flag("--all", verify_all, "Verify the whole catalog (acceptance gate)");
    cmd_verify->add_option("--jobs", jobs, "Parallel workers across cases");
    cmd_verify->add_option("--seed", vopt.seed, "RNG seed for lambda specializations");
    cmd_verify->add_option("--bound-cap", vopt.bound_cap,
                           "Hard cap for degree-bound raising (env NICHOLS_BOUND_CAP)");
    cmd_verify->add_flag("--no-flatness", no_flatness, "Skip flatness specializations");
    cmd_verify->add_flag("--no-hopf", no_hopf, "Skip Hopf-ideal checks");

    // gb
    auto* cmd_gb = app.add_subcommand("gb", "Groebner basis, Hilbert series and dimension");
    std::string gb_ref, gb_tag;
    unsigned gb_bound = 0;
    cmd_gb->add_option("case", gb_ref, "Catalog id or case-file path")->required();
    cmd_gb->add_option("--bound", gb_bound, "Degree bound (default: the case's gb_bound)");
    cmd_gb->add_option("--realization", gb_tag, "Realization tag");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "Solve the lifting for a case file");
    std::string solve_ref, solve_tag;
    int solve_stratum = -1;
    std::vector<std::string> solve_sets;
    cmd_solve->add_option("case", solve_ref, "Catalog id or case-file path")->required();
    cmd_solve->add_option("--realization", solve_tag, "Realization tag");
    cmd_solve->add_option("--stratum", solve_stratum, "Restrict the report to one stratum");
    cmd_solve->add_option("--set", solve_sets,
                          "Lambda specialization override name=value (repeatable)");

    // list / show
    auto* cmd_list = app.add_subcommand("list", "List catalog case ids");
    auto* cmd_show = app.add_subcommand("show", "Print a catalog case file");
    std::string show_id;
    cmd_show->add_option("id", show_id, "Catalog id")->required();

    CLI11_PARSE(app, argc, argv);
    vopt.flatness = !no_flatness;
    vopt.hopf = !no_hopf;

    try {
        if (*cmd_list) {
            json rep;
            rep["schema"] = 1;
            json ids = json::array();
            for (const auto& [id, text] : nichols::catalog::data::cases) {
                auto cf = nichols::catalog::CaseFile::parse(std::string(text));
                ids.push_back(json{{"id", std::string(id)}, {"description", cf.description}});
            }
            rep["cases"] = std::move(ids);
            emit(rep, format);
            return 0;
        }

        if (*cmd_show) {
            std::string_view text = nichols::catalog::data::find(show_id);
            if (text.empty())
                throw AlgebraError("unknown case id: " + show_id);
            std::cout << text;
            return 0;
        }

        if (*cmd_verify) {
            if (verify_all) {
                verify_ids.clear();
                for (const auto& [id, text] : nichols::catalog::data::cases)
                    verify_ids.emplace_back(id);
            }
            if (verify_ids.empty())
                throw AlgebraError("verify needs case ids or --all");
            std::vector<json> reports(verify_ids.size());
            std::mutex next_mtx;
            std::size_t next = 0;
            auto worker = [&] {
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lock(next_mtx);
                        if (next >= verify_ids.size())
                            return;
                        i = next++;
                    }
                    try {
                        auto cf = load_case(verify_ids[i]);
                        reports[i] = nichols::verify::run_verify(cf, vopt);
                    } catch (const std::exception& e) {
                        reports[i] = error_report(verify_ids[i], e.what());
                    }
                }
            };
            if (jobs <= 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < jobs; ++t)
                    pool.emplace_back(worker);
                for (auto& th : pool)
                    th.join();
            }
            bool ok = true;
            json rep;
            rep["schema"] = 1;
            rep["seed"] = vopt.seed;
            json arr = json::array();
            for (auto& r : reports) {
                ok = ok && r.value("ok", false);
                arr.push_back(std::move(r));
            }
            rep["cases"] = std::move(arr);
            rep["ok"] = ok;
            emit(rep, format);
            return ok ? 0 : 1;
        }

        if (*cmd_gb) {
            auto cf = load_case(gb_ref);
            std::size_t ri = realization_index(cf, gb_tag);
            nichols::LiftingCase lc = cf.build(ri);
            unsigned bound = gb_bound ? gb_bound : cf.gb_bound;
            auto gens = nichols::nichols_generators(lc);
            nichols::verify::Options gopt = nichols::verify::Options::from_env();
            // an explicit bound is honored exactly; otherwise completion may
            // raise the case's default bound up to the hard cap
            nichols::GBasis G =
                gb_bound ? nichols::buchberger(gens, bound, lc.ctx)
                         : nichols::complete_basis(gens, lc.ctx, bound, gopt.bound_cap);
            json rep;
            rep["schema"] = 1;
            rep["id"] = cf.id;
            rep["realization"] = cf.realizations[ri].tag;
            rep["bound"] = G.bound;
            rep["complete"] = G.complete;
            json leads = json::array();
            for (const auto& w : G.leads)
                leads.push_back(nichols::to_string(w));
            rep["leading_words"] = std::move(leads);
            rep["hilbert"] = G.hilbert;
            if (G.complete)
                rep["dimension"] = G.dimension().value_or(-1);
            else
                rep["error"] = "incomplete at bound " + std::to_string(G.bound);
            emit(rep, format);
            return G.complete ? 0 : 1;
        }

        if (*cmd_solve) {
            auto cf = load_case(solve_ref);
            std::size_t ri = realization_index(cf, solve_tag);
            nichols::LiftingCase lc = cf.build(ri);
            const auto& ring = lc.ctx.bc.fc.lambdas;
            nichols::CaseRun run = nichols::run_case(lc);
            json rep;
            rep["schema"] = 1;
            rep["id"] = cf.id;
            rep["realization"] = cf.realizations[ri].tag;
            json rels = json::array();
            for (std::size_t i = 0; i < run.results.size(); ++i) {
                if (solve_stratum >= 0 &&
                    lc.rels[i].stratum != static_cast<unsigned>(solve_stratum))
                    continue;
                const auto& rr = run.results[i];
                json je;
                je["name"] = rr.name;
                je["stratum"] = lc.rels[i].stratum;
                je["lambda"] = rr.lambda >= 0 ? ring.names[rr.lambda] : "";
                je["cleft"] = nichols::to_string(rr.cleft_rel, &ring);
                je["cleft_correction"] = nichols::to_string(rr.cleft_correction, &ring);
                je["lift"] = nichols::to_string(rr.lift_rel, &ring);
                je["s"] = nichols::to_string(rr.lift_correction, &ring);
                rels.push_back(std::move(je));
            }
            rep["relations"] = std::move(rels);
            if (!solve_sets.empty()) {
                std::vector<nichols::CycNum> vals(ring.names.size(), nichols::CycNum(0L));
                for (const auto& s : solve_sets) {
                    auto eq = s.find('=');
                    if (eq == std::string::npos)
                        throw AlgebraError("expected name=value: " + s);
                    std::string name = s.substr(0, eq);
                    auto it = std::find(ring.names.begin(), ring.names.end(), name);
                    if (it == ring.names.end())
                        throw AlgebraError("unknown or locked lambda: " + name);
                    vals[static_cast<std::size_t>(it - ring.names.begin())] =
                        nichols::parse_cyc(s.substr(eq + 1));
                }
                json sp = json::array();
                for (const auto& g :
                     nichols::specialize_gens(run.lift_gens, vals, lc.ctx))
                    sp.push_back(nichols::to_string(g, &ring));
                rep["specialized_generators"] = std::move(sp);
            }
            emit(rep, format);
            return 0;
        }
    } catch (const std::exception& e) {
        emit(error_report("", e.what()), format);
        return 2;
    }
    return 0;
}
