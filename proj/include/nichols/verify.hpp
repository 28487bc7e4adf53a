#pragma once

#include "nichols/catalog.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace nichols::verify {

using json = nlohmann::ordered_json;

/// Verification knobs. The seed drives the pseudo-random lambda
/// specializations and is recorded in every report; bound_cap limits how far
/// completion may raise the degree bound (overridable via NICHOLS_BOUND_CAP).
struct Options {
    unsigned bound_cap = 60;
    std::uint64_t seed = 2718281828;
    unsigned nrandom = 3;
    bool flatness = true;
    bool hopf = true;

    static Options from_env()
    {
        Options o;
        if (const char* s = std::getenv("NICHOLS_BOUND_CAP"))
            o.bound_cap = static_cast<unsigned>(std::strtoul(s, nullptr, 10));
        return o;
    }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// The lambda specializations used for flatness/Hopf checks: the all-zero and
/// all-one patterns followed by nrandom pseudo-random nonzero rationals drawn
/// from the seeded generator. Only admissible parameters exist as symbols, so
/// every assignment is admissible.
inline std::vector<std::vector<CycNum>> specialization_values(std::size_t nsym,
                                                              const Options& opt)
{
    std::vector<std::vector<CycNum>> out;
    out.emplace_back(nsym, CycNum(0L));
    out.emplace_back(nsym, CycNum(1L));
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (unsigned i = 0; i < opt.nrandom; ++i) {
        std::vector<CycNum> v;
        for (std::size_t k = 0; k < nsym; ++k) {
            long n = num(rng);
            if (n == 0)
                n = 1;
            v.push_back(CycNum(Rational(n, den(rng))));
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline json scalar_list(const std::vector<CycNum>& v)
{
    json a = json::array();
    for (const auto& c : v)
        a.push_back(to_string(c));
    return a;
}

} // namespace detail

/// Runs admissibility (and, for realizations marked solve, the full lifting
/// algorithm plus flatness and Hopf-ideal checks) for one case file, and
/// compares everything against the frozen expected outputs. The report is
/// deterministic for a fixed seed and config except for the "timings"
/// objects, which golden comparisons must ignore.
inline json run_verify(const catalog::CaseFile& cf, const Options& opt)
{
    json rep;
    rep["schema"] = 1;
    rep["id"] = cf.id;
    rep["seed"] = opt.seed;
    rep["bound_cap"] = opt.bound_cap;
    rep["gb_bound"] = cf.gb_bound;
    bool case_ok = true;
    json reals = json::array();

    for (std::size_t i = 0; i < cf.realizations.size(); ++i) {
        const catalog::CaseRealization& cr = cf.realizations[i];
        LiftingCase lc = cf.build(i);
        const SmashCtx& ctx = lc.ctx;
        const LambdaRing& ring = ctx.bc.fc.lambdas;
        bool real_ok = true;
        json jr;
        jr["tag"] = cr.tag;

        AdmissibilityReport adm = admissibility(lc);
        json ja = json::array();
        for (std::size_t k = 0; k < adm.entries.size(); ++k) {
            const auto& e = adm.entries[k];
            json je;
            je["relation"] = e.relation;
            je["degree"] = e.degree;
            je["chi_trivial"] = e.chi_trivial;
            je["g_nontrivial"] = e.g_nontrivial;
            je["enabled"] = e.enabled;
            je["realizable"] = e.realizable;
            je["conditions"] = e.conditions;
            ja.push_back(std::move(je));
        }
        jr["admissibility"] = std::move(ja);
        json jj = json::array();
        for (const auto& [a, b, ok] : adm.joint)
            jj.push_back(json{{"relations", {adm.entries[a].relation, adm.entries[b].relation}},
                              {"jointly_realizable", ok}});
        jr["joint"] = std::move(jj);

        bool enabled_ok = true;
        for (const auto& [name, want] : cr.expected.enabled) {
            bool found = false;
            for (const auto& e : adm.entries)
                if (e.relation == name) {
                    found = true;
                    if (e.enabled != want)
                        enabled_ok = false;
                }
            if (!found)
                enabled_ok = false;
        }
        jr["enabled_ok"] = enabled_ok;
        real_ok = real_ok && enabled_ok;

        if (cr.solve) {
            json js;
            auto t0 = std::chrono::steady_clock::now();
            CaseRun run = run_case(lc);
            double t_solve = detail::seconds_since(t0);

            bool golden_ok = true;
            json jrels = json::array();
            for (const auto& rr : run.results) {
                json je;
                je["name"] = rr.name;
                je["lambda"] = rr.lambda >= 0 ? ring.names[rr.lambda] : "";
                je["cleft_correction"] = to_string(rr.cleft_correction, &ring);
                je["lift"] = to_string(rr.lift_rel, &ring);
                je["s"] = to_string(rr.lift_correction, &ring);
                auto check = [&](const std::map<std::string, std::string>& exp,
                                 const SmashPoly& got) {
                    SmashPoly want = ctx.zero();
                    auto it = exp.find(rr.name);
                    if (it != exp.end())
                        want = parse_expr(it->second, ctx);
                    return smash_sub(got, want, ctx).empty();
                };
                bool ok_c = check(cr.expected.cleft, rr.cleft_correction);
                bool ok_s = check(cr.expected.s, rr.lift_correction);
                je["cleft_ok"] = ok_c;
                je["s_ok"] = ok_s;
                golden_ok = golden_ok && ok_c && ok_s;
                jrels.push_back(std::move(je));
            }
            js["relations"] = std::move(jrels);
            js["golden_ok"] = golden_ok;
            real_ok = real_ok && golden_ok;

            t0 = std::chrono::steady_clock::now();
            GBasis N = complete_basis(run.nichols_gens, ctx, lc.gb_bound, opt.bound_cap);
            double t_gb = detail::seconds_since(t0);
            long dim = N.complete ? N.dimension().value_or(-1) : -1;
            js["dimension"] = dim;
            bool dim_ok = N.complete && (cf.dimension == 0 || dim == cf.dimension);
            js["dimension_ok"] = dim_ok;
            real_ok = real_ok && dim_ok;
            if (!cf.pbw_orders.empty()) {
                long prod = 1;
                for (unsigned h : cf.pbw_orders)
                    prod *= static_cast<long>(h);
                bool pbw_ok = prod == dim;
                js["pbw_product"] = prod;
                js["pbw_ok"] = pbw_ok;
                real_ok = real_ok && pbw_ok;
            }

            double t_spec = 0;
            if ((opt.flatness || opt.hopf) && N.complete) {
                t0 = std::chrono::steady_clock::now();
                json jspecs = json::array();
                bool flat_all = true, hopf_all = true;
                for (const auto& vals :
                     detail::specialization_values(ring.names.size(), opt)) {
                    json jv;
                    jv["values"] = detail::scalar_list(vals);
                    auto sp = specialize_gens(run.lift_gens, vals, ctx);
                    GBasis D = complete_basis(sp, ctx, N.bound, opt.bound_cap);
                    bool flat = D.complete && D.dimension() == N.dimension();
                    if (flat) {
                        std::vector<Word> a = D.leads, b = N.leads;
                        std::sort(a.begin(), a.end());
                        std::sort(b.begin(), b.end());
                        flat = a == b;
                    }
                    jv["flat"] = flat;
                    flat_all = flat_all && flat;
                    if (opt.hopf) {
                        bool h = D.complete && hopf_ideal_check(sp, D);
                        jv["hopf"] = h;
                        hopf_all = hopf_all && h;
                    }
                    jspecs.push_back(std::move(jv));
                }
                t_spec = detail::seconds_since(t0);
                js["specializations"] = std::move(jspecs);
                js["flatness_ok"] = flat_all;
                js["hopf_ok"] = hopf_all;
                real_ok = real_ok && (!opt.flatness || flat_all) && (!opt.hopf || hopf_all);
            }

            js["timings"] = json{{"solve_s", t_solve},
                                 {"groebner_s", t_gb},
                                 {"specializations_s", t_spec}};
            jr["solve"] = std::move(js);
        }

        jr["ok"] = real_ok;
        case_ok = case_ok && real_ok;
        reals.push_back(std::move(jr));
    }

    rep["realizations"] = std::move(reals);
    rep["ok"] = case_ok;
    return rep;
}

} // namespace nichols::verify
