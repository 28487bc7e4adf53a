#pragma once

#include "nichols/expr.hpp"
#include "nichols/lifting.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nichols::catalog {

/// Expected solver outputs for one realization, as expression strings in the
/// case-file syntax. Relations absent from a map are expected to have a zero
/// correction; `enabled` lists which deformation parameters admissibility
/// must turn on.
struct ExpectedOutputs {
    std::map<std::string, bool> enabled;
    std::map<std::string, std::string> cleft;
    std::map<std::string, std::string> s;
};

/// One principal realization of a case: the group data plus the character
/// values chi_j(g_k) as scalar strings. The braiding is derived from these
/// via q_ij = chi_j(g_i) and checked against the case diagram.
struct CaseRealization {
    std::string tag;
    bool solve = false; // run the full lifting solver (vs admissibility only)
    std::vector<unsigned> group_orders;
    std::vector<GrpElem> grouplikes;
    std::vector<std::vector<std::string>> char_values;
    ExpectedOutputs expected;
};

/// Parsed case file. `build(i)` materializes realization i as a LiftingCase
/// ready for the solver; it throws when the realization data is inconsistent
/// or does not match the diagram.
struct CaseFile {
    struct Rel {
        std::string name;
        std::string base;
        std::string lambda;
        unsigned power = 1;
        unsigned stratum = 0;
    };

    int schema = 1;
    std::string id;
    std::string description;
    CycNum diag_v1, diag_edge, diag_v2;
    std::vector<Rel> rels;
    unsigned gb_bound = 24;
    long dimension = 0;                 // frozen quotient dimension, 0 = unknown
    std::vector<unsigned> pbw_orders;   // optional PBW height cross-check
    std::string precedence = "x1<x2";
    std::vector<CaseRealization> realizations;

    static CaseFile parse(const std::string& text)
    {
        nlohmann::json j = nlohmann::json::parse(text);
        CaseFile c;
        c.schema = j.at("schema").get<int>();
        if (c.schema != 1)
            throw AlgebraError("unsupported case-file schema");
        c.id = j.at("id").get<std::string>();
        c.description = j.value("description", std::string{});
        const auto& d = j.at("diagram");
        c.diag_v1 = parse_cyc(d.at("v1").get<std::string>());
        c.diag_edge = parse_cyc(d.at("edge").get<std::string>());
        c.diag_v2 = parse_cyc(d.at("v2").get<std::string>());
        for (const auto& r : j.at("relations")) {
            Rel rel;
            rel.name = r.at("name").get<std::string>();
            rel.base = r.at("base").get<std::string>();
            rel.lambda = r.at("lambda").get<std::string>();
            rel.power = r.value("power", 1u);
            rel.stratum = r.value("stratum", 0u);
            c.rels.push_back(std::move(rel));
        }
        c.gb_bound = j.value("gb_bound", 24u);
        c.dimension = j.value("dimension", 0l);
        if (j.contains("pbw_orders"))
            c.pbw_orders = j.at("pbw_orders").get<std::vector<unsigned>>();
        c.precedence = j.value("precedence", std::string("x1<x2"));
        if (c.precedence != "x1<x2" && c.precedence != "x2<x1")
            throw AlgebraError("unknown letter precedence '" + c.precedence + "'");
        for (const auto& r : j.at("realizations")) {
            CaseRealization cr;
            cr.tag = r.at("tag").get<std::string>();
            cr.solve = r.value("solve", false);
            cr.group_orders = r.at("group_orders").get<std::vector<unsigned>>();
            for (const auto& g : r.at("grouplikes"))
                cr.grouplikes.push_back(g.get<GrpElem>());
            cr.char_values =
                r.at("char_values").get<std::vector<std::vector<std::string>>>();
            if (r.contains("expected")) {
                const auto& e = r.at("expected");
                if (e.contains("enabled"))
                    cr.expected.enabled = e.at("enabled").get<std::map<std::string, bool>>();
                if (e.contains("cleft_corrections"))
                    cr.expected.cleft =
                        e.at("cleft_corrections").get<std::map<std::string, std::string>>();
                if (e.contains("s"))
                    cr.expected.s = e.at("s").get<std::map<std::string, std::string>>();
            }
            c.realizations.push_back(std::move(cr));
        }
        if (c.realizations.empty())
            throw AlgebraError("case file has no realizations");
        return c;
    }

    /// Braiding matrix of realization i, q_kj = chi_j(g_k).
    BraidingMatrix braiding_of(std::size_t i) const
    {
        const CaseRealization& cr = realizations.at(i);
        if (cr.char_values.size() != 2)
            throw AlgebraError("expected two characters (rank-2 case)");
        std::vector<std::vector<CycNum>> cv;
        for (const auto& row : cr.char_values) {
            std::vector<CycNum> pr;
            for (const auto& s : row)
                pr.push_back(parse_cyc(s));
            cv.push_back(std::move(pr));
        }
        Realization tmp;
        tmp.group_orders = cr.group_orders;
        tmp.char_values = cv;
        BraidingMatrix b;
        b.theta = 2;
        b.q = {{CycNum(1L), CycNum(1L)}, {CycNum(1L), CycNum(1L)}};
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t jj = 0; jj < 2; ++jj)
                b.q[k][jj] = tmp.chi(jj, cr.grouplikes.at(k));
        return b;
    }

    LiftingCase build(std::size_t i) const
    {
        const CaseRealization& cr = realizations.at(i);
        BraidingMatrix b = braiding_of(i);
        b.validate();
        if (!(b.q[0][0] == diag_v1) || !(b.q[1][1] == diag_v2) ||
            !(b.q[0][1] * b.q[1][0] == diag_edge))
            throw AlgebraError("realization braiding does not match the case diagram");

        LiftingCase lc;
        lc.id = id;
        lc.gb_bound = gb_bound;
        lc.ctx.bc.fc.theta = 2;
        lc.ctx.bc.fc.order = WordOrder::natural(2);
        if (precedence == "x2<x1")
            lc.ctx.bc.fc.order.rank = {1, 0};
        lc.ctx.bc.braiding = b;

        Realization real;
        real.braiding = b;
        real.group_orders = cr.group_orders;
        real.grouplikes = cr.grouplikes;
        for (const auto& row : cr.char_values) {
            std::vector<CycNum> pr;
            for (const auto& s : row)
                pr.push_back(parse_cyc(s));
            real.char_values.push_back(std::move(pr));
        }
        real.validate();
        lc.ctx.real = std::move(real);

        for (const auto& r : rels) {
            CaseRelation rel;
            rel.name = r.name;
            rel.lambda_name = r.lambda;
            rel.base = parse_relation(r.base, lc.ctx);
            rel.power = r.power;
            rel.stratum = r.stratum;
            lc.rels.push_back(std::move(rel));
        }
        configure_lambdas(lc);
        return lc;
    }
};

} // namespace nichols::catalog
