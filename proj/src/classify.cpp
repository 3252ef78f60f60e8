#include <algorithm>
#include <stdexcept>

#include "homhom/recognizers.hpp"

namespace homhom {

namespace {

    std::string describe(const UnionOfCopies& u)
    {
        std::string s = to_string(u.family);
        return u.copies == 1 ? s : std::to_string(u.copies) + "*" + s;
    }

    std::string describe(const ChhClassification& c)
    {
        if (c.kind == ChhCase::Connected) {
            std::string s = chh_family_name(c.connected->family);
            if (c.connected->param > 0)
                s += "(" + std::to_string(c.connected->param) + ")";
            return s;
        }
        std::string s = "case-" + chh_case_label(c.kind);
        if (c.n > 0)
            s += "(" + std::to_string(c.n) + ")";
        return s;
    }

    // Reasons a connected graph cannot be C-MH.
    std::optional<std::string> not_cmh_reason(const Graph& h)
    {
        if (auto u = classify_cii(h)) {
            switch (u->family.tag) {
            case FamilyTag::LineKss:
                return "line graph of K_{s,s}, s > 2";
            case FamilyTag::Petersen:
                return "Petersen graph";
            case FamilyTag::Clebsch:
                return "Clebsch graph";
            default:
                break;
            }
        }
        // Complete multipartite with at least three parts, one of size > 1.
        const Graph co = complement(h);
        auto comps = connected_components(co);
        bool cliques = true;
        bool big_part = false;
        for (VertexSet c : comps) {
            cliques = cliques && is_complete(induced_subgraph(co, c).graph);
            big_part = big_part || c.size() > 1;
        }
        if (cliques && comps.size() >= 3 && big_part)
            return "complete multipartite with at least three parts, not complete";
        return std::nullopt;
    }

    struct Recognized {
        std::optional<UnionOfCopies> cii;
        bool cmi;
        bool chi;
        std::optional<ChhClassification> chh;
    };

    void add_known_facts(const Graph& g, const Recognized& r, ClassEntry& e)
    {
        auto imply = [&](bool premise, const std::string& fact) {
            if (premise) {
                e.known = true;
                e.facts.push_back(fact);
            }
        };
        if (e.query == kCIH) {
            imply(r.cii.has_value(), "C-II implies C-IH");
            imply(r.cmi, "C-MI implies C-IH");
            imply(r.chh.has_value(), "C-HH implies C-IH");
            if (auto mc = is_multiclaw(g)) {
                e.known = true;
                e.facts.push_back("generalised multiclaw (IH, hence C-IH)");
            }
        } else if (e.query == kCMH) {
            imply(r.cmi, "C-MI implies C-MH");
            imply(r.chh.has_value(), "C-HH implies C-MH");
            if (e.known)
                return;
            for (VertexSet c : connected_components(g)) {
                if (auto why = not_cmh_reason(induced_subgraph(g, c).graph)) {
                    e.known = false;
                    e.facts.push_back("component is not C-MH: " + *why);
                    return;
                }
            }
            if (r.cii) {
                e.known = false;
                e.facts.push_back("a C-II graph is C-MH only when it is C-MI or C-HH");
            }
        }
    }

} // namespace

bool ClassEntry::mismatch() const
{
    if (!oracle)
        return false;
    std::optional<bool> claim;
    if (recognizer != Decision::OracleOnly)
        claim = recognizer == Decision::Yes;
    else
        claim = known;
    if (!claim)
        return false;
    if (!*oracle)
        return *claim; // a counterexample is conclusive even from a sampled run
    return oracle_exhaustive && !*claim;
}

bool ClassReport::mismatch() const
{
    return std::any_of(entries.begin(), entries.end(), [](const ClassEntry& e) { return e.mismatch(); });
}

const ClassEntry& ClassReport::at(const ClassQuery& q) const
{
    for (const auto& e : entries)
        if (e.query == q)
            return e;
    throw std::out_of_range("class " + class_name(q) + " not in report");
}

ClassReport classify(const Graph& g, const ClassifyOptions& opts)
{
    Recognized r{classify_cii(g), is_cmi(g), is_chi(g), is_chh(g)};
    ClassReport report;
    report.order = g.order();
    for (const auto& q : kConnectedClasses) {
        if (std::find(opts.classes.begin(), opts.classes.end(), q) == opts.classes.end())
            continue;
        ClassEntry e{q};
        if (q == kCII) {
            e.recognizer = r.cii ? Decision::Yes : Decision::No;
            if (r.cii)
                e.family = describe(*r.cii);
        } else if (q == kCMI) {
            e.recognizer = r.cmi ? Decision::Yes : Decision::No;
        } else if (q == kCHI) {
            e.recognizer = r.chi ? Decision::Yes : Decision::No;
        } else if (q == kCHH) {
            e.recognizer = r.chh ? Decision::Yes : Decision::No;
            if (r.chh)
                e.family = describe(*r.chh);
        } else {
            add_known_facts(g, r, e);
        }
        if (opts.run_oracle) {
            try {
                Verdict v = is_c_xy(g, q, opts.budget);
                e.oracle = v.holds;
                e.oracle_exhaustive = v.exhaustive;
                e.witness = v.witness;
            } catch (const BudgetExceeded& ex) {
                e.oracle_error = ex.what();
            }
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace homhom
