#include "submodkit/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace submodkit {

using ordered_json = nlohmann::ordered_json;

HypercubeAnalysis analyze_code_set(const CodeSet& A, int tau, double tol) {
    HypercubeAnalysis out;
    out.n = A.dimension();
    out.size = A.size();
    out.tau = tau;
    out.stats = edge_counts(A, tau);
    for (int d = 1; d <= tau; ++d) {
        out.per_d.push_back(bound_report(A, d, std::nullopt, tol));
        out.influence_per_d.push_back(influence_bounds(A, d, std::nullopt, tol));
    }
    out.totals = total_edge_bound(A, tau, tol);
    if (out.n <= 24) out.d1 = d1_entropy_identity(A, tol);
    return out;
}

namespace {

ordered_json check_json(const InequalityCheck& c) {
    ordered_json j;
    j["name"] = c.name;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["slack"] = c.slack;
    j["holds"] = c.holds;
    return j;
}

ordered_json predicate_json(const PredicateEntry& p) {
    ordered_json j;
    j["name"] = p.name;
    j["holds"] = p.verdict.holds;
    j["worst_violation"] = p.verdict.worst_violation;
    if (!p.witness_text.empty()) j["witness"] = p.witness_text;
    return j;
}

ordered_json sequence_json(const SequenceEntry& s) {
    ordered_json j;
    j["name"] = s.name;
    j["values"] = s.report.values;
    j["direction_claimed"] = to_string(s.report.direction_claimed);
    j["holds"] = s.report.holds;
    j["worst_k"] = s.report.worst_k;
    j["worst_slack"] = s.report.worst_slack;
    j["direction_measured"] = to_string(s.report.direction_measured);
    return j;
}

ordered_json hypercube_json(const HypercubeAnalysis& h) {
    ordered_json j;
    j["n"] = h.n;
    j["size"] = h.size;
    j["tau"] = h.tau;
    ordered_json per_d = ordered_json::array();
    for (std::size_t i = 0; i < h.per_d.size(); ++i) {
        const BoundReport& b = h.per_d[i];
        ordered_json e;
        e["d"] = b.d;
        e["E_d"] = h.stats.edge_counts[i];
        e["B_d"] = h.stats.boundary_counts[i];
        e["m_d"] = b.m_d;
        e["l_d"] = b.l_d;
        e["l_used"] = b.l_used;
        e["m_vacuous"] = b.m_vacuous;
        e["l_vacuous"] = b.l_vacuous;
        if (b.refined) e["refined"] = *b.refined;
        else e["refined"] = nullptr;
        e["default"] = b.default_bound;
        e["trivial"] = b.trivial;
        e["useful"] = b.useful;
        e["holds"] = b.holds;
        if (i < h.influence_per_d.size()) {
            const InfluenceBounds& inf = h.influence_per_d[i];
            e["influence"] = inf.exact;
            if (inf.refined_lb) e["refined_lb"] = *inf.refined_lb;
            else e["refined_lb"] = nullptr;
            e["default_lb"] = inf.default_lb;
            e["influence_holds"] = inf.holds;
        }
        per_d.push_back(std::move(e));
    }
    j["per_d"] = std::move(per_d);
    ordered_json totals;
    totals["edges"] = h.totals.exact_total;
    totals["sum_form"] = h.totals.sum_form;
    if (h.totals.entropy_form) totals["entropy_form"] = *h.totals.entropy_form;
    else totals["entropy_form"] = nullptr;
    totals["holds"] = h.totals.holds;
    j["totals"] = std::move(totals);
    if (h.d1) {
        ordered_json d1;
        d1["lhs"] = h.d1->lhs;
        d1["rhs"] = h.d1->rhs;
        d1["holds"] = h.d1->holds;
        j["d1_identity"] = std::move(d1);
    }
    return j;
}

ordered_json projection_json(const ProjectionReport& p, int k) {
    ordered_json j;
    j["k"] = k;
    j["cardinality"] = p.cardinality;
    j["projection_sizes"] = p.projection_sizes;
    j["bound"] = p.bound;
    j["holds"] = p.holds;
    j["rate"] = p.rate;
    j["rate_mean"] = p.rate_mean;
    return j;
}

}  // namespace

std::string to_json(const Document& doc) {
    ordered_json j;
    j["type"] = doc.type;
    if (!doc.params.empty()) {
        ordered_json params;
        for (const auto& [k, v] : doc.params) params[k] = v;
        j["params"] = std::move(params);
    }
    if (!doc.notes.empty()) j["notes"] = doc.notes;
    if (!doc.predicates.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& p : doc.predicates) arr.push_back(predicate_json(p));
        j["predicates"] = std::move(arr);
    }
    if (!doc.sequences.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& s : doc.sequences) arr.push_back(sequence_json(s));
        j["sequences"] = std::move(arr);
    }
    if (!doc.checks.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : doc.checks) arr.push_back(check_json(c));
        j["checks"] = std::move(arr);
    }
    if (doc.hypercube) j["hypercube"] = hypercube_json(*doc.hypercube);
    if (doc.projection) j["projection"] = projection_json(*doc.projection, doc.projection_k);
    return j.dump(2) + "\n";
}

namespace {

std::string fmt(double v) {
    std::ostringstream oss;
    oss << std::setprecision(12) << v;
    return oss.str();
}

void text_checks(std::ostream& out, const std::vector<InequalityCheck>& checks) {
    std::size_t width = 4;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    out << std::left << std::setw(static_cast<int>(width) + 2) << "name"
        << std::right << std::setw(18) << "lhs" << std::setw(18) << "rhs"
        << std::setw(18) << "slack" << "  verdict\n";
    for (const auto& c : checks) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << c.name
            << std::right << std::setw(18) << fmt(c.lhs) << std::setw(18) << fmt(c.rhs)
            << std::setw(18) << fmt(c.slack) << "  " << (c.holds ? "holds" : "VIOLATED")
            << "\n";
    }
}

}  // namespace

std::string to_text(const Document& doc) {
    std::ostringstream out;
    out << "== " << doc.type << " report ==\n";
    for (const auto& [k, v] : doc.params) out << k << " = " << v << "\n";
    for (const auto& note : doc.notes) out << "note: " << note << "\n";

    if (!doc.predicates.empty()) {
        out << "\npredicates:\n";
        for (const auto& p : doc.predicates) {
            out << "  " << std::left << std::setw(22) << p.name
                << (p.verdict.holds ? "holds" : "fails")
                << "  worst_violation=" << fmt(p.verdict.worst_violation);
            if (!p.witness_text.empty()) out << "  witness: " << p.witness_text;
            out << "\n";
        }
    }

    if (!doc.sequences.empty()) {
        out << "\nsequences:\n";
        for (const auto& s : doc.sequences) {
            out << "  " << s.name << " [" << to_string(s.report.direction_claimed)
                << (s.report.holds ? ", holds" : ", VIOLATED") << "]";
            out << " values:";
            for (double v : s.report.values) out << " " << fmt(v);
            out << "\n";
        }
    }

    if (!doc.checks.empty()) {
        out << "\n";
        text_checks(out, doc.checks);
    }

    if (doc.hypercube) {
        const auto& h = *doc.hypercube;
        out << "\nhypercube: n=" << h.n << " size=" << h.size << " tau=" << h.tau << "\n";
        out << std::left << std::setw(4) << "d" << std::right << std::setw(10) << "E_d"
            << std::setw(10) << "B_d" << std::setw(8) << "m_d" << std::setw(8) << "l_d"
            << std::setw(16) << "refined" << std::setw(16) << "default"
            << std::setw(14) << "trivial" << std::setw(8) << "useful"
            << std::setw(13) << "influence" << "  verdict\n";
        for (std::size_t i = 0; i < h.per_d.size(); ++i) {
            const auto& b = h.per_d[i];
            out << std::left << std::setw(4) << b.d << std::right
                << std::setw(10) << h.stats.edge_counts[i]
                << std::setw(10) << h.stats.boundary_counts[i]
                << std::setw(8) << b.m_d << std::setw(8) << b.l_d
                << std::setw(16) << (b.refined ? fmt(*b.refined) : std::string("-"))
                << std::setw(16) << fmt(b.default_bound)
                << std::setw(14) << fmt(b.trivial)
                << std::setw(8) << (b.useful ? "yes" : "no")
                << std::setw(13) << fmt(h.influence_per_d[i].exact)
                << "  " << (b.holds && h.influence_per_d[i].holds ? "holds" : "VIOLATED")
                << "\n";
        }
        out << "totals: edges=" << h.totals.exact_total
            << " sum_form=" << fmt(h.totals.sum_form);
        if (h.totals.entropy_form) out << " entropy_form=" << fmt(*h.totals.entropy_form);
        out << " " << (h.totals.holds ? "holds" : "VIOLATED") << "\n";
        if (h.d1) {
            out << "d1 identity: lhs=" << fmt(h.d1->lhs) << " rhs=" << fmt(h.d1->rhs)
                << " " << (h.d1->holds ? "holds" : "VIOLATED") << "\n";
        }
    }

    if (doc.projection) {
        const auto& p = *doc.projection;
        out << "\nprojection bound (k=" << doc.projection_k << "): |P|=" << p.cardinality
            << " bound=" << fmt(p.bound) << " rate=" << fmt(p.rate)
            << " mean_rate=" << fmt(p.rate_mean) << " "
            << (p.holds ? "holds" : "VIOLATED") << "\n";
        out << "projection sizes:";
        for (auto m : p.projection_sizes) out << " " << m;
        out << "\n";
    }
    return out.str();
}

bool document_holds(const Document& doc) {
    // Predicate verdicts are descriptive, not asserted inequalities, so
    // they do not gate the exit code.
    for (const auto& s : doc.sequences) {
        if (s.report.direction_claimed != Direction::none && !s.report.holds) return false;
    }
    for (const auto& c : doc.checks) {
        if (!c.holds) return false;
    }
    if (doc.hypercube) {
        const auto& h = *doc.hypercube;
        for (const auto& b : h.per_d) {
            if (!b.holds) return false;
        }
        for (const auto& inf : h.influence_per_d) {
            if (!inf.holds) return false;
        }
        if (!h.totals.holds) return false;
        if (h.d1 && !h.d1->holds) return false;
    }
    if (doc.projection && !doc.projection->holds) return false;
    return true;
}

}  // namespace submodkit
