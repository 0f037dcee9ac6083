// Batch front-end for the submodkit analyses: parses one input file, runs
// the requested checks, and emits a text or JSON report.
//
// Exit codes: 0 = every asserted inequality holds, 1 = at least one
// violated (the report names it), 2 = input or usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "submodkit/submodkit.hpp"

namespace sk = submodkit;

namespace {

struct RunConfig {
    std::string subcommand;
    std::string input_path;
    std::optional<int> tau;
    std::optional<int> d;
    std::optional<int> k;
    std::optional<double> alpha;
    std::optional<double> r;
    double tol = sk::kDefaultTol;
    bool json = false;
    std::optional<std::uint64_t> seed;
    bool oracle = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sk::Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sk::SetFunction load_setfn(const std::string& path) {
    std::istringstream in(read_file(path));
    return sk::parse_set_function(in);
}

sk::JointPmf load_pmf(const std::string& path) {
    std::istringstream in(read_file(path));
    return sk::parse_joint_pmf(in);
}

sk::CodeSet load_codeset(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> warnings;
    sk::CodeSet A = sk::parse_code_set(in, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return A;
}

std::vector<sk::Point> load_points(const std::string& path) {
    std::istringstream in(read_file(path));
    return sk::parse_points(in);
}

std::string fmt_num(double v) {
    std::ostringstream oss;
    oss.precision(12);
    oss << v;
    return oss.str();
}

sk::InequalityCheck make_check(std::string name, double lhs, double rhs, bool holds) {
    sk::InequalityCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = lhs - rhs;
    c.holds = holds;
    return c;
}

sk::PredicateEntry predicate_entry(const std::string& name, const sk::GroundSet& ground,
                                   const sk::PredicateVerdict& v) {
    sk::PredicateEntry e;
    e.name = name;
    e.verdict = v;
    if (v.witness) e.witness_text = sk::render_witness(ground, *v.witness);
    return e;
}

void add_setfn_predicates(sk::Document& doc, const sk::SetFunction& f, double tol) {
    doc.predicates.push_back(predicate_entry("submodular", f.ground(), sk::is_submodular(f, tol)));
    doc.predicates.push_back(
        predicate_entry("supermodular", f.ground(), sk::is_supermodular(f, tol)));
    doc.predicates.push_back(
        predicate_entry("monotone_increasing", f.ground(), sk::is_monotone_increasing(f, tol)));
    doc.predicates.push_back(
        predicate_entry("subadditive", f.ground(), sk::is_subadditive(f, tol)));
    doc.predicates.push_back(
        predicate_entry("rank_function", f.ground(), sk::is_rank_function(f, tol)));
}

sk::ScalarTransform transform_from_flags(const RunConfig& cfg) {
    if (cfg.alpha) return sk::ScalarTransform::clipped_power(*cfg.alpha);
    if (cfg.r) return sk::ScalarTransform::exp2_scaled(*cfg.r);
    return sk::ScalarTransform::identity();
}

void add_pmf_sequences(sk::Document& doc, const sk::JointPmf& p, double rate, double tol) {
    using NS = sk::NamedSequence;
    for (NS which : {NS::h, NS::l, NS::m, NS::r_seq, NS::s, NS::u, NS::v, NS::w}) {
        try {
            doc.sequences.push_back({sk::to_string(which),
                                     sk::corollary3_sequences(p, rate, which, tol)});
        } catch (const sk::PreconditionError& e) {
            doc.notes.push_back("sequence " + sk::to_string(which) + " skipped: " + e.what());
        }
    }
}

void add_oracle_setfn(sk::Document& doc, const sk::SetFunction& f, double tol) {
    if (f.n() > 12) {
        doc.notes.push_back("oracle cross-check skipped: n > 12");
        return;
    }
    const bool local = sk::is_submodular(f, tol).holds;
    const bool brute = sk::oracle::submodularity_by_definition(f, tol).holds;
    doc.checks.push_back(make_check("oracle_submodularity_agreement", local ? 1 : 0,
                                    brute ? 1 : 0, local == brute));
}

void add_oracle_codeset(sk::Document& doc, const sk::CodeSet& A, int tau) {
    if (A.dimension() > 10) {
        doc.notes.push_back("oracle cross-check skipped: n > 10");
        return;
    }
    const sk::GraphStats fast = sk::edge_counts(A, tau);
    const sk::GraphStats brute = sk::oracle::brute_pairs(A, tau);
    for (int d = 1; d <= tau; ++d) {
        const std::size_t i = static_cast<std::size_t>(d - 1);
        doc.checks.push_back(make_check(
            "oracle_edges_d" + std::to_string(d), static_cast<double>(fast.edge_counts[i]),
            static_cast<double>(brute.edge_counts[i]),
            fast.edge_counts[i] == brute.edge_counts[i] &&
                fast.boundary_counts[i] == brute.boundary_counts[i]));
        const auto [md, ld] = sk::oracle::brute_md_ld(A, d);
        const sk::MdValue md_fast = sk::compute_md(A, d);
        const sk::MdValue ld_fast = sk::compute_ld(A, d);
        doc.checks.push_back(make_check("oracle_md_d" + std::to_string(d),
                                        static_cast<double>(md_fast.value),
                                        static_cast<double>(md.value),
                                        md_fast.value == md.value));
        doc.checks.push_back(make_check("oracle_ld_d" + std::to_string(d),
                                        static_cast<double>(ld_fast.value),
                                        static_cast<double>(ld.value),
                                        ld_fast.value == ld.value));
    }
}

// ---------------------------------------------------------------- subcommands

sk::Document run_check_setfn(const RunConfig& cfg) {
    const sk::SetFunction f = load_setfn(cfg.input_path);
    sk::Document doc;
    doc.type = "setfn";
    add_setfn_predicates(doc, f, cfg.tol);
    if (cfg.oracle) add_oracle_setfn(doc, f, cfg.tol);
    return doc;
}

sk::Document run_sequences(const RunConfig& cfg) {
    std::istringstream sniff(read_file(cfg.input_path));
    const sk::InputKind kind = sk::detect_input_kind(sniff);
    sk::Document doc;
    if (kind == sk::InputKind::set_function) {
        const sk::SetFunction f = load_setfn(cfg.input_path);
        doc.type = "setfn";
        const sk::ScalarTransform g = transform_from_flags(cfg);
        doc.params.emplace_back("g", g.describe());
        doc.sequences.push_back({"t_k", sk::tk_sequence(f, g, std::nullopt, cfg.tol)});
    } else if (kind == sk::InputKind::joint_pmf) {
        const sk::JointPmf p = load_pmf(cfg.input_path);
        doc.type = "pmf";
        const double rate = cfg.r.value_or(1.0);
        doc.params.emplace_back("r", fmt_num(rate));
        add_pmf_sequences(doc, p, rate, cfg.tol);
    } else {
        throw sk::DomainError("sequences needs a setfn or pmf input");
    }
    return doc;
}

sk::Document run_shearer(const RunConfig& cfg) {
    const sk::SetFunction f = load_setfn(cfg.input_path);
    const int n = f.n();
    const sk::Mask target = f.ground().full();

    sk::Document doc;
    doc.type = "setfn";

    std::optional<sk::SubsetFamily> family;
    int d = cfg.d.value_or(0);
    if (cfg.seed) {
        if (d == 0) d = 1;
        family = sk::oracle::random_cover_family(f.ground(), d, target, *cfg.seed);
        doc.params.emplace_back("family", "random cover, seed " + std::to_string(*cfg.seed));
    } else {
        const int k = cfg.k.value_or(n > 1 ? n - 1 : 1);
        if (k < 1 || k > n) throw sk::DomainError("--k out of range");
        std::vector<sk::Mask> members;
        for (sk::Mask t = sk::first_k_subset(k); t != 0; t = sk::next_k_subset(t, n)) {
            members.push_back(t);
        }
        family = sk::SubsetFamily(f.ground(), std::move(members));
        if (d == 0) d = static_cast<int>(sk::binom_u64(n - 1, k - 1));
        doc.params.emplace_back("family", "all " + std::to_string(k) + "-subsets");
    }
    doc.params.emplace_back("d", std::to_string(d));

    const sk::ShearerReport r = sk::shearer_check(f, *family, d, target, cfg.tol);
    doc.checks.push_back(make_check(std::string("shearer_part_") + r.part, r.lhs, r.rhs, r.holds));
    return doc;
}

sk::Document run_han(const RunConfig& cfg) {
    const sk::JointPmf p = load_pmf(cfg.input_path);
    sk::Document doc;
    doc.type = "pmf";
    const sk::HanReport r = sk::han_check(p);
    doc.checks.push_back(make_check("han", r.lhs, r.rhs, r.holds));
    return doc;
}

sk::Document run_projections(const RunConfig& cfg) {
    const std::vector<sk::Point> points = load_points(cfg.input_path);
    const int n = static_cast<int>(points.front().size());
    sk::Document doc;
    doc.type = "points";
    const int k = cfg.k.value_or(n - 1);
    const sk::ProjectionReport r = sk::projection_bound(points, k, cfg.tol);
    doc.projection = r;
    doc.projection_k = k;
    doc.checks.push_back(make_check("projection_bound_k" + std::to_string(k),
                                    static_cast<double>(r.cardinality), r.bound, r.holds));
    if (cfg.oracle) {
        const auto brute = sk::oracle::brute_projection(points, k);
        doc.checks.push_back(make_check("oracle_projection_sizes", 0, 0,
                                        brute == r.projection_sizes));
    }
    return doc;
}

sk::Document run_hypercube(const RunConfig& cfg) {
    const sk::CodeSet A = load_codeset(cfg.input_path);
    const int tau = cfg.tau.value_or(std::min(A.dimension(), 3));
    sk::Document doc;
    doc.type = "codeset";
    doc.hypercube = sk::analyze_code_set(A, tau, cfg.tol);
    if (cfg.oracle) add_oracle_codeset(doc, A, tau);
    return doc;
}

sk::Document run_influence(const RunConfig& cfg) {
    const sk::CodeSet A = load_codeset(cfg.input_path);
    const int d = cfg.d.value_or(1);
    sk::Document doc;
    doc.type = "codeset";
    doc.params.emplace_back("d", std::to_string(d));
    const sk::InfluenceBounds b = sk::influence_bounds(A, d, std::nullopt, cfg.tol);
    doc.checks.push_back(make_check("influence_vs_default_lb", b.exact, b.default_lb,
                                    sk::holds_geq(b.exact, b.default_lb, cfg.tol)));
    if (b.refined_lb) {
        doc.checks.push_back(make_check("influence_vs_refined_lb", b.exact, *b.refined_lb,
                                        sk::holds_geq(b.exact, *b.refined_lb, cfg.tol)));
    }
    return doc;
}

sk::Document run_report(const RunConfig& cfg) {
    std::istringstream sniff(read_file(cfg.input_path));
    const sk::InputKind kind = sk::detect_input_kind(sniff);
    sk::Document doc;
    switch (kind) {
        case sk::InputKind::set_function: {
            const sk::SetFunction f = load_setfn(cfg.input_path);
            doc.type = "setfn";
            add_setfn_predicates(doc, f, cfg.tol);
            try {
                doc.sequences.push_back(
                    {"t_k", sk::tk_sequence(f, transform_from_flags(cfg), std::nullopt, cfg.tol)});
            } catch (const sk::PreconditionError& e) {
                doc.notes.push_back(std::string("t_k skipped: ") + e.what());
            }
            const double alpha = cfg.alpha.value_or(1.0);
            for (int k = 1; k < f.n(); ++k) {
                try {
                    const sk::Corollary2Report c2 = sk::corollary2_check(f, alpha, k, cfg.tol);
                    doc.checks.push_back(make_check("generalized_han_k" + std::to_string(k),
                                                    c2.lhs, c2.rhs, c2.holds));
                } catch (const sk::PreconditionError& e) {
                    doc.notes.push_back("generalized_han skipped: " + std::string(e.what()));
                    break;
                }
            }
            if (cfg.oracle) add_oracle_setfn(doc, f, cfg.tol);
            break;
        }
        case sk::InputKind::joint_pmf: {
            const sk::JointPmf p = load_pmf(cfg.input_path);
            doc.type = "pmf";
            const sk::HanReport r = sk::han_check(p);
            doc.checks.push_back(make_check("han", r.lhs, r.rhs, r.holds));
            add_pmf_sequences(doc, p, cfg.r.value_or(1.0), cfg.tol);
            if (p.has_integer_values() && p.var_count() >= 2) {
                try {
                    std::vector<sk::JointPmf> marginals;
                    for (int i = 0; i < p.var_count(); ++i) {
                        marginals.push_back(sk::marginalize(p, sk::Mask{1} << i));
                    }
                    const int k = cfg.k.value_or(p.var_count() - 1);
                    for (const auto& c :
                         sk::sum_epi_checks(marginals, k, std::nullopt, 1, 0, cfg.tol)) {
                        doc.checks.push_back(c);
                    }
                } catch (const sk::Error& e) {
                    doc.notes.push_back("sum-entropy checks skipped: " + std::string(e.what()));
                }
            }
            break;
        }
        case sk::InputKind::code_set: {
            const sk::CodeSet A = load_codeset(cfg.input_path);
            doc.type = "codeset";
            const int tau = cfg.tau.value_or(std::min(A.dimension(), 3));
            doc.hypercube = sk::analyze_code_set(A, tau, cfg.tol);
            if (cfg.oracle) add_oracle_codeset(doc, A, tau);
            break;
        }
        case sk::InputKind::points: {
            const std::vector<sk::Point> points = load_points(cfg.input_path);
            doc.type = "points";
            const int n = static_cast<int>(points.front().size());
            for (int k = 1; k < n; ++k) {
                const sk::ProjectionReport r = sk::projection_bound(points, k, cfg.tol);
                doc.checks.push_back(make_check("projection_bound_k" + std::to_string(k),
                                                static_cast<double>(r.cardinality), r.bound,
                                                r.holds));
            }
            break;
        }
    }
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"submodkit: verification toolkit for submodular set functions, "
                 "entropy inequalities, and hypercube confusion-graph bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input_path, "input file")->required();
        sub->add_option("--tau", cfg.tau, "maximum Hamming distance");
        sub->add_option("--d", cfg.d, "distance / cover multiplicity");
        sub->add_option("--k", cfg.k, "subset size");
        sub->add_option("--alpha", cfg.alpha, "power exponent (>= 1)");
        sub->add_option("--r", cfg.r, "exponential rate");
        sub->add_option("--tol", cfg.tol, "inequality slack tolerance");
        sub->add_flag("--json", cfg.json, "emit JSON instead of text");
        sub->add_option("--seed", cfg.seed, "seed for randomized generation");
        sub->add_flag("--oracle", cfg.oracle, "force brute-force oracle cross-checks");
    };

    for (const char* name : {"check-setfn", "sequences", "shearer", "han", "projections",
                             "hypercube", "influence", "report"}) {
        add_common(app.add_subcommand(name));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "report") cfg.json = true;  // report is always a JSON document

    try {
        sk::Document doc;
        if (cfg.subcommand == "check-setfn") doc = run_check_setfn(cfg);
        else if (cfg.subcommand == "sequences") doc = run_sequences(cfg);
        else if (cfg.subcommand == "shearer") doc = run_shearer(cfg);
        else if (cfg.subcommand == "han") doc = run_han(cfg);
        else if (cfg.subcommand == "projections") doc = run_projections(cfg);
        else if (cfg.subcommand == "hypercube") doc = run_hypercube(cfg);
        else if (cfg.subcommand == "influence") doc = run_influence(cfg);
        else doc = run_report(cfg);

        std::cout << (cfg.json ? sk::to_json(doc) : sk::to_text(doc));
        return sk::document_holds(doc) ? 0 : 1;
    } catch (const sk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
