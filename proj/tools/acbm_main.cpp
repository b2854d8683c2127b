#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acbm/analysis.hpp"
#include "acbm/errors.hpp"

namespace {

using namespace acbm;

Rational parse_rational_arg(const std::string& text, const char* what) {
    const std::optional<Rational> r = parse_rational(text);
    if (!r) throw ValidationError(std::string(what) + ": bad rational '" + text + "'");
    return *r;
}

std::vector<PotentialRequest> collect_potentials(const std::vector<std::string>& ks,
                                                 const std::vector<std::string>& vectors) {
    std::vector<PotentialRequest> pots;
    for (const std::string& k : ks)
        pots.push_back({parse_rational_arg(k, "--potential"), {}});
    for (const std::string& arg : vectors) {
        PotentialRequest req;
        std::size_t start = 0;
        while (start <= arg.size()) {
            const std::size_t comma = arg.find(',', start);
            const std::string item = arg.substr(start, comma - start);
            req.vector.push_back(parse_rational_arg(item, "--potential-vector"));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        pots.push_back(std::move(req));
    }
    return pots;
}

int run_validate(const std::string& path) {
    const ManifoldDescription desc = load_manifold(path);
    const StructureVerdict verdict = validate_structure(build_structure(desc));
    for (const AxiomCheck& ax : verdict.axioms) {
        std::cout << ax.name << ": " << (ax.passed ? "pass" : "FAIL");
        if (!ax.passed && !ax.witness.empty()) {
            std::cout << " at (";
            for (std::size_t i = 0; i < ax.witness.size(); ++i)
                std::cout << (i ? "," : "") << ax.witness[i];
            std::cout << ")";
        }
        std::cout << "\n";
    }
    std::cout << (verdict.valid ? "structure: valid" : "structure: INVALID") << "\n";
    return verdict.valid ? 0 : 1;
}

int run_analyze(const ManifoldDescription& desc, const std::vector<PotentialRequest>& pots,
                const std::string& format) {
    const AnalysisReport rep = run_analysis(desc, pots);
    std::cout << (format == "machine" ? render_machine(rep) : render_text(rep));
    return rep.all_checks_passed() ? 0 : 1;
}

int run_check(const std::string& name, const std::string& path) {
    const ManifoldDescription desc = load_manifold(path);
    const AlmostContactBMetricStructure s = build_structure(desc);
    const StructureVerdict verdict = validate_structure(s);
    if (!verdict.valid) {
        std::cerr << "error: the structure axioms fail; run `validate` for details\n";
        return 2;
    }

    const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
    CurvatureData curv = curvature(s.algebra, s.g, conn);
    ricci_data(s.algebra, s.g, s.phi, associated_metric(s), curv);

    bool holds = false;
    if (name == "sasaki_like") {
        holds = is_sasaki_like(s, conn).sasaki_like;
    } else if (name == "cosymplectic") {
        holds = is_cosymplectic(fundamental_tensor(s, conn));
    } else {
        const PredicateCatalogue cat = evaluate_predicates(s, conn, curv);
        const PredicateVerdict* all[] = {&cat.parallelism.locally_symmetric,
                                         &cat.parallelism.eta_parallel,
                                         &cat.parallelism.parallel_along_xi,
                                         &cat.parallelism.cyclic_parallel,
                                         &cat.parallelism.codazzi,
                                         &cat.r_xi_action,
                                         &cat.phi_symmetry_local,
                                         &cat.phi_symmetry_global,
                                         &cat.pseudo_ricci_symmetric,
                                         &cat.special_weakly_ricci_symmetric,
                                         &cat.q_dot_r};
        const PredicateVerdict* found = nullptr;
        for (const PredicateVerdict* v : all)
            if (v->name == name) found = v;
        if (!found) {
            std::cerr << "error: unknown predicate '" << name << "'; one of:\n"
                      << "  sasaki_like cosymplectic";
            for (const PredicateVerdict* v : all) std::cerr << " " << v->name;
            std::cerr << "\n";
            return 2;
        }
        if (!found->applicable) {
            std::cerr << "error: " << name << " is not applicable here (vanishing Ricci tensor)\n";
            return 2;
        }
        holds = found->holds;
    }
    std::cout << name << ": " << (holds ? "true" : "false") << "\n";
    return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic analyzer for left-invariant almost contact B-metric structures"};
    app.require_subcommand(1);

    std::string validate_file;
    CLI::App* validate = app.add_subcommand("validate", "check the structure axioms of a file");
    validate->add_option("file", validate_file, "manifold description")->required();

    std::string analyze_file, analyze_format = "text";
    std::vector<std::string> analyze_ks, analyze_vectors;
    CLI::App* analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
    analyze->add_option("file", analyze_file, "manifold description")->required();
    analyze->add_option("--potential", analyze_ks, "soliton potential v = k xi (repeatable)");
    analyze->add_option("--potential-vector", analyze_vectors,
                        "potential as comma-separated components (repeatable)");
    analyze->add_option("--format", analyze_format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string example_name, example_p = "0", example_q = "0", example_format = "text";
    std::vector<std::string> example_ks, example_vectors;
    bool example_emit = false, example_analyze = false;
    CLI::App* example = app.add_subcommand("example", "emit or analyze a built-in example");
    example->add_option("name", example_name, "example family (sasaki5)")->required();
    example->add_option("--p", example_p, "family parameter p (rational)");
    example->add_option("--q", example_q, "family parameter q (rational)");
    CLI::Option* emit_flag = example->add_flag("--emit", example_emit, "print the description");
    example->add_flag("--analyze", example_analyze, "run the analysis pipeline")
        ->excludes(emit_flag);
    example->add_option("--potential", example_ks, "soliton potential v = k xi (repeatable)");
    example->add_option("--potential-vector", example_vectors,
                        "potential as comma-separated components (repeatable)");
    example->add_option("--format", example_format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string check_name, check_file;
    CLI::App* check = app.add_subcommand("check", "evaluate one predicate; exit 0 iff it holds");
    check->add_option("predicate", check_name, "predicate name")->required();
    check->add_option("file", check_file, "manifold description")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return run_validate(validate_file);
        if (*analyze)
            return run_analyze(load_manifold(analyze_file),
                               collect_potentials(analyze_ks, analyze_vectors), analyze_format);
        if (*example) {
            if (example_name != "sasaki5") {
                std::cerr << "error: unknown example '" << example_name << "' (try sasaki5)\n";
                return 2;
            }
            const ManifoldDescription desc = example_sasaki5(
                parse_rational_arg(example_p, "--p"), parse_rational_arg(example_q, "--q"));
            if (example_analyze)
                return run_analyze(desc, collect_potentials(example_ks, example_vectors),
                                   example_format);
            std::cout << serialize_manifold(desc);
            return 0;
        }
        if (*check) return run_check(check_name, check_file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
