#include "acbm/analysis.hpp"

#include <algorithm>
#include <utility>

#include "acbm/errors.hpp"

namespace acbm {

namespace {

const char* classification_name(EinsteinLikeFit::Classification c) {
    switch (c) {
        case EinsteinLikeFit::Classification::Einstein: return "einstein";
        case EinsteinLikeFit::Classification::EtaEinstein: return "eta_einstein";
        case EinsteinLikeFit::Classification::EinsteinLike: return "einstein_like";
        default: return "none";
    }
}

std::string bool_word(bool b) { return b ? "true" : "false"; }
std::string pass_word(bool b) { return b ? "pass" : "fail"; }

std::string index_suffix(std::initializer_list<std::size_t> idx) {
    std::string s;
    for (std::size_t i : idx) s += "." + std::to_string(i);
    return s;
}

}  // namespace

bool AnalysisReport::all_checks_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const NamedCheck& c) { return c.passed; });
}

AnalysisReport run_analysis(const ManifoldDescription& desc,
                            const std::vector<PotentialRequest>& potentials) {
    AnalysisReport rep;
    rep.desc = desc;

    const AlmostContactBMetricStructure s = build_structure(desc);
    rep.structure = validate_structure(s);
    rep.checks.push_back({"structure_valid", rep.structure.valid});
    if (!rep.structure.valid) return rep;
    rep.downstream_skipped = false;
    rep.signature = s.g.sig();

    const std::size_t d = s.dim();
    const std::size_t n = s.n();
    const Rational two_n(2 * n);

    const ConnectionCoefficients conn = levi_civita(s.algebra, s.g);
    CurvatureData curv = curvature(s.algebra, s.g, conn);
    const MetricTensor g_tilde = associated_metric(s);
    ricci_data(s.algebra, s.g, s.phi, g_tilde, curv);

    rep.fundamental = fundamental_tensor(s, conn);
    rep.cosymplectic = is_cosymplectic(rep.fundamental);
    rep.sasaki = is_sasaki_like(s, conn);
    rep.f_class = rep.cosymplectic ? "F0" : rep.sasaki.sasaki_like ? "F4" : "other";
    rep.einstein = einstein_like_fit(curv.ricci, s.g, g_tilde, s.eta);

    const bool sasaki = rep.sasaki.sasaki_like;
    if (sasaki) {
        rep.checks.push_back({"sasaki_consequences", rep.sasaki.consequences_checked &&
                                                         rep.sasaki.consequence_failures.empty()});
        bool lee_ok = true;
        for (std::size_t i = 0; i < d; ++i)
            lee_ok = lee_ok && rep.fundamental.lee_theta[i] == -two_n * s.eta[i] &&
                     rep.fundamental.lee_theta_star[i] == 0 && rep.fundamental.lee_omega[i] == 0;
        rep.checks.push_back({"lee_forms", lee_ok});
        rep.checks.push_back({"tau_tilde_relation", curv.tau_tilde == -curv.tau_star + two_n});
        if (rep.einstein.consistent)
            rep.checks.push_back(
                {"einstein_scalar_relations",
                 einstein_scalar_relations(rep.einstein, curv.tau, curv.tau_tilde, n).all()});
    }

    std::vector<PotentialRequest> pots = potentials;
    if (pots.empty()) pots.push_back(PotentialRequest{Rational(1), {}});

    for (std::size_t idx = 0; idx < pots.size(); ++idx) {
        const std::string tag = "p" + std::to_string(idx);
        SolitonSection sec;
        if (pots[idx].k) {
            sec.k = pots[idx].k;
            sec.v.resize(d);
            for (std::size_t i = 0; i < d; ++i) sec.v[i] = *sec.k * s.xi[i];
        } else {
            if (pots[idx].vector.size() != d)
                throw DimensionMismatchError("potential vector length does not match DIM");
            sec.v = pots[idx].vector;
        }

        const Rational ev = s.eta_of(sec.v);
        sec.vertical = true;
        for (std::size_t i = 0; i < d; ++i)
            if (sec.v[i] != ev * s.xi[i]) {
                sec.vertical = false;
                break;
            }
        if (sec.vertical && !sec.k) sec.k = ev;

        if (sec.vertical && sasaki) {
            sec.vertical_report = vertical_potential_analysis(*sec.k, s, conn, curv.ricci);
            sec.fit = sec.vertical_report->fit;
            if (sec.fit.consistent)
                rep.checks.push_back(
                    {tag + ".vertical_report", sec.vertical_report->all_checks()});
        } else {
            sec.fit = soliton_fit(sec.v, s, conn, curv.ricci);
        }

        if (sasaki && sec.fit.consistent && sec.v == s.xi) {
            sec.cross = cross_check_fits(rep.einstein, sec.fit, n);
            rep.checks.push_back({tag + ".cross_relations", sec.cross->all()});
            sec.corollary = corollary_scalar_relations(sec.fit, curv.tau, curv.tau_tilde, n);
            rep.checks.push_back({tag + ".corollary", sec.corollary->all()});
            sec.closed_form_matches =
                nabla_rho_closed_form(sec.fit, s) == covariant_derivative(curv.ricci, conn);
            rep.checks.push_back({tag + ".nabla_rho_closed_form", *sec.closed_form_matches});
        }
        rep.solitons.push_back(std::move(sec));
    }

    rep.predicates = evaluate_predicates(s, conn, curv);
    if (sasaki && rep.einstein.consistent) {
        const bool einstein_b_c_zero =
            rep.einstein.classification == EinsteinLikeFit::Classification::Einstein;
        rep.equivalences =
            cross_predicate_consistency(rep.predicates, einstein_b_c_zero, true);
        rep.checks.push_back({"predicate_equivalences", rep.equivalences->all()});
        for (PredicateVerdict* v :
             {&rep.predicates.parallelism.locally_symmetric,
              &rep.predicates.parallelism.cyclic_parallel, &rep.predicates.parallelism.codazzi,
              &rep.predicates.r_xi_action, &rep.predicates.phi_symmetry_global,
              &rep.predicates.pseudo_ricci_symmetric,
              &rep.predicates.special_weakly_ricci_symmetric})
            v->einstein_equivalent = einstein_b_c_zero;
    }

    rep.curvature = std::move(curv);
    return rep;
}

std::string render_machine(const AnalysisReport& rep) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("dim", std::to_string(rep.desc.dim));
    if (!rep.desc.label.empty()) kv.emplace_back("label", rep.desc.label);
    kv.emplace_back("structure.valid", bool_word(rep.structure.valid));
    for (const AxiomCheck& ax : rep.structure.axioms)
        kv.emplace_back("structure.axiom." + ax.name, pass_word(ax.passed));
    for (const NamedCheck& c : rep.checks) kv.emplace_back("check." + c.name, pass_word(c.passed));

    if (!rep.downstream_skipped) {
        kv.emplace_back("structure.signature", std::to_string(rep.signature.plus) + "," +
                                                   std::to_string(rep.signature.minus) + "," +
                                                   std::to_string(rep.signature.zero));
        kv.emplace_back("structure.f_class", rep.f_class);
        kv.emplace_back("structure.sasaki_like", bool_word(rep.sasaki.sasaki_like));
        kv.emplace_back("structure.cosymplectic", bool_word(rep.cosymplectic));

        const std::size_t d = rep.desc.dim;
        for (std::size_t i = 0; i < d; ++i) {
            if (rep.fundamental.lee_theta[i] != 0)
                kv.emplace_back("lee.theta" + index_suffix({i}),
                                to_string(rep.fundamental.lee_theta[i]));
            if (rep.fundamental.lee_theta_star[i] != 0)
                kv.emplace_back("lee.theta_star" + index_suffix({i}),
                                to_string(rep.fundamental.lee_theta_star[i]));
            if (rep.fundamental.lee_omega[i] != 0)
                kv.emplace_back("lee.omega" + index_suffix({i}),
                                to_string(rep.fundamental.lee_omega[i]));
        }

        kv.emplace_back("curvature.tau", to_string(rep.curvature.tau));
        kv.emplace_back("curvature.tau_star", to_string(rep.curvature.tau_star));
        kv.emplace_back("curvature.tau_tilde", to_string(rep.curvature.tau_tilde));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (rep.curvature.ricci(i, j) != 0)
                    kv.emplace_back("curvature.ricci" + index_suffix({i, j}),
                                    to_string(rep.curvature.ricci(i, j)));
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t l = 0; l < d; ++l)
                        if (rep.curvature.riemann_cov(i, j, k, l) != 0)
                            kv.emplace_back("curvature.R" + index_suffix({i, j, k, l}),
                                            to_string(rep.curvature.riemann_cov(i, j, k, l)));
            }

        kv.emplace_back("einstein.consistent", bool_word(rep.einstein.consistent));
        if (rep.einstein.consistent) {
            kv.emplace_back("einstein.a", to_string(rep.einstein.a));
            kv.emplace_back("einstein.b", to_string(rep.einstein.b));
            kv.emplace_back("einstein.c", to_string(rep.einstein.c));
            kv.emplace_back("einstein.classification",
                            classification_name(rep.einstein.classification));
            kv.emplace_back("einstein.unique", bool_word(rep.einstein.unique));
        }

        for (std::size_t idx = 0; idx < rep.solitons.size(); ++idx) {
            const SolitonSection& sec = rep.solitons[idx];
            const std::string base = "soliton.p" + std::to_string(idx);
            if (sec.k) kv.emplace_back(base + ".k", to_string(*sec.k));
            kv.emplace_back(base + ".vertical", bool_word(sec.vertical));
            for (std::size_t i = 0; i < sec.v.size(); ++i)
                if (sec.v[i] != 0)
                    kv.emplace_back(base + ".v" + index_suffix({i}), to_string(sec.v[i]));
            kv.emplace_back(base + ".consistent", bool_word(sec.fit.consistent));
            if (sec.fit.consistent) {
                kv.emplace_back(base + ".lambda", to_string(sec.fit.lambda));
                kv.emplace_back(base + ".mu", to_string(sec.fit.mu));
                kv.emplace_back(base + ".nu", to_string(sec.fit.nu));
                kv.emplace_back(base + ".unique", bool_word(sec.fit.unique));
            }
        }

        const PredicateVerdict* verdicts[] = {&rep.predicates.parallelism.locally_symmetric,
                                              &rep.predicates.parallelism.eta_parallel,
                                              &rep.predicates.parallelism.parallel_along_xi,
                                              &rep.predicates.parallelism.cyclic_parallel,
                                              &rep.predicates.parallelism.codazzi,
                                              &rep.predicates.r_xi_action,
                                              &rep.predicates.phi_symmetry_local,
                                              &rep.predicates.phi_symmetry_global,
                                              &rep.predicates.pseudo_ricci_symmetric,
                                              &rep.predicates.special_weakly_ricci_symmetric,
                                              &rep.predicates.q_dot_r};
        for (const PredicateVerdict* v : verdicts) {
            if (!v->applicable) {
                kv.emplace_back("predicate." + v->name + ".applicable", "false");
                continue;
            }
            kv.emplace_back("predicate." + v->name, bool_word(v->holds));
        }
    }

    std::sort(kv.begin(), kv.end());
    std::string out;
    for (const auto& [key, value] : kv) out += key + " = " + value + "\n";
    return out;
}

std::string render_text(const AnalysisReport& rep) {
    std::string out;
    out += "manifold: " + (rep.desc.label.empty() ? std::string("(unlabeled)") : rep.desc.label) +
           "  [dim " + std::to_string(rep.desc.dim) + "]\n";

    out += "structure: ";
    out += rep.structure.valid ? "valid\n" : "INVALID\n";
    for (const AxiomCheck& ax : rep.structure.axioms) {
        if (ax.passed) continue;
        out += "  axiom failed: " + ax.name;
        if (!ax.witness.empty()) {
            out += " at (";
            for (std::size_t i = 0; i < ax.witness.size(); ++i)
                out += (i ? "," : "") + std::to_string(ax.witness[i]);
            out += ")";
        }
        out += "\n";
    }
    if (rep.downstream_skipped) {
        out += "analysis skipped: structure axioms must hold first\n";
        return out;
    }

    out += "signature: (" + std::to_string(rep.signature.plus) + "," +
           std::to_string(rep.signature.minus) + ")\n";
    out += "class: " + rep.f_class + (rep.sasaki.sasaki_like ? " (Sasaki-like)" : "") +
           (rep.cosymplectic ? " (cosymplectic)" : "") + "\n";

    const std::size_t d = rep.desc.dim;
    auto covector_line = [&](const char* name, const RatVector& v) {
        out += std::string("  ") + name + " =";
        bool any = false;
        for (std::size_t i = 0; i < d; ++i) {
            if (v[i] == 0) continue;
            out += " " + to_string(v[i]) + "*e" + std::to_string(i) + "^";
            any = true;
        }
        if (!any) out += " 0";
        out += "\n";
    };
    out += "lee forms:\n";
    covector_line("theta ", rep.fundamental.lee_theta);
    covector_line("theta*", rep.fundamental.lee_theta_star);
    covector_line("omega ", rep.fundamental.lee_omega);

    out += "curvature: tau = " + to_string(rep.curvature.tau) +
           ", tau* = " + to_string(rep.curvature.tau_star) +
           ", tau~ = " + to_string(rep.curvature.tau_tilde) + "\n";
    out += "nonzero R(i,j,k,l):\n";
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    if (rep.curvature.riemann_cov(i, j, k, l) != 0)
                        out += "  R(" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + "," + std::to_string(l) +
                               ") = " + to_string(rep.curvature.riemann_cov(i, j, k, l)) + "\n";
    out += "nonzero ricci(i,j):\n";
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (rep.curvature.ricci(i, j) != 0)
                out += "  ricci(" + std::to_string(i) + "," + std::to_string(j) +
                       ") = " + to_string(rep.curvature.ricci(i, j)) + "\n";

    out += "einstein-like fit: ";
    if (!rep.einstein.consistent) {
        out += "inconsistent (ricci is outside span{g, g~, eta x eta})\n";
    } else {
        out += "(a,b,c) = (" + to_string(rep.einstein.a) + ", " + to_string(rep.einstein.b) +
               ", " + to_string(rep.einstein.c) + "), " +
               classification_name(rep.einstein.classification) +
               (rep.einstein.unique ? "" : ", non-unique") + "\n";
    }

    for (std::size_t idx = 0; idx < rep.solitons.size(); ++idx) {
        const SolitonSection& sec = rep.solitons[idx];
        out += "potential p" + std::to_string(idx) + ": ";
        if (sec.k)
            out += "v = " + to_string(*sec.k) + " xi";
        else {
            out += "v = (";
            for (std::size_t i = 0; i < sec.v.size(); ++i)
                out += (i ? "," : "") + to_string(sec.v[i]);
            out += ")";
        }
        out += sec.vertical ? " [vertical]\n" : " [NOT vertical]\n";
        if (!sec.fit.consistent) {
            out += "  soliton fit: inconsistent\n";
        } else {
            out += "  soliton fit: (lambda,mu,nu) = (" + to_string(sec.fit.lambda) + ", " +
                   to_string(sec.fit.mu) + ", " + to_string(sec.fit.nu) + ")" +
                   (sec.fit.unique ? "" : ", non-unique") + "\n";
        }
    }

    const PredicateVerdict* verdicts[] = {&rep.predicates.parallelism.locally_symmetric,
                                          &rep.predicates.parallelism.eta_parallel,
                                          &rep.predicates.parallelism.parallel_along_xi,
                                          &rep.predicates.parallelism.cyclic_parallel,
                                          &rep.predicates.parallelism.codazzi,
                                          &rep.predicates.r_xi_action,
                                          &rep.predicates.phi_symmetry_local,
                                          &rep.predicates.phi_symmetry_global,
                                          &rep.predicates.pseudo_ricci_symmetric,
                                          &rep.predicates.special_weakly_ricci_symmetric,
                                          &rep.predicates.q_dot_r};
    out += "predicates:\n";
    for (const PredicateVerdict* v : verdicts) {
        out += "  " + v->name + ": ";
        if (!v->applicable) {
            out += "not applicable\n";
            continue;
        }
        out += v->holds ? "true" : "false";
        if (!v->holds && !v->witness.empty()) {
            out += " (witness";
            for (std::size_t w : v->witness) out += " " + std::to_string(w);
            out += ")";
        }
        out += "\n";
    }

    out += "checks:\n";
    for (const NamedCheck& c : rep.checks)
        out += "  " + c.name + ": " + (c.passed ? "PASS" : "FAIL") + "\n";
    out += rep.all_checks_passed() ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
}

}  // namespace acbm
