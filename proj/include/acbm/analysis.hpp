#ifndef ACBM_ANALYSIS_HPP
#define ACBM_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "acbm/manifold_io.hpp"
#include "acbm/predicates.hpp"
#include "acbm/soliton.hpp"

namespace acbm {

// One potential to run the soliton solve with: either v = k xi, or an
// explicit constant vector.
struct PotentialRequest {
    std::optional<Rational> k;
    RatVector vector;  // used when k is not set
};

struct SolitonSection {
    RatVector v;
    std::optional<Rational> k;  // present when requested as a multiple of xi
    bool vertical = false;      // v lies in span xi; false means the run is
                                // outside the vertical-potential hypotheses
    SolitonFit fit;
    // Filled when v = xi exactly and the fit is consistent:
    std::optional<FitCrossChecks> cross;
    std::optional<CorollaryVerdict> corollary;
    std::optional<bool> closed_form_matches;  // closed-form nabla rho vs direct
    // Filled for every vertical potential on a Sasaki-like manifold:
    std::optional<VerticalPotentialReport> vertical_report;
};

// An identity the report asserts about its own numbers;
// any failed check turns the analyze exit code into 1.
struct NamedCheck {
    std::string name;
    bool passed = false;
};

struct AnalysisReport {
    ManifoldDescription desc;
    StructureVerdict structure;
    // Everything below is only filled when the structure is valid.
    bool downstream_skipped = true;
    MatrixSignature signature;
    SasakiLikeVerdict sasaki;
    bool cosymplectic = false;
    std::string f_class;  // "F0", "F4" or "other"
    FundamentalTensor fundamental;
    CurvatureData curvature;
    EinsteinLikeFit einstein;
    std::vector<SolitonSection> solitons;
    PredicateCatalogue predicates;
    std::optional<EquivalenceChecks> equivalences;
    std::vector<NamedCheck> checks;

    bool all_checks_passed() const;
};

// The full pipeline on one description, deterministic in its inputs. When no
// potential is requested the single default v = xi is used.
AnalysisReport run_analysis(const ManifoldDescription& desc,
                            const std::vector<PotentialRequest>& potentials = {});

// Human-readable rendering.
std::string render_text(const AnalysisReport& rep);

// Flat `key = value` lines, one per datum, sorted bytewise; identical inputs
// give byte-identical output. Tensor components are emitted only when
// nonzero, with dot-separated indices (curvature.R.0.1.1.0 = 1).
std::string render_machine(const AnalysisReport& rep);

}  // namespace acbm

#endif
