#ifndef ACBM_MANIFOLD_IO_HPP
#define ACBM_MANIFOLD_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "acbm/linalg.hpp"
#include "acbm/rational.hpp"
#include "acbm/structure.hpp"

namespace acbm {

// One stored structure constant: the e_k coefficient of [e_i, e_j], i < j.
struct BracketEntry {
    std::size_t i = 0, j = 0, k = 0;
    Rational value = 0;
    bool operator==(const BracketEntry&) const = default;
};

// A manifold as it appears on disk: a line-oriented text format with the
// sections DIM, LABEL, BRACKETS, METRIC, PHI, XI and ETA ("#" starts a
// comment anywhere on a line). Bracket entries are kept sorted by (i,j,k) so
// that equality, serialization and the parse/serialize round-trip agree.
struct ManifoldDescription {
    std::size_t dim = 0;
    std::string label;
    std::vector<BracketEntry> brackets;
    RatMatrix metric;
    RatMatrix phi;  // column j holds phi(e_j) in the basis
    RatVector xi;
    RatVector eta;

    bool operator==(const ManifoldDescription&) const = default;
};

// Exact parse. ParseError carries the offending line; ValidationError names
// the broken semantic requirement (even dimension, asymmetric metric,
// out-of-range or duplicate bracket index, i >= j).
ManifoldDescription parse_manifold(const std::string& text);

// Canonical rendering: DIM, LABEL, BRACKETS, METRIC, PHI, XI, ETA in that
// order, brackets sorted. parse_manifold(serialize_manifold(d)) == d.
std::string serialize_manifold(const ManifoldDescription& desc);

// Reads and parses a description file. Errors from parse_manifold pass
// through; a missing or unreadable file raises ParseError on line 0.
ManifoldDescription load_manifold(const std::string& path);

// The built-in five-dimensional family: a Lie group whose only nonzero
// brackets pair e_0 with the rest,
//   [e_0,e_1] =  p e_2 +   e_3 + q e_4,
//   [e_0,e_2] = -p e_1 - q e_3 +   e_4,
//   [e_0,e_3] = -  e_1 - q e_2 + p e_4,
//   [e_0,e_4] =  q e_1 -   e_2 - p e_3,
// with g = diag(1,1,1,-1,-1), phi e_1 = e_3, phi e_2 = e_4, phi e_3 = -e_1,
// phi e_4 = -e_2, xi = e_0, eta = e_0's dual. Sasaki-like for every (p,q).
ManifoldDescription example_sasaki5(const Rational& p, const Rational& q);

// Assembles the in-memory structure. LieAlgebra and MetricTensor validation
// applies (odd dimension, nondegenerate symmetric metric).
AlmostContactBMetricStructure build_structure(const ManifoldDescription& desc);

}  // namespace acbm

#endif
