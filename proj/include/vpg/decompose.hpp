#pragma once

#include "vpg/certificates.hpp"
#include "vpg/geometry.hpp"

namespace vpg {

/// Half-integer vertical line with at most ceil(n/2) object x-coordinates on
/// each side: one half step left of the upper-median x. Throws on empty input.
Line median_x(const Representation& rep);

/// Recursive median split of a single-vertical representation into
/// outerstring parts, at most max(1, 2 log2 n) of them.
Decomposition split_single_vertical_outerstring(const Representation& rep);

struct B2SplitResult {
  Representation straight;  // curves with at most one vertical segment
  Representation rotated;   // the rest, turned a quarter so they comply too
};

/// Vertex split of a B2 representation into two single-vertical halves.
B2SplitResult split_b2_by_vertical_count(const Representation& rep);

/// Splits a single-vertical representation into at most max(1, log2 n) parts,
/// each carrying a centered representation of its induced subgraph.
Decomposition split_to_centered(const Representation& rep);

struct CutResult {
  Representation upper;        // grounded on the cut line
  Representation lower;        // rotated 180 degrees, grounded on the negated line
  Line cut_line;
  std::vector<EdgeSideRecord> edges;
};

/// Cuts every curve of a centered B2 representation at the centering line.
CutResult cut_at_center(const Representation& rep);

/// Splits a grounded B1 representation into cornered parts, at most
/// max(1, 2 log2 n). Parts carry translated/extended geometry; the x-order of
/// the verticals along the ground line is never changed.
Decomposition split_grounded_to_cornered(const Representation& rep);

/// Reads the two ray orders off a cornered part.
PermPairCert cornered_permutations(const Part& part);

/// Centered B2 representation -> poset-dimension-3 (or, for 1-string inputs,
/// permutation) parts, at most max(1, 4 log2^2 n).
Decomposition centered_to_parts(const Representation& rep, bool onestring);

/// Full B2 pipeline: vertical-count split, centering, cut, cornered split.
Decomposition decompose_b2_full(const Representation& rep, bool onestring);

/// Full B1 pipeline into permutation parts, at most max(1, 4 log2^2 n).
Decomposition decompose_b1_full(const Representation& rep);

}  // namespace vpg
