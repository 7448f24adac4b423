#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vpg/geometry.hpp"
#include "vpg/graph.hpp"

namespace vpg {

/// One grounded group of an outerstring part: every member touches the
/// vertical line x = line_twice/2 and sits on the declared side of it
/// (members may lie on the line itself only for side = Right). Base cases
/// may re-represent a group; the override then carries the geometry.
struct OuterstringGroup {
  enum class Side { Left, Right };
  Coord line_twice = 0;
  Side side = Side::Right;
  std::vector<Id> members;
  std::optional<Representation> rep_override;
};

struct OuterstringCert {
  std::vector<OuterstringGroup> groups;
};

/// Corner certificate: apex plus one vertical and one horizontal ray, with
/// the member orders along each ray. ray2_left tells whether the horizontal
/// ray points left (apex right of the curves) or right.
struct CorneredCert {
  Coord apex_twice_x = 0;
  Coord apex_twice_y = 0;
  bool ray2_left = true;
  std::vector<Id> order1;  // along the vertical ray, outward
  std::vector<Id> order2;  // along the horizontal ray, outward
};

struct PermPairCert {
  std::vector<Id> order1;
  std::vector<Id> order2;
};

struct Dim3Cert {
  std::vector<Id> order1;
  std::vector<Id> order2;
  std::vector<Id> order3;
};

struct CenteredCert {
  Line line;
};

struct GroundedCert {
  Line line;
};

struct SingleVerticalPairCert {
  bool rotated = false;
};

using PartCertificate =
    std::variant<OuterstringCert, CorneredCert, PermPairCert, Dim3Cert,
                 CenteredCert, GroundedCert, SingleVerticalPairCert>;

const char* cert_kind_name(const PartCertificate& c);

struct Part {
  std::vector<Id> members;  // ascending
  PartCertificate cert;
  std::optional<Representation> rep;  // transformed geometry when it differs
};

enum class BoundFormula { Log2N, TwoLog2N, FourLog2N, FourLog2Sq, EightLog2Cube };

const char* bound_formula_name(BoundFormula f);
BoundFormula bound_formula_from_name(const std::string& s);

/// count <= max(1, f(n)) with real-valued log2. The log-linear formulas are
/// decided by exact integer shifts; the squared/cubed ones fall back to long
/// double except at powers of two, where they are exact as well.
bool within_bound(std::size_t count, std::size_t n, BoundFormula f);
double bound_value(std::size_t n, BoundFormula f);

struct EdgeSideRecord {
  Id u = 0;
  Id v = 0;
  bool above = false;
  bool below = false;
};

struct Decomposition {
  std::vector<Part> parts;
  std::string strategy;
  std::size_t n = 0;
  BoundFormula bound = BoundFormula::TwoLog2N;
  std::vector<EdgeSideRecord> edge_partition;  // centered edge split only

  bool bound_ok() const { return within_bound(parts.size(), n, bound); }
};

struct VerifyReport {
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
};

/// Kind-specific certificate check of one part against the original
/// representation and its intersection graph.
VerifyReport verify_certificate(const Part& part, const Representation& original,
                                const WeightedGraph& g);

/// Partition check plus verify_certificate on every part.
VerifyReport verify_decomposition(const Decomposition& d,
                                  const Representation& original,
                                  const WeightedGraph& g);

/// Edge rule shared by permutation and dim-3 certificates: edge iff some two
/// orders disagree on the pair.
WeightedGraph disagreement_graph_of_orders(const std::vector<std::vector<Id>>& orders,
                                           const WeightedGraph& g,
                                           const std::vector<Id>& members);

}  // namespace vpg
