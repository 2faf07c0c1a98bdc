#pragma once

#include <vector>

#include "polybinom/graph.hpp"
#include "polybinom/poly.hpp"
#include "polybinom/stapledon.hpp"

namespace polybinom {

inline constexpr int kDefaultCyclomaticCap = 8;
inline constexpr int kDefaultFullScanEdgeCap = 8;

/// Nowhere-zero Z_n-flows with respect to the stored edge directions,
/// enumerated over the cotree edges of a fixed BFS spanning forest; tree-edge
/// values follow from conservation. Throws CapExceeded when the cyclomatic
/// number exceeds xi_cap.
Integer modular_flow_count(const Multigraph& g, int n, int xi_cap = kDefaultCyclomaticCap);

/// Nowhere-zero integer flows with |x(e)| < n, same enumeration scheme.
Integer integral_flow_count(const Multigraph& g, int n, int xi_cap = kDefaultCyclomaticCap);

/// Brute-force scan of (Z_n \ 0)^E checking conservation at every vertex.
/// Independent of the cycle-space enumeration; for cross-checks on small m.
Integer modular_flow_count_exhaustive(const Multigraph& g, int n, int edge_cap = kDefaultFullScanEdgeCap);

struct KocholTerm {
    Orientation orientation;
    Integer count;  // integer flows on the orientation with 0 < x(e) < n
};

/// One term per totally cyclic orientation. The counts sum to
/// integral_flow_count(g, n).
std::vector<KocholTerm> kochol_orientation_counts(const Multigraph& g, int n, int xi_cap = kDefaultCyclomaticCap,
                                                  int edge_cap = kDefaultOrientationEdgeCap);

struct FlowResult {
    Multigraph graph;
    int xi = 0;
    IntPolynomial phi;
    RatPolynomial f;
    StarVector phi_star;  // start One, D = xi, xi+2 entries
    StarVector f_star;
    SymmetricSplit phi_split;  // (alpha, beta) over D = xi+1
    SymmetricSplit f_split;    // (c, d) over D = xi+1
    Integer totally_cyclic_count;
    Integer indegree_sequence_count;
    // kochol[n-1][k]: count for the k-th totally cyclic orientation at n.
    std::vector<std::vector<Integer>> kochol;
    std::vector<AuditReport> audits;
};

/// Interpolates both flow polynomials from counts at n = 1..xi+1 (n = xi+2 is
/// an over-determination check), splits their star vectors, and audits the
/// constant terms against the orientation oracles, the coefficient chains,
/// positivity, the partial-sum inequalities and Kochol's sum. Throws
/// InputError with reason "bridge" for graphs with a bridge and "acyclic" for
/// xi = 0.
FlowResult flow_polynomials(const Multigraph& g, CheckMode mode = CheckMode::Explore,
                            int xi_cap = kDefaultCyclomaticCap, int edge_cap = kDefaultOrientationEdgeCap);

}  // namespace polybinom
