#pragma once

#include <string>
#include <vector>

#include "polybinom/graph.hpp"
#include "polybinom/poly.hpp"
#include "polybinom/poset.hpp"
#include "polybinom/stapledon.hpp"

namespace polybinom {

inline constexpr int kDefaultChromaticVertexCap = 10;

/// Chromatic polynomial by deletion-contraction on the underlying simple
/// graph, pivoting on the lowest edge and memoizing on a degree-sorted
/// adjacency encoding. Any loop gives the zero polynomial.
IntPolynomial chromatic_poly(const Multigraph& g, int vertex_cap = kDefaultChromaticVertexCap);

/// binomial_transform(chi, d, start Zero).
StarVector chi_star(const Multigraph& g, int vertex_cap = kDefaultChromaticVertexCap);

struct ChromaticResult {
    Multigraph graph;
    IntPolynomial chi;
    StarVector chi_star;
    SymmetricSplit split;  // a_G = p, b_G = q
    Integer acyclic_count;
    std::vector<AuditReport> audits;
};

/// Splits chi* into symmetric a_G - b_G and audits the constant terms against
/// the acyclic-orientation enumerator, the coefficient chains, positivity,
/// a_j >= b_j, and the partial-sum and binomial bounds. Throws InputError for
/// graphs with loops or no vertices.
ChromaticResult theorem1_decomposition(const Multigraph& g, CheckMode mode = CheckMode::Explore,
                                       int vertex_cap = kDefaultChromaticVertexCap,
                                       int edge_cap = kDefaultOrientationEdgeCap);

/// Sum of omega_star over the posets of all acyclic orientations.
StarVector chi_star_via_orders(const Multigraph& g, int edge_cap = kDefaultOrientationEdgeCap,
                               int poset_cap = kDefaultPosetCap);

/// v_{d-j} <= C(v_{d-1} + j - 1, j) for 1 <= j <= d.
AuditReport hegedus_bound_check(const StarVector& v);

/// Integer linear form k_1 c_1 + ... + k_{d-1} c_{d-1} + constant, read as
/// "form >= 0".
struct LinearForm {
    std::vector<Integer> coefficients;
    Integer constant;

    // Divided by the (positive) gcd of all entries.
    LinearForm normalized() const;
    std::string to_string() const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct Table1Row {
    int d = 0;
    int j = 0;
    LinearForm form;  // normalized
};

/// Partial-sum inequality rows for a monic degree-d chromatic polynomial with
/// zero constant term, rewritten in its monomial coefficients c_1..c_{d-1}.
/// One row per j in 2..floor(d/2). Throws InputError unless 5 <= d <= 7.
std::vector<Table1Row> table1_forms(int d);

struct PrintedRow {
    int d = 0;
    LinearForm form;
    std::string text;
};

/// The four published coefficient relations for d = 5, 6, 7.
const std::vector<PrintedRow>& table1_printed_rows();

struct Table1Match {
    PrintedRow printed;
    std::vector<int> matching_j;  // empty if no derived row matches
};

std::vector<Table1Match> match_table1();

}  // namespace polybinom
