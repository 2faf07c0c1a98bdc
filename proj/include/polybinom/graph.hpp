#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace polybinom {

class Poset;

struct Edge {
    int u = 0;
    int v = 0;

    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled multigraph. Loops and parallel edges are allowed; each edge keeps
/// its position in the edge list as a stable index. The stored pair (u, v)
/// doubles as the reference orientation u -> v used by flow counting.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    bool has_loop() const;
    bool has_parallel_edges() const;
    int component_count() const;
    bool is_connected() const { return component_count() <= 1; }
    // A bridge is a non-loop edge whose removal increases the component count.
    bool has_bridge() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// |E| - |V| + number of connected components.
int cyclomatic_number(const Multigraph& g);

/// Identifies the endpoints of edge e into the smaller label and shifts labels
/// above the removed vertex down by one. Other edges keep their relative
/// order; parallel edges and newly created loops are retained.
Multigraph contract_edge(const Multigraph& g, int e);

Multigraph delete_edge(const Multigraph& g, int e);

/// Underlying simple graph: loops dropped, parallel edges merged, edges
/// sorted as (min, max) pairs.
Multigraph simplify(const Multigraph& g);

// Upper bound on the edge count for exhaustive 2^m orientation scans.
inline constexpr int kDefaultOrientationEdgeCap = 24;

/// One direction bit per edge: bit e clear means edge e points from its
/// stored u to its stored v, set means v -> u. A loop has two orientations
/// (its two traversal directions), each a coherent cycle. Shares ownership
/// of the graph it orients.
class Orientation {
public:
    Orientation(std::shared_ptr<const Multigraph> graph, std::uint64_t reversed_mask);

    const Multigraph& graph() const { return *graph_; }
    const std::shared_ptr<const Multigraph>& graph_ptr() const { return graph_; }
    std::uint64_t reversed_mask() const { return reversed_; }
    bool is_reversed(int e) const { return ((reversed_ >> e) & 1U) != 0; }

    int tail(int e) const;
    int head(int e) const;

    std::vector<int> in_degrees() const;
    bool is_acyclic() const;
    // Every component of the underlying graph is strongly connected.
    bool is_totally_cyclic() const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.reversed_ == b.reversed_ && *a.graph_ == *b.graph_;
    }

private:
    std::shared_ptr<const Multigraph> graph_;
    std::uint64_t reversed_;
};

/// All acyclic orientations in increasing mask order. Parallel edges must be
/// co-directed; any loop makes the list empty. Throws CapExceeded when
/// the edge count exceeds edge_cap.
std::vector<Orientation> enumerate_acyclic_orientations(const Multigraph& g,
                                                        int edge_cap = kDefaultOrientationEdgeCap);

/// All totally cyclic orientations (every edge on a coherent cycle) in
/// increasing mask order.
std::vector<Orientation> enumerate_totally_cyclic_orientations(const Multigraph& g,
                                                               int edge_cap = kDefaultOrientationEdgeCap);

/// Number of distinct vertex-indexed in-degree vectors. Throws InputError if
/// the orientations are over different graphs.
std::size_t in_degree_sequence_count(const std::vector<Orientation>& orientations);

/// Poset on the vertex set ordered by directed reachability. Throws
/// InputError for a cyclic orientation.
Poset orientation_to_poset(const Orientation& o);

/// Text form of a graph: "vertices n" followed by "edge u v" lines.
std::string to_text(const Multigraph& g);

}  // namespace polybinom
