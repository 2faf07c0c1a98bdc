#include "polybinom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polybinom/errors.hpp"
#include "polybinom/poset.hpp"

namespace polybinom {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

// Component id per vertex, ids in order of first appearance.
std::vector<int> component_ids(const Multigraph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : g.edges()) {
        const int a = find_root(parent, e.u);
        const int b = find_root(parent, e.v);
        if (a != b) {
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<int> ids(parent.size());
    for (int x = 0; x < g.vertex_count(); ++x) {
        ids[static_cast<std::size_t>(x)] = find_root(parent, x);
    }
    return ids;
}

void check_orientable(const Multigraph& g, int edge_cap) {
    if (g.edge_count() > edge_cap || g.edge_count() > 63) {
        throw CapExceeded("orientation enumeration: " + std::to_string(g.edge_count()) + " edges exceeds cap " +
                          std::to_string(std::min(edge_cap, 63)));
    }
}

template <typename Keep>
std::vector<Orientation> enumerate_orientations(const Multigraph& g, int edge_cap, Keep keep) {
    check_orientable(g, edge_cap);
    auto shared = std::make_shared<const Multigraph>(g);
    const std::uint64_t total = std::uint64_t{1} << g.edge_count();
    std::vector<Orientation> out;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Orientation o(shared, mask);
        if (keep(o)) {
            out.push_back(std::move(o));
        }
    }
    return out;
}

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) {
        throw InputError("Multigraph: negative vertex count");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
            throw InputError("Multigraph: edge " + std::to_string(i) + " has an endpoint outside [0, " +
                             std::to_string(vertex_count_) + ")");
        }
    }
}

bool Multigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Multigraph::has_parallel_edges() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        if (e.is_loop()) {
            continue;
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            return true;
        }
    }
    return false;
}

int Multigraph::component_count() const {
    std::vector<int> ids = component_ids(*this);
    std::sort(ids.begin(), ids.end());
    return static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

bool Multigraph::has_bridge() const {
    const int base = component_count();
    for (int e = 0; e < edge_count(); ++e) {
        if (!edges_[static_cast<std::size_t>(e)].is_loop() && delete_edge(*this, e).component_count() > base) {
            return true;
        }
    }
    return false;
}

int cyclomatic_number(const Multigraph& g) {
    return g.edge_count() - g.vertex_count() + g.component_count();
}

Multigraph contract_edge(const Multigraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) {
        throw InputError("contract_edge: edge index out of range");
    }
    const Edge& target = g.edge(e);
    if (target.is_loop()) {
        throw InputError("contract_edge: cannot contract loop " + std::to_string(e));
    }
    const int keep = std::min(target.u, target.v);
    const int gone = std::max(target.u, target.v);
    auto relabel = [&](int x) {
        if (x == gone) {
            x = keep;
        }
        return x > gone ? x - 1 : x;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) - 1);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i != e) {
            edges.push_back({relabel(g.edge(i).u), relabel(g.edge(i).v)});
        }
    }
    return Multigraph(g.vertex_count() - 1, std::move(edges));
}

Multigraph delete_edge(const Multigraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) {
        throw InputError("delete_edge: edge index out of range");
    }
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + e);
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph simplify(const Multigraph& g) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : g.edges()) {
        if (!e.is_loop()) {
            pairs.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
        }
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) {
        edges.push_back({u, v});
    }
    return Multigraph(g.vertex_count(), std::move(edges));
}

Orientation::Orientation(std::shared_ptr<const Multigraph> graph, std::uint64_t reversed_mask)
    : graph_(std::move(graph)), reversed_(reversed_mask) {
    if (!graph_) {
        throw InputError("Orientation: null graph");
    }
    if (graph_->edge_count() > 64) {
        throw CapExceeded("Orientation: at most 64 edges");
    }
}

int Orientation::tail(int e) const {
    const Edge& edge = graph_->edge(e);
    return is_reversed(e) ? edge.v : edge.u;
}

int Orientation::head(int e) const {
    const Edge& edge = graph_->edge(e);
    return is_reversed(e) ? edge.u : edge.v;
}

std::vector<int> Orientation::in_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(graph_->vertex_count()), 0);
    for (int e = 0; e < graph_->edge_count(); ++e) {
        ++deg[static_cast<std::size_t>(head(e))];
    }
    return deg;
}

bool Orientation::is_acyclic() const {
    // Kahn's algorithm; a loop or an antiparallel pair leaves vertices unplaced.
    const int n = graph_->vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int e = 0; e < graph_->edge_count(); ++e) {
        ++indeg[static_cast<std::size_t>(head(e))];
        out[static_cast<std::size_t>(tail(e))].push_back(head(e));
    }
    std::vector<int> ready;
    for (int x = 0; x < n; ++x) {
        if (indeg[static_cast<std::size_t>(x)] == 0) {
            ready.push_back(x);
        }
    }
    int placed = 0;
    while (!ready.empty()) {
        const int x = ready.back();
        ready.pop_back();
        ++placed;
        for (int y : out[static_cast<std::size_t>(x)]) {
            if (--indeg[static_cast<std::size_t>(y)] == 0) {
                ready.push_back(y);
            }
        }
    }
    return placed == n;
}

bool Orientation::is_totally_cyclic() const {
    // An orientation is totally cyclic iff every edge lies on a directed
    // cycle, iff each connected component of the underlying graph is
    // strongly connected: edges inside a strongly connected set close up
    // through a return path, and a component whose edges all lie on cycles
    // has every edge inside one strong component.
    const int n = graph_->vertex_count();
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int e = 0; e < graph_->edge_count(); ++e) {
        out[static_cast<std::size_t>(tail(e))].push_back(head(e));
    }
    const std::vector<int> comp = component_ids(*graph_);
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, root);
        seen[static_cast<std::size_t>(root)] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : out[static_cast<std::size_t>(x)]) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
        for (int y = 0; y < n; ++y) {
            if (comp[static_cast<std::size_t>(y)] == comp[static_cast<std::size_t>(root)] &&
                !seen[static_cast<std::size_t>(y)]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Orientation> enumerate_acyclic_orientations(const Multigraph& g, int edge_cap) {
    if (g.has_loop()) {
        return {};
    }
    return enumerate_orientations(g, edge_cap, [](const Orientation& o) { return o.is_acyclic(); });
}

std::vector<Orientation> enumerate_totally_cyclic_orientations(const Multigraph& g, int edge_cap) {
    return enumerate_orientations(g, edge_cap, [](const Orientation& o) { return o.is_totally_cyclic(); });
}

std::size_t in_degree_sequence_count(const std::vector<Orientation>& orientations) {
    if (orientations.empty()) {
        return 0;
    }
    const auto& first = orientations.front().graph_ptr();
    std::set<std::vector<int>> sequences;
    for (const auto& o : orientations) {
        if (o.graph_ptr() != first && o.graph() != *first) {
            throw InputError("in_degree_sequence_count: orientations of different graphs");
        }
        sequences.insert(o.in_degrees());
    }
    return sequences.size();
}

Poset orientation_to_poset(const Orientation& o) {
    if (!o.is_acyclic()) {
        throw InputError("orientation_to_poset: orientation has a directed cycle");
    }
    std::vector<std::pair<int, int>> relations;
    for (int e = 0; e < o.graph().edge_count(); ++e) {
        relations.emplace_back(o.tail(e), o.head(e));
    }
    return Poset(o.graph().vertex_count(), relations);
}

std::string to_text(const Multigraph& g) {
    std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& e : g.edges()) {
        out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

}  // namespace polybinom
