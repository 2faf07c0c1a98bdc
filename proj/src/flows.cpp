#include "polybinom/flows.hpp"

#include <cstdint>
#include <cstdlib>
#include <deque>

#include "polybinom/errors.hpp"

namespace polybinom {

namespace {

// Fundamental-cycle coordinates for a fixed spanning forest. The flow on
// tree edge t is sum_c coef[t][c] * x[cotree[c]], everything measured
// against the stored edge directions.
struct CycleSpace {
    std::vector<int> tree;
    std::vector<int> cotree;
    std::vector<std::vector<int>> coef;
};

CycleSpace build_cycle_space(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (int e = 0; e < g.edge_count(); ++e) {
        incident[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
        if (!g.edge(e).is_loop()) {
            incident[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
        }
    }
    // BFS forest, roots and edges taken in index order.
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (int root = 0; root < n; ++root) {
        if (depth[static_cast<std::size_t>(root)] >= 0) {
            continue;
        }
        depth[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int e : incident[static_cast<std::size_t>(x)]) {
                const Edge& edge = g.edge(e);
                const int y = edge.u == x ? edge.v : edge.u;
                if (depth[static_cast<std::size_t>(y)] < 0) {
                    depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                    parent_edge[static_cast<std::size_t>(y)] = e;
                    in_tree[static_cast<std::size_t>(e)] = 1;
                    queue.push_back(y);
                }
            }
        }
    }

    CycleSpace space;
    std::vector<int> tree_slot(static_cast<std::size_t>(g.edge_count()), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[static_cast<std::size_t>(e)]) {
            tree_slot[static_cast<std::size_t>(e)] = static_cast<int>(space.tree.size());
            space.tree.push_back(e);
        } else {
            space.cotree.push_back(e);
        }
    }
    space.coef.assign(space.tree.size(), std::vector<int>(space.cotree.size(), 0));

    auto parent_of = [&](int x) {
        const Edge& edge = g.edge(parent_edge[static_cast<std::size_t>(x)]);
        return edge.u == x ? edge.v : edge.u;
    };
    for (std::size_t c = 0; c < space.cotree.size(); ++c) {
        // Unit flow u -> v on the cotree edge, returning v -> u through the tree.
        const Edge& chord = g.edge(space.cotree[c]);
        int from = chord.v;
        int to = chord.u;
        std::vector<std::pair<int, int>> down;  // (edge, sign) on the lca -> u leg
        while (from != to) {
            if (depth[static_cast<std::size_t>(from)] >= depth[static_cast<std::size_t>(to)]) {
                const int e = parent_edge[static_cast<std::size_t>(from)];
                const int sign = g.edge(e).u == from ? 1 : -1;  // traversed from -> parent
                space.coef[static_cast<std::size_t>(tree_slot[static_cast<std::size_t>(e)])][c] += sign;
                from = parent_of(from);
            } else {
                const int e = parent_edge[static_cast<std::size_t>(to)];
                const int sign = g.edge(e).v == to ? 1 : -1;  // traversed parent -> to
                down.emplace_back(e, sign);
                to = parent_of(to);
            }
        }
        for (const auto& [e, sign] : down) {
            space.coef[static_cast<std::size_t>(tree_slot[static_cast<std::size_t>(e)])][c] += sign;
        }
    }
    return space;
}

void check_xi(const Multigraph& g, int xi_cap) {
    const int xi = cyclomatic_number(g);
    if (xi > xi_cap) {
        throw CapExceeded("flow enumeration: cyclomatic number " + std::to_string(xi) + " exceeds cap " +
                          std::to_string(xi_cap));
    }
}

// Depth-first assignment of cotree values with incremental tree sums.
// `choices[c]` lists the allowed values of cotree slot c; `accept` sees the
// tree-edge values of each complete assignment.
template <typename Accept>
std::int64_t count_assignments(const CycleSpace& space, const std::vector<std::vector<std::int64_t>>& choices,
                               Accept accept) {
    std::vector<std::int64_t> tree_value(space.tree.size(), 0);
    std::int64_t total = 0;
    auto recurse = [&](auto&& self, std::size_t c) -> void {
        if (c == space.cotree.size()) {
            if (accept(tree_value)) {
                ++total;
            }
            return;
        }
        for (std::int64_t value : choices[c]) {
            for (std::size_t t = 0; t < space.tree.size(); ++t) {
                tree_value[t] += space.coef[t][c] * value;
            }
            self(self, c + 1);
            for (std::size_t t = 0; t < space.tree.size(); ++t) {
                tree_value[t] -= space.coef[t][c] * value;
            }
        }
    };
    recurse(recurse, 0);
    return total;
}

std::vector<std::int64_t> value_range(std::int64_t lo, std::int64_t hi, bool skip_zero) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) {
        if (!(skip_zero && v == 0)) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

Integer modular_flow_count(const Multigraph& g, int n, int xi_cap) {
    if (n < 1) {
        throw InputError("modular_flow_count: n must be positive");
    }
    check_xi(g, xi_cap);
    const CycleSpace space = build_cycle_space(g);
    const std::vector<std::vector<std::int64_t>> choices(space.cotree.size(), value_range(1, n - 1, false));
    return count_assignments(space, choices, [n](const std::vector<std::int64_t>& tree) {
        for (std::int64_t v : tree) {
            if (v % n == 0) {
                return false;
            }
        }
        return true;
    });
}

Integer integral_flow_count(const Multigraph& g, int n, int xi_cap) {
    if (n < 1) {
        throw InputError("integral_flow_count: n must be positive");
    }
    check_xi(g, xi_cap);
    const CycleSpace space = build_cycle_space(g);
    const std::vector<std::vector<std::int64_t>> choices(space.cotree.size(), value_range(-(n - 1), n - 1, true));
    return count_assignments(space, choices, [n](const std::vector<std::int64_t>& tree) {
        for (std::int64_t v : tree) {
            if (v == 0 || std::llabs(v) >= n) {
                return false;
            }
        }
        return true;
    });
}

Integer modular_flow_count_exhaustive(const Multigraph& g, int n, int edge_cap) {
    if (n < 1) {
        throw InputError("modular_flow_count_exhaustive: n must be positive");
    }
    if (g.edge_count() > edge_cap) {
        throw CapExceeded("modular_flow_count_exhaustive: " + std::to_string(g.edge_count()) +
                          " edges exceeds cap " + std::to_string(edge_cap));
    }
    const int m = g.edge_count();
    if (n == 1) {
        return m == 0 ? 1 : 0;
    }
    std::vector<int> x(static_cast<std::size_t>(m), 1);
    std::vector<std::int64_t> net(static_cast<std::size_t>(g.vertex_count()));
    Integer count = 0;
    while (true) {
        std::fill(net.begin(), net.end(), 0);
        for (int e = 0; e < m; ++e) {
            net[static_cast<std::size_t>(g.edge(e).v)] += x[static_cast<std::size_t>(e)];
            net[static_cast<std::size_t>(g.edge(e).u)] -= x[static_cast<std::size_t>(e)];
        }
        bool conserved = true;
        for (std::int64_t v : net) {
            if (v % n != 0) {
                conserved = false;
                break;
            }
        }
        if (conserved) {
            count += 1;
        }
        int e = 0;
        while (e < m && x[static_cast<std::size_t>(e)] == n - 1) {
            x[static_cast<std::size_t>(e)] = 1;
            ++e;
        }
        if (e == m) {
            break;
        }
        ++x[static_cast<std::size_t>(e)];
    }
    return count;
}

std::vector<KocholTerm> kochol_orientation_counts(const Multigraph& g, int n, int xi_cap, int edge_cap) {
    if (n < 1) {
        throw InputError("kochol_orientation_counts: n must be positive");
    }
    check_xi(g, xi_cap);
    const CycleSpace space = build_cycle_space(g);
    std::vector<KocholTerm> out;
    for (auto& o : enumerate_totally_cyclic_orientations(g, edge_cap)) {
        // x_ref(e) = sign(e) * x_o(e) with 0 < x_o(e) < n.
        std::vector<std::vector<std::int64_t>> choices;
        for (int c : space.cotree) {
            choices.push_back(o.is_reversed(c) ? value_range(-(n - 1), -1, false) : value_range(1, n - 1, false));
        }
        std::vector<int> tree_sign;
        for (int t : space.tree) {
            tree_sign.push_back(o.is_reversed(t) ? -1 : 1);
        }
        Integer count = count_assignments(space, choices, [&](const std::vector<std::int64_t>& tree) {
            for (std::size_t t = 0; t < tree.size(); ++t) {
                const std::int64_t v = tree_sign[t] * tree[t];
                if (v <= 0 || v >= n) {
                    return false;
                }
            }
            return true;
        });
        out.push_back({std::move(o), std::move(count)});
    }
    return out;
}

FlowResult flow_polynomials(const Multigraph& g, CheckMode mode, int xi_cap, int edge_cap) {
    if (g.has_bridge()) {
        throw InputError("bridge: flow polynomials vanish identically");
    }
    const int xi = cyclomatic_number(g);
    if (xi < 1) {
        throw InputError("acyclic: cyclomatic number is 0");
    }
    check_xi(g, xi_cap);

    std::vector<std::pair<Integer, Integer>> modular_points;
    std::vector<std::pair<Integer, Integer>> integral_points;
    for (int n = 1; n <= xi + 2; ++n) {
        modular_points.emplace_back(n, modular_flow_count(g, n, xi_cap));
        integral_points.emplace_back(n, integral_flow_count(g, n, xi_cap));
    }
    const std::size_t nodes = static_cast<std::size_t>(xi) + 1;
    IntPolynomial phi = interpolate(std::span(modular_points).first(nodes), xi);
    RatPolynomial f = interpolate_rational(std::span(integral_points).first(nodes), xi);

    StarVector phi_star = binomial_transform(phi, xi, SeriesStart::One);
    StarVector f_star = binomial_transform(f, xi, SeriesStart::One);
    SymmetricSplit phi_split = symmetric_split(phi_star.entries(), xi + 1);
    SymmetricSplit f_split = symmetric_split(f_star.entries(), xi + 1);

    const std::vector<Orientation> cyclic = enumerate_totally_cyclic_orientations(g, edge_cap);
    const Integer tc_count = cyclic.size();
    const Integer indegree_count = in_degree_sequence_count(cyclic);

    std::vector<AuditReport> audits;
    AuditReport extra_node;
    extra_node.family = "interpolation_extra_node";
    extra_node.relation = "==";
    {
        const Integer n = xi + 2;
        Integer mod_count = modular_points.back().second;
        Integer int_count = integral_points.back().second;
        extra_node.rows.push_back({0, phi(n), mod_count, phi(n) == mod_count});
        const Rational fn = f(n);
        extra_node.rows.push_back({1, numerator(fn) / denominator(fn), int_count, fn == Rational(int_count)});
    }
    audits.push_back(std::move(extra_node));

    if (g.edge_count() <= kDefaultFullScanEdgeCap) {
        AuditReport scan;
        scan.family = "modular_full_scan";
        scan.relation = "==";
        for (int n = 1; n <= xi + 1; ++n) {
            Integer brute = modular_flow_count_exhaustive(g, n);
            const Integer& fast = modular_points[static_cast<std::size_t>(n - 1)].second;
            scan.rows.push_back({n, fast, brute, fast == brute});
        }
        audits.push_back(std::move(scan));
    }

    const auto& alpha = phi_split.p();
    const auto& beta = phi_split.q();
    const auto& c = f_split.p();
    const auto& d = f_split.q();
    audits.push_back(audit_sign("phi_star_nonnegative", phi_star.entries(), false));
    audits.push_back(audit_sign("f_star_nonnegative", f_star.entries(), false));
    audits.push_back(audit_equal("thm3_alpha0_is_indegree_count", alpha.front(), indegree_count));
    audits.push_back(audit_equal("thm3_beta0_is_indegree_count", beta.front(), indegree_count));
    audits.push_back(audit_chain("thm3_alpha_chain", alpha, xi));
    audits.push_back(audit_chain("thm3_beta_chain", beta, xi - 1));
    audits.push_back(audit_sign("thm3_alpha_positive", alpha, true));
    audits.push_back(audit_sign("thm3_beta_positive", beta, true));
    audits.push_back(audit_dominance("thm3_alpha_dominates_beta", alpha, beta, 1, xi));
    audits.push_back(audit_equal("thm4_c0_is_totally_cyclic_count", c.front(), tc_count));
    audits.push_back(audit_equal("thm4_d0_is_totally_cyclic_count", d.front(), tc_count));
    audits.push_back(audit_chain("thm4_c_chain", c, xi));
    audits.push_back(audit_chain("thm4_d_chain", d, xi - 1));
    audits.push_back(audit_sign("thm4_c_positive", c, true));
    audits.push_back(audit_sign("thm4_d_positive", d, true));
    audits.push_back(audit_dominance("thm4_c_dominates_d", c, d, 1, xi));

    auto tagged = [](AuditReport report, const std::string& prefix) {
        report.family = prefix + report.family;
        return report;
    };
    for (auto family : {InequalityFamily::Cor4First, InequalityFamily::Cor4Second, InequalityFamily::BreuerDall}) {
        audits.push_back(tagged(check_partial_sum_inequalities(phi_star.entries(), xi, family), "phi_"));
    }
    for (auto family : {InequalityFamily::Cor4First, InequalityFamily::Cor4Second}) {
        audits.push_back(tagged(check_partial_sum_inequalities(f_star.entries(), xi, family), "f_"));
    }

    std::vector<std::vector<Integer>> kochol;
    AuditReport kochol_sum;
    kochol_sum.family = "kochol_sum";
    kochol_sum.relation = "==";
    for (int n = 1; n <= xi + 2; ++n) {
        std::vector<Integer> column;
        Integer sum = 0;
        for (auto& term : kochol_orientation_counts(g, n, xi_cap, edge_cap)) {
            sum += term.count;
            column.push_back(std::move(term.count));
        }
        const Integer& expected = integral_points[static_cast<std::size_t>(n - 1)].second;
        kochol_sum.rows.push_back({n, sum, expected, sum == expected});
        kochol.push_back(std::move(column));
    }
    audits.push_back(std::move(kochol_sum));

    enforce(audits, mode, "graph\n" + to_text(g));
    return FlowResult{g,
                      xi,
                      std::move(phi),
                      std::move(f),
                      std::move(phi_star),
                      std::move(f_star),
                      std::move(phi_split),
                      std::move(f_split),
                      tc_count,
                      indegree_count,
                      std::move(kochol),
                      std::move(audits)};
}

}  // namespace polybinom
