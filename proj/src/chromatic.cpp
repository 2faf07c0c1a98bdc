#include "polybinom/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

#include "polybinom/errors.hpp"

namespace polybinom {

namespace {

struct SimpleGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    bool has_edges() const {
        return std::any_of(adj.begin(), adj.end(), [](std::uint32_t row) { return row != 0; });
    }
};

SimpleGraph to_simple(const Multigraph& g) {
    SimpleGraph s{g.vertex_count(), std::vector<std::uint32_t>(static_cast<std::size_t>(g.vertex_count()), 0)};
    for (const auto& e : g.edges()) {
        s.adj[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
        s.adj[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
    }
    return s;
}

// Adjacency rows after a stable sort of the vertices by degree. Equal keys
// mean the graphs are isomorphic, so sharing memo entries is sound.
std::string memo_key(const SimpleGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(g.adj[static_cast<std::size_t>(a)]) < std::popcount(g.adj[static_cast<std::size_t>(b)]);
    });
    std::vector<int> position(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    std::string key(1, static_cast<char>(g.n));
    for (int x : order) {
        std::uint32_t row = 0;
        for (std::uint32_t rest = g.adj[static_cast<std::size_t>(x)]; rest != 0; rest &= rest - 1) {
            row |= std::uint32_t{1} << position[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        key.push_back(static_cast<char>(row & 0xFF));
        key.push_back(static_cast<char>((row >> 8) & 0xFF));
        key.push_back(static_cast<char>((row >> 16) & 0xFF));
    }
    return key;
}

IntPolynomial power_of_n(int k) {
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

class DeletionContraction {
public:
    IntPolynomial operator()(const SimpleGraph& g) {
        if (!g.has_edges()) {
            return power_of_n(g.n);
        }
        std::string key = memo_key(g);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        int u = 0;
        while (g.adj[static_cast<std::size_t>(u)] == 0) {
            ++u;
        }
        // u is the lowest vertex with a neighbour, so all its neighbours exceed it.
        const int v = std::countr_zero(g.adj[static_cast<std::size_t>(u)]);

        SimpleGraph deleted = g;
        deleted.adj[static_cast<std::size_t>(u)] &= ~(std::uint32_t{1} << v);
        deleted.adj[static_cast<std::size_t>(v)] &= ~(std::uint32_t{1} << u);

        IntPolynomial result = (*this)(deleted) - (*this)(contract(g, u, v));
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    // Merge v into u (u < v), drop v, shift higher labels down.
    static SimpleGraph contract(const SimpleGraph& g, int u, int v) {
        auto squeeze = [v](std::uint32_t row) {
            const std::uint32_t low = row & ((std::uint32_t{1} << v) - 1);
            const std::uint32_t high = (row >> (v + 1)) << v;
            return low | high;
        };
        SimpleGraph out{g.n - 1, {}};
        out.adj.reserve(static_cast<std::size_t>(out.n));
        const std::uint32_t merged = (g.adj[static_cast<std::size_t>(u)] | g.adj[static_cast<std::size_t>(v)]) &
                                     ~((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
        for (int x = 0; x < g.n; ++x) {
            if (x == v) {
                continue;
            }
            std::uint32_t row = x == u ? merged : g.adj[static_cast<std::size_t>(x)];
            if (x != u && ((row >> v) & 1U) != 0) {
                row = (row & ~(std::uint32_t{1} << v)) | (std::uint32_t{1} << u);
            }
            out.adj.push_back(squeeze(row));
        }
        return out;
    }

    std::unordered_map<std::string, IntPolynomial> memo_;
};

LinearForm add_scaled(LinearForm lhs, const LinearForm& rhs, const Integer& scale) {
    for (std::size_t i = 0; i < lhs.coefficients.size(); ++i) {
        lhs.coefficients[i] += scale * rhs.coefficients[i];
    }
    lhs.constant += scale * rhs.constant;
    return lhs;
}

LinearForm make_form(std::vector<long long> coefficients, long long constant) {
    LinearForm f;
    for (long long c : coefficients) {
        f.coefficients.emplace_back(c);
    }
    f.constant = constant;
    return f;
}

}  // namespace

IntPolynomial chromatic_poly(const Multigraph& g, int vertex_cap) {
    if (g.vertex_count() > vertex_cap || g.vertex_count() > 24) {
        throw CapExceeded("chromatic_poly: " + std::to_string(g.vertex_count()) + " vertices exceeds cap " +
                          std::to_string(std::min(vertex_cap, 24)));
    }
    if (g.has_loop()) {
        return IntPolynomial();
    }
    DeletionContraction dc;
    return dc(to_simple(g));
}

StarVector chi_star(const Multigraph& g, int vertex_cap) {
    return binomial_transform(chromatic_poly(g, vertex_cap), g.vertex_count(), SeriesStart::Zero);
}

ChromaticResult theorem1_decomposition(const Multigraph& g, CheckMode mode, int vertex_cap, int edge_cap) {
    if (g.has_loop()) {
        throw InputError("loop: chromatic polynomial vanishes");
    }
    const int d = g.vertex_count();
    if (d < 1) {
        throw InputError("theorem1_decomposition: graph has no vertices");
    }
    IntPolynomial chi = chromatic_poly(g, vertex_cap);
    StarVector star = binomial_transform(chi, d, SeriesStart::Zero);
    SymmetricSplit split = symmetric_split(star.entries(), d);
    const Integer acyclic = enumerate_acyclic_orientations(g, edge_cap).size();

    const auto& a = split.p();
    const auto& b = split.q();
    std::vector<AuditReport> audits;
    audits.push_back(audit_equal("chi_zero_constant_term", chi(0), 0));
    audits.push_back(audit_sign("chi_star_nonnegative", star.entries(), false));
    audits.push_back(audit_equal("thm1_a0_is_acyclic_count", a.front(), acyclic));
    audits.push_back(audit_equal("thm1_b0_is_acyclic_count", b.front(), acyclic));
    Integer reciprocal = chi(-1);
    if (d % 2 != 0) {
        reciprocal = -reciprocal;
    }
    audits.push_back(audit_equal("stanley_reciprocity", reciprocal, acyclic));
    audits.push_back(audit_chain("thm1_a_chain", a, d - 1));
    audits.push_back(audit_chain("thm1_b_chain", b, d - 2));
    audits.push_back(audit_sign("thm1_a_positive", a, true));
    audits.push_back(audit_sign("thm1_b_positive", b, true));
    audits.push_back(audit_dominance("thm1_a_dominates_b", a, b, 1, d - 1));
    audits.push_back(check_partial_sum_inequalities(star.entries(), d, InequalityFamily::Cor2));
    audits.push_back(check_partial_sum_inequalities(star.entries(), d, InequalityFamily::HershSwartz));
    audits.push_back(hegedus_bound_check(star));

    enforce(audits, mode, "graph\n" + to_text(g));
    return ChromaticResult{g, std::move(chi), std::move(star), std::move(split), acyclic, std::move(audits)};
}

StarVector chi_star_via_orders(const Multigraph& g, int edge_cap, int poset_cap) {
    if (g.has_loop()) {
        throw InputError("loop: chi_star_via_orders needs a loopless graph");
    }
    const int d = g.vertex_count();
    StarVector sum(std::vector<Integer>(static_cast<std::size_t>(d) + 2, 0), d, SeriesStart::One);
    sum = sum.drop_top();
    std::map<Poset, StarVector> memo;
    for (const auto& o : enumerate_acyclic_orientations(g, edge_cap)) {
        Poset p = orientation_to_poset(o);
        auto it = memo.find(p);
        if (it == memo.end()) {
            it = memo.emplace(p, omega_star(p, poset_cap)).first;
        }
        sum += it->second;
    }
    // Same (D, start) as the chromatic convention, for direct comparison.
    return StarVector(sum.entries(), d, SeriesStart::Zero);
}

AuditReport hegedus_bound_check(const StarVector& v) {
    return check_partial_sum_inequalities(v.entries(), v.transform_degree(), InequalityFamily::Hegedus);
}

LinearForm LinearForm::normalized() const {
    Integer g = abs(constant);
    for (const auto& c : coefficients) {
        g = gcd(g, abs(c));
    }
    if (g == 0 || g == 1) {
        return *this;
    }
    LinearForm out = *this;
    for (auto& c : out.coefficients) {
        c /= g;
    }
    out.constant /= g;
    return out;
}

std::string LinearForm::to_string() const {
    std::string out;
    auto append = [&out](const Integer& value, const std::string& symbol) {
        if (value == 0) {
            return;
        }
        Integer magnitude = abs(value);
        if (out.empty()) {
            if (value < 0) {
                out += "-";
            }
        } else {
            out += value < 0 ? " - " : " + ";
        }
        if (magnitude != 1 || symbol.empty()) {
            out += magnitude.str();
        }
        out += symbol;
    };
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        append(coefficients[i], "c_" + std::to_string(i + 1));
    }
    append(constant, "");
    if (out.empty()) {
        out = "0";
    }
    return out + " >= 0";
}

std::vector<Table1Row> table1_forms(int d) {
    if (d < 5 || d > 7) {
        throw InputError("table1_forms: d must be 5, 6 or 7");
    }
    const std::size_t k = static_cast<std::size_t>(d) - 1;
    // chi(m) = m^d + sum_{k=1}^{d-1} c_k m^k as a form in the c_k.
    auto chi_at = [&](int m) {
        LinearForm f;
        f.coefficients.resize(k);
        Integer power = m;
        for (std::size_t i = 0; i < k; ++i) {
            f.coefficients[i] = power;
            power *= m;
        }
        f.constant = power;
        return f;
    };
    std::vector<LinearForm> star(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        LinearForm f{std::vector<Integer>(k, 0), 0};
        for (int j = 0; j <= i; ++j) {
            Integer scale = binomial(d + 1, j);
            if (j % 2 != 0) {
                scale = -scale;
            }
            f = add_scaled(std::move(f), chi_at(i - j), scale);
        }
        star[static_cast<std::size_t>(i)] = std::move(f);
    }
    std::vector<Table1Row> rows;
    for (int j = 2; j <= d / 2; ++j) {
        LinearForm row{std::vector<Integer>(k, 0), 0};
        for (int i = 2; i <= j; ++i) {
            row = add_scaled(std::move(row), star[static_cast<std::size_t>(d - i)], 1);
            row = add_scaled(std::move(row), star[static_cast<std::size_t>(i)], -1);
        }
        rows.push_back({d, j, row.normalized()});
    }
    return rows;
}

const std::vector<PrintedRow>& table1_printed_rows() {
    static const std::vector<PrintedRow> rows = {
        {5, make_form({5, 1, -4, -5}, 20), "5c_1 + c_2 - 4c_3 - 5c_4 + 20 >= 0"},
        {6, make_form({-5, 5, 7, -19, -65}, 245), "-5c_1 + 5c_2 + 7c_3 - 19c_4 - 65c_5 + 245 >= 0"},
        {7, make_form({21, -1, -9, 11, -9, -301}, 1071), "21c_1 - c_2 - 9c_3 + 11c_4 - 9c_5 - 301c_6 + 1071 >= 0"},
        {7, make_form({-7, -3, 8, 15, -52, -273}, 1148), "-7c_1 - 3c_2 + 8c_3 + 15c_4 - 52c_5 - 273c_6 + 1148 >= 0"},
    };
    return rows;
}

std::vector<Table1Match> match_table1() {
    std::vector<Table1Match> out;
    for (const auto& printed : table1_printed_rows()) {
        Table1Match match{printed, {}};
        for (const auto& row : table1_forms(printed.d)) {
            if (row.form == printed.form.normalized()) {
                match.matching_j.push_back(row.j);
            }
        }
        out.push_back(std::move(match));
    }
    return out;
}

}  // namespace polybinom
