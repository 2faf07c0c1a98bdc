#include "polybinom/report.hpp"

#include <limits>
#include <sstream>

namespace polybinom {

namespace {

std::string bits(std::uint64_t mask, int width) {
    std::string out;
    for (int e = 0; e < width; ++e) {
        out += ((mask >> e) & 1U) ? '1' : '0';
    }
    return out;
}

void audit_lines(std::ostringstream& out, const std::vector<AuditReport>& audits) {
    out << "audits:\n";
    for (const auto& a : audits) {
        out << "  " << a.family << ": " << verdict_name(a.verdict());
        if (a.verdict() == Verdict::Violated) {
            for (const auto& row : a.rows) {
                if (!row.holds) {
                    out << " [j=" << row.j << ": " << to_string(row.lhs) << ' ' << a.relation << ' '
                        << to_string(row.rhs) << " fails]";
                }
            }
        }
        out << '\n';
    }
}

}  // namespace

Json to_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return to_string(value);
}

Json to_json(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(to_json(v));
    }
    return out;
}

Json to_json(const IntPolynomial& p) { return to_json(p.coefficients()); }

Json to_json(const RatPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) {
        out.push_back(denominator(c) == 1 ? to_json(Integer(numerator(c))) : Json(c.str()));
    }
    return out;
}

Json to_json(const StarVector& v) {
    return Json{{"entries", to_json(v.entries())}, {"D", v.transform_degree()}, {"start", v.start() == SeriesStart::One ? 1 : 0}};
}

Json to_json(const SymmetricSplit& s) {
    return Json{{"D", s.degree()}, {"p", to_json(s.p())}, {"q", to_json(s.q())}};
}

Json to_json(const AuditReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back(Json{{"j", row.j}, {"lhs", to_json(row.lhs)}, {"rhs", to_json(row.rhs)}, {"holds", row.holds}});
    }
    Json params = Json::object();
    for (const auto& [k, v] : report.parameters) {
        params[k] = v;
    }
    return Json{{"family", report.family},
                {"relation", report.relation},
                {"parameters", params},
                {"rows", rows},
                {"verdict", std::string(verdict_name(report.verdict()))}};
}

Json to_json(const std::vector<AuditReport>& audits) {
    Json out = Json::array();
    for (const auto& a : audits) {
        out.push_back(to_json(a));
    }
    return out;
}

Json to_json(const Multigraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back(Json::array({e.u, e.v}));
    }
    return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

Json to_json(const Poset& p) {
    Json covers = Json::array();
    for (const auto& [a, b] : p.covers()) {
        covers.push_back(Json::array({a, b}));
    }
    return Json{{"elements", p.size()}, {"covers", covers}};
}

Json to_json(const ChromaticResult& r) {
    return Json{{"graph", to_json(r.graph)},
                {"chi", to_json(r.chi)},
                {"chi_star", to_json(r.chi_star)},
                {"a", to_json(r.split.p())},
                {"b", to_json(r.split.q())},
                {"acyclic_count", to_json(r.acyclic_count)},
                {"audits", to_json(r.audits)},
                {"ok", all_ok(r.audits)}};
}

Json to_json(const FlowResult& r) {
    Json kochol = Json::array();
    for (std::size_t n = 0; n < r.kochol.size(); ++n) {
        kochol.push_back(Json{{"n", n + 1}, {"counts", to_json(r.kochol[n])}});
    }
    return Json{{"graph", to_json(r.graph)},
                {"xi", r.xi},
                {"phi", to_json(r.phi)},
                {"f", to_json(r.f)},
                {"phi_star", to_json(r.phi_star)},
                {"f_star", to_json(r.f_star)},
                {"alpha", to_json(r.phi_split.p())},
                {"beta", to_json(r.phi_split.q())},
                {"c", to_json(r.f_split.p())},
                {"d", to_json(r.f_split.q())},
                {"totally_cyclic_count", to_json(r.totally_cyclic_count)},
                {"indegree_sequence_count", to_json(r.indegree_sequence_count)},
                {"kochol", kochol},
                {"audits", to_json(r.audits)},
                {"ok", all_ok(r.audits)}};
}

Json to_json(const OrderResult& r) {
    return Json{{"poset", to_json(r.poset)},
                {"omega_strict", to_json(r.omega)},
                {"omega_star", to_json(r.omega_star)},
                {"a", to_json(r.split.p())},
                {"b", to_json(r.split.q())},
                {"h_star", to_json(r.h_star)},
                {"h_star_descents", to_json(r.h_star_descents)},
                {"h_star_interior", to_json(r.h_star_interior)},
                {"stapledon_ab", Json{{"a", to_json(r.stapledon_ab.a)},
                                      {"b", to_json(r.stapledon_ab.b)},
                                      {"s", r.stapledon_ab.s},
                                      {"l", r.stapledon_ab.l}}},
                {"stapledon_ca", Json{{"c", to_json(r.stapledon_ca.c)}, {"a", to_json(r.stapledon_ca.a)}}},
                {"audits", to_json(r.audits)},
                {"ok", all_ok(r.audits)}};
}

Json to_json(const std::vector<Table1Row>& rows, const std::vector<Table1Match>& matches) {
    Json derived = Json::array();
    for (const auto& row : rows) {
        derived.push_back(Json{{"d", row.d},
                               {"j", row.j},
                               {"coefficients", to_json(row.form.coefficients)},
                               {"constant", to_json(row.form.constant)},
                               {"text", row.form.to_string()}});
    }
    Json printed = Json::array();
    bool all_matched = true;
    for (const auto& m : matches) {
        all_matched = all_matched && !m.matching_j.empty();
        printed.push_back(Json{{"d", m.printed.d},
                               {"text", m.printed.text},
                               {"matching_j", m.matching_j},
                               {"matched", !m.matching_j.empty()}});
    }
    return Json{{"derived", derived}, {"printed", printed}, {"all_matched", all_matched}};
}

std::string format_text(const ChromaticResult& r) {
    std::ostringstream out;
    out << "vertices " << r.graph.vertex_count() << ", edges " << r.graph.edge_count() << '\n';
    out << "chi(n) = " << r.chi.to_string() << '\n';
    out << "chi* = " << format_vector(r.chi_star.entries()) << '\n';
    out << "a = " << format_vector(r.split.p()) << '\n';
    out << "b = " << format_vector(r.split.q()) << '\n';
    out << "acyclic orientations = " << to_string(r.acyclic_count) << '\n';
    audit_lines(out, r.audits);
    return out.str();
}

std::string format_text(const FlowResult& r) {
    std::ostringstream out;
    out << "vertices " << r.graph.vertex_count() << ", edges " << r.graph.edge_count() << ", xi " << r.xi << '\n';
    out << "phi(n) = " << r.phi.to_string() << '\n';
    out << "f(n) = " << r.f.to_string() << '\n';
    out << "phi* = " << format_vector(r.phi_star.entries()) << '\n';
    out << "f* = " << format_vector(r.f_star.entries()) << '\n';
    out << "alpha = " << format_vector(r.phi_split.p()) << '\n';
    out << "beta = " << format_vector(r.phi_split.q()) << '\n';
    out << "c = " << format_vector(r.f_split.p()) << '\n';
    out << "d = " << format_vector(r.f_split.q()) << '\n';
    out << "totally cyclic orientations = " << to_string(r.totally_cyclic_count) << '\n';
    out << "in-degree sequences = " << to_string(r.indegree_sequence_count) << '\n';
    const auto cyclic = enumerate_totally_cyclic_orientations(r.graph);
    out << "kochol table (orientation bits, counts for n = 1.." << r.kochol.size() << "):\n";
    for (std::size_t k = 0; k < cyclic.size(); ++k) {
        out << "  " << bits(cyclic[k].reversed_mask(), r.graph.edge_count());
        for (const auto& column : r.kochol) {
            out << ' ' << to_string(column[k]);
        }
        out << '\n';
    }
    audit_lines(out, r.audits);
    return out.str();
}

std::string format_text(const OrderResult& r) {
    std::ostringstream out;
    out << "elements " << r.poset.size() << ", covers " << r.poset.covers().size() << '\n';
    out << "strict order polynomial = " << r.omega.to_string() << '\n';
    out << "Omega* = " << format_vector(r.omega_star.entries()) << '\n';
    out << "a = " << format_vector(r.split.p()) << '\n';
    out << "b = " << format_vector(r.split.q()) << '\n';
    out << "h* (lattice points) = " << format_vector(r.h_star.entries()) << '\n';
    out << "h* (descents) = " << format_vector(r.h_star_descents.entries()) << '\n';
    out << "h* interior = " << format_vector(r.h_star_interior.entries()) << '\n';
    out << "stapledon a = " << format_vector(r.stapledon_ab.a) << ", b = " << format_vector(r.stapledon_ab.b) << '\n';
    out << "stapledon c = " << format_vector(r.stapledon_ca.c) << ", a = " << format_vector(r.stapledon_ca.a) << '\n';
    audit_lines(out, r.audits);
    return out.str();
}

std::string format_text(const std::vector<Table1Row>& rows, const std::vector<Table1Match>& matches) {
    std::ostringstream out;
    out << "derived forms:\n";
    for (const auto& row : rows) {
        out << "  d=" << row.d << " j=" << row.j << ": " << row.form.to_string() << '\n';
    }
    out << "printed rows:\n";
    for (const auto& m : matches) {
        out << "  d=" << m.printed.d << ": " << m.printed.text << " -> ";
        if (m.matching_j.empty()) {
            out << "no match\n";
            continue;
        }
        out << "matched j =";
        for (int j : m.matching_j) {
            out << ' ' << j;
        }
        out << '\n';
    }
    return out.str();
}

std::string audit_csv_header() { return "instance,family,j,lhs,relation,rhs,holds\n"; }

std::string audit_csv_rows(const std::string& instance, const std::vector<AuditReport>& audits) {
    std::ostringstream out;
    for (const auto& a : audits) {
        for (const auto& row : a.rows) {
            out << instance << ',' << a.family << ',' << row.j << ',' << to_string(row.lhs) << ',' << a.relation << ','
                << to_string(row.rhs) << ',' << (row.holds ? "true" : "false") << '\n';
        }
    }
    return out.str();
}

}  // namespace polybinom
