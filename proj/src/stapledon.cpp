#include "polybinom/stapledon.hpp"

#include <algorithm>

#include "polybinom/errors.hpp"

namespace polybinom {

namespace {

Integer at(std::span<const Integer> v, int i) {
    return (i >= 0 && static_cast<std::size_t>(i) < v.size()) ? v[static_cast<std::size_t>(i)] : Integer(0);
}

Integer range_sum(std::span<const Integer> v, int from, int to) {
    Integer sum = 0;
    for (int i = from; i <= to; ++i) {
        sum += at(v, i);
    }
    return sum;
}

bool is_symmetric(const std::vector<Integer>& v) {
    return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.rbegin());
}

std::string vector_text(const std::vector<Integer>& v) {
    return format_vector(v);
}

}  // namespace

SymmetricSplit::SymmetricSplit(std::vector<Integer> p, std::vector<Integer> q, int degree)
    : p_(std::move(p)), q_(std::move(q)), degree_(degree) {
    if (degree_ < 0 || p_.size() != static_cast<std::size_t>(degree_) + 1 ||
        q_.size() != static_cast<std::size_t>(degree_)) {
        throw InvariantError("SymmetricSplit: lengths do not match degree " + std::to_string(degree_));
    }
    if (!is_symmetric(p_) || !is_symmetric(q_)) {
        throw InvariantError("SymmetricSplit: p = " + vector_text(p_) + ", q = " + vector_text(q_) +
                             " are not symmetric");
    }
}

std::vector<Integer> SymmetricSplit::difference() const {
    std::vector<Integer> out = p_;
    for (std::size_t j = 0; j < q_.size(); ++j) {
        out[j] -= q_[j];
    }
    return out;
}

SymmetricSplit symmetric_split(std::span<const Integer> v, int degree) {
    if (degree < 0) {
        throw InputError("symmetric_split: negative degree");
    }
    for (std::size_t i = static_cast<std::size_t>(degree) + 1; i < v.size(); ++i) {
        if (v[i] != 0) {
            throw InputError("symmetric_split: vector longer than D + 1 = " + std::to_string(degree + 1));
        }
    }
    const auto d = static_cast<std::size_t>(degree);
    std::vector<Integer> p(d + 1);
    std::vector<Integer> q(d);

    // v_{D-j} = p_j - q_{j-1} and v_j = p_j - q_j on the lower half.
    Integer q_prev = 0;
    for (std::size_t j = 0; 2 * j <= d; ++j) {
        p[j] = at(v, degree - static_cast<int>(j)) + q_prev;
        p[d - j] = p[j];
        if (2 * j + 1 <= d) {
            q[j] = p[j] - at(v, static_cast<int>(j));
            q[d - 1 - j] = q[j];
            q_prev = q[j];
        }
    }

    SymmetricSplit split(std::move(p), std::move(q), degree);
    std::vector<Integer> padded(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(v.size(), d + 1)));
    padded.resize(d + 1);
    if (split.difference() != padded) {
        throw InvariantError("symmetric_split: p - q does not reproduce " + vector_text(padded));
    }
    return split;
}

StapledonAB stapledon_ab(const StarVector& h) {
    if (h.start() != SeriesStart::Zero) {
        throw InputError("stapledon_ab: expects an Ehrhart-style (start 0) star vector");
    }
    const int d = h.transform_degree();
    const int s = h.degree();
    if (s < 0) {
        throw InputError("stapledon_ab: all-zero h* vector");
    }
    if (h[0] < 1) {
        throw InputError("stapledon_ab: h*_0 must be at least 1");
    }
    const std::vector<Integer>& hv = h.entries();
    StapledonAB out;
    out.s = s;
    out.l = d + 1 - s;
    out.unnormalized = h[0] != 1;
    out.a.resize(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        out.a[static_cast<std::size_t>(j)] = range_sum(hv, 0, j) - range_sum(hv, d - j + 1, d);
    }
    out.b.resize(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
        out.b[static_cast<std::size_t>(j)] = range_sum(hv, s - j, s) - range_sum(hv, 0, j);
    }

    // (1 + ... + z^{l-1}) h(z) == a(z) + z^l b(z)
    std::vector<Integer> lhs(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= s; ++i) {
        for (int k = 0; k < out.l; ++k) {
            lhs[static_cast<std::size_t>(i + k)] += hv[static_cast<std::size_t>(i)];
        }
    }
    std::vector<Integer> rhs = out.a;
    for (int j = 0; j < s; ++j) {
        rhs[static_cast<std::size_t>(j + out.l)] += out.b[static_cast<std::size_t>(j)];
    }
    if (lhs != rhs || !is_symmetric(out.a) || !is_symmetric(out.b)) {
        throw InvariantError("stapledon_ab: decomposition identity fails for h* = " + vector_text(hv));
    }
    return out;
}

StapledonCA stapledon_ca(const StarVector& h, const std::optional<StarVector>& interior) {
    StapledonAB ab = stapledon_ab(h);
    const int d = h.transform_degree();
    StapledonCA out;
    out.a = ab.a;
    out.c.resize(static_cast<std::size_t>(d) + 2);
    for (int j = 0; j <= d + 1; ++j) {
        Integer prev = j >= 1 ? out.a[static_cast<std::size_t>(j - 1)] : Integer(0);
        out.c[static_cast<std::size_t>(j)] = prev + h[static_cast<std::size_t>(j)];
    }
    if (!is_symmetric(out.c)) {
        throw InvariantError("stapledon_ca: c = " + vector_text(out.c) + " is not symmetric");
    }
    for (int j = 0; j <= d + 1; ++j) {
        Integer shifted = j >= 1 ? out.a[static_cast<std::size_t>(j - 1)] : Integer(0);
        if (out.c[static_cast<std::size_t>(j)] - shifted != h[static_cast<std::size_t>(j)]) {
            throw InvariantError("stapledon_ca: h != c - z a");
        }
    }
    if (interior) {
        for (int j = 0; j <= d + 1; ++j) {
            Integer a_j = j <= d ? out.a[static_cast<std::size_t>(j)] : Integer(0);
            if (out.c[static_cast<std::size_t>(j)] - a_j != (*interior)[static_cast<std::size_t>(j)]) {
                throw InvariantError("stapledon_ca: c - a differs from the interior h* vector");
            }
        }
    }
    return out;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::Vacuous: return "vacuous";
    }
    return "unknown";
}

Verdict AuditReport::verdict() const {
    if (rows.empty()) {
        return Verdict::Vacuous;
    }
    for (const auto& row : rows) {
        if (!row.holds) {
            return Verdict::Violated;
        }
    }
    return Verdict::Holds;
}

std::string_view family_name(InequalityFamily family) {
    switch (family) {
        case InequalityFamily::Cor2: return "cor2";
        case InequalityFamily::Cor4First: return "cor4_first";
        case InequalityFamily::Cor4Second: return "cor4_second";
        case InequalityFamily::Cor9Eq10: return "cor9_eq10";
        case InequalityFamily::Cor9Eq11: return "cor9_eq11";
        case InequalityFamily::Cor8: return "cor8";
        case InequalityFamily::HershSwartz: return "hersh_swartz";
        case InequalityFamily::BreuerDall: return "breuer_dall";
        case InequalityFamily::Hegedus: return "hegedus";
    }
    return "unknown";
}

AuditReport check_partial_sum_inequalities(std::span<const Integer> v, int degree, InequalityFamily family) {
    AuditReport report;
    report.family = std::string(family_name(family));
    const int d = degree;
    auto ge_row = [&](int j, Integer lhs, Integer rhs) {
        bool holds = lhs >= rhs;
        report.rows.push_back({j, std::move(lhs), std::move(rhs), holds});
    };
    auto le_row = [&](int j, Integer lhs, Integer rhs) {
        bool holds = lhs <= rhs;
        report.rows.push_back({j, std::move(lhs), std::move(rhs), holds});
    };

    switch (family) {
        case InequalityFamily::Cor2:
        case InequalityFamily::Cor8:
            report.relation = ">=";
            report.parameters["d"] = d;
            for (int j = 2; j <= d / 2; ++j) {
                ge_row(j, range_sum(v, d - j, d - 2), range_sum(v, 2, j));
            }
            break;
        case InequalityFamily::Cor4First:
            report.relation = ">=";
            report.parameters["xi"] = d;
            for (int j = 1; j <= (d - 1) / 2; ++j) {
                ge_row(j, range_sum(v, d - j, d - 1), range_sum(v, 1, j));
            }
            break;
        case InequalityFamily::Cor4Second:
            report.relation = ">=";
            report.parameters["xi"] = d;
            for (int j = 1; j <= (d - 1) / 2; ++j) {
                ge_row(j, range_sum(v, d - j, d - 1), range_sum(v, 2, j + 1));
            }
            break;
        case InequalityFamily::Cor9Eq10:
            report.relation = "<=";
            report.parameters["d"] = d;
            for (int j = 1; j <= d / 2 - 1; ++j) {
                le_row(j, range_sum(v, d - j, d - 1), range_sum(v, 2, j + 1));
            }
            break;
        case InequalityFamily::Cor9Eq11:
            report.relation = "<=";
            report.parameters["d"] = d;
            for (int j = 1; j <= d / 2 - 1; ++j) {
                le_row(j, range_sum(v, d - j + 1, d), range_sum(v, 2, j + 1));
            }
            break;
        case InequalityFamily::HershSwartz:
            report.relation = ">=";
            report.parameters["d"] = d;
            for (int j = 2; 2 * j <= d - 1; ++j) {
                ge_row(j, at(v, d - j), at(v, j));
            }
            break;
        case InequalityFamily::BreuerDall:
            report.relation = ">=";
            report.parameters["xi"] = d;
            for (int j = 1; 2 * j <= d; ++j) {
                ge_row(j, at(v, d - j), at(v, j));
            }
            break;
        case InequalityFamily::Hegedus:
            report.relation = "<=";
            report.parameters["d"] = d;
            for (int j = 1; j <= d; ++j) {
                le_row(j, at(v, d - j), binomial(at(v, d - 1) + j - 1, j));
            }
            break;
    }
    return report;
}

AuditReport audit_chain(std::string family, std::span<const Integer> v, int last_j) {
    AuditReport report;
    report.family = std::move(family);
    report.relation = "<=";
    report.parameters["last_j"] = last_j;
    for (int j = 1; j <= last_j; ++j) {
        Integer lhs = j == 1 ? at(v, 0) : at(v, 1);
        Integer rhs = at(v, j);
        bool holds = lhs <= rhs;
        report.rows.push_back({j, std::move(lhs), std::move(rhs), holds});
    }
    return report;
}

AuditReport audit_sign(std::string family, std::span<const Integer> v, bool strict) {
    AuditReport report;
    report.family = std::move(family);
    report.relation = strict ? ">" : ">=";
    for (std::size_t j = 0; j < v.size(); ++j) {
        bool holds = strict ? v[j] > 0 : v[j] >= 0;
        report.rows.push_back({static_cast<int>(j), v[j], 0, holds});
    }
    return report;
}

AuditReport audit_equal(std::string family, const Integer& lhs, const Integer& rhs) {
    AuditReport report;
    report.family = std::move(family);
    report.relation = "==";
    report.rows.push_back({0, lhs, rhs, lhs == rhs});
    return report;
}

AuditReport audit_dominance(std::string family, std::span<const Integer> a, std::span<const Integer> b, int first_j,
                            int last_j) {
    AuditReport report;
    report.family = std::move(family);
    report.relation = ">=";
    for (int j = first_j; j <= last_j; ++j) {
        Integer lhs = at(a, j);
        Integer rhs = at(b, j);
        bool holds = lhs >= rhs;
        report.rows.push_back({j, std::move(lhs), std::move(rhs), holds});
    }
    return report;
}

std::vector<AuditReport> audit_stapledon_ab(const StapledonAB& ab, int degree) {
    std::vector<AuditReport> out;
    out.push_back(audit_equal("stapledon_a0_is_1", ab.a.front(), 1));
    out.push_back(audit_chain("stapledon_a_chain", ab.a, degree - 1));
    out.push_back(audit_sign("stapledon_b_nonnegative", ab.b, false));
    return out;
}

std::vector<AuditReport> audit_stapledon_ca(const StapledonCA& ca, int degree) {
    std::vector<AuditReport> out;
    out.push_back(audit_equal("thm5_c0_is_1", ca.c.front(), 1));
    out.push_back(audit_chain("thm5_c_chain", ca.c, degree));
    out.push_back(audit_equal("thm5_a0_is_1", ca.a.front(), 1));
    out.push_back(audit_chain("thm5_a_chain", ca.a, degree - 1));
    out.push_back(audit_sign("thm5_c_positive", ca.c, true));
    out.push_back(audit_sign("thm5_a_positive", ca.a, true));
    return out;
}

void enforce(const std::vector<AuditReport>& audits, CheckMode mode, std::string_view context) {
    if (mode != CheckMode::Verify) {
        return;
    }
    for (const auto& audit : audits) {
        if (audit.verdict() == Verdict::Violated) {
            throw InvariantError(std::string(context) + ": check '" + audit.family + "' violated");
        }
    }
}

bool all_ok(const std::vector<AuditReport>& audits) {
    return std::all_of(audits.begin(), audits.end(), [](const AuditReport& a) { return a.ok(); });
}

}  // namespace polybinom
