#include "polybinom/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "polybinom/errors.hpp"

namespace polybinom {

namespace {

std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

void check_cap(const Poset& p, int cap, const char* what) {
    if (p.size() > cap) {
        throw CapExceeded(std::string(what) + ": poset has " + std::to_string(p.size()) + " elements, cap is " +
                          std::to_string(cap));
    }
}

// Elements in natural (lexicographically smallest topological) order.
std::vector<int> topological_order(const Poset& p) {
    std::vector<int> labels = p.natural_labeling();
    std::vector<int> order(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
        order[static_cast<std::size_t>(labels[x])] = static_cast<int>(x);
    }
    return order;
}

// Backtracking count of maps into {lo..hi} over elements in topological
// order; `strict` selects < versus <= along the order relation.
struct MapCounter {
    const Poset& poset;
    std::vector<int> order;
    std::vector<int> value;
    int lo;
    int hi;
    bool strict;

    Integer run() {
        value.assign(static_cast<std::size_t>(poset.size()), 0);
        return recurse(0);
    }

    Integer recurse(std::size_t index) {
        if (index == order.size()) {
            return 1;
        }
        const int x = order[index];
        int min_value = lo;
        const std::uint32_t below = poset.below(x);
        for (std::uint32_t rest = below; rest != 0; rest &= rest - 1) {
            const int y = std::countr_zero(rest);
            min_value = std::max(min_value, value[static_cast<std::size_t>(y)] + (strict ? 1 : 0));
        }
        if (min_value > hi) {
            return 0;
        }
        if (index + 1 == order.size()) {
            return hi - min_value + 1;
        }
        Integer total = 0;
        for (int v = min_value; v <= hi; ++v) {
            value[static_cast<std::size_t>(x)] = v;
            total += recurse(index + 1);
        }
        return total;
    }
};

AuditReport audit_vector_equal(std::string family, const std::vector<Integer>& lhs, const std::vector<Integer>& rhs) {
    AuditReport report;
    report.family = std::move(family);
    report.relation = "==";
    const std::size_t len = std::max(lhs.size(), rhs.size());
    for (std::size_t j = 0; j < len; ++j) {
        Integer l = j < lhs.size() ? lhs[j] : Integer(0);
        Integer r = j < rhs.size() ? rhs[j] : Integer(0);
        bool holds = l == r;
        report.rows.push_back({static_cast<int>(j), std::move(l), std::move(r), holds});
    }
    return report;
}

}  // namespace

Poset::Poset(int element_count, const std::vector<std::pair<int, int>>& relations) : size_(element_count) {
    if (element_count < 0 || element_count > kMaxElements) {
        throw InputError("Poset: element count " + std::to_string(element_count) + " outside [0, " +
                         std::to_string(kMaxElements) + "]");
    }
    above_.assign(static_cast<std::size_t>(size_), 0);
    for (const auto& [a, b] : relations) {
        if (a < 0 || b < 0 || a >= size_ || b >= size_) {
            throw InputError("Poset: relation (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") has an element out of range");
        }
        if (a == b) {
            throw InputError("Poset: reflexive relation on element " + std::to_string(a));
        }
        above_[static_cast<std::size_t>(a)] |= bit(b);
    }
    // Warshall closure over bitmask rows.
    for (int k = 0; k < size_; ++k) {
        for (int i = 0; i < size_; ++i) {
            if (less(i, k)) {
                above_[static_cast<std::size_t>(i)] |= above_[static_cast<std::size_t>(k)];
            }
        }
    }
    for (int i = 0; i < size_; ++i) {
        if (less(i, i)) {
            throw InputError("Poset: relations contain a cycle through element " + std::to_string(i));
        }
    }
}

Poset Poset::chain(int d) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < d; ++i) {
        rel.emplace_back(i, i + 1);
    }
    return Poset(d, rel);
}

Poset Poset::antichain(int d) {
    return Poset(d, {});
}

std::uint32_t Poset::below(int a) const {
    std::uint32_t mask = 0;
    for (int x = 0; x < size_; ++x) {
        if (less(x, a)) {
            mask |= bit(x);
        }
    }
    return mask;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            if (!less(a, b)) {
                continue;
            }
            // a < b is a cover unless some c has a < c < b.
            if ((above(a) & below(b)) == 0) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::size_t Poset::relation_count() const {
    std::size_t count = 0;
    for (auto row : above_) {
        count += static_cast<std::size_t>(std::popcount(row));
    }
    return count;
}

bool Poset::is_antichain() const {
    return relation_count() == 0;
}

std::vector<int> Poset::natural_labeling() const {
    std::vector<int> label(static_cast<std::size_t>(size_), -1);
    std::uint32_t placed = 0;
    for (int next = 0; next < size_; ++next) {
        for (int x = 0; x < size_; ++x) {
            if ((placed & bit(x)) == 0 && (below(x) & ~placed) == 0) {
                label[static_cast<std::size_t>(x)] = next;
                placed |= bit(x);
                break;
            }
        }
    }
    return label;
}

Poset Poset::relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            if (less(a, b)) {
                rel.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
            }
        }
    }
    return Poset(size_, rel);
}

std::string Poset::certificate() const {
    if (size_ > 8) {
        throw CapExceeded("Poset::certificate: exhaustive canonical form limited to 8 elements");
    }
    // Row-major closure bits, most significant first, so numeric order is
    // lexicographic order of the matrix string.
    std::vector<int> perm(static_cast<std::size_t>(size_));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    const int cells = size_ * size_;
    do {
        std::uint64_t code = 0;
        for (int a = 0; a < size_; ++a) {
            for (int b = 0; b < size_; ++b) {
                if (less(a, b)) {
                    const int pa = perm[static_cast<std::size_t>(a)];
                    const int pb = perm[static_cast<std::size_t>(b)];
                    code |= std::uint64_t{1} << (cells - 1 - (pa * size_ + pb));
                }
            }
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::string out = std::to_string(size_) + ":";
    for (int i = 0; i < cells; ++i) {
        out += ((best >> (cells - 1 - i)) & 1U) != 0 ? '1' : '0';
    }
    return out;
}

Integer count_strict_maps(const Poset& p, int n) {
    if (n < 0) {
        return 0;
    }
    MapCounter counter{p, topological_order(p), {}, 1, n, true};
    return counter.run();
}

Integer order_polytope_points(const Poset& p, int n, bool interior, std::uint64_t budget) {
    if (n < 0) {
        throw InputError("order_polytope_points: negative dilation");
    }
    double work = 1.0;
    for (int i = 0; i < p.size(); ++i) {
        work *= static_cast<double>(n) + 1.0;
    }
    if (work > static_cast<double>(budget)) {
        throw CapExceeded("order_polytope_points: (n+1)^d exceeds enumeration budget");
    }
    if (interior) {
        MapCounter counter{p, topological_order(p), {}, 1, n - 1, true};
        return counter.run();
    }
    MapCounter counter{p, topological_order(p), {}, 0, n, false};
    return counter.run();
}

RatPolynomial strict_order_poly(const Poset& p, int cap) {
    check_cap(p, cap, "strict_order_poly");
    std::vector<std::pair<Integer, Integer>> points;
    for (int n = 1; n <= p.size() + 1; ++n) {
        points.emplace_back(n, count_strict_maps(p, n));
    }
    return interpolate_rational(points, p.size());
}

RatPolynomial order_polytope_ehrhart(const Poset& p, bool interior, int cap) {
    check_cap(p, cap, "order_polytope_ehrhart");
    std::vector<std::pair<Integer, Integer>> points;
    const int first = interior ? 1 : 0;
    for (int n = first; n <= first + p.size(); ++n) {
        points.emplace_back(n, order_polytope_points(p, n, interior));
    }
    return interpolate_rational(points, p.size());
}

StarVector omega_star(const Poset& p, int cap) {
    return binomial_transform(strict_order_poly(p, cap), p.size(), SeriesStart::One).drop_top();
}

StarVector lattice_hstar(const Poset& p, int cap) {
    return binomial_transform(order_polytope_ehrhart(p, false, cap), p.size(), SeriesStart::Zero);
}

StarVector interior_hstar(const Poset& p, int cap) {
    return binomial_transform(order_polytope_ehrhart(p, true, cap), p.size(), SeriesStart::One);
}

SymmetricSplit order_decomposition(const Poset& p, int cap) {
    return symmetric_split(omega_star(p, cap).entries(), p.size());
}

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    const int d = p.size();
    std::vector<std::uint32_t> below(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) {
        below[static_cast<std::size_t>(x)] = p.below(x);
    }
    auto recurse = [&](auto&& self, std::uint32_t placed) -> void {
        if (static_cast<int>(current.size()) == d) {
            out.push_back(current);
            return;
        }
        for (int x = 0; x < d; ++x) {
            if ((placed & bit(x)) == 0 && (below[static_cast<std::size_t>(x)] & ~placed) == 0) {
                current.push_back(x);
                self(self, placed | bit(x));
                current.pop_back();
            }
        }
    };
    recurse(recurse, 0);
    return out;
}

StarVector hstar_via_descents(const Poset& p, int cap) {
    check_cap(p, cap, "hstar_via_descents");
    const std::vector<int> label = p.natural_labeling();
    std::vector<Integer> h(static_cast<std::size_t>(p.size()) + 1);
    for (const auto& ext : linear_extensions(p)) {
        std::size_t descents = 0;
        for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
            if (label[static_cast<std::size_t>(ext[i])] > label[static_cast<std::size_t>(ext[i + 1])]) {
                ++descents;
            }
        }
        h[descents] += 1;
    }
    return StarVector(std::move(h), p.size(), SeriesStart::Zero);
}

OrderResult analyze_poset(const Poset& p, CheckMode mode, int cap) {
    const int d = p.size();
    if (d == 0) {
        throw InputError("analyze_poset: the empty poset is excluded from verification");
    }
    check_cap(p, cap, "analyze_poset");

    RatPolynomial omega = strict_order_poly(p, cap);
    StarVector star = binomial_transform(omega, d, SeriesStart::One).drop_top();
    SymmetricSplit split = symmetric_split(star.entries(), d);
    RatPolynomial ehr = order_polytope_ehrhart(p, false, cap);
    StarVector h = binomial_transform(ehr, d, SeriesStart::Zero);
    StarVector h_interior = interior_hstar(p, cap);
    StarVector h_desc = hstar_via_descents(p, std::max(cap, kDefaultDescentCap));
    StapledonAB ab = stapledon_ab(h);
    StapledonCA ca = stapledon_ca(h, h_interior);

    std::vector<AuditReport> audits;
    // Decomposition: 1 = a_0 <= a_1 <= a_j and 1 = b_0 <= b_1 <= b_j, all positive.
    audits.push_back(audit_equal("thm6_a0_is_1", split.p().front(), 1));
    audits.push_back(audit_equal("thm6_b0_is_1", split.q().front(), 1));
    audits.push_back(audit_chain("thm6_a_chain", split.p(), d - 1));
    audits.push_back(audit_chain("thm6_b_chain", split.q(), d - 2));
    audits.push_back(audit_sign("thm6_a_positive", split.p(), true));
    audits.push_back(audit_sign("thm6_b_positive", split.q(), true));
    audits.push_back(audit_sign("omega_star_nonnegative", star.entries(), false));
    audits.push_back(audit_equal("omega_star_top_is_1", star[static_cast<std::size_t>(d)], 1));
    if (p.is_antichain()) {
        AuditReport vacuous;
        vacuous.family = "omega_star_1_zero_unless_antichain";
        vacuous.relation = "==";
        audits.push_back(vacuous);
    } else {
        audits.push_back(audit_equal("omega_star_1_zero_unless_antichain", star[1], 0));
    }
    audits.push_back(check_partial_sum_inequalities(star.entries(), d, InequalityFamily::Cor8));
    audits.push_back(check_partial_sum_inequalities(star.entries(), d, InequalityFamily::Hegedus));

    // Order polytope cross-checks.
    audits.push_back(audit_vector_equal("descents_match_lattice_hstar", h_desc.entries(), h.entries()));
    AuditReport reciprocity;
    reciprocity.family = "ehrhart_macdonald_reciprocity";
    reciprocity.relation = "==";
    for (int n = 1; n <= d + 2; ++n) {
        const Rational value = ehr(-n);
        if (denominator(value) != 1) {
            throw InvariantError("order polytope Ehrhart polynomial is not integer-valued at " + std::to_string(-n));
        }
        Integer lhs = numerator(value);
        if (d % 2 != 0) {
            lhs = -lhs;
        }
        Integer rhs = order_polytope_points(p, n, true);
        bool holds = lhs == rhs;
        reciprocity.rows.push_back({n, std::move(lhs), std::move(rhs), holds});
    }
    audits.push_back(std::move(reciprocity));
    std::vector<Integer> shifted(h_interior.entries().begin() + 1, h_interior.entries().end());
    audits.push_back(audit_vector_equal("omega_star_is_shifted_interior_hstar", star.entries(), shifted));
    audits.push_back(audit_vector_equal("hstar_reversal_is_interior_hstar",
                                        reverse_coefficients(h.entries(), static_cast<std::size_t>(d) + 2),
                                        h_interior.entries()));
    for (auto& a : audit_stapledon_ab(ab, d)) {
        audits.push_back(std::move(a));
    }
    for (auto& a : audit_stapledon_ca(ca, d)) {
        audits.push_back(std::move(a));
    }
    audits.push_back(check_partial_sum_inequalities(h.entries(), d, InequalityFamily::Cor9Eq10));
    audits.push_back(check_partial_sum_inequalities(h.entries(), d, InequalityFamily::Cor9Eq11));

    enforce(audits, mode, "poset " + to_text(p));
    return OrderResult{p,  std::move(omega), std::move(star), std::move(split), std::move(h), std::move(h_desc),
                       std::move(h_interior), std::move(ab), std::move(ca), std::move(audits)};
}

std::vector<Poset> enumerate_posets(int d) {
    if (d < 0 || d > 6) {
        throw CapExceeded("enumerate_posets: supported for 0 <= d <= 6");
    }
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            slots.emplace_back(a, b);
        }
    }
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Poset>> reps;
    const std::uint32_t combos = std::uint32_t{1} << slots.size();
    for (std::uint32_t mask = 0; mask < combos; ++mask) {
        std::vector<std::uint32_t> above(static_cast<std::size_t>(d), 0);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((mask >> s) & 1U) {
                above[static_cast<std::size_t>(slots[s].first)] |= bit(slots[s].second);
            }
        }
        bool transitive = true;
        for (int a = 0; a < d && transitive; ++a) {
            for (std::uint32_t rest = above[static_cast<std::size_t>(a)]; rest != 0; rest &= rest - 1) {
                const int b = std::countr_zero(rest);
                if ((above[static_cast<std::size_t>(b)] & ~above[static_cast<std::size_t>(a)]) != 0) {
                    transitive = false;
                    break;
                }
            }
        }
        if (!transitive) {
            continue;
        }
        std::vector<std::pair<int, int>> rel;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if ((mask >> s) & 1U) {
                rel.push_back(slots[s]);
            }
        }
        Poset p(d, rel);
        std::string cert = p.certificate();
        if (seen.insert(cert).second) {
            reps.emplace_back(std::move(cert), std::move(p));
        }
    }
    std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Poset> out;
    out.reserve(reps.size());
    for (auto& [cert, p] : reps) {
        out.push_back(std::move(p));
    }
    return out;
}

std::string to_text(const Poset& p) {
    std::string out = "elements " + std::to_string(p.size()) + "\n";
    for (const auto& [a, b] : p.covers()) {
        out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
}

}  // namespace polybinom
