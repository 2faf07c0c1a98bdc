#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polybinom/integer.hpp"
#include "polybinom/poly.hpp"

namespace polybinom {

/// v = p - q with p symmetric of degree D (p_j = p_{D-j}) and q symmetric of
/// degree D-1 (q_j = q_{D-1-j}). Both symmetries and the reconstruction are
/// checked on construction; positivity is not.
class SymmetricSplit {
public:
    SymmetricSplit(std::vector<Integer> p, std::vector<Integer> q, int degree);

    const std::vector<Integer>& p() const { return p_; }
    const std::vector<Integer>& q() const { return q_; }
    int degree() const { return degree_; }

    // p - q with q zero-padded to length D+1.
    std::vector<Integer> difference() const;

    friend bool operator==(const SymmetricSplit&, const SymmetricSplit&) = default;

private:
    std::vector<Integer> p_;
    std::vector<Integer> q_;
    int degree_;
};

/// The unique symmetric split of v (zero-padded to length D+1):
///   p_j = v_D + ... + v_{D-j} - (v_0 + ... + v_{j-1}),   q_j = p_j - v_j
/// for j up to the middle, extended by symmetry. Throws InputError when v is
/// longer than D+1 and has a nonzero entry past index D.
SymmetricSplit symmetric_split(std::span<const Integer> v, int degree);

/// (1 + z + ... + z^{l-1}) h(z) = a(z) + z^l b(z), where s = deg h and
/// l = D + 1 - s; a has length D+1 and b has length s.
struct StapledonAB {
    std::vector<Integer> a;
    std::vector<Integer> b;
    int s = 0;
    int l = 0;
    // h_0 != 1: the input is a sum of h*-vectors rather than a single one.
    bool unnormalized = false;
};

StapledonAB stapledon_ab(const StarVector& h);

/// h(z) = c(z) - z a(z), with c symmetric of degree D+1 and c_j = a_{j-1} + h_j.
struct StapledonCA {
    std::vector<Integer> c;
    std::vector<Integer> a;
};

/// When an interior star vector (start One, length D+2) is supplied, also
/// checks c - a against it.
StapledonCA stapledon_ca(const StarVector& h, const std::optional<StarVector>& interior = std::nullopt);

enum class Verdict { Holds, Violated, Vacuous };

std::string_view verdict_name(Verdict v);

struct AuditRow {
    int j = 0;
    Integer lhs;
    Integer rhs;
    bool holds = true;
};

/// Outcome of one family of checks. Violations are findings, not errors.
struct AuditReport {
    std::string family;
    // Relation the rows assert between lhs and rhs: ">=", "<=", "==" or ">".
    std::string relation;
    std::map<std::string, int> parameters;
    std::vector<AuditRow> rows;

    Verdict verdict() const;
    bool ok() const { return verdict() != Verdict::Violated; }
};

enum class InequalityFamily {
    Cor2,        // v_{d-2}+...+v_{d-j} >= v_2+...+v_j,            2 <= j <= floor(d/2)
    Cor4First,   // v_{x-1}+...+v_{x-j} >= v_1+...+v_j,            1 <= j <= floor((x-1)/2)
    Cor4Second,  // v_{x-1}+...+v_{x-j} >= v_2+...+v_{j+1},        1 <= j <= floor((x-1)/2)
    Cor9Eq10,    // h_{d-1}+...+h_{d-j} <= h_2+...+h_{j+1},        1 <= j <= floor(d/2)-1
    Cor9Eq11,    // h_d+...+h_{d-j+1} <= h_2+...+h_{j+1},          1 <= j <= floor(d/2)-1
    Cor8,        // same rows as Cor2, for order-polynomial star vectors
    HershSwartz, // v_{d-j} >= v_j,                                 2 <= j <= (d-1)/2
    BreuerDall,  // v_{x-j} >= v_j,                                 1 <= j <= floor(x/2)
    Hegedus,     // v_{d-j} <= C(v_{d-1}+j-1, j),                   1 <= j <= d
};

std::string_view family_name(InequalityFamily family);

/// Evaluates every row of the family. `degree` is d for chromatic, order and
/// Ehrhart vectors and the cyclomatic number for flow vectors.
AuditReport check_partial_sum_inequalities(std::span<const Integer> v, int degree, InequalityFamily family);

/// Rows "v_0 <= v_1" (j = 1) and "v_1 <= v_j" (2 <= j <= last_j).
AuditReport audit_chain(std::string family, std::span<const Integer> v, int last_j);

/// One row per entry: v_j > 0 (strict) or v_j >= 0.
AuditReport audit_sign(std::string family, std::span<const Integer> v, bool strict);

/// One row lhs == rhs.
AuditReport audit_equal(std::string family, const Integer& lhs, const Integer& rhs);

/// Rows a_j >= b_j for first_j <= j <= last_j.
AuditReport audit_dominance(std::string family, std::span<const Integer> a, std::span<const Integer> b, int first_j,
                            int last_j);

/// Stapledon's inequalities for a single lattice polytope: 1 = a_0 <= a_1 <= a_j
/// (1 <= j <= D-1) and nonnegative b.
std::vector<AuditReport> audit_stapledon_ab(const StapledonAB& ab, int degree);

/// 1 = c_0 <= c_1 <= c_j (1 <= j <= D) and 1 = a_0 <= a_1 <= a_j (1 <= j <= D-1).
std::vector<AuditReport> audit_stapledon_ca(const StapledonCA& ca, int degree);

enum class CheckMode { Explore, Verify };

/// In Verify mode, throws InvariantError naming the first violated family.
void enforce(const std::vector<AuditReport>& audits, CheckMode mode, std::string_view context);

bool all_ok(const std::vector<AuditReport>& audits);

}  // namespace polybinom
