#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polybinom/poly.hpp"
#include "polybinom/stapledon.hpp"

namespace polybinom {

/// Finite strict partial order on elements 0..d-1, stored as its transitive
/// closure in bitmask rows.
class Poset {
public:
    static constexpr int kMaxElements = 32;

    Poset() = default;
    /// Closes the relations a < b transitively. Throws InputError for an
    /// out-of-range element, a reflexive pair, or a cycle.
    Poset(int element_count, const std::vector<std::pair<int, int>>& relations);

    static Poset chain(int d);
    static Poset antichain(int d);

    int size() const { return size_; }
    bool less(int a, int b) const { return ((above_[static_cast<std::size_t>(a)] >> b) & 1U) != 0; }
    // Elements strictly above / below a, as bitmasks.
    std::uint32_t above(int a) const { return above_[static_cast<std::size_t>(a)]; }
    std::uint32_t below(int a) const;

    std::vector<std::pair<int, int>> covers() const;
    std::size_t relation_count() const;
    bool is_antichain() const;

    /// label[x] = position of x in the lexicographically smallest topological
    /// sort (0-based).
    std::vector<int> natural_labeling() const;

    /// Poset with element x renamed perm[x].
    Poset relabeled(const std::vector<int>& perm) const;

    /// Isomorphism-invariant certificate: the lexicographically smallest
    /// closure matrix over all relabelings, as a 0/1 string. Exhaustive over
    /// d! permutations, so intended for d <= 8.
    std::string certificate() const;

    friend bool operator==(const Poset&, const Poset&) = default;
    friend auto operator<=>(const Poset&, const Poset&) = default;

private:
    int size_ = 0;
    std::vector<std::uint32_t> above_;
};

inline constexpr int kDefaultPosetCap = 7;
inline constexpr int kDefaultDescentCap = 8;
inline constexpr std::uint64_t kDefaultLatticeBudget = 50'000'000;

/// Number of maps phi: P -> {1..n} with a < b implying phi(a) < phi(b).
Integer count_strict_maps(const Poset& p, int n);

/// Number of maps phi: P -> {0..n} with a < b implying phi(a) <= phi(b)
/// (closed), or phi(a) < phi(b) and 0 < phi < n (interior): the lattice
/// points of n O and of n O°. Throws CapExceeded when (n+1)^d exceeds budget.
Integer order_polytope_points(const Poset& p, int n, bool interior, std::uint64_t budget = kDefaultLatticeBudget);

/// Strict order polynomial, interpolated from counts at n = 1..d+1.
RatPolynomial strict_order_poly(const Poset& p, int cap = kDefaultPosetCap);

/// Ehrhart polynomial of the order polytope (closed) or its interior,
/// interpolated from lattice-point counts.
RatPolynomial order_polytope_ehrhart(const Poset& p, bool interior, int cap = kDefaultPosetCap);

/// Star vector of the strict order polynomial: start One, D = d, stored with
/// d+1 entries (its z^{d+1} coefficient is checked to vanish).
StarVector omega_star(const Poset& p, int cap = kDefaultPosetCap);

/// h* of the order polytope from lattice-point counts.
StarVector lattice_hstar(const Poset& p, int cap = kDefaultPosetCap);

/// h* of the order polytope interior: start One, D = d, d+2 entries.
StarVector interior_hstar(const Poset& p, int cap = kDefaultPosetCap);

/// Symmetric split of omega_star(p) over D = d.
SymmetricSplit order_decomposition(const Poset& p, int cap = kDefaultPosetCap);

/// All linear extensions, each listed bottom to top, in lexicographic order.
std::vector<std::vector<int>> linear_extensions(const Poset& p);

/// h*_k = number of linear extensions with k descents, where a descent is a
/// position whose natural label exceeds the next one.
StarVector hstar_via_descents(const Poset& p, int cap = kDefaultDescentCap);

/// Everything computed about one poset, plus its audit trail.
struct OrderResult {
    Poset poset;
    RatPolynomial omega;
    StarVector omega_star;
    SymmetricSplit split;
    StarVector h_star;
    StarVector h_star_descents;
    StarVector h_star_interior;
    StapledonAB stapledon_ab;
    StapledonCA stapledon_ca;
    std::vector<AuditReport> audits;
};

/// Computes and audits: the decomposition inequalities, Omega*_d = 1, the
/// antichain rule for Omega*_1, the compressed-polytope bound, the partial-sum
/// inequalities, descent/lattice agreement, reciprocity, and the interior
/// shift identity. Throws InputError for d = 0.
OrderResult analyze_poset(const Poset& p, CheckMode mode = CheckMode::Explore, int cap = kDefaultPosetCap);

/// One representative per isomorphism class of posets on d elements, sorted
/// by certificate. Built by scanning all transitive relations contained in
/// the strict upper triangle (every poset has such a labeling). d <= 6.
std::vector<Poset> enumerate_posets(int d);

std::string to_text(const Poset& p);

}  // namespace polybinom
