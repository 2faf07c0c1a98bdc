#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polybinom/integer.hpp"

namespace polybinom {

/// Univariate polynomial with exact coefficients in the monomial basis.
/// Coefficient i multiplies n^i; trailing zeros are never stored, so the zero
/// polynomial has an empty coefficient list and degree() == -1.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

    static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }
    // The polynomial n.
    static Polynomial identity() { return Polynomial(std::vector<T>{T(0), T(1)}); }

    const std::vector<T>& coefficients() const { return coefficients_; }
    // Zero past the stored range.
    T coefficient(std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : T(0); }

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }

    T evaluate(const Integer& n) const {
        T acc = 0;
        const T x(n);
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }
    T operator()(const Integer& n) const { return evaluate(n); }

    Polynomial& operator+=(const Polynomial& other) { return combine(other, 1); }
    Polynomial& operator-=(const Polynomial& other) { return combine(other, -1); }
    Polynomial& operator*=(const Polynomial& other) {
        if (is_zero() || other.is_zero()) {
            coefficients_.clear();
            return *this;
        }
        std::vector<T> product(coefficients_.size() + other.coefficients_.size() - 1);
        for (std::size_t i = 0; i < coefficients_.size(); ++i) {
            for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
                product[i + j] += coefficients_[i] * other.coefficients_[j];
            }
        }
        coefficients_ = std::move(product);
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& scalar) {
        for (auto& c : coefficients_) {
            c *= scalar;
        }
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const T& rhs) { return lhs *= rhs; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Human-readable, highest power first: "n^3 - 3n^2 + 2n"; non-integral
    // rational coefficients print as "(1/6)n^3".
    std::string to_string(std::string_view variable = "n") const;

private:
    Polynomial& combine(const Polynomial& other, int sign) {
        if (coefficients_.size() < other.coefficients_.size()) {
            coefficients_.resize(other.coefficients_.size());
        }
        for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
            if (sign > 0) {
                coefficients_[i] += other.coefficients_[i];
            } else {
                coefficients_[i] -= other.coefficients_[i];
            }
        }
        trim();
        return *this;
    }
    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == 0) {
            coefficients_.pop_back();
        }
    }

    std::vector<T> coefficients_;
};

using IntPolynomial = Polynomial<Integer>;
// Integer-valued polynomials whose monomial coefficients need not be
// integers, such as order and Ehrhart polynomials.
using RatPolynomial = Polynomial<Rational>;

extern template class Polynomial<Integer>;
extern template class Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p);
/// Throws InvariantError if a coefficient is not an integer.
IntPolynomial to_integral(const RatPolynomial& p);

/// Unique polynomial of degree <= expected_degree through the given points,
/// in exact rational arithmetic. Throws InputError for a wrong point count or
/// repeated abscissae.
RatPolynomial interpolate_rational(std::span<const std::pair<Integer, Integer>> points, int expected_degree);

/// interpolate_rational, additionally requiring integer coefficients:
/// InvariantError otherwise (a counting bug or a wrong degree bound).
IntPolynomial interpolate(std::span<const std::pair<Integer, Integer>> points, int expected_degree);

/// Lower summation bound n >= start of the series whose numerator a star
/// vector holds.
enum class SeriesStart { Zero = 0, One = 1 };

/// Numerator of (1-z)^{D+1} * sum_{n >= start} p(n) z^n.
///
/// Index convention: start Zero vectors hold indices 0..D; start One vectors
/// hold indices 0..D+1 with entry 0 always 0 (the numerator of a series
/// starting at n = 1 may reach z^{D+1}). A start One vector whose top entry
/// is known to vanish may be stored truncated to D+1 entries. Entries past
/// the stored range read as zero.
class StarVector {
public:
    StarVector(std::vector<Integer> entries, int transform_degree, SeriesStart start);

    const std::vector<Integer>& entries() const { return entries_; }
    int transform_degree() const { return transform_degree_; }
    SeriesStart start() const { return start_; }
    std::size_t size() const { return entries_.size(); }
    Integer operator[](std::size_t i) const;

    // Highest nonzero index s, or -1 for the zero vector.
    int degree() const;
    // D + 1 - s.
    int codegree() const;

    // Same vector with the top entry dropped; it must be zero.
    StarVector drop_top() const;

    StarVector& operator+=(const StarVector& other);
    friend StarVector operator+(StarVector lhs, const StarVector& rhs) { return lhs += rhs; }
    friend bool operator==(const StarVector&, const StarVector&) = default;

private:
    std::vector<Integer> entries_;
    int transform_degree_;
    SeriesStart start_;
};

/// Binomial transform of p with respect to the basis C(n+D-i, D). Throws
/// InputError when degree(p) > D.
StarVector binomial_transform(const IntPolynomial& p, int transform_degree, SeriesStart start);
/// Same for an integer-valued rational polynomial; InvariantError if p(n) is
/// not an integer at a sampled n.
StarVector binomial_transform(const RatPolynomial& p, int transform_degree, SeriesStart start);

/// p(n) = sum_i v_i C(n+D-i, D). The same formula inverts both series
/// conventions because C(n+D-i, D) vanishes for 0 <= n+D-i < D.
RatPolynomial inverse_transform_rational(const StarVector& v);
/// inverse_transform_rational with integer coefficients asserted.
IntPolynomial inverse_transform(const StarVector& v);

/// z^{len-1} v(1/z) for a coefficient vector of the given length.
std::vector<Integer> reverse_coefficients(std::vector<Integer> v, std::size_t length);

}  // namespace polybinom
