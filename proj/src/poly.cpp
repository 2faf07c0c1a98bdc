#include "polybinom/poly.hpp"

#include <algorithm>
#include <set>

#include "polybinom/errors.hpp"

namespace polybinom {

namespace {

std::string magnitude_text(const Integer& c) { return c.str(); }

std::string magnitude_text(const Rational& c) {
    if (denominator(c) == 1) {
        return numerator(c).str();
    }
    return "(" + numerator(c).str() + "/" + denominator(c).str() + ")";
}

bool is_one(const Integer& c) { return c == 1; }
bool is_one(const Rational& c) { return c == 1; }

Integer integer_value(const Integer& v) { return v; }

Integer integer_value(const Rational& v) {
    if (denominator(v) != 1) {
        throw InvariantError("binomial_transform: polynomial takes non-integer value " + v.str());
    }
    return numerator(v);
}

}  // namespace

template <typename T>
std::string Polynomial<T>::to_string(std::string_view variable) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const T& c = coefficients_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        const T magnitude = c < 0 ? T(-c) : c;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (!is_one(magnitude) || i == 0) {
            out += magnitude_text(magnitude);
        }
        if (i >= 1) {
            out += variable;
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

template class Polynomial<Integer>;
template class Polynomial<Rational>;

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
    return RatPolynomial(std::move(c));
}

IntPolynomial to_integral(const RatPolynomial& p) {
    std::vector<Integer> coefficients;
    coefficients.reserve(p.coefficients().size());
    for (const auto& r : p.coefficients()) {
        if (denominator(r) != 1) {
            throw InvariantError("non-integral coefficient " + r.str());
        }
        coefficients.push_back(numerator(r));
    }
    return IntPolynomial(std::move(coefficients));
}

RatPolynomial interpolate_rational(std::span<const std::pair<Integer, Integer>> points, int expected_degree) {
    if (expected_degree < 0 || points.size() != static_cast<std::size_t>(expected_degree) + 1) {
        throw InputError("interpolate: expected " + std::to_string(expected_degree + 1) + " points, got " +
                         std::to_string(points.size()));
    }
    std::set<Integer> abscissae;
    for (const auto& [x, y] : points) {
        if (!abscissae.insert(x).second) {
            throw InputError("interpolate: duplicate abscissa " + x.str());
        }
    }

    // Newton divided differences, then expansion into the monomial basis.
    const std::size_t count = points.size();
    std::vector<Rational> diffs(count);
    for (std::size_t i = 0; i < count; ++i) {
        diffs[i] = Rational(points[i].second);
    }
    for (std::size_t level = 1; level < count; ++level) {
        for (std::size_t i = count - 1; i >= level; --i) {
            diffs[i] = (diffs[i] - diffs[i - 1]) / Rational(points[i].first - points[i - level].first);
        }
    }

    std::vector<Rational> result(count);
    std::vector<Rational> basis{Rational(1)};  // prod_{k<i} (n - x_k)
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            result[k] += diffs[i] * basis[k];
        }
        std::vector<Rational> next(basis.size() + 1);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            next[k + 1] += basis[k];
            next[k] -= basis[k] * Rational(points[i].first);
        }
        basis = std::move(next);
    }

    return RatPolynomial(std::move(result));
}

IntPolynomial interpolate(std::span<const std::pair<Integer, Integer>> points, int expected_degree) {
    RatPolynomial p = interpolate_rational(points, expected_degree);
    try {
        return to_integral(p);
    } catch (const InvariantError& e) {
        throw InvariantError(std::string("interpolate: ") + e.what());
    }
}

StarVector::StarVector(std::vector<Integer> entries, int transform_degree, SeriesStart start)
    : entries_(std::move(entries)), transform_degree_(transform_degree), start_(start) {
    if (transform_degree_ < 0) {
        throw InputError("StarVector: negative transform degree");
    }
    const std::size_t full = static_cast<std::size_t>(transform_degree_) + 1 + static_cast<std::size_t>(start_);
    const std::size_t base = static_cast<std::size_t>(transform_degree_) + 1;
    if (entries_.size() != full && entries_.size() != base) {
        throw InputError("StarVector: length " + std::to_string(entries_.size()) + " does not fit D = " +
                         std::to_string(transform_degree_));
    }
    if (start_ == SeriesStart::One && entries_[0] != 0) {
        throw InputError("StarVector: series starting at n = 1 must have zero constant term");
    }
}

Integer StarVector::operator[](std::size_t i) const {
    return i < entries_.size() ? entries_[i] : Integer(0);
}

int StarVector::degree() const {
    for (std::size_t i = entries_.size(); i-- > 0;) {
        if (entries_[i] != 0) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int StarVector::codegree() const {
    return transform_degree_ + 1 - degree();
}

StarVector StarVector::drop_top() const {
    if (entries_.size() == static_cast<std::size_t>(transform_degree_) + 1) {
        return *this;
    }
    if (entries_.back() != 0) {
        throw InvariantError("StarVector: top entry " + entries_.back().str() + " does not vanish");
    }
    std::vector<Integer> trimmed(entries_.begin(), entries_.end() - 1);
    return StarVector(std::move(trimmed), transform_degree_, start_);
}

StarVector& StarVector::operator+=(const StarVector& other) {
    if (transform_degree_ != other.transform_degree_ || start_ != other.start_) {
        throw InputError("StarVector: cannot add vectors with different (D, start)");
    }
    if (entries_.size() < other.entries_.size()) {
        entries_.resize(other.entries_.size());
    }
    for (std::size_t i = 0; i < other.entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

namespace {

template <typename T>
StarVector transform_impl(const Polynomial<T>& p, int transform_degree, SeriesStart start) {
    if (transform_degree < 0) {
        throw InputError("binomial_transform: negative D");
    }
    if (p.degree() > transform_degree) {
        throw InputError("binomial_transform: degree " + std::to_string(p.degree()) + " exceeds D = " +
                         std::to_string(transform_degree));
    }
    const int lower = static_cast<int>(start);
    const int top = transform_degree + 1;
    // Coefficient of z^i in (1-z)^{D+1} sum_{n>=start} p(n) z^n.
    auto numerator_coefficient = [&](int i) {
        Integer sum = 0;
        for (int k = 0; k <= top && i - k >= lower; ++k) {
            Integer term = binomial(top, k) * integer_value(p(i - k));
            sum += (k % 2 == 0) ? term : Integer(-term);
        }
        return sum;
    };

    std::vector<Integer> entries;
    entries.reserve(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) {
        entries.push_back(numerator_coefficient(i));
    }
    if (numerator_coefficient(top + 1) != 0) {
        throw InvariantError("binomial_transform: numerator exceeds degree D + 1");
    }
    if (start == SeriesStart::Zero) {
        if (entries.back() != 0) {
            throw InvariantError("binomial_transform: start-0 numerator reaches z^{D+1}");
        }
        entries.pop_back();
    }
    return StarVector(std::move(entries), transform_degree, start);
}

}  // namespace

StarVector binomial_transform(const IntPolynomial& p, int transform_degree, SeriesStart start) {
    return transform_impl(p, transform_degree, start);
}

StarVector binomial_transform(const RatPolynomial& p, int transform_degree, SeriesStart start) {
    return transform_impl(p, transform_degree, start);
}

RatPolynomial inverse_transform_rational(const StarVector& v) {
    const int d = v.transform_degree();
    IntPolynomial sum;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        // prod_{t=0}^{D-1} (n + D - i - t) = D! * C(n + D - i, D)
        IntPolynomial falling = IntPolynomial::constant(1);
        for (int t = 0; t < d; ++t) {
            falling *= IntPolynomial({Integer(d - static_cast<int>(i) - t), Integer(1)});
        }
        sum += falling * v[i];
    }
    RatPolynomial out = to_rational(sum);
    out *= Rational(1, factorial(d));
    return out;
}

IntPolynomial inverse_transform(const StarVector& v) {
    try {
        return to_integral(inverse_transform_rational(v));
    } catch (const InvariantError& e) {
        throw InvariantError(std::string("inverse_transform: ") + e.what());
    }
}

std::vector<Integer> reverse_coefficients(std::vector<Integer> v, std::size_t length) {
    if (v.size() > length) {
        for (std::size_t i = length; i < v.size(); ++i) {
            if (v[i] != 0) {
                throw InputError("reverse_coefficients: vector longer than requested length");
            }
        }
    }
    v.resize(length);
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace polybinom
