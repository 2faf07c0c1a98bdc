#include "polybinom/integer.hpp"

namespace polybinom {

Integer binomial(const Integer& a, std::int64_t k) {
    if (k < 0) {
        return 0;
    }
    Integer numerator = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        numerator *= a - i;
    }
    return numerator / factorial(k);
}

Integer factorial(std::int64_t k) {
    Integer result = 1;
    for (std::int64_t i = 2; i <= k; ++i) {
        result *= i;
    }
    return result;
}

std::string to_string(const Integer& value) {
    return value.str();
}

std::string format_vector(const std::vector<Integer>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += values[i].str();
    }
    out += ")";
    return out;
}

}  // namespace polybinom
