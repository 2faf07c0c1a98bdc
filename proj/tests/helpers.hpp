#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polybinom/graph.hpp"
#include "polybinom/integer.hpp"

namespace fixture {

inline std::vector<polybinom::Integer> vec(std::initializer_list<long long> xs) {
    std::vector<polybinom::Integer> out;
    for (long long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

inline polybinom::Multigraph k3() { return {3, {{0, 1}, {1, 2}, {0, 2}}}; }
inline polybinom::Multigraph p3() { return {3, {{0, 1}, {1, 2}}}; }
inline polybinom::Multigraph k4() { return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}; }
inline polybinom::Multigraph dipole(int k) {
    return {2, std::vector<polybinom::Edge>(static_cast<std::size_t>(k), polybinom::Edge{0, 1})};
}
inline polybinom::Multigraph double_edge() { return dipole(2); }
inline polybinom::Multigraph theta() { return dipole(3); }
inline polybinom::Multigraph single_loop() { return {1, {{0, 0}}}; }

inline std::string data_path(const std::string& name) { return std::string(POLYBINOM_TEST_DATA) + "/" + name; }

}  // namespace fixture
