#include "polybinom/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "polybinom/errors.hpp"

namespace polybinom {

namespace {

struct Line {
    int number;
    std::string keyword;
    std::vector<long long> args;
};

[[noreturn]] void fail(const std::string& source, int line, const std::string& message) {
    throw InputError(source + ":" + std::to_string(line) + ": " + message);
}

// Splits into keyword + integer arguments, skipping blanks and comments.
std::vector<Line> tokenize(std::istream& in, const std::string& source) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream words(raw);
        Line line{number, {}, {}};
        if (!(words >> line.keyword)) {
            continue;
        }
        std::string token;
        while (words >> token) {
            try {
                std::size_t used = 0;
                long long value = std::stoll(token, &used);
                if (used != token.size()) {
                    throw std::invalid_argument(token);
                }
                line.args.push_back(value);
            } catch (const std::exception&) {
                fail(source, number, "expected an integer, got '" + token + "'");
            }
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

template <typename Build>
auto parse_header_body(std::istream& in, const std::string& source, const std::string& header,
                       const std::string& item, Build build) {
    std::vector<Line> lines = tokenize(in, source);
    if (lines.empty()) {
        fail(source, 1, "empty input, expected '" + header + " <count>'");
    }
    const Line& first = lines.front();
    if (first.keyword != header || first.args.size() != 1) {
        fail(source, first.number, "expected '" + header + " <count>'");
    }
    const long long count = first.args[0];
    if (count < 0 || count > 1'000'000) {
        fail(source, first.number, "count out of range");
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.keyword != item || line.args.size() != 2) {
            fail(source, line.number, "expected '" + item + " <a> <b>'");
        }
        for (long long x : line.args) {
            if (x < 0 || x >= count) {
                fail(source, line.number, "label " + std::to_string(x) + " outside [0, " + std::to_string(count) + ")");
            }
        }
        pairs.emplace_back(static_cast<int>(line.args[0]), static_cast<int>(line.args[1]));
    }
    return build(static_cast<int>(count), pairs, lines);
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    return in;
}

}  // namespace

Multigraph parse_graph(std::istream& in, const std::string& source) {
    return parse_header_body(in, source, "vertices", "edge",
                             [](int n, const std::vector<std::pair<int, int>>& pairs, const std::vector<Line>&) {
                                 std::vector<Edge> edges;
                                 edges.reserve(pairs.size());
                                 for (const auto& [u, v] : pairs) {
                                     edges.push_back({u, v});
                                 }
                                 return Multigraph(n, std::move(edges));
                             });
}

Multigraph read_graph_file(const std::string& path) {
    std::ifstream in = open(path);
    return parse_graph(in, path);
}

Poset parse_poset(std::istream& in, const std::string& source) {
    return parse_header_body(
        in, source, "elements", "cover",
        [&source](int d, const std::vector<std::pair<int, int>>& pairs, const std::vector<Line>& lines) {
            if (d > Poset::kMaxElements) {
                fail(source, lines.front().number, "at most " + std::to_string(Poset::kMaxElements) + " elements");
            }
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (pairs[i].first == pairs[i].second) {
                    fail(source, lines[i + 1].number, "cover relation must relate distinct elements");
                }
            }
            try {
                return Poset(d, pairs);
            } catch (const InputError& e) {
                throw InputError(source + ": not a partial order: " + e.what());
            }
        });
}

Poset read_poset_file(const std::string& path) {
    std::ifstream in = open(path);
    return parse_poset(in, path);
}

}  // namespace polybinom
