#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polybinom/chromatic.hpp"
#include "polybinom/flows.hpp"
#include "polybinom/poset.hpp"

namespace polybinom {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// Integers fitting in int64 become JSON numbers, larger ones strings.
Json to_json(const Integer& value);
Json to_json(const std::vector<Integer>& values);
// Coefficient array, low to high.
Json to_json(const IntPolynomial& p);
// Non-integral coefficients as "a/b" strings.
Json to_json(const RatPolynomial& p);
Json to_json(const StarVector& v);
Json to_json(const SymmetricSplit& s);
Json to_json(const AuditReport& report);
Json to_json(const std::vector<AuditReport>& audits);
Json to_json(const Multigraph& g);
Json to_json(const Poset& p);
Json to_json(const ChromaticResult& r);
Json to_json(const FlowResult& r);
Json to_json(const OrderResult& r);
Json to_json(const std::vector<Table1Row>& rows, const std::vector<Table1Match>& matches);

std::string format_text(const ChromaticResult& r);
std::string format_text(const FlowResult& r);
std::string format_text(const OrderResult& r);
std::string format_text(const std::vector<Table1Row>& rows, const std::vector<Table1Match>& matches);

// Header "instance,family,j,lhs,relation,rhs,holds".
std::string audit_csv_header();
std::string audit_csv_rows(const std::string& instance, const std::vector<AuditReport>& audits);

}  // namespace polybinom
