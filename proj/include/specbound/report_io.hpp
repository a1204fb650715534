#pragma once

#include <optional>
#include <string>

#include "specbound/bounds.hpp"

namespace specbound {

enum class OutputFormat { kText, kCsv, kJson };

OutputFormat parse_format(std::string_view name);  // throws BadParams

// All numeric output goes through this: 12 significant digits, so values
// round-trip through parsing within 1 ulp; +infinity prints as "inf".
std::string fmt_double(double v);

std::string json_escape(std::string_view s);

// Extra per-graph results that ride along with a BoundReport.
struct ExactInfo {
    std::optional<int> chi;
    std::optional<int> omega;
    std::optional<int> chi_q;  // certified quantum chromatic number
};

inline constexpr std::string_view kCsvHeader =
    "id,n,m,hoffman,inertia,ando_lin,sum_bound,p_best,f_best,chi,omega,flags";

std::string bound_report_text(const std::string& label, int n, int m,
                              const BoundReport& r, const ExactInfo& info);
std::string bound_report_json(const std::string& label, int n, int m,
                              const BoundReport& r, const ExactInfo& info);
std::string bound_report_csv(const std::string& label, int n, int m,
                             const BoundReport& r, const ExactInfo& info);

}  // namespace specbound
