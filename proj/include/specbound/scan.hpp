#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/graph6.hpp"
#include "specbound/report_io.hpp"

namespace specbound {

// Corpus checks. SOUNDNESS compares the optimized bound with the exact
// chromatic number; the other three test signed p-energy inequalities on a
// small exponent grid.
enum class Check { kSoundness, kConj52, kProp52, kThm53 };

std::string_view check_name(Check c);
Check parse_check(std::string_view name);  // throws BadParams

struct ScanOptions {
    std::vector<Check> checks;
    bool exact = false;
    int exact_cap = 64;
    std::int64_t parse_max_n = kDefaultGraph6MaxN;
    int eigen_max_n = kDefaultEigenMaxN;
    std::vector<double> check_ps = {0.0, 0.25, 0.5, 0.75, 1.0,
                                    1.25, 1.5, 1.75, 2.0};
    OptimizerConfig opt;
};

struct ScanRecord {
    long id = 0;
    std::string error;  // error name when the line could not be scored
    bool malformed = false;
    bool size_limited = false;
    int n = 0;
    int m = -1;  // -1 when the line did not parse
    bool has_bounds = false;
    BoundReport bounds;
    std::optional<int> chi;
    std::optional<int> omega;
    std::vector<Check> violations;
    std::optional<bool> thm53_equality;
};

ScanRecord scan_line(std::string_view line, long id, const ScanOptions& opts);

std::string scan_record_csv(const ScanRecord& rec);
std::string scan_record_json(const ScanRecord& rec);

struct ScanSummary {
    long lines = 0;
    long malformed = 0;
    long size_limited = 0;
    long error_records = 0;
    long violating_records = 0;

    // 2 parse failures, 3 size limits, 1 check violations, else 0
    int exit_code() const;
};

// Reads graph6 lines from `in`, one record per line in input order. Records
// are computed in parallel batches; output is serialized. format must be
// kCsv or kJson.
ScanSummary scan_stream(std::istream& in, std::ostream& out, OutputFormat format,
                        const ScanOptions& opts);

}  // namespace specbound
