#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nisv {

/// Structured result of one theorem check. Rerunning with the same config
/// reproduces every defect bit for bit; the runtime field is the only
/// nondeterministic entry and is zeroed in stable-output mode.
struct CheckReport {
    std::string id;
    std::map<std::string, std::string> params;
    int order = 0;
    int lambda_samples = 0;
    std::map<std::string, double> defects;
    std::map<std::string, double> tolerances;
    bool pass = false;
    std::uint64_t seed = 0;
    double runtime_ms = 0.0;
};

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string& name);

/// Serialize reports (stable field order). For json the result is an array
/// of objects following the documented schema.
std::string render_reports(const std::vector<CheckReport>& reports, ReportFormat fmt);

/// Write to a file path ("-" writes to stdout).
void emit_report(const std::vector<CheckReport>& reports, ReportFormat fmt, const std::string& path);

} // namespace nisv
