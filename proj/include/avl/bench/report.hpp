#pragma once

#include <string>
#include <string_view>

#include "avl/bench/experiment.hpp"

namespace avl::bench {

enum class ReportFormat { Table, Csv, Json };

/// Throws PreconditionError on anything other than table, csv or json.
ReportFormat parse_format(std::string_view name);

/// Table: delete-phase averages rounded to integers, one row per strategy and
/// a Percentage row. CSV and JSON carry full-precision values.
std::string render_report(const BenchmarkReport& report, ReportFormat format);

/// Inverse of render_report(..., ReportFormat::Json).
BenchmarkReport parse_json_report(std::string_view json);

}  // namespace avl::bench
