// Row serialization for verification results and radius tables: human table,
// RFC-4180 CSV, and JSON lines.  All numeric fields go through one fixed
// formatter so identical runs emit identical bytes.

#ifndef POLYBOHR_REPORT_HPP
#define POLYBOHR_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "polybohr/verify.hpp"

namespace polybohr {

enum class OutputFormat { table, csv, jsonl };

// %.17g; NaN renders as an empty CSV field / JSON null / "-" in tables.
std::string format_double(double v, OutputFormat fmt);

void write_results_header(std::ostream& os, OutputFormat fmt);
void write_result_row(std::ostream& os, const CheckResult& row, OutputFormat fmt);
void write_results(std::ostream& os, const std::vector<CheckResult>& rows, OutputFormat fmt);

struct RadiusRow {
    std::string family;
    int n = 1;
    int N = 0;       // 0 when not applicable
    double a0 = std::numeric_limits<double>::quiet_NaN();
    double x = 0.0;  // root in the aggregate variable
    double r = 0.0;  // x / n
    double width = 0.0;
};

void write_radius_header(std::ostream& os, OutputFormat fmt);
void write_radius_row(std::ostream& os, const RadiusRow& row, OutputFormat fmt);

} // namespace polybohr

#endif
