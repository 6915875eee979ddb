#include "polybohr/report.hpp"

#include <cmath>
#include <cstdio>

namespace polybohr {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string num_or(double v, const char* absent) {
    return std::isnan(v) ? std::string(absent) : num(v);
}

// short form for the human table
std::string num_short(double v) {
    if (std::isnan(v)) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string format_double(double v, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::table: return num_or(v, "-");
        case OutputFormat::csv: return num_or(v, "");
        case OutputFormat::jsonl: return num_or(v, "null");
    }
    return num(v);
}

void write_results_header(std::ostream& os, OutputFormat fmt) {
    if (fmt == OutputFormat::csv)
        os << "theorem,n,N,a0,x,value,tail,verdict\n";
    else if (fmt == OutputFormat::table)
        os << "theorem  n  N  a0           x            value                tail         verdict\n";
}

void write_result_row(std::ostream& os, const CheckResult& row, OutputFormat fmt) {
    const std::string nn = row.N > 0 ? std::to_string(row.N) : (fmt == OutputFormat::jsonl ? "null" : fmt == OutputFormat::table ? "-" : "");
    switch (fmt) {
        case OutputFormat::csv:
            os << row.theorem << ',' << row.n << ',' << nn << ','
               << format_double(row.a0, fmt) << ',' << format_double(row.x, fmt) << ','
               << format_double(row.value, fmt) << ',' << format_double(row.tail, fmt) << ','
               << to_string(row.verdict) << '\n';
            break;
        case OutputFormat::jsonl:
            os << "{\"theorem\":\"" << row.theorem << "\",\"n\":" << row.n << ",\"N\":" << nn
               << ",\"a0\":" << format_double(row.a0, fmt)
               << ",\"x\":" << format_double(row.x, fmt)
               << ",\"value\":" << format_double(row.value, fmt)
               << ",\"tail\":" << format_double(row.tail, fmt) << ",\"verdict\":\""
               << to_string(row.verdict) << "\"}\n";
            break;
        case OutputFormat::table: {
            char buf[192];
            std::snprintf(buf, sizeof(buf), "%-8s %-2d %-2s %-12s %-12s %-20s %-12s %s%s\n",
                          row.theorem.c_str(), row.n, nn.c_str(), num_short(row.a0).c_str(),
                          num_short(row.x).c_str(), format_double(row.value, fmt).c_str(),
                          num_short(row.tail).c_str(), to_string(row.verdict).c_str(),
                          row.heuristic ? " (heuristic)" : "");
            os << buf;
            break;
        }
    }
}

void write_results(std::ostream& os, const std::vector<CheckResult>& rows, OutputFormat fmt) {
    write_results_header(os, fmt);
    for (const auto& r : rows) write_result_row(os, r, fmt);
}

void write_radius_header(std::ostream& os, OutputFormat fmt) {
    if (fmt == OutputFormat::csv)
        os << "family,n,N,a0,x,r,width\n";
    else if (fmt == OutputFormat::table)
        os << "family          n  N  a0       x                     r                     width\n";
}

void write_radius_row(std::ostream& os, const RadiusRow& row, OutputFormat fmt) {
    const std::string nn = row.N > 0 ? std::to_string(row.N) : (fmt == OutputFormat::jsonl ? "null" : fmt == OutputFormat::table ? "-" : "");
    switch (fmt) {
        case OutputFormat::csv:
            os << row.family << ',' << row.n << ',' << nn << ',' << format_double(row.a0, fmt)
               << ',' << format_double(row.x, fmt) << ',' << format_double(row.r, fmt) << ','
               << format_double(row.width, fmt) << '\n';
            break;
        case OutputFormat::jsonl:
            os << "{\"family\":\"" << row.family << "\",\"n\":" << row.n << ",\"N\":" << nn
               << ",\"a0\":" << format_double(row.a0, fmt)
               << ",\"x\":" << format_double(row.x, fmt)
               << ",\"r\":" << format_double(row.r, fmt)
               << ",\"width\":" << format_double(row.width, fmt) << "}\n";
            break;
        case OutputFormat::table: {
            char buf[192];
            std::snprintf(buf, sizeof(buf), "%-15s %-2d %-2s %-8s %-21s %-21s %s\n",
                          row.family.c_str(), row.n, nn.c_str(), num_short(row.a0).c_str(),
                          format_double(row.x, fmt).c_str(), format_double(row.r, fmt).c_str(),
                          num_short(row.width).c_str());
            os << buf;
            break;
        }
    }
}

} // namespace polybohr
