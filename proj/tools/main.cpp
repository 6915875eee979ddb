// Command-line front end: radius tables, theorem verification runs, sweeps,
// and extremal series dumps.
//
// Exit codes: 0 success / all PASS; 1 any FAIL; 2 configuration error or
// unknown tag; 3 no root found; 4 any INCONCLUSIVE verdict.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polybohr/report.hpp"

using namespace polybohr;

namespace {

struct IntRange {
    int lo = 1, hi = 1;
};

IntRange parse_range(const std::string& s) {
    IntRange r;
    const auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, pos));
            r.hi = std::stoi(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected INT or LO..HI, got '" + s + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + s + "'");
    return r;
}

std::vector<double> parse_grid(const std::string& s) {
    // START:STEP:END inclusive, or a single value
    std::vector<double> out;
    const auto p1 = s.find(':');
    try {
        if (p1 == std::string::npos) {
            out.push_back(std::stod(s));
            return out;
        }
        const auto p2 = s.find(':', p1 + 1);
        if (p2 == std::string::npos) throw std::invalid_argument(s);
        const double start = std::stod(s.substr(0, p1));
        const double step = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
        const double end = std::stod(s.substr(p2 + 1));
        if (step <= 0.0) {
            out.push_back(start);
            return out;
        }
        for (double v = start; v <= end + 1e-12; v += step) out.push_back(v);
        return out;
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw CLI::ValidationError("grid", "expected VALUE or START:STEP:END, got '" + s + "'");
    }
}

OutputFormat parse_format(const std::string& s) {
    if (s == "table") return OutputFormat::table;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json-lines" || s == "jsonl") return OutputFormat::jsonl;
    throw CLI::ValidationError("format", "expected table, csv, or json-lines");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("POLYBOHR_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            // fall through to the built-in default
        }
    }
    return 12345;
}

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw CLI::ValidationError("output", "cannot open '" + path + "'");
        os = &file;
    }
};

int verdict_exit(bool any_fail, bool any_inconclusive) {
    if (any_fail) return 1;
    if (any_inconclusive) return 4;
    return 0;
}

int run_radii(const std::string& family, const std::string& n_range,
              const std::string& N_range, const std::string& a0_grid, double tol,
              const std::string& format, const std::string& output) {
    const OutputFormat fmt = parse_format(format);
    const IntRange nr = parse_range(n_range);
    const IntRange Nr = parse_range(N_range);
    const std::vector<double> a0s = parse_grid(a0_grid);
    Sink sink;
    sink.open(output);

    std::vector<RadiusEquation> eqs;
    auto want = [&family](const char* name) { return family == "all" || family == name; };
    for (int N = Nr.lo; N <= Nr.hi; ++N) {
        if (want("psi")) eqs.push_back(RadiusEquation::psi_n(N));
        if (want("psi-prime")) eqs.push_back(RadiusEquation::psi_prime_n(N));
        if (want("tilde")) eqs.push_back(RadiusEquation::tilde_n(N));
        if (want("tilde-prime")) eqs.push_back(RadiusEquation::tilde_prime_n(N));
    }
    for (double a0 : a0s) {
        if (want("r-a0")) eqs.push_back(RadiusEquation::r_a0(a0));
        if (want("cubic-a0")) {
            eqs.push_back(RadiusEquation::cubic(a0, CubicVariant::statement));
            eqs.push_back(RadiusEquation::cubic(a0, CubicVariant::proof));
        }
    }
    if (want("sqrt17")) eqs.push_back(RadiusEquation::sqrt17());
    if (want("quartic")) eqs.push_back(RadiusEquation::quartic_eq());
    if (eqs.empty()) {
        std::cerr << "error: unknown family '" << family << "'\n";
        return 2;
    }

    write_radius_header(*sink.os, fmt);
    try {
        for (const auto& eq : eqs) {
            const RootCertificate cert = solve(eq, tol);
            for (int n = nr.lo; n <= nr.hi; ++n) {
                RadiusRow row;
                row.family = eq.name();
                row.n = n;
                const bool hasN = eq.family == RadiusFamily::psi ||
                                  eq.family == RadiusFamily::psi_prime ||
                                  eq.family == RadiusFamily::tilde ||
                                  eq.family == RadiusFamily::tilde_prime;
                row.N = hasN ? eq.N : 0;
                const bool hasA0 = eq.family == RadiusFamily::r_a0_closed ||
                                   eq.family == RadiusFamily::cubic_a0;
                row.a0 = hasA0 ? eq.a0 : std::numeric_limits<double>::quiet_NaN();
                row.x = cert.midpoint();
                row.r = cert.midpoint() / n;
                row.width = cert.width();
                write_radius_row(*sink.os, row, fmt);
            }
        }
    } catch (const NoRootError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int run_verify_one(std::ostream& os, OutputFormat fmt, bool header, const std::string& tag,
                   int n, int N, double a0, double eps, bool sharp, std::uint64_t seed,
                   bool& any_fail, bool& any_inconclusive) {
    VerificationReport rep;
    if (tag == "lemma1")
        rep = run_lemma_schwarz(n, seed);
    else if (tag == "lemma2")
        rep = run_lemma_derivative(n, seed);
    else if (tag == "lemma4")
        rep = run_lemma_coefficients(n, seed);
    else if (tag == "lemma5")
        rep = check_refined_bound(n, N, seed);
    else if (sharp)
        rep = check_sharp(tag, n, N, a0, eps);
    else
        rep = check_below(tag, n, N, a0, eps);
    if (header) write_results_header(os, fmt);
    for (const auto& row : rep.results) write_result_row(os, row, fmt);
    if (!rep.passed()) any_fail = true;
    if (rep.any_inconclusive()) any_inconclusive = true;
    return 0;
}

int run_verify(const std::string& tag, int n, int N, double a0, double eps, bool sharp,
               std::uint64_t seed, const std::string& format, const std::string& output) {
    const auto& tags = known_tags();
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) {
        std::cerr << "error: unknown theorem tag '" << tag << "'\n";
        return 2;
    }
    const OutputFormat fmt = parse_format(format);
    Sink sink;
    sink.open(output);
    bool any_fail = false, any_inconclusive = false;
    try {
        run_verify_one(*sink.os, fmt, true, tag, n, N, a0, eps, sharp, seed, any_fail,
                       any_inconclusive);
    } catch (const NoRootError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return verdict_exit(any_fail, any_inconclusive);
}

int run_sweep(const std::string& theorems, const std::string& n_range,
              const std::string& N_range, const std::string& a0_grid, double eps,
              std::uint64_t seed, const std::string& format, const std::string& output) {
    const OutputFormat fmt = parse_format(format);
    const IntRange nr = parse_range(n_range);
    const IntRange Nr = parse_range(N_range);
    const std::vector<double> a0s = parse_grid(a0_grid);
    Sink sink;
    sink.open(output);

    std::vector<std::string> tags;
    if (theorems == "all") {
        for (const auto& t : known_tags())
            if (is_theorem_tag(t)) tags.push_back(t);
    } else {
        std::stringstream ss(theorems);
        std::string item;
        while (std::getline(ss, item, ',')) tags.push_back(item);
    }
    const auto& known = known_tags();
    for (const auto& t : tags)
        if (std::find(known.begin(), known.end(), t) == known.end()) {
            std::cerr << "error: unknown theorem tag '" << t << "'\n";
            return 2;
        }

    bool any_fail = false, any_inconclusive = false;
    bool header = true;
    try {
        for (const auto& tag : tags) {
            const bool useN = tag_uses_N(tag);
            const bool useA0 = tag_uses_a0(tag);
            for (int n = nr.lo; n <= nr.hi; ++n) {
                const auto Ns = useN ? Nr : IntRange{1, 1};
                const auto As = useA0 ? a0s : std::vector<double>{0.0};
                for (int N = Ns.lo; N <= Ns.hi; ++N) {
                    for (double a0 : As) {
                        if (is_theorem_tag(tag)) {
                            run_verify_one(*sink.os, fmt, header, tag, n, N, a0, eps, false,
                                           seed, any_fail, any_inconclusive);
                            header = false;
                            run_verify_one(*sink.os, fmt, header, tag, n, N, a0, eps, true,
                                           seed, any_fail, any_inconclusive);
                        } else {
                            run_verify_one(*sink.os, fmt, header, tag, n, N, a0, eps, false,
                                           seed, any_fail, any_inconclusive);
                            header = false;
                        }
                    }
                }
            }
        }
    } catch (const NoRootError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return verdict_exit(any_fail, any_inconclusive);
}

int run_series_dump(double a, const std::string& form_name, int n, int K,
                    const std::string& output) {
    if (!(a >= 0.0 && a < 1.0)) {
        std::cerr << "error: a must lie in [0,1)\n";
        return 2;
    }
    Form form;
    if (form_name == "minus")
        form = Form::minus;
    else if (form_name == "plus")
        form = Form::plus;
    else {
        std::cerr << "error: form must be 'minus' or 'plus'\n";
        return 2;
    }
    if (n < 1 || K < 0) {
        std::cerr << "error: need n >= 1 and K >= 0\n";
        return 2;
    }
    Sink sink;
    sink.open(output);
    to_series(ExtremalFunction(a, form, n), K).dump(*sink.os);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohr-type radii and inequality verification on the polydisk"};
    app.require_subcommand(1);

    std::string format = "table", output, family = "all";
    std::string n_range = "1", N_range = "1", a0_grid = "0";
    double tol = 1e-13, eps = 1e-3, a = 0.0, a0 = 0.0;
    std::string tag, form_name = "minus", theorems = "all";
    int n = 1, N = 1, K = 8;
    bool sharp = false;
    std::uint64_t seed = default_seed();

    auto* radii = app.add_subcommand("radii", "solve radius equations and print the table");
    radii->add_option("--family", family,
                      "psi|psi-prime|r-a0|cubic-a0|sqrt17|quartic|tilde|tilde-prime|all");
    radii->add_option("--n", n_range, "dimension or range LO..HI");
    radii->add_option("--N", N_range, "cutoff degree or range LO..HI");
    radii->add_option("--a0", a0_grid, "constant-term grid START:STEP:END or value");
    radii->add_option("--tol", tol, "certificate width (>= 1e-14)");
    radii->add_option("--format", format, "table|csv|json-lines");
    radii->add_option("--output", output, "write to this path instead of stdout");

    auto* verify = app.add_subcommand("verify", "run one theorem/lemma check");
    verify->add_option("--theorem", tag, "2.1a|2.1b|2.2a|2.2b|2.3i|2.3j|2.4m|2.4n|lemma1|lemma2|lemma4|lemma5")
        ->required();
    verify->add_option("--n", n, "dimension");
    verify->add_option("--N", N, "cutoff degree");
    verify->add_option("--a0", a0, "constant-term parameter for 2.2 tags");
    verify->add_option("--eps", eps, "relative offset from the radius");
    verify->add_flag("--sharp", sharp, "probe sharpness above the radius");
    verify->add_option("--seed", seed, "RNG seed (or env POLYBOHR_SEED)");
    verify->add_option("--format", format, "table|csv|json-lines");
    verify->add_option("--output", output, "write to this path instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "verify below+sharp over (n, N, a0) grids");
    sweep->add_option("--theorems", theorems, "comma-separated tags or 'all'");
    sweep->add_option("--n", n_range, "dimension range LO..HI");
    sweep->add_option("--N", N_range, "cutoff range LO..HI");
    sweep->add_option("--a0", a0_grid, "a0 grid START:STEP:END or value");
    sweep->add_option("--eps", eps, "relative offset from the radius");
    sweep->add_option("--seed", seed, "RNG seed (or env POLYBOHR_SEED)");
    sweep->add_option("--format", format, "table|csv|json-lines");
    sweep->add_option("--output", output, "write to this path instead of stdout");

    auto* dump = app.add_subcommand("series-dump", "emit extremal series coefficients");
    dump->add_option("--a", a, "extremal parameter in [0,1)");
    dump->add_option("--form", form_name, "minus|plus");
    dump->add_option("--n", n, "dimension");
    dump->add_option("--K", K, "truncation degree");
    dump->add_option("--output", output, "write to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (radii->parsed()) return run_radii(family, n_range, N_range, a0_grid, tol, format, output);
        if (verify->parsed()) return run_verify(tag, n, N, a0, eps, sharp, seed, format, output);
        if (sweep->parsed())
            return run_sweep(theorems, n_range, N_range, a0_grid, eps, seed, format, output);
        if (dump->parsed()) return run_series_dump(a, form_name, n, K, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
