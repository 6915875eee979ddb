// Acceptance suite: one pass/fail line per criterion, all tolerances pinned.
// Takes the CLI binary path as its only argument (used by the determinism
// criterion).

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <vector>

#include "polybohr/functionals.hpp"
#include "polybohr/radii.hpp"
#include "polybohr/verify.hpp"

using namespace polybohr;

namespace {

int total = 0, passed = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
    ++total;
    if (ok) ++passed;
    std::cout << "criterion " << id << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---- criterion 1: radius constants -----------------------------------------

bool radius_constants(std::string& detail) {
    struct Row {
        double got, expect, tol;
    };
    const std::vector<Row> rows = {
        {solve(RadiusEquation::psi_n(1)).midpoint(), std::sqrt(5.0) - 2.0, 1e-10},
        {solve(RadiusEquation::psi_prime_n(1)).midpoint(), 1.0 / 3.0, 1e-12},
        {solve(RadiusEquation::quartic_eq()).midpoint(), 0.385795, 5e-6},
        {solve(RadiusEquation::sqrt17()).midpoint(), (std::sqrt(17.0) - 3.0) / 4.0, 1e-14},
        {solve(RadiusEquation::r_a0(0.0)).midpoint(), (3.0 - std::sqrt(5.0)) / 2.0, 1e-14},
    };
    double worst = 0.0;
    bool ok = true;
    for (const auto& r : rows) {
        const double err = std::abs(r.got - r.expect);
        worst = std::max(worst, err / r.tol);
        ok = ok && err <= r.tol;
    }
    detail = "worst error at " + fmt(worst) + "x tolerance";
    return ok;
}

// ---- criterion 2: theorem grids ---------------------------------------------

struct GridPoint {
    std::string tag;
    int n;
    int N;     // 0 when the tag has no cutoff parameter
    double a0; // NaN when the tag has no a0 parameter
};

std::vector<GridPoint> theorem_grid() {
    std::vector<GridPoint> grid;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const std::string tag : {"2.1a", "2.1b", "2.4m", "2.4n"})
        for (int n = 1; n <= 3; ++n)
            for (int N = 1; N <= 5; ++N) grid.push_back({tag, n, N, nan});
    for (const std::string tag : {"2.2a", "2.2b"})
        for (int n = 1; n <= 3; ++n)
            for (double a0 : {0.0, 0.25, 0.5, 0.75, 0.9}) grid.push_back({tag, n, 0, a0});
    for (const std::string tag : {"2.3i", "2.3j"})
        for (int n = 1; n <= 3; ++n) grid.push_back({tag, n, 0, nan});
    return grid;
}

bool theorem_grids(std::string& detail) {
    double worst_below = 1.0, worst_sharp = 1.0;
    int failures = 0;
    for (const auto& g : theorem_grid()) {
        const int N = g.N > 0 ? g.N : 1;
        const double a0 = std::isnan(g.a0) ? 0.0 : g.a0;
        const auto below = check_below(g.tag, g.n, N, a0, 1e-3);
        const auto sharp = check_sharp(g.tag, g.n, N, a0, 1e-2, 1e-6);
        if (!below.passed() || !sharp.passed()) ++failures;
        worst_below = std::min(worst_below, below.margin);
        worst_sharp = std::min(worst_sharp, sharp.margin);
    }
    detail = "min below-margin " + fmt(worst_below) + ", min witness excess " +
             fmt(worst_sharp) + ", failures " + std::to_string(failures);
    return failures == 0 && worst_below > 0.0 && worst_sharp > 1e-6;
}

// ---- criterion 3: refined-sum sharpness identity ----------------------------

bool sharpness_identity(std::string& detail) {
    double worst = 0.0;
    bool ok = true;
    for (int n : {1, 2, 3}) {
        for (double a : {0.25, 0.5, 0.75}) {
            const auto f = to_series(ExtremalFunction(a, Form::minus, n), 60);
            for (double x : {0.3, 0.5}) {
                for (int N : {1, 2, 3}) {
                    const auto v =
                        refined_sum_diagonal(f, EvalContext::diagonal(n, x / n, -1, N));
                    const double rhs = (1.0 - a * a) * std::pow(x, N) / (1.0 - x);
                    const double gap = std::abs(v.value - rhs);
                    ok = ok && gap <= v.truncation_error + 1e-8;
                    worst = std::max(worst, gap - v.truncation_error);
                }
            }
        }
    }
    detail = "worst gap beyond tail " + fmt(worst);
    return ok;
}

// ---- criterion 4: coefficient equalities ------------------------------------

bool carlson_equalities(std::string& detail) {
    double worst = 0.0;
    for (double a = 0.1; a < 0.95; a += 0.1) {
        const auto c = profile_coefficients(ExtremalFunction(a, Form::minus, 1), 25);
        for (int k = 0; k <= 10; ++k) {
            double rhs = 1.0;
            for (int i = 0; i <= k; ++i) rhs -= c[i] * c[i];
            worst = std::max(worst, std::abs(std::abs(c[2 * k + 1]) - rhs));
            if (k >= 1) {
                double rhs2 = 1.0;
                for (int i = 0; i < k; ++i) rhs2 -= c[i] * c[i];
                rhs2 -= c[k] * c[k] / (1.0 + std::abs(c[0]));
                worst = std::max(worst, std::abs(std::abs(c[2 * k]) - rhs2));
            }
        }
    }
    detail = "worst residual " + fmt(worst);
    return worst <= 1e-12;
}

// ---- criterion 5: two-path oracle -------------------------------------------

class SeriesCache {
  public:
    const TruncatedSeries& get(int n, double a, Form form, int K) {
        const auto key = std::make_tuple(n, static_cast<int>(a * 1000), form == Form::plus, K);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, to_series(ExtremalFunction(a, form, n), K)).first;
        return it->second;
    }

  private:
    std::map<std::tuple<int, int, bool, int>, TruncatedSeries> cache_;
};

struct TwoPath {
    double series = 0.0;
    double err = 0.0; // certified truncation of the series path
};

double sq_err(double v, double e) { return 2.0 * v * e + e * e; }

TwoPath series_path(const std::string& tag, const TruncatedSeries& f, int n, double r, int N) {
    const int sign = (tag == "2.1a" || tag == "2.1b") ? -1 : +1;
    const EvalContext ctx = EvalContext::diagonal(n, r, sign, std::max(N, 1));
    TwoPath out;
    if (tag == "2.4m" || tag == "2.4n") {
        const int maxed = n == 1 ? 48 : (n == 2 ? 26 : 20);
        const auto v = tag == "2.4m" ? functional_M(f, ctx, maxed) : functional_N(f, ctx, maxed);
        out.series = v.value;
        out.err = v.truncation_error;
        return out;
    }
    const EvalResult e = f.eval(ctx.z);
    const double m = std::abs(e.value);
    const bool squared = tag == "2.1b" || tag == "2.2b" || tag == "2.3j";
    out.series = squared ? m * m : m;
    out.err = squared ? sq_err(m, e.remainder) : e.remainder;
    if (tag == "2.3i" || tag == "2.3j") {
        const auto de = f.radial_derivative().eval(ctx.z);
        out.series += std::abs(de.value);
        out.err += f.tail().radial_derivative_tail(f.truncation_degree() + 1, ctx.rbar());
        const auto maj = majorant_sum(f, ctx.r, 2);
        out.series += maj.value;
        out.err += maj.truncation_error;
        const auto diag = refined_sum_diagonal(f, ctx.with_cutoff(1));
        out.series += diag.breakdown.weighted_quadratic;
        out.err += diag.truncation_error;
    } else {
        const auto diag = refined_sum_diagonal(f, ctx);
        out.series += diag.value;
        out.err += diag.truncation_error;
    }
    return out;
}

double closed_path(const std::string& tag, const ExtremalFunction& w, double r, int N) {
    if (tag == "2.1a") return functional_A1_closed(w, r, -1, N).value;
    if (tag == "2.1b") return functional_A2_closed(w, r, -1, N).value;
    if (tag == "2.2a") return functional_A3_closed(w, r, +1).value;
    if (tag == "2.2b") return functional_A4_closed(w, r, +1).value;
    if (tag == "2.3i") return functional_I_closed(w, r, +1).value;
    if (tag == "2.3j") return functional_J_closed(w, r, +1).value;
    if (tag == "2.4m") return functional_M_closed(w, r, +1, N).value;
    return functional_N_closed(w, r, +1, N).value;
}

bool two_path_oracle(std::string& detail) {
    SeriesCache cache;
    double worst = -1.0;
    int failures = 0, points = 0;
    for (const auto& g : theorem_grid()) {
        const int N = g.N > 0 ? g.N : 1;
        const double a0 = std::isnan(g.a0) ? 0.0 : g.a0;
        const double root = solve(radius_equation_for(g.tag, N, a0)).midpoint();
        const double x = root * (1.0 - 1e-3);
        const Form form = (g.tag == "2.2a" || g.tag == "2.2b" || g.tag == "2.3i" ||
                           g.tag == "2.3j")
                              ? Form::plus
                              : Form::minus;
        const bool deriv = g.tag == "2.4m" || g.tag == "2.4n";
        const int K = deriv ? (g.n == 1 ? 60 : (g.n == 2 ? 40 : 30)) : 60;
        for (double a : {0.3, 0.7}) {
            const ExtremalFunction w(a, form, g.n);
            const auto& f = cache.get(g.n, a, form, K);
            const TwoPath sp = series_path(g.tag, f, g.n, x / g.n, N);
            const double cp = closed_path(g.tag, w, x / g.n, N);
            const double gap = std::abs(sp.series - cp);
            ++points;
            if (!(gap <= sp.err + 1e-10)) ++failures;
            worst = std::max(worst, gap - sp.err);
        }
    }
    detail = std::to_string(points) + " points, worst gap beyond tail " + fmt(worst) +
             ", failures " + std::to_string(failures);
    return failures == 0;
}

// ---- criterion 6: bracket properties ----------------------------------------

bool bracket_properties(std::string& detail) {
    bool ok = true;
    std::string why;

    auto check_cert = [&](const RadiusEquation& eq) {
        const auto cert = solve(eq);
        if (cert.sign_low * cert.sign_high != -1) {
            ok = false;
            why = "certificate signs (" + eq.name() + ")";
        }
        if (!minimality_sweep(eq, cert.x_low)) {
            ok = false;
            why = "minimality (" + eq.name() + ")";
        }
        return cert.midpoint();
    };

    for (int i = 0; i < 100; ++i) {
        const double a0 = i / 100.0;
        if (!(RadiusEquation::r_a0(a0).closed_value() > std::sqrt(5.0) - 2.0)) {
            ok = false;
            why = "r-a0 lower bound";
        }
        for (CubicVariant v : {CubicVariant::statement, CubicVariant::proof}) {
            const double root = check_cert(RadiusEquation::cubic(a0, v));
            if (!(root > 1.0 / 3.0 && root < 1.0 / (2.0 + a0))) {
                ok = false;
                why = "cubic bracket";
            }
        }
    }
    double prev = 0.0;
    for (int N = 1; N <= 8; ++N) {
        const double x = check_cert(RadiusEquation::psi_n(N));
        if (!(x > prev)) {
            ok = false;
            why = "psi monotonicity";
        }
        prev = x;
        if (!(check_cert(RadiusEquation::psi_prime_n(N)) >= x)) {
            ok = false;
            why = "psi-prime ordering";
        }
        if (!(check_cert(RadiusEquation::tilde_prime_n(N)) >=
              check_cert(RadiusEquation::tilde_n(N)))) {
            ok = false;
            why = "tilde ordering";
        }
    }
    check_cert(RadiusEquation::quartic_eq());
    check_cert(RadiusEquation::sqrt17());
    check_cert(RadiusEquation::r_a0(0.37));
    detail = ok ? "100-point a0 grid, N <= 8" : why;
    return ok;
}

// ---- criterion 7: lemma oracles ----------------------------------------------

bool lemma_oracles(std::string& detail) {
    bool ok = true;
    double worst = std::numeric_limits<double>::infinity();
    for (int n : {1, 2, 3}) {
        const auto sp = run_lemma_schwarz(n, 2026);
        const auto db = run_lemma_derivative(n, 2026);
        ok = ok && sp.passed() && db.passed();
        worst = std::min({worst, sp.margin, db.margin});
    }
    detail = "min margin " + fmt(worst);
    return ok;
}

// ---- criterion 8: CLI determinism ---------------------------------------------

std::pair<int, std::string> run_cmd(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, out};
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool cli_determinism(const char* cli, std::string& detail) {
    if (cli == nullptr) {
        detail = "CLI path argument missing";
        return false;
    }
    const std::string cmd =
        std::string("\"") + cli + "\" verify --theorem 2.1a --n 2 --N 2 --seed 7";
    const auto [code1, out1] = run_cmd(cmd);
    const auto [code2, out2] = run_cmd(cmd);
    detail = "exit " + std::to_string(code1) + ", " + std::to_string(out1.size()) + " bytes";
    return code1 == 0 && code2 == 0 && !out1.empty() && out1 == out2;
}

} // namespace

int main(int argc, char** argv) {
    std::string d;

    report(1, "radius constants", radius_constants(d), d);
    report(2, "theorem grids below/sharp", theorem_grids(d), d);
    report(3, "refined-sum sharpness identity", sharpness_identity(d), d);
    report(4, "coefficient equalities", carlson_equalities(d), d);
    report(5, "two-path functional oracle", two_path_oracle(d), d);
    report(6, "bracket properties", bracket_properties(d), d);
    report(7, "lemma oracles", lemma_oracles(d), d);
    report(8, "CLI determinism", cli_determinism(argc > 1 ? argv[1] : nullptr, d), d);

    std::cout << "ACCEPTANCE: " << passed << "/" << total << " criteria passed\n";
    return passed == total ? 0 : 1;
}
