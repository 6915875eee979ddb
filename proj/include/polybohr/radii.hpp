// Radius equations and certified root isolation (scan for the first sign
// change, then bisect).  Closed-form families return exact values with a
// degenerate zero-width certificate validated against an associated
// polynomial.

#ifndef POLYBOHR_RADII_HPP
#define POLYBOHR_RADII_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace polybohr {

enum class RadiusFamily {
    psi,          // 2(1+x)x^N - (1-x)^2 = 0
    psi_prime,    // (1+x)x^N - (1-x)^2 = 0
    r_a0_closed,  // x = 2 / (3 + a0 + sqrt(5)(1 + a0))
    cubic_a0,     // (1-a0^3)x^3 - (1+2a0)x^2 - 2x + 1 = 0 (statement variant)
                  // or (1-a0^2)x^3 - ... (proof variant)
    sqrt17_closed,// x = (sqrt(17) - 3)/4
    quartic,      // 1 - 2x - x^2 - x^3 - x^4 = 0
    tilde,        // (1+x)(1-2x)(1-x)^{N-1} - 2x^N = 0
    tilde_prime   // (1+x)(1-2x)(1-x)^{N-1} - x^N = 0
};

enum class CubicVariant { statement, proof };

struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RadiusEquation {
    RadiusFamily family;
    int N = 1;
    double a0 = 0.0;
    CubicVariant variant = CubicVariant::statement;

    static RadiusEquation psi_n(int N);
    static RadiusEquation psi_prime_n(int N);
    static RadiusEquation r_a0(double a0);
    static RadiusEquation cubic(double a0, CubicVariant v = CubicVariant::statement);
    static RadiusEquation sqrt17();
    static RadiusEquation quartic_eq();
    static RadiusEquation tilde_n(int N);
    static RadiusEquation tilde_prime_n(int N);

    // Defining function of x = n*rbar whose minimum positive root is the
    // radius.  Closed-form families expose the associated polynomial with the
    // same root (so certificates can be sign-checked uniformly).
    double residual(double x) const;
    // Rounding slack for the sign test at x (outward rounding).
    double residual_slack(double x) const;

    bool closed_form() const;
    double closed_value() const;

    std::string name() const;
};

struct RootCertificate {
    double x_low = 0.0;
    double x_high = 0.0;
    int sign_low = 0;  // residual signs at the certified bracket ends
    int sign_high = 0;

    double width() const { return x_high - x_low; }
    double midpoint() const { return 0.5 * (x_low + x_high); }
};

namespace detail {
// Scan (0,1) with the given step for the first strict sign change, then
// bisect the bracket down to tol.  Throws NoRootError when no change exists.
RootCertificate solve_scan_bisect(const std::function<double(double)>& fn,
                                  const std::function<double(double)>& slack, double tol,
                                  double scan_step = 1e-3);
} // namespace detail

// Minimum positive root in (0,1) with a certified bracket of width <= tol
// (tol >= 1e-14).  Closed-form families return a width-0 certificate whose
// signs come from the associated polynomial at closed_value() * (1 -+ 1e-9).
RootCertificate solve(const RadiusEquation& eq, double tol = 1e-13);

// Solved x-root converted to the polyradius scale: midpoint / n.
double radius_in_r(const RadiusEquation& eq, int n, double tol = 1e-13);

// True when the residual has no sign change on (0, x_low) sampled at `step`.
bool minimality_sweep(const RadiusEquation& eq, double x_low, double step = 1e-4);

} // namespace polybohr

#endif
