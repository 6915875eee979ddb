#include "polybohr/radii.hpp"

#include <cfloat>
#include <cmath>

namespace polybohr {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

int definite_sign(double v, double slack) {
    if (v > slack) return 1;
    if (v < -slack) return -1;
    return 0;
}

} // namespace

RadiusEquation RadiusEquation::psi_n(int N) {
    require(N >= 1, "psi family requires N >= 1");
    return {RadiusFamily::psi, N, 0.0, CubicVariant::statement};
}
RadiusEquation RadiusEquation::psi_prime_n(int N) {
    require(N >= 1, "psi-prime family requires N >= 1");
    return {RadiusFamily::psi_prime, N, 0.0, CubicVariant::statement};
}
RadiusEquation RadiusEquation::r_a0(double a0) {
    require(a0 >= 0.0 && a0 < 1.0, "r-a0 family requires a0 in [0,1)");
    return {RadiusFamily::r_a0_closed, 1, a0, CubicVariant::statement};
}
RadiusEquation RadiusEquation::cubic(double a0, CubicVariant v) {
    require(a0 >= 0.0 && a0 < 1.0, "cubic family requires a0 in [0,1)");
    return {RadiusFamily::cubic_a0, 1, a0, v};
}
RadiusEquation RadiusEquation::sqrt17() {
    return {RadiusFamily::sqrt17_closed, 1, 0.0, CubicVariant::statement};
}
RadiusEquation RadiusEquation::quartic_eq() {
    return {RadiusFamily::quartic, 1, 0.0, CubicVariant::statement};
}
RadiusEquation RadiusEquation::tilde_n(int N) {
    require(N >= 1, "tilde family requires N >= 1");
    return {RadiusFamily::tilde, N, 0.0, CubicVariant::statement};
}
RadiusEquation RadiusEquation::tilde_prime_n(int N) {
    require(N >= 1, "tilde-prime family requires N >= 1");
    return {RadiusFamily::tilde_prime, N, 0.0, CubicVariant::statement};
}

bool RadiusEquation::closed_form() const {
    return family == RadiusFamily::r_a0_closed || family == RadiusFamily::sqrt17_closed;
}

double RadiusEquation::closed_value() const {
    switch (family) {
        case RadiusFamily::r_a0_closed:
            return 2.0 / (3.0 + a0 + std::sqrt(5.0) * (1.0 + a0));
        case RadiusFamily::sqrt17_closed:
            return (std::sqrt(17.0) - 3.0) / 4.0;
        default:
            throw std::logic_error("family has no closed form");
    }
}

double RadiusEquation::residual(double x) const {
    switch (family) {
        case RadiusFamily::psi:
            return 2.0 * (1.0 + x) * std::pow(x, N) - (1.0 - x) * (1.0 - x);
        case RadiusFamily::psi_prime:
            return (1.0 + x) * std::pow(x, N) - (1.0 - x) * (1.0 - x);
        case RadiusFamily::r_a0_closed:
            // associated polynomial: (1 - a0 - a0^2) x^2 - (3 + a0) x + 1,
            // negated so the residual decreases through the root like the
            // closed value's defining inequality
            return -((1.0 - a0 - a0 * a0) * x * x - (3.0 + a0) * x + 1.0);
        case RadiusFamily::cubic_a0: {
            const double lead = variant == CubicVariant::statement ? 1.0 - a0 * a0 * a0
                                                                   : 1.0 - a0 * a0;
            return -(lead * x * x * x - (1.0 + 2.0 * a0) * x * x - 2.0 * x + 1.0);
        }
        case RadiusFamily::sqrt17_closed:
            return 2.0 * x * x + 3.0 * x - 1.0; // root (sqrt(17)-3)/4
        case RadiusFamily::quartic:
            return -(1.0 - 2.0 * x - x * x - x * x * x - x * x * x * x);
        case RadiusFamily::tilde:
            return -((1.0 + x) * (1.0 - 2.0 * x) * std::pow(1.0 - x, N - 1) -
                     2.0 * std::pow(x, N));
        case RadiusFamily::tilde_prime:
            return -((1.0 + x) * (1.0 - 2.0 * x) * std::pow(1.0 - x, N - 1) - std::pow(x, N));
    }
    throw std::logic_error("unknown radius family");
}

double RadiusEquation::residual_slack(double x) const {
    // outward rounding slack: 4 eps times the magnitude of the partial sums
    double mag = 0.0;
    switch (family) {
        case RadiusFamily::psi:
        case RadiusFamily::psi_prime:
            mag = 2.0 * (1.0 + x) * std::pow(x, N) + (1.0 - x) * (1.0 - x);
            break;
        case RadiusFamily::r_a0_closed:
            mag = std::abs(1.0 - a0 - a0 * a0) * x * x + (3.0 + a0) * x + 1.0;
            break;
        case RadiusFamily::cubic_a0:
            mag = x * x * x + (1.0 + 2.0 * a0) * x * x + 2.0 * x + 1.0;
            break;
        case RadiusFamily::sqrt17_closed:
            mag = 2.0 * x * x + 3.0 * x + 1.0;
            break;
        case RadiusFamily::quartic:
            mag = 1.0 + 2.0 * x + x * x + x * x * x + x * x * x * x;
            break;
        case RadiusFamily::tilde:
        case RadiusFamily::tilde_prime:
            mag = (1.0 + x) * std::pow(1.0 - x, N - 1) + 2.0 * std::pow(x, N) + 1.0;
            break;
    }
    return 4.0 * DBL_EPSILON * (mag + 1.0);
}

std::string RadiusEquation::name() const {
    switch (family) {
        case RadiusFamily::psi: return "psi";
        case RadiusFamily::psi_prime: return "psi-prime";
        case RadiusFamily::r_a0_closed: return "r-a0";
        case RadiusFamily::cubic_a0:
            return variant == CubicVariant::statement ? "cubic-a0-stmt" : "cubic-a0-proof";
        case RadiusFamily::sqrt17_closed: return "sqrt17";
        case RadiusFamily::quartic: return "quartic";
        case RadiusFamily::tilde: return "tilde";
        case RadiusFamily::tilde_prime: return "tilde-prime";
    }
    return "?";
}

namespace detail {

RootCertificate solve_scan_bisect(const std::function<double(double)>& fn,
                                  const std::function<double(double)>& slack, double tol,
                                  double scan_step) {
    // lo tracks the last point with a definite sign, so a scan sample landing
    // inside a root's rounding slack cannot hide the change
    double lo = 0.0;
    int slo = definite_sign(fn(lo), slack(lo));
    double hi = scan_step;
    bool found = false;
    int shi = 0;
    while (hi < 1.0) {
        shi = definite_sign(fn(hi), slack(hi));
        if (slo != 0 && shi != 0 && slo != shi) {
            found = true;
            break;
        }
        if (shi != 0) {
            lo = hi;
            slo = shi;
        }
        hi += scan_step;
    }
    if (!found) throw NoRootError("no sign change found in (0,1)");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket at floating-point resolution
        const double fm = fn(mid);
        const int sm = definite_sign(fm, slack(mid));
        if (sm == 0) break; // cannot certify a tighter bracket
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return RootCertificate{lo, hi, slo, shi};
}

} // namespace detail

RootCertificate solve(const RadiusEquation& eq, double tol) {
    if (tol < 1e-14) throw std::invalid_argument("tolerance must be >= 1e-14");
    if (eq.closed_form()) {
        const double v = eq.closed_value();
        const double h = 1e-9 * v;
        RootCertificate cert;
        cert.x_low = cert.x_high = v;
        cert.sign_low = definite_sign(eq.residual(v - h), eq.residual_slack(v - h));
        cert.sign_high = definite_sign(eq.residual(v + h), eq.residual_slack(v + h));
        if (cert.sign_low == 0 || cert.sign_high == 0 || cert.sign_low == cert.sign_high)
            throw NoRootError("closed value fails the associated sign check");
        return cert;
    }
    return detail::solve_scan_bisect([&eq](double x) { return eq.residual(x); },
                                     [&eq](double x) { return eq.residual_slack(x); }, tol);
}

double radius_in_r(const RadiusEquation& eq, int n, double tol) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    return solve(eq, tol).midpoint() / static_cast<double>(n);
}

bool minimality_sweep(const RadiusEquation& eq, double x_low, double step) {
    int prev = 0;
    for (double x = step; x < x_low; x += step) {
        const int s = definite_sign(eq.residual(x), eq.residual_slack(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) return false;
        prev = s;
    }
    return true;
}

} // namespace polybohr
