#include "polybohr/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace polybohr {

namespace {
double factorial_d(int k) {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= static_cast<double>(j);
    return f;
}
} // namespace

ExtremalFunction::ExtremalFunction(double a_, Form form_, int n_) : a(a_), form(form_), n(n_) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::invalid_argument("extremal parameter a must lie in [0,1)");
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
}

std::vector<double> profile_coefficients(const ExtremalFunction& w, int K) {
    if (K < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<double> c(static_cast<std::size_t>(K) + 1, 0.0);
    c[0] = w.a;
    const double m = 1.0 - w.a * w.a;
    double ak = 1.0; // a^{k-1}
    for (int k = 1; k <= K; ++k) {
        if (w.form == Form::minus)
            c[static_cast<std::size_t>(k)] = -m * ak;
        else
            c[static_cast<std::size_t>(k)] = (k % 2 == 1 ? m : -m) * ak;
        ak *= w.a;
    }
    return c;
}

TruncatedSeries to_series(const ExtremalFunction& w, int K) {
    TailBound tail = w.a > 0.0
        ? TailBound::geometric((1.0 - w.a * w.a) / w.a, w.a * static_cast<double>(w.n))
        : TailBound::geometric(1.0, static_cast<double>(w.n));
    TruncatedSeries f(w.n, K, tail);
    const auto c = profile_coefficients(w, K);
    for (int k = 0; k <= K; ++k) {
        if (c[static_cast<std::size_t>(k)] == 0.0) continue;
        for (const auto& alpha : enumerate_degree(w.n, k))
            f.set(alpha, Complex{c[static_cast<std::size_t>(k)] * multinomial_weight(alpha), 0.0});
    }
    return f;
}

double ClosedEval::derivative(int k) const {
    if (k < 0) throw std::invalid_argument("derivative order must be >= 0");
    if (k == 0) return value;
    const double m = 1.0 - a * a;
    const double denom = form == Form::minus ? 1.0 - a * s : 1.0 + a * s;
    const double sign_pow = form == Form::minus ? -1.0 : (k % 2 == 1 ? 1.0 : -1.0);
    return sign_pow * m * factorial_d(k) * std::pow(a, k - 1) / std::pow(denom, k + 1);
}

ClosedEval closed_eval(const ExtremalFunction& w, double r, int point_sign) {
    if (r < 0.0) throw std::invalid_argument("radius must be >= 0");
    const double x = static_cast<double>(w.n) * r;
    if (x >= 1.0) throw std::domain_error("n*r must be < 1");
    const double s = (point_sign >= 0 ? 1.0 : -1.0) * x;
    ClosedEval e{};
    e.a = w.a;
    e.s = s;
    e.form = w.form;
    const double m = 1.0 - w.a * w.a;
    if (w.form == Form::minus) {
        const double denom = 1.0 - w.a * s;
        e.value = (w.a - s) / denom;
        e.df_value = s * (-m) / (denom * denom);
    } else {
        const double denom = 1.0 + w.a * s;
        e.value = (w.a + s) / denom;
        e.df_value = s * m / (denom * denom);
    }
    return e;
}

double derivative_majorant_from(const ExtremalFunction& w, double r, int point_sign, int from) {
    if (from < 1) throw std::invalid_argument("derivative sum must start at order >= 1");
    const double x = static_cast<double>(w.n) * r;
    if (x >= 1.0) throw std::domain_error("n*r must be < 1");
    const double s = (point_sign >= 0 ? 1.0 : -1.0) * x;
    const double d = std::abs(w.form == Form::minus ? 1.0 - w.a * s : 1.0 + w.a * s);
    const double m = 1.0 - w.a * w.a;
    if (w.a == 0.0)
        return from <= 1 ? x / (d * d) : 0.0; // linear profile: g^{(k)} = 0 for k >= 2
    if (d - w.a * x <= 0.0)
        throw std::domain_error("derivative majorant diverges (geometric ratio >= 1)");
    // sum_{k>=from} (1-a^2) a^{k-1} x^k / d^{k+1}
    return m * std::pow(w.a, from - 1) * std::pow(x, from) /
           (std::pow(d, from) * (d - w.a * x));
}

} // namespace polybohr
