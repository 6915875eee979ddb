// Mobius-of-linear-form witnesses: f(z) = (a -+ s)/(1 -+ a s), s = z_1+...+z_n,
// bounded by 1 on the polydisk of polyradius 1/n, with exact coefficient and
// derivative formulas.

#ifndef POLYBOHR_EXTREMAL_HPP
#define POLYBOHR_EXTREMAL_HPP

#include <vector>

#include "polybohr/series.hpp"

namespace polybohr {

// minus: f(z) = (a - s)/(1 - a s); plus: f(z) = (a + s)/(1 + a s)
enum class Form { minus, plus };

struct ExtremalFunction {
    double a = 0.0;
    Form form = Form::minus;
    int n = 1;

    ExtremalFunction(double a_, Form form_, int n_);
};

// Coefficients c_0..c_K of the one-variable profile g(s) with f(z) = g(s):
// c_0 = a; minus form c_k = -(1-a^2) a^{k-1}; plus form c_k = (1-a^2)(-a)^{k-1}.
std::vector<double> profile_coefficients(const ExtremalFunction& w, int K);

// Expansion in z: coefficient of alpha is c_{|alpha|} * multinomial(alpha).
// Carries a geometric tail certificate (scale = (1-a^2)/a, base = a*n for
// a > 0; scale = 1, base = n for a = 0).
TruncatedSeries to_series(const ExtremalFunction& w, int K);

// Exact evaluation data at the diagonal point z = (sigma*r, ..., sigma*r),
// i.e. at s = sigma * n * r.
struct ClosedEval {
    double value;           // g(s)
    double df_value;        // s * g'(s)  (the radial derivative at z)
    double derivative(int k) const; // g^{(k)}(s), k >= 0

    double a;
    double s;
    Form form;
};

// Throws std::domain_error when n*r >= 1.
ClosedEval closed_eval(const ExtremalFunction& w, double r, int point_sign);

// sum_{k >= from} |g^{(k)}(s)| (n r)^k / k! in closed form, s = sigma*n*r.
// Throws std::domain_error when the geometric sum diverges (d <= a*n*r with
// d = |1 -+ a s|), which for s = +x is the 2*a*x >= 1 regime.
double derivative_majorant_from(const ExtremalFunction& w, double r, int point_sign, int from);

} // namespace polybohr

#endif
