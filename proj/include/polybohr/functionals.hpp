// Bohr-type functionals on truncated series, plus exact closed-form paths on
// the extremal family.  Radius conventions: functionals take the polyradius
// (entries r_i, sup norm rbar); the aggregate variable x = n*rbar appears only
// in the diagonal/closed-form reductions.

#ifndef POLYBOHR_FUNCTIONALS_HPP
#define POLYBOHR_FUNCTIONALS_HPP

#include <span>
#include <vector>

#include "polybohr/extremal.hpp"
#include "polybohr/series.hpp"

namespace polybohr {

// Evaluation data: polyradius r, point z with ||z||_inf == rbar, cutoff N,
// derived t = floor((N-1)/2).
struct EvalContext {
    std::vector<double> r;
    std::vector<Complex> z;
    int N = 1;

    EvalContext(std::vector<double> r_, std::vector<Complex> z_, int N_);

    int dimension() const { return static_cast<int>(r.size()); }
    int t() const { return (N - 1) / 2; }
    double rbar() const;

    // z = (sign*r, ..., sign*r), polyradius (r, ..., r)
    static EvalContext diagonal(int n, double r, int point_sign, int N);
    EvalContext with_cutoff(int N_) const;
};

struct FunctionalBreakdown {
    double modulus = 0.0;            // |f(z)| or |f(z)|^2
    double majorant = 0.0;           // sum_{k>=N} sum |a_alpha| r^alpha
    double sgn_quadratic = 0.0;      // sgn(t) group
    double weighted_quadratic = 0.0; // (1/(1+|a0|) + rbar/(1-rbar)) group
    double derivative = 0.0;         // |Df(z)| or the derivative majorant

    double sum() const {
        return modulus + majorant + sgn_quadratic + weighted_quadratic + derivative;
    }
};

struct FunctionalValue {
    double value = 0.0;
    double truncation_error = 0.0; // certified upper bound; +inf when unknown
    FunctionalBreakdown breakdown;
};

// 1/(1+|a0|) + rbar/(1-rbar)
double quadratic_weight(double a0, double rbar);

// --- series path -----------------------------------------------------------

// sum_{k>=from} sum_{|alpha|=k} |a_alpha| r^alpha (from >= 0 includes |a_0|).
FunctionalValue majorant_sum(const TruncatedSeries& f, std::span<const double> r, int from);

// Statement form: majorant from N, plus sgn(t) * sum_{k<=t} sum |aered|^2 *
// rbar^N/(1-rbar), plus the weighted sum_{k>t} sum |a_alpha|^2 r^{2alpha}.
FunctionalValue refined_sum(const TruncatedSeries& f, const EvalContext& ctx);

// Aggregate (diagonal) form: treats the series as a function of
// s = z_1 + ... + z_n at radius x = n*rbar, with per-degree profile moduli
// A_k / n^k (A_k the degree-k coefficient l1 norm).  Coincides with
// refined_sum when n = 1.  Requires equal polyradius entries and x < 1.
FunctionalValue refined_sum_diagonal(const TruncatedSeries& f, const EvalContext& ctx);

FunctionalValue functional_A1(const TruncatedSeries& f, const EvalContext& ctx);
FunctionalValue functional_A2(const TruncatedSeries& f, const EvalContext& ctx);
FunctionalValue functional_A3(const TruncatedSeries& f, const EvalContext& ctx); // N forced to 1
FunctionalValue functional_A4(const TruncatedSeries& f, const EvalContext& ctx); // N forced to 1
FunctionalValue functional_I(const TruncatedSeries& f, const EvalContext& ctx);
FunctionalValue functional_J(const TruncatedSeries& f, const EvalContext& ctx);

// |f(z)| (resp. |f(z)|^2) + sum_{k>=N} sum_{|alpha|=k} (1/alpha!)
// |d^alpha f(z)| |z|^alpha.  The derivative layers are summed for
// k = N..min(K, max_order); the remainder carries a certified bound when the
// series has a geometric tail with 2*base*rbar < 1, otherwise +inf (reported,
// never dropped).
FunctionalValue functional_M(const TruncatedSeries& f, const EvalContext& ctx,
                             int max_order = 1 << 20);
FunctionalValue functional_N(const TruncatedSeries& f, const EvalContext& ctx,
                             int max_order = 1 << 20);

// --- closed-form path on the extremal family -------------------------------
// All values are the paper-pairing diagonal reductions in x = n*r; the
// truncation_error is a pure rounding slack.

FunctionalValue majorant_sum_closed(const ExtremalFunction& w, double r, int from);
FunctionalValue refined_sum_closed(const ExtremalFunction& w, double r, int N);
FunctionalValue functional_A1_closed(const ExtremalFunction& w, double r, int point_sign, int N);
FunctionalValue functional_A2_closed(const ExtremalFunction& w, double r, int point_sign, int N);
FunctionalValue functional_A3_closed(const ExtremalFunction& w, double r, int point_sign);
FunctionalValue functional_A4_closed(const ExtremalFunction& w, double r, int point_sign);
FunctionalValue functional_I_closed(const ExtremalFunction& w, double r, int point_sign);
FunctionalValue functional_J_closed(const ExtremalFunction& w, double r, int point_sign);
FunctionalValue functional_M_closed(const ExtremalFunction& w, double r, int point_sign, int N);
FunctionalValue functional_N_closed(const ExtremalFunction& w, double r, int point_sign, int N);

} // namespace polybohr

#endif
