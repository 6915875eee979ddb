#include "polybohr/functionals.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polybohr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double closed_slack(double value) { return 32.0 * DBL_EPSILON * (std::abs(value) + 1.0); }

// |v|^2 with |v| known up to err: the square is off by at most this much.
double square_error(double v, double err) { return 2.0 * std::abs(v) * err + err * err; }

void check_radius(std::span<const double> r) {
    for (double ri : r)
        if (!(ri >= 0.0 && ri < 1.0))
            throw std::domain_error("polyradius entries must lie in [0,1)");
}

double abs_pow(std::span<const double> r, const MultiIndex& alpha, int power = 1) {
    double p = 1.0;
    for (int i = 0; i < alpha.dimension(); ++i)
        p *= std::pow(r[static_cast<std::size_t>(i)], power * alpha[i]);
    return p;
}

double a0_of(const TruncatedSeries& f) {
    return std::abs(f.coefficient(MultiIndex(std::vector<int>(static_cast<std::size_t>(f.dimension()), 0))));
}

FunctionalValue with_modulus(const TruncatedSeries& f, const EvalContext& ctx, bool squared,
                             FunctionalValue rest) {
    const EvalResult e = f.eval(ctx.z);
    const double m = std::abs(e.value);
    if (squared) {
        rest.breakdown.modulus = m * m;
        rest.truncation_error += square_error(m, e.remainder);
    } else {
        rest.breakdown.modulus = m;
        rest.truncation_error += e.remainder;
    }
    rest.value = rest.breakdown.sum();
    return rest;
}

} // namespace

EvalContext::EvalContext(std::vector<double> r_, std::vector<Complex> z_, int N_)
    : r(std::move(r_)), z(std::move(z_)), N(N_) {
    if (r.empty() || r.size() != z.size())
        throw std::invalid_argument("polyradius/point dimension mismatch");
    if (N < 1) throw std::invalid_argument("cutoff degree N must be >= 1");
    check_radius(r);
    double zbar = 0.0;
    for (const auto& v : z) zbar = std::max(zbar, std::abs(v));
    const double rb = rbar();
    if (std::abs(zbar - rb) > 64.0 * DBL_EPSILON * (1.0 + rb))
        throw std::invalid_argument("||z||_inf must equal the polyradius sup norm");
}

double EvalContext::rbar() const {
    double m = 0.0;
    for (double ri : r) m = std::max(m, ri);
    return m;
}

EvalContext EvalContext::diagonal(int n, double r, int point_sign, int N) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    const double sign = point_sign >= 0 ? 1.0 : -1.0;
    return EvalContext(std::vector<double>(static_cast<std::size_t>(n), r),
                       std::vector<Complex>(static_cast<std::size_t>(n), Complex{sign * r, 0.0}), N);
}

EvalContext EvalContext::with_cutoff(int N_) const { return EvalContext(r, z, N_); }

double quadratic_weight(double a0, double rbar) {
    return 1.0 / (1.0 + a0) + rbar / (1.0 - rbar);
}

FunctionalValue majorant_sum(const TruncatedSeries& f, std::span<const double> r, int from) {
    if (static_cast<int>(r.size()) != f.dimension())
        throw std::invalid_argument("polyradius dimension mismatch");
    if (from < 0) throw std::invalid_argument("starting degree must be >= 0");
    check_radius(r);
    double rb = 0.0;
    for (double ri : r) rb = std::max(rb, ri);

    double sum = 0.0;
    std::size_t terms = 0;
    for (const auto& [alpha, c] : f.coefficients()) {
        if (alpha.degree() < from) continue;
        sum += std::abs(c) * abs_pow(r, alpha);
        ++terms;
    }
    FunctionalValue out;
    out.breakdown.majorant = sum;
    out.value = sum;
    out.truncation_error = f.tail().majorant_tail(std::max(from, f.truncation_degree() + 1), rb) +
                           fp_sum_slack(terms, sum);
    return out;
}

FunctionalValue refined_sum(const TruncatedSeries& f, const EvalContext& ctx) {
    if (ctx.dimension() != f.dimension())
        throw std::invalid_argument("context dimension mismatch");
    const double rb = ctx.rbar();
    if (rb >= 1.0) throw std::domain_error("rbar must be < 1");
    const int K = f.truncation_degree();
    const int t = ctx.t();
    const double a0 = a0_of(f);

    FunctionalValue out;
    double err = 0.0;
    std::size_t terms = 0;

    double lin = 0.0, sq_low = 0.0, sq_high = 0.0;
    for (const auto& [alpha, c] : f.coefficients()) {
        const int k = alpha.degree();
        const double m = std::abs(c);
        if (k >= ctx.N) lin += m * abs_pow(ctx.r, alpha);
        if (k >= 1 && k <= t) sq_low += m * m;
        if (k >= t + 1) sq_high += m * m * abs_pow(ctx.r, alpha, 2);
        ++terms;
    }
    err += f.tail().majorant_tail(std::max(ctx.N, K + 1), rb);
    if (t > K) {
        // certificate for the missing degrees of the sgn(t) group
        if (f.tail().kind == TailKind::none) {
            err = kInf;
        } else {
            for (int k = K + 1; k <= t; ++k) {
                const double b = f.tail().scale * std::pow(f.tail().base, k);
                err += b * b * std::pow(rb, ctx.N) / (1.0 - rb);
            }
        }
    }
    err += quadratic_weight(a0, rb) * f.tail().squared_tail(std::max(t + 1, K + 1), rb);

    out.breakdown.majorant = lin;
    out.breakdown.sgn_quadratic = (t >= 1 ? 1.0 : 0.0) * sq_low * std::pow(rb, ctx.N) / (1.0 - rb);
    out.breakdown.weighted_quadratic = quadratic_weight(a0, rb) * sq_high;
    out.value = out.breakdown.sum();
    out.truncation_error = err + fp_sum_slack(3 * terms, std::abs(out.value) + lin);
    return out;
}

FunctionalValue refined_sum_diagonal(const TruncatedSeries& f, const EvalContext& ctx) {
    if (ctx.dimension() != f.dimension())
        throw std::invalid_argument("context dimension mismatch");
    const int n = f.dimension();
    const double rb = ctx.rbar();
    for (double ri : ctx.r)
        if (ri != rb) throw std::invalid_argument("diagonal form needs equal polyradius entries");
    const double x = static_cast<double>(n) * rb;
    if (x >= 1.0) throw std::domain_error("n*rbar must be < 1");
    const int K = f.truncation_degree();
    const int t = ctx.t();
    const double a0 = a0_of(f);

    // per-degree l1 norms and profile moduli A_k / n^k
    std::vector<double> A(static_cast<std::size_t>(K) + 1, 0.0);
    for (const auto& [alpha, c] : f.coefficients())
        A[static_cast<std::size_t>(alpha.degree())] += std::abs(c);

    double lin = 0.0, sq_low = 0.0, sq_high = 0.0;
    double nk = 1.0, xk = 1.0;
    for (int k = 0; k <= K; ++k) {
        const double prof = A[static_cast<std::size_t>(k)] / nk; // |c_k| for aggregate series
        if (k >= ctx.N) lin += A[static_cast<std::size_t>(k)] * std::pow(rb, k);
        if (k >= 1 && k <= t) sq_low += prof * prof;
        if (k >= t + 1) sq_high += prof * prof * xk * xk;
        nk *= static_cast<double>(n);
        xk *= x;
    }

    double err = f.tail().majorant_tail(std::max(ctx.N, K + 1), rb);
    // A_k^2 rbar^{2k} == (A_k/n^k)^2 x^{2k}, so the squared tail applies as is
    err += quadratic_weight(a0, x) * f.tail().squared_tail(std::max(t + 1, K + 1), rb);
    if (t > K) err = kInf;

    FunctionalValue out;
    out.breakdown.majorant = lin;
    out.breakdown.sgn_quadratic = (t >= 1 ? 1.0 : 0.0) * sq_low * std::pow(x, ctx.N) / (1.0 - x);
    out.breakdown.weighted_quadratic = quadratic_weight(a0, x) * sq_high;
    out.value = out.breakdown.sum();
    out.truncation_error = err + fp_sum_slack(3 * f.coefficients().size(), std::abs(out.value) + lin);
    return out;
}

FunctionalValue functional_A1(const TruncatedSeries& f, const EvalContext& ctx) {
    return with_modulus(f, ctx, false, refined_sum(f, ctx));
}
FunctionalValue functional_A2(const TruncatedSeries& f, const EvalContext& ctx) {
    return with_modulus(f, ctx, true, refined_sum(f, ctx));
}
FunctionalValue functional_A3(const TruncatedSeries& f, const EvalContext& ctx) {
    return functional_A1(f, ctx.with_cutoff(1));
}
FunctionalValue functional_A4(const TruncatedSeries& f, const EvalContext& ctx) {
    return functional_A2(f, ctx.with_cutoff(1));
}

namespace {

FunctionalValue functional_IJ(const TruncatedSeries& f, const EvalContext& ctx, bool squared) {
    if (ctx.dimension() != f.dimension())
        throw std::invalid_argument("context dimension mismatch");
    const double rb = ctx.rbar();
    if (rb >= 1.0) throw std::domain_error("rbar must be < 1");
    const int K = f.truncation_degree();
    const double a0 = a0_of(f);

    FunctionalValue out;
    double err = 0.0;

    // |Df(z)|: value from the derived table, remainder from f's certificate
    const TruncatedSeries df = f.radial_derivative();
    const EvalResult de = df.eval(ctx.z);
    out.breakdown.derivative = std::abs(de.value);
    err += f.tail().radial_derivative_tail(K + 1, rb);
    err += fp_sum_slack(df.coefficients().size(), std::abs(de.value) + 1.0);

    double lin = 0.0, sq = 0.0;
    std::size_t terms = 0;
    for (const auto& [alpha, c] : f.coefficients()) {
        const int k = alpha.degree();
        const double m = std::abs(c);
        if (k >= 2) lin += m * abs_pow(ctx.r, alpha);
        if (k >= 1) sq += m * m * abs_pow(ctx.r, alpha, 2);
        ++terms;
    }
    err += f.tail().majorant_tail(std::max(2, K + 1), rb);
    err += quadratic_weight(a0, rb) * f.tail().squared_tail(K + 1, rb);

    out.breakdown.majorant = lin;
    out.breakdown.weighted_quadratic = quadratic_weight(a0, rb) * sq;
    out.truncation_error = err + fp_sum_slack(2 * terms, lin + sq);
    return with_modulus(f, ctx, squared, out);
}

// certificate remainder used by the derivative-majorant functionals: both the
// per-derivative truncation (orders <= maxed, table degrees > K) and the
// dropped orders (> maxed) are bounded, via the Vandermonde identity
// sum_{alpha<=beta,|alpha|=k} prod C(beta_i,alpha_i) = C(|beta|,k), by
// geometric sums with ratio 2*base*rbar.
double derivative_functional_tail(const TruncatedSeries& f, double rb, int maxed) {
    const TailBound& tb = f.tail();
    if (tb.kind == TailKind::none) return kInf;
    if (tb.scale == 0.0 && maxed >= f.truncation_degree()) return 0.0;
    const double q2 = 2.0 * tb.base * rb;
    if (q2 >= 1.0) return kInf;
    const int K = f.truncation_degree();
    // per-derivative truncation over table degrees m > K
    double rem = tb.scale * std::pow(q2, K + 1) / (1.0 - q2);
    // dropped derivative orders k > maxed: table part over (maxed, K] plus
    // the certificate degrees beyond K
    for (int m = maxed + 1; m <= K; ++m)
        rem += f.degree_abs_sum(m) * std::pow(2.0 * rb, m);
    rem += tb.scale * std::pow(q2, K + 1) / (1.0 - q2);
    return rem;
}

FunctionalValue functional_MN(const TruncatedSeries& f, const EvalContext& ctx, bool squared,
                              int max_order) {
    if (ctx.dimension() != f.dimension())
        throw std::invalid_argument("context dimension mismatch");
    const int n = f.dimension();
    const double rb = ctx.rbar();
    if (rb >= 1.0) throw std::domain_error("rbar must be < 1");
    const int K = f.truncation_degree();
    const int maxed = std::min(K, max_order);

    std::vector<double> zabs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) zabs[static_cast<std::size_t>(i)] = std::abs(ctx.z[static_cast<std::size_t>(i)]);

    FunctionalValue out;
    double layer_sum = 0.0, abs_acc = 0.0;
    std::size_t terms = 0;
    for (int k = ctx.N; k <= maxed; ++k) {
        for (const auto& alpha : enumerate_degree(n, k)) {
            double inv_fact = 1.0, zalpha = 1.0;
            for (int i = 0; i < n; ++i) {
                for (int j = 2; j <= alpha[i]; ++j) inv_fact /= static_cast<double>(j);
                zalpha *= std::pow(zabs[static_cast<std::size_t>(i)], alpha[i]);
            }
            const double term = std::abs(f.derivative_at(alpha, ctx.z)) * inv_fact * zalpha;
            layer_sum += term;
            abs_acc += term;
            ++terms;
        }
    }
    out.breakdown.derivative = layer_sum;
    out.truncation_error =
        derivative_functional_tail(f, rb, maxed) + fp_sum_slack(terms, abs_acc);
    return with_modulus(f, ctx, squared, out);
}

} // namespace

FunctionalValue functional_I(const TruncatedSeries& f, const EvalContext& ctx) {
    return functional_IJ(f, ctx, false);
}
FunctionalValue functional_J(const TruncatedSeries& f, const EvalContext& ctx) {
    return functional_IJ(f, ctx, true);
}
FunctionalValue functional_M(const TruncatedSeries& f, const EvalContext& ctx, int max_order) {
    return functional_MN(f, ctx, false, max_order);
}
FunctionalValue functional_N(const TruncatedSeries& f, const EvalContext& ctx, int max_order) {
    return functional_MN(f, ctx, true, max_order);
}

// --- closed-form path -------------------------------------------------------

namespace {

struct Reduction {
    double a;
    double x; // n * r
    double majorant_from(int from) const {
        // sum_{k>=from} |c_k| x^k (from >= 1), plus |c_0| when from == 0
        double v = (1.0 - a * a) * std::pow(a, std::max(from, 1) - 1) *
                   std::pow(x, std::max(from, 1)) / (1.0 - a * x);
        if (from == 0) v += a;
        return v;
    }
    double quad_from(int from) const {
        // sum_{k>=from} |c_k|^2 x^{2k}, from >= 1
        const double m = 1.0 - a * a;
        return m * m * std::pow(a, 2 * (from - 1)) * std::pow(x, 2 * from) /
               (1.0 - a * a * x * x);
    }
};

Reduction make_reduction(const ExtremalFunction& w, double r) {
    const double x = static_cast<double>(w.n) * r;
    if (x >= 1.0) throw std::domain_error("n*r must be < 1");
    return Reduction{w.a, x};
}

FunctionalValue refined_closed_parts(const ExtremalFunction& w, double r, int N) {
    if (N < 1) throw std::invalid_argument("cutoff degree N must be >= 1");
    const Reduction red = make_reduction(w, r);
    const int t = (N - 1) / 2;
    FunctionalValue out;
    out.breakdown.majorant = red.majorant_from(N);
    if (t >= 1) {
        const double m = 1.0 - red.a * red.a;
        out.breakdown.sgn_quadratic =
            m * (1.0 - std::pow(red.a, 2 * t)) * std::pow(red.x, N) / (1.0 - red.x);
    }
    out.breakdown.weighted_quadratic = quadratic_weight(w.a, red.x) * red.quad_from(t + 1);
    out.value = out.breakdown.sum();
    out.truncation_error = closed_slack(out.value);
    return out;
}

FunctionalValue add_closed_modulus(const ExtremalFunction& w, double r, int point_sign,
                                   bool squared, FunctionalValue rest) {
    const ClosedEval e = closed_eval(w, r, point_sign);
    const double m = std::abs(e.value);
    rest.breakdown.modulus = squared ? m * m : m;
    rest.value = rest.breakdown.sum();
    rest.truncation_error += closed_slack(rest.value);
    return rest;
}

} // namespace

FunctionalValue majorant_sum_closed(const ExtremalFunction& w, double r, int from) {
    if (from < 0) throw std::invalid_argument("starting degree must be >= 0");
    const Reduction red = make_reduction(w, r);
    FunctionalValue out;
    out.breakdown.majorant = red.majorant_from(from);
    out.value = out.breakdown.sum();
    out.truncation_error = closed_slack(out.value);
    return out;
}

FunctionalValue refined_sum_closed(const ExtremalFunction& w, double r, int N) {
    return refined_closed_parts(w, r, N);
}

FunctionalValue functional_A1_closed(const ExtremalFunction& w, double r, int point_sign, int N) {
    return add_closed_modulus(w, r, point_sign, false, refined_closed_parts(w, r, N));
}
FunctionalValue functional_A2_closed(const ExtremalFunction& w, double r, int point_sign, int N) {
    return add_closed_modulus(w, r, point_sign, true, refined_closed_parts(w, r, N));
}
FunctionalValue functional_A3_closed(const ExtremalFunction& w, double r, int point_sign) {
    return functional_A1_closed(w, r, point_sign, 1);
}
FunctionalValue functional_A4_closed(const ExtremalFunction& w, double r, int point_sign) {
    return functional_A2_closed(w, r, point_sign, 1);
}

namespace {
FunctionalValue functional_IJ_closed(const ExtremalFunction& w, double r, int point_sign,
                                     bool squared) {
    const Reduction red = make_reduction(w, r);
    FunctionalValue out;
    out.breakdown.derivative = std::abs(closed_eval(w, r, point_sign).df_value);
    out.breakdown.majorant = red.majorant_from(2);
    out.breakdown.weighted_quadratic = quadratic_weight(w.a, red.x) * red.quad_from(1);
    return add_closed_modulus(w, r, point_sign, squared, out);
}

FunctionalValue functional_MN_closed(const ExtremalFunction& w, double r, int point_sign,
                                     bool squared, int N) {
    if (N < 1) throw std::invalid_argument("cutoff degree N must be >= 1");
    FunctionalValue out;
    out.breakdown.derivative = derivative_majorant_from(w, r, point_sign, N);
    return add_closed_modulus(w, r, point_sign, squared, out);
}
} // namespace

FunctionalValue functional_I_closed(const ExtremalFunction& w, double r, int point_sign) {
    return functional_IJ_closed(w, r, point_sign, false);
}
FunctionalValue functional_J_closed(const ExtremalFunction& w, double r, int point_sign) {
    return functional_IJ_closed(w, r, point_sign, true);
}
FunctionalValue functional_M_closed(const ExtremalFunction& w, double r, int point_sign, int N) {
    return functional_MN_closed(w, r, point_sign, false, N);
}
FunctionalValue functional_N_closed(const ExtremalFunction& w, double r, int point_sign, int N) {
    return functional_MN_closed(w, r, point_sign, true, N);
}

} // namespace polybohr
