// Truncated multivariate power series with certified tail descriptors.

#ifndef POLYBOHR_SERIES_HPP
#define POLYBOHR_SERIES_HPP

#include <complex>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "polybohr/multiindex.hpp"

namespace polybohr {

using Complex = std::complex<double>;

enum class TailKind { none, geometric };

// Certificate for the coefficients dropped beyond the truncation degree K:
// for every k > K,  sum_{|alpha|=k} |a_alpha| <= scale * base^k.
// At an evaluation radius rbar this yields geometric remainders with ratio
// base*rbar.  kind == none means no certificate (remainders are +inf).
struct TailBound {
    TailKind kind = TailKind::none;
    double scale = 0.0;
    double base = 0.0;

    static TailBound none() { return {}; }
    static TailBound geometric(double scale, double base);
    static TailBound exact() { return geometric(0.0, 0.0); } // series is the whole function

    // sum_{k >= from} (coefficient-sum bound) * rbar^k; +inf when uncertifiable.
    double majorant_tail(int from, double rbar) const;
    // bound on sum_{k >= from} sum_{|alpha|=k} |a_alpha|^2 r^{2alpha} with all r_i <= rbar
    double squared_tail(int from, double rbar) const;
    // bound on sum_{k >= from} k * (coefficient-sum bound) * rbar^k  (radial derivative)
    double radial_derivative_tail(int from, double rbar) const;
};

struct EvalResult {
    Complex value;
    double remainder; // rigorous bound on the dropped tail plus rounding slack
};

// Worst-case rounding slack for a naive sum of `terms` values whose absolute
// values add up to abs_sum.
double fp_sum_slack(std::size_t terms, double abs_sum);

// A power series of fixed dimension n truncated at total degree K.  Absent
// indices mean coefficient zero.  Treat instances as immutable once
// populated; all operations are const and pure.
class TruncatedSeries {
  public:
    TruncatedSeries(int n, int K, TailBound tail = TailBound::none());

    int dimension() const { return n_; }
    int truncation_degree() const { return K_; }
    const TailBound& tail() const { return tail_; }
    void set_tail(TailBound t) { tail_ = t; }

    // Builder access.  Throws on dimension mismatch or degree > K.
    void set(const MultiIndex& alpha, Complex value);
    Complex coefficient(const MultiIndex& alpha) const; // 0 when absent

    using CoefficientMap = std::map<MultiIndex, Complex, GrlexLess>;
    const CoefficientMap& coefficients() const { return coeffs_; }

    // Degree-k slice in enumeration order; throws std::out_of_range for k > K.
    std::vector<std::pair<MultiIndex, Complex>> homogeneous_part(int k) const;

    // Truncated sum plus a rigorous remainder bound at ||z||_inf.  Summation
    // runs over degrees ascending, within a degree in enumeration order.
    EvalResult eval(std::span<const Complex> z) const;

    // Df(z) = sum_k z_k df/dz_k: coefficient of alpha becomes |alpha| * a_alpha.
    // The tail certificate is dropped (kind = none).
    TruncatedSeries radial_derivative() const;

    // Formal d^beta; truncation degree drops to K - |beta|; tail dropped.
    // Throws std::out_of_range for |beta| > K.
    TruncatedSeries partial_derivative(const MultiIndex& beta) const;

    // d^beta f(z) evaluated directly from the coefficient table, without
    // materializing the derived series.
    Complex derivative_at(const MultiIndex& beta, std::span<const Complex> z) const;

    // f(rho * z): coefficient of alpha scaled by rho^|alpha| (used to move a
    // function bounded on the polydisk of polyradius rho to the unit one).
    TruncatedSeries scaled_radius(double rho) const;

    // sum_{|alpha|=k} |a_alpha| over the stored table.
    double degree_abs_sum(int k) const;

    // Coefficient dump: header "alpha,re,im"; one row per stored coefficient
    // in enumeration order; alpha is the comma-joined exponent list, quoted
    // when it contains a comma (RFC 4180); LF line endings.
    void dump(std::ostream& os) const;

  private:
    int n_;
    int K_;
    TailBound tail_;
    CoefficientMap coeffs_;
};

} // namespace polybohr

#endif
