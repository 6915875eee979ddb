#include "polybohr/series.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace polybohr {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double infnorm(std::span<const Complex> z) {
    double m = 0.0;
    for (const auto& v : z) m = std::max(m, std::abs(v));
    return m;
}
} // namespace

TailBound TailBound::geometric(double scale, double base) {
    if (scale < 0.0 || base < 0.0)
        throw std::invalid_argument("tail bound parameters must be nonnegative");
    return TailBound{TailKind::geometric, scale, base};
}

double TailBound::majorant_tail(int from, double rbar) const {
    if (kind == TailKind::none) return kInf;
    if (scale == 0.0) return 0.0;
    const double q = base * rbar;
    if (q >= 1.0) return kInf;
    return scale * std::pow(q, from) / (1.0 - q);
}

double TailBound::squared_tail(int from, double rbar) const {
    if (kind == TailKind::none) return kInf;
    if (scale == 0.0) return 0.0;
    const double q2 = (base * rbar) * (base * rbar);
    if (q2 >= 1.0) return kInf;
    return scale * scale * std::pow(q2, from) / (1.0 - q2);
}

double TailBound::radial_derivative_tail(int from, double rbar) const {
    if (kind == TailKind::none) return kInf;
    if (scale == 0.0) return 0.0;
    const double q = base * rbar;
    if (q >= 1.0) return kInf;
    const double j = static_cast<double>(from);
    // sum_{k>=j} k q^k = q^j (j - (j-1) q) / (1-q)^2
    return scale * std::pow(q, from) * (j - (j - 1.0) * q) / ((1.0 - q) * (1.0 - q));
}

double fp_sum_slack(std::size_t terms, double abs_sum) {
    return 2.0 * static_cast<double>(terms) * DBL_EPSILON * abs_sum;
}

TruncatedSeries::TruncatedSeries(int n, int K, TailBound tail) : n_(n), K_(K), tail_(tail) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (K < 0) throw std::invalid_argument("truncation degree must be >= 0");
}

void TruncatedSeries::set(const MultiIndex& alpha, Complex value) {
    if (alpha.dimension() != n_)
        throw std::invalid_argument("multi-index dimension mismatch");
    if (alpha.degree() > K_)
        throw std::out_of_range("multi-index degree exceeds truncation degree");
    for (int v : alpha.entries)
        if (v < 0) throw std::invalid_argument("multi-index entry must be nonnegative");
    if (value == Complex{0.0, 0.0})
        coeffs_.erase(alpha);
    else
        coeffs_[alpha] = value;
}

Complex TruncatedSeries::coefficient(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

std::vector<std::pair<MultiIndex, Complex>> TruncatedSeries::homogeneous_part(int k) const {
    if (k < 0 || k > K_)
        throw std::out_of_range("homogeneous part degree out of range");
    std::vector<std::pair<MultiIndex, Complex>> out;
    for (const auto& [alpha, c] : coeffs_)
        if (alpha.degree() == k) out.emplace_back(alpha, c);
    return out;
}

EvalResult TruncatedSeries::eval(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != n_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    // powers[i][j] = z_i^j
    std::vector<std::vector<Complex>> powers(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        auto& p = powers[static_cast<std::size_t>(i)];
        p.resize(static_cast<std::size_t>(K_) + 1);
        p[0] = Complex{1.0, 0.0};
        for (int j = 1; j <= K_; ++j) p[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j - 1)] * z[static_cast<std::size_t>(i)];
    }
    Complex sum{0.0, 0.0};
    double abs_sum = 0.0;
    // map iteration order is degree-ascending, graded-lex within a degree
    for (const auto& [alpha, c] : coeffs_) {
        Complex term = c;
        for (int i = 0; i < n_; ++i)
            term *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(alpha[i])];
        sum += term;
        abs_sum += std::abs(term);
    }
    const double rbar = infnorm(z);
    double rem = tail_.majorant_tail(K_ + 1, rbar);
    rem += fp_sum_slack(coeffs_.size(), abs_sum);
    return EvalResult{sum, rem};
}

TruncatedSeries TruncatedSeries::radial_derivative() const {
    TruncatedSeries out(n_, K_, TailBound::none());
    for (const auto& [alpha, c] : coeffs_) {
        const int k = alpha.degree();
        if (k == 0) continue;
        out.set(alpha, c * static_cast<double>(k));
    }
    return out;
}

TruncatedSeries TruncatedSeries::partial_derivative(const MultiIndex& beta) const {
    if (beta.dimension() != n_)
        throw std::invalid_argument("multi-index dimension mismatch");
    const int db = beta.degree();
    if (db > K_)
        throw std::out_of_range("derivative order exceeds truncation degree");
    TruncatedSeries out(n_, K_ - db, TailBound::none());
    for (const auto& [alpha, c] : coeffs_) {
        bool ok = true;
        for (int i = 0; i < n_; ++i)
            if (alpha[i] < beta[i]) { ok = false; break; }
        if (!ok) continue;
        double factor = 1.0;
        std::vector<int> shifted(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < beta[i]; ++j) factor *= static_cast<double>(alpha[i] - j);
            shifted[static_cast<std::size_t>(i)] = alpha[i] - beta[i];
        }
        out.set(MultiIndex(std::move(shifted)), c * factor);
    }
    return out;
}

Complex TruncatedSeries::derivative_at(const MultiIndex& beta, std::span<const Complex> z) const {
    if (beta.dimension() != n_)
        throw std::invalid_argument("multi-index dimension mismatch");
    if (static_cast<int>(z.size()) != n_)
        throw std::invalid_argument("evaluation point dimension mismatch");
    const int db = beta.degree();
    if (db > K_)
        throw std::out_of_range("derivative order exceeds truncation degree");
    std::vector<std::vector<Complex>> powers(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        auto& p = powers[static_cast<std::size_t>(i)];
        p.resize(static_cast<std::size_t>(K_) + 1);
        p[0] = Complex{1.0, 0.0};
        for (int j = 1; j <= K_; ++j) p[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j - 1)] * z[static_cast<std::size_t>(i)];
    }
    Complex sum{0.0, 0.0};
    for (const auto& [alpha, c] : coeffs_) {
        bool ok = true;
        for (int i = 0; i < n_; ++i)
            if (alpha[i] < beta[i]) { ok = false; break; }
        if (!ok) continue;
        double factor = 1.0;
        Complex mono{1.0, 0.0};
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < beta[i]; ++j) factor *= static_cast<double>(alpha[i] - j);
            mono *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(alpha[i] - beta[i])];
        }
        sum += c * factor * mono;
    }
    return sum;
}

TruncatedSeries TruncatedSeries::scaled_radius(double rho) const {
    if (rho <= 0.0) throw std::invalid_argument("radius scale must be positive");
    TailBound t = tail_;
    if (t.kind == TailKind::geometric) t.base *= rho;
    TruncatedSeries out(n_, K_, t);
    for (const auto& [alpha, c] : coeffs_)
        out.set(alpha, c * std::pow(rho, alpha.degree()));
    return out;
}

double TruncatedSeries::degree_abs_sum(int k) const {
    double s = 0.0;
    for (const auto& [alpha, c] : coeffs_)
        if (alpha.degree() == k) s += std::abs(c);
    return s;
}

void TruncatedSeries::dump(std::ostream& os) const {
    os << "alpha,re,im\n";
    char buf[64];
    for (const auto& [alpha, c] : coeffs_) {
        if (n_ > 1) {
            os << '"';
            for (int i = 0; i < n_; ++i) {
                if (i) os << ',';
                os << alpha[i];
            }
            os << '"';
        } else {
            os << alpha[0];
        }
        std::snprintf(buf, sizeof(buf), ",%.17g,%.17g\n", c.real(), c.imag());
        os << buf;
    }
}

} // namespace polybohr
