// Executable predicates for the theorems and lemmas: inequality checks below
// the radius, sharpness probes above it, coefficient / Schwarz-Pick /
// derivative-bound oracles, and the seeded random-contraction generator.
//
// Every result row is normalized so that PASS means value + tail <= 1 for
// below-type checks and value - tail > 1 (+ margin) for sharpness rows; lemma
// rows store 1 + (lhs - rhs) so the same convention applies.

#ifndef POLYBOHR_VERIFY_HPP
#define POLYBOHR_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polybohr/functionals.hpp"
#include "polybohr/radii.hpp"

namespace polybohr {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct CheckResult {
    std::string theorem;
    int n = 0;
    int N = 0;          // 0 when not applicable
    double a0 = std::numeric_limits<double>::quiet_NaN(); // extremal parameter of the row
    double x = std::numeric_limits<double>::quiet_NaN();  // aggregate radius n*rbar
    double value = 0.0;
    double tail = 0.0;
    Verdict verdict = Verdict::inconclusive;
    bool heuristic = false;
};

struct VerificationReport {
    std::string theorem;
    std::string mode; // "below", "sharp", or a lemma tag
    int n = 0;
    int N = 0;
    double a0_param = std::numeric_limits<double>::quiet_NaN();
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> results;
    double margin = 0.0; // worst slack across rows
    std::vector<CheckResult> failures;

    bool passed() const;
    bool any_inconclusive() const;
};

// Tags accepted by run_check / the CLI.
const std::vector<std::string>& known_tags();
bool tag_uses_N(const std::string& tag);  // 2.1a/2.1b/2.4m/2.4n
bool tag_uses_a0(const std::string& tag); // 2.2a/2.2b
bool is_theorem_tag(const std::string& tag);

// a -> 1 limit of the sharpness excess (positive beyond the radius).
double sharpness_limit(const std::string& tag, double x, int N);

// Radius equation a theorem tag verifies against (2.2b uses the proof-variant
// cubic: the extremal family's crossing is exactly its root).
RadiusEquation radius_equation_for(const std::string& tag, int N, double a0);

// Inequality check below the radius: evaluates the theorem's functional on
// the extremal family (paper pairing of form and point) over
// a in {0, 0.1, ..., 0.9, 0.99} at x = root * (1 - eps); for a0-parameterized
// tags every grid point uses its own radius.  eps in (0, 0.5).
VerificationReport check_below(const std::string& tag, int n, int N, double a0, double eps);

// Sharpness probe at x = root * (1 + eps), eps in (0, 0.2): sweeps
// a in {a0} + {1 - 10^-j, j=1..6}, reports the best witness, and also
// requires the a->1 limit expression to be positive at x.  PASS iff some
// witness has value - tail > 1 + margin.
VerificationReport check_sharp(const std::string& tag, int n, int N, double a0, double eps,
                               double margin = 0.0);

namespace detail {
// Same as check_sharp but with a signed radius factor (x = root * factor);
// used to confirm the probe finds no witness inside the radius.
VerificationReport check_sharp_at(const std::string& tag, int n, int N, double a0,
                                  double factor, double margin);
} // namespace detail

// Coefficient inequalities on a function bounded by 1 on the unit polydisk:
// per-k rows for odd and even degrees up to the truncation degree.
VerificationReport check_coefficients(const TruncatedSeries& f, int n);

// |f(z)| <= (|f(0)| + ||z||_inf) / (1 + |f(0)| ||z||_inf) at `samples` seeded
// pseudo-random points with ||z||_inf <= 0.9.
VerificationReport check_schwarz_pick(const TruncatedSeries& f, int samples,
                                      std::uint64_t seed);

// |d^beta f(z)| <= beta! (1-|f(z)|^2)/(1-||z||^2)^{|beta|} (1+||z||)^{|beta|-N_beta}
// within truncation slack; beta = 0 passes by definition.
Verdict check_derivative_bound(const TruncatedSeries& f, const MultiIndex& beta,
                               std::span<const Complex> z);

// Refined-sum bound on sampled series bounded by 1 on the polydisk of
// polyradius 1/n (extremal family plus seeded random contractions):
// refined_sum <= (1 - |a0|^2) x^N / (1 - x) + truncation.
VerificationReport check_refined_bound(int n, int N, std::uint64_t seed);

// Lemma drivers used by the CLI tags lemma1/lemma2/lemma4.
VerificationReport run_lemma_schwarz(int n, std::uint64_t seed);
VerificationReport run_lemma_derivative(int n, std::uint64_t seed);
VerificationReport run_lemma_coefficients(int n, std::uint64_t seed);

// Deterministic RNG: fixed engine plus an explicit 53-bit mantissa mapping so
// streams are identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform01();
    double uniform(double lo, double hi);

  private:
    std::mt19937_64 eng_;
};

// Random polynomial of total degree <= degree, rescaled so that its sampled
// sup over `sup_samples` points of the torus |z_i| = rho equals target_sup.
TruncatedSeries random_contraction(int n, int degree, double rho, double target_sup, Rng& rng,
                                   int sup_samples = 10000);

} // namespace polybohr

#endif
