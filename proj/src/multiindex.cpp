#include "polybohr/multiindex.hpp"

#include <numeric>
#include <stdexcept>

namespace polybohr {

MultiIndex::MultiIndex(std::vector<int> e) : entries(std::move(e)) {
    for (int v : entries)
        if (v < 0) throw std::invalid_argument("multi-index entry must be nonnegative");
}

int MultiIndex::degree() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // within a degree: (3,0) before (2,1) before ... before (0,3)
    return a.entries > b.entries;
}

namespace {

void enumerate_rec(int n, int k, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (n == 1) {
        prefix.push_back(k);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = k; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_rec(n - 1, k - e, prefix, out);
        prefix.pop_back();
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("multinomial exceeds 64-bit integer capacity");
    return r;
}

// C(n, k) exactly; throws on overflow.  After reducing num/den by their gcd,
// den always divides the running product, so every step stays integral.
std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t c = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        std::uint64_t num = n - k + j, den = j;
        const std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        c = checked_mul(c / den, num);
    }
    return c;
}

} // namespace

std::vector<MultiIndex> enumerate_degree(int n, int k) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (k < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(enumerate_count(n, k)));
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    enumerate_rec(n, k, prefix, out);
    return out;
}

std::uint64_t enumerate_count(int n, int k) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (k < 0) throw std::invalid_argument("degree must be >= 0");
    return binomial_exact(static_cast<std::uint64_t>(k + n - 1),
                          static_cast<std::uint64_t>(n - 1));
}

std::uint64_t multinomial(const MultiIndex& alpha) {
    std::uint64_t result = 1, partial = 0;
    for (int a : alpha.entries) {
        if (a < 0) throw std::invalid_argument("multi-index entry must be nonnegative");
        partial += static_cast<std::uint64_t>(a);
        result = checked_mul(result, binomial_exact(partial, static_cast<std::uint64_t>(a)));
    }
    return result;
}

double multinomial_weight(const MultiIndex& alpha) {
    double result = 1.0;
    std::uint64_t partial = 0;
    for (int a : alpha.entries) {
        if (a < 0) throw std::invalid_argument("multi-index entry must be nonnegative");
        // multiply C(partial + a, a) in double precision
        for (int j = 1; j <= a; ++j)
            result = result * static_cast<double>(partial + static_cast<std::uint64_t>(j)) /
                     static_cast<double>(j);
        partial += static_cast<std::uint64_t>(a);
    }
    return result;
}

} // namespace polybohr
