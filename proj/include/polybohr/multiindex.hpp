// Multi-index enumeration and combinatorial weights.

#ifndef POLYBOHR_MULTIINDEX_HPP
#define POLYBOHR_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

namespace polybohr {

// Exponent vector of a monomial z^alpha.  Entries are nonnegative;
// degree() is the total degree |alpha|.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e);

    int dimension() const { return static_cast<int>(entries.size()); }
    int degree() const;
    int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }

    bool operator==(const MultiIndex&) const = default;
};

// Graded-lexicographic order: lower total degree first; within a degree,
// lexicographically larger exponent vectors first, so that for n=2, k=3 the
// order is (3,0), (2,1), (1,2), (0,3).  This is the canonical enumeration
// and storage order everywhere in the library.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// All multi-indices of dimension n and total degree k, in graded-lex order.
// The result has exactly C(k+n-1, n-1) elements.
std::vector<MultiIndex> enumerate_degree(int n, int k);

// Number of multi-indices of dimension n and degree k, C(k+n-1, n-1).
std::uint64_t enumerate_count(int n, int k);

// Exact |alpha|!/alpha! as an unsigned 64-bit integer.  Throws
// std::overflow_error when the exact value does not fit (guaranteed to fit
// for |alpha| <= 20).
std::uint64_t multinomial(const MultiIndex& alpha);

// |alpha|!/alpha! in double precision, for coefficient tables whose degree
// exceeds the exact-integer capacity.  Relative error is O(|alpha| * eps).
double multinomial_weight(const MultiIndex& alpha);

} // namespace polybohr

#endif
