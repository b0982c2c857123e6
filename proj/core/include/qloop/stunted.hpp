// Suspended stunted projective spaces Sigma^s P_a^b: one cohomology
// generator in each dimension s+a .. s+b, with Sq^k acting through the
// binomial rule on the unsuspended cell index.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qloop {

struct StuntedComplex {
    long long s = 0;  // suspension count
    long long a = 0;  // bottom cell (unsuspended index)
    long long b = 0;  // top cell (unsuspended index), a <= b

    long long bottom_dim() const { return s + a; }
    long long top_dim() const { return s + b; }
    bool has_dim(long long m) const { return m >= s + a && m <= s + b; }
    bool is_sphere() const { return a == b; }
};

// D_2(S^n, k) = Sigma^n P_n^{n+k-1}.
inline StuntedComplex d2_stunted(long long n, long long k) {
    return StuntedComplex{n, n, n + k - 1};
}

// Sq^k on the generator a^m (m a cohomological dimension of X): returns the
// target dimension m+k when the class is nonzero there, std::nullopt when it
// vanishes (even binomial or truncation above the top cell).  Throws when m
// is not a cell dimension of X.
std::optional<long long> sq_stunted(long long k, long long m, const StuntedComplex& X);

std::string stunted_str(const StuntedComplex& X);

}  // namespace qloop
