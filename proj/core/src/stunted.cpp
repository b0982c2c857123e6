#include "qloop/stunted.hpp"

#include <stdexcept>

#include "qloop/fp2.hpp"

namespace qloop {

std::optional<long long> sq_stunted(long long k, long long m, const StuntedComplex& X) {
    if (!X.has_dim(m)) throw std::out_of_range("sq_stunted: dimension outside the complex");
    if (k == 0) return m;
    if (m + k > X.top_dim()) return std::nullopt;  // truncated above the top cell
    if (!binom2(m - X.s, k)) return std::nullopt;
    return m + k;
}

std::string stunted_str(const StuntedComplex& X) {
    std::string out;
    if (X.s > 0) out += "Sigma^" + std::to_string(X.s) + " ";
    out += "P_" + std::to_string(X.a) + "^" + std::to_string(X.b);
    return out;
}

}  // namespace qloop
