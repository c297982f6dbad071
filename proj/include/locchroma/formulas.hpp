#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "locchroma/tree.hpp"

namespace locchroma {

// All formula evaluators work in exact integer arithmetic; the ceiling
// expressions are realized as smallest-witness searches so that boundary
// inputs land on the right side.

/// floor(sqrt(n)) by integer Newton iteration.
inline long long floor_sqrt(long long n) {
    if (n < 0) throw std::invalid_argument("floor_sqrt of a negative number");
    if (n == 0) return 0;
    long long x = n;
    while (x > n / x) x = (x + n / x) / 2;
    return x;
}

/// ceil(sqrt(n)).
inline long long ceil_sqrt(long long n) {
    long long x = floor_sqrt(n);
    return x * x >= n ? x : x + 1;
}

/// Capacity function of three-arm regular palms:
/// f(p) = (p-1) * floor(p^2/4) - floor((p^2-2p)/4).
inline long long f_eval(long long p) {
    if (p < 3) throw std::invalid_argument("f_eval needs p >= 3");
    return (p - 1) * (p * p / 4) - (p * p - 2 * p) / 4;
}

/// Smallest p >= 3 with n <= f(p); f is strictly increasing on p >= 3.
inline long long f_threshold_k(long long n) {
    if (n < 2) throw std::invalid_argument("f_threshold_k needs n >= 2");
    long long p = 3;
    while (f_eval(p) < n) ++p;
    return p;
}

/// ceil(log3(n/4)) + 3, i.e. 3 plus the smallest t >= 0 with 4*3^t >= n.
inline int chi_olive(long long n) {
    if (n < 2) throw std::invalid_argument("chi_olive needs n >= 2");
    int t = 0;
    long long reach = 4;
    while (reach < n) {
        reach *= 3;
        ++t;
    }
    return 3 + t;
}

inline long long chi_sn1(long long n) {
    if (n < 2) throw std::invalid_argument("chi_sn1 needs n >= 2");
    return n + 1;
}

inline long long chi_sn2(long long n) {
    if (n < 2) throw std::invalid_argument("chi_sn2 needs n >= 2");
    return ceil_sqrt(n) + 1;
}

inline long long chi_sn3(long long n) { return f_threshold_k(n); }

/// Lower bound on the locating chromatic number implied by the maximum
/// degree: smallest k >= 3 with Delta <= 4*3^(k-3). A connected graph
/// with Delta = 2 has at least 3 vertices, which already forces 3 colors;
/// Delta <= 1 allows the trivial 2.
inline int delta_lower_bound(long long delta) {
    if (delta < 1) throw std::invalid_argument("delta_lower_bound needs delta >= 1");
    if (delta <= 1) return 2;
    if (delta == 2) return 3;
    int k = 3;
    long long reach = 4;
    while (reach < delta) {
        reach *= 3;
        ++k;
    }
    return k;
}

/// The superseded degree bound (k-1) * 2^(k-2).
inline long long chartrand_bound(int k) {
    if (k < 3) throw std::invalid_argument("chartrand_bound needs k >= 3");
    if (k > 60) throw std::invalid_argument("chartrand_bound overflows for k > 60");
    return static_cast<long long>(k - 1) << (k - 2);
}

/// (lower, upper) bracket for the locating chromatic number of a palm
/// with n arms: chi_olive(n) <= chi_L <= n+1.
inline std::pair<int, long long> palm_bounds(const PalmSpec& spec) {
    spec.validate();
    long long n = spec.arm_count();
    return {chi_olive(n), n + 1};
}

/// Exact value for regular palms with long enough arms: when
/// k >= 2*(chi_olive(n)-3)+4 the answer is chi_olive(n); otherwise the
/// statement is silent.
inline std::optional<int> corollary_regular(long long n, long long k) {
    if (n < 3) throw std::invalid_argument("corollary_regular needs n >= 3");
    int chi = chi_olive(n);
    if (k >= 2 * static_cast<long long>(chi - 3) + 4) return chi;
    return std::nullopt;
}

}  // namespace locchroma
