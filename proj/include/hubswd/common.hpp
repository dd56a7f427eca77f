#pragma once
// Shared error taxonomy and small numeric helpers.

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hubswd {

// Exit-code taxonomy shared with the CLI: usage -> 2, invariant -> 1, numerical -> 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Shortest representation that round-trips through a double.
inline std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, p);
}

inline std::string format_double(double x, int significant_digits) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                                 significant_digits);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace hubswd
