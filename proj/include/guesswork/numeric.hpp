#ifndef GUESSWORK_NUMERIC_HPP
#define GUESSWORK_NUMERIC_HPP

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace guesswork {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kPosInf = std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow; identity element is -inf.
inline double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = a > b ? a : b;
    return m + std::log1p(std::exp((a > b ? b : a) - m));
}

// log sum_i exp(v[i]); -inf for an empty span. Fixed left-to-right
// accumulation so results do not depend on evaluation order.
inline double log_sum_exp(std::span<const double> v) {
    double m = kNegInf;
    for (double x : v) m = x > m ? x : m;
    if (m == kNegInf || std::isinf(m)) return m;
    double s = 0.0;
    for (double x : v) s += std::exp(x - m);
    return m + std::log(s);
}

// count evenly spaced points, endpoints included (count >= 2).
inline std::vector<double> linspace(double start, double stop, int count) {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] =
            start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
}

} // namespace guesswork

#endif // GUESSWORK_NUMERIC_HPP
