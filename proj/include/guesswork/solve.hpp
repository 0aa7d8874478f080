#ifndef GUESSWORK_SOLVE_HPP
#define GUESSWORK_SOLVE_HPP

#include <cmath>
#include <string>
#include <utility>

#include "guesswork/dist.hpp"
#include "guesswork/errors.hpp"
#include "guesswork/tilt.hpp"

namespace guesswork {

struct RootConfig {
    double f_tol = 1e-12;              // on function values (nats)
    double x_tol = 1e-12;              // on the bracket width
    int max_iter = 200;
    double bracket_expand_limit = 1e6; // give up past this endpoint magnitude

    void check() const {
        if (!(f_tol > 0.0) || !(x_tol > 0.0) || !(bracket_expand_limit > 0.0) || max_iter < 1)
            throw DomainError("invalid RootConfig");
    }
};

namespace detail {

// Bisection for a continuous strictly decreasing f with f(lo) >= y >= f(hi).
// Returns x with |f(x) - y| <= f_tol.
template <typename F>
double bisect_decreasing(F&& f, double lo, double hi, double y, const RootConfig& cfg,
                         const char* what) {
    double best_x = lo, best_r = kPosInf;
    for (int it = 0; it < cfg.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break; // interval at one ulp
        const double fm = f(mid);
        const double r = std::abs(fm - y);
        if (r < best_r) {
            best_r = r;
            best_x = mid;
        }
        if (r <= cfg.f_tol) return mid;
        if (fm > y)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= cfg.x_tol && best_r <= cfg.f_tol) return best_x;
    }
    if (best_r <= cfg.f_tol) return best_x;
    throw NoConvergence(std::string(what) + ": residual " + std::to_string(best_r) +
                        " above f_tol after bisection");
}

} // namespace detail

// Inverts t = H(T(nu, alpha)) for alpha >= 0. The entropy of the tilted
// distribution falls strictly from log|X| at alpha = 0, so the bracket is
// grown on the right until it straddles t.
inline double solve_alpha_for_entropy(const Dist& nu, double t, const RootConfig& cfg = {}) {
    cfg.check();
    if (!nu.unambiguous()) throw DomainError("solve_alpha_for_entropy: base must be unambiguous");
    const double log_k = std::log(static_cast<double>(nu.size()));
    if (!(t > 0.0) || !(t < log_k))
        throw DomainError("solve_alpha_for_entropy: t must lie strictly inside (0, log|X|)");

    double hi = 1.0;
    while (entropy(tilt(nu, hi)) > t) {
        hi *= 2.0;
        if (hi > cfg.bracket_expand_limit)
            throw NoConvergence("solve_alpha_for_entropy: bracket expansion exhausted");
    }
    auto f = [&](double a) { return entropy(tilt(nu, a)); };
    return detail::bisect_decreasing(f, 0.0, hi, t, cfg, "solve_alpha_for_entropy");
}

struct Projection {
    double alpha_star = 0.0;
    Dist projection;
};

namespace detail {

// Root of cross_entropy(tilt(curve, beta), curve.base) = level over real
// beta; the map is strictly decreasing with range (-log max base, -log min
// base), so two-sided doubling always brackets an interior level.
inline double solve_beta_for_level(const TiltCurve& curve, double level, const RootConfig& cfg,
                                   const char* what) {
    auto f = [&](double b) { return cross_entropy(tilt(curve, b), curve.base); };
    double lo = -1.0, hi = 1.0;
    while (f(lo) < level) {
        lo *= 2.0;
        if (-lo > cfg.bracket_expand_limit)
            throw NoConvergence(std::string(what) + ": left bracket expansion exhausted");
    }
    while (f(hi) > level) {
        hi *= 2.0;
        if (hi > cfg.bracket_expand_limit)
            throw NoConvergence(std::string(what) + ": right bracket expansion exhausted");
    }
    return bisect_decreasing(f, lo, hi, level, cfg, what);
}

} // namespace detail

// Projection of mu on the tilted family of nu: the unique T(nu, alpha*)
// whose cross-entropy with nu equals H(mu || nu).
inline Projection solve_projection(const Dist& nu, const Dist& mu, const RootConfig& cfg = {}) {
    cfg.check();
    require_same_alphabet(nu, mu);
    if (!nu.unambiguous() || !mu.unambiguous())
        throw DomainError("solve_projection: both distributions must be unambiguous");
    const TiltCurve curve(nu);
    const double target = cross_entropy(mu, nu);
    const double alpha =
        detail::solve_beta_for_level(curve, target, cfg, "solve_projection");
    return {alpha, tilt(curve, alpha)};
}

// Intersection of the tilted family of nu through mu with the linear family
// of nu of order alpha_t.
inline Dist solve_gamma_intersection(const Dist& nu, const Dist& mu, double alpha_t,
                                     const RootConfig& cfg = {}) {
    cfg.check();
    require_same_alphabet(nu, mu);
    if (!nu.unambiguous() || !mu.unambiguous())
        throw DomainError("solve_gamma_intersection: both distributions must be unambiguous");
    if (!std::isfinite(alpha_t))
        throw DomainError("solve_gamma_intersection: alpha_t must be finite");
    const TiltCurve curve(nu, mu);
    const double level = linear_family_level(nu, alpha_t);
    const double beta =
        detail::solve_beta_for_level(curve, level, cfg, "solve_gamma_intersection");
    return tilt(curve, beta);
}

} // namespace guesswork

#endif // GUESSWORK_SOLVE_HPP
