#ifndef GUESSWORK_RATE_HPP
#define GUESSWORK_RATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "guesswork/dist.hpp"
#include "guesswork/errors.hpp"
#include "guesswork/numeric.hpp"
#include "guesswork/solve.hpp"
#include "guesswork/tilt.hpp"

namespace guesswork {

// One evaluated point of a rate function: at target growth rate t, the
// minimizing distribution gamma and the decay exponent J = D(gamma || mu).
struct RatePoint {
    double t = 0.0;
    double alpha_t = 0.0;
    Dist gamma;
    double J = 0.0;
};

struct MomentPoint {
    double rho = 0.0;
    double value = 0.0; // nats, in [0, log|X|]
};

// The positive-tilt hypothesis: the projection of mu on the tilted family
// of nu has a positive parameter, equivalently H(mu||nu) < H(u||nu).
inline bool positive_tilt_hypothesis(const Dist& nu, const Dist& mu) {
    require_same_alphabet(nu, mu);
    return cross_entropy(mu, nu) < cross_entropy(Dist::uniform(nu.alphabet()), nu);
}

inline void require_positive_tilt_hypothesis(const Dist& nu, const Dist& mu) {
    if (!positive_tilt_hypothesis(nu, mu))
        throw HypothesisViolated(
            "projection of mu on the tilted family of nu is not a positive tilt "
            "(H(mu||nu) >= H(uniform||nu))");
}

inline RatePoint matched_rate(const Dist& mu, double t, const RootConfig& cfg = {}) {
    if (!mu.unambiguous()) throw DomainError("matched_rate: mu must be unambiguous");
    const double alpha = solve_alpha_for_entropy(mu, t, cfg);
    Dist gamma = tilt(mu, alpha);
    const double J = kl_divergence(gamma, mu);
    return {t, alpha, std::move(gamma), J};
}

inline RatePoint mismatched_rate(const Dist& nu, const Dist& mu, double t,
                                 const RootConfig& cfg = {}) {
    if (!nu.unambiguous() || !mu.unambiguous())
        throw DomainError("mismatched_rate: both distributions must be unambiguous");
    require_positive_tilt_hypothesis(nu, mu);
    const double alpha = solve_alpha_for_entropy(nu, t, cfg);
    Dist gamma = solve_gamma_intersection(nu, mu, alpha, cfg);
    const double J = kl_divergence(gamma, mu);
    return {t, alpha, std::move(gamma), J};
}

// Pointwise rate function over a grid; identical nu and mu take the matched
// path so a matched run and a nu=mu run emit the same bytes.
inline std::vector<RatePoint> rate_curve(const Dist& nu, const Dist& mu,
                                         std::span<const double> t_grid,
                                         const RootConfig& cfg = {}) {
    const bool matched = nu.alphabet() == mu.alphabet() && nu.probs() == mu.probs();
    std::vector<RatePoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid)
        out.push_back(matched ? matched_rate(mu, t, cfg) : mismatched_rate(nu, mu, t, cfg));
    return out;
}

namespace detail {

// Golden-section maximizer on [lo, hi] for a continuous f, assumed unimodal
// there. Returns the best (x, f(x)) seen.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters) {
    constexpr double invphi = 0.6180339887498949;
    double c = hi - invphi * (hi - lo);
    double d = lo + invphi * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - invphi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + invphi * (hi - lo);
            fd = f(d);
        }
    }
    return fc > fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

} // namespace detail

// Half-width by which scan grids stay inside the open domain (0, log|X|).
inline constexpr double kDomainMargin = 1e-6;

// Growth exponent of the rho-th guesswork moment, matched case. The closed
// form is the Renyi entropy of order 1/(1+rho); every call cross-validates
// it against the variational maximum over the tilt parameter.
inline MomentPoint e_rho_matched(const Dist& mu, double rho) {
    if (!(rho > 0.0)) throw NonPositiveRho("moment order rho must be > 0");
    const double closed = renyi_entropy(mu, 1.0 / (1.0 + rho));
    auto objective = [&](double a) {
        const Dist phi = tilt(mu, a);
        return entropy(phi) - kl_divergence(phi, mu) / rho;
    };
    // maximizer 1/(1+rho) always lies in (0,1); the objective is unimodal
    const double variational = detail::golden_max(objective, 0.0, 1.0, 120).second;
    if (std::abs(closed - variational) > 1e-9)
        throw Error("e_rho_matched: variational maximum disagrees with closed form by " +
                    std::to_string(std::abs(closed - variational)));
    return {rho, closed};
}

// Mismatched growth exponent via the Legendre form (1/rho) sup_t {rho t -
// J(t)}. Concavity of the objective is not assumed: a dense scan locates the
// best cell, then golden-section refines inside it.
inline MomentPoint e_rho_mismatched(const Dist& nu, const Dist& mu, double rho,
                                    const RootConfig& cfg = {}) {
    if (!(rho > 0.0)) throw NonPositiveRho("moment order rho must be > 0");
    require_positive_tilt_hypothesis(nu, mu);
    const double log_k = std::log(static_cast<double>(nu.size()));
    auto phi = [&](double t) { return rho * t - mismatched_rate(nu, mu, t, cfg).J; };

    constexpr int kScanPoints = 512;
    const std::vector<double> grid = linspace(kDomainMargin, log_k - kDomainMargin, kScanPoints);
    std::size_t best = 0;
    double best_phi = kNegInf;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = phi(grid[i]);
        if (v > best_phi) {
            best_phi = v;
            best = i;
        }
    }
    const double lo = grid[best == 0 ? 0 : best - 1];
    const double hi = grid[std::min(best + 1, grid.size() - 1)];
    const double refined = detail::golden_max(phi, lo, hi, 60).second;
    const double value = std::max(best_phi, refined) / rho;
    return {rho, std::clamp(value, 0.0, log_k)};
}

// E_rho(nu||mu) - E_rho(mu); >= 0 whenever the hypothesis holds, and zero
// exactly when mu lies on the positive tilted family of nu.
inline double mismatch_penalty_gap(const Dist& nu, const Dist& mu, double rho,
                                   const RootConfig& cfg = {}) {
    return e_rho_mismatched(nu, mu, rho, cfg).value - e_rho_matched(mu, rho).value;
}

} // namespace guesswork

#endif // GUESSWORK_RATE_HPP
