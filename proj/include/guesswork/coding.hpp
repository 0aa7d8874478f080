#ifndef GUESSWORK_CODING_HPP
#define GUESSWORK_CODING_HPP

#include <bit>
#include <cmath>
#include <cstdint>

#include "guesswork/dist.hpp"
#include "guesswork/errors.hpp"
#include "guesswork/oracle.hpp"
#include "guesswork/rate.hpp"
#include "guesswork/solve.hpp"

namespace guesswork {

// Asymptotic one-to-one coding costs under mismatch. All entropies in nats.
struct CodingReport {
    double H_mu = 0.0;                // source entropy
    double L_matched = 0.0;           // = H_mu
    double L_mismatched = 0.0;        // = H(projection of mu on the tilted family of nu)
    double penalty_one_to_one = 0.0;  // = D(mu || projection)
    double penalty_prefix_free = 0.0; // = D(mu || nu)
    double projection_alpha = 0.0;
};

// Length in bits of the rank-th codeword when binary strings are assigned
// in the order "", "0", "1", "00", ...: floor(log2 rank).
inline int code_length(std::int64_t rank) {
    if (rank < 1) throw BadRank("rank must be >= 1");
    return std::bit_width(static_cast<std::uint64_t>(rank)) - 1;
}

inline CodingReport asymptotic_report(const Dist& nu, const Dist& mu,
                                      const RootConfig& cfg = {}) {
    require_positive_tilt_hypothesis(nu, mu);
    const Projection p = solve_projection(nu, mu, cfg);
    CodingReport r;
    r.H_mu = entropy(mu);
    r.L_matched = r.H_mu;
    r.L_mismatched = entropy(p.projection);
    r.penalty_one_to_one = kl_divergence(mu, p.projection);
    r.penalty_prefix_free = kl_divergence(mu, nu);
    r.projection_alpha = p.alpha_star;
    return r;
}

// Exact expected normalized log-guesswork at block length n; converges to
// L_mismatched as n grows.
inline double finite_average_length(const GuessTable& table) {
    double s = 0.0;
    const auto& recs = table.records();
    for (std::size_t i = 0; i < recs.size(); ++i)
        s += std::exp(recs[i].log_mu_prob) * table.log_guesswork_mid(i);
    return s / static_cast<double>(table.n());
}

// Reliability function E(R) of the mismatched one-to-one code: the decay
// exponent of P(length > nR), valid for H(projection) < R < log|X|.
inline double reliability(const Dist& nu, const Dist& mu, double R, const RootConfig& cfg = {}) {
    require_positive_tilt_hypothesis(nu, mu);
    const double log_k = std::log(static_cast<double>(nu.size()));
    const Projection p = solve_projection(nu, mu, cfg);
    if (!(R > entropy(p.projection)) || !(R < log_k))
        throw DomainError("reliability: R must lie in (H(projection), log|X|)");
    return mismatched_rate(nu, mu, R, cfg).J;
}

} // namespace guesswork

#endif // GUESSWORK_CODING_HPP
