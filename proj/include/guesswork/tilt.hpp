#ifndef GUESSWORK_TILT_HPP
#define GUESSWORK_TILT_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "guesswork/dist.hpp"
#include "guesswork/errors.hpp"
#include "guesswork/numeric.hpp"

namespace guesswork {

// |alpha| * spread(log base) beyond which a finite tilt would leave the
// exponent range of double; such parameters are routed to the +/-inf limit.
inline constexpr double kTiltExponentGuard = 700.0;

// One-parameter exponential curve through `reference`, orthogonal to the
// linear families of `base`: alpha |-> reference * base^alpha, normalized.
struct TiltCurve {
    Dist base;
    Dist reference;

    TiltCurve(Dist base_, Dist reference_)
        : base(std::move(base_)), reference(std::move(reference_)) {
        require_same_alphabet(base, reference);
        if (!base.unambiguous())
            throw DomainError("tilt base must be unambiguous");
        if (!reference.strictly_positive())
            throw DomainError("tilt reference must have full support");
    }

    // Uniform reference: the classic tilted family of `base`.
    explicit TiltCurve(Dist base_)
        : TiltCurve(std::move(base_), Dist::uniform(base_.alphabet())) {}
};

inline double log_prob_spread(const Dist& d) {
    return std::log(d[d.argmax()]) - std::log(d[d.argmin()]);
}

// Evaluates the curve at alpha. Computed in the log domain with
// log-sum-exp normalization; alpha = 0 returns the reference unchanged and
// +/-inf (or guard overflow) returns the point mass on argmax/argmin of base.
inline Dist tilt(const TiltCurve& curve, double alpha) {
    if (std::isnan(alpha)) throw DomainError("tilt parameter is NaN");
    if (alpha == 0.0) return curve.reference;
    const Dist& nu = curve.base;
    if (std::isinf(alpha) || std::abs(alpha) * log_prob_spread(nu) > kTiltExponentGuard)
        return Dist::point_mass(nu.alphabet(), alpha > 0 ? nu.argmax() : nu.argmin());

    const std::size_t k = nu.size();
    std::vector<double> logw(k);
    for (std::size_t i = 0; i < k; ++i)
        logw[i] = std::log(curve.reference[i]) + alpha * std::log(nu[i]);
    const double z = log_sum_exp(logw);
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = std::exp(logw[i] - z);
    return Dist(std::move(w), nu.alphabet());
}

inline Dist tilt(const Dist& base, double alpha) {
    return tilt(TiltCurve(base), alpha);
}

// Cross-entropy level H(T(nu,alpha) || nu) shared by every member of the
// linear family of nu of order alpha. gamma belongs to that family iff
// |cross_entropy(gamma, nu) - level| is within tolerance.
inline double linear_family_level(const Dist& nu, double alpha) {
    if (!nu.unambiguous()) throw DomainError("linear family base must be unambiguous");
    if (std::isnan(alpha)) throw DomainError("linear family order is NaN");
    if (std::isinf(alpha))
        return -std::log(alpha > 0 ? nu[nu.argmax()] : nu[nu.argmin()]);
    return cross_entropy(tilt(nu, alpha), nu);
}

enum class FamilyClass { PositiveTilt, NegativeTilt, Uniform, NotMember };

struct FamilyMembership {
    FamilyClass kind = FamilyClass::NotMember;
    double alpha = 0.0; // meaningful unless NotMember
};

// Tolerance in log-space for deciding membership in the tilted family of nu.
inline constexpr double kMembershipTol = 1e-9;

// Decides whether log(candidate) = alpha * log(nu) + const for some real
// alpha. alpha is estimated from the coordinates where log nu spreads most,
// then the affine fit is verified on every coordinate.
inline FamilyMembership family_membership(const Dist& candidate, const Dist& nu) {
    if (!nu.unambiguous()) throw DomainError("family base must be unambiguous");
    require_same_alphabet(candidate, nu);
    const double spread = log_prob_spread(nu);
    if (spread < kMembershipTol)
        throw DegenerateBase("log-probability spread of base is below tolerance");
    if (!candidate.strictly_positive()) return {FamilyClass::NotMember, 0.0};

    const std::size_t ihi = nu.argmax(), ilo = nu.argmin();
    const double alpha =
        (std::log(candidate[ihi]) - std::log(candidate[ilo])) / spread;

    double rmin = kPosInf, rmax = kNegInf;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        const double r = std::log(candidate[i]) - alpha * std::log(nu[i]);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    if (rmax - rmin > kMembershipTol) return {FamilyClass::NotMember, 0.0};
    if (std::abs(alpha) <= kMembershipTol) return {FamilyClass::Uniform, 0.0};
    return {alpha > 0 ? FamilyClass::PositiveTilt : FamilyClass::NegativeTilt, alpha};
}

struct TypicalityFlags {
    bool in_d = false; // at most `eps` above the level: "more likely" side
    bool in_e = false; // at most `eps` below the level: "less likely" side
    bool in_b = false; // within [0, eps] below the level
};

// Span form admits empirical types that touch the simplex boundary
// (zero counts); zero entries contribute nothing to the cross-entropy.
inline TypicalityFlags typicality_membership(std::span<const double> type_weights,
                                             const Dist& nu, double alpha, double eps) {
    if (eps < 0.0) throw DomainError("typicality eps must be >= 0");
    if (!std::isfinite(alpha)) throw DomainError("typicality alpha must be finite");
    if (type_weights.size() != nu.size())
        throw AlphabetMismatch("type vector length does not match alphabet");
    double h = 0.0;
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (type_weights[i] > 0.0) h -= type_weights[i] * std::log(nu[i]);
    const double level = linear_family_level(nu, alpha);
    const double d = h - level;
    return {d <= eps, d >= -eps, -d >= 0.0 && -d <= eps};
}

inline TypicalityFlags typicality_membership(const Dist& type, const Dist& nu,
                                             double alpha, double eps) {
    require_same_alphabet(type, nu);
    return typicality_membership(std::span<const double>(type.probs()), nu, alpha, eps);
}

} // namespace guesswork

#endif // GUESSWORK_TILT_HPP
