#ifndef GUESSWORK_DIST_HPP
#define GUESSWORK_DIST_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "guesswork/errors.hpp"
#include "guesswork/numeric.hpp"

namespace guesswork {

// Gap below which two probabilities count as tied when deciding whether the
// largest/smallest entry of a distribution is unique.
inline constexpr double kUnambiguityGap = 1e-12;

// Finite ordered symbol set. The label order doubles as the tie-breaking
// (lexicographic) order everywhere ranks are computed.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.size() < 2)
            throw TooSmallAlphabet("alphabet needs at least 2 symbols, got " +
                                   std::to_string(labels_.size()));
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l).second)
                throw DomainError("duplicate symbol label '" + l + "'");
    }

    // "a", "b", "c", ... (wraps to "aa" style past 'z')
    static Alphabet latin(std::size_t size) {
        std::vector<std::string> labels;
        labels.reserve(size);
        for (std::size_t i = 0; i < size; ++i) {
            std::string l;
            std::size_t v = i;
            do {
                l.insert(l.begin(), static_cast<char>('a' + v % 26));
                v /= 26;
            } while (v > 0);
            labels.push_back(l);
        }
        return Alphabet(std::move(labels));
    }

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
};

// Probability vector over an Alphabet. Construction from raw weights
// normalizes and rejects non-positive entries; the only zero-bearing
// instances are the point masses produced by tilt limits.
class Dist {
public:
    // Validates raw weights: all finite and > 0, then normalizes.
    Dist(std::vector<double> raw_weights, Alphabet alphabet, double unambiguity_gap = kUnambiguityGap)
        : alphabet_(std::move(alphabet)), probs_(std::move(raw_weights)) {
        if (probs_.size() != alphabet_.size())
            throw DomainError("weight count " + std::to_string(probs_.size()) +
                              " does not match alphabet size " + std::to_string(alphabet_.size()));
        double sum = 0.0;
        for (double w : probs_) {
            if (!std::isfinite(w)) throw DomainError("weights must be finite");
            if (w <= 0.0) throw NonPositiveWeight("weights must be strictly positive");
            sum += w;
        }
        for (double& w : probs_) w /= sum;
        double check = 0.0;
        for (double w : probs_) check += w;
        if (std::abs(check - 1.0) > 1e-12)
            throw DomainError("normalization failed to reach unit sum");
        classify(unambiguity_gap);
    }

    static Dist uniform(Alphabet alphabet) {
        std::vector<double> w(alphabet.size(), 1.0);
        return Dist(std::move(w), std::move(alphabet));
    }

    // Degenerate limit distribution (all mass on one symbol). Only the tilt
    // limits alpha = +/-inf produce these; they are never unambiguous and
    // fail the strict-positivity invariant on purpose.
    static Dist point_mass(Alphabet alphabet, std::size_t index) {
        if (index >= alphabet.size()) throw DomainError("point mass index out of range");
        Dist d{Tag{}, std::move(alphabet)};
        d.probs_.assign(d.alphabet_.size(), 0.0);
        d.probs_[index] = 1.0;
        d.argmax_ = d.argmin_ = index; // argmin over support
        d.unambiguous_ = false;
        return d;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<double>& probs() const { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::size_t size() const { return probs_.size(); }

    // Unique argmax and argmin, both with gap > unambiguity_gap to the
    // runner-up (Assumption-1 style condition).
    bool unambiguous() const { return unambiguous_; }
    std::size_t argmax() const { return argmax_; }
    std::size_t argmin() const { return argmin_; }

    bool strictly_positive() const {
        return std::all_of(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; });
    }

private:
    struct Tag {};
    Dist(Tag, Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    void classify(double gap) {
        std::size_t imax = 0, imin = 0;
        for (std::size_t i = 1; i < probs_.size(); ++i) {
            if (probs_[i] > probs_[imax]) imax = i;
            if (probs_[i] < probs_[imin]) imin = i;
        }
        argmax_ = imax;
        argmin_ = imin;
        double max2 = kNegInf, min2 = kPosInf;
        for (std::size_t i = 0; i < probs_.size(); ++i) {
            if (i != imax) max2 = std::max(max2, probs_[i]);
            if (i != imin) min2 = std::min(min2, probs_[i]);
        }
        unambiguous_ = (probs_[imax] - max2 > gap) && (min2 - probs_[imin] > gap);
    }

    Alphabet alphabet_;
    std::vector<double> probs_;
    std::size_t argmax_ = 0;
    std::size_t argmin_ = 0;
    bool unambiguous_ = false;
};

inline double max_abs_diff(const Dist& p, const Dist& q) {
    double m = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        m = std::max(m, std::abs(p[i] - q[i]));
    return m;
}

inline void require_same_alphabet(const Dist& p, const Dist& q) {
    if (p.alphabet() != q.alphabet())
        throw AlphabetMismatch("distributions live on different alphabets");
}

// Shannon entropy in nats. Zero entries contribute zero.
inline double entropy(const Dist& p) {
    double h = 0.0;
    for (double x : p.probs())
        if (x > 0.0) h -= x * std::log(x);
    return h;
}

// H(p||q) = -sum p log q. +inf if q misses part of p's support.
inline double cross_entropy(const Dist& p, const Dist& q) {
    require_same_alphabet(p, q);
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return kPosInf;
        h -= p[i] * std::log(q[i]);
    }
    return h;
}

// D(p||q) = sum p log(p/q), in nats.
inline double kl_divergence(const Dist& p, const Dist& q) {
    require_same_alphabet(p, q);
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return kPosInf;
        d += p[i] * std::log(p[i] / q[i]);
    }
    return d;
}

// Renyi entropy of the given order (order != 1; use entropy() at 1).
// The sum runs over the support, so order -> 0 tends to log(support size).
inline double renyi_entropy(const Dist& p, double order) {
    if (order == 1.0) throw OrderIsOne("Renyi entropy undefined at order 1; use entropy()");
    if (!std::isfinite(order)) throw DomainError("Renyi order must be finite");
    double s = kNegInf;
    for (double x : p.probs())
        if (x > 0.0) s = log_add(s, order * std::log(x));
    return s / (1.0 - order);
}

} // namespace guesswork

#endif // GUESSWORK_DIST_HPP
