#ifndef GUESSWORK_ORACLE_HPP
#define GUESSWORK_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "guesswork/dist.hpp"
#include "guesswork/errors.hpp"
#include "guesswork/numeric.hpp"

namespace guesswork {

// Resource guards: full-sequence enumeration and type tables are capped so
// the exact oracle stays within desk-scale memory and runtime.
inline constexpr std::uint64_t kMaxEnumSequences = std::uint64_t{1} << 24;
inline constexpr double kMaxTypeCount = static_cast<double>(std::uint64_t{1} << 22);

// Score ties are grouped when two log-probabilities differ by at most
// kTieTolPerSymbol * n.
inline constexpr double kTieTolPerSymbol = 1e-9;

namespace detail {

inline void require_oracle_dist(const Dist& d, const char* what) {
    if (!d.strictly_positive())
        throw DomainError(std::string(what) + ": distribution must have full support");
}

inline std::uint64_t checked_pow(std::size_t k, int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) {
        if (p > kMaxEnumSequences / k)
            throw TooLarge("sequence space exceeds the enumeration guard");
        p *= k;
    }
    if (p > kMaxEnumSequences)
        throw TooLarge("sequence space exceeds the enumeration guard");
    return p;
}

inline double type_count(std::size_t k, int n) {
    // C(n+k-1, k-1), evaluated multiplicatively
    double c = 1.0;
    for (std::size_t i = 1; i < k; ++i)
        c *= static_cast<double>(n + i) / static_cast<double>(i);
    return c;
}

// All compositions of n into k parts, first coordinate descending.
inline void enumerate_compositions(int n, std::size_t k,
                                   const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> counts(k, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 == k) {
            counts[pos] = left;
            visit(counts);
            return;
        }
        for (int c = left; c >= 0; --c) {
            counts[pos] = c;
            rec(pos + 1, left - c);
        }
    };
    rec(0, n);
}

} // namespace detail

// Exhaustive guesswork ranks over all |X|^n sequences. Sequences are coded
// as base-|X| integers with the first position most significant, so code
// order is exactly the lexicographic tie-breaking order.
class EnumTable {
public:
    EnumTable(int n, std::size_t k, std::vector<std::uint32_t> rank_by_code,
              std::vector<std::uint32_t> code_by_rank, std::vector<std::uint32_t> cluster_by_code,
              std::vector<std::uint64_t> cluster_seq_counts)
        : n_(n), k_(k), rank_by_code_(std::move(rank_by_code)),
          code_by_rank_(std::move(code_by_rank)), cluster_by_code_(std::move(cluster_by_code)),
          cluster_seq_counts_(std::move(cluster_seq_counts)) {}

    int n() const { return n_; }
    std::size_t alphabet_size() const { return k_; }
    std::uint64_t sequence_count() const { return rank_by_code_.size(); }

    std::uint32_t rank_of_code(std::uint64_t code) const {
        return rank_by_code_[static_cast<std::size_t>(code)];
    }
    std::uint32_t rank_of(std::span<const std::size_t> symbols) const {
        return rank_of_code(encode(symbols));
    }
    std::uint64_t code_at_rank(std::uint32_t rank) const { return code_by_rank_[rank - 1]; }

    // True when no other sequence has a score within the tie tolerance.
    bool tie_free(std::uint64_t code) const {
        return cluster_seq_counts_[cluster_by_code_[static_cast<std::size_t>(code)]] == 1;
    }

    std::uint64_t encode(std::span<const std::size_t> symbols) const {
        std::uint64_t code = 0;
        for (std::size_t s : symbols) {
            if (s >= k_) throw DomainError("symbol index out of range");
            code = code * k_ + s;
        }
        return code;
    }
    std::vector<std::size_t> decode(std::uint64_t code) const {
        std::vector<std::size_t> symbols(static_cast<std::size_t>(n_));
        for (int i = n_ - 1; i >= 0; --i) {
            symbols[static_cast<std::size_t>(i)] = static_cast<std::size_t>(code % k_);
            code /= k_;
        }
        return symbols;
    }

private:
    int n_;
    std::size_t k_;
    std::vector<std::uint32_t> rank_by_code_;
    std::vector<std::uint32_t> code_by_rank_;
    std::vector<std::uint32_t> cluster_by_code_;
    std::vector<std::uint64_t> cluster_seq_counts_;
};

// Ranks all length-n sequences by nu^n probability, descending, ties broken
// lexicographically. Scores are computed per type so equal-type sequences
// tie exactly; near-ties within 1e-9*n are grouped before lexicographic
// ordering takes over.
inline EnumTable exact_guesswork_enum(const Dist& nu, int n) {
    detail::require_oracle_dist(nu, "exact_guesswork_enum");
    if (n < 1) throw DomainError("exact_guesswork_enum: n must be >= 1");
    const std::size_t k = nu.size();
    const std::uint64_t total = detail::checked_pow(k, n);

    std::vector<double> log_nu(k);
    for (std::size_t i = 0; i < k; ++i) log_nu[i] = std::log(nu[i]);
    auto score_of_counts = [&](const std::vector<int>& counts) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) s += counts[i] * log_nu[i];
        return s;
    };

    // distinct type scores -> tolerance clusters
    std::vector<double> scores;
    detail::enumerate_compositions(n, k, [&](const std::vector<int>& c) {
        scores.push_back(score_of_counts(c));
    });
    std::sort(scores.begin(), scores.end(), std::greater<>());
    const double tie_tol = kTieTolPerSymbol * n;
    std::vector<double> cluster_lead;
    std::map<double, std::uint32_t> cluster_of_score;
    for (double s : scores) {
        if (cluster_lead.empty() || cluster_lead.back() - s > tie_tol)
            cluster_lead.push_back(s);
        cluster_of_score.emplace(s, static_cast<std::uint32_t>(cluster_lead.size() - 1));
    }
    const std::size_t n_clusters = cluster_lead.size();

    // pass 1: cluster of each sequence + cluster populations
    std::vector<std::uint32_t> cluster_by_code(static_cast<std::size_t>(total));
    std::vector<std::uint64_t> cluster_count(n_clusters, 0);
    std::vector<int> counts(k);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::fill(counts.begin(), counts.end(), 0);
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            ++counts[static_cast<std::size_t>(c % k)];
            c /= k;
        }
        const std::uint32_t cl = cluster_of_score.at(score_of_counts(counts));
        cluster_by_code[static_cast<std::size_t>(code)] = cl;
        ++cluster_count[cl];
    }

    // pass 2: counting sort by (cluster, code); code order is lex order
    std::vector<std::uint64_t> offset(n_clusters, 0);
    std::uint64_t acc = 0;
    for (std::size_t cl = 0; cl < n_clusters; ++cl) {
        offset[cl] = acc;
        acc += cluster_count[cl];
    }
    std::vector<std::uint32_t> code_by_rank(static_cast<std::size_t>(total));
    std::vector<std::uint32_t> rank_by_code(static_cast<std::size_t>(total));
    for (std::uint64_t code = 0; code < total; ++code) {
        const std::uint32_t cl = cluster_by_code[static_cast<std::size_t>(code)];
        const std::uint64_t pos = offset[cl]++;
        code_by_rank[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(code);
        rank_by_code[static_cast<std::size_t>(code)] = static_cast<std::uint32_t>(pos + 1);
    }
    return EnumTable(n, k, std::move(rank_by_code), std::move(code_by_rank),
                     std::move(cluster_by_code), std::move(cluster_count));
}

// One empirical type of length-n sequences together with everything the
// asymptotic analysis needs about its class.
struct TypeRecord {
    std::vector<int> counts;
    double log_class_size = 0.0; // log multinomial coefficient
    double nu_score = 0.0;       // log nu^n-probability of any member
    double log_guesswork = 0.0;  // log rank of the class's lex-first member
    double log_mu_prob = 0.0;    // log mu^n-probability of the whole class
};

// Exact method-of-types table for mismatched guesswork at block length n:
// ordering distribution nu (model), sampling distribution mu (source).
class GuessTable {
public:
    GuessTable(int n, Dist model, Dist source, std::vector<TypeRecord> records,
               std::vector<double> log_guesswork_mid)
        : n_(n), model_(std::move(model)), source_(std::move(source)),
          records_(std::move(records)), log_guesswork_mid_(std::move(log_guesswork_mid)) {}

    int n() const { return n_; }
    const Dist& model() const { return model_; }
    const Dist& source() const { return source_; }
    const std::vector<TypeRecord>& records() const { return records_; }

    // log of the mean of the first and last rank covered by the record's
    // tie cluster; equals the class's exact average rank when no other
    // class ties with it.
    double log_guesswork_mid(std::size_t i) const { return log_guesswork_mid_[i]; }

private:
    int n_;
    Dist model_;
    Dist source_;
    std::vector<TypeRecord> records_;
    std::vector<double> log_guesswork_mid_;
};

// Builds the full type table: every composition of n, its class size, both
// log-probabilities, and the class guesswork rank obtained by a prefix
// log-sum-exp over strictly-more-likely classes (ties grouped by tolerance
// contribute nothing to the rank, giving the lex-first lower bound).
inline GuessTable build_guess_table(const Dist& nu, const Dist& mu, int n) {
    detail::require_oracle_dist(nu, "build_guess_table");
    detail::require_oracle_dist(mu, "build_guess_table");
    require_same_alphabet(nu, mu);
    if (n < 1) throw DomainError("build_guess_table: n must be >= 1");
    const std::size_t k = nu.size();
    if (detail::type_count(k, n) > kMaxTypeCount)
        throw TooLarge("type space exceeds the table guard");

    std::vector<double> log_nu(k), log_mu(k);
    for (std::size_t i = 0; i < k; ++i) {
        log_nu[i] = std::log(nu[i]);
        log_mu[i] = std::log(mu[i]);
    }
    const double log_n_fact = std::lgamma(static_cast<double>(n) + 1.0);

    std::vector<TypeRecord> records;
    detail::enumerate_compositions(n, k, [&](const std::vector<int>& counts) {
        TypeRecord r;
        r.counts = counts;
        r.log_class_size = log_n_fact;
        for (std::size_t i = 0; i < k; ++i) {
            r.log_class_size -= std::lgamma(static_cast<double>(counts[i]) + 1.0);
            r.nu_score += counts[i] * log_nu[i];
            r.log_mu_prob += counts[i] * log_mu[i];
        }
        r.log_mu_prob += r.log_class_size;
        records.push_back(std::move(r));
    });

    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (records[a].nu_score != records[b].nu_score)
            return records[a].nu_score > records[b].nu_score;
        return a < b;
    });

    const double tie_tol = kTieTolPerSymbol * n;
    std::vector<double> mid(records.size());
    double more_likely = kNegInf; // log total size of strictly-more-likely classes
    std::size_t i = 0;
    while (i < order.size()) {
        const double lead = records[order[i]].nu_score;
        std::size_t j = i;
        double cluster_total = kNegInf;
        while (j < order.size() && lead - records[order[j]].nu_score <= tie_tol) {
            cluster_total = log_add(cluster_total, records[order[j]].log_class_size);
            ++j;
        }
        const double log_first = log_add(0.0, more_likely);
        const double log_last = log_add(more_likely, cluster_total);
        const double log_mid = log_add(log_first, log_last) - std::log(2.0);
        for (std::size_t t = i; t < j; ++t) {
            records[order[t]].log_guesswork = log_first;
            mid[order[t]] = log_mid;
        }
        more_likely = log_add(more_likely, cluster_total);
        i = j;
    }
    return GuessTable(n, nu, mu, std::move(records), std::move(mid));
}

// Exact normalized growth exponent of the rho-th guesswork moment at block
// length n, using the mid-rank refinement per class.
inline double exact_moment(const GuessTable& table, double rho) {
    if (!(rho > 0.0)) throw NonPositiveRho("moment order rho must be > 0");
    double s = kNegInf;
    const auto& recs = table.records();
    for (std::size_t i = 0; i < recs.size(); ++i)
        s = log_add(s, recs[i].log_mu_prob + rho * table.log_guesswork_mid(i));
    return s / (table.n() * rho);
}

// Exact decay exponent -(1/n) log P(|g/n - t| <= eps) of the guesswork
// window; +inf when no type falls inside the window.
inline double exact_ldp_window(const GuessTable& table, double t, double eps) {
    if (!(eps > 0.0)) throw DomainError("window eps must be > 0");
    const double n = static_cast<double>(table.n());
    double s = kNegInf;
    for (const auto& r : table.records())
        if (std::abs(r.log_guesswork / n - t) <= eps)
            s = log_add(s, r.log_mu_prob);
    if (s == kNegInf) return kPosInf;
    return -s / n;
}

// samples i.i.d. length-n draws from mu^n, each mapped to its type's
// normalized log-guesswork. Sampling uses an explicit inverse-CDF on 53-bit
// uniforms so a seed pins the output exactly.
inline std::vector<double> mc_log_guesswork(const Dist& nu, const Dist& mu, int n, int samples,
                                            std::uint64_t seed) {
    if (samples < 0) throw DomainError("sample count must be >= 0");
    const GuessTable table = build_guess_table(nu, mu, n);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < table.records().size(); ++i)
        index.emplace(table.records()[i].counts, i);

    const std::size_t k = mu.size();
    std::vector<double> cdf(k);
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        acc += mu[i];
        cdf[i] = acc;
    }
    cdf[k - 1] = 1.0;

    std::mt19937_64 rng(seed);
    auto uniform01 = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(samples));
    std::vector<int> counts(k);
    for (int s = 0; s < samples; ++s) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < n; ++i) {
            const double u = uniform01();
            std::size_t sym = 0;
            while (cdf[sym] <= u) ++sym;
            ++counts[sym];
        }
        const std::size_t idx = index.at(counts);
        out.push_back(table.records()[idx].log_guesswork / static_cast<double>(n));
    }
    return out;
}

} // namespace guesswork

#endif // GUESSWORK_ORACLE_HPP
