#pragma once

// W-random tournaments from rational step tournamentons, Monte Carlo homomorphism
// densities and the near-regularity defect.
//
// Stream layout for sample(): stream 0 draws the block labels, stream 1+i orients the
// pairs (i, j) with j > i in increasing j. All draws are exact integer comparisons.

#include "qrt/random.hpp"
#include "qrt/rational.hpp"
#include "qrt/tournament.hpp"
#include "qrt/tournamenton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qrt {

struct SampleConfig {
        StepW source;
        int n = 1;
        std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t to_u64(const mpz_class &z, const char *what)
{
        if (z < 0 || !z.fits_ulong_p())
                throw std::out_of_range(std::string(what) + " does not fit in 64 bits");
        return z.get_ui();
}

/// p/q as 64-bit integers.
struct Fraction64 {
        std::uint64_t num = 0, den = 1;
};

inline Fraction64 fraction64(const Rational &r)
{
        return {to_u64(r.raw().get_num(), "probability numerator"), to_u64(r.raw().get_den(), "probability denominator")};
}

inline bool bernoulli(Rng &rng, const Fraction64 &p) { return p.num != 0 && uniform_below(rng, p.den) < p.num; }

} // namespace detail

inline Tournament sample(const SampleConfig &cfg)
{
        if (cfg.n < 1)
                throw std::invalid_argument("sample order must be positive");
        const StepW &w = cfg.source;
        const std::size_t k = w.blocks();

        mpz_class common = 1;
        for (const auto &x : w.weights())
                mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.raw().get_den_mpz_t());
        const std::uint64_t total = detail::to_u64(common, "weight denominator");
        std::vector<std::uint64_t> cumulative;
        std::uint64_t acc = 0;
        for (const auto &x : w.weights()) {
                mpz_class part = x.raw().get_num() * (common / x.raw().get_den());
                acc += detail::to_u64(part, "weight numerator");
                cumulative.push_back(acc);
        }

        std::vector<detail::Fraction64> prob(k * k);
        for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                        prob[a * k + b] = detail::fraction64(w.value(a, b));

        Rng labels_rng = make_stream(cfg.seed, 0);
        std::vector<std::size_t> label(static_cast<std::size_t>(cfg.n));
        for (auto &l : label) {
                std::uint64_t x = uniform_below(labels_rng, total);
                l = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), x) - cumulative.begin());
        }

        Tournament t(cfg.n);
        for (int i = 0; i < cfg.n; ++i) {
                Rng row = make_stream(cfg.seed, 1 + static_cast<std::uint64_t>(i));
                for (int j = i + 1; j < cfg.n; ++j) {
                        bool forward = detail::bernoulli(row, prob[label[static_cast<std::size_t>(i)] * k + label[static_cast<std::size_t>(j)]]);
                        t.orient(forward ? i : j, forward ? j : i);
                }
        }
        return t;
}

/// Monte Carlo estimate of t(H,T): the fraction of `trials` uniformly random maps
/// V(H) -> V(T) that preserve every arc.
inline double empirical_density(const Tournament &h, const Tournament &t, long trials, std::uint64_t seed)
{
        if (trials < 1)
                throw std::invalid_argument("trials must be positive");
        Rng rng = make_stream(seed, 0);
        const int hn = h.order();
        const auto tn = static_cast<std::uint64_t>(t.order());
        std::vector<int> image(static_cast<std::size_t>(hn));
        long hits = 0;
        for (long s = 0; s < trials; ++s) {
                for (auto &x : image)
                        x = static_cast<int>(uniform_below(rng, tn));
                bool ok = true;
                for (int u = 0; u < hn && ok; ++u)
                        for (int v = u + 1; v < hn && ok; ++v) {
                                int a = image[static_cast<std::size_t>(u)], b = image[static_cast<std::size_t>(v)];
                                ok = a != b && (h.arc(u, v) ? t.arc(a, b) : t.arc(b, a));
                        }
                hits += ok;
        }
        return static_cast<double>(hits) / static_cast<double>(trials);
}

/// Fraction of vertices whose out-degree lies outside [(1/2-eps)n, (1/2+eps)n].
inline Rational near_regularity_defect(const Tournament &t, const Rational &eps)
{
        if (eps.sign() <= 0 || eps >= Rational(1, 2))
                throw std::out_of_range("eps must lie in (0,1/2)");
        const Rational n(t.order());
        const Rational lo = (Rational(1, 2) - eps) * n, hi = (Rational(1, 2) + eps) * n;
        long bad = 0;
        for (int v = 0; v < t.order(); ++v) {
                Rational d(t.out_degree(v));
                if (d < lo || d > hi)
                        ++bad;
        }
        return Rational(bad) / n;
}

/// Upper critical value of the chi-square distribution with `df` degrees of freedom at the
/// standard normal quantile `z` (Wilson-Hilferty approximation).
inline double chi_square_critical(double df, double z)
{
        double c = 2.0 / (9.0 * df);
        return df * std::pow(1.0 - c + z * std::sqrt(c), 3.0);
}

} // namespace qrt
