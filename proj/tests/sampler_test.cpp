#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace qrt;

namespace {

// Upper 1e-4 normal quantile; the chi-square tests below fail by chance about once in
// ten thousand seeds.
constexpr double z_crit = 3.719;

double chi_square(const std::map<std::string, long> &counts, const std::map<std::string, Rational> &prob, long trials)
{
        double stat = 0;
        for (const auto &[key, p] : prob) {
                double expected = p.to_double() * static_cast<double>(trials);
                auto it = counts.find(key);
                double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
                stat += (observed - expected) * (observed - expected) / expected;
        }
        return stat;
}

} // namespace

TEST(Streams, Deterministic)
{
        Rng a = make_stream(7, 3), b = make_stream(7, 3), c = make_stream(7, 4), d = make_stream(8, 3);
        auto x = a();
        EXPECT_EQ(x, b());
        EXPECT_NE(x, c());
        EXPECT_NE(x, d());
        EXPECT_THROW(uniform_below(a, 0), std::invalid_argument);
        for (int i = 0; i < 1000; ++i) {
                long v = uniform_int(a, -3, 3);
                ASSERT_GE(v, -3);
                ASSERT_LE(v, 3);
        }
}

TEST(Sample, SameSeedSameTournament)
{
        SampleConfig cfg{u_blend_at(Rational(1, 3)), 40, 12345};
        EXPECT_EQ(sample(cfg), sample(cfg));
        SampleConfig other = cfg;
        other.seed = 12346;
        EXPECT_NE(sample(cfg), sample(other));
        EXPECT_THROW(sample({constant_half(), 0, 1}), std::invalid_argument);
}

TEST(Sample, PrefixConsistent)
{
        StepW w = blend(constant_half(), from_tournament(cyclic_triangle()), Rational(2, 7));
        Tournament big = sample({w, 30, 99});
        Tournament small = sample({w, 12, 99});
        std::vector<int> first(12);
        std::iota(first.begin(), first.end(), 0);
        EXPECT_EQ(big.induced(first), small);
}

TEST(Sample, FiveVertexClassFrequencies)
{
        const long trials = 100000;
        for (const StepW &w : {constant_half(), u_blend_at(Rational(1, 2)), blend(constant_half(), from_tournament(Tournament::transitive(3)), Rational(1, 2))}) {
                std::map<std::string, long> counts;
                for (long s = 0; s < trials; ++s)
                        ++counts[canonical_form(sample({w, 5, static_cast<std::uint64_t>(s)}))];
                std::map<std::string, Rational> prob;
                int df = -1;
                for (const auto &j : enumerate(5)) {
                        Rational p = induced_density(j, w);
                        if (p.is_zero()) {
                                EXPECT_EQ(counts.count(j.encode()), 0U);
                                continue;
                        }
                        prob[j.encode()] = p;
                        ++df;
                }
                double stat = chi_square(counts, prob, trials);
                EXPECT_LT(stat, chi_square_critical(df, z_crit)) << "df=" << df;
        }
}

TEST(Sample, LabelledOutcomesUniformUnderHalf)
{
        const long trials = 100000;
        std::map<std::string, long> counts;
        for (long s = 0; s < trials; ++s)
                ++counts[sample({constant_half(), 5, static_cast<std::uint64_t>(s)}).encode()];
        std::map<std::string, Rational> prob;
        for (unsigned long code = 0; code < 1024; ++code)
                prob[oracle::from_code(5, code).encode()] = Rational(1, 1024);
        ASSERT_EQ(prob.size(), 1024U);
        // Significance 1e-3.
        EXPECT_LT(chi_square(counts, prob, trials), chi_square_critical(1023, 3.0902));
}

TEST(Sample, QuasirandomFiveVertexExact)
{
        // Under W = 1/2 each labelled tournament has probability 2^-10.
        for (const auto &j : enumerate(5))
                EXPECT_EQ(induced_density(j, constant_half()), Rational(120 / automorphism_count(j), 1024));
}

TEST(EmpiricalDensity, AgreesWithExactDensity)
{
        Rng rng = make_stream(71, 0);
        for (int trial = 0; trial < 5; ++trial) {
                Tournament host = sample({random_step(rng), 9, static_cast<std::uint64_t>(trial)});
                for (const Tournament &h : {cyclic_triangle(), Tournament::transitive(3), catalog()[6]}) {
                        const long n = 200000;
                        double p = t(h, host).to_double();
                        double est = empirical_density(h, host, n, 1000 + static_cast<std::uint64_t>(trial));
                        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n));
                        EXPECT_LE(std::abs(est - p), z_crit * sigma + 1e-12) << h.encode() << " in " << host.encode();
                }
        }
        EXPECT_EQ(empirical_density(Tournament::transitive(4), cyclic_triangle(), 1000, 1), 0.0);
        EXPECT_EQ(empirical_density(catalog()[0], cyclic_triangle(), 1000, 1), 1.0);
        EXPECT_THROW(empirical_density(cyclic_triangle(), cyclic_triangle(), 0, 1), std::invalid_argument);
}

TEST(EmpiricalDensity, LargeSampleNearLimit)
{
        const StepW w = blend(constant_half(), from_tournament(cyclic_triangle()), Rational(1, 2));
        Tournament host = sample({w, 2000, 2024});
        for (int h : {9, 12, 19}) {
                double exact = t_step(catalog()[h], w).to_double();
                EXPECT_LE(std::abs(empirical_density(catalog()[h], host, 400000, 7) - exact), 0.02) << "H" << h;
        }
}

TEST(Defect, ShrinksForRegularSource)
{
        const StepW w = from_tournament(cyclic_triangle());
        Rational prev(2);
        for (int n : {300, 1000, 3000}) {
                Rational d = near_regularity_defect(sample({w, n, 11}), Rational(1, 10));
                EXPECT_LE(d, prev) << "n=" << n;
                prev = d;
        }
        EXPECT_LE(prev, Rational(1, 100));
}

TEST(Defect, TransitiveNine)
{
        EXPECT_EQ(near_regularity_defect(Tournament::transitive(9), Rational(1, 4)), Rational(5, 9));
        EXPECT_EQ(near_regularity_defect(catalog()[19], Rational(1, 5)), Rational(0));
        EXPECT_EQ(near_regularity_defect(catalog()[19], Rational(1, 100)), Rational(1));
        EXPECT_THROW(near_regularity_defect(catalog()[19], Rational(0)), std::out_of_range);
        EXPECT_THROW(near_regularity_defect(catalog()[19], Rational(1, 2)), std::out_of_range);
}

TEST(ChiSquare, CriticalValues)
{
        EXPECT_NEAR(chi_square_critical(4, 1.6449), 9.488, 0.1);
        EXPECT_NEAR(chi_square_critical(10, 1.6449), 18.307, 0.05);
        EXPECT_NEAR(chi_square_critical(11, 3.0902), 31.264, 0.3);
}
