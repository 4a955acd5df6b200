#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qrt;

namespace {

SymMatrix h10_a2() { return builtin_certificate("h10").families[0].matrix; }

RationalVector ints(std::initializer_list<long> xs)
{
        RationalVector v;
        for (long x : xs)
                v.push_back(Rational(x));
        return v;
}

} // namespace

TEST(Rational, LowestTermsAndSign)
{
        Rational r(6, -8);
        EXPECT_EQ(r.str(), "-3/4");
        EXPECT_EQ(r.denominator(), "4");
        EXPECT_EQ(Rational(10, 5).str(), "2");
        EXPECT_EQ(Rational::parse("-12/16").str(), "-3/4");
        EXPECT_EQ(Rational::parse("+6/3").str(), "2");
        EXPECT_EQ(Rational::parse("-7").str(), "-7");
}

TEST(Rational, ParseRejectsGarbage)
{
        EXPECT_THROW(Rational::parse(""), std::invalid_argument);
        EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
        EXPECT_THROW(Rational::parse(" 1/2"), std::invalid_argument);
        EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
        EXPECT_THROW(Rational::parse("x/2"), std::invalid_argument);
        EXPECT_THROW(Rational::parse("1//2"), std::invalid_argument);
}

TEST(Rational, ArithmeticIsExact)
{
        Rational third(1, 3);
        EXPECT_EQ(third + third + third, Rational(1));
        EXPECT_EQ(half_pow(10), Rational(1, 1024));
        EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
        EXPECT_THROW(third / Rational(0), std::domain_error);
        EXPECT_EQ(Rational(439, 351232).decimal(9), "0.001249886");
        EXPECT_EQ(Rational(-5, 4).decimal(3), "-1.250");
}

TEST(Polynomial, TrimAndDegree)
{
        EXPECT_EQ(Polynomial().degree(), -1);
        EXPECT_EQ(Polynomial({Rational(1), Rational(0), Rational(0)}).degree(), 0);
        Polynomial z = Polynomial::variable();
        EXPECT_EQ((z * z - z * z).degree(), -1);
}

TEST(Polynomial, EvaluatesReferenceForms)
{
        auto polys = reference_uz_polynomials();
        EXPECT_EQ(polys[0].second.eval(Rational(1, 2)), Rational(43, 27648));
        EXPECT_EQ(polys[2].second.eval(Rational(1, 3)), Rational(546961, 544195584));
        for (const auto &[h, p] : polys)
                EXPECT_EQ(p.eval(Rational(0)), p.coefficient(0));
}

TEST(Polynomial, EvaluationIsMultiplicative)
{
        Rng rng = make_stream(11, 0);
        auto rnd = [&] { return Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 9)); };
        for (int trial = 0; trial < 50; ++trial) {
                std::vector<Rational> a, b;
                for (long d = uniform_int(rng, 0, 5); d >= 0; --d)
                        a.push_back(rnd());
                for (long d = uniform_int(rng, 0, 5); d >= 0; --d)
                        b.push_back(rnd());
                Polynomial p(a), q(b);
                Rational z = rnd();
                EXPECT_EQ((p * q).eval(z), p.eval(z) * q.eval(z));
                EXPECT_EQ((p + q).eval(z), p.eval(z) + q.eval(z));
        }
}

TEST(SymMatrix, RejectsAsymmetricRows)
{
        EXPECT_THROW(SymMatrix::from_rows({ints({1, 2}), ints({3, 1})}), std::invalid_argument);
        EXPECT_THROW(SymMatrix::from_rows({ints({1, 2})}), std::invalid_argument);
}

TEST(PsdCheck, IdentityIsPsdWithPivots)
{
        PsdResult r = psd_check(SymMatrix::identity(3));
        EXPECT_TRUE(r.psd);
        EXPECT_EQ(r.pivots.size(), 3U);
}

TEST(PsdCheck, IndefiniteGivesWitness)
{
        SymMatrix m = SymMatrix::from_rows({ints({0, 1}), ints({1, 0})});
        PsdResult r = psd_check(m);
        ASSERT_FALSE(r.psd);
        EXPECT_LT(m.quadratic_form(r.witness).sign(), 0);
        EXPECT_LT(m.quadratic_form(ints({1, -1})).sign(), 0);
}

TEST(PsdCheck, CertificateMatrixIsPsd) { EXPECT_TRUE(psd_check(h10_a2()).psd); }

TEST(PsdCheck, AgreesWithPrincipalMinors)
{
        Rng rng = make_stream(5, 0);
        int psd_seen = 0, not_seen = 0;
        for (int trial = 0; trial < 300; ++trial) {
                const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 5));
                SymMatrix m(n);
                if (trial % 2 == 0) {
                        // B^T B with a random low-rank B: PSD and often singular.
                        const std::size_t rows = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n)));
                        std::vector<RationalVector> b(rows, RationalVector(n));
                        for (auto &row : b)
                                for (auto &x : row)
                                        x = Rational(uniform_int(rng, -3, 3));
                        for (std::size_t i = 0; i < n; ++i)
                                for (std::size_t j = i; j < n; ++j) {
                                        Rational s(0);
                                        for (const auto &row : b)
                                                s += row[i] * row[j];
                                        m.set(i, j, s);
                                }
                        if (trial % 4 == 0)
                                m.set(0, 0, m(0, 0) - Rational(1, 7));
                } else {
                        for (std::size_t i = 0; i < n; ++i)
                                for (std::size_t j = i; j < n; ++j)
                                        m.set(i, j, Rational(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3)));
                }
                PsdResult r = psd_check(m);
                ASSERT_EQ(r.psd, oracle::psd_by_minors(m)) << "trial " << trial;
                if (r.psd)
                        ++psd_seen;
                else {
                        ++not_seen;
                        ASSERT_LT(m.quadratic_form(r.witness).sign(), 0);
                }
        }
        EXPECT_GT(psd_seen, 50);
        EXPECT_GT(not_seen, 50);
}

TEST(PsdCheck, CertificateMatricesHaveNonNegativeForms)
{
        Rng rng = make_stream(6, 0);
        for (const auto &name : builtin_names())
                for (const auto &f : builtin_certificate(name).families) {
                        ASSERT_TRUE(psd_check(f.matrix).psd);
                        for (int trial = 0; trial < 100; ++trial) {
                                RationalVector v;
                                for (std::size_t i = 0; i < f.matrix.order(); ++i)
                                        v.push_back(Rational(uniform_int(rng, -20, 20), uniform_int(rng, 1, 10)));
                                EXPECT_GE(f.matrix.quadratic_form(v).sign(), 0);
                        }
                }
}

TEST(Kernel, IdentityHasTrivialKernel) { EXPECT_TRUE(kernel_basis(SymMatrix::identity(4)).empty()); }

TEST(Kernel, CertificateKernels)
{
        auto k = kernel_basis(h10_a2());
        ASSERT_EQ(k.size(), 1U);
        EXPECT_TRUE(same_span(k, {ints({1, 1, 1, 1, 1, 1, 1, 1})}));

        SymMatrix a1 = builtin_certificate("h14").families[0].matrix;
        auto k1 = kernel_basis(a1);
        ASSERT_EQ(k1.size(), 3U);
        EXPECT_TRUE(same_span(k1, {ints({1, 1, 0, 0}), ints({1, 0, 1, 0}), ints({0, 1, 0, 1})}));
        EXPECT_FALSE(same_span(k1, {ints({1, 1, 0, 0}), ints({1, 0, 1, 0})}));
}

TEST(Kernel, VectorsAreAnnihilated)
{
        for (const auto &name : builtin_names())
                for (const auto &f : builtin_certificate(name).families)
                        for (const auto &v : kernel_basis(f.matrix))
                                for (const auto &x : f.matrix.apply(v))
                                        EXPECT_TRUE(x.is_zero());
}

TEST(Kernel, RankNullityOnRandomMatrices)
{
        Rng rng = make_stream(7, 0);
        for (int trial = 0; trial < 50; ++trial) {
                const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
                SymMatrix m(n);
                for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = i; j < n; ++j)
                                m.set(i, j, Rational(uniform_int(rng, -1, 1)));
                std::vector<RationalVector> rows;
                for (std::size_t i = 0; i < n; ++i)
                        rows.push_back(m.row(i));
                EXPECT_EQ(rank(rows) + kernel_basis(m).size(), n);
        }
}
