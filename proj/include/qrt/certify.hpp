#pragma once

// Flag-algebra certificates: the lower bound min_J c(J) on t(target, W), exact PSD and
// kernel checks, and the four built-in certificates for H10, H11, H13, H14.

#include "qrt/catalog.hpp"
#include "qrt/density.hpp"
#include "qrt/flags.hpp"
#include "qrt/rational.hpp"
#include "qrt/symmatrix.hpp"
#include "qrt/tournamenton.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrt {

struct CertificateFamily {
        FlagFamily family;
        SymMatrix matrix;
        std::optional<std::vector<RationalVector>> kernel;
};

/// Claims t(target, W) >= constant for every tournamenton W. Upper bounds are stored with
/// the target negated.
struct Certificate {
        std::string name;
        LinComb target;
        Rational constant;
        int m = 5;
        std::vector<CertificateFamily> families;
        /// Require c(J) == constant for every J rather than min_J c(J) >= constant.
        bool tight = false;
        /// Human-facing form of the inequality, e.g. "8 t(C3) + 256 t(H10) <= 5/4".
        std::string statement;
};

/// Throws std::invalid_argument describing the first structural problem.
inline void validate(const Certificate &cert)
{
        if (cert.m < 1 || cert.m > max_enumeration_order)
                throw std::invalid_argument(cert.name + ": m out of range");
        if (cert.target.max_order() > cert.m)
                throw std::invalid_argument(cert.name + ": target has more than m vertices");
        for (std::size_t q = 0; q < cert.families.size(); ++q) {
                const auto &f = cert.families[q];
                const std::string where = cert.name + ": family " + std::to_string(q + 1);
                if (f.matrix.order() != f.family.size())
                        throw std::invalid_argument(where + ": matrix order " + std::to_string(f.matrix.order()) + " but " +
                                                    std::to_string(f.family.size()) + " flags");
                const int r = f.family.root.order(), k = f.family.k;
                if (k < r + 1 || 2 * k - r > cert.m)
                        throw std::invalid_argument(where + ": need k >= r+1 and 2k-r <= m");
                for (const auto &flag : f.family.members)
                        if (flag.order() != k || flag.roots != r || !(flag.root() == f.family.root))
                                throw std::invalid_argument(where + ": flag " + flag.encode() + " does not fit the root");
                if (f.kernel)
                        for (const auto &v : *f.kernel)
                                if (v.size() != f.family.size())
                                        throw std::invalid_argument(where + ": kernel vector has wrong length");
        }
}

/// c(J) = t_inj(target,J) - sum_q sum_ij b_q(i,j;J) (A_q)_ij over the m-vertex classes J.
inline DensityVector bound_values(const Certificate &cert)
{
        validate(cert);
        DensityVector c = DensityVector::zeros(cert.m);
        for (auto &[key, val] : c.values)
                val = t_inj(cert.target, Tournament::decode(key));
        for (const auto &f : cert.families) {
                const CoefficientTable tab = coefficient_table(f.family, cert.m);
                for (std::size_t i = 0; i < f.family.size(); ++i)
                        for (std::size_t j = 0; j < f.family.size(); ++j) {
                                const Rational &a = f.matrix(i, j);
                                if (a.is_zero())
                                        continue;
                                for (auto &[key, val] : c.values)
                                        val -= tab.table[i][j].values.at(key) * a;
                        }
        }
        return c;
}

struct FamilyReport {
        PsdResult psd;
        std::vector<RationalVector> kernel;
        bool kernel_claimed = false;
        bool kernel_ok = true;
};

struct VerificationReport {
        std::string name;
        std::vector<FamilyReport> families;
        DensityVector values;
        Rational minimum;
        bool bound_ok = false;
        bool tight_ok = true;
        bool pass = false;
        std::string failure;
};

inline VerificationReport verify(const Certificate &cert)
{
        VerificationReport rep;
        rep.name = cert.name;
        for (std::size_t q = 0; q < cert.families.size(); ++q) {
                const auto &f = cert.families[q];
                FamilyReport fr;
                fr.psd = psd_check(f.matrix);
                fr.kernel = kernel_basis(f.matrix);
                if (f.kernel) {
                        fr.kernel_claimed = true;
                        fr.kernel_ok = same_span(fr.kernel, *f.kernel);
                }
                if (rep.failure.empty() && !fr.psd.psd)
                        rep.failure = "matrix of family " + std::to_string(q + 1) + " is not positive semidefinite";
                if (rep.failure.empty() && !fr.kernel_ok)
                        rep.failure = "kernel of family " + std::to_string(q + 1) + " differs from the claimed span";
                rep.families.push_back(std::move(fr));
        }
        rep.values = bound_values(cert);
        bool first = true;
        for (const auto &[key, v] : rep.values.values) {
                if (first || v < rep.minimum)
                        rep.minimum = v;
                first = false;
                if (cert.tight && v != cert.constant) {
                        if (rep.tight_ok && rep.failure.empty())
                                rep.failure = "c(" + key + ") = " + v.str() + ", expected " + cert.constant.str();
                        rep.tight_ok = false;
                }
        }
        rep.bound_ok = rep.minimum >= cert.constant;
        if (!rep.bound_ok && rep.failure.empty())
                rep.failure = "minimum of c(J) is " + rep.minimum.str() + ", below " + cert.constant.str();
        rep.pass = rep.failure.empty();
        return rep;
}

namespace detail {

inline CertificateFamily make_family(int q, const Rational &scale, const std::vector<std::vector<long>> &rows,
                                     std::vector<std::vector<long>> kernel)
{
        CertificateFamily f{flag_family(q), SymMatrix::scaled(scale, rows), std::nullopt};
        if (!kernel.empty()) {
                std::vector<RationalVector> k;
                for (const auto &v : kernel) {
                        RationalVector rv;
                        for (long x : v)
                                rv.push_back(Rational(x));
                        k.push_back(std::move(rv));
                }
                f.kernel = std::move(k);
        }
        return f;
}

inline LinComb combo(std::initializer_list<std::pair<Rational, Tournament>> terms)
{
        return LinComb(std::vector<LinComb::Term>(terms.begin(), terms.end()));
}

} // namespace detail

inline const std::vector<std::string> &builtin_names()
{
        static const std::vector<std::string> names = {"h10", "h11", "h13", "h14"};
        return names;
}

inline Certificate builtin_certificate(const std::string &which)
{
        const Catalog &cat = catalog();
        const Tournament c3 = cat[3], tt3 = cat[2];
        Certificate c;
        c.m = 5;
        c.tight = true;
        if (which == "h10") {
                c.name = "h10";
                c.statement = "8 t(C3) + 256 t(H10) <= 5/4";
                c.target = detail::combo({{Rational(-8), c3}, {Rational(-256), cat[10]}});
                c.constant = Rational(-5, 4);
                c.families.push_back(detail::make_family(2, Rational(1, 245),
                                                         {{4724, -1883, 1081, -4598, 3827, -293, 1390, -4248},
                                                          {-1883, 6512, -4787, 3150, 39, 378, -2965, -444},
                                                          {1081, -4787, 3856, -2274, -371, -313, 2010, 798},
                                                          {-4598, 3150, -2274, 5490, -3658, 156, -1734, 3468},
                                                          {3827, 39, -371, -3658, 4600, -420, 945, -4962},
                                                          {-293, 378, -313, 156, -420, 606, -660, 546},
                                                          {1390, -2965, 2010, -1734, 945, -660, 2376, -1362},
                                                          {-4248, -444, 798, 3468, -4962, 546, -1362, 6204}},
                                                         {{1, 1, 1, 1, 1, 1, 1, 1}}));
                c.families.push_back(detail::make_family(3, Rational(1, 245),
                                                         {{612, 162, 162, -162, 162, -162, -162, -612},
                                                          {162, 2082, 342, 252, 342, -24, -1050, -2106},
                                                          {162, 342, 2082, -24, 342, -1050, 252, -2106},
                                                          {-162, 252, -24, 1554, -1050, -186, -186, -198},
                                                          {162, 342, 342, -1050, 2082, 252, -24, -2106},
                                                          {-162, -24, -1050, -186, 252, 1554, -186, -198},
                                                          {-162, -1050, 252, -186, -24, -186, 1554, -198},
                                                          {-612, -2106, -2106, -198, -2106, -198, -198, 7524}},
                                                         {}));
        } else if (which == "h11") {
                c.name = "h11";
                c.statement = "8 t(C3) + 256 t(H11) <= 5/4";
                c.target = detail::combo({{Rational(-8), c3}, {Rational(-256), cat[11]}});
                c.constant = Rational(-5, 4);
                c.families.push_back(detail::make_family(2, Rational(1, 7),
                                                         {{257, -130, -214, 127, -57, 201, 40, -224},
                                                          {-130, 199, 123, -179, 72, -130, -86, 131},
                                                          {-214, 123, 210, -134, 45, -190, -48, 208},
                                                          {127, -179, -134, 204, -79, 120, 77, -136},
                                                          {-57, 72, 45, -79, 58, -44, -30, 35},
                                                          {201, -130, -190, 120, -44, 219, 51, -227},
                                                          {40, -86, -48, 77, -30, 51, 59, -63},
                                                          {-224, 131, 208, -136, 35, -227, -63, 276}},
                                                         {{1, 1, 1, 1, 1, 1, 1, 1}}));
                c.families.push_back(detail::make_family(3, Rational(1, 7),
                                                         {{184, -31, -31, 22, -31, 22, 22, -157},
                                                          {-31, 62, -10, -26, -10, 4, -11, 22},
                                                          {-31, -10, 62, 4, -10, -11, -26, 22},
                                                          {22, -26, 4, 61, -11, -11, -11, -28},
                                                          {-31, -10, -10, -11, 62, -26, 4, 22},
                                                          {22, 4, -11, -11, -26, 61, -11, -28},
                                                          {22, -11, -26, -11, 4, -11, 61, -28},
                                                          {-157, 22, 22, -28, 22, -28, -28, 175}},
                                                         {}));
        } else if (which == "h13") {
                c.name = "h13";
                c.statement = "8 t(TT3) + 1024/7 t(H13) >= 8/7";
                c.target = detail::combo({{Rational(8), tt3}, {Rational(1024, 7), cat[13]}});
                c.constant = Rational(8, 7);
                c.families.push_back(detail::make_family(2, Rational(1, 945),
                                                         {{3680, 1296, 1080, -2376, -6376, 1400, 2808, -1512},
                                                          {1296, 4528, -1080, -1512, -4424, -1400, 5832, -3240},
                                                          {1080, -1080, 5616, -2160, -3240, 3240, -5400, 1944},
                                                          {-2376, -1512, -2160, 4320, 5400, -1512, -3240, 1080},
                                                          {-6376, -4424, -3240, 5400, 16200, -5400, -5400, 3240},
                                                          {1400, -1400, 3240, -1512, -5400, 5400, -3240, 1512},
                                                          {2808, 5832, -5400, -3240, -5400, -3240, 16200, -7560},
                                                          {-1512, -3240, 1944, 1080, 3240, 1512, -7560, 4536}},
                                                         {{1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, -1, -1, 1, 1, -1, -1}}));
        } else if (which == "h14") {
                c.name = "h14";
                c.statement = "8 t(TT3) + 1024/5 t(H14) >= 6/5";
                c.target = detail::combo({{Rational(8), tt3}, {Rational(1024, 5), cat[14]}});
                c.constant = Rational(6, 5);
                c.families.push_back(detail::make_family(1, Rational(4, 5), {{1, -1, -1, 1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}, {1, -1, -1, 1}},
                                                         {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}));
                c.families.push_back(detail::make_family(3, Rational(8, 15),
                                                         {{3, -1, -1, -1, -1, -1, -1, 3},
                                                          {-1, 27, -5, -5, -5, -5, -5, -1},
                                                          {-1, -5, 27, -5, -5, -5, -5, -1},
                                                          {-1, -5, -5, 27, -5, -5, -5, -1},
                                                          {-1, -5, -5, -5, 27, -5, -5, -1},
                                                          {-1, -5, -5, -5, -5, 27, -5, -1},
                                                          {-1, -5, -5, -5, -5, -5, 27, -1},
                                                          {3, -1, -1, -1, -1, -1, -1, 3}},
                                                         {{1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0, 0, -1}}));
        } else {
                throw std::invalid_argument("unknown built-in certificate '" + which + "' (expected h10, h11, h13 or h14)");
        }
        return c;
}

/// Checks t(TT3,W) - 1/8 == t(TT4,W) - t(C4,W) on W.
inline bool uniqueness_identity(const StepW &w)
{
        const Catalog &cat = catalog();
        return t_step(cat[2], w) - Rational(1, 8) == t_step(cat[4], w) - t_step(cat[6], w);
}

/// t_inj(TT3, .) on (TT4, C4, C3+sink, C3+source); the expected values are 4/24, 2/24, 3/24, 3/24.
inline std::vector<Rational> uniqueness_coefficients()
{
        const Catalog &cat = catalog();
        return {t_inj(cat[2], cat[4]), t_inj(cat[2], cat[6]), t_inj(cat[2], cat[5]), t_inj(cat[2], cat[7])};
}

} // namespace qrt
