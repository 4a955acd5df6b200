#pragma once

// Rooted flags, flag families and flag-product coefficients.

#include "qrt/density.hpp"
#include "qrt/rational.hpp"
#include "qrt/tournament.hpp"
#include "qrt/tournamenton.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrt {

/// A tournament whose first `roots` vertices are labelled roots.
struct Flag {
        Tournament body;
        int roots = 0;

        Flag(Tournament b, int r) : body(std::move(b)), roots(r)
        {
                if (r < 0 || r > body.order())
                        throw std::invalid_argument("flag root count out of range");
        }

        int order() const { return body.order(); }

        Tournament root() const
        {
                std::vector<int> vs;
                for (int i = 0; i < roots; ++i)
                        vs.push_back(i);
                return body.induced(vs);
        }

        /// `f<r>:t<n>:<bits>`.
        std::string encode() const { return "f" + std::to_string(roots) + ":" + body.encode(); }

        static Flag decode(const std::string &s)
        {
                auto colon = s.find(':');
                if (s.size() < 3 || s[0] != 'f' || colon == std::string::npos || colon == 1)
                        throw std::invalid_argument("bad flag encoding '" + s + "'");
                int r = 0;
                for (std::size_t i = 1; i < colon; ++i) {
                        if (s[i] < '0' || s[i] > '9')
                                throw std::invalid_argument("bad flag encoding '" + s + "'");
                        r = r * 10 + (s[i] - '0');
                }
                return Flag(Tournament::decode(s.substr(colon + 1)), r);
        }

        friend bool operator==(const Flag &, const Flag &) = default;
};

struct FlagFamily {
        Tournament root;
        int k = 0;
        std::vector<Flag> members;

        std::size_t size() const { return members.size(); }
};

inline constexpr int max_flag_order = 6;

/// All flags of order k over root R. Member i (0-based) orients the non-root pairs, taken
/// row-major over (a,b) with a<b, by the bits of i with the first pair most significant.
inline FlagFamily enumerate_family(const Tournament &root, int k)
{
        const int r = root.order();
        if (k < r || k > max_flag_order)
                throw std::out_of_range("flag order must satisfy v(R) <= k <= " + std::to_string(max_flag_order));
        std::vector<std::pair<int, int>> free;
        for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                        if (b >= r)
                                free.emplace_back(a, b);
        FlagFamily fam{root, k, {}};
        const std::size_t count = std::size_t{1} << free.size();
        for (std::size_t idx = 0; idx < count; ++idx) {
                Tournament body(k);
                for (int a = 0; a < r; ++a)
                        for (int b = a + 1; b < r; ++b)
                                body.orient(root.arc(a, b) ? a : b, root.arc(a, b) ? b : a);
                for (std::size_t p = 0; p < free.size(); ++p) {
                        auto [a, b] = free[p];
                        bool forward = (idx >> (free.size() - 1 - p)) & 1U;
                        body.orient(forward ? a : b, forward ? b : a);
                }
                fam.members.emplace_back(std::move(body), r);
        }
        return fam;
}

/// The three standard families, member by member:
///   1: root TT2 (2->1), k = 3;  2: root TT3 (3->2->1, 3->1), k = 4;  3: root C3 (1->2->3->1), k = 4.
/// In each, member i has root vertex j beating the new vertices according to the binary digits of i-1.
inline FlagFamily flag_family(int q)
{
        static const char *const f1[] = {"t3:000", "t3:001", "t3:010", "t3:011"};
        static const char *const f2[] = {"t4:000000", "t4:000001", "t4:000010", "t4:000011",
                                         "t4:001000", "t4:001001", "t4:001010", "t4:001011"};
        static const char *const f3[] = {"t4:100100", "t4:100101", "t4:100110", "t4:100111",
                                         "t4:101100", "t4:101101", "t4:101110", "t4:101111"};
        FlagFamily fam;
        switch (q) {
        case 1:
                fam.root = Tournament::decode("t2:0");
                fam.k = 3;
                for (const char *e : f1)
                        fam.members.emplace_back(Tournament::decode(e), 2);
                break;
        case 2:
                fam.root = Tournament::decode("t3:000");
                fam.k = 4;
                for (const char *e : f2)
                        fam.members.emplace_back(Tournament::decode(e), 3);
                break;
        case 3:
                fam.root = Tournament::decode("t3:101");
                fam.k = 4;
                for (const char *e : f3)
                        fam.members.emplace_back(Tournament::decode(e), 3);
                break;
        default:
                throw std::out_of_range("flag families are numbered 1..3");
        }
        return fam;
}

inline bool compatible(const Flag &a, const Flag &b) { return a.roots == b.roots && a.root() == b.root(); }

/// Tournaments obtained by identifying the roots of F1 and F2 and orienting every pair
/// (non-root of F1, non-root of F2) both ways. Vertices: roots, then F1's non-roots,
/// then F2's non-roots.
inline std::vector<Tournament> glue_completions(const Flag &f1, const Flag &f2)
{
        if (!compatible(f1, f2))
                throw std::invalid_argument("flags " + f1.encode() + " and " + f2.encode() + " are not compatible");
        const int r = f1.roots, k1 = f1.order(), k2 = f2.order();
        const int n = k1 + k2 - r;
        auto map2 = [&](int v) { return v < r ? v : v - r + k1; };
        Tournament base(n);
        for (int a = 0; a < k1; ++a)
                for (int b = a + 1; b < k1; ++b)
                        base.orient(f1.body.arc(a, b) ? a : b, f1.body.arc(a, b) ? b : a);
        for (int a = 0; a < k2; ++a)
                for (int b = a + 1; b < k2; ++b) {
                        if (b < r)
                                continue;
                        int ma = map2(a), mb = map2(b);
                        base.orient(f2.body.arc(a, b) ? ma : mb, f2.body.arc(a, b) ? mb : ma);
                }
        std::vector<std::pair<int, int>> free;
        for (int a = r; a < k1; ++a)
                for (int b = k1; b < n; ++b)
                        free.emplace_back(a, b);
        std::vector<Tournament> out;
        const std::size_t count = std::size_t{1} << free.size();
        for (std::size_t idx = 0; idx < count; ++idx) {
                Tournament c = base;
                for (std::size_t p = 0; p < free.size(); ++p) {
                        auto [a, b] = free[p];
                        bool forward = (idx >> (free.size() - 1 - p)) & 1U;
                        c.orient(forward ? a : b, forward ? b : a);
                }
                out.push_back(std::move(c));
        }
        return out;
}

/// b_r(F1,F2;J) for every m-vertex class J: the sum over glue completions C of t_inj(C,J).
inline DensityVector product_coefficients(const Flag &f1, const Flag &f2, int m)
{
        const int need = f1.order() + f2.order() - f1.roots;
        if (m < need || m > max_enumeration_order)
                throw std::out_of_range("product expansion needs " + std::to_string(need) + " <= m <= " +
                                        std::to_string(max_enumeration_order));
        DensityVector b = DensityVector::zeros(m);
        std::map<std::string, int, std::greater<>> multiplicity;
        for (const auto &c : glue_completions(f1, f2))
                ++multiplicity[canonical_form(c)];
        for (auto &[key, val] : b.values) {
                const Tournament j = Tournament::decode(key);
                for (const auto &[ckey, mult] : multiplicity)
                        val += Rational(mult) * t_inj(Tournament::decode(ckey), j);
        }
        return b;
}

/// table[i][j] = b(F_i, F_j; .) over the m-vertex classes.
struct CoefficientTable {
        FlagFamily family;
        int m = 0;
        std::vector<std::vector<DensityVector>> table;

        /// The |family| x |family| matrix of coefficients for one class J.
        std::vector<std::vector<Rational>> matrix_for(const Tournament &j) const
        {
                std::vector<std::vector<Rational>> out(family.size(), std::vector<Rational>(family.size()));
                for (std::size_t a = 0; a < family.size(); ++a)
                        for (std::size_t b = 0; b < family.size(); ++b)
                                out[a][b] = table[a][b].at(j);
                return out;
        }
};

inline CoefficientTable coefficient_table(const FlagFamily &family, int m)
{
        CoefficientTable ct{family, m, {}};
        const std::size_t s = family.size();
        ct.table.assign(s, std::vector<DensityVector>(s));
        for (std::size_t a = 0; a < s; ++a)
                for (std::size_t b = a; b < s; ++b) {
                        ct.table[a][b] = product_coefficients(family.members[a], family.members[b], m);
                        ct.table[b][a] = ct.table[a][b];
                }
        return ct;
}

/// The integral over root variables of t_r(F1,W) t_r(F2,W) / t_r(R,W) (zero where the
/// denominator vanishes), computed directly by block enumeration.
inline Rational integrated_product(const Flag &f1, const Flag &f2, const StepW &w)
{
        if (!compatible(f1, f2))
                throw std::invalid_argument("flags " + f1.encode() + " and " + f2.encode() + " are not compatible");
        const int r = f1.roots;
        const Tournament root = f1.root();
        const int k = static_cast<int>(w.blocks());
        std::vector<int> blocks(static_cast<std::size_t>(r), 0);
        Rational total(0);
        for (;;) {
                Rational mass(1);
                for (int b : blocks)
                        mass *= w.weight(static_cast<std::size_t>(b));
                Rational denom = rooted_t(root, r, w, blocks);
                if (!denom.is_zero())
                        total += mass * rooted_t(f1.body, r, w, blocks) * rooted_t(f2.body, r, w, blocks) / denom;
                int pos = r - 1;
                while (pos >= 0 && ++blocks[static_cast<std::size_t>(pos)] == k)
                        blocks[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0)
                        break;
        }
        return total;
}

} // namespace qrt
