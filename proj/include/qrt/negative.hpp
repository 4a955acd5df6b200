#pragma once

// Constructions showing that some 5-vertex tournaments do not force quasirandomness:
// the H9 density in W_{C3}, the U_z polynomials, the regular 7-vertex search and a
// bisection demonstrator for the two-block blend.

#include "qrt/catalog.hpp"
#include "qrt/density.hpp"
#include "qrt/polynomial.hpp"
#include "qrt/rational.hpp"
#include "qrt/tournament.hpp"
#include "qrt/tournamenton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace qrt {

inline const Rational &threshold_1024()
{
        static const Rational v(1, 1024);
        return v;
}

/// t(H9, W_{C3}); equals 1/1024.
inline Rational h9_check() { return t_step(catalog()[9], from_tournament(cyclic_triangle())); }

struct UzPolynomial {
        int h = 0;
        Polynomial computed;
        Polynomial expected;
        bool ok() const { return computed == expected; }
};

struct UzEvaluation {
        int h = 0;
        Rational z;
        Rational computed;
        Rational expected;
        bool ok() const { return computed == expected; }
};

struct UzReport {
        std::vector<UzPolynomial> polynomials;
        std::vector<UzEvaluation> evaluations;

        bool pass() const
        {
                return std::all_of(polynomials.begin(), polynomials.end(), [](const auto &p) { return p.ok(); }) &&
                       std::all_of(evaluations.begin(), evaluations.end(), [](const auto &e) { return e.ok(); });
        }
};

namespace detail {

inline Polynomial even_poly(const Rational &c0, const Rational &c4, const Rational &c6, const Rational &c8)
{
        Polynomial z = Polynomial::variable();
        Polynomial z2 = z * z, z4 = z2 * z2, z6 = z4 * z2, z8 = z4 * z4;
        return Polynomial(c0) + Polynomial(c4) * z4 + Polynomial(c6) * z6 + Polynomial(c8) * z8;
}

} // namespace detail

/// Reference forms of t(H, U_z) for H in {H12, H18, H19}.
inline std::vector<std::pair<int, Polynomial>> reference_uz_polynomials()
{
        const Rational c0(1, 1024);
        return {{12, detail::even_poly(c0, Rational(-1, 96), Rational(7, 108), Rational(1, 18))},
                {18, detail::even_poly(c0, Rational(-1, 96), Rational(-1, 108), Rational(-7, 162))},
                {19, detail::even_poly(c0, Rational(5, 288), Rational(-5, 36), Rational(5, 162))}};
}

inline UzReport uz_report()
{
        UzReport rep;
        const PolyW u = u_blend();
        std::map<int, Polynomial> computed;
        for (const auto &[h, expected] : reference_uz_polynomials()) {
                computed[h] = t_step(catalog()[h], u);
                rep.polynomials.push_back({h, computed[h], expected});
        }
        const std::vector<std::tuple<int, Rational, Rational>> evals = {
            {12, Rational(1, 2), Rational(43, 27648)},
            {12, Rational(1, 3), Rational(57161, 60466176)},
            {18, Rational(1, 2), Rational(1, 82944)},
            {19, Rational(1, 3), Rational(546961, 544195584)},
            {19, Rational(1, 2), Rational(1, 82944)},
        };
        for (const auto &[h, z, expected] : evals)
                rep.evaluations.push_back({h, z, computed[h].eval(z), expected});
        return rep;
}

/// The example 7-vertex regular tournament with t(H18, W_T) > 1/1024.
inline Tournament example_seven()
{
        return Tournament::from_adjacency({{0, 1, 1, 1, 0, 0, 0},
                                           {0, 0, 1, 0, 1, 1, 0},
                                           {0, 0, 0, 1, 1, 0, 1},
                                           {0, 1, 0, 0, 0, 1, 1},
                                           {1, 0, 0, 1, 0, 1, 0},
                                           {1, 0, 1, 0, 0, 0, 1},
                                           {1, 1, 0, 0, 1, 0, 0}});
}

inline constexpr double example_seven_density = 0.001249886;

/// Every labelled regular tournament on n vertices (n odd), by backtracking over the pairs
/// in row-major order with out-degree budgets.
inline std::vector<Tournament> labelled_regular(int n)
{
        if (n < 1 || n % 2 == 0 || n > 9)
                throw std::out_of_range("regular tournaments are enumerated for odd n <= 9");
        const int half = (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                        pairs.emplace_back(i, j);
        std::vector<int> out(static_cast<std::size_t>(n), 0), seen(static_cast<std::size_t>(n), 0);
        Tournament t(n);
        std::vector<Tournament> found;
        auto rec = [&](auto &&self, std::size_t p) -> void {
                if (p == pairs.size()) {
                        found.push_back(t);
                        return;
                }
                auto [i, j] = pairs[p];
                auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
                ++seen[ui];
                ++seen[uj];
                for (int dir = 0; dir < 2; ++dir) {
                        int winner = dir == 0 ? i : j, loser = dir == 0 ? j : i;
                        auto uw = static_cast<std::size_t>(winner), ul = static_cast<std::size_t>(loser);
                        ++out[uw];
                        // Remaining pairs for v: (n-1) - seen[v]; out-degree must still reach half.
                        bool ok = out[uw] <= half && out[ul] + (n - 1 - seen[ul]) >= half;
                        if (ok) {
                                t.orient(winner, loser);
                                self(self, p + 1);
                        }
                        --out[uw];
                }
                --seen[ui];
                --seen[uj];
        };
        rec(rec, 0);
        return found;
}

/// Isomorphism classes of regular tournaments on n vertices; canonicalisation is split
/// across `jobs` threads.
inline std::vector<Tournament> regular_classes(int n, int jobs = 1)
{
        const auto labelled = labelled_regular(n);
        jobs = std::max(1, jobs);
        std::vector<std::vector<std::string>> keys(static_cast<std::size_t>(jobs));
        auto work = [&](int id) {
                for (std::size_t i = static_cast<std::size_t>(id); i < labelled.size(); i += static_cast<std::size_t>(jobs))
                        keys[static_cast<std::size_t>(id)].push_back(canonical_form(labelled[i]));
        };
        std::vector<std::thread> threads;
        for (int id = 1; id < jobs; ++id)
                threads.emplace_back(work, id);
        work(0);
        for (auto &th : threads)
                th.join();
        std::map<std::string, int, std::greater<>> uniq;
        for (const auto &ks : keys)
                for (const auto &k : ks)
                        uniq[k] = 1;
        std::vector<Tournament> out;
        for (const auto &[k, v] : uniq)
                out.push_back(Tournament::decode(k));
        return out;
}

struct SearchResult {
        Tournament tournament;
        Rational density;
        bool exceeds_threshold = false;
};

/// All regular 7-vertex classes with their exact t(H18, W_T).
inline std::vector<SearchResult> regular7_search(int jobs = 1)
{
        const Tournament h18 = catalog()[18];
        std::vector<SearchResult> out;
        for (const auto &t : regular_classes(7, jobs)) {
                Rational d = t_step(h18, from_tournament(t));
                out.push_back({t, d, d > threshold_1024()});
        }
        return out;
}

class CrossingError : public std::runtime_error {
public:
        using std::runtime_error::runtime_error;
};

/// Bisection for z in (0,1) with |t(H, blend(W0,W1,z)) - t(H,1/2)| <= tol. The values at
/// W0 and W1 must lie strictly on opposite sides of t(H,1/2).
inline Rational find_crossing(const LinComb &h, const StepW &w0, const StepW &w1, const Rational &tol)
{
        if (tol.sign() <= 0)
                throw std::invalid_argument("tolerance must be positive");
        const Rational target = t_half(h);
        const int s0 = (t_step(h, w0) - target).sign();
        const int s1 = (t_step(h, w1) - target).sign();
        if (s0 == 0 || s1 == 0 || s0 == s1)
                throw CrossingError("NO_SIGN_CHANGE: the densities at the two ends do not lie strictly on opposite sides of t(H,1/2)");
        Rational lo(0), hi(1);
        for (int iter = 0; iter < 400; ++iter) {
                Rational mid = (lo + hi) / Rational(2);
                Rational f = t_step(h, blend(w0, w1, mid)) - target;
                if (abs(f) <= tol)
                        return mid;
                if (f.sign() == s0)
                        lo = mid;
                else
                        hi = mid;
        }
        throw CrossingError("bisection did not reach the tolerance");
}

} // namespace qrt
