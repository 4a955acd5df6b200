#pragma once

// Step tournamentons: block weights plus a complementary block-value matrix over a
// coefficient ring (Rational, or Polynomial for symbolic constructions). Diagonal
// blocks carry the value 1/2.

#include "qrt/density.hpp"
#include "qrt/polynomial.hpp"
#include "qrt/random.hpp"
#include "qrt/rational.hpp"
#include "qrt/tournament.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrt {

template <typename Ring> class StepTournamenton {
public:
        StepTournamenton(std::vector<Rational> weights, std::vector<std::vector<Ring>> values)
            : weights_(std::move(weights)), values_(std::move(values))
        {
                const std::size_t k = weights_.size();
                if (k == 0)
                        throw std::invalid_argument("step tournamenton needs at least one block");
                Rational total(0);
                for (const auto &w : weights_) {
                        if (w.sign() <= 0)
                                throw std::invalid_argument("block weights must be positive");
                        total += w;
                }
                if (total != Rational(1))
                        throw std::invalid_argument("block weights sum to " + total.str() + ", not 1");
                if (values_.size() != k)
                        throw std::invalid_argument("value matrix has wrong size");
                for (const auto &row : values_)
                        if (row.size() != k)
                                throw std::invalid_argument("value matrix has wrong size");
                for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = i; j < k; ++j)
                                if (!(values_[i][j] + values_[j][i] == Ring(1)))
                                        throw std::invalid_argument("values (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                                    ") and its transpose do not sum to 1");
        }

        std::size_t blocks() const { return weights_.size(); }
        const Rational &weight(std::size_t i) const { return weights_[i]; }
        const std::vector<Rational> &weights() const { return weights_; }
        const Ring &value(std::size_t i, std::size_t j) const { return values_[i][j]; }
        const std::vector<std::vector<Ring>> &values() const { return values_; }

        friend bool operator==(const StepTournamenton &, const StepTournamenton &) = default;

private:
        std::vector<Rational> weights_;
        std::vector<std::vector<Ring>> values_;
};

using StepW = StepTournamenton<Rational>;
using PolyW = StepTournamenton<Polynomial>;

namespace detail {

/// Sum over block assignments of the vertices listed in `free_vertices` (the others are
/// pinned by `assigned`) of (product of weights of free vertices) * (product of arc values).
template <typename Ring>
Ring integrate_blocks(const Tournament &d, const StepTournamenton<Ring> &w, std::vector<int> assigned, std::span<const int> free_vertices)
{
        const int n = d.order();
        const int k = static_cast<int>(w.blocks());
        std::vector<bool> placed(static_cast<std::size_t>(n), false);
        for (int v = 0; v < n; ++v)
                placed[static_cast<std::size_t>(v)] = assigned[static_cast<std::size_t>(v)] >= 0;

        Ring fixed(1);
        for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                        if (u != v && placed[static_cast<std::size_t>(u)] && placed[static_cast<std::size_t>(v)] && d.arc(u, v))
                                fixed = fixed * w.value(static_cast<std::size_t>(assigned[static_cast<std::size_t>(u)]),
                                                        static_cast<std::size_t>(assigned[static_cast<std::size_t>(v)]));
        if (fixed.is_zero())
                return Ring(0);

        Ring sum(0);
        auto rec = [&](auto &&self, std::size_t pos, const Ring &arcs, const Rational &mass) -> void {
                if (pos == free_vertices.size()) {
                        sum = sum + arcs * Ring(mass);
                        return;
                }
                const int v = free_vertices[pos];
                for (int b = 0; b < k; ++b) {
                        Ring next = arcs;
                        bool zero = false;
                        for (int u = 0; u < n && !zero; ++u) {
                                if (u == v || !placed[static_cast<std::size_t>(u)])
                                        continue;
                                auto bu = static_cast<std::size_t>(assigned[static_cast<std::size_t>(u)]);
                                const Ring &val = d.arc(u, v) ? w.value(bu, static_cast<std::size_t>(b)) : w.value(static_cast<std::size_t>(b), bu);
                                if (val.is_zero())
                                        zero = true;
                                else
                                        next = next * val;
                        }
                        if (zero)
                                continue;
                        assigned[static_cast<std::size_t>(v)] = b;
                        placed[static_cast<std::size_t>(v)] = true;
                        self(self, pos + 1, next, mass * w.weight(static_cast<std::size_t>(b)));
                        placed[static_cast<std::size_t>(v)] = false;
                        assigned[static_cast<std::size_t>(v)] = -1;
                }
        };
        rec(rec, 0, fixed, Rational(1));
        return sum;
}

} // namespace detail

/// t(D,W): the integral of the product of W over the arcs of D, exact.
template <typename Ring> Ring t_step(const Tournament &d, const StepTournamenton<Ring> &w)
{
        std::vector<int> free(static_cast<std::size_t>(d.order()));
        for (int v = 0; v < d.order(); ++v)
                free[static_cast<std::size_t>(v)] = v;
        return detail::integrate_blocks(d, w, std::vector<int>(static_cast<std::size_t>(d.order()), -1), free);
}

template <typename Ring> Ring t_step(const LinComb &d, const StepTournamenton<Ring> &w)
{
        Ring s(0);
        for (const auto &[c, term] : d.terms())
                s = s + Ring(c) * t_step(term, w);
        return s;
}

/// Rooted density: vertices 0..r-1 of `body` pinned to `root_blocks`, the rest integrated.
template <typename Ring> Ring rooted_t(const Tournament &body, int roots, const StepTournamenton<Ring> &w, std::span<const int> root_blocks)
{
        if (static_cast<int>(root_blocks.size()) != roots || roots > body.order())
                throw std::invalid_argument("root block list does not match the root count");
        std::vector<int> assigned(static_cast<std::size_t>(body.order()), -1);
        for (int i = 0; i < roots; ++i) {
                int b = root_blocks[static_cast<std::size_t>(i)];
                if (b < 0 || b >= static_cast<int>(w.blocks()))
                        throw std::out_of_range("root block index out of range");
                assigned[static_cast<std::size_t>(i)] = b;
        }
        std::vector<int> free;
        for (int v = roots; v < body.order(); ++v)
                free.push_back(v);
        return detail::integrate_blocks(body, w, assigned, free);
}

template <typename Ring> struct RegularityReport {
        bool is_regular = false;
        std::vector<Ring> out_degrees;
};

template <typename Ring> RegularityReport<Ring> degrees(const StepTournamenton<Ring> &w)
{
        RegularityReport<Ring> rep;
        rep.is_regular = true;
        const Ring half(Rational(1, 2));
        for (std::size_t i = 0; i < w.blocks(); ++i) {
                Ring d(0);
                for (std::size_t j = 0; j < w.blocks(); ++j)
                        d = d + Ring(w.weight(j)) * w.value(i, j);
                if (!(d == half))
                        rep.is_regular = false;
                rep.out_degrees.push_back(std::move(d));
        }
        return rep;
}

/// d(J,W) = v(J)!/aut(J) * t(J,W).
inline Rational induced_density(const Tournament &j, const StepW &w)
{
        Rational fact(1);
        for (int i = 2; i <= j.order(); ++i)
                fact *= Rational(i);
        return fact / Rational(automorphism_count(j)) * t_step(j, w);
}

inline DensityVector induced_densities(const StepW &w, int m)
{
        DensityVector d = DensityVector::zeros(m);
        for (auto &[key, val] : d.values)
                val = induced_density(Tournament::decode(key), w);
        return d;
}

inline StepW constant_half() { return StepW({Rational(1)}, {{Rational(1, 2)}}); }

/// W_T: equal blocks, value 1 on arc blocks, 0 on reversed blocks, 1/2 on the diagonal.
inline StepW from_tournament(const Tournament &t)
{
        const int n = t.order();
        std::vector<Rational> weights(static_cast<std::size_t>(n), Rational(1, n));
        std::vector<std::vector<Rational>> values(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                        values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                            i == j ? Rational(1, 2) : (t.arc(i, j) ? Rational(1) : Rational(0));
        return StepW(std::move(weights), std::move(values));
}

/// U_z = 1/2 + z (2 W_{C3} - 1) with z symbolic.
inline PolyW u_blend()
{
        const Polynomial half(Rational(1, 2));
        const Polynomial z = Polynomial::variable();
        const Tournament c3 = cyclic_triangle();
        std::vector<std::vector<Polynomial>> values(3, std::vector<Polynomial>(3));
        for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                        values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j ? half : (c3.arc(i, j) ? half + z : half - z);
        return PolyW({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, std::move(values));
}

inline StepW specialize(const PolyW &w, const Rational &z)
{
        std::vector<std::vector<Rational>> values(w.blocks(), std::vector<Rational>(w.blocks()));
        for (std::size_t i = 0; i < w.blocks(); ++i)
                for (std::size_t j = 0; j < w.blocks(); ++j)
                        values[i][j] = w.value(i, j).eval(z);
        return StepW(w.weights(), std::move(values));
}

inline StepW u_blend_at(const Rational &z) { return specialize(u_blend(), z); }

/// W_z: W1's blocks scaled into [0,z], W0's into (z,1], cross blocks 1/2.
inline StepW blend(const StepW &w0, const StepW &w1, const Rational &z)
{
        if (z.sign() <= 0 || z >= Rational(1))
                throw std::out_of_range("blend parameter must lie in (0,1), got " + z.str());
        const std::size_t k1 = w1.blocks(), k0 = w0.blocks(), k = k0 + k1;
        std::vector<Rational> weights;
        for (std::size_t i = 0; i < k1; ++i)
                weights.push_back(z * w1.weight(i));
        for (std::size_t i = 0; i < k0; ++i)
                weights.push_back((Rational(1) - z) * w0.weight(i));
        std::vector<std::vector<Rational>> values(k, std::vector<Rational>(k, Rational(1, 2)));
        for (std::size_t i = 0; i < k1; ++i)
                for (std::size_t j = 0; j < k1; ++j)
                        values[i][j] = w1.value(i, j);
        for (std::size_t i = 0; i < k0; ++i)
                for (std::size_t j = 0; j < k0; ++j)
                        values[k1 + i][k1 + j] = w0.value(i, j);
        return StepW(std::move(weights), std::move(values));
}

namespace detail {

/// k positive weights c_i/D with D <= 16.
inline std::vector<Rational> random_simplex(Rng &rng, int k)
{
        long total = uniform_int(rng, k, 16);
        // Composition of `total` into k positive parts via sorted cut points.
        std::vector<long> cuts;
        std::vector<bool> used(static_cast<std::size_t>(total), false);
        while (static_cast<int>(cuts.size()) < k - 1) {
                long c = uniform_int(rng, 1, total - 1);
                if (!used[static_cast<std::size_t>(c)]) {
                        used[static_cast<std::size_t>(c)] = true;
                        cuts.push_back(c);
                }
        }
        std::sort(cuts.begin(), cuts.end());
        std::vector<Rational> w;
        long prev = 0;
        for (long c : cuts) {
                w.push_back(Rational(c - prev, total));
                prev = c;
        }
        w.push_back(Rational(total - prev, total));
        return w;
}

} // namespace detail

/// Random step tournamenton: 1..5 blocks, weights with denominators <= 16, off-diagonal
/// values p/q with q <= 16 and the complement on the transposed block.
inline StepW random_step(Rng &rng, int max_blocks = 5)
{
        int k = static_cast<int>(uniform_int(rng, 1, max_blocks));
        auto weights = detail::random_simplex(rng, k);
        std::vector<std::vector<Rational>> values(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, 2)));
        for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                        long q = uniform_int(rng, 1, 16);
                        long p = uniform_int(rng, 0, q);
                        values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(p, q);
                        values[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = Rational(1) - Rational(p, q);
                }
        return StepW(std::move(weights), std::move(values));
}

/// Random regular step tournamenton on 3..5 blocks: starts from 1/2 and adds cyclic
/// flows a->b->c->a of size eps, entering block pair (a,b) as eps/(w_a w_b), which keeps
/// every weighted row sum at 1/2.
inline StepW random_regular_step(Rng &rng)
{
        int k = static_cast<int>(uniform_int(rng, 3, 5));
        auto weights = detail::random_simplex(rng, k);
        std::vector<std::vector<Rational>> values(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, 2)));
        int flows = static_cast<int>(uniform_int(rng, 1, 4));
        int added = 0;
        for (int attempt = 0; added < flows && attempt < 100; ++attempt) {
                int a = static_cast<int>(uniform_int(rng, 0, k - 1));
                int b = static_cast<int>(uniform_int(rng, 0, k - 1));
                int c = static_cast<int>(uniform_int(rng, 0, k - 1));
                if (a == b || b == c || a == c)
                        continue;
                Rational eps(uniform_int(rng, 1, 8), uniform_int(rng, 8, 64));
                auto trial = values;
                bool ok = true;
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
                        auto xs = static_cast<std::size_t>(x), ys = static_cast<std::size_t>(y);
                        Rational delta = eps / (weights[xs] * weights[ys]);
                        trial[xs][ys] += delta;
                        trial[ys][xs] -= delta;
                        if (trial[xs][ys] > Rational(1) || trial[ys][xs].sign() < 0)
                                ok = false;
                }
                if (!ok)
                        continue;
                values = std::move(trial);
                ++added;
        }
        return StepW(std::move(weights), std::move(values));
}

} // namespace qrt
