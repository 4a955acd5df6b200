#pragma once

// Homomorphism counts and densities between finite tournaments.

#include "qrt/rational.hpp"
#include "qrt/tournament.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrt {

/// Formal linear combination of tournaments. Terms are merged by isomorphism class and
/// stored with canonical representatives; zero coefficients are dropped.
class LinComb {
public:
        using Term = std::pair<Rational, Tournament>;

        LinComb() = default;
        LinComb(const Tournament &t) : LinComb(std::vector<Term>{{Rational(1), t}}) {}
        explicit LinComb(const std::vector<Term> &terms)
        {
                std::map<std::string, Rational, std::greater<>> merged;
                for (const auto &[c, t] : terms)
                        merged[canonical_form(t)] += c;
                for (const auto &[key, c] : merged)
                        if (!c.is_zero())
                                terms_.emplace_back(c, Tournament::decode(key));
        }

        const std::vector<Term> &terms() const { return terms_; }
        bool empty() const { return terms_.empty(); }

        int max_order() const
        {
                int m = 0;
                for (const auto &[c, t] : terms_)
                        m = std::max(m, t.order());
                return m;
        }

        friend LinComb operator+(const LinComb &a, const LinComb &b)
        {
                auto all = a.terms_;
                all.insert(all.end(), b.terms_.begin(), b.terms_.end());
                return LinComb(all);
        }
        friend LinComb operator*(const Rational &s, const LinComb &a)
        {
                auto all = a.terms_;
                for (auto &term : all)
                        term.first *= s;
                return LinComb(all);
        }

        friend bool operator==(const LinComb &a, const LinComb &b)
        {
                if (a.terms_.size() != b.terms_.size())
                        return false;
                for (std::size_t i = 0; i < a.terms_.size(); ++i)
                        if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second))
                                return false;
                return true;
        }

private:
        std::vector<Term> terms_;
};

/// Values indexed by the canonical m-vertex classes (keys are canonical encodings).
struct DensityVector {
        int m = 0;
        std::map<std::string, Rational, std::greater<>> values;

        static DensityVector zeros(int m)
        {
                DensityVector d;
                d.m = m;
                for (const auto &t : enumerate(m))
                        d.values[t.encode()] = Rational(0);
                return d;
        }

        const Rational &at(const Tournament &j) const { return values.at(canonical_form(j)); }
        Rational &at(const Tournament &j) { return values.at(canonical_form(j)); }

        Rational total() const
        {
                Rational s(0);
                for (const auto &[k, v] : values)
                        s += v;
                return s;
        }

        friend bool operator==(const DensityVector &, const DensityVector &) = default;
};

namespace detail {

template <typename Visit> void for_each_hom(const Tournament &h, const Tournament &t, Visit &&visit)
{
        const int hn = h.order();
        const int tn = t.order();
        if (tn > 64)
                throw std::out_of_range("host tournaments are limited to 64 vertices here");
        std::vector<int> image(static_cast<std::size_t>(hn));
        const std::uint64_t all = tn == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tn) - 1;
        std::vector<std::uint64_t> out(static_cast<std::size_t>(tn)), in(static_cast<std::size_t>(tn));
        for (int v = 0; v < tn; ++v) {
                out[static_cast<std::size_t>(v)] = t.row_mask(v);
                in[static_cast<std::size_t>(v)] = all & ~t.row_mask(v) & ~(std::uint64_t{1} << v);
        }
        auto rec = [&](auto &&self, int v) -> void {
                if (v == hn) {
                        visit(image);
                        return;
                }
                std::uint64_t cand = all;
                for (int u = 0; u < v; ++u) {
                        int fu = image[static_cast<std::size_t>(u)];
                        cand &= h.arc(u, v) ? out[static_cast<std::size_t>(fu)] : in[static_cast<std::size_t>(fu)];
                }
                while (cand) {
                        int x = __builtin_ctzll(cand);
                        cand &= cand - 1;
                        image[static_cast<std::size_t>(v)] = x;
                        self(self, v + 1);
                }
        };
        rec(rec, 0);
}

inline Rational falling_factorial(int n, int k)
{
        Rational r(1);
        for (int i = 0; i < k; ++i)
                r *= Rational(n - i);
        return r;
}

} // namespace detail

/// Number of arc-preserving maps V(H) -> V(T). Every such map is injective because
/// tournaments have no loops and every pair of H's vertices is joined by an arc.
inline std::uint64_t hom_count(const Tournament &h, const Tournament &t)
{
        std::uint64_t count = 0;
        detail::for_each_hom(h, t, [&](const std::vector<int> &) { ++count; });
        return count;
}

/// hom(H,T) / v(T)^v(H).
inline Rational t(const Tournament &h, const Tournament &host)
{
        return Rational(static_cast<unsigned long>(hom_count(h, host))) / pow(Rational(host.order()), static_cast<unsigned>(h.order()));
}

inline Rational t(const LinComb &h, const Tournament &host)
{
        Rational s(0);
        for (const auto &[c, term] : h.terms())
                s += c * t(term, host);
        return s;
}

/// Injective homomorphism density; zero when v(H) > v(J).
inline Rational t_inj(const Tournament &h, const Tournament &j)
{
        if (h.order() > j.order())
                return Rational(0);
        return Rational(static_cast<unsigned long>(hom_count(h, j))) / detail::falling_factorial(j.order(), h.order());
}

inline Rational t_inj(const LinComb &h, const Tournament &j)
{
        Rational s(0);
        for (const auto &[c, term] : h.terms())
                s += c * t_inj(term, j);
        return s;
}

/// Density in the quasirandom limit: sum of a_i * (1/2)^C(v(H_i),2).
inline Rational t_half(const LinComb &h)
{
        Rational s(0);
        for (const auto &[c, term] : h.terms()) {
                unsigned v = static_cast<unsigned>(term.order());
                s += c * half_pow(v * (v - 1) / 2);
        }
        return s;
}

/// v(v-1)^2 = 2 hom(C3,T) + 6 hom(TT3,T) + 2 hom(TT2,T).
inline bool degree_identity_check(const Tournament &host)
{
        std::uint64_t v = static_cast<std::uint64_t>(host.order());
        std::uint64_t lhs = v * (v - 1) * (v - 1);
        std::uint64_t rhs = 2 * hom_count(cyclic_triangle(), host) + 6 * hom_count(Tournament::transitive(3), host) +
                            2 * hom_count(Tournament::transitive(2), host);
        return lhs == rhs;
}

/// Probability that a uniformly random m-subset of T induces each class.
inline DensityVector induced_densities(const Tournament &host, int m)
{
        if (m < 1 || m > host.order())
                throw std::out_of_range("induced density needs 1 <= m <= v(T)");
        DensityVector d = DensityVector::zeros(m);
        std::vector<int> subset(static_cast<std::size_t>(m));
        long total = 0;
        auto rec = [&](auto &&self, int pos, int start) -> void {
                if (pos == m) {
                        d.values.at(canonical_form(host.induced(subset))) += Rational(1);
                        ++total;
                        return;
                }
                for (int v = start; v <= host.order() - (m - pos); ++v) {
                        subset[static_cast<std::size_t>(pos)] = v;
                        self(self, pos + 1, v + 1);
                }
        };
        rec(rec, 0, 0);
        for (auto &[k, val] : d.values)
                val /= Rational(total);
        return d;
}

} // namespace qrt
