#pragma once

// Finite labelled tournaments, canonical forms, automorphisms and exhaustive enumeration.
//
// Text encoding: "t<n>:<bits>" with one bit per pair (i,j), i<j, row-major; '1' means i->j.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrt {

/// Largest order accepted by the canonical-form and automorphism routines.
inline constexpr int max_canonical_order = 16;
/// Largest order accepted by enumerate().
inline constexpr int max_enumeration_order = 7;

class Tournament {
public:
        Tournament() = default;

        /// The transitive tournament on n vertices: i->j whenever i<j.
        explicit Tournament(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0)
        {
                if (n < 0)
                        throw std::out_of_range("negative tournament order");
                for (int i = 0; i < n; ++i)
                        for (int j = i + 1; j < n; ++j)
                                set_bit(i, j);
        }

        static Tournament transitive(int n) { return Tournament(n); }

        /// Arcs given as (from, to) pairs, 0-based; unlisted pairs default to i->j for i<j.
        static Tournament from_arcs(int n, std::span<const std::pair<int, int>> arcs)
        {
                Tournament t(n);
                for (auto [u, v] : arcs)
                        t.orient(u, v);
                return t;
        }

        /// From a 0/1 adjacency matrix; throws unless it is a tournament.
        static Tournament from_adjacency(const std::vector<std::vector<int>> &adj)
        {
                int n = static_cast<int>(adj.size());
                Tournament t(n);
                for (int i = 0; i < n; ++i) {
                        if (static_cast<int>(adj[static_cast<std::size_t>(i)].size()) != n)
                                throw std::invalid_argument("adjacency matrix not square");
                        if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
                                throw std::invalid_argument("adjacency matrix has a loop");
                }
                for (int i = 0; i < n; ++i)
                        for (int j = i + 1; j < n; ++j) {
                                int a = adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                                int b = adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                                if (a + b != 1 || (a != 0 && a != 1))
                                        throw std::invalid_argument("not a tournament at pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                                if (a)
                                        t.orient(i, j);
                                else
                                        t.orient(j, i);
                        }
                return t;
        }

        static Tournament decode(std::string_view text)
        {
                auto bad = [&] { return std::invalid_argument("malformed tournament encoding: '" + std::string(text) + "'"); };
                if (text.size() < 3 || text[0] != 't')
                        throw bad();
                auto colon = text.find(':');
                if (colon == std::string_view::npos || colon == 1)
                        throw bad();
                int n = 0;
                for (std::size_t i = 1; i < colon; ++i) {
                        if (text[i] < '0' || text[i] > '9' || n > 1000000)
                                throw bad();
                        n = n * 10 + (text[i] - '0');
                }
                if (n < 1)
                        throw bad();
                std::string_view bits = text.substr(colon + 1);
                if (bits.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2)
                        throw bad();
                Tournament t(n);
                std::size_t k = 0;
                for (int i = 0; i < n; ++i)
                        for (int j = i + 1; j < n; ++j, ++k) {
                                if (bits[k] == '1')
                                        t.orient(i, j);
                                else if (bits[k] == '0')
                                        t.orient(j, i);
                                else
                                        throw bad();
                        }
                return t;
        }

        std::string encode() const
        {
                std::string s = "t" + std::to_string(n_) + ":";
                for (int i = 0; i < n_; ++i)
                        for (int j = i + 1; j < n_; ++j)
                                s += arc(i, j) ? '1' : '0';
                return s;
        }

        int order() const { return n_; }

        bool arc(int from, int to) const
        {
                return (rows_[static_cast<std::size_t>(from * words_ + to / 64)] >> (to % 64)) & 1U;
        }

        void orient(int from, int to)
        {
                if (from == to || from < 0 || to < 0 || from >= n_ || to >= n_)
                        throw std::out_of_range("arc endpoints out of range");
                set_bit(from, to);
                clear_bit(to, from);
        }

        int out_degree(int v) const
        {
                int d = 0;
                for (int w = 0; w < words_; ++w)
                        d += __builtin_popcountll(rows_[static_cast<std::size_t>(v * words_ + w)]);
                return d;
        }
        int in_degree(int v) const { return n_ - 1 - out_degree(v); }

        std::vector<int> out_degrees() const
        {
                std::vector<int> d(static_cast<std::size_t>(n_));
                for (int v = 0; v < n_; ++v)
                        d[static_cast<std::size_t>(v)] = out_degree(v);
                return d;
        }

        /// Non-decreasing out-degree sequence.
        std::vector<int> score_sequence() const
        {
                auto d = out_degrees();
                std::sort(d.begin(), d.end());
                return d;
        }

        long arc_count() const { return static_cast<long>(n_) * (n_ - 1) / 2; }

        Tournament reversed() const
        {
                Tournament t(n_);
                for (int i = 0; i < n_; ++i)
                        for (int j = i + 1; j < n_; ++j)
                                arc(i, j) ? t.orient(j, i) : t.orient(i, j);
                return t;
        }

        /// Vertex perm[i] of this tournament becomes vertex i of the result.
        Tournament relabeled(std::span<const int> perm) const
        {
                Tournament t(n_);
                for (int i = 0; i < n_; ++i)
                        for (int j = i + 1; j < n_; ++j)
                                arc(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? t.orient(i, j) : t.orient(j, i);
                return t;
        }

        /// Subtournament on the listed vertices, in the listed order.
        Tournament induced(std::span<const int> vertices) const
        {
                int m = static_cast<int>(vertices.size());
                Tournament t(m);
                for (int i = 0; i < m; ++i)
                        for (int j = i + 1; j < m; ++j)
                                arc(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]) ? t.orient(i, j) : t.orient(j, i);
                return t;
        }

        /// Adds vertex n whose out-neighbours are the set bits of `out_mask`.
        Tournament extended(std::uint64_t out_mask) const
        {
                Tournament t(n_ + 1);
                for (int i = 0; i < n_; ++i)
                        for (int j = i + 1; j < n_; ++j)
                                if (!arc(i, j))
                                        t.orient(j, i);
                for (int v = 0; v < n_; ++v)
                        if ((out_mask >> v) & 1U)
                                t.orient(n_, v);
                return t;
        }

        /// Out-neighbourhood of v as a bit mask; requires n <= 64.
        std::uint64_t row_mask(int v) const { return rows_[static_cast<std::size_t>(v * words_)]; }

        friend bool operator==(const Tournament &a, const Tournament &b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
        void set_bit(int i, int j) { rows_[static_cast<std::size_t>(i * words_ + j / 64)] |= (std::uint64_t{1} << (j % 64)); }
        void clear_bit(int i, int j) { rows_[static_cast<std::size_t>(i * words_ + j / 64)] &= ~(std::uint64_t{1} << (j % 64)); }

        int n_ = 0;
        int words_ = 0;
        std::vector<std::uint64_t> rows_;
};

inline Tournament cyclic_triangle() { return Tournament::from_arcs(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}}); }

inline bool is_regular(const Tournament &t)
{
        if (t.order() % 2 == 0)
                return false;
        for (int v = 0; v < t.order(); ++v)
                if (2 * t.out_degree(v) != t.order() - 1)
                        return false;
        return true;
}

namespace detail {

using CanonCode = unsigned __int128;

inline void require_canonical_order(const Tournament &t)
{
        if (t.order() < 1 || t.order() > max_canonical_order)
                throw std::out_of_range("canonical forms need 1 <= n <= 16, got " + std::to_string(t.order()));
}

/// Vertex groups of equal out-degree, ordered by decreasing out-degree.
inline std::vector<std::vector<int>> score_classes(const Tournament &t)
{
        std::map<int, std::vector<int>, std::greater<>> by_score;
        for (int v = 0; v < t.order(); ++v)
                by_score[t.out_degree(v)].push_back(v);
        std::vector<std::vector<int>> groups;
        for (auto &[s, g] : by_score)
                groups.push_back(g);
        return groups;
}

/// Calls f(perm) for every ordering that lists vertices by decreasing out-degree.
template <typename F> void for_each_score_ordering(const Tournament &t, F &&f)
{
        auto groups = score_classes(t);
        for (auto &g : groups)
                std::sort(g.begin(), g.end());
        std::vector<int> perm(static_cast<std::size_t>(t.order()));
        for (;;) {
                std::size_t k = 0;
                for (const auto &g : groups)
                        for (int v : g)
                                perm[k++] = v;
                f(std::span<const int>(perm));
                // Odometer over the groups' permutations.
                std::size_t gi = groups.size();
                for (;;) {
                        if (gi == 0)
                                return;
                        --gi;
                        if (std::next_permutation(groups[gi].begin(), groups[gi].end()))
                                break;
                }
        }
}

inline CanonCode code_under(const Tournament &t, std::span<const int> perm)
{
        CanonCode c = 0;
        const int n = t.order();
        for (int i = 0; i < n; ++i) {
                std::uint64_t row = t.row_mask(perm[static_cast<std::size_t>(i)]);
                for (int j = i + 1; j < n; ++j)
                        c = (c << 1) | ((row >> perm[static_cast<std::size_t>(j)]) & 1U);
        }
        return c;
}

inline std::string code_bits(CanonCode c, int n)
{
        std::size_t len = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
        std::string bits(len, '0');
        for (std::size_t k = 0; k < len; ++k)
                bits[len - 1 - k] = (c >> k) & 1U ? '1' : '0';
        return "t" + std::to_string(n) + ":" + bits;
}

} // namespace detail

/// Canonical encoding: the lexicographically largest arc string among the relabelings
/// that list vertices by non-increasing out-degree. Equal iff isomorphic.
inline std::string canonical_form(const Tournament &t)
{
        detail::require_canonical_order(t);
        detail::CanonCode best = 0;
        bool first = true;
        detail::for_each_score_ordering(t, [&](std::span<const int> perm) {
                auto c = detail::code_under(t, perm);
                if (first || c > best) {
                        best = c;
                        first = false;
                }
        });
        return detail::code_bits(best, t.order());
}

inline Tournament canonical(const Tournament &t) { return Tournament::decode(canonical_form(t)); }

inline bool isomorphic(const Tournament &a, const Tournament &b)
{
        return a.order() == b.order() && a.score_sequence() == b.score_sequence() && canonical_form(a) == canonical_form(b);
}

/// |Aut(T)|, counting arc-preserving permutations (these always preserve out-degrees).
inline long automorphism_count(const Tournament &t)
{
        detail::require_canonical_order(t);
        const auto self = detail::code_under(t, [&] {
                std::vector<int> id(static_cast<std::size_t>(t.order()));
                std::iota(id.begin(), id.end(), 0);
                return id;
        }());
        long count = 0;
        detail::for_each_score_ordering(t, [&](std::span<const int> perm) {
                if (detail::code_under(t, perm) == self)
                        ++count;
        });
        return count;
}

namespace detail {

inline std::vector<Tournament> build_classes(int n, const std::vector<Tournament> &smaller)
{
        if (n == 1)
                return {Tournament(1)};
        std::set<std::string, std::greater<>> seen;
        for (const auto &t : smaller)
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask)
                        seen.insert(canonical_form(t.extended(mask)));
        std::vector<Tournament> out;
        for (const auto &s : seen)
                out.push_back(Tournament::decode(s));
        return out;
}

} // namespace detail

/// One canonical representative per isomorphism class on n vertices, sorted by
/// decreasing canonical encoding (so TT_n comes first).
inline const std::vector<Tournament> &enumerate(int n)
{
        if (n < 1 || n > max_enumeration_order)
                throw std::out_of_range("enumerate needs 1 <= n <= 7, got " + std::to_string(n));
        static std::mutex mu;
        static std::vector<std::vector<Tournament>> cache;
        std::lock_guard lock(mu);
        while (static_cast<int>(cache.size()) < n) {
                int next = static_cast<int>(cache.size()) + 1;
                cache.push_back(detail::build_classes(next, cache.empty() ? std::vector<Tournament>{} : cache.back()));
        }
        return cache[static_cast<std::size_t>(n - 1)];
}

/// Position of T's class within enumerate(v(T)).
inline std::size_t class_index(const Tournament &t)
{
        const auto &classes = enumerate(t.order());
        auto key = canonical_form(t);
        for (std::size_t i = 0; i < classes.size(); ++i)
                if (classes[i].encode() == key)
                        return i;
        throw std::logic_error("class not found for " + t.encode());
}

} // namespace qrt
