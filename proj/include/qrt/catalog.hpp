#pragma once

// Names H0..H19 for the tournaments on at most five vertices, fixed by structural rules
// and by the reference product-coefficient tables, plus the comparison of those tables
// against recomputed coefficients.

#include "qrt/appendix_data.hpp"
#include "qrt/flags.hpp"
#include "qrt/rational.hpp"
#include "qrt/tournament.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrt {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Coefficient tables for one 5-vertex class: B_2^1, B_3^2, B_3^3 in that order.
using TableTriple = std::array<RationalMatrix, 3>;

/// Reference tables keyed by catalog name (H8..H19).
struct ReferenceTables {
        std::map<std::string, TableTriple> tables;
};

inline const ReferenceTables &builtin_appendix()
{
        static const ReferenceTables data = [] {
                ReferenceTables p;
                auto conv = [](const auto &m) {
                        RationalMatrix out;
                        for (const auto &row : m) {
                                std::vector<Rational> r;
                                for (int x : row)
                                        r.push_back(Rational(x, appendix::denominator));
                                out.push_back(std::move(r));
                        }
                        return out;
                };
                for (const auto &t : appendix::tables)
                        p.tables[t.name] = {conv(t.b2_1), conv(t.b3_2), conv(t.b3_3)};
                return p;
        }();
        return data;
}

/// Coefficient tables of the three standard families at m = 5, computed once.
inline const std::array<CoefficientTable, 3> &family_tables()
{
        static const std::array<CoefficientTable, 3> tabs = {coefficient_table(flag_family(1), 5), coefficient_table(flag_family(2), 5),
                                                             coefficient_table(flag_family(3), 5)};
        return tabs;
}

inline TableTriple computed_tables(const Tournament &j)
{
        const auto &tabs = family_tables();
        return {tabs[0].matrix_for(j), tabs[1].matrix_for(j), tabs[2].matrix_for(j)};
}

enum class CatalogFailure { NoAssignment, Ambiguous };

class CatalogError : public std::runtime_error {
public:
        CatalogError(CatalogFailure kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
        CatalogFailure kind() const { return kind_; }

private:
        CatalogFailure kind_;
};

inline constexpr int catalog_size = 20;

struct Catalog {
        /// entries[i] is the canonical representative named H<i>.
        std::vector<Tournament> entries;
        bool unique = false;

        const Tournament &operator[](int i) const { return entries.at(static_cast<std::size_t>(i)); }

        std::optional<int> index_of(const Tournament &t) const
        {
                if (t.order() > 5)
                        return std::nullopt;
                const std::string key = canonical_form(t);
                for (std::size_t i = 0; i < entries.size(); ++i)
                        if (entries[i].encode() == key)
                                return static_cast<int>(i);
                return std::nullopt;
        }

        /// "TT3/H2", "C3/H3", "H9", ...
        std::string label(const Tournament &t) const
        {
                std::string alias;
                const std::string key = canonical_form(t);
                if (key == canonical_form(Tournament::transitive(t.order())))
                        alias = "TT" + std::to_string(t.order());
                else if (t.order() == 3)
                        alias = "C3";
                else if (t.order() == 4 && index_of(t) == 6)
                        alias = "C4";
                auto idx = index_of(t);
                if (!idx)
                        return alias;
                std::string h = "H" + std::to_string(*idx);
                return alias.empty() ? h : alias + "/" + h;
        }
};

namespace detail {

inline bool has_c3_plus(const Tournament &t, bool sink)
{
        if (t.order() != 4)
                return false;
        for (int v = 0; v < 4; ++v)
                if (t.out_degree(v) == (sink ? 0 : 3)) {
                        std::vector<int> rest;
                        for (int u = 0; u < 4; ++u)
                                if (u != v)
                                        rest.push_back(u);
                        if (is_regular(t.induced(rest)))
                                return true;
                }
        return false;
}

/// A sink u1, a vertex u2 whose only out-neighbour is u1, and a cyclic triangle on the rest.
inline bool is_sink_path_triangle(const Tournament &t)
{
        if (t.order() != 5)
                return false;
        for (int u1 = 0; u1 < 5; ++u1) {
                if (t.out_degree(u1) != 0)
                        continue;
                for (int u2 = 0; u2 < 5; ++u2) {
                        if (u2 == u1 || t.out_degree(u2) != 1 || !t.arc(u2, u1))
                                continue;
                        std::vector<int> rest;
                        for (int v = 0; v < 5; ++v)
                                if (v != u1 && v != u2)
                                        rest.push_back(v);
                        if (is_regular(t.induced(rest)))
                                return true;
                }
        }
        return false;
}

inline bool same_tables(const TableTriple &a, const TableTriple &b) { return a == b; }

} // namespace detail

/// Resolves H0..H19 against the enumeration. Throws CatalogError unless exactly one
/// bijection satisfies every constraint.
inline Catalog resolve_catalog(const ReferenceTables &reference = builtin_appendix())
{
        using Pred = std::function<bool(const Tournament &)>;
        std::vector<int> orders(catalog_size, 5);
        orders[0] = 1;
        orders[1] = 2;
        orders[2] = orders[3] = 3;
        for (int i = 4; i <= 7; ++i)
                orders[static_cast<std::size_t>(i)] = 4;

        auto transitive = [](const Tournament &t) { return isomorphic(t, Tournament::transitive(t.order())); };
        std::vector<Pred> unary(catalog_size, [](const Tournament &) { return true; });
        unary[1] = transitive;
        unary[2] = transitive;
        unary[3] = [](const Tournament &t) { return is_regular(t); };
        unary[4] = transitive;
        unary[5] = [](const Tournament &t) { return detail::has_c3_plus(t, true); };
        unary[6] = [](const Tournament &t) { return t.score_sequence() == std::vector<int>{1, 1, 2, 2}; };
        unary[7] = [](const Tournament &t) { return detail::has_c3_plus(t, false); };
        unary[8] = transitive;
        unary[9] = detail::is_sink_path_triangle;
        unary[19] = [](const Tournament &t) { return is_regular(t); };
        for (int i = 8; i < catalog_size; ++i) {
                const std::string name = "H" + std::to_string(i);
                auto it = reference.tables.find(name);
                Pred base = unary[static_cast<std::size_t>(i)];
                if (it == reference.tables.end())
                        throw CatalogError(CatalogFailure::NoAssignment, "no reference tables for " + name);
                TableTriple expected = it->second;
                unary[static_cast<std::size_t>(i)] = [base, expected](const Tournament &t) {
                        return base(t) && detail::same_tables(computed_tables(t), expected);
                };
        }

        std::vector<std::vector<Tournament>> candidates(catalog_size);
        for (int i = 0; i < catalog_size; ++i)
                for (const auto &t : enumerate(orders[static_cast<std::size_t>(i)]))
                        if (unary[static_cast<std::size_t>(i)](t))
                                candidates[static_cast<std::size_t>(i)].push_back(t);

        std::vector<Tournament> current(catalog_size);
        std::vector<std::string> used;
        std::vector<std::vector<Tournament>> solutions;
        auto rec = [&](auto &&self, int i) -> void {
                if (solutions.size() > 1)
                        return;
                if (i == catalog_size) {
                        if (isomorphic(current[16], current[9].reversed()) && isomorphic(current[15], current[10].reversed()))
                                solutions.push_back(current);
                        return;
                }
                for (const auto &c : candidates[static_cast<std::size_t>(i)]) {
                        std::string key = c.encode();
                        if (std::find(used.begin(), used.end(), key) != used.end())
                                continue;
                        used.push_back(key);
                        current[static_cast<std::size_t>(i)] = c;
                        self(self, i + 1);
                        used.pop_back();
                }
        };
        rec(rec, 0);

        if (solutions.empty())
                throw CatalogError(CatalogFailure::NoAssignment, "no naming of the 20 small tournaments satisfies the constraints");
        if (solutions.size() > 1)
                throw CatalogError(CatalogFailure::Ambiguous, "more than one naming of the 20 small tournaments satisfies the constraints");
        Catalog cat;
        cat.entries = std::move(solutions.front());
        cat.unique = true;
        return cat;
}

inline const Catalog &catalog()
{
        static const Catalog cat = resolve_catalog();
        return cat;
}

/// Accepts `t<n>:<bits>`, H0..H19, TT1..TT16, C3, C4.
inline Tournament parse_tournament(const std::string &text)
{
        if (!text.empty() && text[0] == 't')
                return Tournament::decode(text);
        auto number_after = [&](std::size_t pos) -> std::optional<int> {
                if (pos >= text.size() || text.size() - pos > 3)
                        return std::nullopt;
                int v = 0;
                for (std::size_t i = pos; i < text.size(); ++i) {
                        if (!std::isdigit(static_cast<unsigned char>(text[i])))
                                return std::nullopt;
                        v = v * 10 + (text[i] - '0');
                }
                return v;
        };
        if (text == "C3")
                return catalog()[3];
        if (text == "C4")
                return catalog()[6];
        if (text.rfind("TT", 0) == 0)
                if (auto k = number_after(2); k && *k >= 1 && *k <= max_canonical_order)
                        return Tournament::transitive(*k);
        if (text.rfind("H", 0) == 0)
                if (auto k = number_after(1); k && *k < catalog_size)
                        return catalog()[*k];
        throw std::invalid_argument("unknown tournament '" + text + "'");
}

struct AppendixMismatch {
        std::string name;
        int family = 0; // 1, 2, 3
        std::size_t row = 0, col = 0;
        Rational got, expected;
};

struct AppendixReport {
        std::size_t matrices_compared = 0;
        std::vector<AppendixMismatch> mismatches;
        bool pass() const { return mismatches.empty() && matrices_compared == 36; }
};

/// Recomputes every table for H8..H19 and compares entry by entry.
inline AppendixReport check_appendix(const ReferenceTables &reference = builtin_appendix(), const Catalog &cat = catalog())
{
        AppendixReport rep;
        for (int i = 8; i < catalog_size; ++i) {
                const std::string name = "H" + std::to_string(i);
                auto it = reference.tables.find(name);
                if (it == reference.tables.end())
                        continue;
                TableTriple got = computed_tables(cat[i]);
                for (int q = 0; q < 3; ++q) {
                        const auto &g = got[static_cast<std::size_t>(q)];
                        const auto &e = it->second[static_cast<std::size_t>(q)];
                        ++rep.matrices_compared;
                        if (e.size() != g.size()) {
                                rep.mismatches.push_back({name, q + 1, 0, 0, Rational(0), Rational(0)});
                                continue;
                        }
                        for (std::size_t a = 0; a < g.size(); ++a)
                                for (std::size_t b = 0; b < g.size(); ++b)
                                        if (e[a].size() != g.size() || g[a][b] != e[a][b])
                                                rep.mismatches.push_back({name, q + 1, a + 1, b + 1, g[a][b],
                                                                          b < e[a].size() ? e[a][b] : Rational(0)});
                }
        }
        return rep;
}

} // namespace qrt
