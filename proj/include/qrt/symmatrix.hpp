#pragma once

// Exact symmetric matrices: PSD decision with certificates, null spaces, ranks.

#include "qrt/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrt {

using RationalVector = std::vector<Rational>;

class SymMatrix {
public:
        SymMatrix() = default;
        explicit SymMatrix(std::size_t order) : n_(order), a_(order * order) {}

        /// Builds from full rows; throws if the rows are not square or not symmetric.
        static SymMatrix from_rows(const std::vector<RationalVector> &rows)
        {
                SymMatrix m(rows.size());
                for (std::size_t i = 0; i < rows.size(); ++i) {
                        if (rows[i].size() != rows.size())
                                throw std::invalid_argument("matrix row " + std::to_string(i + 1) + " has wrong length");
                        for (std::size_t j = 0; j < rows.size(); ++j)
                                m.a_[i * m.n_ + j] = rows[i][j];
                }
                for (std::size_t i = 0; i < m.n_; ++i)
                        for (std::size_t j = i + 1; j < m.n_; ++j)
                                if (m(i, j) != m(j, i))
                                        throw std::invalid_argument("matrix not symmetric at (" + std::to_string(i + 1) +
                                                                    "," + std::to_string(j + 1) + ")");
                return m;
        }

        /// scale * integer matrix, the way certificate matrices are written.
        static SymMatrix scaled(const Rational &scale, const std::vector<std::vector<long>> &rows)
        {
                std::vector<RationalVector> r;
                for (const auto &row : rows) {
                        RationalVector v;
                        for (long x : row)
                                v.push_back(scale * Rational(x));
                        r.push_back(std::move(v));
                }
                return from_rows(r);
        }

        static SymMatrix identity(std::size_t order)
        {
                SymMatrix m(order);
                for (std::size_t i = 0; i < order; ++i)
                        m.a_[i * order + i] = Rational(1);
                return m;
        }

        std::size_t order() const { return n_; }
        const Rational &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

        /// Sets (i,j) and (j,i).
        void set(std::size_t i, std::size_t j, const Rational &v)
        {
                a_[i * n_ + j] = v;
                a_[j * n_ + i] = v;
        }

        RationalVector row(std::size_t i) const { return RationalVector(a_.begin() + static_cast<long>(i * n_), a_.begin() + static_cast<long>((i + 1) * n_)); }

        RationalVector apply(std::span<const Rational> v) const
        {
                RationalVector out(n_);
                for (std::size_t i = 0; i < n_; ++i)
                        for (std::size_t j = 0; j < n_; ++j)
                                if (!a_[i * n_ + j].is_zero() && !v[j].is_zero())
                                        out[i] += a_[i * n_ + j] * v[j];
                return out;
        }

        Rational quadratic_form(std::span<const Rational> v) const
        {
                RationalVector mv = apply(v);
                Rational s(0);
                for (std::size_t i = 0; i < n_; ++i)
                        s += v[i] * mv[i];
                return s;
        }

        friend bool operator==(const SymMatrix &, const SymMatrix &) = default;

private:
        std::size_t n_ = 0;
        std::vector<Rational> a_;
};

struct PsdResult {
        bool psd = false;
        /// On failure: v with v^T M v < 0.
        RationalVector witness;
        /// On success: (index, pivot) in elimination order.
        std::vector<std::pair<std::size_t, Rational>> pivots;
};

/// Exact PSD decision by symmetric elimination on strictly positive diagonal pivots.
/// The columns of `basis` track original-coordinate vectors x with x_i^T M x_j equal to
/// the current reduced entry (i,j), so a failing reduced entry gives a witness directly.
inline PsdResult psd_check(const SymMatrix &m)
{
        const std::size_t n = m.order();
        std::vector<RationalVector> a(n, RationalVector(n));
        std::vector<RationalVector> basis(n, RationalVector(n));
        for (std::size_t i = 0; i < n; ++i) {
                basis[i][i] = Rational(1);
                for (std::size_t j = 0; j < n; ++j)
                        a[i][j] = m(i, j);
        }
        std::vector<bool> live(n, true);
        PsdResult result;

        for (;;) {
                for (std::size_t i = 0; i < n; ++i)
                        if (live[i] && a[i][i].sign() < 0) {
                                result.witness = basis[i];
                                return result;
                        }
                for (std::size_t i = 0; i < n; ++i) {
                        if (!live[i] || !a[i][i].is_zero())
                                continue;
                        for (std::size_t j = 0; j < n; ++j) {
                                if (!live[j] || j == i || a[i][j].is_zero())
                                        continue;
                                // (t e_i + e_j) gives 2 t a_ij + a_jj = -1.
                                Rational t = -(a[j][j] + Rational(1)) / (Rational(2) * a[i][j]);
                                RationalVector w(n);
                                for (std::size_t k = 0; k < n; ++k)
                                        w[k] = t * basis[i][k] + basis[j][k];
                                result.witness = std::move(w);
                                return result;
                        }
                }
                std::optional<std::size_t> pivot;
                for (std::size_t i = 0; i < n && !pivot; ++i)
                        if (live[i] && a[i][i].sign() > 0)
                                pivot = i;
                if (!pivot) {
                        // Every live diagonal is zero and so is every live off-diagonal entry.
                        result.psd = true;
                        return result;
                }
                const std::size_t p = *pivot;
                const Rational d = a[p][p];
                result.pivots.emplace_back(p, d);
                live[p] = false;
                for (std::size_t j = 0; j < n; ++j) {
                        if (!live[j] || a[p][j].is_zero())
                                continue;
                        Rational f = a[p][j] / d;
                        for (std::size_t k = 0; k < n; ++k) {
                                if (!basis[p][k].is_zero())
                                        basis[j][k] -= f * basis[p][k];
                                if (live[k] && !a[p][k].is_zero())
                                        a[j][k] -= f * a[p][k];
                        }
                }
                for (std::size_t j = 0; j < n; ++j)
                        if (live[j])
                                a[p][j] = a[j][p] = Rational(0);
        }
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(std::vector<RationalVector> &rows, std::size_t cols)
{
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
                std::size_t sel = r;
                while (sel < rows.size() && rows[sel][c].is_zero())
                        ++sel;
                if (sel == rows.size())
                        continue;
                std::swap(rows[r], rows[sel]);
                Rational inv = Rational(1) / rows[r][c];
                for (auto &x : rows[r])
                        x *= inv;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                        if (i == r || rows[i][c].is_zero())
                                continue;
                        Rational f = rows[i][c];
                        for (std::size_t k = c; k < cols; ++k)
                                rows[i][k] -= f * rows[r][k];
                }
                pivots.push_back(c);
                ++r;
        }
        return pivots;
}

inline std::size_t rank(std::vector<RationalVector> vectors)
{
        if (vectors.empty())
                return 0;
        std::size_t cols = vectors.front().size();
        return row_reduce(vectors, cols).size();
}

/// Exact null-space basis, one vector per free column; empty iff nonsingular.
inline std::vector<RationalVector> kernel_basis(const SymMatrix &m)
{
        const std::size_t n = m.order();
        std::vector<RationalVector> rows;
        for (std::size_t i = 0; i < n; ++i)
                rows.push_back(m.row(i));
        auto pivots = row_reduce(rows, n);
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivots)
                is_pivot[c] = true;
        std::vector<RationalVector> basis;
        for (std::size_t free = 0; free < n; ++free) {
                if (is_pivot[free])
                        continue;
                RationalVector v(n);
                v[free] = Rational(1);
                for (std::size_t r = 0; r < pivots.size(); ++r)
                        v[pivots[r]] = -rows[r][free];
                basis.push_back(std::move(v));
        }
        return basis;
}

/// True iff the two families span the same subspace.
inline bool same_span(const std::vector<RationalVector> &a, const std::vector<RationalVector> &b)
{
        std::vector<RationalVector> both = a;
        both.insert(both.end(), b.begin(), b.end());
        std::size_t ra = rank(a), rb = rank(b);
        return ra == rb && rank(both) == ra;
}

} // namespace qrt
