#pragma once

// Univariate polynomials in z over the rationals.

#include "qrt/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace qrt {

class Polynomial {
public:
        Polynomial() = default;
        Polynomial(int c) : Polynomial(Rational(c)) {}
        Polynomial(const Rational &c)
        {
                if (!c.is_zero())
                        coeffs_.push_back(c);
        }
        /// Coefficients indexed by degree.
        explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
        Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

        static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

        /// Degree of the zero polynomial is -1.
        int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
        bool is_zero() const { return coeffs_.empty(); }

        Rational coefficient(int d) const
        {
                if (d < 0 || d > degree())
                        return Rational(0);
                return coeffs_[static_cast<std::size_t>(d)];
        }
        const std::vector<Rational> &coefficients() const { return coeffs_; }

        Rational eval(const Rational &z) const
        {
                Rational acc(0);
                for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
                        acc *= z;
                        acc += *it;
                }
                return acc;
        }

        Polynomial &operator+=(const Polynomial &o)
        {
                if (o.coeffs_.size() > coeffs_.size())
                        coeffs_.resize(o.coeffs_.size());
                for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
                        coeffs_[i] += o.coeffs_[i];
                trim();
                return *this;
        }
        Polynomial &operator-=(const Polynomial &o)
        {
                if (o.coeffs_.size() > coeffs_.size())
                        coeffs_.resize(o.coeffs_.size());
                for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
                        coeffs_[i] -= o.coeffs_[i];
                trim();
                return *this;
        }
        Polynomial &operator*=(const Polynomial &o)
        {
                *this = *this * o;
                return *this;
        }

        friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
        friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
        friend Polynomial operator-(const Polynomial &a)
        {
                Polynomial r = a;
                for (auto &c : r.coeffs_)
                        c = -c;
                return r;
        }
        friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
        {
                if (a.is_zero() || b.is_zero())
                        return {};
                std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
                for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
                        if (a.coeffs_[i].is_zero())
                                continue;
                        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
                return Polynomial(std::move(out));
        }

        friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.coeffs_ == b.coeffs_; }

        /// Human-readable form, e.g. "1/1024 - 1/96*z^4 + 7/108*z^6".
        std::string str(const std::string &var = "z") const
        {
                if (is_zero())
                        return "0";
                std::string out;
                for (std::size_t d = 0; d < coeffs_.size(); ++d) {
                        const Rational &c = coeffs_[d];
                        if (c.is_zero())
                                continue;
                        Rational mag = abs(c);
                        if (out.empty())
                                out += c.sign() < 0 ? "-" : "";
                        else
                                out += c.sign() < 0 ? " - " : " + ";
                        if (d == 0)
                                out += mag.str();
                        else {
                                if (mag != Rational(1))
                                        out += mag.str() + "*";
                                out += var;
                                if (d > 1)
                                        out += "^" + std::to_string(d);
                        }
                }
                return out;
        }

        friend std::ostream &operator<<(std::ostream &os, const Polynomial &p) { return os << p.str(); }

private:
        void trim()
        {
                while (!coeffs_.empty() && coeffs_.back().is_zero())
                        coeffs_.pop_back();
        }

        std::vector<Rational> coeffs_;
};

} // namespace qrt
