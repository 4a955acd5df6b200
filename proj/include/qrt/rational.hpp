#pragma once

// Exact rational numbers backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qrt {

class Rational {
public:
        Rational() = default;
        Rational(int v) : q_(v) {}
        Rational(long v) : q_(v) {}
        Rational(long long v) : q_(std::to_string(v)) {}
        Rational(unsigned v) : q_(v) {}
        Rational(unsigned long v) : q_(v) {}
        Rational(unsigned long long v) : q_(std::to_string(v)) {}

        Rational(long long num, long long den)
        {
                if (den == 0)
                        throw std::domain_error("rational with zero denominator");
                q_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
                q_.canonicalize();
        }

        explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

        /// Parses "p", "p/q", "-p/q". Whitespace is not accepted.
        static Rational parse(std::string_view text)
        {
                auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
                if (text.empty())
                        throw bad();
                auto slash = text.find('/');
                auto valid_int = [](std::string_view s, bool allow_sign) {
                        if (s.empty())
                                return false;
                        std::size_t i = 0;
                        if (allow_sign && (s[0] == '-' || s[0] == '+'))
                                i = 1;
                        if (i == s.size())
                                return false;
                        for (; i < s.size(); ++i)
                                if (s[i] < '0' || s[i] > '9')
                                        return false;
                        return true;
                };
                std::string_view num = text.substr(0, slash);
                std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
                if (!valid_int(num, true) || !valid_int(den, false))
                        throw bad();
                std::string n(num);
                if (!n.empty() && n[0] == '+')
                        n.erase(0, 1);
                mpz_class zn(n), zd{std::string(den)};
                if (zd == 0)
                        throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
                return Rational(mpq_class(zn, zd));
        }

        const mpq_class &raw() const { return q_; }

        std::string numerator() const { return q_.get_num().get_str(); }
        std::string denominator() const { return q_.get_den().get_str(); }
        bool is_integer() const { return q_.get_den() == 1; }
        bool is_zero() const { return sgn(q_) == 0; }
        int sign() const { return sgn(q_); }
        double to_double() const { return q_.get_d(); }

        /// Canonical "p/q" form, or "p" when q = 1.
        std::string str() const
        {
                if (is_integer())
                        return q_.get_num().get_str();
                return q_.get_num().get_str() + "/" + q_.get_den().get_str();
        }

        /// Fixed-point decimal rendering truncated toward zero after `digits` places.
        std::string decimal(int digits) const
        {
                mpz_class scale;
                mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
                mpz_class scaled = q_.get_num() * scale;
                mpz_class whole;
                mpz_tdiv_q(whole.get_mpz_t(), scaled.get_mpz_t(), q_.get_den().get_mpz_t());
                bool negative = sgn(whole) < 0 || (sgn(whole) == 0 && sign() < 0);
                mpz_class mag = abs(whole);
                std::string s = mag.get_str();
                if (static_cast<int>(s.size()) <= digits)
                        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
                if (digits > 0)
                        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
                return negative ? "-" + s : s;
        }

        Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
        Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
        Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
        Rational &operator/=(const Rational &o)
        {
                if (o.is_zero())
                        throw std::domain_error("rational division by zero");
                q_ /= o.q_;
                return *this;
        }

        friend Rational operator+(Rational a, const Rational &b) { return a += b; }
        friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
        friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
        friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
        friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

        friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
        friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
        {
                int c = cmp(a.q_, b.q_);
                return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
        }

        friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
        mpq_class q_{0};
};

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

/// (1/2)^e
inline Rational half_pow(unsigned e)
{
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
        return Rational(mpq_class(mpz_class(1), den));
}

inline Rational pow(const Rational &base, unsigned e)
{
        Rational r(1);
        for (unsigned i = 0; i < e; ++i)
                r *= base;
        return r;
}

} // namespace qrt

template <> struct std::hash<qrt::Rational> {
        std::size_t operator()(const qrt::Rational &r) const { return std::hash<std::string>{}(r.str()); }
};
