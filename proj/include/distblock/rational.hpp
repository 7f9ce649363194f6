#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "distblock/errors.hpp"

namespace distblock {

/// Arbitrary-precision integer. All composition invariants (alpha, beta,
/// gamma) are integers and products of (n_i - 2) overflow 64 bits quickly.
using Int = mpz_class;

/// Exact rational scalar, always in lowest terms with positive denominator.
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
/// and GMP keeps canonical operands canonical under arithmetic.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, scalars mix freely
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Accepts "p/q", plain integers, and exact decimal strings ("2.5" -> 5/2).
    static Rational parse(std::string_view text);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    /// -1, 0, or +1.
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

    Rational reciprocal() const;
    Rational abs() const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

  private:
    mpq_class q_;
};

inline Rational operator*(const Int& a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, const Int& b) { return a * Rational(b); }

}  // namespace distblock
