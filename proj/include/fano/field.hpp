#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "fano/errors.hpp"

namespace fano {

// Exact rational scalar.  mpq_class keeps gcd(|num|, den) = 1 and den >= 1
// for every value produced by arithmetic; raw num/den pairs must go through
// make_rational so the canonical form is restored.
using Rational = mpq_class;

Rational make_rational(const mpz_class& num, const mpz_class& den);
std::string to_string(const Rational& r);
std::size_t hash_value(const mpz_class& z);
std::size_t hash_value(const Rational& r);
int compare(const Rational& x, const Rational& y);

/// Element a + b*w of the field Q(w), where w is a primitive cube root of
/// unity: w^2 + w + 1 = 0.  The (a, b) pair is the unique representation in
/// the basis {1, w}, so equality and hashing are structural.
class FieldElement {
public:
    FieldElement() : a_(0), b_(0) {}
    FieldElement(int n) : a_(n), b_(0) {}
    FieldElement(long n) : a_(n), b_(0) {}
    FieldElement(Rational a) : a_(std::move(a)), b_(0) {}
    FieldElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static FieldElement omega() { return FieldElement(Rational(0), Rational(1)); }
    static FieldElement omega_sq() { return FieldElement(Rational(-1), Rational(-1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    FieldElement& operator+=(const FieldElement& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    FieldElement operator-() const { return FieldElement(-a_, -b_); }

    // Multiplicative inverse: conj(x) / norm(x).  Throws DomainError on zero.
    FieldElement inverse() const;

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) {
        return !(x == y);
    }

private:
    Rational a_, b_;
};

inline FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
inline FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
FieldElement operator*(const FieldElement& x, const FieldElement& y);
inline FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

/// Complex conjugation, i.e. the field automorphism sending w to w^2:
/// conj(a + b*w) = (a - b) - b*w.
FieldElement conj(const FieldElement& x);

/// Field norm x * conj(x) = a^2 - a*b + b^2.  Multiplicative, >= 0,
/// and zero exactly at zero.
Rational norm(const FieldElement& x);

/// Canonical text form of a coefficient:
///   coeff    := term ( ("+" | "-") wterm )? | wterm
///   term     := rational
///   wterm    := rational? "w"
///   rational := "-"? digits ("/" digits)?
/// Examples: "1", "-3/2", "w", "1/2+1/3w", "-w".
std::string to_string(const FieldElement& x);

/// Parses the grammar above.  Throws ParseError with a position diagnostic.
FieldElement parse_coeff(std::string_view text);

std::size_t hash_value(const FieldElement& x);

/// Structural total order on (a, b) pairs; used for canonical sorting, it has
/// no numeric meaning.
int compare(const FieldElement& x, const FieldElement& y);

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// The prime field F_p for p ≡ 1 (mod 3), with the image of w fixed once per
/// prime as the smallest r with r^3 = 1, r != 1.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t omega() const { return omega_; }

    std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
        std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const {
        return x >= y ? x - y : x + p_ - y;
    }
    std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(x) * y) % p_);
    }
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t x) const;  // throws DomainError on zero

private:
    std::uint32_t p_;
    std::uint32_t omega_;
};

/// Reduction Q(w) -> F_p sending w to the chosen cube root of unity.
/// Throws DomainError when p divides the denominator.
std::uint32_t reduce_mod(const Rational& r, const PrimeField& f);
std::uint32_t reduce_mod(const FieldElement& x, const PrimeField& f);

}  // namespace fano
