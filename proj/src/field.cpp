#include "fano/field.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace fano {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

std::size_t hash_value(const mpz_class& z) {
    const mpz_srcptr raw = z.get_mpz_t();
    std::size_t h = 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(mpz_sgn(raw) + 1);
    const std::size_t limbs = mpz_size(raw);
    for (std::size_t i = 0; i < limbs; ++i)
        h = (h ^ static_cast<std::size_t>(mpz_getlimbn(raw, i))) * 1099511628211ULL;
    return h;
}

std::size_t hash_value(const Rational& r) {
    std::size_t h = hash_value(mpz_class(r.get_num()));
    h = (h ^ hash_value(mpz_class(r.get_den()))) * 1099511628211ULL;
    return h;
}

int compare(const Rational& x, const Rational& y) {
    return cmp(x, y);
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    *this = *this * o;
    return *this;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
    if (x.is_rational()) {
        if (sgn(x.a()) == 0) return FieldElement();
        if (y.is_rational()) return FieldElement(x.a() * y.a());
        return FieldElement(x.a() * y.a(), x.a() * y.b());
    }
    if (y.is_rational()) {
        if (sgn(y.a()) == 0) return FieldElement();
        return FieldElement(x.a() * y.a(), x.b() * y.a());
    }
    Rational bb = x.b() * y.b();
    return FieldElement(x.a() * y.a() - bb, x.a() * y.b() + x.b() * y.a() - bb);
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw DomainError("inversion of zero in Q(w)");
    Rational n = norm(*this);
    return FieldElement((a_ - b_) / n, -b_ / n);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    return *this *= o.inverse();
}

FieldElement conj(const FieldElement& x) {
    return FieldElement(x.a() - x.b(), -x.b());
}

Rational norm(const FieldElement& x) {
    return x.a() * x.a() - x.a() * x.b() + x.b() * x.b();
}

std::string to_string(const FieldElement& x) {
    if (x.is_rational())
        return to_string(x.a());
    std::string wpart;
    Rational babs = abs(x.b());
    if (babs != 1)
        wpart = to_string(babs);
    wpart += 'w';
    if (sgn(x.a()) == 0)
        return (sgn(x.b()) < 0 ? "-" : "") + wpart;
    return to_string(x.a()) + (sgn(x.b()) < 0 ? "-" : "+") + wpart;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << to_string(x);
}

namespace {

struct CoeffParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "bad coefficient \"" << text << "\" at position " << pos << ": " << what;
        throw ParseError(os.str());
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    mpz_class digits() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    Rational rational(bool sign_allowed) {
        bool neg = false;
        if (sign_allowed && peek() == '-') {
            neg = true;
            ++pos;
        }
        mpz_class num = digits();
        mpz_class den = 1;
        if (peek() == '/') {
            ++pos;
            den = digits();
            if (sgn(den) == 0) fail("zero denominator");
        }
        if (neg) num = -num;
        return make_rational(num, den);
    }

    // rational? "w" | rational, with the trailing 'w' deciding which part it is.
    // Returns (value, had_w).
    std::pair<Rational, bool> part() {
        if (peek() == 'w' || (peek() == '-' && pos + 1 < text.size() && text[pos + 1] == 'w')) {
            bool neg = peek() == '-';
            if (neg) ++pos;
            ++pos;  // 'w'
            return {Rational(neg ? -1 : 1), true};
        }
        Rational r = rational(true);
        if (peek() == 'w') {
            ++pos;
            return {r, true};
        }
        return {r, false};
    }
};

}  // namespace

FieldElement parse_coeff(std::string_view text) {
    // Tolerate surrounding whitespace; the grammar itself has none.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    CoeffParser p{text};
    if (p.done()) p.fail("empty");

    auto [first, first_w] = p.part();
    Rational a(0), b(0);
    (first_w ? b : a) = first;

    if (!p.done() && !first_w && (p.peek() == '+' || p.peek() == '-')) {
        bool minus = p.peek() == '-';
        ++p.pos;
        auto [second, second_w] = p.part();
        if (!second_w) p.fail("second part must be a w-term");
        b = minus ? Rational(-second) : second;
    }
    if (!p.done()) p.fail("trailing characters");
    return FieldElement(std::move(a), std::move(b));
}

std::size_t hash_value(const FieldElement& x) {
    std::size_t h = hash_value(x.a());
    h = (h ^ hash_value(x.b())) * 1099511628211ULL;
    return h;
}

int compare(const FieldElement& x, const FieldElement& y) {
    if (int c = compare(x.a(), y.a()); c != 0) return c;
    return compare(x.b(), y.b());
}

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p), omega_(0) {
    if (!is_prime(p) || p % 3 != 1)
        throw DomainError("prime " + std::to_string(p) +
                          " not admissible: need a prime p = 1 (mod 3)");
    for (std::uint32_t r = 2; r < p; ++r) {
        if (mul(mul(r, r), r) == 1) {
            omega_ = r;
            break;
        }
    }
    if (omega_ == 0)
        throw InvariantViolation("no cube root of unity mod " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t x) const {
    if (x % p_ == 0)
        throw DomainError("inversion of zero mod " + std::to_string(p_));
    return pow(x % p_, p_ - 2);
}

std::uint32_t reduce_mod(const Rational& r, const PrimeField& f) {
    std::uint32_t den = static_cast<std::uint32_t>(
        mpz_fdiv_ui(r.get_den().get_mpz_t(), f.p()));
    if (den == 0)
        throw DomainError("denominator of " + to_string(r) +
                          " is not invertible mod " + std::to_string(f.p()));
    std::uint32_t num = static_cast<std::uint32_t>(
        mpz_fdiv_ui(r.get_num().get_mpz_t(), f.p()));
    return f.mul(num, f.inv(den));
}

std::uint32_t reduce_mod(const FieldElement& x, const PrimeField& f) {
    return f.add(reduce_mod(x.a(), f), f.mul(reduce_mod(x.b(), f), f.omega()));
}

}  // namespace fano
