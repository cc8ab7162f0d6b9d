#ifndef TRUNCSYM_FIELD_HPP
#define TRUNCSYM_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace truncsym {

/* Deterministic trial division; the characteristics this library works
 * over are user-supplied and small. */
inline bool is_prime(unsigned long long m)
{
    if (m < 2)
        return false;
    if (m % 2 == 0)
        return m == 2;
    if (m % 3 == 0)
        return m == 3;
    for (unsigned long long f = 5; f <= m / f; f += 6) {
        if (m % f == 0 || m % (f + 2) == 0)
            return false;
    }
    return true;
}

/* Coefficient domain selector: 0 picks exact rationals, a prime p picks
 * the residue field mod p. */
struct FieldSpec {
    unsigned long long characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(unsigned long long c) : characteristic(c)
    {
        if (c != 0 && !is_prime(c))
            throw std::invalid_argument("FieldSpec: characteristic must be 0 or a prime, got " +
                                        std::to_string(c));
    }

    bool operator==(const FieldSpec&) const = default;
};

/* Exact rational, always kept in lowest terms. */
class Rational {
public:
    Rational() : v_(0) {}
    explicit Rational(long long i) : v_(static_cast<long>(i)) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rational from_unsigned(unsigned long long u)
    {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
        return Rational(mpq_class(z));
    }

    static Rational from_integer_value(const mpz_class& z) { return Rational(mpq_class(z)); }

    /* Accepts "a", "-a", or "a/b" in base 10. */
    static Rational parse(const std::string& text)
    {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("Rational::parse: bad literal '" + text + "'");
        if (sgn(q.get_den()) == 0)
            throw std::invalid_argument("Rational::parse: zero denominator in '" + text + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_one() const { return v_ == 1; }

    Rational inverse() const
    {
        if (is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

private:
    mpq_class v_;
};

/* Residue mod a prime p; every element carries its modulus so mixed-field
 * arithmetic is caught immediately. */
class Fp {
public:
    Fp(unsigned long long value, unsigned long long p) : p_(p)
    {
        if (p_ < 2)
            throw std::invalid_argument("Fp: modulus must be at least 2");
        v_ = value % p_;
    }

    unsigned long long value() const { return v_; }
    unsigned long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return false; }

    Fp inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("Fp: division by zero");
        // extended Euclid on (v, p)
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(p_), new_r = static_cast<long long>(v_);
        while (new_r != 0) {
            long long q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0)
            t += static_cast<long long>(p_);
        return Fp(static_cast<unsigned long long>(t), p_);
    }

    std::string str() const { return std::to_string(v_); }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    friend Fp operator+(const Fp& a, const Fp& b)
    {
        a.check(b);
        unsigned long long s = a.v_ + b.v_;
        if (s >= a.p_)
            s -= a.p_;
        return Fp(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b)
    {
        a.check(b);
        return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b)
    {
        a.check(b);
        unsigned __int128 t = static_cast<unsigned __int128>(a.v_) * b.v_;
        return Fp(static_cast<unsigned long long>(t % a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    void check(const Fp& o) const
    {
        if (p_ != o.p_)
            throw std::invalid_argument("Fp: mixed moduli " + std::to_string(p_) + " and " +
                                        std::to_string(o.p_));
    }

    unsigned long long v_;
    unsigned long long p_;
};

/* The two arithmetic suites.  Both expose the same construction surface
 * so everything above them is written once, generically. */

struct RationalField {
    using Elem = Rational;

    unsigned long long characteristic() const { return 0; }
    FieldSpec spec() const { return FieldSpec(0); }
    std::string name() const { return "Q"; }

    Elem zero() const { return Rational(); }
    Elem one() const { return Rational(1); }
    Elem from_integer(long long i) const { return Rational(i); }
    Elem from_count(unsigned long long c) const { return Rational::from_unsigned(c); }
    Elem invert(const Elem& e) const { return e.inverse(); }
    Elem parse(const std::string& text) const { return Rational::parse(text); }

    bool operator==(const RationalField&) const { return true; }
    bool operator!=(const RationalField&) const { return false; }
};

struct PrimeField {
    unsigned long long p = 2;

    explicit PrimeField(unsigned long long prime) : p(prime)
    {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: " + std::to_string(prime) + " is not prime");
        if (p > (1ull << 62))
            throw std::invalid_argument("PrimeField: modulus too large");
    }

    using Elem = Fp;

    unsigned long long characteristic() const { return p; }
    FieldSpec spec() const { return FieldSpec(p); }
    std::string name() const { return "F_" + std::to_string(p); }

    Elem zero() const { return Fp(0, p); }
    Elem one() const { return Fp(1, p); }
    Elem from_integer(long long i) const
    {
        long long r = i % static_cast<long long>(p);
        if (r < 0)
            r += static_cast<long long>(p);
        return Fp(static_cast<unsigned long long>(r), p);
    }
    Elem from_count(unsigned long long c) const { return Fp(c % p, p); }
    Elem invert(const Elem& e) const { return e.inverse(); }
    Elem parse(const std::string& text) const
    {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(text, &used);
        }
        catch (const std::exception&) {
            throw std::invalid_argument("PrimeField::parse: bad literal '" + text + "'");
        }
        if (used != text.size())
            throw std::invalid_argument("PrimeField::parse: bad literal '" + text + "'");
        return from_integer(v);
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }
    bool operator!=(const PrimeField& o) const { return p != o.p; }
};

/* Satisfied by RationalField and PrimeField. */
template <class F>
concept CoefficientField = requires(const F& f, typename F::Elem e) {
    { f.characteristic() } -> std::convertible_to<unsigned long long>;
    { f.zero() } -> std::same_as<typename F::Elem>;
    { e.is_zero() } -> std::convertible_to<bool>;
};

/* Runs fn with the concrete field selected by the characteristic. */
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.characteristic == 0)
        return std::forward<Fn>(fn)(RationalField{});
    return std::forward<Fn>(fn)(PrimeField(spec.characteristic));
}

namespace detail {

/* C(a, b) mod p for digits a, b < p. */
inline unsigned long long digit_binomial_mod(unsigned long long a, unsigned long long b,
                                             unsigned long long p)
{
    if (b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    Fp r(1, p);
    for (unsigned long long i = 1; i <= b; ++i)
        r = r * Fp(a - b + i, p) * Fp(i, p).inverse();
    return r.value();
}

}  // namespace detail

/* Binomial coefficient as a field element: the digitwise product of
 * base-p digit binomials, which equals C(m,k) mod p.  Zero when k > m. */
inline Fp lucas_binomial(unsigned long long m, unsigned long long k, const PrimeField& field)
{
    if (k > m)
        return field.zero();
    unsigned long long acc = 1;
    while (m > 0 || k > 0) {
        unsigned long long md = m % field.p, kd = k % field.p;
        if (kd > md)
            return field.zero();
        acc = (Fp(acc, field.p) * Fp(detail::digit_binomial_mod(md, kd, field.p), field.p)).value();
        m /= field.p;
        k /= field.p;
    }
    return Fp(acc, field.p);
}

/* Characteristic 0: the exact integer C(m,k). */
inline Rational lucas_binomial(unsigned long long m, unsigned long long k, const RationalField&)
{
    if (k > m)
        return Rational();
    if (k > m - k)
        k = m - k;
    mpz_class r(1);
    for (unsigned long long i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(m - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return Rational::from_integer_value(r);
}

}  // namespace truncsym

#endif  // TRUNCSYM_FIELD_HPP
