#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ayt {

struct AytError : std::runtime_error {
    explicit AytError(const std::string& msg) : std::runtime_error(msg) {}
};

#define AYT_CHECK(cond, msg)                                                                       \
    do {                                                                                           \
        if (!(cond))                                                                               \
            throw ::ayt::AytError(msg);                                                           \
    } while (0)

/* Runtime description of the ground field: a prime field F_p or Q. */
struct FieldSpec {
    bool rational = false;
    long long p = 2;

    static FieldSpec Fp(long long p) { return FieldSpec{false, p}; }
    static FieldSpec Q() { return FieldSpec{true, 0}; }

    bool operator==(const FieldSpec& o) const
    {
        return rational == o.rational && (rational || p == o.p);
    }
    std::string str() const { return rational ? "rational" : "p=" + std::to_string(p); }
};

inline bool is_prime_ll(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/* Element of F_p. The modulus travels with the element; a default-constructed
 * value (p==0) is an unbound integer literal that adopts the modulus of the
 * first bound operand it meets. */
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v) : v_(v), p_(0) {}
    Fp(long long v, long long p) : v_(v), p_(p) { reduce(); }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    /* Unbound values are exact integers; a zero test is only decidable for
     * 0 and +-1 (same answer modulo every prime). Anything else must have
     * been bound first. */
    bool is_zero() const
    {
        if (p_ != 0)
            return v_ == 0;
        if (v_ == 0)
            return true;
        if (v_ == 1 || v_ == -1)
            return false;
        throw AytError("Fp: zero test on unbound scalar " + std::to_string(v_));
    }
    Fp bound_to(long long p) const { return p_ ? *this : Fp(v_, p); }

    friend Fp operator+(const Fp& a, const Fp& b)
    {
        long long p = join(a, b);
        if (p == 0)
            return Fp(a.v_ + b.v_);
        return Fp(a.bound(p).v_ + b.bound(p).v_, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b)
    {
        long long p = join(a, b);
        if (p == 0)
            return Fp(a.v_ - b.v_);
        return Fp(a.bound(p).v_ - b.bound(p).v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b)
    {
        long long p = join(a, b);
        if (p == 0)
            return Fp(a.v_ * b.v_);
        return Fp((long long)((__int128)a.bound(p).v_ * b.bound(p).v_ % p), p);
    }
    Fp operator-() const { return p_ ? Fp(p_ - v_, p_) : Fp(-v_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const
    {
        if (p_ == 0) {
            AYT_CHECK(v_ == 1 || v_ == -1, "Fp: inverse of unbound scalar");
            return *this;
        }
        AYT_CHECK(v_ != 0, "Fp: inverse of zero");
        long long t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        AYT_CHECK(r == 1, "Fp: modulus not prime");
        return Fp(t, p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.bound(join(a, b)).inv(); }

    friend bool operator==(const Fp& a, const Fp& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

  private:
    static long long join(const Fp& a, const Fp& b)
    {
        if (a.p_ && b.p_)
            AYT_CHECK(a.p_ == b.p_, "Fp: mixed moduli");
        return a.p_ ? a.p_ : b.p_;
    }
    Fp bound(long long p) const
    {
        if (p_ || p == 0)
            return *this;
        return Fp(v_, p);
    }
    void reduce()
    {
        if (p_) {
            v_ %= p_;
            if (v_ < 0)
                v_ += p_;
        }
    }
    long long v_, p_;
};

/* Exact rational scalar (GMP-backed). */
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long long v) : v_((long)v) {}
    Rat(long long num, long long den) : v_((long)num, (long)den) { v_.canonicalize(); }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b)
    {
        AYT_CHECK(b.v_ != 0, "Rat: division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat inv() const
    {
        AYT_CHECK(v_ != 0, "Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

template <class K> K scalar_from_int(long long n, const FieldSpec& f);
template <> inline Fp scalar_from_int<Fp>(long long n, const FieldSpec& f)
{
    AYT_CHECK(!f.rational, "field mismatch: expected prime field");
    return Fp(n, f.p);
}
template <> inline Rat scalar_from_int<Rat>(long long n, const FieldSpec&) { return Rat(n); }

template <class K> K scalar_from_frac(long long num, long long den, const FieldSpec& f);
template <> inline Fp scalar_from_frac<Fp>(long long num, long long den, const FieldSpec& f)
{
    return Fp(num, f.p) / Fp(den, f.p);
}
template <> inline Rat scalar_from_frac<Rat>(long long num, long long den, const FieldSpec&)
{
    return Rat(num, den);
}

template <class K> bool is_zero(const K& x) { return x.is_zero(); }

inline Fp bind_scalar(const Fp& x, const FieldSpec& f) { return x.bound_to(f.p); }
inline Rat bind_scalar(const Rat& x, const FieldSpec&) { return x; }

} // namespace ayt
