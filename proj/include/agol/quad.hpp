// Exact arithmetic in a real quadratic field.
//
// A QuadExt holds (a + b*sqrt(d))/c with arbitrary-precision integers a, b, c.
// Normal form: c >= 1, gcd(|a|, |b|, c) = 1, d squarefree, and d = 0 exactly
// when the value is rational (b = 0). Rationals mix freely with any field;
// combining two irrationals from different fields throws FieldMismatch.
// Comparisons are exact integer sign computations, never floating point.
#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

namespace agol {

class QuadExt {
public:
    QuadExt() : a_(0), b_(0), c_(1), d_(0) {}
    QuadExt(long n) : a_(n), b_(0), c_(1), d_(0) {}
    QuadExt(const mpz_class& n) : a_(n), b_(0), c_(1), d_(0) {}
    QuadExt(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    static QuadExt rational(const mpz_class& num, const mpz_class& den);
    static QuadExt sqrt_int(const mpz_class& n);  // sqrt(n), n >= 0

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_quadratic_irrational() const { return b_ != 0; }

    int sign() const;
    // -1, 0, +1 for this <, ==, > other. Exact.
    int cmp(const QuadExt& other) const;

    QuadExt operator-() const;
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;

    bool operator==(const QuadExt& o) const { return cmp(o) == 0; }
    bool operator!=(const QuadExt& o) const { return cmp(o) != 0; }
    bool operator<(const QuadExt& o) const { return cmp(o) < 0; }
    bool operator<=(const QuadExt& o) const { return cmp(o) <= 0; }
    bool operator>(const QuadExt& o) const { return cmp(o) > 0; }
    bool operator>=(const QuadExt& o) const { return cmp(o) >= 0; }

    // Renders as "(a+b√d)/c", dropping parts that are 0 or 1; parse() accepts
    // exactly what to_string() emits (and a few harmless variations).
    std::string to_string() const;
    static QuadExt parse(const std::string& text);

    std::string to_json() const;
    static QuadExt from_json(const std::string& text);

    double to_double() const;
    // Decimal approximation, 12 significant digits. Display only.
    std::string decimal() const;

private:
    void normalize();
    // Field of the pair, or throws FieldMismatch.
    static mpz_class common_d(const QuadExt& x, const QuadExt& y);

    mpz_class a_, b_, c_, d_;
};

using QuadVec3 = std::array<QuadExt, 3>;

}  // namespace agol
