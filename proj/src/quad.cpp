#include "agol/quad.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <utility>

#include "agol/errors.hpp"

namespace agol {

namespace {

// Trial division bound for squarefree reduction. Discriminants in this
// library stay tiny; the bound exists so construction always terminates.
constexpr unsigned long kFactorBound = 1000000;

mpz_class gcd3(const mpz_class& x, const mpz_class& y, const mpz_class& z) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    return g;
}

}  // namespace

QuadExt::QuadExt(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw DivisionByZero("QuadExt denominator is zero");
    if (d_ < 0) throw FieldMismatch("QuadExt field index d must be nonnegative");
    normalize();
}

QuadExt QuadExt::rational(const mpz_class& num, const mpz_class& den) {
    return QuadExt(num, 0, den, 0);
}

QuadExt QuadExt::sqrt_int(const mpz_class& n) {
    if (n < 0) throw FieldMismatch("sqrt of negative integer");
    return QuadExt(0, 1, 1, n);
}

void QuadExt::normalize() {
    if (c_ < 0) {
        c_ = -c_;
        a_ = -a_;
        b_ = -b_;
    }
    if (d_ == 0) b_ = 0;
    if (b_ == 0) {
        d_ = 0;
    } else {
        // Pull square factors of d into b: (b, p^2 e) -> (b p, e).
        mpz_class p = 2;
        while (p * p <= d_ && p <= kFactorBound) {
            mpz_class sq = p * p;
            while (d_ % sq == 0) {
                d_ /= sq;
                b_ *= p;
            }
            p += (p == 2) ? 1 : 2;
        }
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
    }
    mpz_class g = gcd3(a_, b_, c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

mpz_class QuadExt::common_d(const QuadExt& x, const QuadExt& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_) {
        throw FieldMismatch("cannot combine sqrt(" + x.d_.get_str() +
                            ") with sqrt(" + y.d_.get_str() + ")");
    }
    return x.d_;
}

int QuadExt::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs differ: compare a^2 against b^2 d.
    mpz_class t = a_ * a_ - b_ * b_ * d_;
    return sa * sgn(t);
}

int QuadExt::cmp(const QuadExt& other) const {
    mpz_class d = common_d(*this, other);
    QuadExt diff(a_ * other.c_ - other.a_ * c_, b_ * other.c_ - other.b_ * c_,
                 c_ * other.c_, d);
    return diff.sign();
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    mpz_class d = common_d(*this, o);
    return QuadExt(a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, c_ * o.c_, d);
}

QuadExt QuadExt::operator-(const QuadExt& o) const { return *this + (-o); }

QuadExt QuadExt::operator*(const QuadExt& o) const {
    mpz_class d = common_d(*this, o);
    return QuadExt(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, c_ * o.c_, d);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.is_zero()) throw DivisionByZero("QuadExt division by zero");
    mpz_class d = common_d(*this, o);
    // 1/((a+b√d)/c) = c(a-b√d)/(a^2-b^2 d); the norm is nonzero since d is
    // squarefree and o is nonzero.
    mpz_class norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
    QuadExt inv(o.c_ * o.a_, -o.c_ * o.b_, norm, d);
    return *this * inv;
}

std::string QuadExt::to_string() const {
    if (is_zero()) return "0";
    std::string inner;
    if (b_ == 0) {
        inner = a_.get_str();
    } else {
        std::string root = "√" + d_.get_str();
        std::string bpart;
        if (b_ == 1) {
            bpart = root;
        } else if (b_ == -1) {
            bpart = "-" + root;
        } else {
            bpart = b_.get_str() + root;
        }
        if (a_ == 0) {
            inner = bpart;
        } else if (b_ > 0) {
            inner = a_.get_str() + "+" + bpart;
        } else {
            inner = a_.get_str() + bpart;
        }
    }
    if (c_ == 1) return inner;
    bool single_term = (a_ == 0) || (b_ == 0);
    if (single_term && b_ == 0) return inner + "/" + c_.get_str();
    return "(" + inner + ")/" + c_.get_str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }
    bool eat(char c) {
        if (!eof() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    // Accepts "√" (UTF-8) or the ASCII spelling "sqrt".
    bool eat_root() {
        if (s.compare(i, 3, "√") == 0) {
            i += 3;
            return true;
        }
        if (s.compare(i, 4, "sqrt") == 0) {
            i += 4;
            return true;
        }
        return false;
    }
    mpz_class digits() {
        size_t start = i;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected integer in \"" + s + "\"");
        return mpz_class(s.substr(start, i - start));
    }
};

// sum := term ((+|-) term)*, term := digits | [digits] root digits
void parse_sum(Cursor& cur, mpz_class& a, mpz_class& b, mpz_class& d) {
    a = 0;
    b = 0;
    d = 0;
    bool first = true;
    bool saw_root = false;
    while (true) {
        int sign = 1;
        if (cur.eat('+')) {
            sign = 1;
        } else if (cur.eat('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        mpz_class coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.digits();
            have_coeff = true;
        }
        if (cur.eat_root()) {
            mpz_class root = cur.digits();
            if (saw_root) throw ParseError("two root terms in \"" + cur.s + "\"");
            saw_root = true;
            b = sign * coeff;
            d = root;
        } else {
            if (!have_coeff) throw ParseError("expected term in \"" + cur.s + "\"");
            a += sign * coeff;
        }
        first = false;
    }
}

}  // namespace

QuadExt QuadExt::parse(const std::string& text) {
    Cursor cur{text};
    mpz_class a, b, c = 1, d;
    bool parens = cur.eat('(');
    parse_sum(cur, a, b, d);
    if (parens && !cur.eat(')')) throw ParseError("missing ')' in \"" + text + "\"");
    if (cur.eat('/')) c = cur.digits();
    if (!cur.eof()) throw ParseError("trailing characters in \"" + text + "\"");
    return QuadExt(a, b, c, d);
}

std::string QuadExt::to_json() const {
    nlohmann::json j{{"a", a_.get_str()},
                     {"b", b_.get_str()},
                     {"c", c_.get_str()},
                     {"d", d_.get_str()}};
    return j.dump();
}

QuadExt QuadExt::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return QuadExt(mpz_class(j.at("a").get<std::string>()),
                   mpz_class(j.at("b").get<std::string>()),
                   mpz_class(j.at("c").get<std::string>()),
                   mpz_class(j.at("d").get<std::string>()));
}

namespace {

// a and b*sqrt(d) can agree to nearly all their digits (the value may be
// smaller than either term by a huge factor), so the working precision has to
// cover the full operand size plus a safety margin.
mpf_class approximate(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                      const mpz_class& d) {
    mp_bitcnt_t prec = 64;
    prec += std::max(mpz_sizeinbase(a.get_mpz_t(), 2), mpz_sizeinbase(b.get_mpz_t(), 2));
    prec += mpz_sizeinbase(c.get_mpz_t(), 2);
    mpf_class acc(a, prec);
    if (b != 0) {
        mpf_class root(d, prec);
        root = sqrt(root);
        acc += mpf_class(b, prec) * root;
    }
    acc /= mpf_class(c, prec);
    return acc;
}

}  // namespace

double QuadExt::to_double() const { return approximate(a_, b_, c_, d_).get_d(); }

std::string QuadExt::decimal() const {
    mpf_class acc = approximate(a_, b_, c_, d_);
    char buf[64];
    gmp_snprintf(buf, sizeof(buf), "%.12Fg", acc.get_mpf_t());
    return buf;
}

}  // namespace agol
