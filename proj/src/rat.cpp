#include "polycone/rat.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace polycone {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(i128 v)
{
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool mpz_to_i64(const mpz_class& z, std::int64_t& out)
{
    if (!mpz_fits_slong_p(z.get_mpz_t())) {
        return false;
    }
    out = z.get_si();
    return true;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw InputError("zero denominator");
    }
    assign(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
}

Rat::Rat(const mpz_class& value) { assign(mpq_class(value)); }

Rat::Rat(const mpq_class& value) { assign(value); }

void Rat::assign(const mpq_class& q_in)
{
    mpq_class q(q_in);
    q.canonicalize();
    std::int64_t n = 0;
    std::int64_t d = 0;
    if (mpz_to_i64(q.get_num(), n) && mpz_to_i64(q.get_den(), d)) {
        num_ = n;
        den_ = d;
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }
}

Rat Rat::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    auto slash = text.find('/');
    std::string_view num_text = text.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num_text) || !valid_int(den_text) || den_text[0] == '-') {
        throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return s[0] == '+' ? s.substr(1) : s; };
    mpz_class num(std::string(strip_plus(num_text)));
    mpz_class den(std::string(strip_plus(den_text)));
    if (den == 0) {
        throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    return Rat(mpq_class(num, den));
}

int Rat::sign() const
{
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rat::is_integer() const
{
    if (big_) return big_->get_den() == 1;
    return den_ == 1;
}

mpz_class Rat::numerator() const
{
    if (big_) return big_->get_num();
    return mpz_class(static_cast<long>(num_));
}

mpz_class Rat::denominator() const
{
    if (big_) return big_->get_den();
    return mpz_class(static_cast<long>(den_));
}

mpq_class Rat::to_mpq() const
{
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rat::floor() const
{
    mpz_class r;
    mpz_class n = numerator();
    mpz_class d = denominator();
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

std::string Rat::str() const
{
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const
{
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return Rat(mpq_class(-to_mpq()));
}

namespace {

// Reduces n/d (d > 0) and stores it if both parts fit in 64 bits.
bool store_small(i128 n, i128 d, std::int64_t& out_n, std::int64_t& out_d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (!fits64(n) || !fits64(d)) return false;
    out_n = static_cast<std::int64_t>(n);
    out_d = static_cast<std::int64_t>(d);
    return true;
}

}  // namespace

Rat& Rat::operator+=(const Rat& o)
{
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r = 0;
            if (!__builtin_add_overflow(num_, o.num_, &r)) {
                num_ = r;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
        i128 d = static_cast<i128>(den_) * o.den_;
        if (store_small(n, d, num_, den_)) return *this;
        assign(mpq_class(to_mpz(n), to_mpz(d)));
        return *this;
    }
    assign(to_mpq() + o.to_mpq());
    return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o)
{
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r = 0;
            if (!__builtin_mul_overflow(num_, o.num_, &r)) {
                num_ = r;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * o.num_;
        i128 d = static_cast<i128>(den_) * o.den_;
        if (store_small(n, d, num_, den_)) return *this;
        assign(mpq_class(to_mpz(n), to_mpz(d)));
        return *this;
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (!big_ && !o.big_) {
        i128 n = static_cast<i128>(num_) * o.den_;
        i128 d = static_cast<i128>(den_) * o.num_;
        if (store_small(n, d, num_, den_)) return *this;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        assign(mpq_class(to_mpz(n), to_mpz(d)));
        return *this;
    }
    assign(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rat& a, const Rat& b)
{
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in size class
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b)
{
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size()) {
        throw InputError("dot: length mismatch");
    }
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

std::string to_string(const RatVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].str();
    }
    return out;
}

}  // namespace polycone
