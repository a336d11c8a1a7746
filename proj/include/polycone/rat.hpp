#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace polycone {

/// Raised for malformed input: bad dimensions, bad parameters, parse failures.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline;
/// anything larger is promoted to a shared immutable GMP rational. The two
/// forms are never mixed for the same value: a result that fits is always
/// demoted back to the inline form, so equality can compare representations.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den);
    explicit Rat(const mpz_class& value);
    explicit Rat(const mpq_class& value);

    /// Parses "p/q" or an integer literal. Decimals are rejected.
    static Rat parse(std::string_view text);

    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] bool is_small() const { return !big_; }

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;
    /// Greatest integer not exceeding the value.
    [[nodiscard]] mpz_class floor() const;

    [[nodiscard]] std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b);
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    void assign(const mpq_class& q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

using RatVector = std::vector<Rat>;

Rat dot(const RatVector& a, const RatVector& b);
std::string to_string(const RatVector& v);

}  // namespace polycone
