#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "bmgame/errors.hpp"

namespace bmgame {

// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
// Intermediates run through 128-bit so products of desk-scale values cannot
// wrap silently; a result that does not fit back into 64 bits throws.
class Rat {
public:
    Rat() = default;
    Rat(long long n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rat(long long n, long long d) { assign(n, d); }

    static Rat from_half_units(long long h) { return Rat(h, 2); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                    i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw internal_error("rational division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // Canonical text form: "p/q" reduced, or plain "p" when q == 1.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p" or "p/q" with q >= 1.
    static Rat parse(const std::string& text);

private:
    using i128 = __int128;

    void assign(long long n, long long d) {
        if (d == 0) throw internal_error("rational with zero denominator");
        *this = make(i128(n), i128(d));
    }

    static Rat make(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rat();
        i128 g = gcd128(n < 0 ? -n : n, d);
        n /= g;
        d /= g;
        constexpr i128 kMax = INT64_MAX;
        if (n > kMax || n < -kMax || d > kMax)
            throw internal_error("rational overflow");
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rat Rat::parse(const std::string& text) {
    auto parse_ll = [&](const std::string& s) -> long long {
        if (s.empty()) throw parse_error("empty rational component in '" + text + "'");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw parse_error("bad rational '" + text + "'");
        }
        if (pos != s.size()) throw parse_error("bad rational '" + text + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_ll(text));
    long long p = parse_ll(text.substr(0, slash));
    long long q = parse_ll(text.substr(slash + 1));
    if (q < 1) throw parse_error("rational denominator must be >= 1 in '" + text + "'");
    return Rat(p, q);
}

} // namespace bmgame
