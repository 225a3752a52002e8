#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtpath {

/// Arbitrary-precision signed integer.
///
/// Magnitude is stored little-endian in base 2^32, schoolbook arithmetic
/// throughout.
class bigint {
public:
    bigint() = default;

    bigint(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    bigint(int v) : bigint(static_cast<long long>(v)) {}

    static bigint from_decimal(std::string_view s) {
        bigint r;
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("bigint: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bigint: bad digit");
            mul_small_inplace(r.mag_, 10);
            add_small_inplace(r.mag_, static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bigint operator-() const {
        bigint r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    bigint abs() const {
        bigint r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend bigint operator+(const bigint& a, const bigint& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        bigint r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return bigint();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend bigint operator-(const bigint& a, const bigint& b) { return a + (-b); }

    friend bigint operator*(const bigint& a, const bigint& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return bigint();
        bigint r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated division, C++ semantics: q = trunc(a/b), r has the sign of a.
    static void divmod(const bigint& a, const bigint& b, bigint& q, bigint& r) {
        if (b.sign_ == 0) throw std::domain_error("bigint: division by zero");
        if (a.sign_ == 0) {
            q = bigint();
            r = bigint();
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.mag_ = std::move(rm);
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend bigint operator/(const bigint& a, const bigint& b) {
        bigint q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend bigint operator%(const bigint& a, const bigint& b) {
        bigint q, r;
        divmod(a, b, q, r);
        return r;
    }

    bigint& operator+=(const bigint& o) { return *this = *this + o; }
    bigint& operator-=(const bigint& o) { return *this = *this - o; }
    bigint& operator*=(const bigint& o) { return *this = *this * o; }
    bigint& operator/=(const bigint& o) { return *this = *this / o; }

    friend bool operator==(const bigint& a, const bigint& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const bigint& a, const bigint& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    static bigint gcd(bigint a, bigint b) {
        a = a.abs();
        b = b.abs();
        while (!b.is_zero()) {
            bigint q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static bigint pow(const bigint& base, unsigned e) {
        bigint r(1), b = base;
        while (e != 0) {
            if (e & 1u) r *= b;
            e >>= 1;
            if (e != 0) b *= b;
        }
        return r;
    }

    bool fits_long_long() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = to_ull();
        if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
        return u <= 0x8000000000000000ULL;
    }

    long long to_long_long() const {
        if (!fits_long_long()) throw std::overflow_error("bigint: does not fit long long");
        unsigned long long u = to_ull();
        return sign_ < 0 ? -static_cast<long long>(u - 1) - 1 : static_cast<long long>(u);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string groups;
        std::vector<std::uint32_t> chunk_digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            trim(m);
            chunk_digits.push_back(static_cast<std::uint32_t>(rem));
        }
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out += std::to_string(chunk_digits.back());
        for (std::size_t i = chunk_digits.size() - 1; i-- > 0;) {
            std::string part = std::to_string(chunk_digits[i]);
            out += std::string(9 - part.size(), '0');
            out += part;
        }
        return out;
    }

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // little-endian limbs, no leading zeros

    unsigned long long to_ull() const {
        unsigned long long u = 0;
        if (mag_.size() >= 1) u = mag_[0];
        if (mag_.size() >= 2) u |= static_cast<unsigned long long>(mag_[1]) << 32;
        return u;
    }

    static void trim(std::vector<std::uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() >= b.size() ? b : a;
        const auto& hi = a.size() >= b.size() ? a : b;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow
                               - (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    static void mul_small_inplace(std::vector<std::uint32_t>& v, std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : v) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry != 0) v.push_back(static_cast<std::uint32_t>(carry));
    }

    static void add_small_inplace(std::vector<std::uint32_t>& v, std::uint32_t d) {
        std::uint64_t carry = d;
        for (std::size_t i = 0; i < v.size() && carry != 0; ++i) {
            std::uint64_t cur = v[i] + carry;
            v[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry != 0) v.push_back(static_cast<std::uint32_t>(carry));
    }

    static std::size_t bit_length(const std::vector<std::uint32_t>& v) {
        if (v.empty()) return 0;
        std::uint32_t top = v.back();
        std::size_t bits = (v.size() - 1) * 32;
        while (top != 0) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    static bool get_bit(const std::vector<std::uint32_t>& v, std::size_t i) {
        return (v[i / 32] >> (i % 32)) & 1u;
    }

    static void shl1_or(std::vector<std::uint32_t>& v, bool low_bit) {
        std::uint32_t carry = low_bit ? 1u : 0u;
        for (auto& limb : v) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry != 0) v.push_back(carry);
    }

    // binary long division on magnitudes; u = q*v + r with r < v
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u, v) < 0) {
            r = u;
            return;
        }
        if (v.size() == 1) {
            std::uint64_t d = v[0], rem = 0;
            q.assign(u.size(), 0);
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | u[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            trim(q);
            if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        std::size_t bits = bit_length(u);
        q.assign(u.size(), 0);
        for (std::size_t i = bits; i-- > 0;) {
            shl1_or(r, get_bit(u, i));
            if (cmp_mag(r, v) >= 0) {
                r = sub_mag(r, v);
                q[i / 32] |= 1u << (i % 32);
            }
        }
        trim(q);
    }
};

inline std::string to_string(const bigint& v) { return v.to_string(); }

} // namespace mtpath
