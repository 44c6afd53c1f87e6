#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>
#include <stdexcept>
#include <algorithm>
#include <compare>

namespace mcloc {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// Coefficient arithmetic for the polynomial layer; no floating point.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v) { assign(v); }
    BigInt(int v) { assign(static_cast<long long>(v)); }

    static BigInt fromString(const std::string& s) {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = (s[i] == '-'); ++i; }
        if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mulSmallInPlace(10);
            r.addSmallInPlace(static_cast<uint32_t>(s[i] - '0'));
        }
        r.sign_ = r.limbs_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    bool isZero() const { return sign_ == 0; }
    bool isOne() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool isNeg() const { return sign_ < 0; }
    int sign() const { return sign_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmpMag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = addMag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmpMag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) { r.limbs_ = subMag(a.limbs_, b.limbs_); r.sign_ = a.sign_; }
            else { r.limbs_ = subMag(b.limbs_, a.limbs_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = mulMag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Truncated quotient (rounds toward zero), matching C semantics.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmpMag(a.limbs_, b.limbs_);
        if (c < 0) { q = BigInt(); r = a; return; }
        std::vector<uint32_t> qm, rm;
        divmodMag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Quotient when divisibility is known; throws if the division is inexact.
    BigInt divExact(const BigInt& b) const {
        BigInt q, r;
        divmod(*this, b, q, r);
        if (!r.isZero()) throw std::logic_error("BigInt: inexact division");
        return q;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = std::abs(a.sign_);
        b.sign_ = std::abs(b.sign_);
        while (!b.isZero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.sign_ = std::abs(r.sign_);
        return r;
    }

    bool fitsLongLong() const {
        if (limbs_.size() > 2) return false;
        unsigned long long m = magAsU64();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }
    long long toLongLong() const {
        if (!fitsLongLong()) throw std::overflow_error("BigInt: out of long long range");
        unsigned long long m = magAsU64();
        return sign_ >= 0 ? static_cast<long long>(m) : -static_cast<long long>(m - 1) - 1;
    }

    std::string toString() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> tmp = limbs_;
        std::string digits;
        while (!tmp.empty()) {
            uint64_t rem = 0;
            for (size_t i = tmp.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    int sign_;
    std::vector<uint32_t> limbs_;  // little endian, no high zero limb

    void assign(long long v) {
        limbs_.clear();
        if (v == 0) { sign_ = 0; return; }
        sign_ = v > 0 ? 1 : -1;
        unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                     : 0ULL - static_cast<unsigned long long>(v);
        while (m) {
            limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    unsigned long long magAsU64() const {
        unsigned long long m = 0;
        if (limbs_.size() > 1) m = static_cast<unsigned long long>(limbs_[1]) << 32;
        if (!limbs_.empty()) m |= limbs_[0];
        return m;
    }

    void mulSmallInPlace(uint32_t f) {
        uint64_t carry = 0;
        for (auto& l : limbs_) {
            uint64_t cur = static_cast<uint64_t>(l) * f + carry;
            l = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }
    void addSmallInPlace(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < limbs_.size(); ++i) {
            uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> addMag(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& sml = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + (i < sml.size() ? sml[i] : 0) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry && i >= sml.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> subMag(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> mulMag(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = r[k] + carry;
                r[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on normalized limbs; |a| >= |b|, b nonzero.
    static void divmodMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                          std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            uint64_t rem = 0;
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        int shift = 0;
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) { top <<= 1; ++shift; }
        std::vector<uint32_t> u = shiftLeft(a, shift);  // a.size() + 1 limbs
        std::vector<uint32_t> v = shiftLeft(b, shift);
        v.resize(b.size());  // normalization cannot overflow the top limb
        size_t n = v.size();
        size_t m = u.size() - 1 - n;
        q.assign(m + 1, 0);
        const uint64_t base = 1ULL << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                borrow = t < 0;
                if (t < 0) t += static_cast<int64_t>(base);
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            bool negative = t < 0;
            u[j + n] = static_cast<uint32_t>(t);
            if (negative) {
                // add back
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur);
                    c2 = cur >> 32;
                }
                u[j + n] = static_cast<uint32_t>(u[j + n] + c2);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        r = shiftRight(u, shift);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }

    static std::vector<uint32_t> shiftLeft(const std::vector<uint32_t>& a, int s) {
        if (s == 0) { auto r = a; r.push_back(0); return r; }
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        return r;
    }
    static std::vector<uint32_t> shiftRight(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> s;
            if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
        }
        return r;
    }
};

}  // namespace mcloc
