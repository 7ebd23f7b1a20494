#pragma once

// Minimal arbitrary-precision unsigned integer. Solution-pair counts grow
// like 4^n, so fixed-width arithmetic overflows already around n = 32;
// everything the counting identity needs is addition, subtraction of a
// smaller value, multiplication and decimal printing.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace differsat {

class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        while (v) {
            limbs_.push_back(std::uint32_t(v));
            v >>= 32;
        }
    }

    static BigUint pow2(std::uint32_t k) {
        BigUint r;
        r.limbs_.assign(k / 32 + 1, 0);
        r.limbs_.back() = std::uint32_t(1) << (k % 32);
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
    friend bool operator<(const BigUint& a, const BigUint& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return cmp(a, b) >= 0; }

    BigUint& operator+=(const BigUint& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = std::uint32_t(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(std::uint32_t(carry));
        return *this;
    }
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    // Requires *this >= o.
    BigUint& operator-=(const BigUint& o) {
        if (*this < o) throw std::underflow_error("BigUint subtraction would go negative");
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t s = std::int64_t(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
            borrow = s < 0;
            limbs_[i] = std::uint32_t(s + (borrow ? (std::int64_t(1) << 32) : 0));
        }
        trim();
        return *this;
    }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        BigUint r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    std::uint64_t(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = std::uint32_t(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += std::uint32_t(carry);
        }
        r.trim();
        return r;
    }
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            // divide by 10^9 in place, collecting the remainder
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = std::uint32_t(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return digits;
    }

  private:
    static int cmp(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        return 0;
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    // little-endian 32-bit limbs, no trailing zero limbs
    std::vector<std::uint32_t> limbs_;
};

}  // namespace differsat
