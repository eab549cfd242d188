#include "pasim/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pasim {

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size()) sum += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& other) {
    assert(compare(other) >= 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < other.limbs_.size()) diff -= other.limbs_[i];
        if (diff < 0) {
            diff += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    assert(borrow == 0);
    trim();
    return *this;
}

void BigUint::mul_u32(std::uint32_t v) {
    if (v == 0) {
        limbs_.clear();
        return;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * v + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

void BigUint::div_u32(std::uint32_t v) {
    assert(v != 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / v);
        rem = cur % v;
    }
    trim();
}

BigUint BigUint::from_bits(std::span<const std::uint8_t> bits) {
    BigUint r;
    for (std::uint8_t b : bits) {
        // r = 2r + b
        std::uint64_t carry = b & 1u;
        for (auto& limb : r.limbs_) {
            std::uint64_t cur = (static_cast<std::uint64_t>(limb) << 1) | carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    return r;
}

void BigUint::write_bits(std::span<std::uint8_t> out) const {
    assert(bit_length() <= out.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::size_t bit = out.size() - 1 - j;  // significance of out[j]
        std::size_t limb = bit / 32;
        out[j] = limb < limbs_.size()
                     ? static_cast<std::uint8_t>((limbs_[limb] >> (bit % 32)) & 1u)
                     : 0;
    }
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint t = *this;
    std::string digits;
    while (!t.is_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = t.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | t.limbs_[i];
            t.limbs_[i] = static_cast<std::uint32_t>(cur / 10);
            rem = cur % 10;
        }
        t.trim();
        digits.push_back(static_cast<char>('0' + rem));
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigUint binomial(int n, int k) {
    if (k < 0 || k > n) return BigUint{};
    if (k > n - k) k = n - k;
    BigUint r{1};
    for (int j = 1; j <= k; ++j) {
        r.mul_u32(static_cast<std::uint32_t>(n - k + j));
        r.div_u32(static_cast<std::uint32_t>(j));  // exact at every step
    }
    return r;
}

BigUint multinomial(std::span<const int> counts) {
    // Product of binomials C(s + c, c), evaluated as an exact mul/div chain:
    // every intermediate is an integer times a binomial prefix, so div_u32 is
    // always an exact division.
    BigUint r{1};
    int s = 0;
    for (int c : counts) {
        if (c < 0) throw std::invalid_argument("multinomial: negative count");
        for (int j = 1; j <= c; ++j) {
            r.mul_u32(static_cast<std::uint32_t>(s + j));
            r.div_u32(static_cast<std::uint32_t>(j));
        }
        s += c;
    }
    return r;
}

}  // namespace pasim
