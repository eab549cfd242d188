#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pasim {

// Unsigned big integer, 32-bit limbs, little endian. Supports exactly the
// operations the distribution matcher needs: compare, add, subtract,
// multiply/divide by a small word, and bit import/export.
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;

    int compare(const BigUint& other) const;
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator==(const BigUint& o) const { return compare(o) == 0; }

    BigUint& operator+=(const BigUint& other);
    BigUint& operator-=(const BigUint& other);  // requires *this >= other

    void mul_u32(std::uint32_t v);
    void div_u32(std::uint32_t v);  // floor division, v > 0

    // Bits are most-significant first.
    static BigUint from_bits(std::span<const std::uint8_t> bits);
    void write_bits(std::span<std::uint8_t> out) const;  // fixed width, zero padded

    std::string to_string() const;  // decimal, for diagnostics

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

BigUint binomial(int n, int k);
BigUint multinomial(std::span<const int> counts);

}  // namespace pasim
