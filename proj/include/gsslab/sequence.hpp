#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsslab/gf2poly.hpp"

namespace gsslab {

// One full period of a binary sequence. Indices are cyclic; bit 0 is the
// first bit printed.
class PeriodicSeq {
 public:
  /// All-zeros sequence; length must be >= 1.
  explicit PeriodicSeq(std::size_t length);

  /// Parses '0'/'1' characters. Throws Errc::parse on anything else or empty input.
  static PeriodicSeq from_string(std::string_view bits);

  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }

  /// Packed storage, bit i in word i/64 at position i%64; unused high bits are zero.
  [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

  /// 64 bits starting at linear (non-wrapping) position pos; bits past the end read as 0.
  [[nodiscard]] std::uint64_t window64(std::size_t pos) const;

  PeriodicSeq& operator^=(const PeriodicSeq& other);

  [[nodiscard]] std::string to_string() const;
  /// "0110 ~"
  [[nodiscard]] std::string display() const { return to_string() + " ~"; }
  [[nodiscard]] std::size_t hash() const;

  friend bool operator==(const PeriodicSeq&, const PeriodicSeq&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t length_;
};

/// Smallest divisor d of the length with rotate(seq, d) == seq.
std::size_t least_period(const PeriodicSeq& seq);

/// Output bit j = input bit (j + k) mod length; k may be negative.
PeriodicSeq rotate(const PeriodicSeq& seq, std::int64_t k);

/// Output bit j = input bit (length - 1 - j).
PeriodicSeq reversed(const PeriodicSeq& seq);

std::size_t weight(const PeriodicSeq& seq);

/// Throws Errc::invalid_input on length mismatch.
PeriodicSeq xor_seq(const PeriodicSeq& s, const PeriodicSeq& t);

/// True if t is a cyclic rotation of s.
bool is_rotation_of(const PeriodicSeq& s, const PeriodicSeq& t);

// Initial LFSR window: bit i is a_i.
struct Seed {
  std::uint32_t bits = 0;
  int n = 0;

  static Seed all_ones(int n) { return Seed{(std::uint32_t{1} << n) - 1, n}; }
  /// "111" -> a_0 = a_1 = a_2 = 1. Throws Errc::parse / Errc::invalid_input.
  static Seed parse(std::string_view text, int n);
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

struct MSeqRecord {
  Gf2Poly poly;
  Seed seed;
  PeriodicSeq seq;

  [[nodiscard]] int degree() const { return seed.n; }
};

/// a_m = sum_{j=1..n} f_j a_{m-j}, f_j the coefficient of x^j in poly, with
/// a_0..a_{n-1} taken from the seed (all ones by default). With this reading
/// x^3+x^2+1 yields 1110010 and x^2+x+1 yields 110.
/// Throws Errc::not_primitive (with the primitivity diagnosis),
/// Errc::invalid_input for a zero or wrongly sized seed, Errc::out_of_range
/// for degrees outside [1, max_supported_degree()].
MSeqRecord generate_mseq(Gf2Poly poly, std::optional<Seed> seed = std::nullopt);

/// Time reversal, rotated so it starts with the all-ones window; the result
/// belongs to reciprocal(poly).
MSeqRecord reverse_mseq(const MSeqRecord& rec);

}  // namespace gsslab
