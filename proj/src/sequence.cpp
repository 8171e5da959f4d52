#include "gsslab/sequence.hpp"

#include <bit>
#include <functional>

#include "gsslab/config.hpp"
#include "gsslab/error.hpp"

namespace gsslab {

PeriodicSeq::PeriodicSeq(std::size_t length) : words_((length + 63) / 64, 0), length_(length) {
  if (length == 0) throw Error(Errc::invalid_input, "sequence length must be >= 1");
}

PeriodicSeq PeriodicSeq::from_string(std::string_view bits) {
  if (bits.empty()) throw Error(Errc::parse, "empty bit string");
  PeriodicSeq out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw Error(Errc::parse, "bit strings use '0'/'1' only, got '" + std::string(bits) + "'");
    out.set(i, bits[i] == '1');
  }
  return out;
}

std::uint64_t PeriodicSeq::window64(std::size_t pos) const {
  if (pos >= length_) return 0;
  const std::size_t w = pos >> 6;
  const unsigned off = pos & 63;
  std::uint64_t v = words_[w] >> off;
  if (off != 0 && w + 1 < words_.size()) v |= words_[w + 1] << (64 - off);
  return v;
}

PeriodicSeq& PeriodicSeq::operator^=(const PeriodicSeq& other) {
  if (other.length_ != length_)
    throw Error(Errc::invalid_input, "length mismatch: " + std::to_string(length_) + " vs " +
                                         std::to_string(other.length_));
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string PeriodicSeq::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (bit(i)) out[i] = '1';
  return out;
}

std::size_t PeriodicSeq::hash() const {
  std::size_t h = std::hash<std::size_t>{}(length_);
  for (std::uint64_t w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
  return h;
}

namespace {

// bits [0, L - d) equal bits [d, L). For d | L this is invariance under rotation by d.
bool shifted_equal(const PeriodicSeq& s, std::size_t d) {
  const std::size_t span = s.length() - d;
  std::size_t i = 0;
  for (; i + 64 <= span; i += 64)
    if (s.window64(i) != s.window64(i + d)) return false;
  if (i < span) {
    const std::uint64_t mask = (std::uint64_t{1} << (span - i)) - 1;
    if ((s.window64(i) ^ s.window64(i + d)) & mask) return false;
  }
  return true;
}

}  // namespace

std::size_t least_period(const PeriodicSeq& seq) {
  const std::size_t len = seq.length();
  std::vector<std::size_t> small;
  std::vector<std::size_t> large;
  for (std::size_t d = 1; d * d <= len; ++d) {
    if (len % d != 0) continue;
    small.push_back(d);
    if (d * d != len) large.push_back(len / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  for (std::size_t d : small)
    if (d == len || shifted_equal(seq, d)) return d;
  return len;
}

PeriodicSeq rotate(const PeriodicSeq& seq, std::int64_t k) {
  const auto len = static_cast<std::int64_t>(seq.length());
  const auto shift = static_cast<std::size_t>(((k % len) + len) % len);
  PeriodicSeq out(seq.length());
  for (std::size_t j = 0; j < seq.length(); ++j) {
    std::size_t src = j + shift;
    if (src >= seq.length()) src -= seq.length();
    out.set(j, seq.bit(src));
  }
  return out;
}

PeriodicSeq reversed(const PeriodicSeq& seq) {
  PeriodicSeq out(seq.length());
  for (std::size_t j = 0; j < seq.length(); ++j) out.set(j, seq.bit(seq.length() - 1 - j));
  return out;
}

std::size_t weight(const PeriodicSeq& seq) {
  std::size_t w = 0;
  for (std::uint64_t word : seq.words()) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

PeriodicSeq xor_seq(const PeriodicSeq& s, const PeriodicSeq& t) {
  PeriodicSeq out = s;
  out ^= t;
  return out;
}

bool is_rotation_of(const PeriodicSeq& s, const PeriodicSeq& t) {
  if (s.length() != t.length()) return false;
  for (std::size_t k = 0; k < s.length(); ++k)
    if (rotate(s, static_cast<std::int64_t>(k)) == t) return true;
  return false;
}

Seed Seed::parse(std::string_view text, int n) {
  if (text.empty()) throw Error(Errc::parse, "empty seed");
  if (static_cast<int>(text.size()) != n)
    throw Error(Errc::invalid_input, "seed '" + std::string(text) + "' has " +
                                         std::to_string(text.size()) + " bits, degree is " +
                                         std::to_string(n));
  Seed s{0, n};
  for (int i = 0; i < n; ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw Error(Errc::parse, "seed uses '0'/'1' only, got '" + std::string(text) + "'");
    if (text[i] == '1') s.bits |= std::uint32_t{1} << i;
  }
  return s;
}

std::string Seed::to_string() const {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((bits >> i) & 1U) out[i] = '1';
  return out;
}

MSeqRecord generate_mseq(Gf2Poly poly, std::optional<Seed> seed) {
  const int n = poly.degree();
  const int ceiling = max_supported_degree();
  if (n < 1 || n > ceiling)
    throw Error(Errc::out_of_range, "m-sequence degree must be in [1, " + std::to_string(ceiling) +
                                        "], got " + std::to_string(n));
  if (auto check = check_primitive(poly); !check.primitive)
    throw Error(Errc::not_primitive, render_poly(poly) + " is not primitive (" + check.reason + ")");
  const Seed s = seed.value_or(Seed::all_ones(n));
  if (s.n != n)
    throw Error(Errc::invalid_input, "seed has " + std::to_string(s.n) + " bits, degree is " +
                                         std::to_string(n));
  if (s.bits == 0) throw Error(Errc::invalid_input, "seed must not be all zeros");

  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  // window bit (j-1) holds a_{m-j}; taps bit (j-1) holds f_j.
  const auto taps = static_cast<std::uint32_t>((poly.mask() >> 1) & full);
  const std::size_t period = (std::size_t{1} << n) - 1;
  PeriodicSeq seq(period);
  std::uint32_t window = 0;
  for (std::size_t m = 0; m < period; ++m) {
    bool bit = false;
    if (m < static_cast<std::size_t>(n))
      bit = (s.bits >> m) & 1U;
    else
      bit = std::popcount(window & taps) & 1;
    seq.set(m, bit);
    window = ((window << 1) | (bit ? 1U : 0U)) & full;
  }
  return MSeqRecord{poly, s, std::move(seq)};
}

MSeqRecord reverse_mseq(const MSeqRecord& rec) {
  const int n = rec.degree();
  const PeriodicSeq back = reversed(rec.seq);
  const std::size_t len = back.length();
  // An m-sequence contains every nonzero n-bit window exactly once per period.
  std::size_t start = 0;
  for (; start < len; ++start) {
    bool ones = true;
    for (int i = 0; i < n && ones; ++i) ones = back.bit((start + static_cast<std::size_t>(i)) % len);
    if (ones) break;
  }
  if (start == len) throw Error(Errc::invariant, "reversed sequence has no all-ones window");
  PeriodicSeq seq = rotate(back, static_cast<std::int64_t>(start));
  return MSeqRecord{reciprocal(rec.poly), Seed::all_ones(n), std::move(seq)};
}

}  // namespace gsslab
