#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsslab/sequence.hpp"

namespace gsslab {

// Coefficient vector (g_0, ..., g_{n-1}); bit i of mask is g_i.
class GVector {
 public:
  GVector(std::uint32_t mask, int n);

  /// "010" -> g_0 = 0, g_1 = 1, g_2 = 0.
  static GVector parse(std::string_view text);

  [[nodiscard]] std::uint32_t mask() const { return mask_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] bool coefficient(int i) const { return (mask_ >> i) & 1U; }
  [[nodiscard]] std::string to_string() const;

  friend GVector operator^(GVector a, GVector b);
  friend bool operator==(const GVector&, const GVector&) = default;

 private:
  std::uint32_t mask_;
  int n_;
};

// Family listing order. G = 0 is first; any other G with highest set
// coordinate h sits at the position whose binary digits are 1 g_0 g_1 ... g_{h-1}.
// For n = 3: 000, 100, 010, 110, 001, 011, 101, 111.
std::size_t listing_position(GVector g);
GVector gvector_at(std::size_t position, int n);

/// v_k = sum_i g_i a_{k-i} (cyclic), kept at the positions k where a_k = 1.
/// Throws Errc::invalid_input if g.n() != rec.degree().
PeriodicSeq shrink(const MSeqRecord& rec, GVector g);

struct FamilyMember {
  GVector g;
  PeriodicSeq bits;
  std::size_t least_period;
};

class GssFamily {
 public:
  GssFamily(MSeqRecord source, std::vector<FamilyMember> members);

  [[nodiscard]] const MSeqRecord& source() const { return source_; }
  [[nodiscard]] int degree() const { return source_.degree(); }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] std::size_t member_length() const { return members_.front().bits.length(); }
  [[nodiscard]] const std::vector<FamilyMember>& members() const { return members_; }
  [[nodiscard]] const FamilyMember& operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] const FamilyMember& member(GVector g) const { return members_[listing_position(g)]; }

  /// Listing index of the member equal to seq, if any.
  [[nodiscard]] std::optional<std::size_t> find(const PeriodicSeq& seq) const;

 private:
  MSeqRecord source_;
  std::vector<FamilyMember> members_;
  std::vector<std::pair<std::size_t, std::size_t>> by_hash_;  // (hash, index), sorted
};

/// B(a) in listing order. Throws Errc::invariant if two G give the same sequence.
GssFamily build_family(const MSeqRecord& rec);

/// Throws Errc::invalid_input on length mismatch.
PeriodicSeq xor_members(const PeriodicSeq& s, const PeriodicSeq& t);

}  // namespace gsslab
