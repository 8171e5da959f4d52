#include "gsslab/gss.hpp"

#include <algorithm>
#include <bit>

#include "gsslab/error.hpp"

namespace gsslab {

GVector::GVector(std::uint32_t mask, int n) : mask_(mask), n_(n) {
  if (n < 1 || n > 31) throw Error(Errc::invalid_input, "G dimension must be in [1, 31]");
  if (mask >> n) throw Error(Errc::invalid_input, "G mask has bits beyond dimension " + std::to_string(n));
}

GVector GVector::parse(std::string_view text) {
  if (text.empty() || text.size() > 31) throw Error(Errc::parse, "G must have 1..31 bits");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw Error(Errc::parse, "G uses '0'/'1' only, got '" + std::string(text) + "'");
    if (text[i] == '1') mask |= std::uint32_t{1} << i;
  }
  return GVector{mask, static_cast<int>(text.size())};
}

std::string GVector::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if (coefficient(i)) out[i] = '1';
  return out;
}

GVector operator^(GVector a, GVector b) {
  if (a.n_ != b.n_) throw Error(Errc::invalid_input, "G dimension mismatch");
  return GVector{a.mask_ ^ b.mask_, a.n_};
}

std::size_t listing_position(GVector g) {
  if (g.mask() == 0) return 0;
  const int h = 31 - std::countl_zero(g.mask());
  std::size_t pos = 1;
  for (int i = 0; i < h; ++i) pos = (pos << 1) | (g.coefficient(i) ? 1U : 0U);
  return pos;
}

GVector gvector_at(std::size_t position, int n) {
  if (position >= (std::size_t{1} << n))
    throw Error(Errc::out_of_range, "listing position " + std::to_string(position) + " >= 2^" +
                                        std::to_string(n));
  if (position == 0) return GVector{0, n};
  const int h = 63 - std::countl_zero(static_cast<std::uint64_t>(position));
  std::uint32_t mask = std::uint32_t{1} << h;
  for (int i = 0; i < h; ++i)
    if ((position >> (h - 1 - i)) & 1U) mask |= std::uint32_t{1} << i;
  return GVector{mask, n};
}

PeriodicSeq shrink(const MSeqRecord& rec, GVector g) {
  const int n = rec.degree();
  if (g.n() != n)
    throw Error(Errc::invalid_input, "G has " + std::to_string(g.n()) + " coordinates, degree is " +
                                         std::to_string(n));
  const PeriodicSeq& a = rec.seq;
  const std::size_t len = a.length();
  const std::size_t w = weight(a);
  if (w == 0) throw Error(Errc::invalid_input, "source sequence has no ones");
  PeriodicSeq out(w);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (!a.bit(k)) continue;
    bool v = false;
    for (int i = 0; i < n; ++i) {
      if (!g.coefficient(i)) continue;
      std::size_t idx = k + len - static_cast<std::size_t>(i);
      if (idx >= len) idx -= len;
      v ^= a.bit(idx);
    }
    out.set(pos++, v);
  }
  return out;
}

GssFamily::GssFamily(MSeqRecord source, std::vector<FamilyMember> members)
    : source_(std::move(source)), members_(std::move(members)) {
  by_hash_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) by_hash_.emplace_back(members_[i].bits.hash(), i);
  std::sort(by_hash_.begin(), by_hash_.end());
  for (std::size_t run = 0; run < by_hash_.size();) {
    std::size_t stop = run + 1;
    while (stop < by_hash_.size() && by_hash_[stop].first == by_hash_[run].first) ++stop;
    for (std::size_t j = run; j < stop; ++j) {
      for (std::size_t k = j + 1; k < stop; ++k) {
        const std::size_t a = std::min(by_hash_[j].second, by_hash_[k].second);
        const std::size_t b = std::max(by_hash_[j].second, by_hash_[k].second);
        if (members_[a].bits == members_[b].bits)
          throw Error(Errc::invariant, "duplicate family members: G=" + members_[a].g.to_string() +
                                           " and G=" + members_[b].g.to_string() + " both give " +
                                           members_[a].bits.to_string());
      }
    }
    run = stop;
  }
}

std::optional<std::size_t> GssFamily::find(const PeriodicSeq& seq) const {
  const std::size_t h = seq.hash();
  auto it = std::lower_bound(by_hash_.begin(), by_hash_.end(), std::pair<std::size_t, std::size_t>{h, 0});
  for (; it != by_hash_.end() && it->first == h; ++it)
    if (members_[it->second].bits == seq) return it->second;
  return std::nullopt;
}

GssFamily build_family(const MSeqRecord& rec) {
  const int n = rec.degree();
  const std::size_t count = std::size_t{1} << n;

  // b(G) is linear in G: shrink the unit vectors, combine the rest by XOR.
  std::vector<PeriodicSeq> by_mask;
  by_mask.reserve(count);
  by_mask.emplace_back(weight(rec.seq));
  std::vector<PeriodicSeq> basis;
  for (int i = 0; i < n; ++i) basis.push_back(shrink(rec, GVector{std::uint32_t{1} << i, n}));
  for (std::size_t m = 1; m < count; ++m) {
    const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(m));
    by_mask.push_back(xor_seq(by_mask[m ^ (std::size_t{1} << top)], basis[static_cast<std::size_t>(top)]));
  }

  std::vector<FamilyMember> members;
  members.reserve(count);
  for (std::size_t p = 0; p < count; ++p) {
    const GVector g = gvector_at(p, n);
    PeriodicSeq& bits = by_mask[g.mask()];
    const std::size_t period = least_period(bits);
    members.push_back(FamilyMember{g, std::move(bits), period});
  }
  return GssFamily{rec, std::move(members)};
}

PeriodicSeq xor_members(const PeriodicSeq& s, const PeriodicSeq& t) { return xor_seq(s, t); }

}  // namespace gsslab
