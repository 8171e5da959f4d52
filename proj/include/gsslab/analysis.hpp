#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsslab/gss.hpp"

namespace gsslab {

// Exact non-negative rational, always stored in lowest terms.
class Fraction {
 public:
  Fraction(std::uint64_t num, std::uint64_t den);

  [[nodiscard]] std::uint64_t num() const { return num_; }
  [[nodiscard]] std::uint64_t den() const { return den_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

// Member indices (family listing positions), ascending.
using MemberSet = std::vector<std::size_t>;

struct FamilyStats {
  int n = 0;
  Gf2Poly poly;
  std::map<std::size_t, std::size_t> period_histogram;  // least period -> count
  MemberSet b_prime;
  std::size_t b_prime_size = 0;
  Fraction short_fraction{0, 1};
  std::size_t coset_count = 0;
  std::vector<MemberSet> cosets;  // ordered by smallest member
};

/// Members with least period < 2^{n-1}. Throws Errc::invariant unless the
/// set is closed under XOR.
MemberSet b_prime(const GssFamily& fam);

/// Throws Errc::invalid_input unless sub contains the zero member and is
/// closed under XOR.
void require_subspace(const GssFamily& fam, const MemberSet& sub);

std::vector<MemberSet> coset_partition(const GssFamily& fam, const MemberSet& sub);

/// { b(g) ^ s : s in sub }, ascending.
MemberSet coset_of(const GssFamily& fam, GVector g, const MemberSet& sub);

FamilyStats compute_stats(const GssFamily& fam);

// The three G-values whose cosets of B' the original argument needed to be distinct.
struct WitnessTriple {
  GVector v1;
  GVector v2;
  GVector v3;
};

/// Defaults for n = 2 (01, 11, 10) and n = 3 (010, 011, 001); none otherwise.
std::optional<WitnessTriple> default_witnesses(int n);

/// Number of distinct sets among b(v1)+B', b(v2)+B', b(v3)+B'.
std::size_t distinct_witness_cosets(const GssFamily& fam, const WitnessTriple& w, const MemberSet& sub);

struct VerifyRow {
  int n = 0;
  Gf2Poly poly;
  std::size_t b_prime_size = 0;
  Fraction fraction{0, 1};
  std::size_t cosets = 0;
  bool worst = false;                           // largest fraction within its degree
  std::optional<std::size_t> witness_cosets;    // n = 2, 3 only
  std::size_t seeds = 1;
};

struct VerifyOptions {
  int jobs = 1;  // 0 = hardware concurrency
  bool all_seeds = false;
};

struct VerifyReport {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<VerifyRow> rows;  // by degree, then mask
  bool pass = true;
  std::optional<VerifyRow> witness;  // first n >= 4 violation
  std::string revised_theorem;
};

/// Exhausts every primitive polynomial of the requested degrees. Rows are
/// in deterministic order regardless of jobs. Throws Errc::out_of_range on a
/// bad range.
VerifyReport verify_revised_theorem(int min_degree, int max_degree, const VerifyOptions& opts = {});

}  // namespace gsslab
