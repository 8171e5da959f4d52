#include "gsslab/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "gsslab/config.hpp"
#include "gsslab/error.hpp"

namespace gsslab {

Fraction::Fraction(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(Errc::invalid_input, "fraction with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Fraction::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

__extension__ using u128 = unsigned __int128;

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const auto lhs = static_cast<u128>(a.num_) * b.den_;
  const auto rhs = static_cast<u128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

namespace {

std::size_t lookup(const GssFamily& fam, const PeriodicSeq& seq) {
  auto idx = fam.find(seq);
  if (!idx) throw Error(Errc::invariant, "family is not closed under XOR: " + seq.to_string() + " missing");
  return *idx;
}

// Empty string when sub is a subspace, else the reason it is not.
std::string subspace_violation(const GssFamily& fam, const MemberSet& sub) {
  std::vector<bool> in(fam.size(), false);
  for (std::size_t i : sub) {
    if (i >= fam.size()) return "member index " + std::to_string(i) + " out of range";
    if (in[i]) return "member index " + std::to_string(i) + " listed twice";
    in[i] = true;
  }
  const bool has_zero = std::any_of(sub.begin(), sub.end(), [&](std::size_t i) { return weight(fam[i].bits) == 0; });
  if (!has_zero) return "subset lacks the all-zeros member";
  for (std::size_t x = 0; x < sub.size(); ++x) {
    for (std::size_t y = x + 1; y < sub.size(); ++y) {
      const PeriodicSeq sum = xor_seq(fam[sub[x]].bits, fam[sub[y]].bits);
      auto idx = fam.find(sum);
      if (!idx || !in[*idx])
        return fam[sub[x]].bits.to_string() + " + " + fam[sub[y]].bits.to_string() + " = " + sum.to_string() +
               " is outside the subset";
    }
  }
  return {};
}

}  // namespace

MemberSet b_prime(const GssFamily& fam) {
  const std::size_t full = fam.member_length();
  MemberSet out;
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (fam[i].least_period < full) out.push_back(i);
  if (auto why = subspace_violation(fam, out); !why.empty())
    throw Error(Errc::invariant, "short-period set of " + render_poly(fam.source().poly) +
                                     " is not a subspace: " + why);
  return out;
}

void require_subspace(const GssFamily& fam, const MemberSet& sub) {
  if (auto why = subspace_violation(fam, sub); !why.empty())
    throw Error(Errc::invalid_input, "not a subspace: " + why);
}

std::vector<MemberSet> coset_partition(const GssFamily& fam, const MemberSet& sub) {
  require_subspace(fam, sub);
  std::vector<bool> assigned(fam.size(), false);
  std::vector<MemberSet> out;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (assigned[i]) continue;
    MemberSet coset;
    coset.reserve(sub.size());
    for (std::size_t s : sub) {
      const std::size_t j = lookup(fam, xor_seq(fam[i].bits, fam[s].bits));
      if (assigned[j]) throw Error(Errc::invariant, "overlapping cosets at member " + std::to_string(j));
      assigned[j] = true;
      coset.push_back(j);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

MemberSet coset_of(const GssFamily& fam, GVector g, const MemberSet& sub) {
  require_subspace(fam, sub);
  if (g.n() != fam.degree())
    throw Error(Errc::invalid_input, "G has " + std::to_string(g.n()) + " coordinates, degree is " +
                                         std::to_string(fam.degree()));
  const PeriodicSeq& base = fam.member(g).bits;
  MemberSet out;
  out.reserve(sub.size());
  for (std::size_t s : sub) out.push_back(lookup(fam, xor_seq(base, fam[s].bits)));
  std::sort(out.begin(), out.end());
  return out;
}

FamilyStats compute_stats(const GssFamily& fam) {
  FamilyStats st;
  st.n = fam.degree();
  st.poly = fam.source().poly;
  for (const auto& m : fam.members()) ++st.period_histogram[m.least_period];
  st.b_prime = b_prime(fam);
  st.b_prime_size = st.b_prime.size();
  st.short_fraction = Fraction{st.b_prime_size, fam.size()};
  st.cosets = coset_partition(fam, st.b_prime);
  st.coset_count = st.cosets.size();
  return st;
}

std::optional<WitnessTriple> default_witnesses(int n) {
  if (n == 2) return WitnessTriple{GVector::parse("01"), GVector::parse("11"), GVector::parse("10")};
  if (n == 3) return WitnessTriple{GVector::parse("010"), GVector::parse("011"), GVector::parse("001")};
  return std::nullopt;
}

std::size_t distinct_witness_cosets(const GssFamily& fam, const WitnessTriple& w, const MemberSet& sub) {
  std::vector<MemberSet> sets{coset_of(fam, w.v1, sub), coset_of(fam, w.v2, sub), coset_of(fam, w.v3, sub)};
  std::sort(sets.begin(), sets.end());
  return static_cast<std::size_t>(std::unique(sets.begin(), sets.end()) - sets.begin());
}

namespace {

VerifyRow analyze_polynomial(int n, Gf2Poly poly, bool all_seeds) {
  VerifyRow row;
  row.n = n;
  row.poly = poly;
  const auto witnesses = default_witnesses(n);
  const std::uint32_t last = all_seeds ? (std::uint32_t{1} << n) - 1 : 1;
  bool first = true;
  for (std::uint32_t s = 1; s <= last; ++s) {
    const Seed seed = all_seeds ? Seed{s, n} : Seed::all_ones(n);
    const GssFamily fam = build_family(generate_mseq(poly, seed));
    const FamilyStats st = compute_stats(fam);
    if (first || st.short_fraction > row.fraction) {
      row.fraction = st.short_fraction;
      row.b_prime_size = st.b_prime_size;
      row.cosets = st.coset_count;
    }
    if (witnesses) {
      const std::size_t d = distinct_witness_cosets(fam, *witnesses, st.b_prime);
      row.witness_cosets = std::max(row.witness_cosets.value_or(0), d);
    }
    first = false;
  }
  row.seeds = last;
  return row;
}

}  // namespace

VerifyReport verify_revised_theorem(int min_degree, int max_degree, const VerifyOptions& opts) {
  const int ceiling = max_supported_degree();
  if (min_degree < kMinDegree || min_degree > max_degree || max_degree > ceiling)
    throw Error(Errc::out_of_range, "need " + std::to_string(kMinDegree) + " <= min <= max <= " +
                                        std::to_string(ceiling) + ", got min=" + std::to_string(min_degree) +
                                        " max=" + std::to_string(max_degree));

  struct Task {
    int n;
    Gf2Poly poly;
  };
  std::vector<Task> tasks;
  for (int n = min_degree; n <= max_degree; ++n)
    for (Gf2Poly p : primitive_polys(n)) tasks.push_back({n, p});

  std::vector<VerifyRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = analyze_polynomial(tasks[i].n, tasks[i].poly, opts.all_seeds);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs) : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerifyReport report;
  report.min_degree = min_degree;
  report.max_degree = max_degree;
  const Fraction bound{1, 4};
  for (int n = min_degree; n <= max_degree; ++n) {
    Fraction worst{0, 1};
    for (const auto& r : rows)
      if (r.n == n) worst = std::max(worst, r.fraction);
    for (auto& r : rows)
      if (r.n == n) r.worst = r.fraction == worst;
  }
  for (const auto& r : rows) {
    if (r.n >= 4 && (r.fraction > bound || r.cosets < 4) && !report.witness) {
      report.pass = false;
      report.witness = r;
    }
  }
  report.rows = std::move(rows);

  if (max_degree < 4) {
    report.revised_theorem = "not exercised (no degree >= 4 in range)";
  } else if (report.pass) {
    report.revised_theorem =
        "holds for " + std::to_string(std::max(4, min_degree)) + "<=n<=" + std::to_string(max_degree);
  } else {
    report.revised_theorem = "violated at n=" + std::to_string(report.witness->n) + " by " +
                             render_poly(report.witness->poly) + " (fraction " +
                             report.witness->fraction.to_string() + ")";
  }
  return report;
}

}  // namespace gsslab
