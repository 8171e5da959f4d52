#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsslab {

// Polynomial over GF(2) packed into a 64-bit mask, bit i = coefficient of x^i.
class Gf2Poly {
 public:
  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t mask) : mask_(mask) {}

  static constexpr Gf2Poly one() { return Gf2Poly{1}; }
  static constexpr Gf2Poly x() { return Gf2Poly{2}; }

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] constexpr bool is_zero() const { return mask_ == 0; }
  [[nodiscard]] constexpr bool coefficient(int i) const { return (mask_ >> i) & 1U; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const;

  friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) { return Gf2Poly{a.mask_ ^ b.mask_}; }
  friend constexpr auto operator<=>(Gf2Poly, Gf2Poly) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Accepts "x^3+x^2+1" (terms in any order, "x" for x^1, "1" for the
/// constant) or a hex mask "0xD". Throws Errc::parse naming the bad token.
Gf2Poly parse_poly(std::string_view text);

/// Descending exponents, e.g. "x^3+x^2+1". The zero polynomial renders as "0".
std::string render_poly(Gf2Poly p);

/// Full product; throws Errc::out_of_range if the degree would exceed 63.
Gf2Poly mul(Gf2Poly p, Gf2Poly q);

struct DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};
DivMod divmod(Gf2Poly p, Gf2Poly divisor);

Gf2Poly mod(Gf2Poly p, Gf2Poly m);
Gf2Poly mod_mul(Gf2Poly p, Gf2Poly q, Gf2Poly m);
Gf2Poly mod_pow(Gf2Poly base, std::uint64_t e, Gf2Poly m);

// Distinct irreducible factors with multiplicity, ascending by mask. Plain
// trial division; intended for diagnostics on small degrees.
std::vector<std::pair<Gf2Poly, int>> factor(Gf2Poly p);

struct PrimitivityResult {
  bool primitive = false;
  std::string reason;  // empty when primitive
};

/// Throws Errc::invalid_input for degree < 1, Errc::out_of_range above 32.
PrimitivityResult check_primitive(Gf2Poly p);
bool is_primitive(Gf2Poly p);

/// All primitive polynomials of degree n, ascending by mask.
std::vector<Gf2Poly> primitive_polys(int n);

/// x^n p(1/x). Requires a nonzero constant term.
Gf2Poly reciprocal(Gf2Poly p);

/// Distinct prime factors of v, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace gsslab
