#include "gsslab/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "gsslab/config.hpp"
#include "gsslab/error.hpp"

namespace gsslab {

int Gf2Poly::degree() const { return 63 - std::countl_zero(mask_); }

namespace {

std::string trim_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

Gf2Poly parse_hex(std::string_view text, std::string_view original) {
  std::string_view digits = text.substr(2);
  std::uint64_t mask = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mask, 16);
  if (digits.empty() || ec == std::errc::result_out_of_range)
    throw Error(Errc::parse, "malformed hex mask '" + std::string(original) + "'");
  if (ec != std::errc{} || end != digits.data() + digits.size())
    throw Error(Errc::parse, "malformed hex mask '" + std::string(original) + "'");
  if (mask == 0) throw Error(Errc::parse, "zero polynomial '" + std::string(original) + "'");
  return Gf2Poly{mask};
}

// "1" -> 0, "x" -> 1, "x^K" -> K
int parse_term(std::string_view term) {
  const std::string quoted = "'" + std::string(term) + "'";
  if (term.empty()) throw Error(Errc::parse, "missing term (empty '+' operand)");
  if (term == "1") return 0;
  if (term == "x" || term == "X") return 1;
  if (term.size() > 2 && (term[0] == 'x' || term[0] == 'X') && term[1] == '^') {
    std::string_view exp = term.substr(2);
    int e = 0;
    auto [end, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
    if (ec != std::errc{} || end != exp.data() + exp.size() || e < 0)
      throw Error(Errc::parse, "malformed term " + quoted);
    if (e > 63) throw Error(Errc::parse, "exponent too large in term " + quoted);
    return e;
  }
  throw Error(Errc::parse, "malformed term " + quoted);
}

}  // namespace

Gf2Poly parse_poly(std::string_view text) {
  const std::string s = trim_spaces(text);
  if (s.empty()) throw Error(Errc::parse, "empty polynomial");
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) return parse_hex(s, text);

  std::uint64_t mask = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = s.find('+', start);
    std::string_view term =
        std::string_view(s).substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    const int e = parse_term(term);
    const std::uint64_t bit = std::uint64_t{1} << e;
    if (mask & bit) throw Error(Errc::parse, "duplicate term '" + std::string(term) + "'");
    mask |= bit;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return Gf2Poly{mask};
}

std::string render_poly(Gf2Poly p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.degree(); e >= 0; --e) {
    if (!p.coefficient(e)) continue;
    if (!out.empty()) out += '+';
    if (e == 0)
      out += '1';
    else if (e == 1)
      out += 'x';
    else
      out += "x^" + std::to_string(e);
  }
  return out;
}

Gf2Poly mul(Gf2Poly p, Gf2Poly q) {
  if (p.is_zero() || q.is_zero()) return Gf2Poly{};
  if (p.degree() + q.degree() > 63) throw Error(Errc::out_of_range, "product degree exceeds 63");
  std::uint64_t acc = 0;
  std::uint64_t a = p.mask();
  for (std::uint64_t b = q.mask(); b != 0; b >>= 1, a <<= 1)
    if (b & 1U) acc ^= a;
  return Gf2Poly{acc};
}

DivMod divmod(Gf2Poly p, Gf2Poly divisor) {
  if (divisor.is_zero()) throw Error(Errc::invalid_input, "division by the zero polynomial");
  const int dd = divisor.degree();
  std::uint64_t r = p.mask();
  std::uint64_t q = 0;
  for (int d = p.degree(); d >= dd; d = Gf2Poly{r}.degree()) {
    q |= std::uint64_t{1} << (d - dd);
    r ^= divisor.mask() << (d - dd);
  }
  return {Gf2Poly{q}, Gf2Poly{r}};
}

Gf2Poly mod(Gf2Poly p, Gf2Poly m) { return divmod(p, m).remainder; }

Gf2Poly mod_mul(Gf2Poly p, Gf2Poly q, Gf2Poly m) {
  const int n = m.degree();
  if (n < 1) throw Error(Errc::invalid_input, "modulus must have degree >= 1");
  p = mod(p, m);
  q = mod(q, m);
  // Horner over the bits of q, reducing after every shift: acc stays below degree n.
  const std::uint64_t top = std::uint64_t{1} << n;
  std::uint64_t acc = 0;
  for (int i = q.degree(); i >= 0; --i) {
    acc <<= 1;
    if (acc & top) acc ^= m.mask();
    if (q.coefficient(i)) acc ^= p.mask();
  }
  return Gf2Poly{acc};
}

Gf2Poly mod_pow(Gf2Poly base, std::uint64_t e, Gf2Poly m) {
  if (m.degree() < 1) throw Error(Errc::invalid_input, "modulus must have degree >= 1");
  Gf2Poly result = mod(Gf2Poly::one(), m);
  Gf2Poly b = mod(base, m);
  for (; e != 0; e >>= 1) {
    if (e & 1U) result = mod_mul(result, b, m);
    b = mod_mul(b, b, m);
  }
  return result;
}

std::vector<std::pair<Gf2Poly, int>> factor(Gf2Poly p) {
  if (p.degree() < 1) return {};
  std::vector<std::pair<Gf2Poly, int>> out;
  std::uint64_t rest = p.mask();
  // Candidates in ascending mask order: any divisor found is irreducible
  // because its own factors were already divided out.
  for (std::uint64_t d = 2; Gf2Poly{rest}.degree() >= 2 * Gf2Poly{d}.degree(); ++d) {
    int mult = 0;
    while (true) {
      auto [q, r] = divmod(Gf2Poly{rest}, Gf2Poly{d});
      if (!r.is_zero()) break;
      rest = q.mask();
      ++mult;
    }
    if (mult > 0) out.emplace_back(Gf2Poly{d}, mult);
  }
  if (Gf2Poly{rest}.degree() >= 1) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& f) { return f.first.mask() == rest; });
    if (it != out.end())
      ++it->second;
    else
      out.emplace_back(Gf2Poly{rest}, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

namespace {

std::string render_factorization(const std::vector<std::pair<Gf2Poly, int>>& factors) {
  std::string out;
  for (const auto& [f, e] : factors) {
    if (!out.empty()) out += '*';
    out += "(" + render_poly(f) + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

PrimitivityResult check_primitive(Gf2Poly p) {
  const int n = p.degree();
  if (n < 1) throw Error(Errc::invalid_input, "primitivity needs degree >= 1, got " + render_poly(p));
  if (n > kMaxPrimitivityDegree)
    throw Error(Errc::out_of_range, "primitivity test supports degree <= " +
                                        std::to_string(kMaxPrimitivityDegree));

  auto factors = factor(p);
  if (factors.size() > 1 || factors.front().second > 1)
    return {false, "reducible: " + render_factorization(factors)};
  if (!p.coefficient(0)) return {false, "x divides the polynomial"};  // p == x

  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  if (mod_pow(Gf2Poly::x(), order, p) != Gf2Poly::one())
    return {false, "x^(2^" + std::to_string(n) + "-1) != 1"};
  bool exact = true;
  for (std::uint64_t q : prime_factors(order))
    if (mod_pow(Gf2Poly::x(), order / q, p) == Gf2Poly::one()) exact = false;
  if (exact) return {true, {}};

  std::uint64_t actual = order;
  for (std::uint64_t d = 1; d < order; ++d) {
    if (order % d == 0 && mod_pow(Gf2Poly::x(), d, p) == Gf2Poly::one()) {
      actual = d;
      break;
    }
  }
  return {false, "irreducible, but x has order " + std::to_string(actual) + ", not " +
                     std::to_string(order)};
}

bool is_primitive(Gf2Poly p) {
  const int n = p.degree();
  if (n < 1) throw Error(Errc::invalid_input, "primitivity needs degree >= 1, got " + render_poly(p));
  if (n > kMaxPrimitivityDegree)
    throw Error(Errc::out_of_range, "primitivity test supports degree <= " +
                                        std::to_string(kMaxPrimitivityDegree));
  if (!p.coefficient(0)) return false;
  // x of exact order 2^n - 1 modulo p forces p to be irreducible (hence primitive).
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  if (mod_pow(Gf2Poly::x(), order, p) != Gf2Poly::one()) return false;
  for (std::uint64_t q : prime_factors(order))
    if (mod_pow(Gf2Poly::x(), order / q, p) == Gf2Poly::one()) return false;
  return true;
}

std::vector<Gf2Poly> primitive_polys(int n) {
  const int ceiling = max_supported_degree();
  if (n < kMinDegree || n > ceiling)
    throw Error(Errc::out_of_range, "degree " + std::to_string(n) + " outside supported range [" +
                                        std::to_string(kMinDegree) + ", " + std::to_string(ceiling) + "]");
  std::vector<Gf2Poly> out;
  const std::uint64_t lo = std::uint64_t{1} << n;
  for (std::uint64_t m = lo | 1U; m < 2 * lo; m += 2)
    if (is_primitive(Gf2Poly{m})) out.push_back(Gf2Poly{m});
  return out;
}

Gf2Poly reciprocal(Gf2Poly p) {
  if (p.is_zero() || !p.coefficient(0))
    throw Error(Errc::invalid_input, "reciprocal needs a nonzero constant term, got " + render_poly(p));
  const int n = p.degree();
  std::uint64_t out = 0;
  for (int i = 0; i <= n; ++i)
    if (p.coefficient(i)) out |= std::uint64_t{1} << (n - i);
  return Gf2Poly{out};
}

}  // namespace gsslab
