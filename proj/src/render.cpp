#include "gsslab/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "gsslab/error.hpp"

namespace gsslab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string hex_mask(Gf2Poly p) {
  std::ostringstream os;
  os << "0x" << std::hex << p.mask();
  return os.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string braced(const GssFamily& fam, const MemberSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += fam[set[i]].bits.display();
  }
  return out + "}";
}

std::string header(const GssFamily& fam) {
  return "a = " + fam.source().seq.display() + "   (minimal polynomial " + render_poly(fam.source().poly) +
         ", seed " + fam.source().seed.to_string() + ")\n";
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw Error(Errc::parse, "unknown output format '" + std::string(name) + "' (table|json|csv)");
}

std::string render_primitives(int n, const std::vector<Gf2Poly>& polys, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json j;
      j["degree"] = n;
      j["count"] = polys.size();
      j["polys"] = ordered_json::array();
      for (Gf2Poly p : polys) j["polys"].push_back({{"poly", render_poly(p)}, {"mask", hex_mask(p)}});
      return dump(j);
    }
    case OutputFormat::csv:
      os << "poly,mask\n";
      for (Gf2Poly p : polys) os << render_poly(p) << ',' << hex_mask(p) << '\n';
      return os.str();
    case OutputFormat::table: {
      std::size_t width = 0;
      for (Gf2Poly p : polys) width = std::max(width, render_poly(p).size());
      os << "primitive polynomials of degree " << n << "\n";
      for (Gf2Poly p : polys) os << "  " << std::left << std::setw(static_cast<int>(width)) << render_poly(p)
                                 << "  " << hex_mask(p) << '\n';
      os << "phi(2^" << n << "-1)/" << n << " = " << polys.size() << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_mseq(const MSeqRecord& rec, OutputFormat fmt) {
  const std::string poly = render_poly(rec.poly);
  const std::size_t period = least_period(rec.seq);
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json j;
      j["poly"] = poly;
      j["seed"] = rec.seed.to_string();
      j["bits"] = rec.seq.to_string();
      j["length"] = rec.seq.length();
      j["least_period"] = period;
      return dump(j);
    }
    case OutputFormat::csv:
      os << "poly,seed,bits,length,least_period\n"
         << poly << ',' << rec.seed.to_string() << ',' << rec.seq.to_string() << ',' << rec.seq.length() << ','
         << period << '\n';
      return os.str();
    case OutputFormat::table:
      os << "a = " << rec.seq.display() << '\n'
         << "minimal polynomial: " << poly << '\n'
         << "seed: " << rec.seed.to_string() << '\n'
         << "length: " << rec.seq.length() << ", least period: " << period << ", weight: " << weight(rec.seq)
         << '\n';
      return os.str();
  }
  return {};
}

std::string render_family(const GssFamily& fam, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json j;
      j["poly"] = render_poly(fam.source().poly);
      j["a"] = fam.source().seq.to_string();
      j["members"] = ordered_json::array();
      for (const auto& m : fam.members())
        j["members"].push_back({{"G", m.g.to_string()}, {"bits", m.bits.to_string()}, {"least_period", m.least_period}});
      return dump(j);
    }
    case OutputFormat::csv:
      os << "G,bits,least_period\n";
      for (const auto& m : fam.members()) os << m.g.to_string() << ',' << m.bits.to_string() << ',' << m.least_period << '\n';
      return os.str();
    case OutputFormat::table: {
      os << header(fam) << "B(a): " << fam.size() << " generalized self-shrinking sequences\n";
      const int idx_width = static_cast<int>(std::to_string(fam.size()).size());
      for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto& m = fam[i];
        os << ' ' << std::right << std::setw(idx_width) << (i + 1) << ".  G = (" << m.g.to_string()
           << "), {b(G)} = " << m.bits.display() << "   T = " << m.least_period << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string render_stats(const GssFamily& fam, const FamilyStats& st, OutputFormat fmt) {
  const auto witnesses = default_witnesses(st.n);
  std::vector<std::size_t> coset_id(fam.size(), 0);
  for (std::size_t c = 0; c < st.cosets.size(); ++c)
    for (std::size_t i : st.cosets[c]) coset_id[i] = c + 1;
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json j;
      j["poly"] = render_poly(st.poly);
      j["a"] = fam.source().seq.to_string();
      j["n"] = st.n;
      j["histogram"] = ordered_json::array();
      for (auto [period, count] : st.period_histogram) j["histogram"].push_back({{"period", period}, {"count", count}});
      j["b_prime"] = ordered_json::array();
      for (std::size_t i : st.b_prime) j["b_prime"].push_back(fam[i].bits.to_string());
      j["b_prime_size"] = st.b_prime_size;
      j["fraction"] = st.short_fraction.to_string();
      j["coset_count"] = st.coset_count;
      j["cosets"] = ordered_json::array();
      for (const auto& c : st.cosets) {
        ordered_json block = ordered_json::array();
        for (std::size_t i : c) block.push_back(fam[i].bits.to_string());
        j["cosets"].push_back(std::move(block));
      }
      if (witnesses) {
        j["witnesses"] = {{"v1", witnesses->v1.to_string()},
                          {"v2", witnesses->v2.to_string()},
                          {"v3", witnesses->v3.to_string()},
                          {"distinct_cosets", distinct_witness_cosets(fam, *witnesses, st.b_prime)}};
      }
      return dump(j);
    }
    case OutputFormat::csv: {
      std::vector<bool> in_sub(fam.size(), false);
      for (std::size_t i : st.b_prime) in_sub[i] = true;
      os << "G,bits,least_period,in_b_prime,coset\n";
      for (std::size_t i = 0; i < fam.size(); ++i)
        os << fam[i].g.to_string() << ',' << fam[i].bits.to_string() << ',' << fam[i].least_period << ','
           << (in_sub[i] ? 1 : 0) << ',' << coset_id[i] << '\n';
      return os.str();
    }
    case OutputFormat::table: {
      const std::size_t full = fam.member_length();
      os << header(fam) << "n = " << st.n << ", |B(a)| = " << fam.size() << ", full period 2^" << (st.n - 1)
         << " = " << full << '\n';
      os << "least period histogram:\n";
      for (auto [period, count] : st.period_histogram) os << "  T = " << period << ": " << count << '\n';
      os << "|B'| = " << st.b_prime_size << '\n';
      os << "B' = " << braced(fam, st.b_prime) << '\n';
      os << "fraction with T < " << full << ": " << st.short_fraction.to_string() << '\n';
      os << "cosets of B': " << st.coset_count << '\n';
      for (std::size_t c = 0; c < st.cosets.size(); ++c)
        os << "  coset " << (c + 1) << ": " << braced(fam, st.cosets[c]) << '\n';
      if (witnesses) {
        const auto id = [&](GVector g) { return coset_id[listing_position(g)]; };
        os << "witnesses: b(" << witnesses->v1.to_string() << ")+B' = coset " << id(witnesses->v1) << ", b("
           << witnesses->v2.to_string() << ")+B' = coset " << id(witnesses->v2) << ", b("
           << witnesses->v3.to_string() << ")+B' = coset " << id(witnesses->v3) << "; "
           << distinct_witness_cosets(fam, *witnesses, st.b_prime) << " distinct\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_report(const VerifyReport& report, OutputFormat fmt) {
  std::ostringstream os;
  const char* verdict = report.pass ? "PASS" : "FAIL";
  switch (fmt) {
    case OutputFormat::json: {
      ordered_json j;
      j["rows"] = ordered_json::array();
      for (const auto& r : report.rows) {
        ordered_json row;
        row["n"] = r.n;
        row["poly"] = render_poly(r.poly);
        row["b_prime_size"] = r.b_prime_size;
        row["fraction"] = r.fraction.to_string();
        row["cosets"] = r.cosets;
        row["worst"] = r.worst;
        if (r.witness_cosets) row["witness_cosets"] = *r.witness_cosets;
        if (r.seeds > 1) row["seeds"] = r.seeds;
        j["rows"].push_back(std::move(row));
      }
      j["verdict"] = verdict;
      j["revised_theorem"] = report.revised_theorem;
      if (report.witness)
        j["witness"] = {{"n", report.witness->n},
                        {"poly", render_poly(report.witness->poly)},
                        {"mask", hex_mask(report.witness->poly)},
                        {"fraction", report.witness->fraction.to_string()}};
      return dump(j);
    }
    case OutputFormat::csv:
      os << "n,poly,b_prime_size,fraction,cosets,worst,witness_cosets\n";
      for (const auto& r : report.rows) {
        os << r.n << ',' << render_poly(r.poly) << ',' << r.b_prime_size << ',' << r.fraction.to_string() << ','
           << r.cosets << ',' << (r.worst ? 1 : 0) << ',';
        if (r.witness_cosets) os << *r.witness_cosets;
        os << '\n';
      }
      return os.str();
    case OutputFormat::table: {
      std::size_t width = 4;
      for (const auto& r : report.rows) width = std::max(width, render_poly(r.poly).size());
      const int w = static_cast<int>(width);
      os << std::right << std::setw(3) << "n" << "  " << std::left << std::setw(w) << "poly" << "  " << std::right
         << std::setw(6) << "|B'|" << "  " << std::left << std::setw(10) << "fraction" << std::right
         << std::setw(6) << "cosets" << "  worst  witness cosets\n";
      for (const auto& r : report.rows) {
        std::ostringstream line;
        line << std::right << std::setw(3) << r.n << "  " << std::left << std::setw(w) << render_poly(r.poly) << "  "
             << std::right << std::setw(6) << r.b_prime_size << "  " << std::left << std::setw(10)
             << r.fraction.to_string() << std::right << std::setw(6) << r.cosets << "  " << (r.worst ? "  *  " : "     ");
        if (r.witness_cosets) line << "  " << *r.witness_cosets;
        std::string text = line.str();
        text.erase(text.find_last_not_of(' ') + 1);
        os << text << '\n';
      }
      os << "verdict: " << verdict << '\n' << "revised theorem: " << report.revised_theorem << '\n';
      if (report.witness)
        os << "WITNESS: n=" << report.witness->n << " poly " << render_poly(report.witness->poly) << " ("
           << hex_mask(report.witness->poly) << ") fraction " << report.witness->fraction.to_string() << '\n';
      return os.str();
    }
  }
  return {};
}

}  // namespace gsslab
