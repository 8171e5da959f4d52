// gsslab command-line front end. Talks to the library only through gsslab.h.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gsslab/gsslab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct StringFree {
  void operator()(char* s) const { gsslab_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct MseqFree {
  void operator()(gsslab_mseq* p) const { gsslab_mseq_free(p); }
};
struct FamilyFree {
  void operator()(gsslab_family* p) const { gsslab_family_free(p); }
};
struct StatsFree {
  void operator()(gsslab_stats* p) const { gsslab_stats_free(p); }
};
struct ReportFree {
  void operator()(gsslab_report* p) const { gsslab_report_free(p); }
};

// Thrown on a non-OK status; carries the exit code it maps to.
struct Failure {
  int exit_code;
};

void check(gsslab_status st) {
  if (st == GSSLAB_OK) return;
  std::fprintf(stderr, "gsslab: %s: %s\n", gsslab_status_name(st), gsslab_last_error());
  const bool internal = st == GSSLAB_E_INVARIANT || st == GSSLAB_E_NOMEM || st == GSSLAB_E_INTERNAL;
  throw Failure{internal ? kExitInternal : kExitUsage};
}

void emit(char* text) {
  OwnedString owned{text};
  std::fputs(owned.get(), stdout);
}

std::unique_ptr<gsslab_mseq, MseqFree> load_mseq(const std::string& poly_text, const std::optional<std::string>& seed,
                                                 bool reverse) {
  uint64_t mask = 0;
  check(gsslab_poly_parse(poly_text.c_str(), &mask));
  gsslab_mseq* raw = nullptr;
  check(gsslab_mseq_generate(mask, seed ? seed->c_str() : nullptr, &raw));
  std::unique_ptr<gsslab_mseq, MseqFree> rec{raw};
  if (reverse) {
    gsslab_mseq* rev = nullptr;
    check(gsslab_mseq_reverse(rec.get(), &rev));
    rec.reset(rev);
  }
  return rec;
}

std::unique_ptr<gsslab_family, FamilyFree> load_family(const gsslab_mseq* rec) {
  gsslab_family* raw = nullptr;
  check(gsslab_family_build(rec, &raw));
  return std::unique_ptr<gsslab_family, FamilyFree>{raw};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized self-shrinking sequence families over primitive GF(2) polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  int degree = 0;
  auto* primitives = app.add_subcommand("primitives", "List primitive polynomials of one degree");
  primitives->add_option("--degree", degree, "Polynomial degree")->required();

  std::string poly;
  std::optional<std::string> seed;
  bool reverse = false;

  auto* mseq = app.add_subcommand("mseq", "Generate one period of the m-sequence");
  mseq->add_option("--poly", poly, "Polynomial, e.g. x^3+x^2+1 or 0xD")->required();
  mseq->add_option("--seed", seed, "Initial bits a_0..a_{n-1} (default all ones)");

  auto* family = app.add_subcommand("family", "List the 2^n generalized self-shrinking sequences B(a)");
  family->add_option("--poly", poly, "Polynomial, e.g. x^3+x^2+1 or 0xD")->required();
  family->add_option("--seed", seed, "Initial bits a_0..a_{n-1} (default all ones)");
  family->add_flag("--reverse", reverse, "Use the time-reversed m-sequence");

  auto* analyze = app.add_subcommand("analyze", "Period histogram, B' and its cosets");
  analyze->add_option("--poly", poly, "Polynomial, e.g. x^3+x^2+1 or 0xD")->required();
  analyze->add_option("--seed", seed, "Initial bits a_0..a_{n-1} (default all ones)");
  analyze->add_flag("--reverse", reverse, "Use the time-reversed m-sequence");

  int min_degree = 2;
  int max_degree = 12;
  int jobs = 1;
  bool all_seeds = false;
  auto* verify = app.add_subcommand("verify", "Check the 1/4 bound over every primitive polynomial in a degree range");
  verify->add_option("--min", min_degree, "Smallest degree")->capture_default_str();
  verify->add_option("--max", max_degree, "Largest degree")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();
  verify->add_flag("--all-seeds", all_seeds, "Sweep every nonzero seed instead of all ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    gsslab_format fmt = GSSLAB_FORMAT_TABLE;
    check(gsslab_parse_format(format_name.c_str(), &fmt));
    char* text = nullptr;

    if (*primitives) {
      check(gsslab_primitives_render(degree, fmt, &text));
      emit(text);
      return kExitOk;
    }
    if (*mseq) {
      auto rec = load_mseq(poly, seed, false);
      check(gsslab_mseq_render(rec.get(), fmt, &text));
      emit(text);
      return kExitOk;
    }
    if (*family) {
      auto rec = load_mseq(poly, seed, reverse);
      auto fam = load_family(rec.get());
      check(gsslab_family_render(fam.get(), fmt, &text));
      emit(text);
      return kExitOk;
    }
    if (*analyze) {
      auto rec = load_mseq(poly, seed, reverse);
      auto fam = load_family(rec.get());
      gsslab_stats* raw = nullptr;
      check(gsslab_stats_compute(fam.get(), &raw));
      std::unique_ptr<gsslab_stats, StatsFree> stats{raw};
      check(gsslab_stats_render(stats.get(), fmt, &text));
      emit(text);
      return kExitOk;
    }
    if (*verify) {
      gsslab_report* raw = nullptr;
      check(gsslab_verify(min_degree, max_degree, jobs, all_seeds ? 1 : 0, &raw));
      std::unique_ptr<gsslab_report, ReportFree> report{raw};
      check(gsslab_report_render(report.get(), fmt, &text));
      emit(text);
      int pass = 0;
      check(gsslab_report_pass(report.get(), &pass));
      if (!pass) std::fputs("gsslab: revised bound violated, see witness above\n", stderr);
      return pass ? kExitOk : kExitFail;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
