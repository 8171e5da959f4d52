#include "gsslab/gsslab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "gsslab/analysis.hpp"
#include "gsslab/config.hpp"
#include "gsslab/error.hpp"
#include "gsslab/render.hpp"

struct gsslab_mseq {
  gsslab::MSeqRecord rec;
};

struct gsslab_family {
  gsslab::GssFamily fam;
};

// Keeps its own copy of the family so it can outlive the family handle.
struct gsslab_stats {
  gsslab::GssFamily fam;
  gsslab::FamilyStats stats;
};

struct gsslab_report {
  gsslab::VerifyReport report;
};

namespace {

thread_local std::string last_error;

gsslab_status status_of(gsslab::Errc code) {
  switch (code) {
    case gsslab::Errc::parse: return GSSLAB_E_PARSE;
    case gsslab::Errc::invalid_input: return GSSLAB_E_INVALID;
    case gsslab::Errc::out_of_range: return GSSLAB_E_RANGE;
    case gsslab::Errc::not_primitive: return GSSLAB_E_NOT_PRIMITIVE;
    case gsslab::Errc::invariant: return GSSLAB_E_INVARIANT;
  }
  return GSSLAB_E_INTERNAL;
}

template <typename F>
gsslab_status guarded(F&& body) {
  try {
    body();
    return GSSLAB_OK;
  } catch (const gsslab::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GSSLAB_E_NOMEM;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GSSLAB_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return GSSLAB_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw gsslab::Error(gsslab::Errc::invalid_input, std::string(what) + " is NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gsslab::OutputFormat to_format(gsslab_format fmt) {
  switch (fmt) {
    case GSSLAB_FORMAT_TABLE: return gsslab::OutputFormat::table;
    case GSSLAB_FORMAT_JSON: return gsslab::OutputFormat::json;
    case GSSLAB_FORMAT_CSV: return gsslab::OutputFormat::csv;
  }
  throw gsslab::Error(gsslab::Errc::invalid_input, "unknown output format " + std::to_string(static_cast<int>(fmt)));
}

}  // namespace

extern "C" {

const char* gsslab_last_error(void) { return last_error.c_str(); }

const char* gsslab_status_name(gsslab_status status) {
  switch (status) {
    case GSSLAB_OK: return "ok";
    case GSSLAB_E_PARSE: return "parse error";
    case GSSLAB_E_INVALID: return "invalid input";
    case GSSLAB_E_RANGE: return "out of range";
    case GSSLAB_E_NOT_PRIMITIVE: return "not primitive";
    case GSSLAB_E_INVARIANT: return "invariant violation";
    case GSSLAB_E_NOMEM: return "out of memory";
    case GSSLAB_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void gsslab_string_free(char* s) { std::free(s); }

gsslab_status gsslab_max_degree(int* out) {
  return guarded([&] {
    require(out, "out");
    *out = gsslab::max_supported_degree();
  });
}

gsslab_status gsslab_parse_format(const char* name, gsslab_format* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    switch (gsslab::parse_format(name)) {
      case gsslab::OutputFormat::table: *out = GSSLAB_FORMAT_TABLE; break;
      case gsslab::OutputFormat::json: *out = GSSLAB_FORMAT_JSON; break;
      case gsslab::OutputFormat::csv: *out = GSSLAB_FORMAT_CSV; break;
    }
  });
}

gsslab_status gsslab_poly_parse(const char* text, uint64_t* mask) {
  return guarded([&] {
    require(text, "text");
    require(mask, "mask");
    *mask = gsslab::parse_poly(text).mask();
  });
}

gsslab_status gsslab_poly_render(uint64_t mask, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(gsslab::render_poly(gsslab::Gf2Poly{mask}));
  });
}

gsslab_status gsslab_poly_reciprocal(uint64_t mask, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = gsslab::reciprocal(gsslab::Gf2Poly{mask}).mask();
  });
}

gsslab_status gsslab_poly_is_primitive(uint64_t mask, int* primitive, char** reason) {
  return guarded([&] {
    require(primitive, "primitive");
    const auto result = gsslab::check_primitive(gsslab::Gf2Poly{mask});
    if (reason != nullptr) *reason = copy_string(result.reason);
    *primitive = result.primitive ? 1 : 0;
  });
}

gsslab_status gsslab_primitive_polys(int degree, uint64_t* masks, size_t cap, size_t* count) {
  return guarded([&] {
    require(count, "count");
    if (cap > 0) require(masks, "masks");
    const auto polys = gsslab::primitive_polys(degree);
    for (size_t i = 0; i < polys.size() && i < cap; ++i) masks[i] = polys[i].mask();
    *count = polys.size();
  });
}

gsslab_status gsslab_primitives_render(int degree, gsslab_format fmt, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(gsslab::render_primitives(degree, gsslab::primitive_polys(degree), to_format(fmt)));
  });
}

gsslab_status gsslab_mseq_generate(uint64_t mask, const char* seed, gsslab_mseq** out) {
  return guarded([&] {
    require(out, "out");
    const gsslab::Gf2Poly poly{mask};
    std::optional<gsslab::Seed> s;
    if (seed != nullptr) s = gsslab::Seed::parse(seed, poly.degree());
    *out = new gsslab_mseq{gsslab::generate_mseq(poly, s)};
  });
}

gsslab_status gsslab_mseq_reverse(const gsslab_mseq* rec, gsslab_mseq** out) {
  return guarded([&] {
    require(rec, "rec");
    require(out, "out");
    *out = new gsslab_mseq{gsslab::reverse_mseq(rec->rec)};
  });
}

gsslab_status gsslab_mseq_bits(const gsslab_mseq* rec, char** out) {
  return guarded([&] {
    require(rec, "rec");
    require(out, "out");
    *out = copy_string(rec->rec.seq.to_string());
  });
}

gsslab_status gsslab_mseq_poly(const gsslab_mseq* rec, uint64_t* mask) {
  return guarded([&] {
    require(rec, "rec");
    require(mask, "mask");
    *mask = rec->rec.poly.mask();
  });
}

gsslab_status gsslab_mseq_render(const gsslab_mseq* rec, gsslab_format fmt, char** out) {
  return guarded([&] {
    require(rec, "rec");
    require(out, "out");
    *out = copy_string(gsslab::render_mseq(rec->rec, to_format(fmt)));
  });
}

void gsslab_mseq_free(gsslab_mseq* rec) { delete rec; }

gsslab_status gsslab_least_period(const char* bits, size_t* out) {
  return guarded([&] {
    require(bits, "bits");
    require(out, "out");
    *out = gsslab::least_period(gsslab::PeriodicSeq::from_string(bits));
  });
}

gsslab_status gsslab_family_build(const gsslab_mseq* rec, gsslab_family** out) {
  return guarded([&] {
    require(rec, "rec");
    require(out, "out");
    *out = new gsslab_family{gsslab::build_family(rec->rec)};
  });
}

gsslab_status gsslab_family_size(const gsslab_family* fam, size_t* out) {
  return guarded([&] {
    require(fam, "fam");
    require(out, "out");
    *out = fam->fam.size();
  });
}

gsslab_status gsslab_family_member(const gsslab_family* fam, size_t index, char** g, char** bits,
                                   size_t* least_period) {
  return guarded([&] {
    require(fam, "fam");
    if (index >= fam->fam.size())
      throw gsslab::Error(gsslab::Errc::out_of_range, "member index " + std::to_string(index) + " >= " +
                                                          std::to_string(fam->fam.size()));
    const auto& m = fam->fam[index];
    char* g_out = g != nullptr ? copy_string(m.g.to_string()) : nullptr;
    try {
      if (bits != nullptr) *bits = copy_string(m.bits.to_string());
    } catch (...) {
      std::free(g_out);
      throw;
    }
    if (g != nullptr) *g = g_out;
    if (least_period != nullptr) *least_period = m.least_period;
  });
}

gsslab_status gsslab_family_index_of(const gsslab_family* fam, const char* g, size_t* index) {
  return guarded([&] {
    require(fam, "fam");
    require(g, "g");
    require(index, "index");
    const auto gv = gsslab::GVector::parse(g);
    if (gv.n() != fam->fam.degree())
      throw gsslab::Error(gsslab::Errc::invalid_input, "G has " + std::to_string(gv.n()) + " coordinates, degree is " +
                                                           std::to_string(fam->fam.degree()));
    *index = gsslab::listing_position(gv);
  });
}

gsslab_status gsslab_family_render(const gsslab_family* fam, gsslab_format fmt, char** out) {
  return guarded([&] {
    require(fam, "fam");
    require(out, "out");
    *out = copy_string(gsslab::render_family(fam->fam, to_format(fmt)));
  });
}

void gsslab_family_free(gsslab_family* fam) { delete fam; }

gsslab_status gsslab_coset_of(const gsslab_family* fam, const char* g, const size_t* sub, size_t sub_len,
                              size_t* indices, size_t cap, size_t* count) {
  return guarded([&] {
    require(fam, "fam");
    require(g, "g");
    require(count, "count");
    if (cap > 0) require(indices, "indices");
    gsslab::MemberSet subset;
    if (sub == nullptr)
      subset = gsslab::b_prime(fam->fam);
    else
      subset.assign(sub, sub + sub_len);
    const auto coset = gsslab::coset_of(fam->fam, gsslab::GVector::parse(g), subset);
    for (size_t i = 0; i < coset.size() && i < cap; ++i) indices[i] = coset[i];
    *count = coset.size();
  });
}

gsslab_status gsslab_stats_compute(const gsslab_family* fam, gsslab_stats** out) {
  return guarded([&] {
    require(fam, "fam");
    require(out, "out");
    auto stats = gsslab::compute_stats(fam->fam);
    *out = new gsslab_stats{fam->fam, std::move(stats)};
  });
}

gsslab_status gsslab_stats_b_prime_size(const gsslab_stats* st, size_t* out) {
  return guarded([&] {
    require(st, "st");
    require(out, "out");
    *out = st->stats.b_prime_size;
  });
}

gsslab_status gsslab_stats_fraction(const gsslab_stats* st, uint64_t* num, uint64_t* den) {
  return guarded([&] {
    require(st, "st");
    require(num, "num");
    require(den, "den");
    *num = st->stats.short_fraction.num();
    *den = st->stats.short_fraction.den();
  });
}

gsslab_status gsslab_stats_coset_count(const gsslab_stats* st, size_t* out) {
  return guarded([&] {
    require(st, "st");
    require(out, "out");
    *out = st->stats.coset_count;
  });
}

gsslab_status gsslab_stats_period_count(const gsslab_stats* st, size_t period, size_t* out) {
  return guarded([&] {
    require(st, "st");
    require(out, "out");
    auto it = st->stats.period_histogram.find(period);
    *out = it == st->stats.period_histogram.end() ? 0 : it->second;
  });
}

gsslab_status gsslab_stats_render(const gsslab_stats* st, gsslab_format fmt, char** out) {
  return guarded([&] {
    require(st, "st");
    require(out, "out");
    *out = copy_string(gsslab::render_stats(st->fam, st->stats, to_format(fmt)));
  });
}

void gsslab_stats_free(gsslab_stats* st) { delete st; }

gsslab_status gsslab_verify(int min_degree, int max_degree, int jobs, int all_seeds, gsslab_report** out) {
  return guarded([&] {
    require(out, "out");
    gsslab::VerifyOptions opts;
    opts.jobs = jobs;
    opts.all_seeds = all_seeds != 0;
    *out = new gsslab_report{gsslab::verify_revised_theorem(min_degree, max_degree, opts)};
  });
}

gsslab_status gsslab_report_pass(const gsslab_report* rep, int* pass) {
  return guarded([&] {
    require(rep, "rep");
    require(pass, "pass");
    *pass = rep->report.pass ? 1 : 0;
  });
}

gsslab_status gsslab_report_row_count(const gsslab_report* rep, size_t* out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = rep->report.rows.size();
  });
}

gsslab_status gsslab_report_row(const gsslab_report* rep, size_t i, int* n, uint64_t* mask, uint64_t* num,
                                uint64_t* den, size_t* cosets) {
  return guarded([&] {
    require(rep, "rep");
    if (i >= rep->report.rows.size())
      throw gsslab::Error(gsslab::Errc::out_of_range, "row " + std::to_string(i) + " out of range");
    const auto& r = rep->report.rows[i];
    if (n) *n = r.n;
    if (mask) *mask = r.poly.mask();
    if (num) *num = r.fraction.num();
    if (den) *den = r.fraction.den();
    if (cosets) *cosets = r.cosets;
  });
}

gsslab_status gsslab_report_render(const gsslab_report* rep, gsslab_format fmt, char** out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = copy_string(gsslab::render_report(rep->report, to_format(fmt)));
  });
}

void gsslab_report_free(gsslab_report* rep) { delete rep; }

}  // extern "C"
