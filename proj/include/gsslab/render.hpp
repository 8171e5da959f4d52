#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gsslab/analysis.hpp"

namespace gsslab {

enum class OutputFormat { table, json, csv };

OutputFormat parse_format(std::string_view name);

// All renderers return text ending in a newline.
std::string render_primitives(int n, const std::vector<Gf2Poly>& polys, OutputFormat fmt);
std::string render_mseq(const MSeqRecord& rec, OutputFormat fmt);
std::string render_family(const GssFamily& fam, OutputFormat fmt);
std::string render_stats(const GssFamily& fam, const FamilyStats& stats, OutputFormat fmt);
std::string render_report(const VerifyReport& report, OutputFormat fmt);

}  // namespace gsslab
