#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vghjudge/gsl.hpp"
#include "vghjudge/vgh.hpp"

namespace vghjudge {

struct ComparisonResult {
  std::vector<GslReport> reports;  // one per hierarchy, shared config
  // Names ordered by ascending score; exact ties keep input order.
  std::vector<std::string> ranking;
  struct LevelWinner {
    int level = 0;
    std::string vgh;  // smallest raw score among hierarchies having this level
  };
  std::vector<LevelWinner> per_level_winner;
};

ComparisonResult compare_reports(std::vector<GslReport> reports);

enum class FindingKind : std::uint8_t { peak, unbalanced, unresolved, sister_term, near_synonym };
enum class Severity : std::uint8_t { warn, error };
std::string_view to_string(FindingKind kind);
std::string_view to_string(Severity severity);

struct LintFinding {
  FindingKind kind;
  std::string location;  // node or level reference
  std::string detail;
  Severity severity = Severity::warn;
};

struct LintOptions {
  // Level-1 transitions losing less than this are flagged privacy-weak.
  double privacy_floor = 0.02;
};

// `original` is the tree as parsed (pre-balance), for shallow-leaf reporting.
std::vector<LintFinding> lint_report(const Vgh& original, const GslReport& r,
                                     const LintOptions& opts);

// Text and CSV render numbers half-away-from-zero to four decimals;
// JSON carries full precision.
std::string render_text(const GslReport& r);
std::string render_text(const ComparisonResult& c);
std::string render_text(const std::vector<LintFinding>& findings);
std::string render_json(const GslReport& r);
std::string render_json(const ComparisonResult& c);
std::string render_json(const std::vector<LintFinding>& findings);
std::string render_csv(const GslReport& r);
// One row per (hierarchy, level): vgh,level,raw_level_gsl,weight,contribution
std::string render_csv(const ComparisonResult& c);

}  // namespace vghjudge
