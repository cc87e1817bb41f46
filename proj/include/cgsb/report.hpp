#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "cgsb/basis.hpp"
#include "cgsb/confluence.hpp"
#include "cgsb/rewrite.hpp"
#include "cgsb/rules.hpp"

namespace cgsb {

// Keys keep insertion order so identical runs dump identical bytes.
using Json = nlohmann::ordered_json;

/// Provenance attached to every report. `seconds` is only written when set.
struct RunInfo {
  std::string command;
  std::string preset;
  std::string lie;  // file path or built-in name; empty when not used
  std::optional<double> seconds;
};

Json rational_to_json(const Rational& q);

Json ruleset_json(const RuleSet& rs);
Json trace_json(const Trace& t, const RuleSet& rs);
Json fork_json(const Fork& f, const RuleSet& rs);
/// Failure entry: the fork, g1 - g2, its normal form and the reduction trace.
Json composition_json(const CompositionReport& c, const RuleSet& rs);

Json verify_json(const RunInfo& run, const RuleSet& rs, const VerificationReport& v);
Json completion_json(const RunInfo& run, const RuleSet& input, const RuleSet& output, const CompletionLog& log,
                     const ForkCaps& caps, std::size_t round_cap);
Json nf_json(const RunInfo& run, const RuleSet& rs, const ModuleElement& x, const ModuleElement& nf,
             const Trace* trace);
Json bounds_json(const Bounds& b);
Json counts_json(const GradedCount& c);
Json pbw_json(const RunInfo& run, const PbwReport& r);

}  // namespace cgsb
