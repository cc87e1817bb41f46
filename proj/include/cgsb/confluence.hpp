#pragma once

#include <string>
#include <vector>

#include "cgsb/rewrite.hpp"
#include "cgsb/rules.hpp"

namespace cgsb {

enum class ForkKind {
  algebra_inclusion,  // lhs2 inside lhs1
  algebra_overlap,    // suffix of lhs1 = prefix of lhs2
  module_inclusion,   // algebra lhs inside a module lhs word
  module_overlap,     // algebra lhs sticks out to the left of a module lhs
  module_suffix,      // module lhs2 is a proper suffix of module lhs1
  module_identical,   // two module rules with the same lhs
};

const char* fork_kind_name(ForkKind k);
bool is_module_kind(ForkKind k);

/// An ambiguity and the two rules that rewrite it.
struct Fork {
  ForkKind kind = ForkKind::algebra_overlap;
  Word word;           // algebra ambiguity (algebra kinds)
  ModuleMonomial mono; // module ambiguity (module kinds)
  Match first;
  Match second;
};

struct ForkList {
  std::vector<Fork> forks;
  std::size_t skipped = 0;  // ambiguities of rules within caps whose length exceeds the degree cap
};

struct ForkCaps {
  std::size_t degree_cap = 5;   // max letters in the ambiguity word
  std::uint32_t index_cap = 6;  // max letter index
};

/// Deterministic order: by kind, then ambiguity, then rule tags.
ForkList find_forks(const RuleSet& rs, const ForkCaps& caps);

struct CompositionReport {
  Fork fork;
  bool module = true;
  ModuleElement mod_composition;   // g1 - g2
  ModuleElement mod_normal_form;
  AlgebraElement alg_composition;
  AlgebraElement alg_normal_form;
  bool confluent() const { return module ? mod_normal_form.is_zero() : alg_normal_form.is_zero(); }
};

ModuleElement fork_branch(const Fork& f, bool first);
AlgebraElement fork_branch_algebra(const Fork& f, bool first);

CompositionReport composition(const Fork& f, Reducer& reducer);
CompositionReport composition(const Fork& f, const RuleSet& rs);

struct VerificationReport {
  ForkCaps caps;
  std::size_t forks = 0;
  std::size_t confluent = 0;
  std::size_t skipped = 0;
  std::vector<std::size_t> by_kind = std::vector<std::size_t>(6, 0);
  std::vector<CompositionReport> failures;
  std::size_t algebra_instances = 0;
  std::size_t module_instances = 0;
  bool ok() const { return failures.empty(); }
};

/// Runs composition on every fork within caps. `jobs` threads each with
/// their own reducer; results merged in fork order.
VerificationReport verify_gsb(const RuleSet& rs, const ForkCaps& caps, unsigned jobs = 1);

struct CompletionEvent {
  std::size_t round = 0;
  std::string action;  // "add" | "drop" | "update"
  RuleTag tag;
  std::string source;
  bool module = true;
  Word alg_lhs;
  AlgebraElement alg_rhs;
  ModuleMonomial mod_lhs;
  ModuleElement mod_rhs;
};

struct CompletionLog {
  std::vector<CompletionEvent> events;
  std::size_t rounds = 0;
  bool converged = false;
};

/// Adds oriented normal forms of failed compositions until every fork within
/// caps is confluent, interreducing concrete rules after each round.
/// Returns the partial result with converged=false when round_cap is hit.
std::pair<RuleSet, CompletionLog> complete(const RuleSet& rs, const ForkCaps& caps, std::size_t round_cap,
                                           unsigned jobs = 1);

}  // namespace cgsb
