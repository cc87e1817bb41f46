#include "cgsb/confluence.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace cgsb {

const char* fork_kind_name(ForkKind k) {
  switch (k) {
    case ForkKind::algebra_inclusion:
      return "algebra-inclusion";
    case ForkKind::algebra_overlap:
      return "algebra-overlap";
    case ForkKind::module_inclusion:
      return "module-inclusion";
    case ForkKind::module_overlap:
      return "module-overlap";
    case ForkKind::module_suffix:
      return "module-suffix";
    case ForkKind::module_identical:
      return "module-identical";
  }
  return "?";
}

bool is_module_kind(ForkKind k) { return k != ForkKind::algebra_inclusion && k != ForkKind::algebra_overlap; }

namespace {

struct LetterHash {
  std::size_t operator()(Letter p) const noexcept { return std::hash<std::uint32_t>{}(p.bits()); }
};

Match amatch(const std::shared_ptr<const AlgebraRule>& r, std::size_t pos) { return Match{pos, r->lhs.size(), r, nullptr}; }
Match mmatch(const std::shared_ptr<const ModuleRule>& r, std::size_t pos) {
  return Match{pos, r->lhs.word.size(), nullptr, r};
}

bool equal_range_at(const Word& a, std::size_t from, const Word& b, std::size_t len) {
  return std::equal(a.begin() + static_cast<std::ptrdiff_t>(from), a.begin() + static_cast<std::ptrdiff_t>(from + len),
                    b.begin());
}

bool fork_less(const Fork& x, const Fork& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (is_module_kind(x.kind)) {
    if (x.mono != y.mono) return x.mono < y.mono;
  } else if (x.word != y.word) {
    return x.word < y.word;
  }
  auto key = [](const Fork& f) {
    return std::tuple(f.first.tag().family, f.first.tag().binding, f.first.pos, f.second.tag().family,
                      f.second.tag().binding, f.second.pos);
  };
  return key(x) < key(y);
}

}  // namespace

ForkList find_forks(const RuleSet& rs, const ForkCaps& caps) {
  const Caps rc{caps.index_cap, caps.degree_cap};
  const auto A = rs.algebra_instances(rc);
  const auto M = rs.module_instances(rc);
  const std::size_t D = caps.degree_cap;

  std::unordered_map<Letter, std::vector<std::size_t>, LetterHash> a_first, m_first;
  for (std::size_t i = 0; i < A.size(); ++i) a_first[A[i]->lhs.front()].push_back(i);
  std::unordered_map<ModuleMonomial, std::vector<std::size_t>, MonomialHash> m_by_lhs;
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (!M[i]->lhs.word.empty()) m_first[M[i]->lhs.word.front()].push_back(i);
    m_by_lhs[M[i]->lhs].push_back(i);
  }
  auto starting_with = [](const auto& index, Letter p) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> none;
    auto it = index.find(p);
    return it == index.end() ? none : it->second;
  };

  ForkList out;
  for (std::size_t i1 = 0; i1 < A.size(); ++i1) {
    const Word& u1 = A[i1]->lhs;
    for (std::size_t pos = 0; pos < u1.size(); ++pos) {
      for (std::size_t i2 : starting_with(a_first, u1[pos])) {
        const Word& u2 = A[i2]->lhs;
        if (pos == 0 && i2 == i1) continue;
        if (u2.size() > u1.size() - pos || !matches_at(u1, pos, u2)) continue;
        if (pos == 0 && u2.size() == u1.size() && i2 < i1) continue;
        Fork f{ForkKind::algebra_inclusion, u1, {}, amatch(A[i1], 0), amatch(A[i2], pos)};
        out.forks.push_back(std::move(f));
      }
    }
    for (std::size_t j = 1; j < u1.size(); ++j) {
      const std::size_t k = u1.size() - j;
      for (std::size_t i2 : starting_with(a_first, u1[j])) {
        const Word& u2 = A[i2]->lhs;
        if (u2.size() <= k || !equal_range_at(u1, j, u2, k)) continue;
        if (u1.size() + u2.size() - k > D) {
          ++out.skipped;
          continue;
        }
        Word w = concat(u1, subword(u2, k, u2.size() - k));
        out.forks.push_back(Fork{ForkKind::algebra_overlap, std::move(w), {}, amatch(A[i1], 0), amatch(A[i2], j)});
      }
      for (std::size_t im : starting_with(m_first, u1[j])) {
        const Word& u2 = M[im]->lhs.word;
        if (u2.size() < k || !equal_range_at(u1, j, u2, k)) continue;
        if (j + u2.size() > D) {
          ++out.skipped;
          continue;
        }
        ModuleMonomial w{concat(subword(u1, 0, j), u2), M[im]->lhs.gen};
        out.forks.push_back(Fork{ForkKind::module_overlap, {}, std::move(w), amatch(A[i1], 0), mmatch(M[im], j)});
      }
    }
  }

  for (std::size_t i1 = 0; i1 < M.size(); ++i1) {
    const ModuleMonomial& m1 = M[i1]->lhs;
    const Word& u = m1.word;
    for (std::size_t pos = 0; pos < u.size(); ++pos)
      for (std::size_t i2 : starting_with(a_first, u[pos]))
        if (matches_at(u, pos, A[i2]->lhs))
          out.forks.push_back(Fork{ForkKind::module_inclusion, {}, m1, mmatch(M[i1], 0), amatch(A[i2], pos)});
    for (std::size_t pos = 1; pos <= u.size(); ++pos) {
      auto it = m_by_lhs.find(ModuleMonomial{subword(u, pos, u.size() - pos), m1.gen});
      if (it == m_by_lhs.end()) continue;
      for (std::size_t i2 : it->second)
        out.forks.push_back(Fork{ForkKind::module_suffix, {}, m1, mmatch(M[i1], 0), mmatch(M[i2], pos)});
    }
  }
  for (const auto& [lhs, ids] : m_by_lhs)
    for (std::size_t x = 0; x < ids.size(); ++x)
      for (std::size_t y = x + 1; y < ids.size(); ++y)
        out.forks.push_back(Fork{ForkKind::module_identical, {}, lhs, mmatch(M[ids[x]], 0), mmatch(M[ids[y]], 0)});

  std::sort(out.forks.begin(), out.forks.end(), fork_less);
  return out;
}

ModuleElement fork_branch(const Fork& f, bool first) { return apply_match(f.mono, first ? f.first : f.second); }

AlgebraElement fork_branch_algebra(const Fork& f, bool first) {
  return apply_match(f.word, first ? f.first : f.second);
}

CompositionReport composition(const Fork& f, Reducer& reducer) {
  CompositionReport r;
  r.fork = f;
  r.module = is_module_kind(f.kind);
  if (r.module) {
    r.mod_composition = fork_branch(f, true);
    r.mod_composition -= fork_branch(f, false);
    r.mod_normal_form = reducer.normal_form(r.mod_composition);
  } else {
    r.alg_composition = fork_branch_algebra(f, true);
    r.alg_composition -= fork_branch_algebra(f, false);
    r.alg_normal_form = reducer.normal_form(r.alg_composition);
  }
  return r;
}

CompositionReport composition(const Fork& f, const RuleSet& rs) {
  Reducer reducer(rs);
  return composition(f, reducer);
}

namespace {

// Runs fn(i, reducer) over [0, n) on `jobs` threads, each with its own reducer.
template <class Fn>
void parallel_compositions(const RuleSet& rs, std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    Reducer red(rs);
    for (std::size_t i = 0; i < n; ++i) fn(i, red);
    return;
  }
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t]() {
      try {
        Reducer red(rs);
        for (std::size_t i = t; i < n; i += jobs) fn(i, red);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::string fork_source(const Fork& f) {
  return std::string(fork_kind_name(f.kind)) + " " + f.first.tag().text() + " / " + f.second.tag().text();
}

}  // namespace

VerificationReport verify_gsb(const RuleSet& rs, const ForkCaps& caps, unsigned jobs) {
  VerificationReport rep;
  rep.caps = caps;
  const Caps rc{caps.index_cap, caps.degree_cap};
  rep.algebra_instances = rs.algebra_instances(rc).size();
  rep.module_instances = rs.module_instances(rc).size();
  ForkList fl = find_forks(rs, caps);
  rep.forks = fl.forks.size();
  rep.skipped = fl.skipped;
  for (const auto& f : fl.forks) ++rep.by_kind[static_cast<std::size_t>(f.kind)];

  std::vector<char> failed(fl.forks.size(), 0);
  std::vector<CompositionReport> reports(fl.forks.size());
  parallel_compositions(rs, fl.forks.size(), jobs, [&](std::size_t i, Reducer& red) {
    CompositionReport r = composition(fl.forks[i], red);
    if (!r.confluent()) {
      failed[i] = 1;
      reports[i] = std::move(r);
    }
  });
  for (std::size_t i = 0; i < fl.forks.size(); ++i) {
    if (failed[i])
      rep.failures.push_back(std::move(reports[i]));
    else
      ++rep.confluent;
  }
  return rep;
}

namespace {

struct Candidate {
  bool module = true;
  ModuleElement m;
  AlgebraElement a;
  bool annihilator = false;
  std::string source;
};

CompletionEvent event_for(std::size_t round, const std::string& action, const ModuleRule& r,
                          const std::string& source) {
  CompletionEvent e;
  e.round = round;
  e.action = action;
  e.tag = r.tag;
  e.source = source;
  e.module = true;
  e.mod_lhs = r.lhs;
  e.mod_rhs = r.rhs;
  return e;
}

CompletionEvent event_for(std::size_t round, const std::string& action, const AlgebraRule& r,
                          const std::string& source) {
  CompletionEvent e;
  e.round = round;
  e.action = action;
  e.tag = r.tag;
  e.source = source;
  e.module = false;
  e.alg_lhs = r.lhs;
  e.alg_rhs = r.rhs;
  return e;
}

// Reduces and orients a candidate against the current set; adds it when
// the normal form is nonzero.
void add_candidate(RuleSet& cur, const Candidate& c, std::size_t round, std::size_t& counter, CompletionLog& log) {
  Reducer red(cur);
  RuleTag tag{"derived", "r" + std::to_string(round) + "." + std::to_string(++counter)};
  if (c.module) {
    ModuleElement q = red.normal_form(c.m);
    if (q.is_zero()) return;
    ModuleRule r = orient(q, cur.order(), tag);
    log.events.push_back(event_for(round, "add", r, c.source));
    cur.add_rule(std::move(r));
  } else {
    AlgebraElement q = red.normal_form(c.a);
    if (q.is_zero()) return;
    AlgebraRule r = orient(q, cur.order(), tag);
    r.annihilator = c.annihilator;
    log.events.push_back(event_for(round, "add", r, c.source));
    cur.add_rule(std::move(r));
  }
}

void interreduce(RuleSet& cur, std::size_t round, std::size_t& counter, CompletionLog& log) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : cur.module_rules()) {
      cur.remove_rule(r->lhs);
      if (!cur.first_match(r->lhs)) {
        cur.add_rule(*r);
        continue;
      }
      log.events.push_back(event_for(round, "drop", *r, "lhs reducible"));
      Candidate c;
      c.m = ModuleElement(r->lhs);
      c.m -= r->rhs;
      c.source = "re-added from " + r->tag.text();
      add_candidate(cur, c, round, counter, log);
      changed = true;
    }
    for (const auto& r : cur.algebra_rules()) {
      cur.remove_rule(r->lhs);
      if (!cur.first_match(r->lhs)) {
        cur.add_rule(*r);
        continue;
      }
      log.events.push_back(event_for(round, "drop", *r, "lhs reducible"));
      Candidate c;
      c.module = false;
      c.a = AlgebraElement(r->lhs);
      c.a -= r->rhs;
      c.annihilator = r->annihilator;
      c.source = "re-added from " + r->tag.text();
      add_candidate(cur, c, round, counter, log);
      changed = true;
    }
  }

  // Right-hand sides: a rule never applies inside monomials below its own lhs,
  // so one reducer over the final set serves every rule.
  std::vector<ModuleRule> mod_updates;
  std::vector<AlgebraRule> alg_updates;
  {
    Reducer red(cur);
    for (const auto& r : cur.module_rules()) {
      ModuleElement rhs = red.normal_form(r->rhs);
      if (rhs != r->rhs) mod_updates.push_back(ModuleRule{r->lhs, std::move(rhs), r->tag});
    }
    for (const auto& r : cur.algebra_rules()) {
      AlgebraElement rhs = red.normal_form(r->rhs);
      if (rhs != r->rhs) alg_updates.push_back(AlgebraRule{r->lhs, std::move(rhs), r->tag, r->annihilator});
    }
  }
  for (auto& r : mod_updates) {
    cur.remove_rule(r.lhs);
    log.events.push_back(event_for(round, "update", r, "rhs normalized"));
    cur.add_rule(std::move(r));
  }
  for (auto& r : alg_updates) {
    cur.remove_rule(r.lhs);
    log.events.push_back(event_for(round, "update", r, "rhs normalized"));
    cur.add_rule(std::move(r));
  }
}

}  // namespace

std::pair<RuleSet, CompletionLog> complete(const RuleSet& rs, const ForkCaps& caps, std::size_t round_cap,
                                           unsigned jobs) {
  RuleSet cur = rs;
  CompletionLog log;
  std::size_t counter = 0;
  for (std::size_t round = 1; round <= round_cap; ++round) {
    log.rounds = round;
    ForkList fl = find_forks(cur, caps);
    std::vector<CompositionReport> reports(fl.forks.size());
    std::vector<char> failed(fl.forks.size(), 0);
    parallel_compositions(cur, fl.forks.size(), jobs, [&](std::size_t i, Reducer& red) {
      CompositionReport r = composition(fl.forks[i], red);
      if (!r.confluent()) {
        failed[i] = 1;
        reports[i] = std::move(r);
      }
    });

    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < fl.forks.size(); ++i) {
      if (!failed[i]) continue;
      const auto& r = reports[i];
      Candidate c;
      c.module = r.module;
      c.source = fork_source(r.fork);
      if (r.module) {
        c.m = r.mod_normal_form;
      } else {
        c.a = r.alg_normal_form;
        c.annihilator = (r.fork.first.arule && r.fork.first.arule->annihilator) ||
                        (r.fork.second.arule && r.fork.second.arule->annihilator);
      }
      cands.push_back(std::move(c));
    }
    if (cands.empty()) {
      log.converged = true;
      break;
    }
    const Order o = cur.order();
    std::stable_sort(cands.begin(), cands.end(), [o](const Candidate& x, const Candidate& y) {
      if (x.module != y.module) return !x.module;
      if (x.module) return compare_module_monomials(leading(x.m, o).first, leading(y.m, o).first, o) < 0;
      return compare_words(leading(x.a, o).first, leading(y.a, o).first, o) < 0;
    });
    for (const auto& c : cands) add_candidate(cur, c, round, counter, log);
    interreduce(cur, round, counter, log);
  }
  return {std::move(cur), std::move(log)};
}

}  // namespace cgsb
