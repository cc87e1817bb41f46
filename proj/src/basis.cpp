#include "cgsb/basis.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cgsb/presets.hpp"
#include "cgsb/text_io.hpp"

namespace cgsb {

std::vector<ModuleMonomial> enumerate_monomials(const Alphabet& al, const Bounds& b, Order o) {
  const std::uint32_t top = b.index_sum_cap ? *b.index_sum_cap : b.index_cap;
  std::vector<Letter> decorated;
  for (std::uint32_t n = 0; n <= top; ++n)
    for (std::uint32_t a = 0; a < al.size(); ++a) {
      decorated.push_back(Letter::L(n, a));
      decorated.push_back(Letter::R(n, a));
    }
  std::vector<Generator> gens;
  if (al.has_central()) gens.push_back(Generator::central());
  for (std::size_t a = 0; a < al.size(); ++a) gens.push_back(Generator{static_cast<int>(a)});

  std::vector<ModuleMonomial> out;
  if (b.x_degree == 0) return out;
  Word w;
  std::function<void(std::size_t, std::size_t, std::uint32_t)> grow = [&](std::size_t deco, std::size_t ds,
                                                                          std::uint32_t isum) {
    for (Generator g : gens) out.push_back(ModuleMonomial{w, g});
    if (ds < b.d_power) {
      w.push_back(Letter::partial());
      grow(deco, ds + 1, isum);
      w.pop_back();
    }
    if (deco + 1 < b.x_degree) {
      for (Letter p : decorated) {
        std::uint32_t s = isum + p.index();
        if (b.index_sum_cap && s > *b.index_sum_cap) continue;
        w.push_back(p);
        grow(deco + 1, ds, s);
        w.pop_back();
      }
    }
  };
  grow(0, 0, 0);
  std::sort(out.begin(), out.end(),
            [o](const ModuleMonomial& x, const ModuleMonomial& y) { return compare_module_monomials(x, y, o) < 0; });
  return out;
}

std::vector<ModuleMonomial> enumerate_terminal(const RuleSet& rs, const Bounds& b) {
  std::vector<ModuleMonomial> out;
  for (auto& m : enumerate_monomials(rs.alphabet(), b, rs.order()))
    if (!rs.first_match(m)) out.push_back(std::move(m));
  return out;
}

namespace {

// Non-decreasing sequences over [lo, hi] of length k.
void for_each_chain(std::size_t k, std::size_t lo, std::size_t hi, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> seq;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (seq.size() == k) {
      fn(seq);
      return;
    }
    for (std::size_t v = from; v <= hi; ++v) {
      seq.push_back(v);
      rec(v);
      seq.pop_back();
    }
  };
  if (k == 0 || lo <= hi) rec(lo);
}

Word letters(std::uint32_t n, const std::vector<std::size_t>& decos) {
  Word w;
  for (auto a : decos) w.push_back(Letter::L(n, static_cast<std::uint32_t>(a)));
  return w;
}

Word dpow(std::size_t s) { return Word(s, Letter::partial()); }

std::vector<ModuleMonomial> sorted(std::set<ModuleMonomial> s) {
  std::vector<ModuleMonomial> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(),
            [](const ModuleMonomial& x, const ModuleMonomial& y) { return compare_module_monomials(x, y) < 0; });
  return out;
}

Generator gen(std::size_t z) { return Generator{static_cast<int>(z)}; }

}  // namespace

std::vector<ModuleMonomial> comconf3_pattern(std::size_t y_count, const Bounds& b) {
  std::set<ModuleMonomial> out;
  if (y_count == 0 || b.x_degree == 0) return {};
  const std::size_t D = b.x_degree, Y = y_count - 1;
  const std::uint32_t cap = b.index_sum_cap ? *b.index_sum_cap : b.index_cap;
  auto fits = [&](const Word& w) {
    if (x_degree(w) + 1 > D || d_power(w) > b.d_power) return false;
    return b.index_sum_cap ? index_sum(w) <= cap : max_index(w) <= cap;
  };
  auto add = [&](Word w, std::size_t z) {
    if (fits(w)) out.insert(ModuleMonomial{std::move(w), gen(z)});
  };
  for (std::size_t n = 0; n + 1 <= D; ++n) {
    for_each_chain(n, 0, Y, [&](const std::vector<std::size_t>& x) {
      Word w0 = letters(0, x);
      // families 1-3 share the L_1 chain y_1 <= ... <= y_m <= z
      for (std::size_t m = 0; n + m + 1 <= D; ++m) {
        for_each_chain(m, 0, Y, [&](const std::vector<std::size_t>& y) {
          Word w1 = concat(w0, letters(1, y));
          const std::size_t ymax = m ? y.back() : 0;
          for (std::size_t z = ymax; z <= Y; ++z) {
            for (std::size_t u = z; u <= Y; ++u) add(concat(w1, {Letter::L(2, static_cast<std::uint32_t>(z))}), u);
            for (std::size_t s = 1; s <= b.d_power; ++s) add(concat(w1, dpow(s)), z);
            if (m != 1) add(w1, z);
          }
        });
      }
      for (std::size_t y = 0; y <= Y; ++y)
        for (std::size_t z = 0; z <= Y; ++z)
          if (n == 0 || x.back() <= y || y <= z) add(concat(w0, {Letter::L(1, static_cast<std::uint32_t>(y))}), z);
    });
  }
  return sorted(std::move(out));
}

std::vector<ModuleMonomial> comconf2_pattern(std::size_t y_count, const Bounds& b) {
  std::set<ModuleMonomial> out;
  if (y_count == 0 || b.x_degree == 0) return {};
  const std::size_t D = b.x_degree, Y = y_count - 1;
  const std::uint32_t cap = b.index_sum_cap ? *b.index_sum_cap : b.index_cap;
  auto fits = [&](const Word& w) {
    if (x_degree(w) + 1 > D || d_power(w) > b.d_power) return false;
    return b.index_sum_cap ? index_sum(w) <= cap : max_index(w) <= cap;
  };
  for (std::size_t n = 0; n + 1 <= D; ++n) {
    for_each_chain(n, 0, Y, [&](const std::vector<std::size_t>& x) {
      Word w0 = letters(0, x);
      for (std::size_t z = 0; z <= Y; ++z) {
        for (std::size_t s = 0; s <= b.d_power; ++s) {
          Word w = concat(w0, dpow(s));
          if (fits(w)) out.insert(ModuleMonomial{w, gen(z)});
        }
        if (n && x.back() > z) continue;
        for (std::size_t y = 0; y < z; ++y) {
          Word w = concat(w0, {Letter::L(1, static_cast<std::uint32_t>(y))});
          if (fits(w)) out.insert(ModuleMonomial{w, gen(z)});
        }
      }
    });
  }
  return sorted(std::move(out));
}

GradedCount count_by_degree(const std::vector<ModuleMonomial>& ms) {
  GradedCount c;
  for (const auto& m : ms) ++c[x_degree(m)];
  return c;
}

RelationSpan::RelationSpan(const RuleSet& relations, const Bounds& target, OracleOptions opt) {
  Bounds wide = target;
  wide.d_power += opt.d_headroom;
  monomials_ = enumerate_monomials(relations.alphabet(), wide, relations.order());
  std::stable_partition(monomials_.begin(), monomials_.end(),
                        [&](const ModuleMonomial& m) { return d_power(m.word) <= target.d_power; });
  inside_ = static_cast<std::size_t>(std::count_if(monomials_.begin(), monomials_.end(), [&](const ModuleMonomial& m) {
    return d_power(m.word) <= target.d_power;
  }));
  for (std::size_t i = 0; i < monomials_.size(); ++i) column_.emplace(monomials_[i], i);

  std::vector<std::size_t> by_degree(monomials_.size());
  for (std::size_t i = 0; i < by_degree.size(); ++i) by_degree[i] = i;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t x, std::size_t y) { return x_degree(monomials_[x]) < x_degree(monomials_[y]); });

  const Alphabet& al = relations.alphabet();
  std::size_t done = 0, inside_seen = 0, prev_quotient = 0;
  while (done < by_degree.size()) {
    const std::size_t d = x_degree(monomials_[by_degree[done]]);
    std::size_t end = done;
    while (end < by_degree.size() && x_degree(monomials_[by_degree[end]]) == d) ++end;
    for (std::size_t k = done; k < end; ++k) {
      const std::size_t col = by_degree[k];
      if (col < inside_) ++inside_seen;
      const ModuleMonomial& m = monomials_[col];
      for (const Match& mt : relations.all_matches(m)) {
        ModuleElement rel(m);
        rel -= apply_match(m, mt);
        Row r;
        try {
          r = to_row(rel, mt.tag().text() + " at " + format_monomial(m, al));
        } catch (const BoundsNotClosed&) {
          if (opt.strict) throw;
          ++skipped_;
          continue;
        }
        for (const auto& [c, q] : r)
          if (x_degree(monomials_[c]) > d)
            throw Error("relation " + mt.tag().text() + " raises the x-degree at " + format_monomial(m, al));
        insert(std::move(r));
      }
    }
    const std::size_t inside_rank =
        static_cast<std::size_t>(std::distance(pivots_.begin(), pivots_.lower_bound(inside_)));
    const std::size_t quotient = inside_seen - inside_rank;
    dims_[d] = quotient - prev_quotient;
    prev_quotient = quotient;
    done = end;
  }
}

RelationSpan::Row RelationSpan::to_row(const ModuleElement& x, const std::string& what) const {
  Row r;
  for (const auto& [m, c] : x) {
    auto it = column_.find(m);
    if (it == column_.end()) throw BoundsNotClosed(what + " leaves the span");
    r.emplace(it->second, c);
  }
  return r;
}

namespace {

void axpy(std::map<std::size_t, Rational>& r, const Rational& a, const std::map<std::size_t, Rational>& p) {
  for (const auto& [col, c] : p) {
    auto [it, fresh] = r.try_emplace(col, 0);
    it->second -= a * c;
    if (it->second == 0) r.erase(it);
  }
}

}  // namespace

bool RelationSpan::insert(Row r) {
  while (!r.empty()) {
    auto lead = std::prev(r.end());
    auto pv = pivots_.find(lead->first);
    if (pv == pivots_.end()) {
      Rational inv = 1 / lead->second;
      for (auto& [col, c] : r) c *= inv;
      std::size_t col = lead->first;
      pivots_.emplace(col, std::move(r));
      return true;
    }
    Rational a = lead->second;
    axpy(r, a, pv->second);
  }
  return false;
}

void RelationSpan::reduce_row(Row& r) const {
  auto it = r.end();
  while (it != r.begin()) {
    --it;
    std::size_t col = it->first;
    auto pv = pivots_.find(col);
    if (pv == pivots_.end()) continue;
    Rational a = it->second;
    axpy(r, a, pv->second);
    it = r.lower_bound(col);
  }
}

ModuleElement RelationSpan::reduce(const ModuleElement& x) const {
  Row r = to_row(x, "element");
  reduce_row(r);
  ModuleElement out;
  for (const auto& [col, c] : r) out.add_term(monomials_[col], c);
  return out;
}

GradedCount oracle_dimension(const RuleSet& relations, const Bounds& b, OracleOptions opt) {
  return RelationSpan(relations, b, opt).quotient_dims();
}

PbwReport pbw_check(const LieData& lie, std::size_t N, const Bounds& b) {
  if (N != 2 && N != 3) throw Error("pbw_check supports N = 2 or 3");
  PbwReport rep;
  rep.N = N;
  rep.bounds = b;
  RuleSet rs = N == 3 ? preset_u3(lie) : preset_u2(lie);
  rep.terminal = count_by_degree(enumerate_terminal(rs, b));
  rep.pattern = count_by_degree(N == 3 ? comconf3_pattern(lie.dim(), b) : comconf2_pattern(lie.dim(), b));
  if (b.x_degree >= 1) ++rep.pattern[1];
  return rep;
}

std::string hilbert(const GradedCount& counts) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  auto power = [](std::size_t k) {
    if (k == 1) return std::string("t");
    std::string digits = std::to_string(k), out = "t";
    for (char c : digits) out += sup[c - '0'];
    return out;
  };
  std::string out;
  std::size_t top = 0;
  for (const auto& [d, c] : counts) {
    top = std::max(top, d);
    if (c == 0) continue;
    out += std::to_string(c) + " " + power(d) + " + ";
  }
  return out + "O(" + power(top + 1) + ")";
}

}  // namespace cgsb
