#include "cgsb/presets.hpp"

namespace cgsb {

namespace {

using K = PatternItem::Kind;
using LiePtr = std::shared_ptr<const LieData>;

PatternItem D() { return {K::D}; }
PatternItem Dpow(int slot) {
  PatternItem p{K::DPow};
  p.pow_param = slot;
  return p;
}
PatternItem Lc(int n, int a) {
  PatternItem p{K::L};
  p.index_const = n;
  p.deco_param = a;
  return p;
}
PatternItem Ln(int slot, int a) {
  PatternItem p{K::L};
  p.index_param = slot;
  p.deco_param = a;
  return p;
}
PatternItem Rc(int n, int a) {
  PatternItem p{K::R};
  p.index_const = n;
  p.deco_param = a;
  return p;
}
PatternItem Rn(int slot, int a) {
  PatternItem p{K::R};
  p.index_param = slot;
  p.deco_param = a;
  return p;
}

const Letter kD = Letter::partial();

Letter L(long n, std::size_t a) { return Letter::L(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(a)); }
Letter R(long n, std::size_t a) { return Letter::R(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(a)); }
Generator G(std::size_t a) { return Generator{static_cast<int>(a)}; }

Word dpow(long s) { return Word(static_cast<std::size_t>(s), kD); }

ModuleMonomial mono(Word w, Generator g) { return {std::move(w), g}; }

// Σ c v_k w·x_k
void add_on_vector(ModuleElement& out, const Rational& c, const Word& w, const LieVector& v) {
  for (const auto& [k, x] : v.coeffs()) out.add_term(mono(w, G(k)), c * x);
}

// Σ c v_k L_n^{x_k}·tail·g
void add_L_decorated(ModuleElement& out, const Rational& c, long n, const LieVector& v, const Word& tail, Generator g) {
  for (const auto& [k, x] : v.coeffs()) out.add_term(mono(concat(Word{L(n, k)}, tail), g), c * x);
}

void add_central(ModuleElement& out, const Rational& c) { out.add_term(mono({}, Generator::central()), c); }

RuleSchema algebra_schema(std::string id, std::vector<std::string> letters, std::vector<IntParam> ints,
                          std::vector<PatternItem> pattern, std::string constraint,
                          std::function<bool(const Binding&)> admissible,
                          std::function<AlgebraElement(const Binding&)> rhs) {
  RuleSchema s;
  s.id = std::move(id);
  s.module = false;
  s.letter_params = std::move(letters);
  s.int_params = std::move(ints);
  s.pattern = std::move(pattern);
  s.constraint = std::move(constraint);
  s.admissible = std::move(admissible);
  s.algebra_rhs = std::move(rhs);
  return s;
}

RuleSchema module_schema(std::string id, std::vector<std::string> letters, std::vector<IntParam> ints,
                         std::vector<PatternItem> pattern, int gen_param, std::string constraint,
                         std::function<bool(const Binding&)> admissible,
                         std::function<ModuleElement(const Binding&)> rhs) {
  RuleSchema s;
  s.id = std::move(id);
  s.module = true;
  s.letter_params = std::move(letters);
  s.int_params = std::move(ints);
  s.pattern = std::move(pattern);
  s.gen_param = gen_param;
  s.constraint = std::move(constraint);
  s.admissible = std::move(admissible);
  s.module_rhs = std::move(rhs);
  return s;
}

ModuleElement zero_module(const Binding&) { return {}; }

// Binding accessors.
std::size_t la(const Binding& b, int k) { return b.letters[static_cast<std::size_t>(k)]; }
long ni(const Binding& b, int k) { return b.ints[static_cast<std::size_t>(k)]; }

// ---- operator algebra, deg-lex ----

void add_ax(RuleSet& rs, const LiePtr& lie) {
  rs.add_schema(algebra_schema("A-dL0", {"a"}, {}, {D(), Lc(0, 0)}, "", nullptr, [](const Binding& b) {
    return AlgebraElement(Word{L(0, la(b, 0)), kD});
  }));
  rs.add_schema(algebra_schema("A-dL1", {"a"}, {}, {D(), Lc(1, 0)}, "", nullptr, [](const Binding& b) {
    AlgebraElement r(Word{L(1, la(b, 0)), kD});
    r.add_term(Word{L(0, la(b, 0))}, -1);
    return r;
  }));
  rs.add_schema(algebra_schema("A-Ld", {"a"}, {{"n", 2}}, {Ln(0, 0), D()}, "n>=2", nullptr, [](const Binding& b) {
    long n = ni(b, 0);
    AlgebraElement r(Word{kD, L(n, la(b, 0))});
    r.add_term(Word{L(n - 1, la(b, 0))}, n);
    return r;
  }));
  rs.add_schema(algebra_schema("A-Rd", {"a"}, {{"n", 0}}, {Rn(0, 0), D()}, "n>=0", nullptr, [](const Binding& b) {
    long n = ni(b, 0);
    AlgebraElement r(Word{kD, R(n, la(b, 0))});
    if (n > 0) r.add_term(Word{R(n - 1, la(b, 0))}, n);
    return r;
  }));
  rs.add_schema(algebra_schema("A-RL", {"a", "b"}, {{"m", 0}, {"n", 0}}, {Rn(0, 0), Ln(1, 1)}, "", nullptr,
                               [](const Binding& b) {
                                 return AlgebraElement(Word{L(ni(b, 1), la(b, 1)), R(ni(b, 0), la(b, 0))});
                               }));
  rs.add_schema(algebra_schema(
      "A-LL", {"a", "b"}, {{"n", 0}, {"m", 0}}, {Ln(0, 0), Ln(1, 1)}, "(n,a)>(m,b)",
      [](const Binding& b) {
        return std::pair(ni(b, 0), la(b, 0)) > std::pair(ni(b, 1), la(b, 1));
      },
      [lie](const Binding& b) {
        long n = ni(b, 0), m = ni(b, 1);
        std::size_t a = la(b, 0), c = la(b, 1);
        AlgebraElement r(Word{L(m, c), L(n, a)});
        for (const auto& [k, x] : lie->bracket(a, c).coeffs()) r.add_term(Word{L(n + m, k)}, x);
        return r;
      }));
}

// ---- operator algebra, weighted (free conformal case) ----

void add_weighted_a(RuleSet& rs, const Locality& N) {
  rs.add_schema(algebra_schema("Ld", {"a"}, {{"n", 0}}, {Ln(0, 0), D()}, "n>=0", nullptr, [](const Binding& b) {
    long n = ni(b, 0);
    AlgebraElement r(Word{kD, L(n, la(b, 0))});
    if (n > 0) r.add_term(Word{L(n - 1, la(b, 0))}, n);
    return r;
  }));
  rs.add_schema(algebra_schema("Rd", {"a"}, {{"n", 0}}, {Rn(0, 0), D()}, "n>=0", nullptr, [](const Binding& b) {
    long n = ni(b, 0);
    AlgebraElement r(Word{kD, R(n, la(b, 0))});
    if (n > 0) r.add_term(Word{R(n - 1, la(b, 0))}, n);
    return r;
  }));
  rs.add_schema(algebra_schema("RL", {"a", "b"}, {{"m", 0}, {"n", 0}}, {Rn(0, 0), Ln(1, 1)}, "", nullptr,
                               [](const Binding& b) {
                                 return AlgebraElement(Word{L(ni(b, 1), la(b, 1)), R(ni(b, 0), la(b, 0))});
                               }));
  auto loc = algebra_schema(
      "loc", {"a", "b"}, {{"n", 0}, {"m", 0}}, {Ln(0, 0), Ln(1, 1)}, "n>=N(a,b)",
      [N](const Binding& b) { return ni(b, 0) >= N(la(b, 0), la(b, 1)); },
      [](const Binding& b) {
        long n = ni(b, 0), m = ni(b, 1);
        AlgebraElement r;
        for (long q = 1; q <= n; ++q) {
          Rational c = binomial(n, q);
          if (q % 2 == 0) c = -c;  // -(-1)^q C(n,q)
          r.add_term(Word{L(n - q, la(b, 0)), L(m + q, la(b, 1))}, c);
        }
        return r;
      });
  loc.annihilator = true;
  rs.add_schema(std::move(loc));
}

// ---- Kac–Moody module rules ----

void add_e_rules(RuleSet& rs) {
  rs.add_schema(module_schema("e-L", {"a"}, {{"n", 0}}, {Ln(0, 0)}, -1, "", nullptr, zero_module));
  rs.add_schema(module_schema("e-R", {"a"}, {{"n", 0}}, {Rn(0, 0)}, -1, "", nullptr, zero_module));
  rs.add_schema(module_schema("e-D", {}, {}, {D()}, -1, "", nullptr, zero_module));
}

ModuleElement r1_rhs(const LiePtr& lie, const Binding& b) {
  std::size_t a = la(b, 0), c = la(b, 1);
  ModuleElement r(mono({L(1, a)}, G(c)));
  add_central(r, -lie->form(a, c));
  return r;
}

ModuleElement r0_rhs(const LiePtr& lie, const Binding& b) {
  std::size_t a = la(b, 0), c = la(b, 1);
  ModuleElement r(mono({L(0, a)}, G(c)));
  add_on_vector(r, -1, {}, lie->bracket(a, c));
  return r;
}

void add_rules_b(RuleSet& rs, const LiePtr& lie) {
  rs.add_schema(module_schema("B-L3", {"a", "b"}, {{"n", 3}}, {Ln(0, 0)}, 1, "n>=3", nullptr, zero_module));
  rs.add_schema(module_schema("B-R3", {"a", "b"}, {{"n", 3}}, {Rn(0, 0)}, 1, "n>=3", nullptr, zero_module));
  rs.add_schema(module_schema("B-R2", {"a", "b"}, {}, {Rc(2, 0)}, 1, "", nullptr, [](const Binding& b) {
    return ModuleElement(mono({L(2, la(b, 0))}, G(la(b, 1))));
  }));
  rs.add_schema(module_schema("B-R1", {"a", "b"}, {}, {Rc(1, 0)}, 1, "", nullptr,
                              [lie](const Binding& b) { return r1_rhs(lie, b); }));
  rs.add_schema(module_schema("B-R0", {"a", "b"}, {}, {Rc(0, 0)}, 1, "", nullptr,
                              [lie](const Binding& b) { return r0_rhs(lie, b); }));
}

void add_dl2(RuleSet& rs, const LiePtr& lie) {
  rs.add_schema(module_schema("C-dL2", {"a", "b"}, {}, {D(), Lc(2, 0)}, 1, "", nullptr, [lie](const Binding& b) {
    std::size_t a = la(b, 0), c = la(b, 1);
    ModuleElement r(mono({L(1, a)}, G(c)));
    r.add_term(mono({L(1, c)}, G(a)), 1);
    add_central(r, -lie->form(a, c));
    return r;
  }));
}

void add_l1d(RuleSet& rs, const LiePtr& lie) {
  rs.add_schema(module_schema(
      "C-L1d", {"a", "b"}, {}, {Lc(1, 0), D()}, 1, "a>b", [](const Binding& b) { return la(b, 0) > la(b, 1); },
      [lie](const Binding& b) {
        std::size_t a = la(b, 0), c = la(b, 1);
        ModuleElement r(mono({L(1, c), kD}, G(a)));
        r.add_term(mono({L(0, a)}, G(c)), 3);
        r.add_term(mono({L(0, c)}, G(a)), -3);
        add_on_vector(r, -2, {}, lie->bracket(a, c));
        return r;
      }));
}

void add_rules_c(RuleSet& rs, const LiePtr& lie) {
  rs.add_schema(module_schema(
      "C-L2", {"a", "b"}, {}, {Lc(2, 0)}, 1, "a>b", [](const Binding& b) { return la(b, 0) > la(b, 1); },
      [](const Binding& b) { return ModuleElement(mono({L(2, la(b, 1))}, G(la(b, 0)))); }));
  add_dl2(rs, lie);
  add_l1d(rs, lie);
}

void add_gsb3(RuleSet& rs, const LiePtr& lie) {
  rs.add_schema(module_schema(
      "GSB-Ds", {"a", "b"}, {{"s", 2, true}}, {Lc(1, 0), Dpow(0)}, 1, "s>=2, a>b",
      [](const Binding& b) { return la(b, 0) > la(b, 1); },
      [lie](const Binding& b) {
        std::size_t a = la(b, 0), c = la(b, 1);
        long s = ni(b, 0);
        Rational k = s + 2;
        ModuleElement r(mono(concat({L(1, c)}, dpow(s)), G(a)));
        r.add_term(mono(concat({L(0, c)}, dpow(s - 1)), G(a)), -k);
        r.add_term(mono(concat({L(0, a)}, dpow(s - 1)), G(c)), k);
        add_on_vector(r, -2, dpow(s - 1), lie->bracket(a, c));
        return r;
      }));
  rs.add_schema(module_schema("GSB-2.2", {"a", "b", "c"}, {}, {Lc(2, 0), Lc(2, 1)}, 2, "", nullptr, zero_module));
  rs.add_schema(module_schema(
      "GSB-1.2", {"a", "b", "c"}, {}, {Lc(1, 0), Lc(2, 1)}, 2, "b<=c<a",
      [](const Binding& b) { return la(b, 1) <= la(b, 2) && la(b, 2) < la(b, 0); },
      [](const Binding& b) { return ModuleElement(mono({L(1, la(b, 1)), L(2, la(b, 2))}, G(la(b, 0)))); }));
  rs.add_schema(module_schema(
      "GSB-1.2'", {"a", "b", "c"}, {}, {Lc(1, 0), Lc(2, 1)}, 2, "b<a<=c",
      [](const Binding& b) { return la(b, 1) < la(b, 0) && la(b, 0) <= la(b, 2); },
      [](const Binding& b) { return ModuleElement(mono({L(1, la(b, 1)), L(2, la(b, 0))}, G(la(b, 2)))); }));
  rs.add_schema(module_schema(
      "GSB-1.1", {"a", "b", "c"}, {}, {Lc(1, 0), Lc(1, 1)}, 2, "a<=c<b",
      [](const Binding& b) { return la(b, 0) <= la(b, 2) && la(b, 2) < la(b, 1); },
      [lie](const Binding& bd) {
        std::size_t a = la(bd, 0), b = la(bd, 1), c = la(bd, 2);
        ModuleElement r(mono({L(1, a), L(1, c)}, G(b)));
        r.add_term(mono({L(0, b), L(2, a)}, G(c)), 1);
        r.add_term(mono({L(0, c), L(2, a)}, G(b)), -1);
        add_on_vector(r, 1, {L(2, a)}, lie->bracket(c, b));
        add_on_vector(r, 1, {L(2, b)}, lie->bracket(c, a));
        add_on_vector(r, 1, {L(2, c)}, lie->bracket(a, b));
        return r;
      }));
  rs.add_schema(module_schema(
      "GSB-1.1'", {"a", "b", "c"}, {}, {Lc(1, 0), Lc(1, 1)}, 2, "c<a<=b",
      [](const Binding& b) { return la(b, 2) < la(b, 0) && la(b, 0) <= la(b, 1); },
      [lie](const Binding& bd) {
        std::size_t a = la(bd, 0), b = la(bd, 1), c = la(bd, 2);
        ModuleElement r(mono({L(1, c), L(1, a)}, G(b)));
        r.add_term(mono({L(0, b), L(2, c)}, G(a)), 1);
        r.add_term(mono({L(0, c), L(2, a)}, G(b)), -1);
        add_on_vector(r, 1, {L(2, c)}, lie->bracket(a, b));
        add_on_vector(r, 1, {L(2, a)}, lie->bracket(c, b));
        return r;
      }));
  rs.add_schema(module_schema(
      "GSB-0.1", {"a", "b", "c"}, {}, {Lc(0, 0), Lc(1, 1)}, 2, "c<b<a",
      [](const Binding& b) { return la(b, 2) < la(b, 1) && la(b, 1) < la(b, 0); },
      [lie](const Binding& bd) {
        std::size_t a = la(bd, 0), b = la(bd, 1), c = la(bd, 2);
        ModuleElement r(mono({L(0, a), L(1, c)}, G(b)));
        r.add_term(mono({L(0, b), L(1, a)}, G(c)), 1);
        r.add_term(mono({L(0, c), L(1, b)}, G(a)), 1);
        r.add_term(mono({L(0, b), L(1, c)}, G(a)), -1);
        r.add_term(mono({L(0, c), L(1, a)}, G(b)), -1);
        add_L_decorated(r, 1, 1, lie->bracket(c, a), {}, G(b));
        add_L_decorated(r, 1, 1, lie->bracket(a, b), {}, G(c));
        add_L_decorated(r, 1, 1, lie->bracket(b, c), {}, G(a));
        add_on_vector(r, -1, {L(1, c)}, lie->bracket(a, b));
        add_on_vector(r, -1, {L(1, a)}, lie->bracket(b, c));
        add_on_vector(r, -1, {L(1, b)}, lie->bracket(c, a));
        add_central(r, form_eval(*lie, LieVector::basis(a), lie->bracket(b, c)));
        return r;
      }));
}

void add_loc2(RuleSet& rs) {
  rs.add_schema(module_schema("locL2", {"a", "b"}, {{"n", 2}}, {Ln(0, 0)}, 1, "n>=2", nullptr, zero_module));
  rs.add_schema(module_schema("locR2", {"a", "b"}, {{"n", 2}}, {Rn(0, 0)}, 1, "n>=2", nullptr, zero_module));
}

void add_gsb2(RuleSet& rs, const LiePtr& lie, bool as_printed) {
  add_loc2(rs);
  rs.add_schema(module_schema("R1-L1", {"a", "b"}, {}, {Rc(1, 0)}, 1, "", nullptr,
                              [lie](const Binding& b) { return r1_rhs(lie, b); }));
  rs.add_schema(module_schema("R0-L0", {"a", "b"}, {}, {Rc(0, 0)}, 1, "", nullptr,
                              [lie](const Binding& b) { return r0_rhs(lie, b); }));
  rs.add_schema(module_schema(
      "L1-L1", {"a", "b"}, {}, {Lc(1, 0)}, 1, "b<a", [](const Binding& b) { return la(b, 1) < la(b, 0); },
      [lie](const Binding& b) {
        std::size_t a = la(b, 0), c = la(b, 1);
        ModuleElement r(mono({L(1, c)}, G(a)), -1);
        add_central(r, lie->form(a, c));
        return r;
      }));
  rs.add_schema(module_schema("L1'", {"a"}, {}, {Lc(1, 0)}, 0, "", nullptr, [lie](const Binding& b) {
    ModuleElement r;
    add_central(r, lie->form(la(b, 0), la(b, 0)) / 2);
    return r;
  }));
  rs.add_schema(module_schema("L1D", {"a", "b"}, {{"s", 1, true}}, {Lc(1, 0), Dpow(0)}, 1, "s>=1", nullptr,
                              [lie, as_printed](const Binding& b) {
                                std::size_t a = la(b, 0), c = la(b, 1);
                                long s = ni(b, 0);
                                // Printed with a constant 2; s+1 is what sesqui-linearity gives.
                                Rational k = as_printed ? Rational(2) : Rational(s + 1);
                                ModuleElement r(mono(concat({L(0, a)}, dpow(s - 1)), G(c)), k);
                                r.add_term(mono(concat({L(0, c)}, dpow(s - 1)), G(a)), -1);
                                add_on_vector(r, -1, dpow(s - 1), lie->bracket(a, c));
                                return r;
                              }));
  rs.add_schema(module_schema(
      "L1L1", {"a", "b", "c"}, {}, {Lc(1, 0), Lc(1, 1)}, 2, "a<=b<c",
      [](const Binding& b) { return la(b, 0) <= la(b, 1) && la(b, 1) < la(b, 2); }, zero_module));
  rs.add_schema(module_schema(
      "L0L1", {"a", "b", "c"}, {}, {Lc(0, 0), Lc(1, 1)}, 2, "b<c<a",
      [](const Binding& b) { return la(b, 1) < la(b, 2) && la(b, 2) < la(b, 0); },
      [lie, as_printed](const Binding& bd) {
        std::size_t a = la(bd, 0), b = la(bd, 1), c = la(bd, 2);
        ModuleElement r(mono({L(0, c), L(1, b)}, G(a)));
        r.add_term(mono({L(0, b), L(1, c)}, G(a)), -1);
        add_on_vector(r, 1, {L(1, a)}, lie->bracket(c, b));
        add_on_vector(r, 1, {L(1, c)}, lie->bracket(b, a));
        add_on_vector(r, 1, {L(1, b)}, lie->bracket(a, c));
        // Printed with <a|[b,c]>e; completion from the N=3 basis gives twice that.
        Rational k = as_printed ? Rational(1) : Rational(2);
        add_central(r, k * form_eval(*lie, LieVector::basis(a), lie->bracket(b, c)));
        return r;
      }));
}

LiePtr share(const LieData& lie) { return std::make_shared<const LieData>(lie); }

}  // namespace

Locality constant_locality(long n) {
  return [n](std::size_t, std::size_t) { return n; };
}

Alphabet alphabet_of(const LieData& lie) { return Alphabet{lie.names(), lie.central_name()}; }

RuleSet preset_ax(const LieData& lie) {
  RuleSet rs("ax", Order::deg_lex, alphabet_of(lie));
  add_ax(rs, share(lie));
  return rs;
}

RuleSet preset_conf(const Alphabet& alphabet, const Locality& N) {
  Alphabet al = alphabet;
  al.central.clear();
  RuleSet rs("conf", Order::weighted, al);
  add_weighted_a(rs, N);
  rs.add_schema(module_schema(
      "loc-L", {"a", "b"}, {{"n", 0}}, {Ln(0, 0)}, 1, "n>=N(a,b)",
      [N](const Binding& b) { return ni(b, 0) >= N(la(b, 0), la(b, 1)); }, zero_module));
  rs.add_schema(module_schema("R-exp", {"a", "b"}, {{"m", 0}}, {Rn(0, 0)}, 1, "", nullptr, [N](const Binding& b) {
    std::size_t a = la(b, 0), c = la(b, 1);
    long m = ni(b, 0);
    ModuleElement r;
    for (long s = 0; s <= N(c, a) - m; ++s) {
      Rational k = inverse_factorial(s);
      if ((m + s) % 2) k = -k;
      r.add_term(mono(concat(dpow(s), {L(m + s, c)}), G(a)), k);
    }
    return r;
  }));
  return rs;
}

RuleSet preset_u3_base(const LieData& lie) {
  auto p = share(lie);
  RuleSet rs("u3-base", Order::deg_lex, alphabet_of(lie));
  add_ax(rs, p);
  add_rules_b(rs, p);
  add_rules_c(rs, p);
  add_e_rules(rs);
  return rs;
}

RuleSet preset_u3(const LieData& lie) {
  auto p = share(lie);
  RuleSet rs("u3", Order::deg_lex, alphabet_of(lie));
  add_ax(rs, p);
  add_rules_b(rs, p);
  add_rules_c(rs, p);
  add_e_rules(rs);
  add_gsb3(rs, p);
  return rs;
}

RuleSet preset_u2(const LieData& lie, bool as_printed) {
  auto p = share(lie);
  RuleSet rs(as_printed ? "u2-printed" : "u2", Order::deg_lex, alphabet_of(lie));
  add_ax(rs, p);
  add_gsb2(rs, p, as_printed);
  add_e_rules(rs);
  return rs;
}

RuleSet preset_u2_base(const LieData& lie) {
  auto p = share(lie);
  RuleSet rs("u2-base", Order::deg_lex, alphabet_of(lie));
  add_ax(rs, p);
  add_loc2(rs);
  rs.add_schema(module_schema("B-R1", {"a", "b"}, {}, {Rc(1, 0)}, 1, "", nullptr,
                              [p](const Binding& b) { return r1_rhs(p, b); }));
  rs.add_schema(module_schema("B-R0", {"a", "b"}, {}, {Rc(0, 0)}, 1, "", nullptr,
                              [p](const Binding& b) { return r0_rhs(p, b); }));
  add_dl2(rs, p);
  add_l1d(rs, p);
  add_e_rules(rs);
  return rs;
}

RuleSet preset_bfk() {
  RuleSet rs("bfk", Order::weighted, Alphabet{{"a"}, ""});
  add_weighted_a(rs, constant_locality(2));
  rs.add_schema(module_schema("L2", {"a"}, {{"n", 2}}, {Ln(0, 0)}, 0, "n>=2", nullptr, zero_module));
  rs.add_schema(module_schema("R2", {"a"}, {{"n", 2}}, {Rn(0, 0)}, 0, "n>=2", nullptr, zero_module));
  rs.add_schema(module_schema("R1", {"a"}, {}, {Rc(1, 0)}, 0, "", nullptr, [](const Binding& b) {
    return ModuleElement(mono({L(1, la(b, 0))}, G(la(b, 0))), -1);
  }));
  rs.add_schema(module_schema("R0", {"a"}, {}, {Rc(0, 0)}, 0, "", nullptr, [](const Binding& b) {
    std::size_t a = la(b, 0);
    ModuleElement r(mono({L(0, a)}, G(a)));
    r.add_term(mono({kD, L(1, a)}, G(a)), -1);
    return r;
  }));
  rs.add_schema(module_schema("BFK", {"a"}, {}, {Lc(1, 0)}, 0, "", nullptr, [](const Binding& b) {
    return ModuleElement(mono({kD, L(0, la(b, 0))}, G(la(b, 0))));
  }));
  return rs;
}

const std::vector<std::string>& u3_gsb_families() {
  static const std::vector<std::string> ids = {"GSB-Ds",  "GSB-2.2",  "GSB-1.2", "GSB-1.2'",
                                               "GSB-1.1", "GSB-1.1'", "GSB-0.1"};
  return ids;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"ax", "conf", "u3", "u2", "bfk", "u3-base", "u2-base"};
  return names;
}

RuleSet make_preset(const PresetOptions& opt) {
  if (opt.name == "bfk") return preset_bfk();
  if (!opt.lie) throw Error("preset '" + opt.name + "' needs a Lie algebra");
  const LieData& lie = *opt.lie;
  if (opt.name == "ax") return preset_ax(lie);
  if (opt.name == "conf") return preset_conf(alphabet_of(lie), constant_locality(opt.locality));
  if (opt.name == "u3") return preset_u3(lie);
  if (opt.name == "u2") return preset_u2(lie, opt.as_printed);
  if (opt.name == "u2-printed") return preset_u2(lie, true);
  if (opt.name == "u3-base") return preset_u3_base(lie);
  if (opt.name == "u2-base") return preset_u2_base(lie);
  throw Error("unknown preset '" + opt.name + "'");
}

}  // namespace cgsb
