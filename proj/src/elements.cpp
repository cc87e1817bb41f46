#include "cgsb/elements.hpp"

namespace cgsb {

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) out.add_term(concat(u, v), a * b);
  return out;
}

ModuleElement act(const AlgebraElement& x, const ModuleElement& m) {
  ModuleElement out;
  for (const auto& [u, a] : x)
    for (const auto& [mono, b] : m) out.add_term(ModuleMonomial{concat(u, mono.word), mono.gen}, a * b);
  return out;
}

ModuleElement act_word(const Word& u, const ModuleElement& m) {
  if (u.empty()) return m;
  ModuleElement out;
  for (const auto& [mono, b] : m) out.add_term(ModuleMonomial{concat(u, mono.word), mono.gen}, b);
  return out;
}

AlgebraElement sandwich(const Word& v1, const AlgebraElement& x, const Word& v2) {
  AlgebraElement out;
  for (const auto& [u, a] : x) out.add_term(concat(concat(v1, u), v2), a);
  return out;
}

std::strong_ordering compare_keys(const Word& u, const Word& v, Order o) { return compare_words(u, v, o); }
std::strong_ordering compare_keys(const ModuleMonomial& u, const ModuleMonomial& v, Order o) {
  return compare_module_monomials(u, v, o);
}

}  // namespace cgsb
