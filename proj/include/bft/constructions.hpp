#pragma once

#include <map>
#include <utility>

#include "bft/synth.hpp"

namespace bft {

// precondition checks run full transforms, so they default off above 16 vars
inline bool resolve_verify(std::optional<bool> flag, int n) { return flag.value_or(n <= 16); }

// lift f onto n variables, its block starting after `offset` variables
inline BooleanFunction embed(const BooleanFunction& f, int n, int offset) {
  if (offset < 0 || offset + f.n() > n)
    throw error(errc::dimension_mismatch, "embedding window out of range");
  BooleanFunction r(n);
  int shift = n - offset - f.n();
  uint64_t mask = f.size() - 1;
  for (uint64_t x = 0; x < r.size(); ++x)
    r.set(x, f((x >> shift) & mask));
  return r;
}

namespace detail {

inline void require_bent(const std::string& what, const BooleanFunction& f) {
  if (!classify(f).is_bent())
    throw error(errc::precondition_failed, what + " is not bent");
}

inline void require_same_arity(std::initializer_list<const BooleanFunction*> fs) {
  for (const BooleanFunction* f : fs)
    if (f->n() != (*fs.begin())->n())
      throw error(errc::dimension_mismatch, "inputs on different variable counts");
}

}  // namespace detail

// ---- composite representation ----------------------------------------------

struct CompositeSpec {
  BooleanFunction form;                 // f on k variables
  std::vector<BooleanFunction> coords;  // h_1..h_k on n variables
};

inline BooleanFunction compose(const BooleanFunction& form,
                               const std::vector<BooleanFunction>& coords) {
  if (static_cast<int>(coords.size()) != form.n())
    throw error(errc::arity_mismatch, "form arity does not match coordinate count");
  VectorialFunction h(coords);
  BooleanFunction r(h.n());
  for (uint64_t x = 0; x < r.size(); ++x) r.set(x, form(h(x)));
  return r;
}

inline BooleanFunction compose(const CompositeSpec& spec) {
  return compose(spec.form, spec.coords);
}

// W_F(u) = 2^{-k} sum_w W_f(w) W_{w.h}(u), evaluated exactly on both sides
inline bool composite_wht_identity_check(const CompositeSpec& spec, uint32_t u) {
  if (static_cast<int>(spec.coords.size()) != spec.form.n())
    throw error(errc::arity_mismatch, "form arity does not match coordinate count");
  VectorialFunction h(spec.coords);
  int32_t lhs = wht(compose(spec)).coeffs[u];
  WalshSpectrum wf = wht(spec.form);
  int64_t acc = 0;
  for (uint64_t w = 0; w < wf.coeffs.size(); ++w)
    acc += int64_t{wf.coeffs[w]} * wht(component(h, static_cast<uint32_t>(w))).coeffs[u];
  if (acc & ((int64_t{1} << spec.form.n()) - 1)) return false;
  return lhs == acc / (int64_t{1} << spec.form.n());
}

// reduced sum over the Walsh support of a plateaued form:
// W_F(u) = 2^{(s-k)/2} sum_{w in S_f} (-1)^{f*(w)} W_{w.h}(u)
inline bool composite_wht_support_identity_check(const CompositeSpec& spec, uint32_t u) {
  if (static_cast<int>(spec.coords.size()) != spec.form.n())
    throw error(errc::arity_mismatch, "form arity does not match coordinate count");
  WalshSpectrum wf = wht(spec.form);
  SpectrumClass fc = classify(wf);
  if (fc.tag != SpectrumClass::tag_t::bent && fc.tag != SpectrumClass::tag_t::plateaued)
    throw error(errc::precondition_failed, "form is not bent or plateaued");
  VectorialFunction h(spec.coords);
  int32_t lhs = wht(compose(spec)).coeffs[u];
  int64_t acc = 0;
  for (uint64_t w = 0; w < wf.coeffs.size(); ++w) {
    if (wf.coeffs[w] == 0) continue;
    int sign = wf.coeffs[w] > 0 ? 1 : -1;
    acc += sign * int64_t{wht(component(h, static_cast<uint32_t>(w))).coeffs[u]};
  }
  int half_codim = (spec.form.n() - fc.s) / 2;
  if (acc & ((int64_t{1} << half_codim) - 1)) return false;
  return lhs == acc / (int64_t{1} << half_codim);
}

// ---- internal forms, synthesized from their proof support data --------------

inline const BooleanFunction& rothaus_form() {
  static const BooleanFunction f =
      synthesize_rows(5, 3, {5, 10, 16, 31}, BooleanFunction::from_values(2, {0, 0, 0, 1}));
  return f;
}

inline const BooleanFunction& gen_rothaus_a_form() {
  static const BooleanFunction f = [] {
    RowBlock delta = build_delta_multiset(3, {0, 6, 5, 3}, {0, 5, 5, 0}, 4);
    RowBlock rows = interleave({delta, full_space_block(4)});
    return synthesize_rows(7, 3, rows.rows,
                           function_of(parse_anf("x1*x3 + x2*x3 + x2*x4 + x3*x4 + x3", 4)));
  }();
  return f;
}

inline const BooleanFunction& gen_rothaus_b_form() {
  static const BooleanFunction f = [] {
    RowBlock delta = complement_pair(function_of(parse_anf("x3*x4", 4)));
    RowBlock rows = interleave({delta, full_space_block(4)});
    return synthesize_rows(6, 2, rows.rows, function_of(parse_anf("x1*x3 + x2*x4", 4)));
  }();
  return f;
}

inline const BooleanFunction& gis_a_form() {
  static const BooleanFunction f = [] {
    std::vector<RowBlock> blocks;
    for (int i = 1; i <= 4; ++i)
      blocks.push_back(complement_pair(BooleanFunction::variable(4, i)));
    return synthesize_rows(8, 4, interleave(blocks).rows,
                           function_of(parse_anf("x1*x3 + x2*x4 + x3*x4", 4)));
  }();
  return f;
}

inline const BooleanFunction& gis_b_form() {
  static const BooleanFunction f = [] {
    std::vector<RowBlock> blocks{complement_pair(BooleanFunction::variable(2, 1)),
                                 complement_pair(BooleanFunction::variable(2, 2)),
                                 full_space_block(2)};
    return synthesize_rows(6, 4, interleave(blocks).rows,
                           function_of(parse_anf("x1*x2", 2)));
  }();
  return f;
}

inline const BooleanFunction& gis_c_form() {
  static const BooleanFunction f = [] {
    std::vector<RowBlock> blocks{complement_pair(function_of(parse_anf("x3*x4", 4))),
                                 complement_pair(function_of(parse_anf("x2*x3", 4))),
                                 full_space_block(4)};
    return synthesize_rows(8, 4, interleave(blocks).rows,
                           function_of(parse_anf("x1*x3 + x2*x4", 4)));
  }();
  return f;
}

inline const BooleanFunction& indirect_sum_form() {
  static const BooleanFunction f =
      synthesize_rows(4, 2, {5, 6, 9, 10}, BooleanFunction::from_values(2, {1, 0, 0, 0}));
  return f;
}

inline const BooleanFunction& mesnager_form() {
  static const BooleanFunction f =
      synthesize_rows(3, 1, {4, 2, 1, 7}, BooleanFunction::from_values(2, {0, 0, 0, 1}));
  return f;
}

inline const BooleanFunction& dualcor_form() {
  static const BooleanFunction f =
      synthesize_rows(4, 2, {8, 5, 2, 15}, BooleanFunction::from_values(2, {0, 0, 0, 1}));
  return f;
}

// ---- Rothaus and its generalizations ----------------------------------------

inline BooleanFunction rothaus(const BooleanFunction& a, const BooleanFunction& b,
                               const BooleanFunction& c, std::optional<bool> verify = {}) {
  detail::require_same_arity({&a, &b, &c});
  int r = a.n(), n = r + 2;
  if (resolve_verify(verify, r)) {
    detail::require_bent("a", a);
    detail::require_bent("b", b);
    detail::require_bent("c", c);
    detail::require_bent("a+b+c", a ^ b ^ c);
  }
  BooleanFunction A = embed(a, n, 0), B = embed(b, n, 0), C = embed(c, n, 0);
  BooleanFunction Y1 = BooleanFunction::variable(n, r + 1);
  BooleanFunction Y2 = BooleanFunction::variable(n, r + 2);
  return (A & B) ^ (A & C) ^ (B & C) ^ ((A ^ B) & Y2) ^ ((A ^ C) & Y1) ^ (Y1 & Y2);
}

inline BooleanFunction generalized_rothaus_a(const BooleanFunction& a, const BooleanFunction& b,
                                             const BooleanFunction& c,
                                             std::optional<bool> verify = {}) {
  detail::require_same_arity({&a, &b, &c});
  int r = a.n(), n = r + 4;
  if (resolve_verify(verify, r)) {
    detail::require_bent("a", a);
    detail::require_bent("b", b);
    detail::require_bent("c", c);
    detail::require_bent("a+b+c", a ^ b ^ c);
  }
  BooleanFunction A = embed(a, n, 0), B = embed(b, n, 0), C = embed(c, n, 0);
  BooleanFunction Y1 = BooleanFunction::variable(n, r + 1);
  BooleanFunction Y2 = BooleanFunction::variable(n, r + 2);
  BooleanFunction Y3 = BooleanFunction::variable(n, r + 3);
  BooleanFunction Y4 = BooleanFunction::variable(n, r + 4);
  return (B & (Y1 ^ Y2)) ^ (A & ~(Y1 ^ Y3)) ^ ((C ^ Y1) & (Y2 ^ Y3)) ^ ((Y1 ^ Y2) & Y4);
}

inline BooleanFunction generalized_rothaus_b(const BooleanFunction& a, const BooleanFunction& b,
                                             std::optional<bool> verify = {}) {
  detail::require_same_arity({&a, &b});
  int r = a.n(), n = r + 4;
  if (resolve_verify(verify, r)) {
    detail::require_bent("a", a);
    detail::require_bent("b", b);
  }
  BooleanFunction A = embed(a, n, 0), B = embed(b, n, 0);
  BooleanFunction Y1 = BooleanFunction::variable(n, r + 1);
  BooleanFunction Y2 = BooleanFunction::variable(n, r + 2);
  BooleanFunction Y3 = BooleanFunction::variable(n, r + 3);
  BooleanFunction Y4 = BooleanFunction::variable(n, r + 4);
  return B ^ ((A ^ B) & Y1 & Y2) ^ (Y1 & Y3) ^ (Y2 & Y4);
}

// ---- plateaued-form composition theorems ------------------------------------

enum class p1_mode { bent, plateaued, report };

struct P1Result {
  BooleanFunction result;
  std::optional<BooleanFunction> dual;
  SpectrumClass cls;
};

// form s-plateaued with S_form a wreath Delta | F_2^m (theta part exhaustive,
// 0_s never in Delta); coordinates (h_1..h_s, fresh y_1..y_m)
inline P1Result theorem_p1_construct(const BooleanFunction& form, const VectorialFunction& h,
                                     p1_mode mode = p1_mode::bent) {
  int k = form.n(), s = h.k(), m = k - s;
  if (s < 1 || m < 1)
    throw error(errc::dimension_mismatch, "need 1 <= coordinate count < form arity");
  WalshSpectrum sp = wht(form);
  if (!classify(sp).is_plateaued(s))
    throw error(errc::support_not_splittable,
                "form is not s-plateaued with s matching the coordinate count");
  uint32_t theta_mask = (uint32_t{1} << m) - 1;
  std::vector<uint32_t> delta_of(size_t{1} << m);
  std::vector<bool> seen(size_t{1} << m, false);
  for (uint32_t p : walsh_support(sp)) {
    uint32_t theta = p & theta_mask, delta = p >> m;
    if (seen[theta])
      throw error(errc::support_not_splittable,
                  "theta " + to_bitstring(theta, m) + " repeats in the support");
    if (delta == 0)
      throw error(errc::support_not_splittable, "0_s appears in Delta");
    seen[theta] = true;
    delta_of[theta] = delta;
  }

  int r = h.n(), n = r + m;
  std::vector<BooleanFunction> coords;
  for (const auto& hi : h.coords) coords.push_back(embed(hi, n, 0));
  for (int j = 1; j <= m; ++j) coords.push_back(BooleanFunction::variable(n, r + j));
  BooleanFunction result = compose(form, coords);

  if (mode == p1_mode::report) return {result, {}, classify(result)};

  std::map<uint32_t, SpectrumClass> comp_cls;
  std::map<uint32_t, BooleanFunction> comp_dual;
  for (uint32_t theta = 0; theta <= theta_mask; ++theta) {
    uint32_t delta = delta_of[theta];
    if (comp_cls.count(delta)) continue;
    BooleanFunction g = component(h, delta);
    SpectrumClass c = classify(g);
    comp_cls.emplace(delta, c);
    if (mode == p1_mode::bent) {
      if (!c.is_bent())
        throw error(errc::mode_condition_failed,
                    "delta.h is not bent at delta = " + to_bitstring(delta, s));
      comp_dual.emplace(delta, dual(g).fstar);
    }
  }

  if (mode == p1_mode::bent) {
    BooleanFunction fdual(n);
    for (uint32_t y = 0; y <= theta_mask; ++y) {
      uint32_t delta = delta_of[y];
      int form_sign = sp.coeffs[(delta << m) | y] < 0;
      const BooleanFunction& gstar = comp_dual.at(delta);
      for (uint64_t x = 0; x < (uint64_t{1} << r); ++x)
        fdual.set((x << m) | y, form_sign ^ gstar(x));
    }
    SpectrumClass rc = classify(result);
    if (!rc.is_bent()) throw std::logic_error("composite bent claim breached");
    return {result, fdual, rc};
  }

  int c_order = -1;
  for (const auto& [delta, c] : comp_cls) {
    if (c.tag != SpectrumClass::tag_t::plateaued)
      throw error(errc::mode_condition_failed,
                  "delta.h is not plateaued at delta = " + to_bitstring(delta, s));
    if (c_order == -1) c_order = c.s;
    else if (c_order != c.s)
      throw error(errc::mode_condition_failed,
                  "mixed plateau orders, first mismatch at delta = " + to_bitstring(delta, s));
  }
  SpectrumClass rc = classify(result);
  if (!rc.is_plateaued(c_order)) throw std::logic_error("composite plateau claim breached");
  return {result, {}, rc};
}

// a(x) + d(h_1(x),...,h_t(x), y); the affine space a + span(h) must consist of
// bent functions whose duals sit at bent distance to every dual slice of d
inline BooleanFunction theorem_p2_construct(const BooleanFunction& d, const BooleanFunction& a,
                                            const std::vector<BooleanFunction>& h,
                                            std::optional<bool> verify = {}) {
  int k = d.n(), t = static_cast<int>(h.size()), m = k - t, r = a.n();
  for (const auto& hi : h)
    if (hi.n() != r) throw error(errc::dimension_mismatch, "a and h on different variable counts");
  if (m < 0) throw error(errc::dimension_mismatch, "more coordinates than form variables");
  int n = r + m;
  auto shifted = [&](uint32_t delta) {  // a + delta.h
    BooleanFunction g = a;
    for (int i = 0; i < t; ++i)
      if ((delta >> (t - 1 - i)) & 1) g = g ^ h[i];
    return g;
  };
  if (resolve_verify(verify, std::max(r, k))) {
    detail::require_bent("d", d);
    std::vector<BooleanFunction> gstar;
    for (uint32_t delta = 0; delta < (uint32_t{1} << t); ++delta) {
      BooleanFunction g = shifted(delta);
      if (!classify(g).is_bent())
        throw error(errc::precondition_failed,
                    "a + delta.h is not bent at delta = " + to_bitstring(delta, t));
      gstar.push_back(dual(g).fstar);
    }
    BooleanFunction dstar = dual(d).fstar;
    int64_t target = int64_t{1} << (t / 2);
    for (uint32_t v = 0; v < (uint32_t{1} << m); ++v)
      for (uint32_t u = 0; u < (uint32_t{1} << r); ++u) {
        int64_t corr = 0;
        for (uint32_t delta = 0; delta < (uint32_t{1} << t); ++delta)
          corr += (1 - 2 * dstar((uint64_t{delta} << m) | v)) * (1 - 2 * gstar[delta](u));
        if (corr != target && corr != -target)
          throw error(errc::precondition_failed,
                      "dual slices not at bent distance, witness v = " + to_bitstring(v, m) +
                          ", u = " + to_bitstring(u, r));
      }
  }
  std::vector<BooleanFunction> coords;
  for (const auto& hi : h) coords.push_back(embed(hi, n, 0));
  for (int j = 1; j <= m; ++j) coords.push_back(BooleanFunction::variable(n, r + j));
  return embed(a, n, 0) ^ compose(d, coords);
}

inline BooleanFunction bent_concatenation(const BooleanFunction& f1, const BooleanFunction& f2,
                                          const BooleanFunction& f3,
                                          std::optional<bool> verify = {}) {
  detail::require_same_arity({&f1, &f2, &f3});
  int r = f1.n(), n = r + 2;
  BooleanFunction f4 = f1 ^ f2 ^ f3;
  if (resolve_verify(verify, r)) {
    detail::require_bent("f1", f1);
    detail::require_bent("f2", f2);
    detail::require_bent("f3", f3);
    detail::require_bent("f4 = f1+f2+f3", f4);
    BooleanFunction sum =
        dual(f1).fstar ^ dual(f2).fstar ^ dual(f3).fstar ^ dual(f4).fstar;
    if (sum != BooleanFunction::constant(r, 1))
      throw error(errc::precondition_failed, "dual-sum not constant 1");
  }
  BooleanFunction F1 = embed(f1, n, 0), F2 = embed(f2, n, 0), F3 = embed(f3, n, 0);
  BooleanFunction Y1 = BooleanFunction::variable(n, r + 1);
  BooleanFunction Y2 = BooleanFunction::variable(n, r + 2);
  return F1 ^ (Y1 & (F1 ^ F3)) ^ (Y2 & (F1 ^ F2));
}

// ---- indirect sums ----------------------------------------------------------

// dual accompanies the result only when every input is bent, so formula duals
// stay available while degenerate (unverified) inputs still build a result
struct PairResult {
  BooleanFunction result;
  std::optional<BooleanFunction> dual;
};

inline PairResult indirect_sum(const BooleanFunction& f1, const BooleanFunction& f2,
                               const BooleanFunction& g1, const BooleanFunction& g2,
                               std::optional<bool> verify = {}) {
  detail::require_same_arity({&f1, &f2});
  detail::require_same_arity({&g1, &g2});
  int r = f1.n(), m = g1.n(), n = r + m;
  if (resolve_verify(verify, std::max(r, m))) {
    detail::require_bent("f1", f1);
    detail::require_bent("f2", f2);
    detail::require_bent("g1", g1);
    detail::require_bent("g2", g2);
  }
  auto build = [&](const BooleanFunction& a1, const BooleanFunction& a2,
                   const BooleanFunction& b1, const BooleanFunction& b2) {
    BooleanFunction A1 = embed(a1, n, 0), A2 = embed(a2, n, 0);
    BooleanFunction B1 = embed(b1, n, r), B2 = embed(b2, n, r);
    return A1 ^ B1 ^ ((A1 ^ A2) & (B1 ^ B2));
  };
  PairResult out{build(f1, f2, g1, g2), {}};
  if (classify(f1).is_bent() && classify(f2).is_bent() && classify(g1).is_bent() &&
      classify(g2).is_bent())
    out.dual = build(dual(f1).fstar, dual(f2).fstar, dual(g1).fstar, dual(g2).fstar);
  return out;
}

// functions grouped in blocks over disjoint variable segments, block order
struct DisjointBundle {
  std::vector<std::vector<BooleanFunction>> blocks;

  explicit DisjointBundle(std::vector<std::vector<BooleanFunction>> b) : blocks(std::move(b)) {
    for (const auto& blk : blocks) {
      if (blk.empty()) throw error(errc::dimension_mismatch, "empty bundle block");
      for (const auto& f : blk)
        if (f.n() != blk.front().n())
          throw error(errc::dimension_mismatch, "bundle block mixes variable counts");
    }
  }
  int total_n() const {
    int n = 0;
    for (const auto& blk : blocks) n += blk.front().n();
    return n;
  }
  int offset(size_t i) const {
    int o = 0;
    for (size_t j = 0; j < i; ++j) o += blocks[j].front().n();
    return o;
  }
};

inline PairResult gen_indirect_sum_a(const DisjointBundle& bundle,
                                     std::optional<bool> verify = {}) {
  if (bundle.blocks.size() != 4)
    throw error(errc::dimension_mismatch, "need four blocks (f, g, l, d)");
  for (const auto& blk : bundle.blocks)
    if (blk.size() != 2) throw error(errc::dimension_mismatch, "each block needs a pair");
  int n = bundle.total_n();
  int max_r = 0;
  for (const auto& blk : bundle.blocks) max_r = std::max(max_r, blk.front().n());
  static const char* names[] = {"f", "g", "l", "d"};
  if (resolve_verify(verify, max_r))
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 2; ++j)
        detail::require_bent(names[i] + std::to_string(j + 1), bundle.blocks[i][j]);
  auto build = [&](bool starred) {
    std::vector<BooleanFunction> e;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 2; ++j) {
        const BooleanFunction& f = bundle.blocks[i][j];
        e.push_back(embed(starred ? dual(f).fstar : f, n, bundle.offset(i)));
      }
    const auto &F1 = e[0], &F2 = e[1], &G1 = e[2], &G2 = e[3], &L1 = e[4], &L2 = e[5],
               &D1 = e[6], &D2 = e[7];
    return F2 ^ G2 ^ L2 ^ D2 ^ ((G1 ^ G2) & (F1 ^ F2 ^ D1 ^ D2)) ^ ((L1 ^ L2) & (F1 ^ F2));
  };
  PairResult out{build(false), {}};
  bool all_bent = true;
  for (const auto& blk : bundle.blocks)
    for (const auto& f : blk) all_bent = all_bent && classify(f).is_bent();
  if (all_bent) out.dual = build(true);
  return out;
}

inline PairResult gen_indirect_sum_a(const BooleanFunction& f1, const BooleanFunction& f2,
                                     const BooleanFunction& g1, const BooleanFunction& g2,
                                     const BooleanFunction& l1, const BooleanFunction& l2,
                                     const BooleanFunction& d1, const BooleanFunction& d2,
                                     std::optional<bool> verify = {}) {
  return gen_indirect_sum_a(DisjointBundle({{f1, f2}, {g1, g2}, {l1, l2}, {d1, d2}}), verify);
}

inline BooleanFunction gen_indirect_sum_b(const BooleanFunction& f1, const BooleanFunction& f2,
                                          const BooleanFunction& g1, const BooleanFunction& g2,
                                          std::optional<bool> verify = {}) {
  detail::require_same_arity({&f1, &f2});
  detail::require_same_arity({&g1, &g2});
  int r = f1.n(), m = g1.n(), n = r + m + 2;
  if (resolve_verify(verify, std::max(r, m))) {
    detail::require_bent("f1", f1);
    detail::require_bent("f2", f2);
    detail::require_bent("g1", g1);
    detail::require_bent("g2", g2);
  }
  BooleanFunction F1 = embed(f1, n, 0), F2 = embed(f2, n, 0);
  BooleanFunction G1 = embed(g1, n, r), G2 = embed(g2, n, r);
  BooleanFunction Z1 = BooleanFunction::variable(n, r + m + 1);
  BooleanFunction Z2 = BooleanFunction::variable(n, r + m + 2);
  return F2 ^ G2 ^ ((G1 ^ G2 ^ Z2) & (F1 ^ F2 ^ Z1));
}

inline BooleanFunction gen_indirect_sum_c(const BooleanFunction& f1, const BooleanFunction& f2,
                                          const BooleanFunction& g1, const BooleanFunction& g2,
                                          std::optional<bool> verify = {}) {
  detail::require_same_arity({&f1, &f2});
  detail::require_same_arity({&g1, &g2});
  int r = f1.n(), m = g1.n(), n = r + m + 4;
  if (resolve_verify(verify, std::max(r, m))) {
    detail::require_bent("f1", f1);
    detail::require_bent("f2", f2);
    detail::require_bent("g1", g1);
    detail::require_bent("g2", g2);
  }
  BooleanFunction F1 = embed(f1, n, 0), F2 = embed(f2, n, 0);
  BooleanFunction G1 = embed(g1, n, r), G2 = embed(g2, n, r);
  BooleanFunction Z1 = BooleanFunction::variable(n, r + m + 1);
  BooleanFunction Z2 = BooleanFunction::variable(n, r + m + 2);
  BooleanFunction Z3 = BooleanFunction::variable(n, r + m + 3);
  BooleanFunction Z4 = BooleanFunction::variable(n, r + m + 4);
  return F2 ^ G2 ^ (Z1 & (G1 ^ G2 ^ Z2) & (F1 ^ F2)) ^ (Z1 & Z4 & (G1 ^ G2)) ^ (Z2 & Z4) ^
         (Z1 & Z3);
}

// k >= 2 bent pairs glued through a form synthesized over the complement-pair
// support M_1 | ... | M_k with a free bent dual on the t index variables
inline PairResult gen_indirect_sum_k(
    const std::vector<std::pair<BooleanFunction, BooleanFunction>>& pairs,
    const std::vector<BooleanFunction>& ells, const BooleanFunction& xi_dual,
    std::optional<bool> verify = {}) {
  size_t k = pairs.size();
  if (k < 2) throw error(errc::dimension_mismatch, "need at least two pairs");
  if (ells.size() != k)
    throw error(errc::dimension_mismatch, "need one selector per pair");
  int t = xi_dual.n();
  for (const auto& l : ells)
    if (l.n() != t)
      throw error(errc::dimension_mismatch, "selectors must live on the dual's variables");
  int n = 0, max_r = 0;
  for (const auto& [p, q] : pairs) {
    if (p.n() != q.n()) throw error(errc::dimension_mismatch, "pair mixes variable counts");
    n += p.n();
    max_r = std::max(max_r, p.n());
  }
  if (resolve_verify(verify, max_r)) {
    for (size_t i = 0; i < k; ++i) {
      detail::require_bent("pair " + std::to_string(i + 1) + " first", pairs[i].first);
      detail::require_bent("pair " + std::to_string(i + 1) + " second", pairs[i].second);
      if (algebraic_degree(ells[i]) > 1)
        throw error(errc::precondition_failed,
                    "selector " + std::to_string(i + 1) + " is not affine");
    }
    detail::require_bent("form dual", xi_dual);
  }
  std::vector<RowBlock> blocks;
  for (const auto& l : ells) blocks.push_back(complement_pair(l));
  RowBlock support = interleave(blocks);
  BooleanFunction xi =
      synthesize_rows(2 * static_cast<int>(k), 2 * static_cast<int>(k) - t, support.rows, xi_dual);

  auto build = [&](bool starred) {
    std::vector<BooleanFunction> coords;
    int off = 0;
    for (const auto& [p, q] : pairs) {
      coords.push_back(embed(starred ? dual(p).fstar : p, n, off));
      coords.push_back(embed(starred ? dual(q).fstar : q, n, off));
      off += p.n();
    }
    return compose(xi, coords);
  };
  PairResult out{build(false), {}};
  bool all_bent = true;
  for (const auto& [p, q] : pairs)
    all_bent = all_bent && classify(p).is_bent() && classify(q).is_bent();
  if (all_bent) out.dual = build(true);
  return out;
}

// ---- indicator-subspace methods ---------------------------------------------

namespace detail {

// basis of the orthogonal complement; rows must be independent
inline std::vector<uint32_t> nullspace_basis(int k, std::vector<uint32_t> rows) {
  std::vector<uint32_t> red;
  for (uint32_t r : rows) {
    for (uint32_t b : red) r = std::min(r, r ^ b);
    if (!r) throw error(errc::precondition_failed, "subspace basis rows are dependent");
    red.push_back(r);
  }
  for (size_t i = 0; i < red.size(); ++i)
    for (size_t j = 0; j < red.size(); ++j)
      if (j != i && (red[j] & (uint32_t{1} << (31 - std::countl_zero(red[i])))))
        red[j] ^= red[i];
  uint32_t pivots = 0;
  for (uint32_t r : red) pivots |= uint32_t{1} << (31 - std::countl_zero(r));
  std::vector<uint32_t> out;
  for (int p = k - 1; p >= 0; --p) {
    if ((pivots >> p) & 1) continue;
    uint32_t v = uint32_t{1} << p;
    for (uint32_t r : red)
      if ((r >> p) & 1) v |= uint32_t{1} << (31 - std::countl_zero(r));
    out.push_back(v);
  }
  return out;
}

inline std::vector<uint32_t> span_of(const std::vector<uint32_t>& basis) {
  std::vector<uint32_t> pts{0};
  for (uint32_t b : basis) {
    size_t len = pts.size();
    for (size_t i = 0; i < len; ++i) pts.push_back(pts[i] ^ b);
  }
  return pts;
}

}  // namespace detail

struct IndicatorSpec {
  BooleanFunction a;
  VectorialFunction coords;
  std::vector<uint32_t> u_basis;  // may be empty: U = {0}
};

// F = a + phi_U(h_1,...,h_k), phi_U the indicator of U evaluated on h
inline BooleanFunction indicator_construct(const IndicatorSpec& spec) {
  int k = spec.coords.k();
  if (spec.a.n() != spec.coords.n())
    throw error(errc::dimension_mismatch, "a and coordinates on different variable counts");
  if (static_cast<int>(spec.u_basis.size()) > k)
    throw error(errc::precondition_failed, "subspace dimension exceeds k");
  for (uint32_t b : spec.u_basis)
    if (b >> k) throw error(errc::row_out_of_range, "basis vector exceeds 2^k");
  std::vector<uint32_t> perp = detail::nullspace_basis(k, spec.u_basis);
  BooleanFunction r(spec.a.n());
  for (uint64_t x = 0; x < r.size(); ++x) {
    uint32_t hv = spec.coords(x);
    int prod = 1;
    for (uint32_t lam : perp) prod &= dot(lam, hv) ^ 1;
    r.set(x, spec.a(x) ^ prod);
  }
  return r;
}

// W_F(v) = W_a(v) - 2^{1-k+tau} sum_{w in U_perp} W_{a + w.h}(v), exactly
inline bool indicator_wht_identity_check(const IndicatorSpec& spec, uint32_t v) {
  int k = spec.coords.k();
  int tau = static_cast<int>(spec.u_basis.size());
  std::vector<uint32_t> perp = detail::nullspace_basis(k, spec.u_basis);
  int32_t lhs = wht(indicator_construct(spec)).coeffs[v];
  int32_t wa = wht(spec.a).coeffs[v];
  int64_t acc = 0;
  for (uint32_t w : detail::span_of(perp))
    acc += wht(spec.a ^ component(spec.coords, w)).coeffs[v];
  int e = k - 1 - tau;
  int64_t rhs;
  if (e >= 0) {
    if (acc & ((int64_t{1} << e) - 1)) return false;
    rhs = wa - acc / (int64_t{1} << e);
  } else {
    rhs = wa - 2 * acc;
  }
  return lhs == rhs;
}

inline BooleanFunction generic_method_a(const BooleanFunction& f1, const BooleanFunction& f2,
                                        const BooleanFunction& f3, uint32_t m,
                                        std::optional<bool> verify = {}) {
  detail::require_same_arity({&f1, &f2, &f3});
  int n = f1.n();
  if (m >> n) throw error(errc::row_out_of_range, "mask exceeds 2^n");
  if (resolve_verify(verify, n)) {
    BooleanFunction f4 = f1 ^ f2 ^ f3;
    detail::require_bent("f1", f1);
    detail::require_bent("f2", f2);
    detail::require_bent("f3", f3);
    detail::require_bent("f4 = f1+f2+f3", f4);
    BooleanFunction sum = dual(f1).fstar ^ dual(f2).fstar ^ dual(f3).fstar ^ dual(f4).fstar;
    if (sum != BooleanFunction(n))
      throw error(errc::precondition_failed, "dual-sum not constant 0");
  }
  BooleanFunction ell = BooleanFunction::linear(n, m);
  return f1 ^ (~ell & ~(f1 ^ f2) & ~(f1 ^ f3));
}

struct MesnagerResult {
  BooleanFunction g;
  BooleanFunction gdual;
};

inline MesnagerResult mesnager_g(const BooleanFunction& f1, const BooleanFunction& f2,
                                 const BooleanFunction& f3, std::optional<bool> verify = {}) {
  detail::require_same_arity({&f1, &f2, &f3});
  int n = f1.n();
  BooleanFunction psi = f1 ^ f2 ^ f3;
  if (resolve_verify(verify, n)) {
    detail::require_bent("f1", f1);
    detail::require_bent("f2", f2);
    detail::require_bent("f3", f3);
    detail::require_bent("psi = f1+f2+f3", psi);
    BooleanFunction sum =
        dual(f1).fstar ^ dual(f2).fstar ^ dual(f3).fstar ^ dual(psi).fstar;
    if (sum != BooleanFunction(n)) {
      uint64_t witness = 0;
      while (!sum(witness)) ++witness;
      throw error(errc::precondition_failed,
                  "dual condition fails at " + to_bitstring(static_cast<uint32_t>(witness), n));
    }
  }
  BooleanFunction d1 = dual(f1).fstar, d2 = dual(f2).fstar, d3 = dual(f3).fstar;
  return {(f1 & f2) ^ (f1 & f3) ^ (f2 & f3), (d1 & d2) ^ (d1 & d3) ^ (d2 & d3)};
}

// x.pi(y) + [x.(pi+phi)(y)] lambda(y) + eta(y) with lambda = g1+g2, eta = g1 g2
inline BooleanFunction dualcor_family(const std::vector<uint32_t>& pi,
                                      const std::vector<uint32_t>& phi,
                                      const BooleanFunction& g1, const BooleanFunction& g2,
                                      std::optional<bool> verify = {}) {
  detail::require_same_arity({&g1, &g2});
  int half = g1.n();
  size_t len = size_t{1} << half;
  auto check_perm = [&](const std::vector<uint32_t>& p, const char* name) {
    if (p.size() != len)
      throw error(errc::length_mismatch, std::string(name) + " length must be 2^(n/2)");
    std::vector<bool> seen(len, false);
    for (uint32_t v : p) {
      if (v >= len || seen[v])
        throw error(errc::precondition_failed, std::string(name) + " is not a permutation");
      seen[v] = true;
    }
  };
  check_perm(pi, "pi");
  check_perm(phi, "phi");
  BooleanFunction lambda = g1 ^ g2;
  if (resolve_verify(verify, 2 * half)) {
    std::vector<uint32_t> pi_inv(len), phi_inv(len);
    for (uint32_t y = 0; y < len; ++y) {
      pi_inv[pi[y]] = y;
      phi_inv[phi[y]] = y;
    }
    for (uint32_t y = 0; y < len; ++y)
      if (lambda(pi_inv[y]) != lambda(phi_inv[y]))
        throw error(errc::precondition_failed,
                    "lambda(pi^-1) != lambda(phi^-1) at y = " + to_bitstring(y, half));
  }
  BooleanFunction eta = g1 & g2;
  BooleanFunction F(2 * half);
  for (uint64_t x = 0; x < len; ++x)
    for (uint64_t y = 0; y < len; ++y) {
      uint32_t xv = static_cast<uint32_t>(x);
      int val = dot(xv, pi[y]) ^ (dot(xv, pi[y] ^ phi[y]) & lambda(y)) ^ eta(y);
      F.set((x << half) | y, val);
    }
  return F;
}

// a + phi_U(h) when the four functions a + w.h (w in U_perp) are pairwise
// disjoint-spectra z-plateaued; z > 2 gives (z-2)-plateaued, z = 2 gives bent
inline BooleanFunction disjoint_spectra_construct(const BooleanFunction& a,
                                                  const VectorialFunction& h,
                                                  const std::vector<uint32_t>& u_basis, int z,
                                                  std::optional<bool> verify = {}) {
  int k = h.k();
  if (static_cast<int>(u_basis.size()) != k - 2)
    throw error(errc::dimension_mismatch, "subspace dimension must be k - 2");
  if (z < 2) throw error(errc::precondition_failed, "amplitude parameter must be at least 2");
  IndicatorSpec spec{a, h, u_basis};
  if (resolve_verify(verify, a.n())) {
    std::vector<uint32_t> perp = detail::nullspace_basis(k, u_basis);
    std::vector<uint32_t> omegas = detail::span_of(perp);
    std::vector<WalshSpectrum> spectra;
    for (uint32_t w : omegas) {
      BooleanFunction g = a ^ component(h, w);
      WalshSpectrum sp = wht(g);
      if (!classify(sp).is_plateaued(z))
        throw error(errc::precondition_failed,
                    "wrong amplitude at omega = " + to_bitstring(w, k));
      spectra.push_back(std::move(sp));
    }
    for (size_t i = 0; i < spectra.size(); ++i)
      for (size_t j = i + 1; j < spectra.size(); ++j)
        for (size_t v = 0; v < spectra[i].coeffs.size(); ++v)
          if (spectra[i].coeffs[v] != 0 && spectra[j].coeffs[v] != 0)
            throw error(errc::precondition_failed,
                        "supports overlap for omega pair " + to_bitstring(omegas[i], k) +
                            ", " + to_bitstring(omegas[j], k));
  }
  BooleanFunction result = indicator_construct(spec);
  if (resolve_verify(verify, a.n())) {
    SpectrumClass rc = classify(result);
    bool ok = z > 2 ? rc.is_plateaued(z - 2) : rc.is_bent();
    if (!ok) throw std::logic_error("disjoint-spectra claim breached");
  }
  return result;
}

// sum of plateaued functions whose linear supports form a direct sum
inline BooleanFunction direct_sum_supports(const std::vector<BooleanFunction>& ds) {
  if (ds.empty()) throw error(errc::dimension_mismatch, "no summands");
  int n = ds.front().n();
  for (const auto& d : ds)
    if (d.n() != n) throw error(errc::dimension_mismatch, "summands on different variable counts");
  int sum_dims = 0;
  std::vector<uint32_t> merged;
  for (const auto& d : ds) {
    WalshSpectrum sp = wht(d);
    SpectrumClass c = classify(sp);
    if (c.tag != SpectrumClass::tag_t::plateaued && c.tag != SpectrumClass::tag_t::bent)
      throw error(errc::supports_not_linear, "summand is not plateaued");
    auto span = is_affine_subspace(walsh_support(sp));
    if (!span || span->v != 0)
      throw error(errc::supports_not_linear, "support is not a linear subspace");
    sum_dims += static_cast<int>(span->basis.size());
    merged.insert(merged.end(), span->basis.begin(), span->basis.end());
  }
  int t = n - sum_dims;
  if (t < 0) throw error(errc::negative_t, "support dimensions exceed n");
  std::vector<uint32_t> red;
  for (uint32_t v : merged) {
    for (uint32_t b : red) v = std::min(v, v ^ b);
    if (v) red.push_back(v);
  }
  if (static_cast<int>(red.size()) != sum_dims)
    throw error(errc::not_direct_sum, "supports intersect nontrivially");
  BooleanFunction result = ds.front();
  for (size_t i = 1; i < ds.size(); ++i) result = result ^ ds[i];
  return result;
}

}  // namespace bft
