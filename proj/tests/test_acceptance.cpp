// acceptance gate: one pass/fail line per criterion, nonzero exit on failure
#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>

#include "bft/analysis.hpp"
#include "bft/constructions.hpp"

using namespace bft;

namespace {

int failures = 0;

void report(int idx, const std::string& label, bool ok, const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << label;
  if (!note.empty()) std::cout << "  [" << note << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

BooleanFunction fn(const std::string& s, int n) { return function_of(parse_anf(s, n)); }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// random member of the completed Maiorana-McFarland class on r variables
BooleanFunction random_bent(int r, std::mt19937& rng) {
  int h = r / 2;
  std::vector<uint32_t> pi(size_t{1} << h);
  std::iota(pi.begin(), pi.end(), 0u);
  std::shuffle(pi.begin(), pi.end(), rng);
  BooleanFunction g(h);
  for (uint64_t y = 0; y < g.size(); ++y) g.set(y, rng() & 1);
  uint32_t mask = (uint32_t{1} << h) - 1;
  BooleanFunction f(r);
  for (uint64_t x = 0; x < f.size(); ++x)
    f.set(x, dot(static_cast<uint32_t>(x >> h), pi[x & mask]) ^ g(x & mask));
  return f;
}

// three bents sharing the product part, so the dual sum vanishes identically
std::array<BooleanFunction, 3> same_product_triple(int r, std::mt19937& rng) {
  int h = r / 2;
  std::vector<uint32_t> pi(size_t{1} << h);
  std::iota(pi.begin(), pi.end(), 0u);
  std::shuffle(pi.begin(), pi.end(), rng);
  uint32_t mask = (uint32_t{1} << h) - 1;
  std::array<BooleanFunction, 3> out{BooleanFunction(r), BooleanFunction(r),
                                     BooleanFunction(r)};
  for (auto& f : out) {
    BooleanFunction g(h);
    for (uint64_t y = 0; y < g.size(); ++y) g.set(y, rng() & 1);
    for (uint64_t x = 0; x < f.size(); ++x)
      f.set(x, dot(static_cast<uint32_t>(x >> h), pi[x & mask]) ^ g(x & mask));
  }
  return out;
}

BooleanFunction random_affine(int r, std::mt19937& rng) {
  BooleanFunction l =
      BooleanFunction::linear(r, static_cast<uint32_t>(rng()) & ((uint32_t{1} << r) - 1));
  if (rng() & 1) l = l ^ BooleanFunction::constant(r, 1);
  return l;
}

BooleanFunction random_function(int n, std::mt19937& rng) {
  BooleanFunction f(n);
  for (uint64_t x = 0; x < f.size(); ++x) f.set(x, rng() & 1);
  return f;
}

const BooleanFunction sign_dual = BooleanFunction::from_values(2, {0, 0, 0, 1});

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  BooleanFunction f =
      synthesize_plateaued({order_support({6, 13, 16, 27}, 5), sign_dual});
  double ms = ms_since(t0);
  BooleanFunction want =
      fn("x2*x4 + x4*x5 + x1*x2 + x1*x4 + x1*x5 + x3 + x2*x3 + x3*x4 + x3*x5", 5);
  bool ok = f == want && classify(f).is_plateaued(3) && ms < 1.0;
  report(1, "five-variable synthesis regression", ok,
         std::to_string(ms).substr(0, 5) + " ms");
}

void criterion_2() {
  BooleanFunction g = fn("x3*x4 + 1", 4);
  std::vector<uint32_t> rows;
  for (uint32_t i = 0; i < 16; ++i)
    rows.push_back((i << 1) | static_cast<uint32_t>(g(i)));
  BooleanFunction f =
      synthesize_plateaued({order_support(rows, 5), fn("x1*x3 + x2*x4", 4)});
  bool ok = f == fn("x1*x2*x5 + x1*x3 + x2*x4 + x5", 5) && classify(f).is_plateaued(1) &&
            !is_affine_subspace(walsh_support(f)).has_value();
  report(2, "semi-bent synthesis regression", ok);
}

void criterion_3() {
  const BooleanFunction& form = rothaus_form();
  bool ok = classify(form).is_plateaued(3) &&
            walsh_support(form) == std::vector<uint32_t>{5, 10, 16, 31};
  report(3, "rothaus form profile", ok);
}

void criterion_4() {
  bool ok =
      gen_rothaus_a_form() ==
          fn("x1 + x2*x4 + x2*x5 + x1*x4 + x1*x6 + x3*x5 + x3*x6 + x4*x5 + x4*x6 + x4*x7 + "
             "x5*x7",
             7) &&
      gen_rothaus_b_form() == fn("x2 + x1*x3*x4 + x2*x3*x4 + x3*x5 + x4*x6", 6) &&
      gis_a_form() ==
          fn("x2 + x4 + x6 + x8 + x1*x3 + x2*x3 + x3*x7 + x3*x8 + x1*x4 + x2*x4 + x4*x7 + "
             "x4*x8 + x1*x5 + x2*x5 + x1*x6 + x2*x6",
             8) &&
      gis_b_form() ==
          fn("x2 + x4 + x1*x3 + x2*x3 + x3*x5 + x1*x4 + x2*x4 + x4*x5 + x1*x6 + x2*x6 + "
             "x5*x6",
             6) &&
      gis_c_form() ==
          fn("x2 + x4 + x1*x3*x5 + x2*x3*x5 + x1*x4*x5 + x2*x4*x5 + x1*x5*x6 + x2*x5*x6 + "
             "x3*x5*x8 + x4*x5*x8 + x6*x8 + x5*x7",
             8);
  report(4, "stored forms match their displays", ok);
}

void criterion_5() {
  std::mt19937 rng(20260815);
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  auto expect_bent = [&](const BooleanFunction& f) { ok = ok && verify_bent(f); };
  for (int trial = 0; trial < 100 && ok; ++trial) {
    int r = (rng() & 1) ? 4 : 2;
    int m = (rng() & 1) ? 4 : 2;

    BooleanFunction a = random_bent(r, rng);
    BooleanFunction b = a ^ random_affine(r, rng), c = a ^ random_affine(r, rng);
    expect_bent(rothaus(a, b, c, true));
    expect_bent(generalized_rothaus_a(a, b, c, true));
    expect_bent(generalized_rothaus_b(random_bent(r, rng), random_bent(r, rng), true));

    auto trio = same_product_triple(r, rng);
    expect_bent(generic_method_a(trio[0], trio[1], trio[2], 0, true));
    expect_bent(mesnager_g(trio[0], trio[1], trio[2], true).g);

    // identity-permutation family: shifting the dual by (s,0) and (0,t) leaves
    // the second derivative dot(s,t), so an odd pairing meets the sum-one rule
    int h = r / 2;
    uint32_t mask = (uint32_t{1} << h) - 1;
    BooleanFunction base(r);
    BooleanFunction g0 = random_function(h, rng);
    for (uint64_t x = 0; x < base.size(); ++x)
      base.set(x, dot(static_cast<uint32_t>(x >> h), static_cast<uint32_t>(x) & mask) ^
                      g0(x & mask));
    uint32_t s = 1 + static_cast<uint32_t>(rng()) % mask;
    uint32_t t;
    do {
      t = static_cast<uint32_t>(rng()) & mask;
    } while (!dot(s, t));
    expect_bent(bent_concatenation(base, base ^ BooleanFunction::linear(r, s << h),
                                   base ^ BooleanFunction::linear(r, t), true));

    BooleanFunction f1 = random_bent(r, rng), f2 = random_bent(r, rng);
    BooleanFunction g1 = random_bent(m, rng), g2 = random_bent(m, rng);
    expect_bent(indirect_sum(f1, f2, g1, g2, true).result);
    expect_bent(gen_indirect_sum_a(f1, f2, g1, g2, random_bent(2, rng), random_bent(2, rng),
                                   random_bent(2, rng), random_bent(2, rng), true)
                    .result);
    expect_bent(gen_indirect_sum_b(f1, f2, g1, g2, true));
    expect_bent(gen_indirect_sum_c(f1, f2, g1, g2, true));

    std::vector<std::pair<BooleanFunction, BooleanFunction>> pairs;
    for (int i = 0; i < 3; ++i) pairs.emplace_back(random_bent(r, rng), random_bent(r, rng));
    std::vector<BooleanFunction> ells{BooleanFunction::variable(2, 1),
                                      BooleanFunction::variable(2, 2),
                                      random_affine(2, rng)};
    BooleanFunction xd = fn("x1*x2", 2) ^ random_affine(2, rng);
    expect_bent(gen_indirect_sum_k(pairs, ells, xd, true).result);
  }
  double ms = ms_since(t0);
  ok = ok && ms < 10000.0;
  report(5, "randomized construction sweep", ok, std::to_string(ms).substr(0, 6) + " ms");
}

void criterion_6() {
  std::mt19937 rng(1735);
  bool ok = true;
  for (int sz : {2, 4}) {
    for (int trial = 0; trial < 3; ++trial) {
      BooleanFunction f1 = random_bent(sz, rng), f2 = random_bent(sz, rng);
      BooleanFunction g1 = random_bent(sz, rng), g2 = random_bent(sz, rng);
      PairResult is = indirect_sum(f1, f2, g1, g2, true);
      ok = ok && is.dual && *is.dual == dual(is.result).fstar;
      PairResult ga = gen_indirect_sum_a(f1, f2, g1, g2, random_bent(sz, rng),
                                         random_bent(sz, rng), random_bent(sz, rng),
                                         random_bent(sz, rng), true);
      ok = ok && ga.dual && *ga.dual == dual(ga.result).fstar;
    }
  }
  report(6, "formula duals match spectral duals", ok);
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  auto mm_shift = [](uint32_t q, const BooleanFunction& g) {
    BooleanFunction f(4);
    for (uint32_t x = 0; x < 16; ++x) f.set(x, dot(x >> 2, (x & 3) ^ q) ^ g(x & 3));
    return f;
  };
  BooleanFunction a = mm_shift(1, fn("x1*x2", 2));
  BooleanFunction b = mm_shift(2, BooleanFunction(2));
  BooleanFunction c = mm_shift(3, BooleanFunction(2));
  BooleanFunction f = generalized_rothaus_a(a, b, c, true);
  MmCertificate cert = outside_mm_certificate(f);
  double ms = ms_since(t0);
  bool ok = verify_bent(f) && algebraic_degree(f) == 3 &&
            cert.verdict == MmCertificate::verdict_t::outside_for_this_split &&
            cert.witness && (cert.witness->first != 0 || cert.witness->second != 0) &&
            ms < 1000.0;
  report(7, "split certificate regression", ok, std::to_string(ms).substr(0, 5) + " ms");
}

void criterion_8() {
  // every 4-point subset of F_2^4 crossed with every sign pattern
  std::vector<std::vector<uint32_t>> supports;
  for (uint32_t a = 0; a < 16; ++a)
    for (uint32_t b = a + 1; b < 16; ++b)
      for (uint32_t c = b + 1; c < 16; ++c)
        for (uint32_t d = c + 1; d < 16; ++d) supports.push_back({a, b, c, d});
  bool ok = supports.size() == 1820;
  int checked = 0;
  for (const auto& pts : supports) {
    OrderedSupport sup = order_support(pts, 4);
    SequenceProfile prof = sequence_profile(sup);
    for (uint32_t d = 0; d < 16; ++d) {
      BooleanFunction dual_fn(2);
      for (int i = 0; i < 4; ++i) dual_fn.set(i, (d >> i) & 1);
      bool synth_ok = true;
      try {
        BooleanFunction f = synthesize_rows(4, 2, sup.omega_list, dual_fn);
        synth_ok = classify(f).is_plateaued(2);
      } catch (const error& e) {
        if (e.kind != errc::dual_not_at_bent_distance) throw;
        synth_ok = false;
      }
      ok = ok && synth_ok == profile_distance_check(dual_fn, prof);
      ++checked;
    }
  }
  report(8, "exhaustive 2-plateaued synthesis iff profile distance", ok,
         std::to_string(checked) + " cases");
}

void criterion_9() {
  std::mt19937 rng(991);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    int n = k + static_cast<int>(rng() % (9 - k));
    if (n > 8) n = 8;
    BooleanFunction f = random_function(n, rng);
    WalshSpectrum sp = wht(f);
    int64_t energy = 0;
    for (int32_t w : sp.coeffs) energy += int64_t{w} * w;
    ok = ok && energy == (int64_t{1} << (2 * n));
    ok = ok && inverse_wht(sp) == f;
    ok = ok && function_of(anf_of(f)) == f;

    CompositeSpec spec{random_function(k, rng), {}};
    for (int i = 0; i < k; ++i) spec.coords.push_back(random_function(n, rng));
    uint32_t u = static_cast<uint32_t>(rng()) & ((uint32_t{1} << k) - 1);
    ok = ok && composite_wht_identity_check(spec, u);
  }
  report(9, "transform and composite identities on random data", ok);
}

void criterion_10() {
  BooleanFunction fa = synthesize_rows(6, 4, {0, 1, 2, 3}, sign_dual);
  BooleanFunction fb = synthesize_rows(6, 4, {4, 5, 6, 7}, sign_dual);
  BooleanFunction ell = BooleanFunction::linear(6, 32);
  BooleanFunction glued = disjoint_spectra_construct(
      fa, VectorialFunction({fa ^ fb, ell}), std::vector<uint32_t>{}, 4, true);
  BooleanFunction shifted = fa ^ ((fa ^ fb) & (ell ^ BooleanFunction::constant(6, 1)));
  bool ok = classify(glued).is_plateaued(2) && classify(shifted).is_plateaued(2);

  BooleanFunction d1 = synthesize_rows(4, 2, {0, 4, 8, 12}, sign_dual);
  BooleanFunction d2 = synthesize_rows(4, 2, {0, 1, 2, 3}, sign_dual);
  ok = ok && verify_bent(direct_sum_supports({d1, d2}));
  report(10, "disjoint spectra and direct-sum gluing", ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures) {
    std::cout << failures << " criteria FAILED\n";
    return 1;
  }
  std::cout << "all criteria pass\n";
  return 0;
}
