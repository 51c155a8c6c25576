#pragma once

#include "bft/synth.hpp"

namespace bft {

inline bool verify_bent(const BooleanFunction& f) { return classify(f).is_bent(); }

inline bool verify_plateaued(const BooleanFunction& f, int s) {
  return classify(f).is_plateaued(s);
}

inline BooleanFunction second_derivative(const BooleanFunction& f, uint32_t alpha,
                                         uint32_t beta) {
  if (alpha == beta) throw error(errc::equal_directions, "directions must differ");
  if ((alpha | beta) >> f.n())
    throw error(errc::row_out_of_range, "direction exceeds 2^n");
  BooleanFunction r(f.n());
  for (uint64_t x = 0; x < r.size(); ++x)
    r.set(x, f(x) ^ f(x ^ alpha) ^ f(x ^ beta) ^ f(x ^ alpha ^ beta));
  return r;
}

// certificate against the completed Maiorana-McFarland class for the fixed
// first-half | second-half split only
struct MmCertificate {
  enum class verdict_t { outside_for_this_split, no_witness_for_this_split };
  int m;
  verdict_t verdict;
  std::optional<std::pair<uint32_t, uint32_t>> witness;  // (alpha', beta'), x-block points
};

inline MmCertificate outside_mm_certificate(const BooleanFunction& f) {
  if (f.n() % 2 != 0) throw error(errc::odd_arity, "certificate needs an even variable count");
  int m = f.n() / 2;
  uint64_t half = uint64_t{1} << m;
  for (uint32_t ap = 1; ap < half; ++ap)
    for (uint32_t bp = 1; bp < half; ++bp) {
      if (ap == bp) continue;
      BooleanFunction d = second_derivative(f, ap << m, bp << m);
      for (uint64_t y = 0; y < half; ++y)
        if (d(y))
          return {m, MmCertificate::verdict_t::outside_for_this_split, {{ap, bp}}};
    }
  return {m, MmCertificate::verdict_t::no_witness_for_this_split, {}};
}

inline bool is_self_dual(const BooleanFunction& f) {
  if (!classify(f).is_bent()) return false;
  return dual(f).fstar == f;
}

inline bool disjoint_spectra(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n() != g.n())
    throw error(errc::dimension_mismatch, "inputs on different variable counts");
  WalshSpectrum a = wht(f), b = wht(g);
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0 && b.coeffs[i] != 0) return false;
  return true;
}

// (w.h)* = w.(h_1*,...,h_k*) for every w in S, duals by brute force
inline bool dual_linearity_check(const VectorialFunction& h, const std::vector<uint32_t>& S) {
  int k = h.k();
  std::vector<BooleanFunction> stars;
  for (int i = 0; i < k; ++i) {
    if (!classify(h.coords[i]).is_bent())
      throw error(errc::precondition_failed,
                  "coordinate " + std::to_string(i + 1) + " is not bent");
    stars.push_back(dual(h.coords[i]).fstar);
  }
  for (uint32_t w : S) {
    BooleanFunction c = component(h, w);
    if (!classify(c).is_bent())
      throw error(errc::precondition_failed,
                  "w.h is not bent at w = " + to_bitstring(w, k));
    BooleanFunction rhs(h.n());
    for (int i = 0; i < k; ++i)
      if ((w >> (k - 1 - i)) & 1) rhs = rhs ^ stars[i];
    if (dual(c).fstar != rhs) return false;
  }
  return true;
}

// fstar at bent distance to every profile row; the synthesis feasibility test
inline bool profile_distance_check(const BooleanFunction& fstar,
                                   const SequenceProfile& profile) {
  for (const auto& row : profile.entries)
    if (row.size() != fstar.size())
      throw error(errc::length_mismatch, "profile row length does not match fstar");
  if (fstar.size() < 4 || std::countr_zero(fstar.size()) % 2 != 0) return false;
  int64_t target = int64_t{1} << (std::countr_zero(fstar.size()) / 2);
  for (const auto& row : profile.entries) {
    int64_t corr = 0;
    for (uint64_t j = 0; j < fstar.size(); ++j) corr += (1 - 2 * fstar(j)) * row[j];
    if (corr != target && corr != -target) return false;
  }
  return true;
}

}  // namespace bft
