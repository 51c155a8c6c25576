#pragma once

#include <cstdint>
#include <map>

#include "bft/boolfun.hpp"

namespace bft {

// Exact spectrum W_f(w) = sum_x (-1)^{f(x) + w.x}; coefficients fit int32 for
// n <= n_max.
struct WalshSpectrum {
  int n;
  std::vector<int32_t> coeffs;
};

namespace detail {

inline void butterfly(std::vector<int32_t>& a) {
  for (size_t h = 1; h < a.size(); h <<= 1)
    for (size_t i = 0; i < a.size(); i += h << 1)
      for (size_t j = i; j < i + h; ++j) {
        int32_t u = a[j], v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
}

inline void check_parseval(const WalshSpectrum& s) {
  uint64_t sum = 0;
  for (int32_t c : s.coeffs) sum += uint64_t(int64_t(c) * c);
  if (sum != uint64_t{1} << (2 * s.n))
    throw std::logic_error("energy conservation violated in transform");
}

}  // namespace detail

inline WalshSpectrum wht(const BooleanFunction& f) {
  WalshSpectrum s{f.n(), std::vector<int32_t>(f.size())};
  for (uint64_t x = 0; x < f.size(); ++x) s.coeffs[x] = 1 - 2 * f(x);
  detail::butterfly(s.coeffs);
  detail::check_parseval(s);
  return s;
}

// exact inversion; rejects spectra whose inverse is not a sign vector
inline BooleanFunction inverse_wht(const WalshSpectrum& s) {
  size_t len = s.coeffs.size();
  if (len != size_t{1} << s.n)
    throw error(errc::length_mismatch, "spectrum length does not match n");
  std::vector<int32_t> a = s.coeffs;
  detail::butterfly(a);
  int32_t full = int32_t{1} << s.n;
  BooleanFunction f(s.n);
  for (uint64_t x = 0; x < len; ++x) {
    if (a[x] == -full) f.set(x, 1);
    else if (a[x] != full)
      throw error(errc::spectrum_not_boolean,
                  "inverse transform is not a sign vector at index " + std::to_string(x));
  }
  return f;
}

struct SpectrumClass {
  enum class tag_t { bent, plateaued, affine, other };
  tag_t tag;
  int s;  // plateau order; 0 for bent, n for affine, -1 for other
  std::map<int32_t, uint64_t> distribution;

  bool is_bent() const { return tag == tag_t::bent; }
  bool is_plateaued(int order) const { return tag == tag_t::plateaued && s == order; }
};

inline const char* tag_name(SpectrumClass::tag_t t) {
  switch (t) {
    case SpectrumClass::tag_t::bent: return "bent";
    case SpectrumClass::tag_t::plateaued: return "plateaued";
    case SpectrumClass::tag_t::affine: return "affine";
    default: return "other";
  }
}

inline SpectrumClass classify(const WalshSpectrum& s) {
  SpectrumClass c{SpectrumClass::tag_t::other, -1, {}};
  for (int32_t v : s.coeffs) ++c.distribution[v];

  int32_t amp = 0;
  bool single_amp = true;
  uint64_t nonzero = 0;
  for (auto [v, cnt] : c.distribution) {
    if (v == 0) continue;
    nonzero += cnt;
    int32_t a = v < 0 ? -v : v;
    if (amp == 0) amp = a;
    else if (amp != a) single_amp = false;
  }
  if (!single_amp || amp == 0) return c;

  uint64_t zeros = s.coeffs.size() - nonzero;
  if (s.n % 2 == 0 && amp == int32_t{1} << (s.n / 2) && zeros == 0) {
    c.tag = SpectrumClass::tag_t::bent;
    c.s = 0;
    return c;
  }
  if (amp == int32_t{1} << s.n && nonzero == 1) {
    c.tag = SpectrumClass::tag_t::affine;
    c.s = s.n;
    return c;
  }
  // remaining candidates: amp = 2^{(n+s)/2} with 0 < s < n, s == n mod 2
  int e = std::countr_zero(static_cast<uint32_t>(amp));
  if ((int32_t{1} << e) != amp) return c;
  int ss = 2 * e - s.n;  // forces s == n (mod 2)
  if (ss <= 0 || ss >= s.n) return c;
  if (zeros != (uint64_t{1} << s.n) - (uint64_t{1} << (s.n - ss))) return c;
  c.tag = SpectrumClass::tag_t::plateaued;
  c.s = ss;
  return c;
}

inline SpectrumClass classify(const BooleanFunction& f) { return classify(wht(f)); }

inline std::vector<uint32_t> walsh_support(const WalshSpectrum& s) {
  std::vector<uint32_t> pts;
  for (uint64_t w = 0; w < s.coeffs.size(); ++w)
    if (s.coeffs[w] != 0) pts.push_back(static_cast<uint32_t>(w));
  return pts;
}

inline std::vector<uint32_t> walsh_support(const BooleanFunction& f) {
  return walsh_support(wht(f));
}

// Dual of a bent or s-plateaued f: the support is v + E with E = {e_0 < e_1 <
// ...} listed by increasing integer value, e_0 = 0, and the dual's table entry
// j is the sign of W_f(v + e_j).  Default v is the minimal support point.
struct Dual {
  uint32_t v;
  int s;
  BooleanFunction fstar;
};

inline Dual dual(const BooleanFunction& f, std::optional<uint32_t> v = {}) {
  WalshSpectrum sp = wht(f);
  SpectrumClass c = classify(sp);
  if (c.tag != SpectrumClass::tag_t::bent && c.tag != SpectrumClass::tag_t::plateaued)
    throw error(errc::not_plateaued_or_bent, "dual requires a bent or plateaued function");
  std::vector<uint32_t> supp = walsh_support(sp);
  uint32_t vv = v.value_or(supp.front());
  if (vv >= sp.coeffs.size() || sp.coeffs[vv] == 0)
    throw error(errc::v_not_in_support, "v is not a support point");

  std::vector<uint32_t> e;
  e.reserve(supp.size());
  for (uint32_t p : supp) e.push_back(p ^ vv);
  std::sort(e.begin(), e.end());

  BooleanFunction fstar(f.n() - c.s);
  for (size_t j = 0; j < e.size(); ++j)
    fstar.set(j, sp.coeffs[vv ^ e[j]] < 0);
  return Dual{vv, c.s, fstar};
}

// d_H(f,g) in {2^{n-1} +- 2^{n/2-1}} via the sign-vector correlation
inline bool bent_distance(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n() != g.n()) throw error(errc::dimension_mismatch, "variable counts differ");
  if (f.n() % 2 != 0) return false;
  int64_t d = static_cast<int64_t>((f ^ g).weight());
  int64_t corr = (int64_t{1} << f.n()) - 2 * d;
  return corr == (int64_t{1} << (f.n() / 2)) || corr == -(int64_t{1} << (f.n() / 2));
}

}  // namespace bft
