#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bft {

constexpr int n_max = 28;

enum class errc {
  capacity,
  parse_error,
  spectrum_not_boolean,
  not_plateaued_or_bent,
  v_not_in_support,
  dimension_mismatch,
  size_not_power_of_two,
  row_out_of_range,
  recursion_violated,
  v_inside_e,
  height_mismatch,
  arity_mismatch,
  precondition_failed,
  support_not_splittable,
  mode_condition_failed,
  dual_not_at_bent_distance,
  supports_not_linear,
  not_direct_sum,
  negative_t,
  equal_directions,
  odd_arity,
  length_mismatch,
};

struct error : std::runtime_error {
  errc kind;
  error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline int dot(uint32_t u, uint32_t x) { return std::popcount(u & x) & 1; }

// Truth table of f : F_2^n -> F_2, packed 64 indices per word.  Table index i
// encodes the input (x_1,...,x_n) with x_1 as the MOST significant bit, so the
// table read left to right is f(0...00), f(0...01), ..., f(1...11).
class BooleanFunction {
 public:
  explicit BooleanFunction(int n) : n_(checked(n)), bits_(word_count(n), 0) {}

  int n() const { return n_; }
  uint64_t size() const { return uint64_t{1} << n_; }

  int operator()(uint64_t x) const {
    return static_cast<int>(bits_[x >> 6] >> (x & 63)) & 1;
  }
  void set(uint64_t x, int v) {
    uint64_t m = uint64_t{1} << (x & 63);
    if (v) bits_[x >> 6] |= m; else bits_[x >> 6] &= ~m;
  }

  bool operator==(const BooleanFunction& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const BooleanFunction& o) const { return !(*this == o); }

  BooleanFunction operator^(const BooleanFunction& o) const {
    BooleanFunction r = same_arity(o);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] ^ o.bits_[i];
    return r;
  }
  BooleanFunction operator&(const BooleanFunction& o) const {
    BooleanFunction r = same_arity(o);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
  }
  BooleanFunction operator~() const {  // f ^ 1
    BooleanFunction r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    r.trim();
    return r;
  }

  uint64_t weight() const {
    uint64_t w = 0;
    for (uint64_t word : bits_) w += std::popcount(word);
    return w;
  }

  static BooleanFunction constant(int n, int v) {
    BooleanFunction f(n);
    if (v) { for (auto& w : f.bits_) w = ~uint64_t{0}; f.trim(); }
    return f;
  }
  // the j-th input variable x_j (1-based), i.e. bit n-j of the table index
  static BooleanFunction variable(int n, int j) {
    if (j < 1 || j > n) throw error(errc::dimension_mismatch, "variable index out of range");
    return linear(n, uint32_t{1} << (n - j));
  }
  // x -> m.x
  static BooleanFunction linear(int n, uint32_t m) {
    BooleanFunction f(n);
    for (uint64_t x = 0; x < f.size(); ++x) f.set(x, dot(m, static_cast<uint32_t>(x)));
    return f;
  }
  static BooleanFunction from_values(int n, const std::vector<int>& vals) {
    BooleanFunction f(n);
    if (vals.size() != f.size()) throw error(errc::length_mismatch, "truth table length mismatch");
    for (uint64_t x = 0; x < f.size(); ++x) f.set(x, vals[x] & 1);
    return f;
  }

  // in-place xor-down transform (Moebius), an involution shared by ANF both ways
  void mobius() {
    static constexpr uint64_t step_mask[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    for (int b = 0; b < n_ && b < 6; ++b)
      for (auto& w : bits_) w ^= (w << (1 << b)) & step_mask[b];
    for (int b = 6; b < n_; ++b) {
      size_t d = size_t{1} << (b - 6);
      for (size_t i = 0; i < bits_.size(); ++i)
        if (i & d) bits_[i] ^= bits_[i ^ d];
    }
    trim();
  }

 private:
  static int checked(int n) {
    if (n < 1 || n > n_max) throw error(errc::capacity, "variable count out of range");
    return n;
  }
  static size_t word_count(int n) { return n < 6 ? 1 : (size_t{1} << (n - 6)); }
  BooleanFunction same_arity(const BooleanFunction& o) const {
    if (n_ != o.n_) throw error(errc::dimension_mismatch, "variable counts differ");
    return BooleanFunction(n_);
  }
  void trim() {
    if (n_ < 6) bits_[0] &= (uint64_t{1} << size()) - 1;
  }

  int n_;
  std::vector<uint64_t> bits_;
};

// Algebraic normal form: the set of exponent vectors u with lambda_u = 1,
// same bit convention as table indices (u's MSB marks x_1).
struct Anf {
  int n;
  std::set<uint32_t> monomials;

  bool operator==(const Anf& o) const { return n == o.n && monomials == o.monomials; }
};

inline Anf anf_of(const BooleanFunction& f) {
  BooleanFunction t = f;
  t.mobius();
  Anf a{f.n(), {}};
  for (uint64_t u = 0; u < t.size(); ++u)
    if (t(u)) a.monomials.insert(static_cast<uint32_t>(u));
  return a;
}

inline BooleanFunction function_of(const Anf& a) {
  BooleanFunction f(a.n);
  for (uint32_t u : a.monomials) f.set(u, 1);
  f.mobius();
  return f;
}

inline int algebraic_degree(const BooleanFunction& f) {
  int d = 0;
  for (uint32_t u : anf_of(f).monomials) d = std::max(d, std::popcount(u));
  return d;
}

struct VectorialFunction {
  std::vector<BooleanFunction> coords;

  explicit VectorialFunction(std::vector<BooleanFunction> c) : coords(std::move(c)) {
    for (const auto& f : coords)
      if (f.n() != coords.front().n())
        throw error(errc::dimension_mismatch, "coordinates on different variable counts");
  }
  int n() const { return coords.front().n(); }
  int k() const { return static_cast<int>(coords.size()); }
  // packed output (h_1(x),...,h_k(x)) with h_1 as MSB
  uint32_t operator()(uint64_t x) const {
    uint32_t v = 0;
    for (const auto& h : coords) v = (v << 1) | h(x);
    return v;
  }
};

// component function w.(h_1,...,h_k)
inline BooleanFunction component(const VectorialFunction& h, uint32_t w) {
  if (w >> h.k()) throw error(errc::dimension_mismatch, "component selector too wide");
  BooleanFunction r(h.n());
  for (int i = 0; i < h.k(); ++i)
    if ((w >> (h.k() - 1 - i)) & 1) r = r ^ h.coords[i];
  return r;
}

// ---- text formats ----------------------------------------------------------

// lowercase hex, 2^n/4 digits (n >= 2): table bit i lands in bit 3-(i mod 4)
// of digit i/4, so the table reads left to right as the hex string does
inline std::string to_hex(const BooleanFunction& f) {
  if (f.n() < 2) throw error(errc::precondition_failed, "hex format needs n >= 2");
  std::string s;
  s.reserve(f.size() / 4);
  for (uint64_t i = 0; i < f.size(); i += 4) {
    int d = f(i) << 3 | f(i + 1) << 2 | f(i + 2) << 1 | f(i + 3);
    s += "0123456789abcdef"[d];
  }
  return s;
}

inline BooleanFunction parse_hex(const std::string& s) {
  size_t len = s.size();
  if (len == 0 || (len & (len - 1)) != 0)
    throw error(errc::parse_error, "hex length must be a power of two");
  int n = 2 + std::countr_zero(len);
  if (n > n_max) throw error(errc::capacity, "hex table too large");
  BooleanFunction f(n);
  for (size_t i = 0; i < len; ++i) {
    char c = s[i];
    int d = c >= '0' && c <= '9' ? c - '0' : c >= 'a' && c <= 'f' ? c - 'a' + 10 : -1;
    if (d < 0) throw error(errc::parse_error, "bad hex digit at position " + std::to_string(i));
    for (int b = 0; b < 4; ++b) f.set(4 * i + b, (d >> (3 - b)) & 1);
  }
  return f;
}

// ANF text: '+'-joined terms, each a '*'-joined product of x1..xn or the
// literal 1; whitespace ignored; variables are 1-based
inline Anf parse_anf(const std::string& s, int n = 0) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw error(errc::parse_error, "empty expression");
  if (t == "0") return Anf{n ? n : 1, {}};  // printed form of the zero polynomial

  std::vector<std::vector<int>> terms;  // variable indices per term
  std::vector<int> cur;
  int max_var = 0;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw error(errc::parse_error, why + " at position " + std::to_string(i));
  };
  bool expect_factor = true;
  while (i < t.size()) {
    if (expect_factor) {
      if (t[i] == '1') {
        ++i;
      } else if (t[i] == 'x') {
        size_t j = ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == j) fail("expected variable index");
        int v = std::stoi(t.substr(j, i - j));
        if (v < 1) fail("variables are 1-based");
        max_var = std::max(max_var, v);
        cur.push_back(v);
      } else {
        fail("expected 'x<k>' or '1'");
      }
      expect_factor = false;
    } else if (t[i] == '*') {
      ++i;
      expect_factor = true;
    } else if (t[i] == '+') {
      ++i;
      terms.push_back(cur);
      cur.clear();
      expect_factor = true;
    } else {
      fail("expected '+' or '*'");
    }
  }
  if (expect_factor) fail("trailing operator");
  terms.push_back(cur);

  if (n == 0) n = std::max(max_var, 1);
  if (max_var > n)
    throw error(errc::parse_error, "variable x" + std::to_string(max_var) +
                                       " exceeds declared count " + std::to_string(n));
  Anf a{n, {}};
  for (const auto& term : terms) {
    uint32_t u = 0;
    for (int v : term) u |= uint32_t{1} << (n - v);
    if (a.monomials.count(u)) a.monomials.erase(u); else a.monomials.insert(u);
  }
  return a;
}

inline std::string to_anf_text(const Anf& a) {
  if (a.monomials.empty()) return "0";
  std::string s;
  for (auto it = a.monomials.rbegin(); it != a.monomials.rend(); ++it) {
    if (!s.empty()) s += " + ";
    uint32_t u = *it;
    if (u == 0) { s += "1"; continue; }
    bool first = true;
    for (int j = 1; j <= a.n; ++j)
      if ((u >> (a.n - j)) & 1) {
        if (!first) s += "*";
        s += "x" + std::to_string(j);
        first = false;
      }
  }
  return s;
}

// parse a function given either as ANF text or as a truth-table hex string
inline BooleanFunction parse_function(const std::string& s, int n = 0) {
  bool anf_like = false;
  for (char c : s)
    if (c == 'x' || c == '+' || c == '*') { anf_like = true; break; }
  if (anf_like) return function_of(parse_anf(s, n));
  BooleanFunction f = parse_hex(s);
  if (n && f.n() != n) throw error(errc::parse_error, "hex table implies different variable count");
  return f;
}

}  // namespace bft
