#pragma once

#include <cstdint>
#include <functional>
#include <sstream>

#include "bft/walsh.hpp"

namespace bft {

// Walsh support of an s-plateaued function on F_2^k written as v + E with
// E = {e_0 < e_1 < ... } in increasing integer order (so e_0 = 0) and
// omega_j = v + e_j.  Default v is the minimal support point.
struct OrderedSupport {
  int k, s;
  uint32_t v;
  std::vector<uint32_t> e_list;
  std::vector<uint32_t> omega_list;
};

inline OrderedSupport order_support(std::vector<uint32_t> points, int k,
                                    std::optional<uint32_t> v = {}) {
  if (points.empty()) throw error(errc::size_not_power_of_two, "empty support");
  std::sort(points.begin(), points.end());
  for (size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i] == points[i + 1])
      throw error(errc::precondition_failed, "support points must be distinct");
  if (points.back() >> k)
    throw error(errc::row_out_of_range, "support point exceeds 2^k");
  size_t len = points.size();
  if ((len & (len - 1)) != 0)
    throw error(errc::size_not_power_of_two, "support size must be a power of two");
  int log = std::countr_zero(len);
  if (log % 2 != 0)
    throw error(errc::size_not_power_of_two, "support size must be 4^j");
  int s = k - log;
  if (s < 0) throw error(errc::dimension_mismatch, "support larger than 2^k");

  uint32_t vv = v.value_or(points.front());
  if (!std::binary_search(points.begin(), points.end(), vv))
    throw error(errc::v_not_in_support, "v is not a support point");

  OrderedSupport out{k, s, vv, {}, {}};
  out.e_list.reserve(len);
  for (uint32_t p : points) out.e_list.push_back(p ^ vv);
  std::sort(out.e_list.begin(), out.e_list.end());
  out.omega_list.reserve(len);
  for (uint32_t e : out.e_list) out.omega_list.push_back(vv ^ e);
  return out;
}

// affine test: returns the minimal shift and a reduced basis of the direction
// space, or nothing if the set is not a coset of a linear subspace
struct AffineSpan {
  uint32_t v;
  std::vector<uint32_t> basis;  // row-reduced, decreasing leading bits
};

inline std::optional<AffineSpan> is_affine_subspace(std::vector<uint32_t> points) {
  if (points.empty()) return std::nullopt;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  uint32_t v = points.front();

  std::vector<uint32_t> basis;
  for (uint32_t p : points) {
    uint32_t e = p ^ v;
    for (uint32_t b : basis) e = std::min(e, e ^ b);
    if (e) basis.push_back(e);
  }
  if (points.size() != size_t{1} << basis.size()) return std::nullopt;

  // full row reduction
  std::sort(basis.begin(), basis.end(), std::greater<>());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      if (j != i && (basis[j] & (uint32_t{1} << (31 - std::countl_zero(basis[i])))))
        basis[j] ^= basis[i];
  std::sort(basis.begin(), basis.end(), std::greater<>());
  return AffineSpan{v, basis};
}

// row r of the 2^m x 2^m Sylvester matrix: x -> (-1)^{r.x}
inline std::vector<int8_t> hadamard_row(int m, uint32_t r) {
  if (r >> m) throw error(errc::row_out_of_range, "row index exceeds 2^m");
  std::vector<int8_t> row(size_t{1} << m);
  for (uint64_t x = 0; x < row.size(); ++x)
    row[x] = static_cast<int8_t>(1 - 2 * dot(r, static_cast<uint32_t>(x)));
  return row;
}

// e_j = e_{2^i} + e_{j-2^i} for 2^i <= j < 2^{i+1}; with e_0 = 0 this holds
// exactly when the list is a linear subspace in increasing integer order
inline bool lexicographic_recursion_check(const std::vector<uint32_t>& e_list) {
  size_t len = e_list.size();
  if (len == 0 || (len & (len - 1)) != 0) return false;
  if (e_list[0] != 0) return false;
  for (size_t block = 1; block < len; block <<= 1)
    for (size_t j = block; j < std::min(block << 1, len); ++j)
      if (e_list[j] != (e_list[block] ^ e_list[j - block])) return false;
  return true;
}

inline bool lexicographic_recursion_check(const OrderedSupport& sup) {
  return lexicographic_recursion_check(sup.e_list);
}

// profile of +-1 sequences indexed by u in F_2^k: entry(u)[j] = (-1)^{u.omega_j}
struct SequenceProfile {
  int k;
  std::vector<std::vector<int8_t>> entries;
};

inline SequenceProfile sequence_profile(const OrderedSupport& sup) {
  SequenceProfile p{sup.k, {}};
  p.entries.resize(size_t{1} << sup.k);
  for (uint32_t u = 0; u < p.entries.size(); ++u) {
    auto& row = p.entries[u];
    row.reserve(sup.omega_list.size());
    for (uint32_t w : sup.omega_list)
      row.push_back(static_cast<int8_t>(1 - 2 * dot(u, w)));
  }
  return p;
}

// ---- synthesis -------------------------------------------------------------

// Assigns W(rows[i]) = 2^{(k+s)/2} (-1)^{dual(i)} and inverts.  The pairing of
// spectrum rows with dual table entries follows the given row order; callers
// that build supports block by block must keep that construction order.
inline BooleanFunction synthesize_rows(int k, int s, const std::vector<uint32_t>& rows,
                                       const BooleanFunction& dual_fn) {
  if (k < 1 || k > n_max) throw error(errc::capacity, "k out of range");
  if (s < 0 || s > k || (k - s) % 2 != 0)
    throw error(errc::dimension_mismatch, "need 0 <= s <= k with k - s even");
  if (dual_fn.n() != k - s)
    throw error(errc::dimension_mismatch, "dual must live on k - s variables");
  if (rows.size() != dual_fn.size())
    throw error(errc::length_mismatch, "row count must match dual table length");

  WalshSpectrum spec{k, std::vector<int32_t>(size_t{1} << k, 0)};
  int32_t amp = int32_t{1} << ((k + s) / 2);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >> k) throw error(errc::row_out_of_range, "spectrum row exceeds 2^k");
    if (spec.coeffs[rows[i]] != 0)
      throw error(errc::precondition_failed, "duplicate spectrum row");
    spec.coeffs[rows[i]] = amp * (1 - 2 * dual_fn(i));
  }
  try {
    return inverse_wht(spec);
  } catch (const error& e) {
    if (e.kind != errc::spectrum_not_boolean) throw;
    throw error(errc::dual_not_at_bent_distance,
                std::string("dual is not at bent distance to the sequence profile (") +
                    e.what() + ")");
  }
}

struct SynthesisSpec {
  OrderedSupport support;
  BooleanFunction dual;
};

inline BooleanFunction synthesize_plateaued(const SynthesisSpec& spec) {
  int len_log = spec.support.k - spec.support.s;
  if (spec.dual.n() != len_log)
    throw error(errc::dimension_mismatch, "dual must live on k - s variables");
  // the weight condition is bent distance to the all-ones profile entry
  uint64_t w = spec.dual.weight();
  uint64_t half = uint64_t{1} << (len_log - 1);
  uint64_t off = len_log >= 2 ? uint64_t{1} << (len_log / 2 - 1) : 0;
  if (w != half - off && w != half + off)
    throw error(errc::dual_not_at_bent_distance,
                "dual is not at bent distance to the profile: weight must be "
                "2^{k-s-1} +- 2^{(k-s)/2-1}");
  return synthesize_rows(spec.support.k, spec.support.s, spec.support.omega_list, spec.dual);
}

// ---- multiset support builders ---------------------------------------------

// a column-glued list of equal-height row blocks; rows may repeat
struct RowBlock {
  int width;
  std::vector<uint32_t> rows;
};

inline RowBlock full_space_block(int m) {
  RowBlock b{m, {}};
  b.rows.resize(size_t{1} << m);
  for (uint32_t i = 0; i < b.rows.size(); ++i) b.rows[i] = i;
  return b;
}

// T_l followed column-wise by T_{l+1}: row x is the 2-bit word (l(x), l(x)+1)
inline RowBlock complement_pair(const BooleanFunction& l) {
  RowBlock b{2, {}};
  b.rows.reserve(l.size());
  for (uint64_t x = 0; x < l.size(); ++x)
    b.rows.push_back(static_cast<uint32_t>(l(x) << 1 | (l(x) ^ 1)));
  return b;
}

// Delta = v + {b_0 + E, b_1 + E, ...} with blocks kept in the listed order of
// E; E must be a dim-2 subspace listed in recursion order and v must avoid E
inline RowBlock build_delta_multiset(int s, const std::vector<uint32_t>& e_listed,
                                     const std::vector<uint32_t>& b_list, uint32_t v) {
  if (e_listed.size() != 4 || e_listed[0] != 0 || e_listed[1] == 0 || e_listed[2] == 0 ||
      e_listed[1] == e_listed[2] || e_listed[3] != (e_listed[1] ^ e_listed[2]))
    throw error(errc::recursion_violated, "E is not a dim-2 subspace in recursion order");
  size_t len = b_list.size();
  if (len == 0 || (len & (len - 1)) != 0)
    throw error(errc::size_not_power_of_two, "b_list length must be a power of two");
  for (uint32_t b : b_list)
    if (std::find(e_listed.begin(), e_listed.end(), b) == e_listed.end())
      throw error(errc::recursion_violated, "b_list entry outside E");
  if (!lexicographic_recursion_check(b_list))
    throw error(errc::recursion_violated, "b_list does not satisfy the recursion");
  for (uint32_t e : e_listed)
    if (v == e) throw error(errc::v_inside_e, "v lies in E, so 0 would enter Delta");

  RowBlock out{s, {}};
  out.rows.reserve(4 * len);
  for (uint32_t b : b_list)
    for (uint32_t e : e_listed) out.rows.push_back(v ^ b ^ e);
  for (uint32_t r : out.rows)
    if (r >> s) throw error(errc::row_out_of_range, "Delta entry exceeds 2^s");
  return out;
}

// column concatenation, leftmost block most significant
inline RowBlock interleave(const std::vector<RowBlock>& blocks) {
  if (blocks.empty()) throw error(errc::height_mismatch, "no blocks to interleave");
  size_t h = blocks.front().rows.size();
  int width = 0;
  for (const auto& b : blocks) {
    if (b.rows.size() != h) throw error(errc::height_mismatch, "block heights differ");
    width += b.width;
  }
  RowBlock out{width, std::vector<uint32_t>(h, 0)};
  for (const auto& b : blocks)
    for (size_t i = 0; i < h; ++i)
      out.rows[i] = out.rows[i] << b.width | b.rows[i];
  return out;
}

// ---- support file format ----------------------------------------------------
// one point per line as a width-k bit string (x_1 first), then a blank line,
// then an optional dual truth-table hex line

struct SupportFile {
  int k;
  std::vector<uint32_t> points;
  std::optional<BooleanFunction> dual;
};

inline std::string to_bitstring(uint32_t x, int width) {
  std::string s(width, '0');
  for (int i = 0; i < width; ++i)
    if ((x >> (width - 1 - i)) & 1) s[i] = '1';
  return s;
}

inline SupportFile parse_support_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SupportFile out{0, {}, {}};
  bool in_points = true;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) {
      if (in_points && !out.points.empty()) in_points = false;
      continue;
    }
    if (in_points) {
      uint32_t p = 0;
      for (char c : line) {
        if (c != '0' && c != '1')
          throw error(errc::parse_error,
                      "line " + std::to_string(lineno) + ": expected a bit string");
        p = p << 1 | (c - '0');
      }
      if (out.k == 0) out.k = static_cast<int>(line.size());
      else if (out.k != static_cast<int>(line.size()))
        throw error(errc::parse_error,
                    "line " + std::to_string(lineno) + ": inconsistent bit-string width");
      out.points.push_back(p);
    } else {
      if (out.dual)
        throw error(errc::parse_error, "line " + std::to_string(lineno) + ": extra content");
      out.dual = parse_hex(line);
    }
  }
  if (out.points.empty()) throw error(errc::parse_error, "no support points");
  return out;
}

inline std::string format_support_file(int k, const std::vector<uint32_t>& points,
                                       const std::optional<BooleanFunction>& dual_fn = {}) {
  std::string s;
  for (uint32_t p : points) s += to_bitstring(p, k) + "\n";
  if (dual_fn) s += "\n" + to_hex(*dual_fn) + "\n";
  return s;
}

inline std::string format_support_file(const SupportFile& sf) {
  return format_support_file(sf.k, sf.points, sf.dual);
}

}  // namespace bft
