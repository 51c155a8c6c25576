// command-line front end: evaluate, synthesize, construct, and run the
// regression examples for bent / plateaued boolean functions
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bft/analysis.hpp"
#include "bft/constructions.hpp"

namespace {

using json = nlohmann::json;
using namespace bft;

int parse_count(const std::string& s) {
  if (s.empty()) throw error(errc::parse_error, "empty number");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw error(errc::parse_error, "bad number: " + s);
    v = v * 10 + (c - '0');
    if (v > (1 << n_max)) throw error(errc::parse_error, "number too large: " + s);
  }
  return v;
}

// function input: ANF text or truth-table hex, with an optional @n suffix
// pinning the variable count
BooleanFunction parse_input(const std::string& s) {
  auto at = s.rfind('@');
  if (at != std::string::npos)
    return parse_function(s.substr(0, at), parse_count(s.substr(at + 1)));
  return parse_function(s);
}

// points are bit strings, x_1 first, exactly as wide as the ambient space
uint32_t parse_point(const std::string& s, int width) {
  if (static_cast<int>(s.size()) != width)
    throw error(errc::parse_error,
                "point " + s + " needs exactly " + std::to_string(width) + " bits");
  uint32_t p = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw error(errc::parse_error, "point must be a bit string: " + s);
    p = p << 1 | static_cast<uint32_t>(c - '0');
  }
  return p;
}

std::vector<uint32_t> parse_perm(const std::string& s) {
  std::vector<uint32_t> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    out.push_back(static_cast<uint32_t>(parse_count(item)));
  if (out.empty()) throw error(errc::parse_error, "empty permutation");
  return out;
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string table_text(const BooleanFunction& f) {
  if (f.n() >= 2) return to_hex(f);
  std::string s;
  for (uint64_t x = 0; x < f.size(); ++x) s += f(x) ? '1' : '0';
  return s;
}

std::string class_text(const SpectrumClass& c) {
  std::string s = tag_name(c.tag);
  if (c.tag == SpectrumClass::tag_t::plateaued) s += " s=" + std::to_string(c.s);
  return s;
}

std::string spectrum_text(const std::map<int32_t, uint64_t>& dist) {
  std::string s;
  for (const auto& [v, cnt] : dist) {
    if (!s.empty()) s += ", ";
    s += std::to_string(v) + " x" + std::to_string(cnt);
  }
  return s;
}

struct Report {
  BooleanFunction f;
  SpectrumClass cls;
  std::optional<Dual> d;
};

Report report_of(const BooleanFunction& f, std::optional<uint32_t> v = {}) {
  Report r{f, classify(f), {}};
  if (r.cls.tag == SpectrumClass::tag_t::bent || r.cls.tag == SpectrumClass::tag_t::plateaued)
    r.d = dual(f, v);
  return r;
}

void print_report(const Report& r, std::ostream& os) {
  os << "n:         " << r.f.n() << "\n"
     << "class:     " << class_text(r.cls) << "\n"
     << "degree:    " << algebraic_degree(r.f) << "\n"
     << "anf:       " << to_anf_text(anf_of(r.f)) << "\n"
     << "table:     " << table_text(r.f) << "\n"
     << "spectrum:  " << spectrum_text(r.cls.distribution) << "\n";
  if (r.d)
    os << "dual:      v=" << to_bitstring(r.d->v, r.f.n()) << " table=" << table_text(r.d->fstar)
       << "\n";
}

json report_json(const Report& r) {
  json j;
  j["n"] = r.f.n();
  j["class"] = tag_name(r.cls.tag);
  j["s"] = r.cls.s;
  j["degree"] = algebraic_degree(r.f);
  j["anf"] = to_anf_text(anf_of(r.f));
  j["table"] = table_text(r.f);
  json sp = json::array();
  for (const auto& [v, cnt] : r.cls.distribution)
    sp.push_back(json{{"value", v}, {"count", cnt}});
  j["spectrum"] = sp;
  if (r.d)
    j["dual"] = json{{"v", to_bitstring(r.d->v, r.f.n())}, {"table", table_text(r.d->fstar)}};
  return j;
}

std::optional<uint32_t> anchor_for(const std::string& bits, int n) {
  if (bits.empty()) return {};
  return parse_point(bits, n);
}

// ---- eval -------------------------------------------------------------------

int run_eval(const std::string& input, const std::string& v_bits, bool as_json) {
  BooleanFunction f = parse_input(input);
  Report r = report_of(f, anchor_for(v_bits, f.n()));
  if (as_json) std::cout << report_json(r).dump(2) << "\n";
  else print_report(r, std::cout);
  return 0;
}

// ---- synth ------------------------------------------------------------------

int run_synth(const std::string& path, const std::string& dual_hex, const std::string& v_bits,
              bool as_json) {
  SupportFile sf = parse_support_file(read_text(path));
  std::optional<BooleanFunction> dual_fn = sf.dual;
  if (!dual_hex.empty()) dual_fn = parse_hex(dual_hex);
  if (!dual_fn)
    throw error(errc::parse_error, "no dual table: add one to the file or pass --dual");
  std::optional<uint32_t> v = anchor_for(v_bits, sf.k);
  BooleanFunction f = synthesize_plateaued({order_support(sf.points, sf.k, v), *dual_fn});
  Report r = report_of(f, v);
  if (as_json) std::cout << report_json(r).dump(2) << "\n";
  else print_report(r, std::cout);
  return 0;
}

// ---- construct ----------------------------------------------------------------

struct ConstructArgs {
  std::string method;
  std::vector<std::string> inputs;
  bool verify = false, no_verify = false;
  std::string mode = "bent";
  std::vector<std::string> ells, basis;
  std::string xi_dual, m_bits, pi, phi;
  int z = -1;
};

struct Outcome {
  BooleanFunction result;
  std::optional<BooleanFunction> formula_dual;
  bool checked = false;
};

Outcome dispatch_construct(const ConstructArgs& a) {
  std::vector<BooleanFunction> fs;
  fs.reserve(a.inputs.size());
  for (const auto& s : a.inputs) fs.push_back(parse_input(s));

  if (a.verify && a.no_verify)
    throw error(errc::parse_error, "--verify and --no-verify conflict");
  std::optional<bool> vfy = !a.no_verify;  // the tool checks unless told not to

  auto need = [&](size_t lo, size_t hi) {
    if (fs.size() < lo || fs.size() > hi)
      throw error(errc::parse_error,
                  a.method + " takes " + std::to_string(lo) +
                      (hi == lo ? "" : (hi == SIZE_MAX ? " or more" : ".." + std::to_string(hi))) +
                      " function inputs, got " + std::to_string(fs.size()));
  };
  auto points_for = [&](int width) {
    std::vector<uint32_t> out;
    for (const auto& s : a.basis) out.push_back(parse_point(s, width));
    return out;
  };
  bool on = *vfy;

  if (a.method == "rothaus") {
    need(3, 3);
    return {rothaus(fs[0], fs[1], fs[2], vfy), {}, on};
  }
  if (a.method == "gen-rothaus-a") {
    need(3, 3);
    return {generalized_rothaus_a(fs[0], fs[1], fs[2], vfy), {}, on};
  }
  if (a.method == "gen-rothaus-b") {
    need(2, 2);
    return {generalized_rothaus_b(fs[0], fs[1], vfy), {}, on};
  }
  if (a.method == "p1") {
    need(2, SIZE_MAX);
    p1_mode mode = a.mode == "bent"        ? p1_mode::bent
                   : a.mode == "plateaued" ? p1_mode::plateaued
                                           : p1_mode::report;
    P1Result r = theorem_p1_construct(
        fs[0], VectorialFunction({fs.begin() + 1, fs.end()}), mode);
    return {r.result, r.dual, mode != p1_mode::report};
  }
  if (a.method == "p2") {
    need(2, SIZE_MAX);
    return {theorem_p2_construct(fs[0], fs[1], {fs.begin() + 2, fs.end()}, vfy), {}, on};
  }
  if (a.method == "bent-concat") {
    need(3, 3);
    return {bent_concatenation(fs[0], fs[1], fs[2], vfy), {}, on};
  }
  if (a.method == "indirect-sum") {
    need(4, 4);
    PairResult r = indirect_sum(fs[0], fs[1], fs[2], fs[3], vfy);
    return {r.result, r.dual, on};
  }
  if (a.method == "gis-a") {
    need(8, 8);
    PairResult r =
        gen_indirect_sum_a(fs[0], fs[1], fs[2], fs[3], fs[4], fs[5], fs[6], fs[7], vfy);
    return {r.result, r.dual, on};
  }
  if (a.method == "gis-b") {
    need(4, 4);
    return {gen_indirect_sum_b(fs[0], fs[1], fs[2], fs[3], vfy), {}, on};
  }
  if (a.method == "gis-c") {
    need(4, 4);
    return {gen_indirect_sum_c(fs[0], fs[1], fs[2], fs[3], vfy), {}, on};
  }
  if (a.method == "gis-k") {
    need(4, SIZE_MAX);
    if (fs.size() % 2) throw error(errc::parse_error, "gis-k takes an even input count");
    if (a.xi_dual.empty()) throw error(errc::parse_error, "gis-k needs --xi-dual");
    if (a.ells.empty()) throw error(errc::parse_error, "gis-k needs --ell selectors");
    std::vector<std::pair<BooleanFunction, BooleanFunction>> pairs;
    for (size_t i = 0; i < fs.size(); i += 2) pairs.emplace_back(fs[i], fs[i + 1]);
    std::vector<BooleanFunction> ells;
    for (const auto& s : a.ells) ells.push_back(parse_input(s));
    PairResult r = gen_indirect_sum_k(pairs, ells, parse_input(a.xi_dual), vfy);
    return {r.result, r.dual, on};
  }
  if (a.method == "indicator") {
    need(2, SIZE_MAX);
    VectorialFunction h({fs.begin() + 1, fs.end()});
    return {indicator_construct({fs[0], h, points_for(h.k())}), {}, false};
  }
  if (a.method == "generic-a") {
    need(3, 3);
    if (a.m_bits.empty()) throw error(errc::parse_error, "generic-a needs --m");
    return {generic_method_a(fs[0], fs[1], fs[2], parse_point(a.m_bits, fs[0].n()), vfy), {}, on};
  }
  if (a.method == "mesnager-g") {
    need(3, 3);
    MesnagerResult r = mesnager_g(fs[0], fs[1], fs[2], vfy);
    return {r.g, r.gdual, on};
  }
  if (a.method == "dualcor") {
    need(2, 2);
    if (a.pi.empty() || a.phi.empty())
      throw error(errc::parse_error, "dualcor needs --pi and --phi");
    return {dualcor_family(parse_perm(a.pi), parse_perm(a.phi), fs[0], fs[1], vfy), {}, on};
  }
  if (a.method == "disjoint-spectra") {
    need(3, SIZE_MAX);
    if (a.z < 0) throw error(errc::parse_error, "disjoint-spectra needs --z");
    VectorialFunction h({fs.begin() + 1, fs.end()});
    return {disjoint_spectra_construct(fs[0], h, points_for(h.k()), a.z, vfy), {}, on};
  }
  if (a.method == "direct-sum-supports") {
    need(1, SIZE_MAX);
    return {direct_sum_supports(fs), {}, true};
  }
  throw error(errc::parse_error, "unknown method: " + a.method);
}

int run_construct(const ConstructArgs& a, const std::string& v_bits, bool as_json) {
  Outcome out = dispatch_construct(a);
  Report r = report_of(out.result, anchor_for(v_bits, out.result.n()));
  if (as_json) {
    json j = report_json(r);
    j["method"] = a.method;
    j["verified"] = out.checked;
    if (out.formula_dual) j["formula_dual"] = table_text(*out.formula_dual);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "method:    " << a.method << "\n"
              << "verified:  " << (out.checked ? "yes" : "no (skipped)") << "\n";
    print_report(r, std::cout);
    if (out.formula_dual)
      std::cout << "dual (formula): " << table_text(*out.formula_dual) << "\n";
  }
  return 0;
}

// ---- regression examples -----------------------------------------------------

struct Row {
  std::string expected, got;
  bool pass() const { return expected == got; }
};

std::vector<std::pair<std::string, std::function<Row()>>> example_registry() {
  auto F = [](const std::string& s, int n) { return function_of(parse_anf(s, n)); };
  auto V = [](int n, int j) { return BooleanFunction::variable(n, j); };
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  auto canon = [&](const std::string& s, int n) { return to_anf_text(anf_of(F(s, n))); };
  auto list = [](const std::vector<uint32_t>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  auto cls_of = [](const BooleanFunction& f) { return class_text(classify(f)); };
  BooleanFunction mm4 = F("x1*x3 + x2*x4", 4);
  BooleanFunction b2 = F("x1*x2", 2);
  BooleanFunction sign_dual = BooleanFunction::from_values(2, {0, 0, 0, 1});

  std::vector<std::pair<std::string, std::function<Row()>>> reg;

  reg.emplace_back("table1", [=]() -> Row {
    OrderedSupport sup = order_support({2, 3, 4, 5}, 3, 3);
    std::string got = "omega=" + list(sup.omega_list) + " e=" + list(sup.e_list) +
                      " recursion=" + yn(lexicographic_recursion_check(sup));
    return {"omega=(3,2,5,4) e=(0,1,6,7) recursion=yes", got};
  });

  reg.emplace_back("ex3.5", [=]() -> Row {
    BooleanFunction f = synthesize_plateaued({order_support({6, 13, 16, 27}, 5), sign_dual});
    std::string got = "anf=" + to_anf_text(anf_of(f)) + "; " + cls_of(f) +
                      "; support=" + list(walsh_support(f));
    return {"anf=" +
                canon("x2*x4 + x4*x5 + x1*x2 + x1*x4 + x1*x5 + x3 + x2*x3 + x3*x4 + x3*x5", 5) +
                "; plateaued s=3; support=(6,13,16,27)",
            got};
  });

  reg.emplace_back("ex3.6", [=]() -> Row {
    BooleanFunction g = F("x3*x4 + 1", 4);
    std::vector<uint32_t> rows;
    for (uint32_t i = 0; i < 16; ++i)
      rows.push_back((i << 1) | static_cast<uint32_t>(g(i)));
    BooleanFunction f =
        synthesize_plateaued({order_support(rows, 5), F("x1*x3 + x2*x4", 4)});
    bool aff = is_affine_subspace(walsh_support(f)).has_value();
    bool pd = profile_distance_check(dual(f).fstar,
                                     sequence_profile(order_support(walsh_support(f), 5)));
    std::string got = "anf=" + to_anf_text(anf_of(f)) + "; " + cls_of(f) +
                      "; support affine=" + yn(aff) + "; profile distance=" + yn(pd);
    return {"anf=" + canon("x1*x2*x5 + x1*x3 + x2*x4 + x5", 5) +
                "; plateaued s=1; support affine=no; profile distance=yes",
            got};
  });

  reg.emplace_back("ex4.1", [=]() -> Row {
    const BooleanFunction& form = rothaus_form();
    BooleanFunction a = mm4, b = mm4 ^ V(4, 1), c = mm4 ^ V(4, 2);
    BooleanFunction r = rothaus(a, b, c, true);
    std::vector<BooleanFunction> coords{embed(a, 6, 0), embed(b, 6, 0), embed(c, 6, 0),
                                        V(6, 5), V(6, 6)};
    bool comp = compose(form, coords) == r;
    bool p1ok = theorem_p1_construct(form, VectorialFunction({a, b, c})).result == r;
    std::string got = "anf=" + to_anf_text(anf_of(form)) + "; " + cls_of(form) +
                      "; support=" + list(walsh_support(form)) +
                      "; composite==operation " + yn(comp) + "; p1==operation " + yn(p1ok) +
                      "; output " + cls_of(r);
    return {"anf=" +
                canon("x1*x2 + x1*x3 + x2*x3 + x1*x5 + x2*x5 + x1*x4 + x3*x4 + x4*x5", 5) +
                "; plateaued s=3; support=(5,10,16,31); composite==operation yes; "
                "p1==operation yes; output bent",
            got};
  });

  reg.emplace_back("thm4.7", [=]() -> Row {
    RowBlock delta = build_delta_multiset(3, {0, 6, 5, 3}, {0, 5, 5, 0}, 4);
    const BooleanFunction& form = gen_rothaus_a_form();
    std::string got = "delta=" + list(delta.rows) + "; anf=" + to_anf_text(anf_of(form)) +
                      "; " + cls_of(form);
    return {"delta=(4,2,1,7,1,7,4,2,1,7,4,2,4,2,1,7); anf=" +
                canon("x1 + x2*x4 + x2*x5 + x1*x4 + x1*x6 + x3*x5 + x3*x6 + x4*x5 + x4*x6 + "
                      "x4*x7 + x5*x7",
                      7) +
                "; plateaued s=3",
            got};
  });

  reg.emplace_back("thm4.9", [=]() -> Row {
    const BooleanFunction& form = gen_rothaus_b_form();
    BooleanFunction a = F("x1*x2 + x1", 2), b = F("x1*x2", 2);
    BooleanFunction r = generalized_rothaus_b(a, b, true);
    BooleanFunction rr(4);
    for (uint32_t i = 0; i < 16; ++i)
      rr.set(i, r((uint64_t{i >> 2} << 4) | ((i & 3) << 2)));
    bool restr = rr == F("x1*x2 + x1*x3*x4", 4);
    std::string got = "anf=" + to_anf_text(anf_of(form)) + "; " + cls_of(form) +
                      "; restriction y3=y4=0 matches " + yn(restr) + "; restriction bent " +
                      yn(classify(rr).is_bent());
    return {"anf=" + canon("x2 + x1*x3*x4 + x2*x3*x4 + x3*x5 + x4*x6", 6) +
                "; plateaued s=2; restriction y3=y4=0 matches yes; restriction bent no",
            got};
  });

  reg.emplace_back("ex4.8", [=]() -> Row {
    auto mm_shift = [&](uint32_t q, const BooleanFunction& g) {
      BooleanFunction f(4);
      for (uint32_t x = 0; x < 16; ++x) f.set(x, dot(x >> 2, (x & 3) ^ q) ^ g(x & 3));
      return f;
    };
    BooleanFunction a = mm_shift(1, b2), b = mm_shift(2, BooleanFunction(2)),
                    c = mm_shift(3, BooleanFunction(2));
    BooleanFunction r = generalized_rothaus_a(a, b, c, true);
    MmCertificate cert = outside_mm_certificate(r);
    bool outside = cert.verdict == MmCertificate::verdict_t::outside_for_this_split;
    std::string wit = cert.witness ? "(" + std::to_string(cert.witness->first) + "," +
                                         std::to_string(cert.witness->second) + ")"
                                   : "none";
    std::string got = cls_of(r) + "; degree=" + std::to_string(algebraic_degree(r)) +
                      "; outside split " + yn(outside) + "; witness=" + wit;
    return {"bent; degree=3; outside split yes; witness=(1,2)", got};
  });

  reg.emplace_back("cor4.11", [=]() -> Row {
    BooleanFunction f2 = mm4 ^ V(4, 1), f3 = mm4 ^ V(4, 3);
    BooleanFunction lhs = theorem_p2_construct(mm4, mm4, {mm4 ^ f3, mm4 ^ f2}, true);
    BooleanFunction rhs = bent_concatenation(mm4, f2, f3, true);
    std::string got =
        "p2==concatenation " + yn(lhs == rhs) + "; output " + cls_of(lhs);
    return {"p2==concatenation yes; output bent", got};
  });

  reg.emplace_back("ex4.16", [=]() -> Row {
    std::vector<BooleanFunction> ells{V(2, 1), V(2, 2), V(2, 1) ^ BooleanFunction::constant(2, 1)};
    std::vector<RowBlock> blocks;
    for (const auto& l : ells) blocks.push_back(complement_pair(l));
    std::vector<std::pair<BooleanFunction, BooleanFunction>> pairs{
        {b2, b2 ^ V(2, 1)}, {b2 ^ V(2, 2), b2 ^ BooleanFunction::constant(2, 1)},
        {b2 ^ V(2, 1) ^ V(2, 2), b2}};
    PairResult out = gen_indirect_sum_k(pairs, ells, b2, true);
    bool dual_ok = out.dual && *out.dual == dual(out.result).fstar;
    std::string got = "m1=" + list(complement_pair(ells[0]).rows) +
                      "; rows=" + list(interleave(blocks).rows) + "; output " +
                      cls_of(out.result) + "; dual==spectral " + yn(dual_ok);
    return {"m1=(1,1,2,2); rows=(22,26,37,41); output bent; dual==spectral yes", got};
  });

  reg.emplace_back("thm4.18", [=]() -> Row {
    const BooleanFunction& form = gis_a_form();
    bool aff = is_affine_subspace(walsh_support(form)).has_value();
    BooleanFunction zero1(1);
    BooleanFunction p = b2, q = b2 ^ V(2, 1), g1 = b2 ^ V(2, 2), g2 = b2;
    BooleanFunction red =
        gen_indirect_sum_a(p, q, g1, g2, zero1, zero1, zero1, zero1, false).result;
    bool reduces = red == embed(indirect_sum(q, p, g2, g1, false).result, 6, 0);
    std::string got = "anf=" + to_anf_text(anf_of(form)) + "; " + cls_of(form) +
                      "; support affine " + yn(aff) + "; zero blocks reduce to indirect sum " +
                      yn(reduces);
    return {"anf=" +
                canon("x2 + x4 + x6 + x8 + x1*x3 + x2*x3 + x3*x7 + x3*x8 + x1*x4 + x2*x4 + "
                      "x4*x7 + x4*x8 + x1*x5 + x2*x5 + x1*x6 + x2*x6",
                      8) +
                "; plateaued s=4; support affine yes; zero blocks reduce to indirect sum yes",
            got};
  });

  reg.emplace_back("thm4.19", [=]() -> Row {
    const BooleanFunction& form = gis_b_form();
    BooleanFunction p = b2, q = b2 ^ V(2, 1), g1 = b2 ^ V(2, 2), g2 = b2 ^ V(2, 1) ^ V(2, 2);
    BooleanFunction r = gen_indirect_sum_b(p, q, g1, g2, true);
    BooleanFunction is0 = indirect_sum(q, p, g2, g1, false).result;
    bool z0 = true, z10 = true;
    for (uint32_t w = 0; w < 16; ++w) {
      z0 = z0 && r(uint64_t{w} << 2) == is0(w);
      z10 = z10 && r((uint64_t{w} << 2) | 2) == (is0(w) ^ g1(w & 3) ^ g2(w & 3));
    }
    std::string got = "anf=" + to_anf_text(anf_of(form)) + "; " + cls_of(form) +
                      "; z=00 gives indirect sum " + yn(z0) +
                      "; z=10 adds g1+g2 " + yn(z10) + "; output " + cls_of(r);
    return {"anf=" +
                canon("x2 + x4 + x1*x3 + x2*x3 + x3*x5 + x1*x4 + x2*x4 + x4*x5 + x1*x6 + "
                      "x2*x6 + x5*x6",
                      6) +
                "; plateaued s=4; z=00 gives indirect sum yes; z=10 adds g1+g2 yes; output "
                "bent",
            got};
  });

  reg.emplace_back("thm4.21", [=]() -> Row {
    const BooleanFunction& form = gis_c_form();
    BooleanFunction p = b2, q = b2 ^ V(2, 1), g1 = b2 ^ V(2, 2), g2 = b2 ^ V(2, 1) ^ V(2, 2);
    BooleanFunction r = gen_indirect_sum_c(p, q, g1, g2, true);
    BooleanFunction is0 = indirect_sum(q, p, g2, g1, false).result;
    bool z1000 = true, z1zero = true;
    for (uint32_t w = 0; w < 16; ++w) {
      z1000 = z1000 && r((uint64_t{w} << 4) | 8) == is0(w);
      for (uint32_t z = 0; z < 8; ++z) {
        int z2 = (z >> 2) & 1, z4 = z & 1;
        z1zero = z1zero && r((uint64_t{w} << 4) | z) == (q(w >> 2) ^ g2(w & 3) ^ (z2 & z4));
      }
    }
    std::string got = "anf=" + to_anf_text(anf_of(form)) + "; " + cls_of(form) +
                      "; z=1000 gives indirect sum " + yn(z1000) +
                      "; z1=0 gives f2+g2+z2z4 " + yn(z1zero);
    return {"anf=" +
                canon("x2 + x4 + x1*x3*x5 + x2*x3*x5 + x1*x4*x5 + x2*x4*x5 + x1*x5*x6 + "
                      "x2*x5*x6 + x3*x5*x8 + x4*x5*x8 + x6*x8 + x5*x7",
                      8) +
                "; plateaued s=4; z=1000 gives indirect sum yes; z1=0 gives f2+g2+z2z4 yes",
            got};
  });

  reg.emplace_back("cons4.20", [=]() -> Row {
    std::vector<BooleanFunction> ells{V(4, 1), V(4, 2), V(4, 3), V(4, 4)};
    BooleanFunction xd = F("x1*x3 + x2*x4 + x3*x4", 4);
    BooleanFunction c1 = BooleanFunction::constant(2, 1);
    BooleanFunction e[8] = {b2,          b2 ^ V(2, 1),          b2 ^ V(2, 2),
                            b2 ^ V(2, 1) ^ V(2, 2), b2 ^ c1,    b2 ^ V(2, 1) ^ c1,
                            b2 ^ V(2, 2) ^ c1,      b2};
    PairResult viak = gen_indirect_sum_k(
        {{e[0], e[1]}, {e[2], e[3]}, {e[4], e[5]}, {e[6], e[7]}}, ells, xd, true);
    PairResult viaa =
        gen_indirect_sum_a(e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7], true);
    bool same = viak.result == viaa.result;
    bool duals = viak.dual && viaa.dual && *viak.dual == *viaa.dual;
    std::string got = "k-pair==four-block " + yn(same) + "; duals equal " + yn(duals) +
                      "; output " + cls_of(viak.result);
    return {"k-pair==four-block yes; duals equal yes; output bent", got};
  });

  reg.emplace_back("ex5.4", [=]() -> Row {
    BooleanFunction f2 = mm4 ^ V(4, 1), f3 = mm4 ^ V(4, 2);
    BooleanFunction g0 = generic_method_a(mm4, f2, f3, 0, true);
    BooleanFunction mes = mesnager_g(mm4, f2, f3, true).g;
    bool family = g0 == (mes ^ f2 ^ f3 ^ BooleanFunction::constant(4, 1));
    bool dl = dual_linearity_check(VectorialFunction({mm4, f2, f3}), {4, 2, 1, 7});
    std::string got = "m=0 lands in majority family " + yn(family) + "; output " + cls_of(g0) +
                      "; dual linearity on S " + yn(dl);
    return {"m=0 lands in majority family yes; output bent; dual linearity on S yes", got};
  });

  reg.emplace_back("ex5.8", [=]() -> Row {
    std::vector<uint32_t> pi{0, 1, 2, 3}, phi{0, 1, 3, 2};
    BooleanFunction g1(2), g2 = V(2, 1);
    BooleanFunction Fn = dualcor_family(pi, phi, g1, g2, true);
    BooleanFunction H1(4), H2(4), H3(4), H4(4), G2P(4);
    for (uint32_t x = 0; x < 4; ++x)
      for (uint32_t y = 0; y < 4; ++y) {
        uint64_t idx = (uint64_t{x} << 2) | y;
        H2.set(idx, dot(x, pi[y]));
        H1.set(idx, dot(x, pi[y]) ^ g1(y));
        H3.set(idx, dot(x, phi[y]));
        H4.set(idx, g2(y));
        G2P.set(idx, g2(x));
      }
    bool viaform = Fn == compose(dualcor_form(), {H1, H2, H3, H4});
    bool viamaj = Fn == mesnager_g(H1, H2 ^ H4, H3, false).g;
    bool dualok = dual(Fn).fstar == compose(dualcor_form(), {dual(H1).fstar, dual(H2).fstar,
                                                             dual(H3).fstar, G2P});
    bool mm = dualcor_family(pi, phi, g1, g1, true) == H1;
    std::string got = "output " + cls_of(Fn) + "; composite form " + yn(viaform) +
                      "; majority form " + yn(viamaj) + "; dual composite " + yn(dualok) +
                      "; lambda=0 collapses to product form " + yn(mm);
    return {"output bent; composite form yes; majority form yes; dual composite yes; "
            "lambda=0 collapses to product form yes",
            got};
  });

  reg.emplace_back("ex5.11", [=]() -> Row {
    BooleanFunction fa = synthesize_rows(6, 4, {0, 1, 2, 3}, sign_dual);
    BooleanFunction fb = synthesize_rows(6, 4, {4, 5, 6, 7}, sign_dual);
    BooleanFunction ell = BooleanFunction::linear(6, 32);
    std::vector<BooleanFunction> fam{fa, fa ^ ell, fb, fb ^ ell};
    bool disjoint = true;
    for (size_t i = 0; i < fam.size(); ++i)
      for (size_t j = i + 1; j < fam.size(); ++j)
        disjoint = disjoint && disjoint_spectra(fam[i], fam[j]);
    BooleanFunction glued = disjoint_spectra_construct(
        fa, VectorialFunction({fa ^ fb, ell}), std::vector<uint32_t>{}, 4, true);
    BooleanFunction shifted = fa ^ ((fa ^ fb) & (ell ^ BooleanFunction::constant(6, 1)));
    std::string got = "pairwise disjoint " + yn(disjoint) + "; glued " + cls_of(glued) +
                      "; shifted variant " + cls_of(shifted);
    return {"pairwise disjoint yes; glued plateaued s=2; shifted variant plateaued s=2", got};
  });

  reg.emplace_back("prop5.12", [=]() -> Row {
    BooleanFunction d1 = synthesize_rows(4, 2, {0, 4, 8, 12}, sign_dual);
    BooleanFunction d2 = synthesize_rows(4, 2, {0, 1, 2, 3}, sign_dual);
    BooleanFunction r = direct_sum_supports({d1, d2});
    return {"output bent", "output " + cls_of(r)};
  });

  reg.emplace_back("walsh-dist", [=]() -> Row {
    auto counts_ok = [](const BooleanFunction& f) {
      SpectrumClass c = classify(f);
      if (c.tag != SpectrumClass::tag_t::plateaued) return false;
      int n = f.n(), s = c.s;
      int32_t amp = int32_t{1} << ((n + s) / 2);
      int64_t sign = f(0) ? -1 : 1;
      int64_t pos = (int64_t{1} << (n - s - 1)) + sign * (int64_t{1} << ((n - s) / 2 - 1));
      auto cnt = [&](int32_t v) -> int64_t {
        auto it = c.distribution.find(v);
        return it == c.distribution.end() ? 0 : static_cast<int64_t>(it->second);
      };
      return cnt(0) == (int64_t{1} << n) - (int64_t{1} << (n - s)) && cnt(amp) == pos &&
             cnt(-amp) == (int64_t{1} << (n - s)) - pos;
    };
    BooleanFunction f35 = synthesize_plateaued({order_support({6, 13, 16, 27}, 5), sign_dual});
    BooleanFunction g = F("x3*x4 + 1", 4);
    std::vector<uint32_t> rows;
    for (uint32_t i = 0; i < 16; ++i)
      rows.push_back((i << 1) | static_cast<uint32_t>(g(i)));
    BooleanFunction f36 =
        synthesize_plateaued({order_support(rows, 5), F("x1*x3 + x2*x4", 4)});
    bool bd = bent_distance(mm4, g);
    std::string got = "count table holds " + yn(counts_ok(f35)) + "," + yn(counts_ok(f36)) +
                      "; complement of x3x4 at bent distance to the dual " + yn(bd);
    return {"count table holds yes,yes; complement of x3x4 at bent distance to the dual yes",
            got};
  });

  reg.emplace_back("mainf", [=]() -> Row {
    BooleanFunction a = mm4, b = mm4 ^ V(4, 1), c = mm4 ^ V(4, 2);
    CompositeSpec spec{rothaus_form(),
                       {embed(a, 6, 0), embed(b, 6, 0), embed(c, 6, 0), V(6, 5), V(6, 6)}};
    int full = 0, reduced = 0;
    for (uint32_t u = 0; u < 32; ++u) {
      full += composite_wht_identity_check(spec, u);
      reduced += composite_wht_support_identity_check(spec, u);
    }
    std::string got = "transform identity " + std::to_string(full) +
                      "/32; support identity " + std::to_string(reduced) + "/32";
    return {"transform identity 32/32; support identity 32/32", got};
  });

  return reg;
}

int run_paper_examples(const std::string& only, bool as_json) {
  auto reg = example_registry();
  bool found = only.empty();
  for (const auto& [id, fn] : reg) found = found || id == only;
  if (!found) throw error(errc::parse_error, "unknown example id: " + only);

  bool all_pass = true;
  json rows = json::array();
  for (const auto& [id, fn] : reg) {
    if (!only.empty() && id != only) continue;
    Row r = fn();
    all_pass = all_pass && r.pass();
    if (as_json) {
      rows.push_back(json{
          {"id", id}, {"pass", r.pass()}, {"expected", r.expected}, {"got", r.got}});
    } else {
      std::cout << std::left << std::setw(12) << id << (r.pass() ? "pass" : "FAIL") << "\n"
                << "  expected: " << r.expected << "\n"
                << "  got:      " << r.got << "\n";
    }
  }
  if (as_json)
    std::cout << json{{"examples", rows}, {"all_pass", all_pass}}.dump(2) << "\n";
  else
    std::cout << (all_pass ? "all examples pass" : "some examples FAIL") << "\n";
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for bent and plateaued boolean functions"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string v_bits;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--v", v_bits, "dual anchor, a support point as a bit string (x_1 first)");

  std::string eval_input;
  auto* cmd_eval = app.add_subcommand("eval", "parse a function and report its profile");
  cmd_eval->fallthrough();
  cmd_eval->add_option("input", eval_input, "ANF text or truth-table hex; @n pins the arity")
      ->required();

  std::string synth_file, synth_dual;
  auto* cmd_synth =
      app.add_subcommand("synth", "synthesize a plateaued function from a support file");
  cmd_synth->fallthrough();
  cmd_synth->add_option("file", synth_file, "support file, - for stdin")->required();
  cmd_synth->add_option("--dual", synth_dual, "dual truth table (hex), overrides the file");

  ConstructArgs cargs;
  auto* cmd_con = app.add_subcommand("construct", "run a secondary construction");
  cmd_con->fallthrough();
  cmd_con->add_option("method", cargs.method,
                      "one of: rothaus gen-rothaus-a gen-rothaus-b p1 p2 bent-concat "
                      "indirect-sum gis-a gis-b gis-c gis-k indicator generic-a mesnager-g "
                      "dualcor disjoint-spectra direct-sum-supports")
      ->required();
  cmd_con->add_option("inputs", cargs.inputs, "function inputs (ANF or hex, @n optional)");
  cmd_con->add_flag("--verify", cargs.verify, "check the preconditions (default)");
  cmd_con->add_flag("--no-verify", cargs.no_verify, "skip the precondition checks");
  cmd_con->add_option("--mode", cargs.mode, "p1 claim: bent, plateaued, or report")
      ->check(CLI::IsMember({"bent", "plateaued", "report"}));
  cmd_con->add_option("--ell", cargs.ells, "gis-k selector functions");
  cmd_con->add_option("--xi-dual", cargs.xi_dual, "gis-k form dual");
  cmd_con->add_option("--u", cargs.basis, "subspace basis points (bit strings)");
  cmd_con->add_option("--z", cargs.z, "disjoint-spectra amplitude parameter");
  cmd_con->add_option("--m", cargs.m_bits, "generic-a spectrum row (bit string)");
  cmd_con->add_option("--pi", cargs.pi, "dualcor permutation, comma-separated values");
  cmd_con->add_option("--phi", cargs.phi, "dualcor permutation, comma-separated values");

  std::string only;
  auto* cmd_pe = app.add_subcommand("paper-examples", "run the regression example table");
  cmd_pe->fallthrough();
  cmd_pe->add_option("--only", only, "run a single example id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_eval) return run_eval(eval_input, v_bits, as_json);
    if (*cmd_synth) return run_synth(synth_file, synth_dual, v_bits, as_json);
    if (*cmd_con) return run_construct(cargs, v_bits, as_json);
    return run_paper_examples(only, as_json);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == errc::parse_error ? 1 : 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
