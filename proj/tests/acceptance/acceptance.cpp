// Acceptance criteria 1-8. `acceptance` runs all of them; `acceptance N` runs
// one. Each criterion prints one PASS/FAIL line followed by indented details.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mfring/characters.hpp"
#include "mfring/constructors.hpp"
#include "mfring/verify.hpp"

#ifndef MFRING_PROPERTY_TESTS
#define MFRING_PROPERTY_TESTS "property_tests"
#endif

using namespace mfring;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& what) { lines.push_back("note  " + what); }
};

const Catalog& shipped() {
  static const Catalog c = Catalog::load(Catalog::default_path());
  return c;
}

HalfWeight w(int k) { return HalfWeight::integer(k); }

Integer sigma(unsigned k, unsigned n) {
  Integer s = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) {
      Integer p = 1;
      for (unsigned i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}

bool rational_coeffs_equal(const QSeries& f, const std::function<Rational(unsigned)>& oracle) {
  for (unsigned n = 0; n < f.prec(); ++n)
    if (f[n] != CycloNum(f.field(), oracle(n))) return false;
  return true;
}

std::string sequence(const std::vector<Integer>& v, std::size_t from, std::size_t count) {
  std::string out;
  for (std::size_t i = from; i < v.size() && i < from + count; ++i) out += (i > from ? "," : "") + v[i].get_str();
  return out;
}

// E_k, E_2 probe, C_p and leading coefficients of f_chi at prec 50.
Outcome criterion1() {
  Outcome o;
  const std::size_t P = 50;
  const auto& q = cyclo_context(1);
  const QSeries e4 = eisenstein_E(4, P, q);
  const QSeries e6 = eisenstein_E(6, P, q);
  o.check(e4[1] == CycloNum(q, 240) && e6[1] == CycloNum(q, -504), "E4, E6 leading coefficients 240, -504");
  o.check(rational_coeffs_equal(e4, [](unsigned n) { return n ? Rational(240 * sigma(3, n)) : Rational(1); }),
          "E4 = 1 + 240 sum sigma_3(n) q^n to q^49");
  o.check(rational_coeffs_equal(e6, [](unsigned n) { return n ? Rational(-504 * sigma(5, n)) : Rational(1); }),
          "E6 = 1 - 504 sum sigma_5(n) q^n to q^49");
  const QSeries probe = frac(-1, 24) * eisenstein_E(2, P, q);
  o.check(rational_coeffs_equal(probe, [](unsigned n) { return n ? Rational(sigma(1, n)) : frac(-1, 24); }),
          "(-1/24) E2 = -1/24 + q + 3q^2 + 4q^3 + 7q^4 + ... to q^49");
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const QSeries c = eisenstein_C(p, P, q);
    const bool lead = c[0] == CycloNum(q, 1) && c[1] == CycloNum(q, frac(24, p - 1));
    const bool full = rational_coeffs_equal(c, [p](unsigned n) {
      if (n == 0) return Rational(1);
      Integer s = sigma(1, n);
      if (n % p == 0) s -= p * sigma(1, n / p);
      return Rational(frac(24, p - 1) * Rational(s));
    });
    o.check(lead && full, "C" + std::to_string(p) + " = 1 + 24/(p-1) sum (sigma_1(n) - p sigma_1(n/p)) q^n");
  }
  struct Lead {
    const char* chi;
    unsigned L;
    std::function<CycloNum(const FieldCtx&)> value;
  };
  const std::vector<Lead> leads = {
      {"rho3", 2, [](const FieldCtx& c) { return CycloNum(c, 6); }},
      {"rho4", 2, [](const FieldCtx& c) { return CycloNum(c, 4); }},
      {"chi5", 4, [](const FieldCtx& c) { return CycloNum(c, 3) - root_of_unity(c, 1, 4); }},
      {"chi7", 6, [](const FieldCtx& c) { return CycloNum(c, 3) - Rational(2) * root_of_unity(c, 1, 6); }},
      {"rho7", 2, [](const FieldCtx& c) { return CycloNum(c, 2); }},
      {"rho8", 2, [](const FieldCtx& c) { return CycloNum(c, 2); }},
      {"chi9", 6, [](const FieldCtx& c) { return CycloNum(c, 2) - root_of_unity(c, 1, 6); }},
      {"chi11", 10,
       [](const FieldCtx& c) { return root_of_unity(c, 3, 10) - Rational(2) * root_of_unity(c, 4, 10); }},
      {"chi16", 4, [](const FieldCtx& c) { return CycloNum(c, 1) - root_of_unity(c, 1, 4); }},
  };
  for (const auto& l : leads) {
    const auto& ctx = cyclo_context(l.L);
    const QSeries f = eis_f(1, named_character(l.chi), P, ctx);
    o.check(f[0] == CycloNum(ctx, 1) && f[1] == l.value(ctx),
            std::string("f[1;") + l.chi + "] = 1 + (" + to_string(l.value(ctx)) + ")q + ...");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Catalog& c = shipped();
  Verifier v(c);
  const std::set<std::string> required = {"c3_sq",        "c4_sq",        "c5_norm",  "c7_sq",   "c7_norm",
                                          "c13_norm",     "e4_lowered_2", "e4_lowered_3", "g2_rho5", "g2_rho13",
                                          "c2_v2",        "c2_v3",        "c3_v2",    "theta_theta3", "theta_theta4",
                                          "theta_quad"};
  std::set<std::string> seen;
  for (const auto& id : c.identities()) {
    const Report r = v.verify_identity(id);
    seen.insert(id.name);
    o.check(r.passed(), id.name + " vanishes to O(q^" + std::to_string(r.precision) + ")");
  }
  for (const auto& name : required)
    if (!seen.count(name)) o.check(false, "identity " + name + " is in the catalog");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Catalog& c = shipped();
  Verifier v(c);
  const std::vector<std::string> integral = {"1",  "2",  "3",     "5",  "6",     "7",     "8",     "9",
                                             "10", "11<3>", "12", "13<3>", "14<9>", "16<9>", "18<7>", "25<6>"};
  const std::vector<std::string> half = {"4h", "8h", "12h", "16<9>h"};
  const std::set<std::string> one_character = {"1", "2", "3", "4h"};
  for (const auto& cases : {integral, half}) {
    for (const auto& label : cases) {
      const auto& p = c.presentation(label);
      const Report r = v.verify_span(p);
      const int kmax = p.kmax_span;
      const bool horizon = kmax >= 4 && (!one_character.count(label) || kmax >= 6);
      o.check(r.passed() && horizon, "case " + label + ": span rank = dim for k <= " + std::to_string(kmax) +
                                         (r.passed() ? "" : "  " + r.details.dump()));
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Catalog& c = shipped();
  Verifier v(c);
  const std::map<std::string, std::vector<std::string>> expected = {
      {"7", {"O7"}},
      {"9", {"O9", "O9bar", "O9p"}},
      {"10", {"O10", "O10bar", "O10p"}},
      {"11", {"O_rho11", "O_chi11", "O_chi113", "O11p"}},
      {"11<3>", {"O11"}},
      {"12h", {"O12a", "O12b", "O12c"}},
      {"14<9>", {"O14"}},
      {"16<9>h", {"O16t"}},
      {"16h", {"O16", "O16bar", "O16p"}},
      {"18<7>", {"O18a", "O18b", "O18c"}},
  };
  for (const auto& [label, names] : expected) {
    const auto& p = c.presentation(label);
    std::set<std::string> present;
    for (const auto& r : p.relations) present.insert(r.name);
    for (const auto& n : names)
      if (!present.count(n)) o.check(false, "case " + label + " lists " + n);
    const Report r = v.verify_relations(p);
    std::string which;
    for (const auto& e : r.details.value("relations", nlohmann::json::array()))
      which += " " + e.at("relation").get<std::string>();
    o.check(r.passed(), "case " + label + ":" + which + " vanish to Sturm precision");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Catalog& c = shipped();
  VerifyOptions opts;
  opts.kmax = 6;
  Verifier v(c, opts);
  for (const char* label : {"7", "9", "11<3>", "14<9>", "18<7>"}) {
    const Report r = v.verify_kernel(c.presentation(label));
    std::string dims;
    for (const auto& e : r.details.value("weights", nlohmann::json::array()))
      dims += " " + e.at("k").dump() + ":" + e.at("dim_ideal").dump() + "/" + e.at("dim_kernel").dump();
    o.check(r.passed(), std::string("case ") + label + ": dim I_k = dim K_k for k <= 6 (k:I/K" + dims + ")");
    if (std::string(label) == "11<3>") {
      bool six = false;
      for (const auto& e : r.details.value("weights", nlohmann::json::array()))
        if (e.at("k") == 6) six = e.at("dim_ideal") == 1 && e.at("dim_kernel") == 1;
      o.check(six, "case 11<3>, k = 6: dim I = dim K = 1");
    }
  }
  return o;
}

// Quotient of Q[X_0..X_n] by X_i X_{j+1} - X_[(i+j+1)/2] X_[(i+j+2)/2], 0 <= i < j < n.
std::vector<Integer> normal_curve_dims(unsigned n, int kmax) {
  const auto& q = cyclo_context(1);
  const std::vector<HalfWeight> ws(n + 1, w(1));
  std::vector<GenPoly> rels;
  auto x = [&](unsigned i) { return GenPoly::variable(q, ws, i); };
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      const GenPoly r = x(i) * x(j + 1) - x((i + j + 1) / 2) * x((i + j + 2) / 2);
      if (!r.is_zero()) rels.push_back(r);
    }
  std::vector<Integer> out;
  for (int k = 0; k <= kmax; ++k) out.emplace_back(static_cast<long>(quotient_dim(rels, ws, w(k))));
  return out;
}

// Q[X1,X2,Y1,Y2] with weights 1,1,2,2 over (X1^3 - X2 Y1, X2^3 - X1 Y2, X1^2 X2^2 - Y1 Y2).
std::vector<Integer> two_pair_dims(int kmax) {
  const auto& q = cyclo_context(1);
  const std::vector<HalfWeight> ws{w(1), w(1), w(2), w(2)};
  auto v = [&](unsigned i) { return GenPoly::variable(q, ws, i); };
  const std::vector<GenPoly> rels = {v(0).pow(3) - v(1) * v(2), v(1).pow(3) - v(0) * v(3),
                                     v(0).pow(2) * v(1).pow(2) - v(2) * v(3)};
  std::vector<Integer> out;
  for (int k = 0; k <= kmax; ++k) out.emplace_back(static_cast<long>(quotient_dim(rels, ws, w(k))));
  return out;
}

Outcome criterion6() {
  Outcome o;
  const Catalog& c = shipped();
  const std::size_t T = 20;
  Verifier v(c);
  for (const auto& p : c.presentations()) {
    if (!p.hilbert) continue;
    const Report r = v.verify_hilbert(p);
    o.check(r.passed(), "(a) case " + p.label + ": " + to_string(*p.hilbert) + " matches dims to k = 20" +
                            (r.passed() ? "" : "  " + r.details.at("first_failure").dump()));
  }

  const Report full = hilbert_equal_to_dims(c, hilbert_free({w(4), w(6)}), parse_group("full"), T);
  o.check(full.passed(), "(b) 1/((1-t^4)(1-t^6)) matches dim M_k(1) to k = 20");

  const HilbertSeries ex = adjoin_square_root(hilbert_free({w(1), w(1)}), w(2));
  const auto e = ex.expand(T);
  bool quoted = e[0] == 1;
  for (std::size_t k = 1; k <= T; ++k) quoted = quoted && e[k] == static_cast<long>(2 * k);
  o.check(quoted, "(c) (1+t^2)/(1-t)^2 = 1 + sum 2k t^k: " + sequence(e, 0, 8) + ",...");
  const Report seven = hilbert_equal_to_dims(c, ex, parse_group("gamma1:7"), T);
  o.check(seven.passed(), "(c) (1+t^2)/(1-t)^2 matches 2k+1 = dim M_k(7,1)" +
                              (seven.passed() ? "" : ": first mismatch " + seven.details.at("first_failure").dump()));
  const Report fourteen = hilbert_equal_to_dims(c, ex, parse_group("gammaH:14:[9]"), T);
  if (fourteen.passed()) o.note("(c) (1+t^2)/(1-t)^2 does match dim M_k(14,<9>) = 2k for k >= 1");

  for (unsigned n = 1; n <= 5; ++n) {
    const auto closed = rational_normal_series(n).expand(T);
    bool formula = true;
    for (std::size_t k = 0; k <= T; ++k) formula = formula && closed[k] == static_cast<long>(n * k + 1);
    const int kmax = n <= 3 ? 8 : 6;
    const auto actual = normal_curve_dims(n, kmax);
    bool ideal = true;
    for (int k = 0; k <= kmax; ++k) ideal = ideal && actual[k] == static_cast<long>(n * k + 1);
    o.check(formula && ideal, "(d) n = " + std::to_string(n) + ": (1+(n-1)t)/(1-t)^2 = sum (nk+1) t^k, and " +
                                  std::to_string(n + 1) + "-variable quotient dims " + sequence(actual, 0, kmax + 1) +
                                  " agree to k = " + std::to_string(kmax));
  }

  const auto quoted6 = quoted_pair_series(T).expand(T);
  bool fitted = true;
  for (std::size_t k = 0; k <= T; ++k) fitted = fitted && quoted6[k] == static_cast<long>(k + k / 2 + 1);
  o.check(fitted, "(e) fitted numerator reproduces k + [k/2] + 1: " + sequence(quoted6, 0, 8) + ",...");
  const int kq = 10;
  const auto actual6 = two_pair_dims(kq);
  bool claim = true, proof = true;
  for (int k = 0; k <= kq; ++k) {
    claim = claim && actual6[k] == static_cast<long>(k + k / 2 + 1);
    proof = proof && actual6[k] == static_cast<long>(k + 2 * (k / 2) + 1);
  }
  o.check(claim, "(e) quotient of C[X1,X2,Y1,Y2]^[1,1,2,2] has dims k + [k/2] + 1: actual " +
                     sequence(actual6, 0, kq + 1) + ", quoted " + sequence(quoted6, 0, kq + 1));
  if (proof) o.note("(e) the actual dims are k + 2[k/2] + 1 to k = 10, as the direct-sum decomposition gives");
  const auto& p12 = c.presentation("12h");
  if (p12.hilbert) {
    const auto h12 = p12.hilbert->expand_doubled(kq);
    bool same = true;
    for (int k = 0; k <= kq; ++k) same = same && h12[k] == actual6[k];
    if (same) o.note("(e) the catalog series for case 12h equals the actual quotient series");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Catalog& c = shipped();
  VerifyOptions opts;
  opts.integrality_prec = 100;
  Verifier v(c, opts);
  for (const char* name : {"alpha1", "alpha7"}) {
    const Report r = v.verify_integrality(name);
    o.check(r.passed(), std::string(name) + " in q + Z[[q]]q^2 to O(q^100)");
  }
  const Report neg = v.verify_integrality("fchi5");
  const bool non_rational = neg.details.contains("first_non_integer") &&
                            neg.details["first_non_integer"].at("index") == 1;
  o.check(neg.status == Status::Fail && non_rational,
          "negative control fchi5 is rejected, non-integral from q^1: " + neg.details.dump());
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::string cmd = std::string(MFRING_PROPERTY_TESTS) + " --minimal";
  const int rc = std::system(cmd.c_str());
  o.check(rc == 0, "property_tests (field axioms, conjugation, V operator, characters, rank-nullity, "
                   "Sturm stabilization, scaling, ideal closure, Hilbert nonnegativity, vanishing bound)");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Eisenstein fixtures", criterion1},   {"identity suite", criterion2},   {"span suite", criterion3},
      {"relation suite", criterion4},        {"kernel exhaustion", criterion5}, {"Hilbert suite", criterion6},
      {"integrality", criterion7},           {"property suites", criterion8},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("threw: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << ms << " ms)\n";
    for (const auto& line : o.lines) std::cout << "    " << line << "\n";
    std::cout.flush();
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
