#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "lrc/error.hpp"
#include "lrc/oracles/duan.hpp"
#include "lrc/parallel.hpp"
#include "lrc/positivity/positivity.hpp"
#include "lrc/rank2/rank2.hpp"

using namespace lrc;
using lrc::test::alt;

namespace {

// Outcome of one criterion. `known` marks a documented deviation of the
// printed source values; `evidence` must then hold for the run to succeed.
struct Outcome {
  bool pass = true;
  std::string detail;
  bool known = false;
  bool evidence = false;
};

struct Check {
  Outcome& o;
  std::ostringstream log;
  explicit Check(Outcome& out) : o(out) {}
  void operator()(bool ok, const std::string& what) {
    if (!ok) {
      if (o.pass) log << what;
      else if (log.tellp() < 300) log << "; " << what;
      o.pass = false;
    }
  }
};

int threads() { return resolve_threads(0); }

Word W(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

MultiPoly num(const QuasiCartanMatrix& A, long c) { return MultiPoly::constant(A.ring(), c); }

Outcome a3_golden() {
  Outcome o;
  Check ck(o);
  auto A = preset("A3");
  CoxeterGroup G(A);
  auto u = G.element(W("13")), v = G.element(W("132")), w = G.element(W("32132"));
  std::vector<SummandTrace> tr;
  SumOptions opt;
  opt.traces = &tr;
  ck(lr_coefficient(A, G, u, v, w, W("32132"), opt) == num(A, 1), "c != 1 on (3,2,1,3,2)");
  // (K', K'', phi, p) rows of the printed table
  std::set<std::tuple<PositionSet, PositionSet, std::string, std::string>> want{
      {position_set({3, 4}), position_set({1, 3, 5}), "3->2", "1"},
      {position_set({1, 3}), position_set({3, 4, 5}), "3->2", "1"},
      {position_set({3, 4}), position_set({3, 4, 5}), "3->1, 4->2", "0"},
      {position_set({3, 4}), position_set({3, 4, 5}), "3->2, 4->1", "-1"}},
      got;
  for (auto& t : tr) {
    std::string phi;
    for (int l : positions_of(t.phi.nonzero_domain()))
      phi += (phi.empty() ? "" : ", ") + std::to_string(l) + "->" + std::to_string(t.phi(l));
    got.insert({t.kprime, t.kdoubleprime, phi, t.value().to_string()});
  }
  ck(tr.size() == 4 && got == want, "summands on (3,2,1,3,2) differ from the table");
  tr.clear();
  ck(lr_coefficient(A, G, u, v, w, W("23121"), opt) == num(A, 1), "c != 1 on (2,3,1,2,1)");
  ck(tr.size() == 1 && tr[0].value() == num(A, 1), "expected one summand of value 1 on (2,3,1,2,1)");
  o.detail = ck.log.str();
  if (o.pass) o.detail = "c = 1; summands 1, 1, 0, -1 and a single 1";
  return o;
}

Outcome a5_golden() {
  Outcome o;
  Check ck(o);
  auto A = preset("A5");
  CoxeterGroup G(A);
  auto u = G.element(W("42")), v = G.element(W("343121")), w = G.element(W("52343121"));
  std::vector<SummandTrace> tr;
  SumOptions opt;
  opt.traces = &tr;
  ck(lr_coefficient(A, G, u, v, w, W("52343121"), opt) == num(A, 2), "c != 2");
  ck(lrc::test::sorted(lrc::test::trace_values(tr)) == std::vector<std::string>{"0", "1", "1"},
     "summands on the first word are not 0, 1, 1");
  tr.clear();
  ck(lr_coefficient(A, G, u, v, w, W("52432124"), opt) == num(A, 2), "c != 2 on the second word");
  ck(lrc::test::sorted(lrc::test::trace_values(tr)) ==
         std::vector<std::string>{"-1", "0", "0", "0", "0", "0", "0", "1", "1", "1"},
     "second word does not give -1 + 0*6 + 1 + 1 + 1");
  auto& R = G.reduced_words(w);
  std::multiset<std::size_t> sizes;
  for (auto& c : commutativity_classes(R, A)) sizes.insert(c.size());
  ck(R.size() == 64, "|R(w)| != 64");
  ck(sizes == std::multiset<std::size_t>{14, 30, 5, 12, 3}, "class sizes differ");
  o.detail = o.pass ? "c = 2 with 3 and 10 summands; |R(w)| = 64, classes 14, 30, 5, 12, 3" : ck.log.str();
  return o;
}

Outcome affine_counts() {
  Outcome o;
  Check ck(o);
  auto t0 = std::chrono::steady_clock::now();
  auto A = preset("affine-SL2");
  CoxeterGroup G(A);
  Word iota = W("12121212");
  auto u = G.element(W("1212")), w = G.element(iota);
  auto n_adm = count_summands(A, G, u, u, w, iota, Filter::Admissible, false);
  auto n_all = count_summands(A, G, u, u, w, iota, Filter::All, false);
  SumOptions all;
  all.filter = Filter::All;
  auto c1 = lr_coefficient(A, G, u, u, w, iota), c2 = lr_coefficient(A, G, u, u, w, iota, all);
  auto rec = lrc::test::folded_recursion(A, G, iota, u, u);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ck(n_adm == 19, "admissible count " + std::to_string(n_adm));
  ck(n_all == 190, "unrestricted count " + std::to_string(n_all));
  ck(c1 == c2 && c1 == rec, "sums disagree");
  ck(secs < 60, "over budget");
  o.detail = o.pass ? "19 / 190 summands, both sum to " + c1.to_string() + " = recursion" : ck.log.str();
  return o;
}

Outcome h3_table() {
  Outcome o;
  Check ck(o);
  auto A = preset("H3");
  CoxeterGroup G(A);
  auto elems = G.elements_up_to(4), elems5 = G.elements_up_to(5);
  // printed cells: row * column = sum of coeff * sigma_label
  struct Cell {
    const char *x, *y;
    std::vector<std::pair<const char*, const char*>> terms;
  };
  std::vector<Cell> cells{
      {"12", "12", {{"1212", "1"}, {"2312", "rho"}, {"3212", "rho^2"}}},
      {"21", "12", {{"1212", "rho"}, {"2121", "rho"}, {"1321", "1"}, {"3212", "rho"}}},
      {"21", "21", {{"2121", "1"}, {"1321", "2*rho"}}},
      {"13", "12", {{"2123", "rho"}, {"3212", "rho"}, {"2312", "rho"}, {"1321", "1"}, {"1231", "1"}}},
      {"13", "21", {{"1321", "rho"}, {"1231", "rho"}, {"2321", "rho"}}},
      {"23", "12", {{"2312", "1"}, {"1323", "1"}, {"2123", "rho"}}},
      {"23", "21", {{"2321", "1"}, {"2123", "1"}, {"1231", "rho"}}},
      {"32", "12", {{"2312", "rho"}, {"3212", "rho"}}},
      {"32", "21", {{"2312", "1"}, {"3212", "1"}, {"1321", "rho"}}},
      {"13", "13", {{"1231", "rho^2"}, {"2123", "rho"}, {"2321", "rho"}}},
      {"23", "13", {{"2123", "rho^2"}, {"1231", "1"}}},
      {"23", "23", {{"2123", "rho^2"}}},
      {"32", "13", {{"2312", "1"}, {"2321", "1"}, {"1321", "1"}}},
      {"32", "23", {{"1323", "rho"}}},
      {"32", "32", {{"2312", "rho"}}},
  };
  std::vector<std::string> bad;
  bool corrected_ok = true, printed_wrong = true;
  for (auto& c : cells) {
    auto x = G.element(W(c.x)), y = G.element(W(c.y));
    std::map<std::string, MultiPoly> want;
    for (auto& [lab, coeff] : c.terms) want[G.element(W(lab)).canonical.label()] += MultiPoly::parse(A.ring(), coeff);
    auto got = lrc::test::product_row(A, G, x, y, elems);
    if (got == want) continue;
    bad.push_back(std::string("sigma_") + c.x + " sigma_" + c.y);
    // the localization product identity decides between the two rows
    bool printed_fails = false;
    for (auto& w : elems5) {
      auto lhs = billey_localization(A, G, w.canonical, x) * billey_localization(A, G, w.canonical, y);
      MultiPoly low(A.ring()), ours(A.ring()), printed(A.ring());
      for (auto& z : elems) {
        auto bz = billey_localization(A, G, w.canonical, z);
        if (z.length() < 4) low += equivariant_lr(A, G, x, y, z, z.canonical) * bz;
        if (auto it = got.find(z.canonical.label()); it != got.end()) ours += it->second * bz;
        if (auto it = want.find(z.canonical.label()); it != want.end()) printed += it->second * bz;
      }
      corrected_ok = corrected_ok && lhs == low + ours;
      printed_fails = printed_fails || !(lhs == low + printed);
    }
    printed_wrong = printed_wrong && printed_fails;
  }
  ck(bad.empty(), "");
  if (o.pass) {
    o.detail = "all 15 printed cells reproduced in Q(rho)";
  } else {
    o.known = true;
    o.evidence = corrected_ok && printed_wrong && bad.size() == 2;
    o.detail = std::to_string(cells.size() - bad.size()) + "/" + std::to_string(cells.size()) +
               " printed cells reproduced; differing: " + bad[0] + (bad.size() > 1 ? ", " + bad[1] : "") +
               (o.evidence ? " (printed values violate the localization product identity, computed ones satisfy it)"
                           : "");
  }
  return o;
}

Outcome h3_polynomial() {
  Outcome o;
  Check ck(o);
  auto A = preset("H3");
  CoxeterGroup G(A);
  auto u = G.element(W("3123")), v = G.element(W("132")), w = G.element(W("1212312"));
  ck(lr_coefficient(A, G, u, v, w, W("1212312")) == MultiPoly::parse(A.ring(), "rho^2"), "c != rho^2");
  ck(G.reduced_words(w).size() == 5, "|R(w)| != 5");
  auto cs = deformed_by_class(A, G, u, v, w, threads());
  ck(cs.size() == 3, "not 3 classes");
  for (auto& c : cs) {
    for (auto& p : c.values) ck(p == c.values[0], "class not constant");
    ck(c.values[0].substitute_t(Scalar::from_int(0)) == MultiPoly::parse(A.ring(), "rho^2"), "t = 0 value");
  }
  o.detail = o.pass ? "c = rho^2; 5 words in 3 classes, constant on classes" : ck.log.str();
  return o;
}

Outcome kitchloo() {
  Outcome o;
  Check ck(o);
  std::size_t n = 0;
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {1, 4}}) {
    auto A = preset("dihedral(" + std::to_string(a) + "," + std::to_string(b) + ",inf)");
    CoxeterGroup G(A);
    auto p = Rank2Params::from_matrix(A);
    using E = DihedralElement;
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k)
        for (auto fx : {E::U, E::V})
          for (auto fy : {E::U, E::V})
            for (auto fz : {E::U, E::V}) {
              E x{fx, k}, y{fy, m - k}, z{fz, m};
              auto lr = lr_coefficient(A, G, G.element(x.word()), G.element(y.word()), G.element(z.word()), z.word());
              ck(kitchloo_coefficient(p, x, y, z) == lr, "case table differs at m=" + std::to_string(m));
              ++n;
            }
    for (int m = 1; m <= 7; ++m)
      for (int k = 0; k < m; ++k) {
        // c^{u_m}_{u_k,u_{m-k}} = c^{v_{m+1}}_{v_{k+1},u_{m-k}} = c^{v_{m+1}}_{u_k,v_{m-k+1}}
        auto c = [&](E x, E y, E z) {
          return lr_coefficient(A, G, G.element(x.word()), G.element(y.word()), G.element(z.word()), z.word());
        };
        auto base = c({E::U, k}, {E::U, m - k}, {E::U, m});
        ck(base == c({E::V, k + 1}, {E::U, m - k}, {E::V, m + 1}), "cross-flavor identity 1");
        ck(base == c({E::U, k}, {E::V, m - k + 1}, {E::V, m + 1}), "cross-flavor identity 2");
        if (k > 0 && k < m) {
          ck(c({E::U, k}, {E::U, m - k}, {E::V, m}).is_zero(), "vanishing c^{v_m}_{u,u}");
          ck(c({E::V, k}, {E::V, m - k}, {E::U, m}).is_zero(), "vanishing c^{u_m}_{v,v}");
        }
      }
    if (a == 2 && b == 2) {
      for (int m = 0; m <= 8; ++m) {
        long bin = 1;
        for (int k = 0; k <= m; ++k) {
          ck(binomial_C(p, k, m) == MultiPoly::constant(p.ring(), bin), "C(k,m) != binomial(m,k)");
          bin = bin * (m - k) / (k + 1);
        }
      }
    }
  }
  o.detail = o.pass ? std::to_string(n) + " case-table values equal the closed form; cross-flavor, vanishing and binomial checks hold"
                    : ck.log.str();
  return o;
}

Outcome rank2_equivariant() {
  Outcome o;
  Check ck(o);
  auto A = preset("dihedral(a,b,inf)", false);
  CoxeterGroup G(A);
  const Ring* R = A.ring();
  auto p = Rank2Params::symbolic();
  auto As = chebyshev_table(p, SeqKind::A, 6), Bs = chebyshev_table(p, SeqKind::B, 6);
  auto one = MultiPoly::constant(R, 1), two = MultiPoly::constant(R, 2);
  auto img = [&](int m, int last, int i) { return act(A, alt(m, last), RootVector::simple(A, i)).as_linear_form(R); };
  auto u = [&](int m, int i) { return img(m, 1, i); };
  auto v = [&](int m, int i) { return img(m, 2, i); };
  auto a1 = MultiPoly::alpha(R, 1);
  auto e = [&](int m) { return G.element(alt(m, 1)); };

  auto p34 = equivariant_lr(A, G, e(3), e(4), e(5), alt(5, 1));
  auto printed34 = u(1, 2) * v(2, 1) + u(1, 2) * v(4, 1) + u(3, 2) * v(4, 1) + (As[5] - As[3]) * v(1, 1) * u(2, 2) +
                   (As[4] - As[3]) * v(1, 1) * v(4, 1) + (As[3] - one) * u(3, 2) * v(4, 1);
  auto fixed34 = printed34 + (As[3] - As[2]) * v(1, 1) * v(4, 1);
  auto p33 = equivariant_lr(A, G, e(3), e(3), e(5), alt(5, 1));
  auto printed33 = two * (a1 + v(2, 1) + v(4, 1)) + (As[3] - one) * ((As[5] - As[3]) * a1 + As[2] * u(2, 2)) +
                   As[2] * (As[4] - As[2]) * v(4, 1);
  auto fixed33 = two * (a1 + v(2, 1) + v(4, 1)) + (As[3] - one) * (As[5] - As[3]) * a1 +
                 Bs[2] * (As[5] - As[3]) * u(2, 2) + Bs[2] * (As[4] - As[2]) * v(4, 1);
  ck(p34 == printed34, "p_{u3,u4}^{u5} differs from the printed sum");
  ck(p33 == printed33, "p_{u3,u3}^{u5} differs from the printed sum");
  if (o.pass) {
    o.detail = "both expressions equal after expansion";
  } else {
    o.known = true;
    o.evidence = p34 == fixed34 && p33 == fixed33 && p34 == lrc::test::folded_recursion(A, G, alt(5, 1), e(3), e(4)) &&
                 p33 == lrc::test::folded_recursion(A, G, alt(5, 1), e(3), e(3));
    o.detail = ck.log.str() +
               (o.evidence ? " (equal to the recursion; matches with (A_4 - A_2) in the first and b = B_2 "
                             "factors in rows 8, 9 of the second)"
                           : "");
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Check ck(o);
  std::size_t pairs = 0, duan_cases = 0;
  for (auto name : {"A2", "A3", "B2", "G2", "affine-SL2", "H3-rank2-slice"}) {
    auto A = preset(name);
    std::vector<Word> words;
    for (int m = 0; m <= 6; ++m)
      for (auto& w : lrc::test::admissible_words(A.rank(), m)) words.push_back(w);
    std::vector<std::size_t> count(words.size()), bad(words.size());
    parallel_for(words.size(), threads(), [&](std::size_t k) {
      const Word& iota = words[k];
      auto all = all_relative_coefficients(A, iota, Filter::All);
      auto adm = all_relative_coefficients(A, iota, Filter::Admissible);
      RelativeRecursion R(A, DecoratedWord::plain(iota));
      for (auto& [key, p] : all) {
        auto rec = R.coefficient(DecoratedWord::plain(key.first), DecoratedWord::plain(key.second));
        ++count[k];
        if (!(p == rec)) ++bad[k];
        if (is_admissible_seq(key.first) && is_admissible_seq(key.second) && !(adm.at(key) == rec)) ++bad[k];
      }
    });
    for (std::size_t k = 0; k < words.size(); ++k) {
      pairs += count[k];
      ck(bad[k] == 0, std::string(name) + " " + words[k].to_string());
    }
  }
  for (auto name : {"A2", "A3"}) {
    auto A = preset(name);
    CoxeterGroup G(A);
    auto elems = G.elements_up_to(6);
    std::vector<std::tuple<GroupElement, GroupElement, GroupElement>> ts;
    for (auto& w : elems)
      for (auto& u : elems)
        for (auto& v : elems)
          if (u.length() + v.length() == w.length()) ts.push_back({u, v, w});
    std::vector<int> bad(ts.size());
    std::vector<std::size_t> n(ts.size());
    parallel_for(ts.size(), threads(), [&](std::size_t k) {
      auto& [u, v, w] = ts[k];
      for (auto& iota : G.reduced_words(w)) {
        ++n[k];
        if (!(duan_coefficient(A, G, iota, u, v) == lr_coefficient(A, G, u, v, w, iota))) ++bad[k];
      }
    });
    for (std::size_t k = 0; k < ts.size(); ++k) {
      duan_cases += n[k];
      ck(bad[k] == 0, std::string("Duan ") + name + " " + std::get<2>(ts[k]).canonical.to_string());
    }
  }
  o.detail = o.pass ? std::to_string(pairs) + " subsequence pairs and " + std::to_string(duan_cases) +
                          " Duan triples agree exactly"
                    : ck.log.str();
  return o;
}

Outcome structural() {
  Outcome o;
  Check ck(o);
  for (auto name : {"A3", "B2", "G2", "affine-SL2"}) {
    auto A = preset(name);
    for (int m = 1; m <= 5; ++m)
      for (auto& iota : lrc::test::admissible_words(A.rank(), m)) {
        auto all = all_relative_coefficients(A, iota, Filter::All);
        for (auto& [key, p] : all) {
          ck(p == all.at({key.second, key.first}), std::string("symmetry ") + name + " " + iota.to_string());
          if (!p.is_zero())
            ck(p.is_alpha_homogeneous(int(key.first.size() + key.second.size()) - m),
               std::string("homogeneity ") + name + " " + iota.to_string());
        }
      }
  }
  auto A = preset("A3");
  CoxeterGroup G(A);
  auto elems = G.elements_up_to(6);
  std::vector<std::tuple<GroupElement, GroupElement, GroupElement>> ts;
  for (auto& w : elems)
    for (auto& u : elems)
      for (auto& v : elems)
        if (u.length() + v.length() >= w.length()) ts.push_back({u, v, w});
  std::vector<int> bad_iota(ts.size()), bad_t0(ts.size());
  parallel_for(ts.size(), threads(), [&](std::size_t k) {
    auto& [u, v, w] = ts[k];
    auto ref = equivariant_lr(A, G, u, v, w, w.canonical);
    for (auto& iota : G.reduced_words(w)) {
      if (!(equivariant_lr(A, G, u, v, w, iota) == ref)) ++bad_iota[k];
      if (w.length() <= 5 && !(deformed_p(A, G, u, v, iota).substitute_t(Scalar::from_int(0)) == ref)) ++bad_t0[k];
    }
  });
  for (std::size_t k = 0; k < ts.size(); ++k) {
    ck(bad_iota[k] == 0, "equivariant_lr depends on iota");
    ck(bad_t0[k] == 0, "t = 0 specialisation");
  }
  auto u = G.element(W("13")), v = G.element(W("132"));
  auto P = [&](const char* s) { return MultiPoly::parse(A.ring(), s); };
  ck(deformed_p(A, G, u, v, W("23121")) == P("t + 1"), "row (2,3,1,2,1)");
  ck(deformed_p(A, G, u, v, W("21321")) == P("t + 1"), "row (2,1,3,2,1)");
  ck(deformed_p(A, G, u, v, W("23212")) == P("(t + 1)^2"), "row (2,3,2,1,2)");
  ck(deformed_p(A, G, u, v, W("32312")) == P("(t + 1)^3"), "row (3,2,3,1,2)");
  ck(deformed_p(A, G, u, v, W("32132")) == P("(t + 1)^3"), "row (3,2,1,3,2)");
  o.detail = o.pass ? "symmetry, homogeneity, independence of iota, t = 0 specialisation, five-row deformation table"
                    : ck.log.str();
  return o;
}

Outcome positivity() {
  Outcome o;
  Check ck(o);
  auto aff = nonneg_audit(preset("affine-SL2"), 6, threads());
  auto a3 = nonneg_audit(preset("A3"), 6, threads());
  auto h3 = nonneg_audit(preset("H3"), 5, threads());
  ck(aff.passed(), "nonneg affine-SL2");
  ck(a3.passed(), "nonneg A3");
  ck(h3.passed(), "nonneg H3");
  std::size_t roots = 0;
  auto R3 = matrix_from_json_text(
      R"({"rank":3,"matrix":[["2","-2","-3"],["-2","2","-5/2"],["-4/3","-2","2"]],"orders":[[1,0,0],[0,1,0],[0,0,1]]})");
  std::vector<QuasiCartanMatrix> special{preset("affine-SL2"), preset("dihedral(1,4,inf)"), preset("dihedral(2,3,inf)"),
                                         preset("dihedral(1/2,8,inf)"), R3};
  for (auto& A : special)
    for (int m = 2; m <= 8; ++m)
      for (auto& iota : lrc::test::admissible_words(A.rank(), m)) {
        ++roots;
        ck(root_positivity_check(A, iota).ok, "root positivity " + A.id() + " " + iota.to_string());
      }
  auto tpos = t_positivity_audit(preset("A3"), 6, threads());
  bool others_ok = o.pass;
  ck(tpos.passed(), std::to_string(tpos.violations.size()) + " t-positivity violations on A3");
  if (o.pass) {
    o.detail = "all audits pass";
    return o;
  }
  o.detail = ck.log.str();
  if (others_ok) {
    // every violation sits at the longest element and is confirmed by the recursion on (1+t)A - 2t Id
    auto A = preset("A3");
    CoxeterGroup G(A);
    bool ev = !tpos.violations.empty();
    for (auto& x : tpos.violations) {
      auto w = G.element(x.w);
      ev = ev && w.length() == 6;
      MultiPoly rec = lrc::test::folded_recursion(A.deformed(), G, x.iota, G.element(x.u), G.element(x.v));
      ev = ev && rec.to_string() == x.value && !rec.coefficientwise_nonneg();
    }
    o.known = true;
    o.evidence = ev;
    const auto& f = tpos.violations.front();
    o.detail += " (nonneg audits and " + std::to_string(roots) + " root checks pass; all violations at w0, e.g. u=" +
                f.u.to_string() + " v=" + f.v.to_string() + " iota=" + f.iota.to_string() + ": " + f.value +
                (ev ? ", confirmed by the recursion)" : ")");
  }
  return o;
}

Outcome localization() {
  Outcome o;
  Check ck(o);
  auto A = preset("A3");
  CoxeterGroup G(A);
  auto elems = G.elements_up_to(6);
  std::vector<GroupElement> small;
  for (auto& e : elems)
    if (e.length() <= 4) small.push_back(e);
  // xi_w(sigma_u) xi_w(sigma_v) = sum_z c^z_{u,v} xi_w(sigma_z)
  std::vector<int> bad(small.size());
  parallel_for(small.size(), threads(), [&](std::size_t k) {
    const auto& u = small[k];
    for (auto& v : small) {
      std::vector<std::pair<const GroupElement*, MultiPoly>> prod;
      for (auto& z : elems)
        if (z.length() <= u.length() + v.length())
          if (auto p = equivariant_lr(A, G, u, v, z, z.canonical); !p.is_zero()) prod.push_back({&z, p});
      for (auto& w : small) {
        auto lhs = billey_localization(A, G, w.canonical, u) * billey_localization(A, G, w.canonical, v);
        MultiPoly rhs(A.ring());
        for (auto& [z, p] : prod) rhs += p * billey_localization(A, G, w.canonical, *z);
        if (!(lhs == rhs)) ++bad[k];
      }
    }
  });
  for (std::size_t k = 0; k < small.size(); ++k) ck(bad[k] == 0, "u = " + small[k].canonical.to_string());
  o.detail = o.pass ? std::to_string(small.size() * small.size() * small.size()) + " (u, v, w) triples" : ck.log.str();
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"A3 golden", a3_golden},
      {"A5 golden", a5_golden},
      {"affine SL2 summand counts", affine_counts},
      {"H3 multiplication table", h3_table},
      {"H3 polynomial", h3_polynomial},
      {"rank-2 binomials", kitchloo},
      {"rank-2 equivariant", rank2_equivariant},
      {"oracle equivalence", oracle_equivalence},
      {"structural invariants", structural},
      {"positivity", positivity},
      {"localization", localization},
  };
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << o.detail;
    if (!o.pass && o.known) std::cout << (o.evidence ? " [known deviation]" : " [known deviation, evidence missing]");
    std::cout << " (" << std::fixed << std::setprecision(1) << secs << "s)\n" << std::flush;
    if (!o.pass && !(o.known && o.evidence)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
