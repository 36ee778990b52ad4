#include "lrc/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "lrc/closedform/coefficients.hpp"
#include "lrc/error.hpp"
#include "lrc/oracles/duan.hpp"
#include "lrc/oracles/recursion.hpp"
#include "lrc/parallel.hpp"
#include "lrc/positivity/positivity.hpp"
#include "lrc/rank2/rank2.hpp"

namespace lrc::cli {

using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string preset, matrix_file, format = "text";
  int threads = 0;
  bool no_validate = false;
  int max_len = -1;
  int duan_cap = 8;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool json;
};

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidMatrix:
    case ErrorKind::UnsupportedOrder:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::MixedRing:
      return kInputError;
    case ErrorKind::ResourceCap:
    case ErrorKind::TooLarge:
      return kResourceCap;
    default:
      return kPrecondition;
  }
}

QuasiCartanMatrix load_matrix(const Common& c) {
  if (!c.preset.empty() && !c.matrix_file.empty())
    throw Error(ErrorKind::Parse, "give either --preset or --matrix, not both");
  if (!c.matrix_file.empty()) return matrix_from_file(c.matrix_file, !c.no_validate);
  if (c.preset.empty()) throw Error(ErrorKind::Parse, "a matrix is required (--preset NAME or --matrix FILE)");
  return preset(c.preset, !c.no_validate);
}

GroupElement element_arg(const CoxeterGroup& G, const std::string& text, const char* flag, std::ostream& err) {
  Word w = Word::parse(text);
  GroupElement e = G.normal_form(w);
  if (!G.is_reduced(w))
    err << "note: " << flag << " " << w.to_string() << " is not reduced; using " << e.canonical.to_string() << "\n";
  return e;
}

// Resolves (w, iota) from --w / --iota. A reduced --w word doubles as the base word.
std::pair<GroupElement, Word> base_word(const CoxeterGroup& G, const std::string& w_text,
                                        const std::string& iota_text, std::ostream& err) {
  if (!iota_text.empty()) {
    Word iota = Word::parse(iota_text);
    if (!w_text.empty()) {
      GroupElement w = element_arg(G, w_text, "--w", err);
      if (!G.in_reduced_words(iota, w))
        throw Error(ErrorKind::NotReducedFor, iota.to_string() + " is not a reduced word of " + w.canonical.to_string());
      return {w, iota};
    }
    if (!G.is_reduced(iota)) throw Error(ErrorKind::NotReducedFor, iota.to_string() + " is not reduced");
    return {G.normal_form(iota), iota};
  }
  if (w_text.empty()) throw Error(ErrorKind::Parse, "--w or --iota is required");
  Word word = Word::parse(w_text);
  GroupElement w = G.normal_form(word);
  if (G.is_reduced(word)) return {w, word};
  err << "note: --w " << word.to_string() << " is not reduced; using " << w.canonical.to_string() << "\n";
  return {w, w.canonical};
}

std::string label(const GroupElement& g) { return g.canonical.empty() ? "e" : g.canonical.label(); }

json positions_json(PositionSet s) {
  json a = json::array();
  for (int k : positions_of(s)) a.push_back(k);
  return a;
}

json phi_json(const BoundedMap& phi) {
  json o = json::object();
  for (int l : positions_of(phi.domain)) o[std::to_string(l)] = phi(l);
  return o;
}

// coefficient prefix for "c*sigma_w"
std::string coeff_prefix(const MultiPoly& c) {
  if (c.is_one()) return "";
  std::string s = c.to_string();
  if (s.find_first_of("+- ", 1) == std::string::npos) return s + "*";
  return "(" + s + ")*";
}

Scalar scalar_arg(const QuasiCartanMatrix& A, const std::string& text) {
  MultiPoly p = MultiPoly::parse(A.ring(), text);
  if (!p.is_constant()) throw Error(ErrorKind::Parse, "'" + text + "' is not a number");
  return p.as_scalar();
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
  std::string u, v, w, iota, filter = "admissible";
  bool equivariant = false, trace = false, count_only = false;
};

int cmd_compute(const Common& c, const ComputeArgs& a, Io io) {
  auto A = load_matrix(c);
  CoxeterGroup G(A);
  GroupElement u = element_arg(G, a.u, "--u", io.err), v = element_arg(G, a.v, "--v", io.err);
  auto [w, iota] = base_word(G, a.w, a.iota, io.err);

  if (a.count_only) {
    auto n_adm = count_summands(A, G, u, v, w, iota, Filter::Admissible, a.equivariant);
    auto n_all = count_summands(A, G, u, v, w, iota, Filter::All, a.equivariant);
    if (io.json)
      io.out << json{{"admissible", n_adm}, {"all", n_all}}.dump() << "\n";
    else
      io.out << "summands: " << n_adm << " (admissible), " << n_all << " (all)\n";
    return kOk;
  }

  SumOptions opt;
  opt.filter = a.filter == "all" ? Filter::All : Filter::Admissible;
  opt.threads = c.threads;
  std::vector<SummandTrace> traces;
  if (a.trace) opt.traces = &traces;
  MultiPoly value = a.equivariant ? equivariant_lr(A, G, u, v, w, iota, opt) : lr_coefficient(A, G, u, v, w, iota, opt);

  for (const auto& t : traces) {
    if (io.json) {
      json j{{"kprime", positions_json(t.kprime)},
             {"kdoubleprime", positions_json(t.kdoubleprime)},
             {"L", positions_json(t.L)},
             {"phi", phi_json(t.phi)},
             {"p", t.p.to_string()},
             {"alpha_product", t.alpha_product.to_string()},
             {"admissible", t.admissible}};
      io.out << j.dump() << "\n";
    } else {
      io.out << "K'=" << positions_to_string(t.kprime) << " K''=" << positions_to_string(t.kdoubleprime)
             << " L=" << positions_to_string(t.L) << " phi={" << t.phi.to_string() << "} p=" << t.p.to_string()
             << " alpha=" << t.alpha_product.to_string() << " admissible=" << (t.admissible ? "true" : "false")
             << "\n";
    }
  }
  if (io.json) {
    json j{{"u", label(u)},   {"v", label(v)},       {"w", label(w)},
           {"iota", iota.to_string()}, {"filter", a.filter}, {"equivariant", a.equivariant},
           {"value", value.to_string()}};
    io.out << (a.trace ? j.dump() : j.dump(2)) << "\n";
  } else {
    io.out << value.to_string() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::vector<int> len;
  bool equivariant = false;
};

int cmd_table(const Common& c, const TableArgs& a, Io io) {
  if (a.len.size() != 2 || a.len[0] < 0 || a.len[1] < 0) throw Error(ErrorKind::Parse, "--len needs two lengths");
  const int l1 = a.len[0], l2 = a.len[1], top = l1 + l2;
  if (c.max_len >= 0 && top > c.max_len)
    throw Error(ErrorKind::ResourceCap, "table needs length " + std::to_string(top) + " > --max-len");
  auto A = load_matrix(c);
  CoxeterGroup G(A);
  auto elems = G.elements_up_to(top);
  std::vector<GroupElement> us, vs, ws;
  for (auto& e : elems) {
    if (int(e.length()) == l1) us.push_back(e);
    if (int(e.length()) == l2) vs.push_back(e);
    int lo = a.equivariant ? std::max(l1, l2) : top;
    if (int(e.length()) >= lo && int(e.length()) <= top) ws.push_back(e);
  }
  std::vector<std::vector<std::pair<GroupElement, MultiPoly>>> cells(us.size() * vs.size());
  parallel_for(cells.size(), c.threads, [&](std::size_t k) {
    const auto& u = us[k / vs.size()];
    const auto& v = vs[k % vs.size()];
    for (const auto& w : ws) {
      MultiPoly p = a.equivariant ? equivariant_lr(A, G, u, v, w, w.canonical) : lr_coefficient(A, G, u, v, w, w.canonical);
      if (!p.is_zero()) cells[k].emplace_back(w, std::move(p));
    }
  });

  json rows = json::array();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& u = us[k / vs.size()];
    const auto& v = vs[k % vs.size()];
    std::string rhs;
    json prod = json::array();
    for (const auto& [w, p] : cells[k]) {
      if (!rhs.empty()) rhs += " + ";
      rhs += coeff_prefix(p) + "sigma_" + label(w);
      prod.push_back({{"w", label(w)}, {"coeff", p.to_string()}});
    }
    if (rhs.empty()) rhs = "0";
    if (io.json)
      rows.push_back({{"u", label(u)}, {"v", label(v)}, {"product", prod}});
    else
      io.out << "sigma_" << label(u) << " * sigma_" << label(v) << " = " << rhs << "\n";
  }
  if (io.json) io.out << json{{"matrix", A.id()}, {"len", a.len}, {"rows", rows}}.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- crosscheck

struct CrossCase {
  GroupElement u, v, w;
  std::string closed, closed_all, rec;
  std::optional<std::string> duan, rank2;
  bool agree = true;
};

int cmd_crosscheck(const Common& c, Io io) {
  const int max_len = c.max_len >= 0 ? c.max_len : 4;
  auto A = load_matrix(c);
  CoxeterGroup G(A);
  auto elems = G.elements_up_to(max_len);
  std::optional<Rank2Params> r2;
  if (A.rank() == 2) r2 = Rank2Params::from_matrix(A);

  std::vector<CrossCase> cases;
  for (const auto& w : elems)
    for (const auto& u : elems) {
      if (u.length() > w.length() || reduced_embeddings(G, w.canonical, u).empty()) continue;
      for (const auto& v : elems) {
        if (v.length() > w.length() || u.length() + v.length() < w.length()) continue;
        if (reduced_embeddings(G, w.canonical, v).empty()) continue;
        cases.push_back({u, v, w, "", "", "", std::nullopt, std::nullopt, true});
      }
    }

  parallel_for(cases.size(), c.threads, [&](std::size_t k) {
    auto& cs = cases[k];
    const Word& iota = cs.w.canonical;
    MultiPoly closed = equivariant_lr(A, G, cs.u, cs.v, cs.w, iota);
    SumOptions all;
    all.filter = Filter::All;
    MultiPoly closed_all = equivariant_lr(A, G, cs.u, cs.v, cs.w, iota, all);
    MultiPoly rec(A.ring());
    RelativeRecursion R(A, DecoratedWord::plain(iota));
    for (const auto& p : G.reduced_words(cs.u))
      for (const auto& q : G.reduced_words(cs.v)) rec += R.coefficient(DecoratedWord::plain(p), DecoratedWord::plain(q));
    cs.closed = closed.to_string();
    cs.closed_all = closed_all.to_string();
    cs.rec = rec.to_string();
    cs.agree = closed == rec && closed_all == rec;
    if (cs.u.length() + cs.v.length() == cs.w.length()) {
      if (int(iota.size()) <= c.duan_cap) {
        MultiPoly d = duan_coefficient(A, G, iota, cs.u, cs.v, c.duan_cap);
        cs.duan = d.to_string();
        cs.agree = cs.agree && d == closed;
      }
      if (r2) {
        MultiPoly kc = kitchloo_coefficient(*r2, DihedralElement::from_word(cs.u.canonical),
                                            DihedralElement::from_word(cs.v.canonical),
                                            DihedralElement::from_word(cs.w.canonical));
        cs.rank2 = kc.to_string();
        cs.agree = cs.agree && kc == closed;
      }
    }
  });

  std::size_t bad = 0;
  for (auto& cs : cases) bad += !cs.agree;
  if (io.json) {
    json arr = json::array();
    for (auto& cs : cases) {
      json j{{"u", label(cs.u)},   {"v", label(cs.v)},           {"w", label(cs.w)},
             {"closedform", cs.closed}, {"closedform_all", cs.closed_all}, {"recursion", cs.rec}};
      j["duan"] = cs.duan ? json(*cs.duan) : json(nullptr);
      j["rank2"] = cs.rank2 ? json(*cs.rank2) : json(nullptr);
      j["agree"] = cs.agree;
      arr.push_back(j);
    }
    io.out << json{{"matrix", A.id()}, {"max_len", max_len}, {"cases", arr}, {"agree", bad == 0}}.dump(2) << "\n";
  } else {
    for (auto& cs : cases)
      if (!cs.agree)
        io.out << "DISAGREE u=" << label(cs.u) << " v=" << label(cs.v) << " w=" << label(cs.w)
               << " closedform=" << cs.closed << " all=" << cs.closed_all << " recursion=" << cs.rec
               << " duan=" << cs.duan.value_or("-") << " rank2=" << cs.rank2.value_or("-") << "\n";
    io.out << A.id() << " up to length " << max_len << ": " << cases.size() << " cases, " << bad
           << " disagreements\n";
  }
  return bad == 0 ? kOk : kViolation;
}

// ---------------------------------------------------------------- deform

struct DeformArgs {
  std::string u, v, w, iota, at;
  bool classes = false;
};

int cmd_deform(const Common& c, const DeformArgs& a, Io io) {
  auto A = load_matrix(c);
  CoxeterGroup G(A);
  GroupElement u = element_arg(G, a.u, "--u", io.err), v = element_arg(G, a.v, "--v", io.err);
  auto [w, iota] = base_word(G, a.w, a.iota, io.err);
  std::optional<Scalar> at;
  if (!a.at.empty()) at = scalar_arg(A, a.at);
  auto show = [&](const MultiPoly& p) { return (at ? p.substitute_t(*at) : p).to_string(); };

  if (!a.classes) {
    MultiPoly p = deformed_p(A, G, u, v, iota, c.threads);
    if (io.json)
      io.out << json{{"iota", iota.to_string()}, {"value", show(p)}}.dump(2) << "\n";
    else
      io.out << show(p) << "\n";
    return kOk;
  }
  auto classes = deformed_by_class(A, G, u, v, w, c.threads);
  json arr = json::array();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cl = classes[k];
    bool constant = std::all_of(cl.values.begin(), cl.values.end(), [&](auto& x) { return x == cl.values[0]; });
    json words = json::array();
    for (std::size_t i = 0; i < cl.words.size(); ++i)
      words.push_back({{"iota", cl.words[i].to_string()}, {"value", show(cl.values[i])}});
    arr.push_back({{"size", cl.words.size()}, {"constant", constant}, {"value", show(cl.values[0])}, {"words", words}});
    if (io.json) continue;
    if (constant) {
      io.out << "[" << cl.words[0].to_string() << "] x" << cl.words.size() << ": " << show(cl.values[0]) << "\n";
    } else {
      io.out << "[" << cl.words[0].to_string() << "] x" << cl.words.size() << ": not constant\n";
      for (std::size_t i = 0; i < cl.words.size(); ++i)
        io.out << "  " << cl.words[i].to_string() << ": " << show(cl.values[i]) << "\n";
    }
  }
  if (io.json) io.out << json{{"w", label(w)}, {"classes", arr}}.dump(2) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- audit

AuditReport root_positivity_audit(const QuasiCartanMatrix& A, int max_len) {
  AuditReport rep;
  rep.kind = "root-positivity";
  rep.matrix_id = A.id();
  rep.hypothesis = hypothesis_class(A);
  rep.proven = true;
  if (rep.hypothesis != HypothesisClass::ProductAtLeast4)
    throw Error(ErrorKind::HypothesisNotMet, "root positivity needs a_ij < 0 and a_ij a_ji >= 4");
  std::vector<Word> layer;
  for (int i = 1; i <= A.rank(); ++i) layer.push_back(Word{i});
  for (int len = 2; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int i = 1; i <= A.rank(); ++i)
        if (i != w.back()) next.push_back(w + Word{i});
    layer = std::move(next);
    for (const auto& iota : layer) {
      ++rep.cases;
      auto r = root_positivity_check(A, iota);
      if (!r.ok) rep.violations.push_back({Word(), Word(), Word(), iota, r.witness});
    }
  }
  return rep;
}

int cmd_audit(const Common& c, const std::string& kind, Io io) {
  const int max_len = c.max_len >= 0 ? c.max_len : 4;
  auto A = load_matrix(c);
  auto t0 = std::chrono::steady_clock::now();
  AuditReport rep;
  if (kind == "nonneg")
    rep = nonneg_audit(A, max_len, c.threads);
  else if (kind == "t-positivity")
    rep = t_positivity_audit(A, max_len, c.threads);
  else if (kind == "commutativity")
    rep = commutativity_invariance_audit(A, max_len, c.threads);
  else
    rep = root_positivity_audit(A, max_len);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (rep.hypothesis == HypothesisClass::Other)
    io.err << "warning: matrix outside both nonnegativity regimes; findings are unconditional reports\n";

  if (io.json) {
    json vs = json::array();
    for (auto& x : rep.violations)
      vs.push_back({{"u", x.u.to_string()}, {"v", x.v.to_string()}, {"w", x.w.to_string()},
                    {"iota", x.iota.to_string()}, {"value", x.value}});
    json j{{"kind", rep.kind},      {"matrix", rep.matrix_id}, {"hypothesis", to_string(rep.hypothesis)},
           {"proven", rep.proven},  {"max_len", max_len},      {"cases", rep.cases},
           {"violations", vs},      {"notes", rep.notes},      {"passed", rep.passed()},
           {"wall_time_ms", ms}};
    io.out << j.dump(2) << "\n";
  } else {
    io.out << rep.kind << " on " << rep.matrix_id << " (" << to_string(rep.hypothesis)
           << (rep.proven ? ", proven regime" : ", conjectural") << "), length <= " << max_len << ": " << rep.cases
           << " cases, " << rep.violations.size() << " violations\n";
    for (auto& x : rep.violations)
      io.out << "  u=" << x.u.to_string() << " v=" << x.v.to_string() << " w=" << x.w.to_string()
             << " iota=" << x.iota.to_string() << ": " << x.value << "\n";
    for (auto& n : rep.notes) io.out << "  note: " << n << "\n";
  }
  return rep.passed() ? kOk : kViolation;
}

// ---------------------------------------------------------------- reduced-words

int cmd_reduced_words(const Common& c, const std::string& w_text, bool classes, Io io) {
  auto A = load_matrix(c);
  CoxeterGroup G(A);
  GroupElement w = element_arg(G, w_text, "--w", io.err);
  const auto& words = G.reduced_words(w);
  auto cls = commutativity_classes(words, A);
  if (io.json) {
    json ws = json::array(), cs = json::array();
    for (auto& x : words) ws.push_back(x.to_string());
    for (auto& cl : cls) {
      json one = json::array();
      for (auto& x : cl) one.push_back(x.to_string());
      cs.push_back(one);
    }
    io.out << json{{"w", label(w)}, {"length", w.length()}, {"words", ws}, {"classes", cs}}.dump(2) << "\n";
    return kOk;
  }
  if (classes) {
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (auto& x : cls[k]) io.out << "class " << k + 1 << ": " << x.to_string() << "\n";
  } else {
    for (auto& x : words) io.out << x.to_string() << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- rank2

int cmd_rank2(const Common& c, int len, bool symbolic, Io io) {
  if (len < 0) throw Error(ErrorKind::Parse, "--len must be >= 0");
  std::optional<QuasiCartanMatrix> A;
  Rank2Params p;
  if (symbolic) {
    p = Rank2Params::symbolic();
  } else {
    A.emplace(load_matrix(c));
    if (A->rank() != 2) throw Error(ErrorKind::SizeMismatch, "rank2 needs a rank 2 matrix");
    p = Rank2Params::from_matrix(*A);
  }
  auto cell = [&](auto fn, int k, int m) -> std::optional<std::string> {
    try {
      return fn(p, k, m).to_string();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InexactDivision) throw;
      return std::nullopt;
    }
  };
  auto As = chebyshev_table(p, SeqKind::A, len), Bs = chebyshev_table(p, SeqKind::B, len);
  std::vector<std::vector<std::optional<std::string>>> C(len + 1), D(len + 1);
  for (int m = 0; m <= len; ++m)
    for (int k = 0; k <= m; ++k) {
      C[m].push_back(cell(binomial_C, k, m));
      D[m].push_back(cell(binomial_D, k, m));
    }

  if (io.json) {
    auto seq = [](const std::vector<MultiPoly>& s) {
      json a = json::array();
      for (auto& x : s) a.push_back(x.to_string());
      return a;
    };
    auto tri = [](const std::vector<std::vector<std::optional<std::string>>>& t) {
      json a = json::array();
      for (auto& row : t) {
        json r = json::array();
        for (auto& x : row) r.push_back(x ? json(*x) : json(nullptr));
        a.push_back(r);
      }
      return a;
    };
    io.out << json{{"a", p.a.to_string()}, {"b", p.b.to_string()}, {"order", p.order},
                   {"A", seq(As)},         {"B", seq(Bs)},         {"C", tri(C)},
                   {"D", tri(D)}}
                  .dump(2)
           << "\n";
    return kOk;
  }

  io.out << "a = " << p.a.to_string() << ", b = " << p.b.to_string() << "\n";
  std::size_t width = 1;
  for (auto* s : {&As, &Bs})
    for (auto& x : *s) width = std::max(width, x.to_string().size());
  for (auto* t : {&C, &D})
    for (auto& row : *t)
      for (auto& x : row) width = std::max(width, x ? x->size() : 1);
  auto pad = [&](const std::string& s) { return std::string(width - std::min(width, s.size()) + 2, ' ') + s; };
  io.out << "k  ";
  for (int k = 0; k <= len; ++k) io.out << pad(std::to_string(k));
  io.out << "\nA  ";
  for (auto& x : As) io.out << pad(x.to_string());
  io.out << "\nB  ";
  for (auto& x : Bs) io.out << pad(x.to_string());
  io.out << "\n";
  for (auto [name, t] : {std::pair{"C", &C}, std::pair{"D", &D}}) {
    io.out << "\n" << name << "(k,m), row m, column k\n";
    for (int m = 0; m <= len; ++m) {
      io.out << std::to_string(m) << (m < 10 ? "  " : " ");
      for (auto& x : (*t)[m]) io.out << pad(x.value_or("-"));
      io.out << "\n";
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert structure constants for Coxeter groups with quasi-Cartan matrices", "lrc"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  if (const char* t = std::getenv("LRC_THREADS")) c.threads = std::atoi(t);
  app.add_option("--preset", c.preset, "built-in matrix: A2..A5, B2, G2, affine-SL2, H3, H3-rank2-slice, dihedral(a,b,n)");
  app.add_option("--matrix", c.matrix_file, "matrix config JSON file");
  app.add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", c.threads, "worker threads, 0 = auto");
  app.add_flag("--no-validate", c.no_validate, "skip the compatibility check");
  app.add_option("--max-len", c.max_len, "length cap");
  app.add_option("--duan-cap", c.duan_cap, "longest word given to the Duan oracle");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "c^w_{u,v} or p^w_{u,v} by the closed formula");
  compute->add_option("--u", ca.u)->required();
  compute->add_option("--v", ca.v)->required();
  compute->add_option("--w", ca.w);
  compute->add_option("--iota", ca.iota);
  compute->add_flag("--equivariant", ca.equivariant);
  compute->add_flag("--trace", ca.trace);
  compute->add_flag("--count-only", ca.count_only);
  compute->add_option("--filter", ca.filter)->check(CLI::IsMember({"admissible", "all"}));

  TableArgs ta;
  auto* table = app.add_subcommand("table", "multiplication table of sigma_u for two lengths");
  table->add_option("--len", ta.len)->expected(2)->required();
  table->add_flag("--equivariant", ta.equivariant);

  auto* cross = app.add_subcommand("crosscheck", "closed formula against the recursion, Duan and rank-2 oracles");

  DeformArgs da;
  auto* deform = app.add_subcommand("deform", "p^iota_{u,v}(t) for A -> (1+t)A - 2t Id");
  deform->add_option("--u", da.u)->required();
  deform->add_option("--v", da.v)->required();
  deform->add_option("--w", da.w);
  deform->add_option("--iota", da.iota);
  deform->add_option("--at", da.at, "evaluate at this t");
  deform->add_flag("--classes", da.classes, "every word of R(w), grouped by commutativity class");

  std::string kind = "nonneg";
  auto* audit = app.add_subcommand("audit", "exhaustive positivity and invariance audits");
  audit->add_option("--kind", kind)->check(CLI::IsMember({"nonneg", "t-positivity", "commutativity", "root-positivity"}));

  std::string rw;
  bool rw_classes = false;
  auto* rwords = app.add_subcommand("reduced-words", "R(w)");
  rwords->add_option("--w", rw)->required();
  rwords->add_flag("--classes", rw_classes);

  int r2len = 6;
  bool r2sym = false;
  auto* rank2 = app.add_subcommand("rank2", "A_k, B_k, C(k,m), D(k,m) tables");
  rank2->add_option("--len", r2len);
  rank2->add_flag("--symbolic", r2sym, "keep a and b as symbols");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Io io{out, err, c.format == "json"};
  try {
    if (*compute) return cmd_compute(c, ca, io);
    if (*table) return cmd_table(c, ta, io);
    if (*cross) return cmd_crosscheck(c, io);
    if (*deform) return cmd_deform(c, da, io);
    if (*audit) return cmd_audit(c, kind, io);
    if (*rwords) return cmd_reduced_words(c, rw, rw_classes, io);
    if (*rank2) return cmd_rank2(c, r2len, r2sym, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace lrc::cli
