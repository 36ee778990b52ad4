#include "lrc/coxeter/cartan.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc {

QuasiCartanMatrix::QuasiCartanMatrix(const Ring* ring, std::vector<std::vector<MultiPoly>> entries,
                                     std::vector<std::vector<int>> orders, bool validate, std::string id)
    : ring_(ring), n_(ring->rank()), entries_(std::move(entries)), orders_(std::move(orders)), id_(std::move(id)) {
  if (int(entries_.size()) != n_ || int(orders_.size()) != n_)
    throw Error(ErrorKind::InvalidMatrix, "matrix and orders must be " + std::to_string(n_) + "x" + std::to_string(n_));
  for (int i = 0; i < n_; ++i) {
    if (int(entries_[i].size()) != n_ || int(orders_[i].size()) != n_)
      throw Error(ErrorKind::InvalidMatrix, "matrix rows must have length " + std::to_string(n_));
    for (auto& e : entries_[i]) {
      if (e.ring() == nullptr) e = MultiPoly(ring_);
      if (e.ring() != ring_) throw Error(ErrorKind::MixedRing, "matrix entry over another ring");
      if (!e.alpha_free()) throw Error(ErrorKind::InvalidMatrix, "matrix entries may not involve alpha variables");
      if (!e.is_constant()) numeric_ = false;
    }
  }
  if (validate) this->validate();
  images_.resize(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      images_[i - 1].push_back(MultiPoly::alpha(ring_, j) - a(i, j) * MultiPoly::alpha(ring_, i));
}

bool compatible_product(const Scalar& p, int n) {
  switch (n) {
    case 2: return p.is_zero();
    case 3: return p == Scalar::from_int(1);
    case 4: return p == Scalar::from_int(2);
    case 6: return p == Scalar::from_int(3);
    case 5: {
      // p = rho + 1 = rho^2: the larger root of x^2 - 3x + 1
      Scalar q = p * p - Scalar::from_int(3) * p + Scalar::from_int(1);
      return q.is_zero() && (p - Scalar::from_int(2)).sign() > 0;
    }
    default:
      throw Error(ErrorKind::UnsupportedOrder,
                  "no compatibility table value for n_ij = " + std::to_string(n) + " (supported: 2..6, 0 for infinity)");
  }
}

void QuasiCartanMatrix::validate() const {
  const MultiPoly two = MultiPoly::constant(ring_, 2);
  for (int i = 1; i <= n_; ++i) {
    if (!(a(i, i) == two)) throw Error(ErrorKind::InvalidMatrix, "a_ii must be 2 (i = " + std::to_string(i) + ")");
    if (order(i, i) != 1) throw Error(ErrorKind::InvalidMatrix, "n_ii must be 1");
    for (int j = 1; j <= n_; ++j) {
      if (i == j) continue;
      std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      int n = order(i, j);
      if (n != order(j, i)) throw Error(ErrorKind::InvalidMatrix, "orders not symmetric at " + ij);
      if (n == 1 || n < 0) throw Error(ErrorKind::InvalidMatrix, "n_ij must be >= 2 or 0 at " + ij);
      if (a(i, j).is_zero() != a(j, i).is_zero())
        throw Error(ErrorKind::InvalidMatrix, "a_ij = 0 must imply a_ji = 0 at " + ij);
      if (n == 0) continue;
      MultiPoly prod = a(i, j) * a(j, i);
      if (!prod.is_constant() || !compatible_product(prod.as_scalar(), n))
        throw Error(ErrorKind::InvalidMatrix, "a_ij a_ji = " + prod.to_string() + " incompatible with n_ij = " +
                                                  std::to_string(n) + " at " + ij);
      if (n % 2 == 1 && !(a(i, j) == a(j, i)))
        throw Error(ErrorKind::InvalidMatrix, "odd n_ij requires a_ij = a_ji at " + ij);
    }
  }
}

QuasiCartanMatrix QuasiCartanMatrix::deformed() const {
  auto e = entries_;
  MultiPoly f = MultiPoly::constant(ring_, 1) + MultiPoly::t(ring_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) e[i][j] = e[i][j] * f;
  return QuasiCartanMatrix(ring_, std::move(e), orders_, false, id_ + "(t)");
}

QuasiCartanMatrix QuasiCartanMatrix::restricted(const std::vector<int>& idx, std::string id) const {
  const Ring* r = Ring::get(field(), int(idx.size()));
  std::vector<std::vector<MultiPoly>> e(idx.size());
  std::vector<std::vector<int>> o(idx.size());
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = 0; y < idx.size(); ++y) {
      // entries are alpha-free, so re-parse them in the smaller ring
      e[x].push_back(MultiPoly::parse(r, a(idx[x], idx[y]).to_string()));
      o[x].push_back(order(idx[x], idx[y]));
    }
  return QuasiCartanMatrix(r, std::move(e), std::move(o), false, id.empty() ? id_ + "|sub" : id);
}

namespace {

QuasiCartanMatrix from_text(const NumberField* f, const std::vector<std::vector<std::string>>& m,
                            const std::vector<std::vector<int>>& orders, bool validate, std::string id) {
  const Ring* r = Ring::get(f, int(m.size()));
  std::vector<std::vector<MultiPoly>> e;
  for (const auto& row : m) {
    e.emplace_back();
    for (const auto& s : row) e.back().push_back(MultiPoly::parse(r, s));
  }
  return QuasiCartanMatrix(r, std::move(e), orders, validate, std::move(id));
}

QuasiCartanMatrix type_a(int n, bool validate) {
  std::vector<std::vector<std::string>> m(n, std::vector<std::string>(n, "0"));
  std::vector<std::vector<int>> o(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    m[i][i] = "2";
    o[i][i] = 1;
    if (i + 1 < n) {
      m[i][i + 1] = m[i + 1][i] = "-1";
      o[i][i + 1] = o[i + 1][i] = 3;
    }
  }
  return from_text(NumberField::rationals(), m, o, validate, "A" + std::to_string(n));
}

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"A2", "A3", "A4", "A5", "B2", "G2", "affine-SL2", "H3", "H3-rank2-slice", "dihedral(a,b,n)"};
}

QuasiCartanMatrix preset(std::string_view name, bool validate) {
  const auto* Q = NumberField::rationals();
  if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '9') return type_a(name[1] - '0', validate);
  if (name == "B2") return from_text(Q, {{"2", "-1"}, {"-2", "2"}}, {{1, 4}, {4, 1}}, validate, "B2");
  if (name == "G2") return from_text(Q, {{"2", "-1"}, {"-3", "2"}}, {{1, 6}, {6, 1}}, validate, "G2");
  if (name == "affine-SL2")
    return from_text(Q, {{"2", "-2"}, {"-2", "2"}}, {{1, 0}, {0, 1}}, validate, "affine-SL2");
  if (name == "H3")
    return from_text(NumberField::golden(), {{"2", "-rho", "0"}, {"-rho", "2", "-1"}, {"0", "-1", "2"}},
                     {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}, validate, "H3");
  if (name == "H3-rank2-slice")
    return from_text(NumberField::golden(), {{"2", "-rho"}, {"-rho", "2"}}, {{1, 5}, {5, 1}}, validate,
                     "H3-rank2-slice");
  if (name.starts_with("dihedral(") && name.ends_with(")")) {
    std::string_view body = name.substr(9, name.size() - 10);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= body.size(); ++k)
      if (k == body.size() || body[k] == ',') {
        parts.push_back(trim(body.substr(start, k - start)));
        start = k + 1;
      }
    if (parts.size() != 3) throw Error(ErrorKind::Parse, "dihedral preset needs (a,b,n)");
    int n = 0;
    if (parts[2] != "inf" && parts[2] != "∞") {
      try {
        n = std::stoi(parts[2]);
      } catch (...) {
        throw Error(ErrorKind::Parse, "bad dihedral order '" + parts[2] + "'");
      }
    }
    const auto* f = (parts[0] + parts[1]).find("rho") != std::string::npos ? NumberField::golden() : Q;
    return from_text(f, {{"2", "-(" + parts[0] + ")"}, {"-(" + parts[1] + ")", "2"}}, {{1, n}, {n, 1}}, validate,
                     std::string(name));
  }
  throw Error(ErrorKind::Parse, "unknown preset '" + std::string(name) + "'");
}

QuasiCartanMatrix matrix_from_json_text(std::string_view text, bool validate, std::string id) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("matrix config: ") + e.what());
  }
  try {
    for (auto& [k, v] : doc.items())
      if (k != "rank" && k != "generator" && k != "matrix" && k != "orders" && k != "validate")
        throw Error(ErrorKind::Parse, "matrix config: unknown field '" + k + "'");
    int rank = doc.at("rank").get<int>();
    const NumberField* f = NumberField::rationals();
    if (doc.contains("generator")) {
      const auto& g = doc["generator"];
      for (auto& [k, v] : g.items())
        if (k != "name" && k != "min_poly" && k != "root_interval")
          throw Error(ErrorKind::Parse, "matrix config: unknown generator field '" + k + "'");
      AlgebraicSpec spec;
      spec.name = g.at("name").get<std::string>();
      spec.min_poly = g.at("min_poly").get<std::vector<long>>();
      auto iv = g.at("root_interval");
      if (!iv.is_array() || iv.size() != 2) throw Error(ErrorKind::Parse, "root_interval must be [lo, hi]");
      auto rat = [](const json& x) {
        return x.is_string() ? Rational(x.get<std::string>()) : Rational(x.get<long>());
      };
      spec.root_lo = rat(iv[0]);
      spec.root_hi = rat(iv[1]);
      spec.root_lo.canonicalize();
      spec.root_hi.canonicalize();
      f = NumberField::intern(spec);
    }
    if (doc.contains("validate")) validate = validate && doc["validate"].get<bool>();
    auto m = doc.at("matrix").get<std::vector<std::vector<json>>>();
    std::vector<std::vector<std::string>> ms;
    for (auto& row : m) {
      ms.emplace_back();
      for (auto& x : row) ms.back().push_back(x.is_string() ? x.get<std::string>() : x.dump());
    }
    auto orders = doc.at("orders").get<std::vector<std::vector<int>>>();
    if (int(ms.size()) != rank) throw Error(ErrorKind::InvalidMatrix, "matrix size differs from rank");
    return from_text(f, ms, orders, validate, id.empty() ? "custom" : id);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("matrix config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::Parse, std::string("matrix config: ") + e.what());
  }
}

QuasiCartanMatrix matrix_from_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return matrix_from_json_text(ss.str(), validate, path);
}

}  // namespace lrc
