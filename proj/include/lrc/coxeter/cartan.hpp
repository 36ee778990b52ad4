#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lrc/exact/poly.hpp"

namespace lrc {

// Quasi-Cartan matrix a_ij with Coxeter orders n_ij (0 = infinity).
// Entries are alpha-free polynomials: numbers in the field, or expressions
// in t, a, b for deformed and symbolic rank-2 work.
class QuasiCartanMatrix {
 public:
  QuasiCartanMatrix(const Ring* ring, std::vector<std::vector<MultiPoly>> entries,
                    std::vector<std::vector<int>> orders, bool validate = true, std::string id = "");

  int rank() const { return n_; }
  const Ring* ring() const { return ring_; }
  const NumberField* field() const { return ring_->field(); }
  const std::string& id() const { return id_; }
  // 1-based
  const MultiPoly& a(int i, int j) const { return entries_[i - 1][j - 1]; }
  int order(int i, int j) const { return orders_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& orders() const { return orders_; }
  bool numeric() const { return numeric_; }

  // Throws Error{InvalidMatrix | UnsupportedOrder} on failure.
  void validate() const;
  // off-diagonal a_ij -> (1 + t) a_ij
  QuasiCartanMatrix deformed() const;
  // principal submatrix on the given 1-based indices, renumbered 1..k
  QuasiCartanMatrix restricted(const std::vector<int>& indices, std::string id = "") const;

  // Images of alpha_1..alpha_n under s_i.
  const std::vector<MultiPoly>& reflection_images(int i) const { return images_[i - 1]; }

 private:
  const Ring* ring_;
  int n_;
  std::vector<std::vector<MultiPoly>> entries_;
  std::vector<std::vector<int>> orders_;
  std::string id_;
  bool numeric_ = true;
  std::vector<std::vector<MultiPoly>> images_;
};

// "A2".."A5", "B2", "G2", "affine-SL2", "H3", "H3-rank2-slice", "dihedral(a,b,n)"
QuasiCartanMatrix preset(std::string_view name, bool validate = true);
std::vector<std::string> preset_names();
// Matrix config JSON document (see README).
QuasiCartanMatrix matrix_from_json_text(std::string_view text, bool validate = true, std::string id = "");
QuasiCartanMatrix matrix_from_file(const std::string& path, bool validate = true);

// a_ij a_ji value required by compatibility for finite n, as a polynomial
// constant; throws UnsupportedOrder outside the table {2,3,4,5,6}.
bool compatible_product(const Scalar& product, int n);

}  // namespace lrc
