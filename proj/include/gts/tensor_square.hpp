#ifndef GTS_TENSOR_SQUARE_HPP
#define GTS_TENSOR_SQUARE_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gts/grassmann.hpp"

namespace gts {

/// Z2 x Z2 degree. For a tensor blade a (x) b the components are the k-star
/// parity of a and the canonical parity of b.
struct Bidegree {
  int e1 = 0;
  int e2 = 0;
  bool operator==(const Bidegree& o) const { return e1 == o.e1 && e2 == o.e2; }
  bool operator!=(const Bidegree& o) const { return !(*this == o); }
  Bidegree operator+(const Bidegree& o) const { return {(e1 + o.e1) % 2, (e2 + o.e2) % 2}; }
  std::string to_string() const {
    return "(" + std::to_string(e1) + "," + std::to_string(e2) + ")";
  }
};

/// Basis element a (x) b of the tensor square.
struct TensorBlade {
  Blade left;
  Blade right;

  int support_length() const { return left.length() + right.length(); }

  bool operator==(const TensorBlade& o) const { return left == o.left && right == o.right; }
  bool operator!=(const TensorBlade& o) const { return !(*this == o); }
  bool operator<(const TensorBlade& o) const;

  std::string to_string() const { return left.to_string() + "|" + right.to_string(); }
};

Bidegree bidegree_of(const TensorBlade& tb, int k);
/// The Z2 parity the supercommutator uses: canonical parity of the right factor.
int z2_parity(const TensorBlade& tb);

/// Sidewise support union of a tensor element. Equality of pairs refines the
/// merged-set reading and is what the completeness check compares.
struct SupportUnion {
  std::set<int> left;
  std::set<int> right;
  bool operator==(const SupportUnion& o) const { return left == o.left && right == o.right; }
  bool operator!=(const SupportUnion& o) const { return !(*this == o); }
};

/// Sparse exact element of E_{k*,nL} (x) E_{nR}. Carries the grading
/// parameter k so bidegrees and parities are intrinsic.
class TensorElement {
public:
  TensorElement(const FieldConfig& cfg, int nL, int nR, int k);

  static TensorElement zero(const FieldConfig& cfg, int nL, int nR, int k);
  static TensorElement unit(const FieldConfig& cfg, int nL, int nR, int k);
  static TensorElement single(const FieldConfig& cfg, int nL, int nR, int k,
                              const TensorBlade& b, const FieldElement& c);
  /// Bilinear a (x) b from two multivectors.
  static TensorElement tensor(const Multivector& a, const Multivector& b, int k);

  const FieldConfig& config() const { return *cfg_; }
  int left_truncation() const { return nL_; }
  int right_truncation() const { return nR_; }
  int k() const { return k_; }
  const std::map<TensorBlade, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  FieldElement coeff(const TensorBlade& b) const;
  void add_term(const TensorBlade& b, const FieldElement& c);

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  /// (a (x) b)(c (x) d) = ac (x) bd, no extra sign.
  TensorElement operator*(const TensorElement& o) const;
  TensorElement operator-() const;
  TensorElement scale(const FieldElement& c) const;
  TensorElement pow(std::uint64_t e) const;

  /// Terms whose Z2 parity (right-factor canonical parity) equals par.
  TensorElement z2_component(int par) const;
  bool is_z2_homogeneous(int par) const;
  bool is_homogeneous(const Bidegree& d) const;

  bool operator==(const TensorElement& o) const;
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

  std::string to_string() const;  // "2*e1e2|e3 + 1*1|1", "0" when zero

private:
  void check_compatible(const TensorElement& o) const;

  const FieldConfig* cfg_;
  int nL_, nR_, k_;
  std::map<TensorBlade, FieldElement> terms_;
};

/// [a, b] = ab - (-1)^{|a||b|} ba on Z2-homogeneous arguments, extended
/// bilinearly over the parity components otherwise.
TensorElement supercommutator(const TensorElement& a, const TensorElement& b);
/// Left-normed [[a1,...,a_{n-1}], a_n].
TensorElement left_normed_supercommutator(const std::vector<TensorElement>& args);

SupportUnion supp_union(const TensorElement& c);
/// Maximal support length among terms; c must be nonzero.
int max_support_length(const TensorElement& c);
/// Blades attaining the maximal support length; c must be nonzero.
std::vector<TensorBlade> max_index_set(const TensorElement& c);
/// Sub-sum of the maximal-support-length terms; c must be nonzero.
TensorElement g_sum(const TensorElement& c);

}  // namespace gts

#endif
