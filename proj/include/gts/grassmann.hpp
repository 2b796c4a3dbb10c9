#ifndef GTS_GRASSMANN_HPP
#define GTS_GRASSMANN_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gts/field.hpp"

namespace gts {

/// Basis element e_{i1}...e_{in} of the Grassmann algebra, stored as the
/// strictly increasing list of generator indices. The empty blade is the unit.
struct Blade {
  std::vector<int> idx;

  Blade() = default;
  explicit Blade(std::vector<int> indices);

  int length() const { return static_cast<int>(idx.size()); }
  bool is_unit() const { return idx.empty(); }
  int max_index() const { return idx.empty() ? 0 : idx.back(); }

  bool operator==(const Blade& o) const { return idx == o.idx; }
  bool operator!=(const Blade& o) const { return idx != o.idx; }
  /// Degree-lexicographic, so the map order of a multivector is canonical.
  bool operator<(const Blade& o) const;

  std::string to_string() const;  // "e1e2e5"; "1" for the unit
};

/// Product of two blades: zero when supports intersect, otherwise the merged
/// blade with sign (-1)^inv, inv = #{(i, j) in a x b : i > j}.
std::optional<std::pair<int, Blade>> blade_product(const Blade& a, const Blade& b);

int canonical_parity(const Blade& b);          // length mod 2
int kstar_parity(const Blade& b, int k);       // |supp ∩ [1,k]| mod 2
std::set<int> support(const Blade& b);
int support_length(const Blade& b);

/// k-star grading parameter: generators e_1..e_k are odd, the rest even.
struct GradingSpec {
  int k = 0;
};

enum class GradingKind { Canonical, KStar };

/// Sparse exact element of the truncated Grassmann algebra E_n: finite map
/// from blades to nonzero field coefficients. Zero coefficients are purged
/// eagerly so structural equality is semantic equality.
class Multivector {
public:
  Multivector(const FieldConfig& cfg, int truncation);

  static Multivector zero(const FieldConfig& cfg, int n) { return Multivector(cfg, n); }
  static Multivector unit(const FieldConfig& cfg, int n);
  static Multivector scalar(const FieldConfig& cfg, int n, const FieldElement& c);
  static Multivector single(const FieldConfig& cfg, int n, const Blade& b, const FieldElement& c);

  const FieldConfig& config() const { return *cfg_; }
  int truncation() const { return n_; }
  const std::map<Blade, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Coefficient of a blade (zero element if absent).
  FieldElement coeff(const Blade& b) const;
  void add_term(const Blade& b, const FieldElement& c);

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(const Multivector& o) const;
  Multivector operator-() const;
  Multivector scale(const FieldElement& c) const;
  Multivector pow(std::uint64_t e) const;

  /// Projection onto the parity component of the chosen grading. The two
  /// components always reconstruct the element.
  Multivector homogeneous_component(int parity, GradingKind kind, int k = 0) const;
  bool is_homogeneous(int parity, GradingKind kind, int k = 0) const;

  /// Coefficient of the empty blade.
  FieldElement scalar_term() const;
  /// Element minus its scalar term (the non-unital part).
  Multivector without_scalar() const;

  bool operator==(const Multivector& o) const;
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  std::string to_string() const;  // "2*e1e2 + 1*e3", "0" when zero

private:
  void check_compatible(const Multivector& o) const;

  const FieldConfig* cfg_;
  int n_;
  std::map<Blade, FieldElement> terms_;
};

}  // namespace gts

#endif
