#ifndef GTS_WITNESS_HPP
#define GTS_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gts/rewrite.hpp"

namespace gts {

/// Parameters of the ten evaluation shapes. j offsets the high left indices
/// (those above k), n offsets the right indices, low is the base of the
/// [1,k] block consumed by the W/Y shapes (0 reproduces the textbook
/// displays), t the multiplicity. alpha is the unit coefficient of shapes
/// 9 and 10.
struct TypeDescriptor {
  int type_id = 1;  // 1..10
  int j = 0;
  int n = 0;
  int t = 1;
  int k = 0;
  int low = 0;
  std::optional<FieldElement> alpha;

  VarKind kind() const;
  /// Left indices above k, low indices inside [1,k], right indices consumed.
  int high_consumption() const;
  int low_consumption() const;
  int right_consumption() const;

  std::string to_string() const;
};

/// Constructs the shape's value at the given truncations.
TensorElement build_type(const TypeDescriptor& d, const FieldConfig& cfg, int nL, int nR);

struct CalculusResult {
  std::string item;
  bool pass = false;
  TensorElement lhs;
  TensorElement rhs;
  std::string note;
};

/// Checks one of the closed-form power/bracket calculations ("1.1" .. "10.1")
/// by computing both sides exactly. Items 9.1 and 10.1 additionally require
/// t <= p-1 and t <= p respectively so the leading coefficient is a unit.
CalculusResult verify_calculus(const std::string& item, int j, int n, int t, int k,
                               const FieldConfig& cfg);
const std::vector<std::string>& calculus_items();

/// Shape assignment for every variable of a monomial, with pairwise disjoint
/// index windows.
struct SuitableAssignment {
  const FieldConfig* field = nullptr;
  int k = 0;
  int nL = 0, nR = 0;
  std::vector<std::pair<GVariable, TypeDescriptor>> types;

  EvaluationMap evaluation_map() const;
  std::string to_string() const;
};

/// Chooses shapes per the (kind, bracket occurrence, parity of t) rules and
/// allocates disjoint windows, processing variables in the global order.
/// Requires total W∪Y degree <= k, or the [1,k] low blocks cannot fit.
SuitableAssignment build_suitable(const SseMonomial& u, int k, const FieldConfig& cfg);

struct ApplyOutcome {
  bool ok = false;
  FieldElement alpha;
  TensorBlade blade;
  bool complete = false;
  std::string detail;
};

/// Evaluates u under the assignment and checks the value is a nonzero scalar
/// times a single basis blade whose support is the union of all assigned
/// supports. A failure here would falsify the construction at the given
/// parameters, so the outcome carries both facts separately.
ApplyOutcome apply_suitable(const SseMonomial& u, const SuitableAssignment& s);

/// psi: W/X/Y variables keep their shape value, V variables get
/// alpha_v * 1(x)1 added. Missing scalars default to zero.
EvaluationMap associated_hom(const SuitableAssignment& s,
                             const std::map<int, FieldElement>& v_scalars);

/// Lexicographically first tuple (over the sorted variable indices of f) with
/// a nonzero scalar evaluation; nullopt when f vanishes on all of F^n.
std::optional<std::vector<FieldElement>> ppoly_scalar_witness(const PPolynomial& f,
                                                              long budget = 1'000'000);

struct GsumOutcome {
  bool ok = false;
  FieldElement scalar_value;   // f at the witness tuple
  FieldElement beta;
  TensorBlade blade;
  bool complete = false;
  std::string detail;
};

/// Finds a scalar witness for f, builds the suitable assignment and its
/// associated homomorphism, and checks g-sum(psi(u)) is a nonzero multiple of
/// one complete blade.
GsumOutcome gsum_check(const SseMonomial& u, const PPolynomial& f, int k);

struct SeparationOutcome {
  bool pass = false;
  std::string case_label;
  bool psi_zero = false;
  int value_max_length = 0;  // meaningful when !psi_zero
  int target_length = 0;     // l(a) for phi(u1) = alpha a
  std::string detail;
};

/// Evaluates u_i under the associated homomorphism built for u1 (all unit
/// scalars) and checks every summand is strictly shorter than phi(u1)'s
/// blade, or the value is zero. Requires u_i < u1 in the SSE order and
/// var(u_i) contained in var(u1).
SeparationOutcome separation_check(const SseMonomial& u1, const SseMonomial& ui,
                                   const SuitableAssignment& s);

}  // namespace gts

#endif
