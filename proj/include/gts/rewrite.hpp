#ifndef GTS_REWRITE_HPP
#define GTS_REWRITE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gts/free_algebra.hpp"

namespace gts {

/// Commutative monomial in V-variables: (index, exponent) pairs, sorted by
/// index, exponents > 0.
using PMonomial = std::vector<std::pair<int, int>>;

/// Polynomial in V-variables in which every variable occurs in each monomial
/// with multiplicity divisible by p and below pq.
class PPolynomial {
public:
  explicit PPolynomial(const FieldConfig& cfg) : cfg_(&cfg) {}

  static PPolynomial zero(const FieldConfig& cfg) { return PPolynomial(cfg); }
  static PPolynomial unit(const FieldConfig& cfg);
  static PPolynomial monomial(const FieldConfig& cfg, const PMonomial& m, const FieldElement& c);

  const FieldConfig& config() const { return *cfg_; }
  const std::map<PMonomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PMonomial& m, const FieldElement& c);

  PPolynomial operator+(const PPolynomial& o) const;
  PPolynomial operator-(const PPolynomial& o) const;
  PPolynomial scale(const FieldElement& c) const;

  /// Checks the exponent conditions (every exponent = 0 mod p and < pq).
  bool is_valid_p_polynomial() const;
  std::vector<int> variable_indices() const;

  /// Substitutes scalars for the variables; absent indices default to zero.
  FieldElement evaluate(const std::map<int, FieldElement>& scalars) const;

  GPolynomial to_gpolynomial() const;
  bool operator==(const PPolynomial& o) const { return cfg_ == o.cfg_ && terms_ == o.terms_; }
  bool operator!=(const PPolynomial& o) const { return !(*this == o); }
  std::string to_string() const;

private:
  const FieldConfig* cfg_;
  std::map<PMonomial, FieldElement> terms_;
};

/// Structured straightened monomial: a sorted power product (beg) times a
/// chain of two-entry brackets whose entries strictly increase across the
/// whole chain (end).
struct SseMonomial {
  std::map<int, int> v, w, x, y;   // index -> exponent >= 1
  std::vector<GVariable> brackets;  // flat entry list, even length, strictly increasing

  bool is_empty() const { return v.empty() && w.empty() && x.empty() && y.empty() && brackets.empty(); }
  int deg() const;
  int deg_of(const GVariable& z) const;          // beg exponent + bracket occurrence
  int beg_exponent(const GVariable& z) const;
  bool in_brackets(const GVariable& z) const;
  int total_wy_degree() const;                   // beg + bracket occurrences of W and Y
  std::map<int, int>& exponents(VarKind k);
  const std::map<int, int>& exponents(VarKind k) const;

  GWord beg_word() const;
  std::vector<GVariable> variables() const;

  /// Empty when the monomial satisfies the structured-normal-form conditions
  /// for the given (p, k); otherwise a description of the first violation.
  std::optional<std::string> sse_violation(int p, int k) const;

  GPolynomial expand(const FieldConfig& cfg) const;

  bool operator==(const SseMonomial& o) const;
  bool operator!=(const SseMonomial& o) const { return !(*this == o); }
  /// Structural order for containers; not the SSE order.
  bool operator<(const SseMonomial& o) const;

  std::string to_string() const;  // "v1^2*w1*[x1,y1]"; "1" when empty
};

/// Parses an SSE monomial in the surface syntax structurally (brackets stay
/// brackets instead of desugaring to commutator polynomials).
SseMonomial parse_sse_monomial(const std::string& text);

/// f0 + sum f_i u_i with p-polynomial coefficients and pairwise distinct
/// structured monomials, sorted descending in the SSE order.
struct NormalForm {
  PPolynomial f0;
  std::vector<std::pair<PPolynomial, SseMonomial>> summands;

  explicit NormalForm(const FieldConfig& cfg) : f0(PPolynomial::zero(cfg)) {}

  bool is_zero() const { return f0.is_zero() && summands.empty(); }
  GPolynomial expand(const FieldConfig& cfg) const;
  std::string to_string() const;
  bool operator==(const NormalForm& o) const { return f0 == o.f0 && summands == o.summands; }
};

/// Straightened term before the exponent caps: sorted letters times a bracket
/// chain with strictly increasing entries.
struct StructuredTerm {
  FieldElement coeff;
  GWord letters;
  std::vector<GVariable> brackets;
};

struct RewriteBudgetExceeded : Error {
  explicit RewriteBudgetExceeded(const std::string& stuck)
      : Error("rewrite: step budget exceeded; stuck term: " + stuck) {}
};

/// Rewrites f into a linear combination of sorted-letter terms times bracket
/// chains with strictly increasing entries, using the letter swap
/// z_a z_b = (-1)^{|a||b|} z_b z_a + [z_a, z_b], bracket centrality, bracket
/// supersymmetry, the cross-bracket middle swap and the [z,z] contraction.
std::vector<StructuredTerm> straighten(const GPolynomial& f, long max_steps = 1'000'000);
GPolynomial expand_structured(const std::vector<StructuredTerm>& terms, const FieldConfig& cfg);

/// Splits a pure V-power exponent vector into (p-part monomial, residuals).
/// Each exponent e = p*floor(e/p) + (e mod p); the p-part is reduced by the
/// relation v^{pq} = v^p until it lies below pq.
std::pair<PMonomial, std::map<int, int>> extract_p_part(const std::map<int, int>& v_exponents,
                                                        int p, std::int64_t q);

struct ReduceConfig {
  int k = 2;
  long max_steps = 1'000'000;
};

NormalForm sse_reduce(const GPolynomial& f, const ReduceConfig& rc);

/// Infinite zero-padded extension comparisons on exponent tuples.
bool equiv01(const std::vector<int>& a, const std::vector<int>& b);
/// a < a' when, at the first position where the parities disagree, a's entry
/// is odd. Requires equiv01; total on distinct equivalent tuples.
bool less01(const std::vector<int>& a, const std::vector<int>& b);

enum class Ordering { Less, Equal, Greater };

struct CompareStats {
  long fallback_fires = 0;
};

/// The five-case SSE order: total degree, beg_VW, beg_XY (inequivalent
/// exponent tuples), the parity comparison on equivalent tuples, end.
/// Exponent tuples are aligned by variable over the union of both monomials.
Ordering sse_compare(const SseMonomial& a, const SseMonomial& b, CompareStats* stats = nullptr);

/// Greatest summand monomial of a normal form; requires at least one summand.
SseMonomial leading_term(const NormalForm& nf);

struct EnumerationLimitExceeded : Error {
  explicit EnumerationLimitExceeded(long limit)
      : Error("enumeration: more than " + std::to_string(limit) + " monomials") {}
};

/// All structured monomials over the variable universe satisfying the
/// normal-form conditions for (p, k), ascending in the SSE order.
std::vector<SseMonomial> sse_enumerate(const VariableSet& vs, int p, int k,
                                       int degree_bound = -1, long limit = 2'000'000);

/// q^m times the number of structured monomials over Z_{m,m,m,m}: the size of
/// the spanning set {p-monomial * structured monomial} of the relatively free
/// algebra in m variables of each kind. Finite, which is the dimension-growth
/// evidence the CLI exposes.
std::int64_t sse_dimension(int m, int p, std::int64_t q, int k, long limit = 2'000'000);

/// A named rewrite rule as a pair of polynomials with equal evaluations.
struct NamedRule {
  std::string name;
  GPolynomial lhs;
  GPolynomial rhs;
};

/// The rule set the reducer relies on, instantiated over variable kinds, for
/// sampled-evaluation certification in the test suites.
std::vector<NamedRule> reduction_rules(const FieldConfig& cfg, int k);

}  // namespace gts

#endif
