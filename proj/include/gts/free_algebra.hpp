#ifndef GTS_FREE_ALGEBRA_HPP
#define GTS_FREE_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "gts/tensor_square.hpp"

namespace gts {

class ParseError : public Error {
public:
  ParseError(const std::string& msg, size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

/// Variable kinds of the free graded algebra, in the global variable order.
/// Bidegrees: V (0,0), W (1,0), X (0,1), Y (1,1).
enum class VarKind { V = 0, W = 1, X = 2, Y = 3 };

char kind_letter(VarKind k);
VarKind kind_from_letter(char c);
Bidegree kind_bidegree(VarKind k);
/// Z2 parity of a variable: second bidegree component.
int kind_z2_parity(VarKind k);

struct GVariable {
  VarKind kind;
  int index;  // >= 1

  bool operator==(const GVariable& o) const { return kind == o.kind && index == o.index; }
  bool operator!=(const GVariable& o) const { return !(*this == o); }
  /// Global order: v1 < v2 < ... < w1 < ... < x1 < ... < y1 < ...
  bool operator<(const GVariable& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    return index < o.index;
  }
  std::string to_string() const { return std::string(1, kind_letter(kind)) + std::to_string(index); }
};

using GWord = std::vector<GVariable>;

Bidegree word_bidegree(const GWord& w);
int word_z2_parity(const GWord& w);
int deg_in_word(const GWord& w, const GVariable& z);
std::map<GVariable, int> multidegree(const GWord& w);

/// Deglex order on words, used only to give polynomials a canonical term order.
struct WordLess {
  bool operator()(const GWord& a, const GWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the free Z2 x Z2 graded algebra on V, W, X, Y variables:
/// finite map from words to nonzero field coefficients.
class GPolynomial {
public:
  explicit GPolynomial(const FieldConfig& cfg) : cfg_(&cfg) {}

  static GPolynomial zero(const FieldConfig& cfg) { return GPolynomial(cfg); }
  static GPolynomial unit(const FieldConfig& cfg);
  static GPolynomial scalar(const FieldConfig& cfg, const FieldElement& c);
  static GPolynomial variable(const FieldConfig& cfg, const GVariable& v);
  static GPolynomial word(const FieldConfig& cfg, const GWord& w,
                          const FieldElement& c);

  const FieldConfig& config() const { return *cfg_; }
  const std::map<GWord, FieldElement, WordLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const GWord& w, const FieldElement& c);

  GPolynomial operator+(const GPolynomial& o) const;
  GPolynomial operator-(const GPolynomial& o) const;
  GPolynomial operator*(const GPolynomial& o) const;
  GPolynomial operator-() const;
  GPolynomial scale(const FieldElement& c) const;
  GPolynomial pow(std::uint64_t e) const;

  /// Words of the given Z2 parity.
  GPolynomial z2_component(int par) const;

  /// Maximal occurrence count of z over the monomials.
  int deg_in(const GVariable& z) const;
  std::vector<GVariable> variables() const;
  bool is_bidegree_homogeneous(Bidegree* out = nullptr) const;

  bool operator==(const GPolynomial& o) const;
  bool operator!=(const GPolynomial& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void check_compatible(const GPolynomial& o) const;

  const FieldConfig* cfg_;
  std::map<GWord, FieldElement, WordLess> terms_;
};

/// [f, g] = fg - (-1)^{|f||g|} gf extended bilinearly over Z2 parity components.
GPolynomial graded_commutator(const GPolynomial& f, const GPolynomial& g);
GPolynomial left_normed_commutator(const std::vector<GPolynomial>& args);

/// Counts of v/w/x/y variables; names the universe Z_{n1,n2,n3,n4}.
struct VariableSet {
  int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
  std::vector<GVariable> variables() const;
  int count(VarKind k) const;
};

/// Graded substitution target: every image must be homogeneous of its
/// variable's bidegree. The context fields make constant polynomials
/// evaluable even with an empty assignment.
struct EvaluationMap {
  const FieldConfig* field = nullptr;
  int nL = 0, nR = 0, k = 0;
  std::map<GVariable, TensorElement> images;

  void validate() const;
  std::string to_string() const;
};

/// Evaluates f under the graded substitution e; an algebra homomorphism.
TensorElement substitute(const GPolynomial& f, const EvaluationMap& e);

/// Grammar: poly := term (('+'|'-') term)*;
///          term := coeff ('*' factor)* | factor ('*' factor)*;
///          factor := var ('^' int)? | '[' poly (',' poly)+ ']' | '(' poly ')';
///          var := ('v'|'w'|'x'|'y') int;
///          coeff := int | '[' int (',' int)* ']'   (extension-field elements).
/// Brackets of arity >= 2 desugar to left-normed graded commutators.
GPolynomial parse_polynomial(const std::string& text, const FieldConfig& cfg);

}  // namespace gts

#endif
