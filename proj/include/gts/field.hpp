#ifndef GTS_FIELD_HPP
#define GTS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gts {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arithmetic context for GF(p^m), p an odd prime. Configs are interned and
/// immutable; get() always returns the same instance for a given (p, m), so
/// elements can carry a plain pointer and compatibility is a pointer check.
/// The modulus is the lexicographically smallest monic irreducible of degree m
/// over GF(p), coefficients ordered from the constant term up, which makes
/// results reproducible across runs and machines.
class FieldConfig {
public:
  static const FieldConfig& get(int p, int m = 1);

  int p() const { return p_; }
  int m() const { return m_; }
  std::int64_t q() const { return q_; }
  /// Monic modulus, coefficients c0..cm with cm = 1.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldConfig(const FieldConfig&) = delete;
  FieldConfig& operator=(const FieldConfig&) = delete;

private:
  FieldConfig(int p, int m);

  int p_;
  int m_;
  std::int64_t q_;
  std::vector<int> modulus_;
};

/// Element of GF(p^m) in the polynomial representation: m residues mod p,
/// constant term first. Immutable value type.
class FieldElement {
public:
  static FieldElement zero(const FieldConfig& cfg);
  static FieldElement one(const FieldConfig& cfg);
  /// Reduces an arbitrary integer into the prime subfield.
  static FieldElement from_int(const FieldConfig& cfg, std::int64_t v);
  /// coeffs must have exactly m entries; they are reduced mod p.
  static FieldElement from_coeffs(const FieldConfig& cfg, std::vector<std::int64_t> coeffs);

  const FieldConfig& config() const { return *cfg_; }
  const std::vector<int>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// "2" for prime fields, "[2,1]" (meaning 2 + t) for extensions.
  std::string to_string() const;

private:
  FieldElement(const FieldConfig* cfg, std::vector<int> c) : cfg_(cfg), c_(std::move(c)) {}
  void check_same(const FieldElement& o) const;

  const FieldConfig* cfg_;
  std::vector<int> c_;
};

}  // namespace gts

#endif
