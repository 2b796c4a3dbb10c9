#include "gts/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gts {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), constant term first, possibly with leading zeros.
using Poly = std::vector<int>;

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mod(Poly a, const Poly& mod, int p) {
  const int dm = degree(mod);
  for (int da = degree(a); da >= dm; da = degree(a)) {
    // a -= lead(a)/lead(mod) * x^(da-dm) * mod ; mod is monic here
    const int c = a[da];
    for (int i = 0; i <= dm; ++i) {
      int& t = a[da - dm + i];
      t = ((t - c * mod[i]) % p + p) % p;
    }
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

bool divides(const Poly& d, const Poly& a, int p) {
  Poly r = poly_mod(a, d, p);
  return degree(r) < 0;
}

// Enumerates monic polynomials of the given degree in lexicographic order of
// (c0, c1, ..., c_{deg-1}).
bool next_monic(Poly& c, int p) {
  for (int i = 0; i + 1 < static_cast<int>(c.size()); ++i) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

bool is_irreducible(const Poly& f, int p) {
  const int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int dd = 1; dd <= d / 2; ++dd) {
    Poly g(dd + 1, 0);
    g[dd] = 1;
    do {
      if (divides(g, f, p)) return false;
    } while (next_monic(g, p));
  }
  return true;
}

}  // namespace

FieldConfig::FieldConfig(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p) || p == 2) throw Error("field: p must be an odd prime, got " + std::to_string(p));
  if (m < 1) throw Error("field: extension degree must be >= 1, got " + std::to_string(m));
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= p;
    if (q_ > (1 << 20)) throw Error("field: q = p^m too large for this library");
  }
  Poly f(m + 1, 0);
  f[m] = 1;
  while (!is_irreducible(f, p)) {
    if (!next_monic(f, p)) throw Error("field: no irreducible modulus found");  // unreachable
  }
  modulus_ = f;
}

const FieldConfig& FieldConfig::get(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldConfig>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<FieldConfig>(new FieldConfig(p, m))).first;
  return *it->second;
}

FieldElement FieldElement::zero(const FieldConfig& cfg) {
  return FieldElement(&cfg, std::vector<int>(cfg.m(), 0));
}

FieldElement FieldElement::one(const FieldConfig& cfg) {
  std::vector<int> c(cfg.m(), 0);
  c[0] = 1;
  return FieldElement(&cfg, std::move(c));
}

FieldElement FieldElement::from_int(const FieldConfig& cfg, std::int64_t v) {
  std::vector<int> c(cfg.m(), 0);
  c[0] = static_cast<int>(((v % cfg.p()) + cfg.p()) % cfg.p());
  return FieldElement(&cfg, std::move(c));
}

FieldElement FieldElement::from_coeffs(const FieldConfig& cfg, std::vector<std::int64_t> coeffs) {
  if (static_cast<int>(coeffs.size()) != cfg.m())
    throw Error("field: coefficient list must have length m = " + std::to_string(cfg.m()));
  std::vector<int> c(cfg.m());
  for (int i = 0; i < cfg.m(); ++i)
    c[i] = static_cast<int>(((coeffs[i] % cfg.p()) + cfg.p()) % cfg.p());
  return FieldElement(&cfg, std::move(c));
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](int v) { return v == 0; });
}

void FieldElement::check_same(const FieldElement& o) const {
  if (cfg_ != o.cfg_) throw Error("field: elements from different field configurations");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  std::vector<int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + o.c_[i]) % cfg_->p();
  return FieldElement(cfg_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  std::vector<int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = ((c_[i] - o.c_[i]) % cfg_->p() + cfg_->p()) % cfg_->p();
  return FieldElement(cfg_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<int> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = (cfg_->p() - c_[i]) % cfg_->p();
  return FieldElement(cfg_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  Poly prod = poly_mul(c_, o.c_, cfg_->p());
  prod = poly_mod(std::move(prod), cfg_->modulus(), cfg_->p());
  prod.resize(cfg_->m(), 0);
  return FieldElement(cfg_, std::move(prod));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement acc = one(*cfg_);
  FieldElement base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("field: inverse of zero");
  // q <= 2^20, so a^(q-2) is cheap and avoids a polynomial gcd.
  return pow(static_cast<std::uint64_t>(cfg_->q() - 2));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return cfg_ == o.cfg_ && c_ == o.c_;
}

std::string FieldElement::to_string() const {
  if (cfg_->m() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ']';
  return os.str();
}

}  // namespace gts
