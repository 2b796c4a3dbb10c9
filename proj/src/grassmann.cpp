#include "gts/grassmann.hpp"

#include <algorithm>
#include <sstream>

namespace gts {

Blade::Blade(std::vector<int> indices) : idx(std::move(indices)) {
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1) throw Error("blade: generator indices start at 1");
    if (i > 0 && idx[i] <= idx[i - 1]) throw Error("blade: indices must be strictly increasing");
  }
}

bool Blade::operator<(const Blade& o) const {
  if (idx.size() != o.idx.size()) return idx.size() < o.idx.size();
  return idx < o.idx;
}

std::string Blade::to_string() const {
  if (idx.empty()) return "1";
  std::ostringstream os;
  for (int i : idx) os << 'e' << i;
  return os.str();
}

std::optional<std::pair<int, Blade>> blade_product(const Blade& a, const Blade& b) {
  std::vector<int> merged;
  merged.reserve(a.idx.size() + b.idx.size());
  size_t i = 0, j = 0;
  long inversions = 0;
  while (i < a.idx.size() && j < b.idx.size()) {
    if (a.idx[i] == b.idx[j]) return std::nullopt;
    if (a.idx[i] < b.idx[j]) {
      merged.push_back(a.idx[i++]);
    } else {
      // b.idx[j] jumps over the remaining a-indices, all larger
      inversions += static_cast<long>(a.idx.size() - i);
      merged.push_back(b.idx[j++]);
    }
  }
  while (i < a.idx.size()) merged.push_back(a.idx[i++]);
  while (j < b.idx.size()) merged.push_back(b.idx[j++]);
  Blade r;
  r.idx = std::move(merged);
  return std::make_pair((inversions % 2 == 0) ? 1 : -1, std::move(r));
}

int canonical_parity(const Blade& b) { return b.length() % 2; }

int kstar_parity(const Blade& b, int k) {
  int c = 0;
  for (int i : b.idx) {
    if (i <= k) ++c;
  }
  return c % 2;
}

std::set<int> support(const Blade& b) { return std::set<int>(b.idx.begin(), b.idx.end()); }

int support_length(const Blade& b) { return b.length(); }

Multivector::Multivector(const FieldConfig& cfg, int truncation) : cfg_(&cfg), n_(truncation) {
  if (truncation < 0) throw Error("multivector: negative truncation");
}

Multivector Multivector::unit(const FieldConfig& cfg, int n) {
  return scalar(cfg, n, FieldElement::one(cfg));
}

Multivector Multivector::scalar(const FieldConfig& cfg, int n, const FieldElement& c) {
  Multivector r(cfg, n);
  r.add_term(Blade(), c);
  return r;
}

Multivector Multivector::single(const FieldConfig& cfg, int n, const Blade& b, const FieldElement& c) {
  Multivector r(cfg, n);
  r.add_term(b, c);
  return r;
}

FieldElement Multivector::coeff(const Blade& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? FieldElement::zero(*cfg_) : it->second;
}

void Multivector::add_term(const Blade& b, const FieldElement& c) {
  if (b.max_index() > n_) throw Error("multivector: blade exceeds truncation");
  if (c.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Multivector::check_compatible(const Multivector& o) const {
  if (cfg_ != o.cfg_) throw Error("multivector: mixed field configurations");
  if (n_ != o.n_) throw Error("multivector: mixed truncations");
}

Multivector Multivector::operator+(const Multivector& o) const {
  check_compatible(o);
  Multivector r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, c);
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
  check_compatible(o);
  Multivector r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
  return r;
}

Multivector Multivector::operator-() const {
  Multivector r(*cfg_, n_);
  for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
  return r;
}

Multivector Multivector::scale(const FieldElement& c) const {
  Multivector r(*cfg_, n_);
  if (c.is_zero()) return r;
  for (const auto& [b, x] : terms_) r.add_term(b, x * c);
  return r;
}

Multivector Multivector::operator*(const Multivector& o) const {
  check_compatible(o);
  Multivector r(*cfg_, n_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      auto prod = blade_product(a, b);
      if (!prod) continue;
      FieldElement c = ca * cb;
      if (prod->first < 0) c = -c;
      r.add_term(prod->second, c);
    }
  }
  return r;
}

Multivector Multivector::pow(std::uint64_t e) const {
  Multivector acc = unit(*cfg_, n_);
  Multivector base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Multivector Multivector::homogeneous_component(int parity, GradingKind kind, int k) const {
  Multivector r(*cfg_, n_);
  for (const auto& [b, c] : terms_) {
    int par = (kind == GradingKind::Canonical) ? canonical_parity(b) : kstar_parity(b, k);
    if (par == (parity & 1)) r.terms_.emplace(b, c);
  }
  return r;
}

bool Multivector::is_homogeneous(int parity, GradingKind kind, int k) const {
  return homogeneous_component(parity ^ 1, kind, k).is_zero();
}

FieldElement Multivector::scalar_term() const { return coeff(Blade()); }

Multivector Multivector::without_scalar() const {
  Multivector r = *this;
  r.terms_.erase(Blade());
  return r;
}

bool Multivector::operator==(const Multivector& o) const {
  return cfg_ == o.cfg_ && n_ == o.n_ && terms_ == o.terms_;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    os << c.to_string() << '*' << b.to_string();
    first = false;
  }
  return os.str();
}

}  // namespace gts
