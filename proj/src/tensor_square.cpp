#include "gts/tensor_square.hpp"

#include <sstream>

namespace gts {

bool TensorBlade::operator<(const TensorBlade& o) const {
  const int sl = support_length(), so = o.support_length();
  if (sl != so) return sl < so;
  if (left != o.left) return left < o.left;
  return right < o.right;
}

Bidegree bidegree_of(const TensorBlade& tb, int k) {
  return {kstar_parity(tb.left, k), canonical_parity(tb.right)};
}

int z2_parity(const TensorBlade& tb) { return canonical_parity(tb.right); }

TensorElement::TensorElement(const FieldConfig& cfg, int nL, int nR, int k)
    : cfg_(&cfg), nL_(nL), nR_(nR), k_(k) {
  if (nL < 0 || nR < 0) throw Error("tensor: negative truncation");
  if (k < 0 || k > nL) throw Error("tensor: grading parameter k must satisfy 0 <= k <= nL");
}

TensorElement TensorElement::zero(const FieldConfig& cfg, int nL, int nR, int k) {
  return TensorElement(cfg, nL, nR, k);
}

TensorElement TensorElement::unit(const FieldConfig& cfg, int nL, int nR, int k) {
  TensorElement r(cfg, nL, nR, k);
  r.add_term(TensorBlade{}, FieldElement::one(cfg));
  return r;
}

TensorElement TensorElement::single(const FieldConfig& cfg, int nL, int nR, int k,
                                    const TensorBlade& b, const FieldElement& c) {
  TensorElement r(cfg, nL, nR, k);
  r.add_term(b, c);
  return r;
}

TensorElement TensorElement::tensor(const Multivector& a, const Multivector& b, int k) {
  if (&a.config() != &b.config()) throw Error("tensor: mixed field configurations");
  TensorElement r(a.config(), a.truncation(), b.truncation(), k);
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) r.add_term(TensorBlade{ba, bb}, ca * cb);
  return r;
}

FieldElement TensorElement::coeff(const TensorBlade& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? FieldElement::zero(*cfg_) : it->second;
}

void TensorElement::add_term(const TensorBlade& b, const FieldElement& c) {
  if (b.left.max_index() > nL_) throw Error("tensor: left blade exceeds truncation");
  if (b.right.max_index() > nR_) throw Error("tensor: right blade exceeds truncation");
  if (c.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TensorElement::check_compatible(const TensorElement& o) const {
  if (cfg_ != o.cfg_) throw Error("tensor: mixed field configurations");
  if (nL_ != o.nL_ || nR_ != o.nR_) throw Error("tensor: mixed truncations");
  if (k_ != o.k_) throw Error("tensor: mixed grading parameters");
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  check_compatible(o);
  TensorElement r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  check_compatible(o);
  TensorElement r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
  return r;
}

TensorElement TensorElement::operator-() const {
  TensorElement r(*cfg_, nL_, nR_, k_);
  for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
  return r;
}

TensorElement TensorElement::scale(const FieldElement& c) const {
  TensorElement r(*cfg_, nL_, nR_, k_);
  if (c.is_zero()) return r;
  for (const auto& [b, x] : terms_) r.add_term(b, x * c);
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  check_compatible(o);
  TensorElement r(*cfg_, nL_, nR_, k_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      auto pl = blade_product(a.left, b.left);
      if (!pl) continue;
      auto pr = blade_product(a.right, b.right);
      if (!pr) continue;
      FieldElement c = ca * cb;
      if (pl->first * pr->first < 0) c = -c;
      r.add_term(TensorBlade{pl->second, pr->second}, c);
    }
  }
  return r;
}

TensorElement TensorElement::pow(std::uint64_t e) const {
  TensorElement acc = unit(*cfg_, nL_, nR_, k_);
  TensorElement base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

TensorElement TensorElement::z2_component(int par) const {
  TensorElement r(*cfg_, nL_, nR_, k_);
  for (const auto& [b, c] : terms_)
    if (z2_parity(b) == (par & 1)) r.terms_.emplace(b, c);
  return r;
}

bool TensorElement::is_z2_homogeneous(int par) const { return z2_component(par ^ 1).is_zero(); }

bool TensorElement::is_homogeneous(const Bidegree& d) const {
  for (const auto& [b, c] : terms_) {
    (void)c;
    if (bidegree_of(b, k_) != d) return false;
  }
  return true;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return cfg_ == o.cfg_ && nL_ == o.nL_ && nR_ == o.nR_ && k_ == o.k_ && terms_ == o.terms_;
}

std::string TensorElement::to_string() const {
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

TensorElement supercommutator(const TensorElement& a, const TensorElement& b) {
  TensorElement r = TensorElement::zero(a.config(), a.left_truncation(), a.right_truncation(), a.k());
  for (int pa = 0; pa <= 1; ++pa) {
    TensorElement ac = a.z2_component(pa);
    if (ac.is_zero()) continue;
    for (int pb = 0; pb <= 1; ++pb) {
      TensorElement bc = b.z2_component(pb);
      if (bc.is_zero()) continue;
      TensorElement ab = ac * bc;
      TensorElement ba = bc * ac;
      r = r + (((pa & pb) != 0) ? (ab + ba) : (ab - ba));
    }
  }
  return r;
}

TensorElement left_normed_supercommutator(const std::vector<TensorElement>& args) {
  if (args.size() < 2) throw Error("supercommutator: need at least two arguments");
  TensorElement acc = supercommutator(args[0], args[1]);
  for (size_t i = 2; i < args.size(); ++i) acc = supercommutator(acc, args[i]);
  return acc;
}

SupportUnion supp_union(const TensorElement& c) {
  SupportUnion u;
  for (const auto& [b, x] : c.terms()) {
    (void)x;
    u.left.insert(b.left.idx.begin(), b.left.idx.end());
    u.right.insert(b.right.idx.begin(), b.right.idx.end());
  }
  return u;
}

int max_support_length(const TensorElement& c) {
  if (c.is_zero()) throw Error("g-sum: statistics of the zero element are undefined");
  int m = 0;
  for (const auto& [b, x] : c.terms()) {
    (void)x;
    if (b.support_length() > m) m = b.support_length();
  }
  return m;
}

std::vector<TensorBlade> max_index_set(const TensorElement& c) {
  const int m = max_support_length(c);
  std::vector<TensorBlade> r;
  for (const auto& [b, x] : c.terms()) {
    (void)x;
    if (b.support_length() == m) r.push_back(b);
  }
  return r;
}

TensorElement g_sum(const TensorElement& c) {
  const int m = max_support_length(c);
  TensorElement r = TensorElement::zero(c.config(), c.left_truncation(), c.right_truncation(), c.k());
  for (const auto& [b, x] : c.terms())
    if (b.support_length() == m) r.add_term(b, x);
  return r;
}

}  // namespace gts
