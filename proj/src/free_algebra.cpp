#include "gts/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gts {

char kind_letter(VarKind k) {
  switch (k) {
    case VarKind::V: return 'v';
    case VarKind::W: return 'w';
    case VarKind::X: return 'x';
    case VarKind::Y: return 'y';
  }
  return '?';
}

VarKind kind_from_letter(char c) {
  switch (c) {
    case 'v': return VarKind::V;
    case 'w': return VarKind::W;
    case 'x': return VarKind::X;
    case 'y': return VarKind::Y;
  }
  throw Error(std::string("unknown variable letter '") + c + "'");
}

Bidegree kind_bidegree(VarKind k) {
  switch (k) {
    case VarKind::V: return {0, 0};
    case VarKind::W: return {1, 0};
    case VarKind::X: return {0, 1};
    case VarKind::Y: return {1, 1};
  }
  return {0, 0};
}

int kind_z2_parity(VarKind k) { return kind_bidegree(k).e2; }

Bidegree word_bidegree(const GWord& w) {
  Bidegree d{0, 0};
  for (const auto& z : w) d = d + kind_bidegree(z.kind);
  return d;
}

int word_z2_parity(const GWord& w) { return word_bidegree(w).e2; }

int deg_in_word(const GWord& w, const GVariable& z) {
  int c = 0;
  for (const auto& l : w)
    if (l == z) ++c;
  return c;
}

std::map<GVariable, int> multidegree(const GWord& w) {
  std::map<GVariable, int> m;
  for (const auto& l : w) ++m[l];
  return m;
}

GPolynomial GPolynomial::unit(const FieldConfig& cfg) {
  return scalar(cfg, FieldElement::one(cfg));
}

GPolynomial GPolynomial::scalar(const FieldConfig& cfg, const FieldElement& c) {
  GPolynomial r(cfg);
  r.add_term(GWord{}, c);
  return r;
}

GPolynomial GPolynomial::variable(const FieldConfig& cfg, const GVariable& v) {
  GPolynomial r(cfg);
  r.add_term(GWord{v}, FieldElement::one(cfg));
  return r;
}

GPolynomial GPolynomial::word(const FieldConfig& cfg, const GWord& w, const FieldElement& c) {
  GPolynomial r(cfg);
  r.add_term(w, c);
  return r;
}

void GPolynomial::add_term(const GWord& w, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void GPolynomial::check_compatible(const GPolynomial& o) const {
  if (cfg_ != o.cfg_) throw Error("polynomial: mixed field configurations");
}

GPolynomial GPolynomial::operator+(const GPolynomial& o) const {
  check_compatible(o);
  GPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GPolynomial GPolynomial::operator-(const GPolynomial& o) const {
  check_compatible(o);
  GPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

GPolynomial GPolynomial::operator-() const {
  GPolynomial r(*cfg_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GPolynomial GPolynomial::scale(const FieldElement& c) const {
  GPolynomial r(*cfg_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

GPolynomial GPolynomial::operator*(const GPolynomial& o) const {
  check_compatible(o);
  GPolynomial r(*cfg_);
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      GWord w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

GPolynomial GPolynomial::pow(std::uint64_t e) const {
  GPolynomial acc = unit(*cfg_);
  GPolynomial base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

GPolynomial GPolynomial::z2_component(int par) const {
  GPolynomial r(*cfg_);
  for (const auto& [w, c] : terms_)
    if (word_z2_parity(w) == (par & 1)) r.terms_.emplace(w, c);
  return r;
}

int GPolynomial::deg_in(const GVariable& z) const {
  int m = 0;
  for (const auto& [w, c] : terms_) {
    (void)c;
    m = std::max(m, deg_in_word(w, z));
  }
  return m;
}

std::vector<GVariable> GPolynomial::variables() const {
  std::set<GVariable> s;
  for (const auto& [w, c] : terms_) {
    (void)c;
    s.insert(w.begin(), w.end());
  }
  return std::vector<GVariable>(s.begin(), s.end());
}

bool GPolynomial::is_bidegree_homogeneous(Bidegree* out) const {
  if (terms_.empty()) return true;
  Bidegree d = word_bidegree(terms_.begin()->first);
  for (const auto& [w, c] : terms_) {
    (void)c;
    if (word_bidegree(w) != d) return false;
  }
  if (out) *out = d;
  return true;
}

bool GPolynomial::operator==(const GPolynomial& o) const {
  return cfg_ == o.cfg_ && terms_ == o.terms_;
}

namespace {

std::string word_to_string(const GWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << '*';
    os << w[i].to_string();
    if (j - i > 1) os << '^' << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

// Prints a coefficient-and-sign prefix. Residues above p/2 in prime fields
// print as negatives so e.g. -1 does not surface as p-1.
void print_signed_coeff(std::ostream& os, const FieldElement& c, bool leading, bool unit_word) {
  const FieldConfig& cfg = c.config();
  bool neg = false;
  FieldElement shown = c;
  if (cfg.m() == 1 && c.coeffs()[0] > cfg.p() / 2) {
    neg = true;
    shown = -c;
  }
  if (leading) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  if (unit_word) {
    os << shown.to_string();
  } else if (!shown.is_one()) {
    os << shown.to_string() << '*';
  }
}

}  // namespace

std::string GPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (const auto& [w, c] : terms_) {
    print_signed_coeff(os, c, leading, w.empty());
    if (!w.empty()) os << word_to_string(w);
    leading = false;
  }
  return os.str();
}

GPolynomial graded_commutator(const GPolynomial& f, const GPolynomial& g) {
  GPolynomial r(f.config());
  for (int pf = 0; pf <= 1; ++pf) {
    GPolynomial fc = f.z2_component(pf);
    if (fc.is_zero()) continue;
    for (int pg = 0; pg <= 1; ++pg) {
      GPolynomial gc = g.z2_component(pg);
      if (gc.is_zero()) continue;
      GPolynomial fg = fc * gc;
      GPolynomial gf = gc * fc;
      r = r + (((pf & pg) != 0) ? (fg + gf) : (fg - gf));
    }
  }
  return r;
}

GPolynomial left_normed_commutator(const std::vector<GPolynomial>& args) {
  if (args.size() < 2) throw Error("commutator: need at least two arguments");
  GPolynomial acc = graded_commutator(args[0], args[1]);
  for (size_t i = 2; i < args.size(); ++i) acc = graded_commutator(acc, args[i]);
  return acc;
}

std::vector<GVariable> VariableSet::variables() const {
  std::vector<GVariable> r;
  for (int i = 1; i <= n1; ++i) r.push_back({VarKind::V, i});
  for (int i = 1; i <= n2; ++i) r.push_back({VarKind::W, i});
  for (int i = 1; i <= n3; ++i) r.push_back({VarKind::X, i});
  for (int i = 1; i <= n4; ++i) r.push_back({VarKind::Y, i});
  return r;
}

int VariableSet::count(VarKind k) const {
  switch (k) {
    case VarKind::V: return n1;
    case VarKind::W: return n2;
    case VarKind::X: return n3;
    case VarKind::Y: return n4;
  }
  return 0;
}

void EvaluationMap::validate() const {
  if (!field) throw Error("evaluation: missing field configuration");
  for (const auto& [z, img] : images) {
    if (&img.config() != field || img.left_truncation() != nL || img.right_truncation() != nR ||
        img.k() != k)
      throw Error("evaluation: image of " + z.to_string() + " has incompatible context");
    if (!img.is_homogeneous(kind_bidegree(z.kind)))
      throw Error("evaluation: image of " + z.to_string() + " is not homogeneous of bidegree " +
                  kind_bidegree(z.kind).to_string());
  }
}

std::string EvaluationMap::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [z, img] : images) {
    if (!first) os << "; ";
    os << z.to_string() << " -> " << img.to_string();
    first = false;
  }
  return os.str();
}

TensorElement substitute(const GPolynomial& f, const EvaluationMap& e) {
  e.validate();
  TensorElement acc = TensorElement::zero(*e.field, e.nL, e.nR, e.k);
  for (const auto& [w, c] : f.terms()) {
    TensorElement t = TensorElement::unit(*e.field, e.nL, e.nR, e.k);
    for (const auto& z : w) {
      auto it = e.images.find(z);
      if (it == e.images.end()) throw Error("evaluation: no image assigned to " + z.to_string());
      t = t * it->second;
      if (t.is_zero()) break;
    }
    acc = acc + t.scale(c);
  }
  return acc;
}

namespace {

class Parser {
public:
  Parser(const std::string& text, const FieldConfig& cfg) : s_(text), cfg_(cfg) {}

  GPolynomial run() {
    GPolynomial p = parse_poly();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  long parse_int() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return std::stol(s_.substr(start, pos_ - start));
  }

  // A bracket holds a field coefficient exactly when its content is a bare
  // comma-separated integer list; otherwise it is a commutator.
  bool bracket_is_coefficient() {
    size_t i = pos_;  // points at '['
    ++i;
    bool any_digit = false;
    int depth = 1;
    for (; i < s_.size(); ++i) {
      char c = s_[i];
      if (c == ']') {
        --depth;
        if (depth == 0) return any_digit;
        return false;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        any_digit = true;
      } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        // still a plain list
      } else {
        return false;
      }
    }
    return false;
  }

  FieldElement parse_coefficient() {
    skip_ws();
    if (peek() == '[') {
      expect('[');
      std::vector<std::int64_t> cs;
      cs.push_back(parse_int());
      while (accept(',')) cs.push_back(parse_int());
      expect(']');
      return FieldElement::from_coeffs(cfg_, std::move(cs));
    }
    return FieldElement::from_int(cfg_, parse_int());
  }

  GPolynomial parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      expect('(');
      GPolynomial p = parse_poly();
      expect(')');
      return p;
    }
    if (c == '[') {
      expect('[');
      std::vector<GPolynomial> entries;
      entries.push_back(parse_poly());
      expect(',');
      entries.push_back(parse_poly());
      while (accept(',')) entries.push_back(parse_poly());
      expect(']');
      return left_normed_commutator(entries);
    }
    if (c == 'v' || c == 'w' || c == 'x' || c == 'y') {
      ++pos_;
      int index = static_cast<int>(parse_int());
      if (index < 1) throw ParseError("variable index must be >= 1", pos_);
      GVariable var{kind_from_letter(c), index};
      GPolynomial p = GPolynomial::variable(cfg_, var);
      if (accept('^')) {
        long e = parse_int();
        if (e < 0) throw ParseError("negative exponent", pos_);
        p = p.pow(static_cast<std::uint64_t>(e));
      }
      return p;
    }
    throw ParseError("expected a variable, '(' or '['", pos_);
  }

  GPolynomial parse_term() {
    skip_ws();
    GPolynomial p = GPolynomial::unit(cfg_);
    bool saw_factor = false;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '[' && bracket_is_coefficient())) {
      p = p.scale(parse_coefficient());
      saw_factor = true;
      if (!accept('*')) return p;
    }
    p = p * parse_factor();
    saw_factor = true;
    while (accept('*')) p = p * parse_factor();
    (void)saw_factor;
    return p;
  }

  GPolynomial parse_poly() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    GPolynomial p = parse_term();
    if (neg) p = -p;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p = p + parse_term();
      } else if (c == '-') {
        ++pos_;
        p = p - parse_term();
      } else {
        return p;
      }
    }
  }

  const std::string& s_;
  const FieldConfig& cfg_;
  size_t pos_ = 0;
};

}  // namespace

GPolynomial parse_polynomial(const std::string& text, const FieldConfig& cfg) {
  return Parser(text, cfg).run();
}

}  // namespace gts
