#include "gts/rewrite.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace gts {

PPolynomial PPolynomial::unit(const FieldConfig& cfg) {
  PPolynomial r(cfg);
  r.add_term(PMonomial{}, FieldElement::one(cfg));
  return r;
}

PPolynomial PPolynomial::monomial(const FieldConfig& cfg, const PMonomial& m, const FieldElement& c) {
  PPolynomial r(cfg);
  r.add_term(m, c);
  return r;
}

void PPolynomial::add_term(const PMonomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

PPolynomial PPolynomial::operator+(const PPolynomial& o) const {
  PPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PPolynomial PPolynomial::operator-(const PPolynomial& o) const {
  PPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PPolynomial PPolynomial::scale(const FieldElement& c) const {
  PPolynomial r(*cfg_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

bool PPolynomial::is_valid_p_polynomial() const {
  const int p = cfg_->p();
  const std::int64_t pq = static_cast<std::int64_t>(p) * cfg_->q();
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [idx, e] : m) {
      (void)idx;
      if (e % p != 0 || e >= pq) return false;
    }
  }
  return true;
}

std::vector<int> PPolynomial::variable_indices() const {
  std::vector<int> r;
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (const auto& [idx, e] : m) {
      (void)e;
      if (std::find(r.begin(), r.end(), idx) == r.end()) r.push_back(idx);
    }
  }
  std::sort(r.begin(), r.end());
  return r;
}

FieldElement PPolynomial::evaluate(const std::map<int, FieldElement>& scalars) const {
  FieldElement acc = FieldElement::zero(*cfg_);
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (const auto& [idx, e] : m) {
      auto it = scalars.find(idx);
      FieldElement base = (it == scalars.end()) ? FieldElement::zero(*cfg_) : it->second;
      t = t * base.pow(static_cast<std::uint64_t>(e));
      if (t.is_zero()) break;
    }
    acc = acc + t;
  }
  return acc;
}

GPolynomial PPolynomial::to_gpolynomial() const {
  GPolynomial r(*cfg_);
  for (const auto& [m, c] : terms_) {
    GWord w;
    for (const auto& [idx, e] : m)
      for (int i = 0; i < e; ++i) w.push_back({VarKind::V, idx});
    r.add_term(w, c);
  }
  return r;
}

std::string PPolynomial::to_string() const { return to_gpolynomial().to_string(); }

int SseMonomial::deg() const {
  int d = static_cast<int>(brackets.size());
  for (const auto& [i, e] : v) {
    (void)i;
    d += e;
  }
  for (const auto& [i, e] : w) {
    (void)i;
    d += e;
  }
  for (const auto& [i, e] : x) {
    (void)i;
    d += e;
  }
  for (const auto& [i, e] : y) {
    (void)i;
    d += e;
  }
  return d;
}

std::map<int, int>& SseMonomial::exponents(VarKind k) {
  switch (k) {
    case VarKind::V: return v;
    case VarKind::W: return w;
    case VarKind::X: return x;
    default: return y;
  }
}

const std::map<int, int>& SseMonomial::exponents(VarKind k) const {
  switch (k) {
    case VarKind::V: return v;
    case VarKind::W: return w;
    case VarKind::X: return x;
    default: return y;
  }
}

int SseMonomial::beg_exponent(const GVariable& z) const {
  const auto& m = exponents(z.kind);
  auto it = m.find(z.index);
  return it == m.end() ? 0 : it->second;
}

bool SseMonomial::in_brackets(const GVariable& z) const {
  return std::find(brackets.begin(), brackets.end(), z) != brackets.end();
}

int SseMonomial::deg_of(const GVariable& z) const {
  return beg_exponent(z) + (in_brackets(z) ? 1 : 0);
}

int SseMonomial::total_wy_degree() const {
  int d = 0;
  for (const auto& [i, e] : w) {
    (void)i;
    d += e;
  }
  for (const auto& [i, e] : y) {
    (void)i;
    d += e;
  }
  for (const auto& z : brackets)
    if (z.kind == VarKind::W || z.kind == VarKind::Y) ++d;
  return d;
}

GWord SseMonomial::beg_word() const {
  GWord r;
  for (VarKind k : {VarKind::V, VarKind::W, VarKind::X, VarKind::Y})
    for (const auto& [idx, e] : exponents(k))
      for (int i = 0; i < e; ++i) r.push_back({k, idx});
  return r;
}

std::vector<GVariable> SseMonomial::variables() const {
  std::vector<GVariable> r;
  for (VarKind k : {VarKind::V, VarKind::W, VarKind::X, VarKind::Y})
    for (const auto& [idx, e] : exponents(k)) {
      (void)e;
      r.push_back({k, idx});
    }
  for (const auto& z : brackets)
    if (std::find(r.begin(), r.end(), z) == r.end()) r.push_back(z);
  std::sort(r.begin(), r.end());
  return r;
}

std::optional<std::string> SseMonomial::sse_violation(int p, int k) const {
  for (size_t i = 0; i + 1 < brackets.size(); ++i)
    if (!(brackets[i] < brackets[i + 1])) return "bracket entries not strictly increasing";
  if (brackets.size() % 2 != 0) return "odd number of bracket entries";
  for (const auto& [i, e] : v)
    if (e < 1 || e > p - 1) return "v" + std::to_string(i) + " exponent out of [1, p-1]";
  for (const auto& [i, e] : w)
    if (e < 1 || e > p - 1) return "w" + std::to_string(i) + " exponent out of [1, p-1]";
  for (const auto& [i, e] : x)
    if (e < 1 || e > p) return "x" + std::to_string(i) + " exponent out of [1, p]";
  for (const auto& [i, e] : y)
    if (e < 1 || e > p) return "y" + std::to_string(i) + " exponent out of [1, p]";
  int wy = 0;
  for (const auto& [i, e] : w) {
    (void)i;
    wy += e;
  }
  for (const auto& [i, e] : y) {
    (void)i;
    wy += e;
  }
  if (wy > k) return "beg W+Y degree exceeds k";
  for (const auto& [i, e] : x)
    if (e == p && in_brackets({VarKind::X, i}))
      return "x" + std::to_string(i) + " has exponent p and a bracket occurrence";
  for (const auto& [i, e] : y)
    if (e == p && in_brackets({VarKind::Y, i}))
      return "y" + std::to_string(i) + " has exponent p and a bracket occurrence";
  return std::nullopt;
}

GPolynomial SseMonomial::expand(const FieldConfig& cfg) const {
  GPolynomial r = GPolynomial::word(cfg, beg_word(), FieldElement::one(cfg));
  for (size_t i = 0; i + 1 < brackets.size(); i += 2)
    r = r * graded_commutator(GPolynomial::variable(cfg, brackets[i]),
                              GPolynomial::variable(cfg, brackets[i + 1]));
  return r;
}

bool SseMonomial::operator==(const SseMonomial& o) const {
  return v == o.v && w == o.w && x == o.x && y == o.y && brackets == o.brackets;
}

bool SseMonomial::operator<(const SseMonomial& o) const {
  return std::tie(v, w, x, y, brackets) < std::tie(o.v, o.w, o.x, o.y, o.brackets);
}

std::string SseMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (VarKind k : {VarKind::V, VarKind::W, VarKind::X, VarKind::Y}) {
    for (const auto& [idx, e] : exponents(k)) {
      if (!first) os << '*';
      os << kind_letter(k) << idx;
      if (e > 1) os << '^' << e;
      first = false;
    }
  }
  for (size_t i = 0; i + 1 < brackets.size(); i += 2) {
    if (!first) os << '*';
    os << '[' << brackets[i].to_string() << ',' << brackets[i + 1].to_string() << ']';
    first = false;
  }
  if (first) return "1";
  return os.str();
}

SseMonomial parse_sse_monomial(const std::string& text) {
  SseMonomial m;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    return std::stoi(text.substr(start, pos - start));
  };
  auto parse_var = [&]() -> GVariable {
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected a variable", pos);
    char c = text[pos];
    if (c != 'v' && c != 'w' && c != 'x' && c != 'y')
      throw ParseError("expected a variable letter", pos);
    ++pos;
    return GVariable{kind_from_letter(c), parse_int()};
  };

  skip_ws();
  if (pos < text.size() && text[pos] == '1' &&
      (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    return m;
  }

  bool expect_factor = true;
  while (expect_factor) {
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected a factor", pos);
    if (text[pos] == '[') {
      ++pos;
      GVariable a = parse_var();
      skip_ws();
      if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      GVariable b = parse_var();
      skip_ws();
      if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
      ++pos;
      m.brackets.push_back(a);
      m.brackets.push_back(b);
    } else {
      GVariable z = parse_var();
      int e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = parse_int();
        if (e < 1) throw ParseError("exponent must be >= 1", pos);
      }
      m.exponents(z.kind)[z.index] += e;
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
    } else {
      expect_factor = false;
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  for (size_t i = 0; i + 1 < m.brackets.size(); ++i)
    if (!(m.brackets[i] < m.brackets[i + 1]))
      throw Error("monomial: bracket entries must be strictly increasing");
  return m;
}

GPolynomial NormalForm::expand(const FieldConfig& cfg) const {
  GPolynomial r = f0.to_gpolynomial();
  for (const auto& [fi, ui] : summands) r = r + fi.to_gpolynomial() * ui.expand(cfg);
  return r;
}

std::string NormalForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  if (!f0.is_zero()) {
    os << f0.to_string();
    leading = false;
  }
  for (const auto& [fi, ui] : summands) {
    const auto& ts = fi.terms();
    if (ts.size() == 1) {
      const auto& [m, c] = *ts.begin();
      const FieldConfig& cfg = c.config();
      bool neg = (cfg.m() == 1 && c.coeffs()[0] > cfg.p() / 2);
      FieldElement shown = neg ? -c : c;
      os << (leading ? (neg ? "-" : "") : (neg ? " - " : " + "));
      bool printed = false;
      if (!shown.is_one()) {
        os << shown.to_string();
        printed = true;
      }
      if (!m.empty()) {
        if (printed) os << '*';
        os << PPolynomial::monomial(cfg, m, FieldElement::one(cfg)).to_string();
        printed = true;
      }
      if (printed) os << '*';
      os << ui.to_string();
    } else {
      os << (leading ? "" : " + ") << '(' << fi.to_string() << ")*" << ui.to_string();
    }
    leading = false;
  }
  return os.str();
}

namespace {

struct EngineTerm {
  FieldElement coeff;
  GWord letters;
  std::vector<GVariable> brackets;
};

std::string describe(const EngineTerm& t) {
  std::ostringstream os;
  os << t.coeff.to_string() << " * ";
  for (const auto& z : t.letters) os << z.to_string();
  for (size_t i = 0; i + 1 < t.brackets.size(); i += 2)
    os << '[' << t.brackets[i].to_string() << ',' << t.brackets[i + 1].to_string() << ']';
  return os.str();
}

class StraightenEngine {
public:
  StraightenEngine(long budget) : budget_(budget) {}

  void push(EngineTerm t) { work_.push_back(std::move(t)); }

  template <typename Sink>
  void run(Sink&& sink) {
    while (!work_.empty()) {
      EngineTerm t = std::move(work_.back());
      work_.pop_back();
      process(std::move(t), sink);
    }
  }

private:
  void tick(const EngineTerm& t) {
    if (++steps_ > budget_) throw RewriteBudgetExceeded(describe(t));
  }

  // Adjacent transposition of distinct bracket entries costs -(-1)^{|a||b|},
  // both inside a bracket (supersymmetry) and across a bracket boundary (the
  // middle swap). Equal adjacent entries are contracted instead.
  bool normalize_brackets(EngineTerm& t) {
    bool letters_changed = false;
    bool changed = true;
    while (changed) {
      changed = false;
      auto& e = t.brackets;
      // bubble pass
      bool swapped = true;
      while (swapped) {
        swapped = false;
        for (size_t i = 0; i + 1 < e.size(); ++i) {
          if (e[i + 1] < e[i]) {
            tick(t);
            if (kind_z2_parity(e[i].kind) && kind_z2_parity(e[i + 1].kind))
              ;  // -(-1)^{1} = +1
            else
              t.coeff = -t.coeff;
            std::swap(e[i], e[i + 1]);
            swapped = true;
          }
        }
      }
      // duplicate contraction: within-bracket pairs first, then boundary
      // pairs, which rotate ([a,z],[z,b]) -> ([z,z],[a,b]) at net sign +1
      // (two adjacent transpositions of the same distinct pair).
      long dup = -1;
      for (size_t i = 0; i + 1 < e.size(); i += 2)
        if (e[i] == e[i + 1]) {
          dup = static_cast<long>(i);
          break;
        }
      if (dup < 0) {
        for (size_t i = 1; i + 1 < e.size(); i += 2)
          if (e[i] == e[i + 1]) {
            tick(t);
            std::swap(e[i - 1], e[i]);
            std::swap(e[i], e[i + 1]);
            dup = static_cast<long>(i) - 1;
            break;
          }
      }
      if (dup >= 0) {
        tick(t);
        const GVariable z = e[dup];
        // [z,z] is zero for even z and 2 z^2 for odd z
        if (kind_z2_parity(z.kind) == 0) {
          t.coeff = FieldElement::zero(t.coeff.config());
          return letters_changed;
        }
        t.coeff = t.coeff + t.coeff;
        e.erase(e.begin() + dup, e.begin() + dup + 2);
        t.letters.push_back(z);
        t.letters.push_back(z);
        letters_changed = true;
        changed = true;
      }
      if (t.coeff.is_zero()) return letters_changed;
    }
    return letters_changed;
  }

  template <typename Sink>
  void process(EngineTerm t, Sink& sink) {
    for (;;) {
      normalize_brackets(t);
      if (t.coeff.is_zero()) return;
      // sort letters; each strict inversion also spawns the bracket term
      bool swapped = true;
      while (swapped) {
        swapped = false;
        for (size_t i = 0; i + 1 < t.letters.size(); ++i) {
          const GVariable a = t.letters[i];
          const GVariable b = t.letters[i + 1];
          if (!(b < a)) continue;
          tick(t);
          // child: letters with the pair replaced by [a,b], moved to the chain
          EngineTerm child{t.coeff, {}, {}};
          int suffix_parity = 0;
          for (size_t j = i + 2; j < t.letters.size(); ++j)
            suffix_parity ^= kind_z2_parity(t.letters[j].kind);
          const int bracket_parity = kind_z2_parity(a.kind) ^ kind_z2_parity(b.kind);
          if (bracket_parity && suffix_parity) child.coeff = -child.coeff;
          child.letters.assign(t.letters.begin(), t.letters.begin() + i);
          child.letters.insert(child.letters.end(), t.letters.begin() + i + 2, t.letters.end());
          child.brackets.reserve(t.brackets.size() + 2);
          child.brackets.push_back(a);
          child.brackets.push_back(b);
          child.brackets.insert(child.brackets.end(), t.brackets.begin(), t.brackets.end());
          work_.push_back(std::move(child));
          // parent: swap with sign (-1)^{|a||b|}
          if (kind_z2_parity(a.kind) && kind_z2_parity(b.kind)) t.coeff = -t.coeff;
          t.letters[i] = b;
          t.letters[i + 1] = a;
          swapped = true;
        }
      }
      // letters sorted, brackets were already normalized and untouched
      break;
    }
    if (!t.coeff.is_zero()) sink(std::move(t));
  }

  long budget_;
  long steps_ = 0;
  std::vector<EngineTerm> work_;
};

}  // namespace

std::vector<StructuredTerm> straighten(const GPolynomial& f, long max_steps) {
  StraightenEngine engine(max_steps);
  for (const auto& [w, c] : f.terms()) engine.push(EngineTerm{c, w, {}});
  std::map<std::pair<GWord, std::vector<GVariable>>, FieldElement> acc;
  engine.run([&](EngineTerm t) {
    auto key = std::make_pair(std::move(t.letters), std::move(t.brackets));
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(std::move(key), t.coeff);
    } else {
      it->second = it->second + t.coeff;
      if (it->second.is_zero()) acc.erase(it);
    }
  });
  std::vector<StructuredTerm> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc) out.push_back(StructuredTerm{c, key.first, key.second});
  return out;
}

GPolynomial expand_structured(const std::vector<StructuredTerm>& terms, const FieldConfig& cfg) {
  GPolynomial r(cfg);
  for (const auto& t : terms) {
    GPolynomial m = GPolynomial::word(cfg, t.letters, t.coeff);
    for (size_t i = 0; i + 1 < t.brackets.size(); i += 2)
      m = m * graded_commutator(GPolynomial::variable(cfg, t.brackets[i]),
                                GPolynomial::variable(cfg, t.brackets[i + 1]));
    r = r + m;
  }
  return r;
}

std::pair<PMonomial, std::map<int, int>> extract_p_part(const std::map<int, int>& v_exponents,
                                                        int p, std::int64_t q) {
  PMonomial p_part;
  std::map<int, int> residuals;
  const std::int64_t pq = static_cast<std::int64_t>(p) * q;
  for (const auto& [idx, e] : v_exponents) {
    const int r = e % p;
    std::int64_t part = e - r;
    while (part >= pq) part -= static_cast<std::int64_t>(p) * (q - 1);  // v^{pq} = v^p
    if (part > 0) p_part.emplace_back(idx, static_cast<int>(part));
    if (r > 0) residuals[idx] = r;
  }
  return {p_part, residuals};
}

NormalForm sse_reduce(const GPolynomial& f, const ReduceConfig& rc) {
  const FieldConfig& cfg = f.config();
  const int p = cfg.p();
  const std::int64_t q = cfg.q();

  StraightenEngine engine(rc.max_steps);
  for (const auto& [w, c] : f.terms()) engine.push(EngineTerm{c, w, {}});

  std::map<SseMonomial, PPolynomial> groups;
  engine.run([&](EngineTerm t) {
    // exponent tallies over the sorted letter word
    std::map<int, int> ve, we, xe, ye;
    for (const auto& z : t.letters) {
      switch (z.kind) {
        case VarKind::V: ++ve[z.index]; break;
        case VarKind::W: ++we[z.index]; break;
        case VarKind::X: ++xe[z.index]; break;
        case VarKind::Y: ++ye[z.index]; break;
      }
    }
    auto in_brackets = [&](VarKind k, int idx) {
      return std::find(t.brackets.begin(), t.brackets.end(), GVariable{k, idx}) != t.brackets.end();
    };
    // kills: w^p; x^{p+1}; y^{p+1}; x^{p-1} or y^{p-1} alongside an own
    // bracket occurrence (and a fortiori exponent p, both are instances of
    // the x^{p-1}[x,z] family); more than k letters from W∪Y in total
    for (const auto& [i, e] : we) {
      (void)i;
      if (e >= p) return;
    }
    for (const auto& [i, e] : xe) {
      if (e > p) return;
      if (e >= p - 1 && in_brackets(VarKind::X, i)) return;
    }
    for (const auto& [i, e] : ye) {
      if (e > p) return;
      if (e >= p - 1 && in_brackets(VarKind::Y, i)) return;
    }
    int wy = 0;
    for (const auto& [i, e] : we) {
      (void)i;
      wy += e;
    }
    for (const auto& [i, e] : ye) {
      (void)i;
      wy += e;
    }
    for (const auto& z : t.brackets)
      if (z.kind == VarKind::W || z.kind == VarKind::Y) ++wy;
    if (wy > rc.k) return;

    auto [pmono, residuals] = extract_p_part(ve, p, q);
    SseMonomial u;
    u.v = std::move(residuals);
    u.w = std::move(we);
    u.x = std::move(xe);
    u.y = std::move(ye);
    u.brackets = std::move(t.brackets);
    auto it = groups.find(u);
    if (it == groups.end()) it = groups.emplace(std::move(u), PPolynomial::zero(cfg)).first;
    it->second.add_term(pmono, t.coeff);
  });

  NormalForm nf(cfg);
  for (auto& [u, fi] : groups) {
    if (fi.is_zero()) continue;
    if (u.is_empty())
      nf.f0 = fi;
    else
      nf.summands.emplace_back(std::move(fi), u);
  }
  std::sort(nf.summands.begin(), nf.summands.end(), [](const auto& a, const auto& b) {
    return sse_compare(a.second, b.second) == Ordering::Greater;
  });
  return nf;
}

bool equiv01(const std::vector<int>& a, const std::vector<int>& b) {
  const size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const int ai = i < a.size() ? a[i] : 0;
    const int bi = i < b.size() ? b[i] : 0;
    const int d = ai > bi ? ai - bi : bi - ai;
    if (d > 1) return false;
  }
  return true;
}

bool less01(const std::vector<int>& a, const std::vector<int>& b) {
  if (!equiv01(a, b)) throw Error("less01: tuples are not (0,1)-equivalent");
  const size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const int ai = i < a.size() ? a[i] : 0;
    const int bi = i < b.size() ? b[i] : 0;
    if (((ai - bi) & 1) != 0) return (ai & 1) != 0;
  }
  return false;
}

namespace {

// Exponent tuples aligned over the union of variables of both monomials,
// slots in the global variable order.
std::pair<std::vector<int>, std::vector<int>> aligned_tuples(const SseMonomial& a,
                                                             const SseMonomial& b,
                                                             VarKind k1, VarKind k2) {
  std::vector<int> ea, eb;
  for (VarKind k : {k1, k2}) {
    const auto& ma = a.exponents(k);
    const auto& mb = b.exponents(k);
    auto ia = ma.begin();
    auto ib = mb.begin();
    while (ia != ma.end() || ib != mb.end()) {
      int idx;
      if (ia == ma.end())
        idx = ib->first;
      else if (ib == mb.end())
        idx = ia->first;
      else
        idx = std::min(ia->first, ib->first);
      int xa = 0, xb = 0;
      if (ia != ma.end() && ia->first == idx) xa = (ia++)->second;
      if (ib != mb.end() && ib->first == idx) xb = (ib++)->second;
      ea.push_back(xa);
      eb.push_back(xb);
    }
  }
  return {ea, eb};
}

Ordering structural_fallback(const SseMonomial& a, const SseMonomial& b) {
  if (a == b) return Ordering::Equal;
  return a < b ? Ordering::Less : Ordering::Greater;
}

}  // namespace

Ordering sse_compare(const SseMonomial& a, const SseMonomial& b, CompareStats* stats) {
  const int da = a.deg(), db = b.deg();
  if (da != db) return da < db ? Ordering::Less : Ordering::Greater;

  auto [va, vb] = aligned_tuples(a, b, VarKind::V, VarKind::W);
  if (va != vb) return va < vb ? Ordering::Less : Ordering::Greater;

  auto [xa, xb] = aligned_tuples(a, b, VarKind::X, VarKind::Y);
  if (xa != xb) {
    if (!equiv01(xa, xb)) return xa < xb ? Ordering::Less : Ordering::Greater;
    // Parity comparison, oriented so the greater monomial carries the odd
    // exponent at the first parity difference.
    if (less01(xb, xa)) return Ordering::Less;
    if (less01(xa, xb)) return Ordering::Greater;
    if (stats) ++stats->fallback_fires;
    return structural_fallback(a, b);
  }

  if (a.brackets != b.brackets) {
    return std::lexicographical_compare(a.brackets.begin(), a.brackets.end(),
                                        b.brackets.begin(), b.brackets.end())
               ? Ordering::Less
               : Ordering::Greater;
  }
  if (a == b) return Ordering::Equal;
  if (stats) ++stats->fallback_fires;
  return structural_fallback(a, b);
}

SseMonomial leading_term(const NormalForm& nf) {
  if (nf.summands.empty()) throw Error("leading term: normal form has no summands");
  const SseMonomial* best = &nf.summands.front().second;
  for (const auto& [fi, ui] : nf.summands) {
    (void)fi;
    if (sse_compare(*best, ui) == Ordering::Less) best = &ui;
  }
  return *best;
}

namespace {

void enumerate_exponents(const std::vector<GVariable>& vars, size_t i, int p, int k,
                         int degree_bound, int wy_beg, int deg_so_far, SseMonomial& state,
                         std::vector<SseMonomial>& out, long limit) {
  if (degree_bound >= 0 && deg_so_far > degree_bound) return;
  if (i == vars.size()) {
    if (static_cast<long>(out.size()) >= limit) throw EnumerationLimitExceeded(limit);
    out.push_back(state);
    return;
  }
  const GVariable z = vars[i];
  const bool bracketed = state.in_brackets(z);
  const bool wy = (z.kind == VarKind::W || z.kind == VarKind::Y);
  const int emax = (z.kind == VarKind::V || z.kind == VarKind::W) ? p - 1 : p;
  for (int e = 0; e <= emax; ++e) {
    if (wy && wy_beg + e > k) break;
    if (e == p && bracketed && (z.kind == VarKind::X || z.kind == VarKind::Y)) continue;
    if (e > 0) state.exponents(z.kind)[z.index] = e;
    enumerate_exponents(vars, i + 1, p, k, degree_bound, wy ? wy_beg + e : wy_beg,
                        deg_so_far + e, state, out, limit);
    if (e > 0) state.exponents(z.kind).erase(z.index);
  }
}

std::vector<SseMonomial> enumerate_unsorted(const VariableSet& vs, int p, int k, int degree_bound,
                                            long limit) {
  std::vector<GVariable> vars = vs.variables();
  if (vars.size() > 20) throw Error("enumeration: too many variables");
  std::vector<SseMonomial> out;
  const std::uint32_t masks = 1u << vars.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    SseMonomial state;
    for (size_t i = 0; i < vars.size(); ++i)
      if (mask & (1u << i)) state.brackets.push_back(vars[i]);  // already in variable order
    if (degree_bound >= 0 && static_cast<int>(state.brackets.size()) > degree_bound) continue;
    enumerate_exponents(vars, 0, p, k, degree_bound, 0, static_cast<int>(state.brackets.size()),
                        state, out, limit);
  }
  return out;
}

}  // namespace

std::vector<SseMonomial> sse_enumerate(const VariableSet& vs, int p, int k, int degree_bound,
                                       long limit) {
  std::vector<SseMonomial> out = enumerate_unsorted(vs, p, k, degree_bound, limit);
  std::sort(out.begin(), out.end(),
            [](const SseMonomial& a, const SseMonomial& b) { return sse_compare(a, b) == Ordering::Less; });
  return out;
}

std::int64_t sse_dimension(int m, int p, std::int64_t q, int k, long limit) {
  VariableSet vs{m, m, m, m};
  const auto monomials = enumerate_unsorted(vs, p, k, -1, limit);
  std::int64_t pcount = 1;
  for (int i = 0; i < m; ++i) pcount *= q;  // p-monomial exponents: {0, p, ..., p(q-1)} per variable
  return pcount * static_cast<std::int64_t>(monomials.size());
}

namespace {

const VarKind kKinds[4] = {VarKind::V, VarKind::W, VarKind::X, VarKind::Y};

GPolynomial var_poly(const FieldConfig& cfg, VarKind k, int idx) {
  return GPolynomial::variable(cfg, {k, idx});
}

}  // namespace

std::vector<NamedRule> reduction_rules(const FieldConfig& cfg, int k) {
  const int p = cfg.p();
  const std::int64_t q = cfg.q();
  std::vector<NamedRule> rules;
  const GPolynomial zero = GPolynomial::zero(cfg);

  rules.push_back({"w1^p -> 0", var_poly(cfg, VarKind::W, 1).pow(p), zero});
  rules.push_back({"x1^{p+1} -> 0", var_poly(cfg, VarKind::X, 1).pow(p + 1), zero});
  rules.push_back({"y1^{p+1} -> 0", var_poly(cfg, VarKind::Y, 1).pow(p + 1), zero});
  rules.push_back({"v1^{pq} -> v1^p",
                   var_poly(cfg, VarKind::V, 1).pow(static_cast<std::uint64_t>(p) * q),
                   var_poly(cfg, VarKind::V, 1).pow(p)});

  for (VarKind kz : kKinds) {
    const std::string zs(1, kind_letter(kz));
    GPolynomial x1 = var_poly(cfg, VarKind::X, 1);
    GPolynomial y1 = var_poly(cfg, VarKind::Y, 1);
    GPolynomial z2 = var_poly(cfg, kz, 2);
    rules.push_back({"x1^{p-1}[x1," + zs + "2] -> 0",
                     x1.pow(p - 1) * graded_commutator(x1, z2), zero});
    rules.push_back({"y1^{p-1}[y1," + zs + "2] -> 0",
                     y1.pow(p - 1) * graded_commutator(y1, z2), zero});
    rules.push_back({"x1^p[x1," + zs + "2] -> 0", x1.pow(p) * graded_commutator(x1, z2), zero});
    rules.push_back({"y1^p[y1," + zs + "2] -> 0", y1.pow(p) * graded_commutator(y1, z2), zero});
  }

  for (VarKind k1 : kKinds)
    for (VarKind k2 : kKinds)
      for (VarKind k3 : kKinds) {
        std::string name = std::string("[") + kind_letter(k1) + "1," + kind_letter(k2) + "2," +
                           kind_letter(k3) + "3] -> 0";
        rules.push_back({name,
                         left_normed_commutator({var_poly(cfg, k1, 1), var_poly(cfg, k2, 2),
                                                 var_poly(cfg, k3, 3)}),
                         zero});
      }

  // k+1 letters from W∪Y in a row
  for (std::uint32_t mask = 0; mask < (1u << (k + 1)); ++mask) {
    GWord w;
    int wn = 0, yn = 0;
    std::string name = "|";
    for (int i = 0; i <= k; ++i) {
      VarKind kz = (mask & (1u << i)) ? VarKind::Y : VarKind::W;
      int idx = (kz == VarKind::W) ? ++wn : ++yn;
      w.push_back({kz, idx});
      name += w.back().to_string();
    }
    name += "| -> 0";
    rules.push_back({name, GPolynomial::word(cfg, w, FieldElement::one(cfg)), zero});
  }

  // beg letters plus a bracket occurrence also overflow [1,k]
  {
    GPolynomial beg = GPolynomial::unit(cfg);
    for (int i = 1; i <= k; ++i) beg = beg * var_poly(cfg, VarKind::W, i);
    rules.push_back({"w1..wk [w_{k+1}, x1] -> 0",
                     beg * graded_commutator(var_poly(cfg, VarKind::W, k + 1),
                                             var_poly(cfg, VarKind::X, 1)),
                     zero});
    GPolynomial begy = GPolynomial::unit(cfg);
    for (int i = 1; i <= k; ++i) begy = begy * var_poly(cfg, VarKind::Y, i);
    rules.push_back({"y1..yk [x1, y_{k+1}] -> 0",
                     begy * graded_commutator(var_poly(cfg, VarKind::X, 1),
                                              var_poly(cfg, VarKind::Y, k + 1)),
                     zero});
    if (k >= 1) {
      GPolynomial mixed = var_poly(cfg, VarKind::W, 1);
      for (int i = 2; i <= k; ++i) mixed = mixed * var_poly(cfg, VarKind::W, i);
      rules.push_back({"w1..wk [v1, y1] junk -> 0",
                       mixed * graded_commutator(var_poly(cfg, VarKind::V, 1),
                                                 var_poly(cfg, VarKind::Y, 1)),
                       zero});
    }
  }

  for (VarKind k1 : kKinds)
    for (VarKind k2 : kKinds) {
      GPolynomial z1 = var_poly(cfg, k1, 1);
      GPolynomial z2 = var_poly(cfg, k2, 2);
      const int s = kind_z2_parity(k1) * kind_z2_parity(k2);
      std::string pair = std::string(1, kind_letter(k1)) + "1," + kind_letter(k2) + "2";
      // z1 z2 = (-1)^{|1||2|} z2 z1 + [z1, z2]
      GPolynomial lhs = z1 * z2;
      GPolynomial rhs = (s ? -(z2 * z1) : (z2 * z1)) + graded_commutator(z1, z2);
      rules.push_back({"letter swap " + pair, lhs, rhs});
      // [z2, z1] = -(-1)^{|1||2|} [z1, z2]
      GPolynomial sup = graded_commutator(z2, z1);
      GPolynomial sup_rhs = s ? graded_commutator(z1, z2) : -graded_commutator(z1, z2);
      rules.push_back({"supersymmetry " + pair, sup, sup_rhs});
    }

  for (VarKind k1 : kKinds)
    for (VarKind k2 : kKinds)
      for (VarKind k3 : kKinds) {
        GPolynomial b = graded_commutator(var_poly(cfg, k1, 1), var_poly(cfg, k2, 2));
        GPolynomial z = var_poly(cfg, k3, 3);
        const int s = ((kind_z2_parity(k1) + kind_z2_parity(k2)) % 2) * kind_z2_parity(k3);
        std::string name = std::string("centrality [") + kind_letter(k1) + "1," +
                           kind_letter(k2) + "2]" + kind_letter(k3) + "3";
        rules.push_back({name, b * z, s ? -(z * b) : (z * b)});
      }

  for (VarKind k1 : kKinds)
    for (VarKind k2 : kKinds)
      for (VarKind k3 : kKinds)
        for (VarKind k4 : kKinds) {
          GPolynomial lhs = graded_commutator(var_poly(cfg, k1, 1), var_poly(cfg, k2, 2)) *
                            graded_commutator(var_poly(cfg, k3, 3), var_poly(cfg, k4, 4));
          GPolynomial rhs = graded_commutator(var_poly(cfg, k1, 1), var_poly(cfg, k3, 3)) *
                            graded_commutator(var_poly(cfg, k2, 2), var_poly(cfg, k4, 4));
          const int s = kind_z2_parity(k2) * kind_z2_parity(k3);
          std::string name = std::string("middle swap ") + kind_letter(k1) + kind_letter(k2) +
                             kind_letter(k3) + kind_letter(k4);
          rules.push_back({name, lhs, s ? rhs : -rhs});
        }

  for (VarKind kz : kKinds) {
    GPolynomial z = var_poly(cfg, kz, 1);
    GPolynomial lhs = graded_commutator(z, z);
    GPolynomial rhs = kind_z2_parity(kz) ? (z * z).scale(FieldElement::from_int(cfg, 2)) : zero;
    rules.push_back({std::string("[z,z] contraction ") + kind_letter(kz), lhs, rhs});
  }

  return rules;
}

}  // namespace gts
