#include "gts/witness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gts {

VarKind TypeDescriptor::kind() const {
  switch (type_id) {
    case 1: case 2: case 9: case 10: return VarKind::V;
    case 3: case 4: return VarKind::W;
    case 5: case 6: return VarKind::X;
    case 7: case 8: return VarKind::Y;
  }
  throw Error("type descriptor: bad id " + std::to_string(type_id));
}

int TypeDescriptor::high_consumption() const {
  switch (type_id) {
    case 1: case 9: return 2 * t;
    case 2: case 10: return 2 * t - 1;
    case 3: return t;
    case 4: return t - 1;
    case 5: return t;
    case 6: return t + 1;
    case 7: return 0;
    case 8: return 1;
  }
  return 0;
}

int TypeDescriptor::low_consumption() const {
  switch (type_id) {
    case 3: case 4: case 7: case 8: return t;
    default: return 0;
  }
}

int TypeDescriptor::right_consumption() const {
  switch (type_id) {
    case 1: case 2: case 3: case 4: case 9: case 10: return 2 * t;
    default: return t;
  }
}

std::string TypeDescriptor::to_string() const {
  std::ostringstream os;
  os << "type " << type_id << " (j=" << j << ", n=" << n << ", t=" << t << ", k=" << k;
  if (low > 0) os << ", low=" << low;
  if (alpha) os << ", alpha=" << alpha->to_string();
  os << ")";
  return os.str();
}

TensorElement build_type(const TypeDescriptor& d, const FieldConfig& cfg, int nL, int nR) {
  if (d.t < 1) throw Error("type: multiplicity t must be >= 1");
  if (d.j < 0 || d.n < 0 || d.low < 0) throw Error("type: negative offset");
  if (d.type_id == 3 || d.type_id == 4 || d.type_id == 7 || d.type_id == 8) {
    if (d.t > d.k) throw Error("type " + std::to_string(d.type_id) + ": requires t <= k");
    if (d.low + d.t > d.k) throw Error("type: low block exceeds [1,k]");
  }
  if ((d.type_id == 9 || d.type_id == 10) && !d.alpha)
    throw Error("type " + std::to_string(d.type_id) + ": needs alpha");

  TensorElement r(cfg, nL, nR, d.k);
  const FieldElement one = FieldElement::one(cfg);
  const int base = d.j + d.k;  // high left indices start above k
  auto add = [&](std::vector<int> left, std::vector<int> right) {
    r.add_term(TensorBlade{Blade(std::move(left)), Blade(std::move(right))}, one);
  };

  switch (d.type_id) {
    case 1:
      for (int i = 1; i <= d.t; ++i)
        add({base + 2 * i - 1, base + 2 * i}, {d.n + 2 * i - 1, d.n + 2 * i});
      break;
    case 2:
      add({base + 1}, {d.n + 1, d.n + 2});
      for (int i = 1; i <= d.t - 1; ++i)
        add({base + 2 * i, base + 2 * i + 1}, {d.n + 2 * i + 1, d.n + 2 * i + 2});
      break;
    case 3:
      for (int i = 1; i <= d.t; ++i)
        add({d.low + i, base + i}, {d.n + 2 * i - 1, d.n + 2 * i});
      break;
    case 4:
      add({d.low + 1}, {d.n + 1, d.n + 2});
      for (int i = 1; i <= d.t - 1; ++i)
        add({d.low + i + 1, base + i}, {d.n + 2 * i + 1, d.n + 2 * i + 2});
      break;
    case 5:
      for (int i = 1; i <= d.t; ++i) add({base + i}, {d.n + i});
      break;
    case 6:
      add({base + 1, base + 2}, {d.n + 1});
      for (int i = 1; i <= d.t - 1; ++i) add({base + i + 2}, {d.n + i + 1});
      break;
    case 7:
      for (int i = 1; i <= d.t; ++i) add({d.low + i}, {d.n + i});
      break;
    case 8:
      add({d.low + 1, d.k + 1 + d.j}, {d.n + 1});
      for (int i = 1; i <= d.t - 1; ++i) add({d.low + i + 1}, {d.n + i + 1});
      break;
    case 9:
    case 10: {
      TypeDescriptor inner = d;
      inner.type_id = (d.type_id == 9) ? 1 : 2;
      inner.alpha.reset();
      TensorElement unit = TensorElement::unit(cfg, nL, nR, d.k).scale(*d.alpha);
      return unit + build_type(inner, cfg, nL, nR);
    }
    default:
      throw Error("type descriptor: bad id " + std::to_string(d.type_id));
  }
  return r;
}

const std::vector<std::string>& calculus_items() {
  static const std::vector<std::string> items = {"1.1", "2.1", "3.1", "4.1", "5.1", "5.2", "6.1",
                                                 "6.2", "7.1", "7.2", "8.1", "8.2", "9.1", "10.1"};
  return items;
}

namespace {

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Product of the displayed blade factors, computed with the algebra itself so
// signs agree with the engine on both sides of the comparison.
TensorElement displayed_product(const FieldConfig& cfg, int nL, int nR, int k, std::int64_t scalar,
                                const std::vector<std::vector<int>>& left_factors,
                                const std::vector<std::vector<int>>& right_factors) {
  Multivector ml = Multivector::unit(cfg, nL);
  for (const auto& f : left_factors)
    ml = ml * Multivector::single(cfg, nL, Blade(f), FieldElement::one(cfg));
  Multivector mr = Multivector::unit(cfg, nR);
  for (const auto& f : right_factors)
    mr = mr * Multivector::single(cfg, nR, Blade(f), FieldElement::one(cfg));
  return TensorElement::tensor(ml, mr, k).scale(FieldElement::from_int(cfg, scalar));
}

}  // namespace

CalculusResult verify_calculus(const std::string& item, int j, int n, int t, int k,
                               const FieldConfig& cfg) {
  if (t < 1) throw Error("calculus: t must be >= 1");
  if (j < 0 || n < 0) throw Error("calculus: offsets must be >= 0");
  const int p = cfg.p();

  const bool needs_low = (item == "3.1" || item == "4.1" || item == "7.1" || item == "7.2" ||
                          item == "8.1" || item == "8.2");
  if (needs_low && t > k) throw Error("calculus item " + item + ": requires t <= k");
  if (item == "9.1" && t > p - 1)
    throw Error("calculus item 9.1: requires t <= p-1 so t! is a unit");
  if (item == "10.1" && t > p)
    throw Error("calculus item 10.1: requires t <= p so (t-1)! is a unit");

  const int high_span = 2 * t + 2;
  const int aux_left = k + j + high_span + 1;  // fresh high index for the auxiliary blade
  const int nL = aux_left;
  const int nR = n + 2 * t + 2;

  auto type_el = [&](int id, std::optional<FieldElement> alpha = std::nullopt) {
    TypeDescriptor d;
    d.type_id = id;
    d.j = j;
    d.n = n;
    d.t = t;
    d.k = k;
    d.low = 0;
    d.alpha = alpha;
    return build_type(d, cfg, nL, nR);
  };
  const TensorElement aux = TensorElement::single(
      cfg, nL, nR, k, TensorBlade{Blade({aux_left}), Blade()}, FieldElement::one(cfg));

  CalculusResult res{item, false, TensorElement::zero(cfg, nL, nR, k),
                     TensorElement::zero(cfg, nL, nR, k), ""};

  std::vector<std::vector<int>> L, R;
  const int base = j + k;
  auto pair_rights = [&] {
    for (int i = 1; i <= t; ++i) R.push_back({n + 2 * i - 1, n + 2 * i});
  };
  auto single_rights = [&] {
    for (int i = 1; i <= t; ++i) R.push_back({n + i});
  };

  if (item == "1.1") {
    res.lhs = type_el(1).pow(t);
    for (int i = 1; i <= t; ++i) L.push_back({base + 2 * i - 1, base + 2 * i});
    pair_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, factorial(t), L, R);
  } else if (item == "2.1") {
    TensorElement v = type_el(2);
    res.lhs = v.pow(t - 1) * supercommutator(v, aux);
    L.push_back({base + 1});
    for (int i = 1; i <= t - 1; ++i) L.push_back({base + 2 * i, base + 2 * i + 1});
    L.push_back({aux_left});
    pair_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, 2 * factorial(t - 1), L, R);
  } else if (item == "3.1") {
    res.lhs = type_el(3).pow(t);
    for (int i = 1; i <= t; ++i) L.push_back({i, base + i});
    pair_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, factorial(t), L, R);
  } else if (item == "4.1") {
    TensorElement w = type_el(4);
    res.lhs = w.pow(t - 1) * supercommutator(w, aux);
    L.push_back({1});
    for (int i = 1; i <= t - 1; ++i) L.push_back({i + 1, base + i});
    L.push_back({aux_left});
    pair_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, 2 * factorial(t - 1), L, R);
  } else if (item == "5.1") {
    res.lhs = type_el(5).pow(t);
    for (int i = 1; i <= t; ++i) L.push_back({base + i});
    single_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, factorial(t), L, R);
  } else if (item == "5.2") {
    TensorElement x = type_el(5);
    res.lhs = x.pow(t - 1) * supercommutator(x, aux);
    for (int i = 1; i <= t; ++i) L.push_back({base + i});
    L.push_back({aux_left});
    single_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, 2 * factorial(t), L, R);
  } else if (item == "6.1") {
    res.lhs = type_el(6).pow(t);
    if (t % 2 == 1) {
      for (int i = 1; i <= t + 1; ++i) L.push_back({base + i});
      single_rights();
      res.rhs = displayed_product(cfg, nL, nR, k, factorial(t - 1), L, R);
    }  // even t: zero
  } else if (item == "6.2") {
    TensorElement x = type_el(6);
    res.lhs = x.pow(t - 1) * supercommutator(x, aux);
    if (t % 2 == 0) {
      for (int i = 1; i <= t + 1; ++i) L.push_back({base + i});
      L.push_back({aux_left});
      single_rights();
      res.rhs = displayed_product(cfg, nL, nR, k, 2 * factorial(t - 1), L, R);
    }
  } else if (item == "7.1") {
    res.lhs = type_el(7).pow(t);
    for (int i = 1; i <= t; ++i) L.push_back({i});
    single_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, factorial(t), L, R);
  } else if (item == "7.2") {
    TensorElement y = type_el(7);
    res.lhs = y.pow(t - 1) * supercommutator(y, aux);
    for (int i = 1; i <= t; ++i) L.push_back({i});
    L.push_back({aux_left});
    single_rights();
    res.rhs = displayed_product(cfg, nL, nR, k, 2 * factorial(t), L, R);
  } else if (item == "8.1") {
    res.lhs = type_el(8).pow(t);
    if (t % 2 == 1) {
      L.push_back({1, k + 1 + j});
      for (int i = 1; i <= t - 1; ++i) L.push_back({i + 1});
      single_rights();
      res.rhs = displayed_product(cfg, nL, nR, k, factorial(t - 1), L, R);
    }
  } else if (item == "8.2") {
    TensorElement y = type_el(8);
    res.lhs = y.pow(t - 1) * supercommutator(y, aux);
    if (t % 2 == 0) {
      L.push_back({1, k + 1 + j});
      for (int i = 1; i <= t - 1; ++i) L.push_back({i + 1});
      L.push_back({aux_left});
      single_rights();
      res.rhs = displayed_product(cfg, nL, nR, k, 2 * factorial(t - 1), L, R);
    }
  } else if (item == "9.1") {
    TensorElement v = type_el(9, FieldElement::one(cfg));
    res.lhs = g_sum(v.pow(t));
    res.rhs = type_el(1).pow(t);
  } else if (item == "10.1") {
    TensorElement v = type_el(10, FieldElement::one(cfg));
    TensorElement base_v = type_el(2);
    res.lhs = g_sum(v.pow(t - 1) * supercommutator(v, aux));
    res.rhs = base_v.pow(t - 1) * supercommutator(base_v, aux);
  } else {
    throw Error("calculus: unknown item " + item);
  }

  res.pass = (res.lhs == res.rhs);
  if (!res.pass)
    res.note = "left and right sides differ";
  return res;
}

EvaluationMap SuitableAssignment::evaluation_map() const {
  EvaluationMap em;
  em.field = field;
  em.nL = nL;
  em.nR = nR;
  em.k = k;
  for (const auto& [z, d] : types) em.images.emplace(z, build_type(d, *field, nL, nR));
  return em;
}

std::string SuitableAssignment::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [z, d] : types) {
    if (!first) os << "; ";
    os << z.to_string() << ": " << d.to_string();
    first = false;
  }
  return os.str();
}

SuitableAssignment build_suitable(const SseMonomial& u, int k, const FieldConfig& cfg) {
  SuitableAssignment s;
  s.field = &cfg;
  s.k = k;
  int low = 0, high = 0, right = 0;
  for (const GVariable& z : u.variables()) {
    const int t = u.deg_of(z);
    const int e = u.in_brackets(z) ? 1 : 0;
    TypeDescriptor d;
    d.t = t;
    d.k = k;
    switch (z.kind) {
      case VarKind::V: d.type_id = (e == 0) ? 1 : 2; break;
      case VarKind::W: d.type_id = (e == 0) ? 3 : 4; break;
      case VarKind::X:
        d.type_id = (e == 0) ? ((t % 2 == 0) ? 5 : 6) : ((t % 2 == 1) ? 5 : 6);
        break;
      case VarKind::Y:
        d.type_id = (e == 0) ? ((t % 2 == 0) ? 7 : 8) : ((t % 2 == 1) ? 7 : 8);
        break;
    }
    d.j = high;
    d.n = right;
    d.low = low;
    if (d.low_consumption() > 0 && low + d.low_consumption() > k)
      throw Error("suitable assignment: total W∪Y degree of " + u.to_string() +
                  " exceeds k = " + std::to_string(k));
    low += d.low_consumption();
    high += d.high_consumption();
    right += d.right_consumption();
    s.types.emplace_back(z, d);
  }
  s.nL = k + high;
  s.nR = right;
  if (s.nL < 1) s.nL = std::max(1, k);
  if (s.nR < 1) s.nR = 1;
  return s;
}

ApplyOutcome apply_suitable(const SseMonomial& u, const SuitableAssignment& s) {
  ApplyOutcome out{false, FieldElement::zero(*s.field), TensorBlade{}, false, ""};
  EvaluationMap em = s.evaluation_map();
  TensorElement val = substitute(u.expand(*s.field), em);
  if (val.is_zero()) {
    out.detail = "value is zero";
    return out;
  }
  if (val.term_count() != 1) {
    out.detail = "value is not a scalar multiple of a single blade (" +
                 std::to_string(val.term_count()) + " terms)";
    return out;
  }
  const auto& [blade, coeff] = *val.terms().begin();
  out.alpha = coeff;
  out.blade = blade;
  SupportUnion expected;
  for (const auto& [z, img] : em.images) {
    (void)z;
    SupportUnion su = supp_union(img);
    expected.left.insert(su.left.begin(), su.left.end());
    expected.right.insert(su.right.begin(), su.right.end());
  }
  out.complete = (supp_union(val) == expected);
  out.ok = out.complete;
  if (!out.complete) out.detail = "value blade is not complete";
  return out;
}

EvaluationMap associated_hom(const SuitableAssignment& s,
                             const std::map<int, FieldElement>& v_scalars) {
  EvaluationMap em = s.evaluation_map();
  for (auto& [z, img] : em.images) {
    if (z.kind != VarKind::V) continue;
    auto it = v_scalars.find(z.index);
    if (it == v_scalars.end() || it->second.is_zero()) continue;
    img = img + TensorElement::unit(*s.field, s.nL, s.nR, s.k).scale(it->second);
  }
  return em;
}

std::optional<std::vector<FieldElement>> ppoly_scalar_witness(const PPolynomial& f, long budget) {
  const FieldConfig& cfg = f.config();
  const std::vector<int> vars = f.variable_indices();
  const size_t n = vars.size();
  // enumerate all field elements ordered by coefficient vector
  std::vector<FieldElement> elems;
  {
    std::vector<std::int64_t> digits(cfg.m(), 0);
    for (std::int64_t i = 0; i < cfg.q(); ++i) {
      elems.push_back(FieldElement::from_coeffs(cfg, digits));
      for (int d = cfg.m() - 1; d >= 0; --d) {
        if (++digits[d] < cfg.p()) break;
        digits[d] = 0;
      }
    }
  }
  std::vector<size_t> pick(n, 0);
  long tried = 0;
  for (;;) {
    if (++tried > budget) throw Error("scalar witness: search budget exceeded");
    std::map<int, FieldElement> scalars;
    for (size_t i = 0; i < n; ++i) scalars.emplace(vars[i], elems[pick[i]]);
    if (!f.evaluate(scalars).is_zero()) {
      std::vector<FieldElement> tuple;
      for (size_t i = 0; i < n; ++i) tuple.push_back(elems[pick[i]]);
      return tuple;
    }
    // odometer, rightmost fastest (alpha_1 most significant)
    size_t d = n;
    while (d > 0) {
      if (++pick[d - 1] < elems.size()) break;
      pick[d - 1] = 0;
      --d;
    }
    if (d == 0) return std::nullopt;
  }
}

GsumOutcome gsum_check(const SseMonomial& u, const PPolynomial& f, int k) {
  const FieldConfig& cfg = f.config();
  GsumOutcome out{false, FieldElement::zero(cfg), FieldElement::zero(cfg), TensorBlade{}, false, ""};
  if (f.is_zero()) {
    out.detail = "coefficient p-polynomial is zero";
    return out;
  }
  if (!f.is_valid_p_polynomial()) {
    out.detail = "coefficient is not a p-polynomial";
    return out;
  }
  // f may only use u's V-variables
  for (int idx : f.variable_indices()) {
    if (u.deg_of({VarKind::V, idx}) == 0) {
      out.detail = "coefficient uses v" + std::to_string(idx) + " which u does not";
      return out;
    }
  }
  auto tuple = ppoly_scalar_witness(f);
  if (!tuple) {
    out.detail = "no scalar witness: the p-polynomial vanishes on all scalar tuples";
    return out;
  }
  const std::vector<int> vars = f.variable_indices();
  std::map<int, FieldElement> scalars;
  for (size_t i = 0; i < vars.size(); ++i) scalars.emplace(vars[i], (*tuple)[i]);
  out.scalar_value = f.evaluate(scalars);

  SuitableAssignment s = build_suitable(u, k, cfg);
  EvaluationMap psi = associated_hom(s, scalars);
  TensorElement val = substitute(u.expand(cfg), psi);
  if (val.is_zero()) {
    out.detail = "psi(u) is zero";
    return out;
  }
  TensorElement top = g_sum(val);
  if (top.term_count() != 1) {
    out.detail = "g-sum(psi(u)) is not a single blade";
    return out;
  }
  const auto& [blade, coeff] = *top.terms().begin();
  out.beta = coeff;
  out.blade = blade;
  SupportUnion expected;
  EvaluationMap phi = s.evaluation_map();
  for (const auto& [z, img] : phi.images) {
    (void)z;
    SupportUnion su = supp_union(img);
    expected.left.insert(su.left.begin(), su.left.end());
    expected.right.insert(su.right.begin(), su.right.end());
  }
  out.complete = (supp_union(top) == expected);
  out.ok = out.complete;
  if (!out.complete) out.detail = "g-sum blade is not complete";
  return out;
}

namespace {

std::string classify_separation(const SseMonomial& u1, const SseMonomial& ui) {
  if (ui.deg() < u1.deg()) return "case 1";
  std::set<GVariable> all;
  for (const auto& z : u1.variables()) all.insert(z);
  for (const auto& z : ui.variables()) all.insert(z);
  for (const auto& z : all)
    if (u1.deg_of(z) != ui.deg_of(z)) return "case 2";
  // multihomogeneous: compare beg exponents
  bool vw_differ = false, xy_differ = false;
  for (const auto& z : all) {
    if (u1.beg_exponent(z) == ui.beg_exponent(z)) continue;
    if (z.kind == VarKind::V || z.kind == VarKind::W)
      vw_differ = true;
    else
      xy_differ = true;
  }
  if (vw_differ) return "case 3.1";
  if (xy_differ) return "case 3.2.1";
  return "case 3 (degenerate)";
}

}  // namespace

SeparationOutcome separation_check(const SseMonomial& u1, const SseMonomial& ui,
                                   const SuitableAssignment& s) {
  if (sse_compare(ui, u1) != Ordering::Less)
    throw Error("separation: u_i must be strictly smaller than u1 in the SSE order");
  {
    const auto uni = u1.variables();
    for (const auto& z : ui.variables())
      if (std::find(uni.begin(), uni.end(), z) == uni.end())
        throw Error("separation: " + z.to_string() + " does not occur in u1");
  }
  SeparationOutcome out;
  out.case_label = classify_separation(u1, ui);

  ApplyOutcome target = apply_suitable(u1, s);
  if (!target.ok) {
    out.detail = "phi(u1) violation: " + target.detail;
    return out;
  }
  out.target_length = target.blade.support_length();

  std::map<int, FieldElement> ones;
  for (const auto& [z, d] : s.types) {
    (void)d;
    if (z.kind == VarKind::V) ones.emplace(z.index, FieldElement::one(*s.field));
  }
  EvaluationMap psi = associated_hom(s, ones);
  TensorElement val = substitute(ui.expand(*s.field), psi);
  if (val.is_zero()) {
    out.psi_zero = true;
    out.pass = true;
    return out;
  }
  out.value_max_length = max_support_length(val);
  out.pass = out.value_max_length < out.target_length;
  if (!out.pass)
    out.detail = "a summand of psi(u_i) reaches length " + std::to_string(out.value_max_length) +
                 " >= l(a) = " + std::to_string(out.target_length);
  return out;
}

}  // namespace gts
