#include "gts/verifier.hpp"

#include <algorithm>

namespace gts {

void SamplerConfig::validate() const {
  if (nL < k) throw Error("sampler: left truncation must be >= k");
  if (richness < 1) throw Error("sampler: richness must be >= 1");
  if (trials < 1) throw Error("sampler: trials must be >= 1");
}

namespace {

// Small blade sizes dominate; larger ones appear occasionally.
int sample_size(int n, SplitMix64& rng) {
  static const int weights[] = {2, 5, 5, 3, 1, 1};
  const int max_size = std::min(n, 5);
  int total = 0;
  for (int s = 0; s <= max_size; ++s) total += weights[s];
  int roll = static_cast<int>(rng.below(total));
  for (int s = 0; s <= max_size; ++s) {
    roll -= weights[s];
    if (roll < 0) return s;
  }
  return 0;
}

Blade sample_blade(int n, SplitMix64& rng) {
  const int size = sample_size(n, rng);
  std::vector<int> idx;
  while (static_cast<int>(idx.size()) < size) {
    int i = static_cast<int>(rng.below(n)) + 1;
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return Blade(idx);
}

FieldElement nonzero_coefficient(const FieldConfig& cfg, SplitMix64& rng) {
  for (;;) {
    std::vector<std::int64_t> c(cfg.m());
    for (int i = 0; i < cfg.m(); ++i) c[i] = static_cast<std::int64_t>(rng.below(cfg.p()));
    FieldElement e = FieldElement::from_coeffs(cfg, c);
    if (!e.is_zero()) return e;
  }
}

}  // namespace

TensorElement sample_homogeneous(const Bidegree& d, const FieldConfig& cfg,
                                 const SamplerConfig& sc, SplitMix64& rng) {
  sc.validate();
  if (d.e1 == 1 && sc.k == 0)
    throw Error("sampler: no blades of bidegree " + d.to_string() + " exist when k = 0");
  TensorElement r = TensorElement::zero(cfg, sc.nL, sc.nR, sc.k);
  const int want = 1 + static_cast<int>(rng.below(sc.richness));
  int produced = 0;
  long attempts = 0;
  while (produced < want) {
    if (++attempts > 2000)
      throw Error("sampler: could not draw blades of bidegree " + d.to_string());
    Blade left = sample_blade(sc.nL, rng);
    Blade right = sample_blade(sc.nR, rng);
    if (kstar_parity(left, sc.k) != d.e1 || canonical_parity(right) != d.e2) continue;
    TensorBlade tb{left, right};
    if (!r.coeff(tb).is_zero()) continue;
    r.add_term(tb, nonzero_coefficient(cfg, rng));
    ++produced;
  }
  return r;
}

Multivector sample_multivector(const FieldConfig& cfg, int n, int richness, SplitMix64& rng,
                               bool zero_scalar_term) {
  Multivector r(cfg, n);
  const int want = 1 + static_cast<int>(rng.below(richness));
  int produced = 0;
  long attempts = 0;
  while (produced < want && attempts < 2000) {
    ++attempts;
    Blade b = sample_blade(n, rng);
    if (zero_scalar_term && b.is_unit()) continue;
    if (!r.coeff(b).is_zero()) continue;
    r.add_term(b, nonzero_coefficient(cfg, rng));
    ++produced;
  }
  return r;
}

VerdictReport check_identity(const GPolynomial& f, const SamplerConfig& sc,
                             const std::string& name) {
  sc.validate();
  const FieldConfig& cfg = f.config();
  VerdictReport rep;
  rep.name = name.empty() ? f.to_string() : name;
  rep.poly = f.to_string();
  rep.p = cfg.p();
  rep.q = cfg.q();
  rep.k = sc.k;
  rep.nL = sc.nL;
  rep.nR = sc.nR;
  rep.trials_requested = sc.trials;
  rep.seed = sc.seed;

  const std::vector<GVariable> vars = f.variables();
  for (int trial = 0; trial < sc.trials; ++trial) {
    SplitMix64 rng(sc.seed ^ (0x51ed2701ULL + 0x9e3779b9ULL * static_cast<std::uint64_t>(trial)));
    EvaluationMap em;
    em.field = &cfg;
    em.nL = sc.nL;
    em.nR = sc.nR;
    em.k = sc.k;
    for (const auto& z : vars)
      em.images.emplace(z, sample_homogeneous(kind_bidegree(z.kind), cfg, sc, rng));
    TensorElement val = substitute(f, em);
    ++rep.trials_run;
    if (!val.is_zero()) {
      rep.counterexample = true;
      rep.witness = em;
      rep.witness_value = val.to_string();
      return rep;
    }
  }
  return rep;
}

std::vector<std::pair<std::string, GPolynomial>> corpus_builtin(const FieldConfig& cfg, int k) {
  const int p = cfg.p();
  const std::int64_t pq = static_cast<std::int64_t>(p) * cfg.q();
  std::vector<std::pair<std::string, GPolynomial>> out;
  const VarKind kinds[4] = {VarKind::V, VarKind::W, VarKind::X, VarKind::Y};
  auto var = [&](VarKind kk, int idx) { return GPolynomial::variable(cfg, {kk, idx}); };

  out.emplace_back("family 1: w1^p", var(VarKind::W, 1).pow(p));

  for (VarKind kz : kinds) {
    std::string zs = std::string(1, kind_letter(kz)) + "2";
    out.emplace_back("family 2: x1^p " + zs + " w3",
                     var(VarKind::X, 1).pow(p) * var(kz, 2) * var(VarKind::W, 3));
  }
  for (VarKind kz : kinds) {
    std::string zs = std::string(1, kind_letter(kz)) + "2";
    out.emplace_back("family 3: y1^p " + zs + " y3",
                     var(VarKind::Y, 1).pow(p) * var(kz, 2) * var(VarKind::Y, 3));
  }
  for (VarKind kz : kinds) {
    std::string zs = std::string(1, kind_letter(kz)) + "2";
    out.emplace_back("family 4: x1^{p-1}[x1," + zs + "]",
                     var(VarKind::X, 1).pow(p - 1) *
                         graded_commutator(var(VarKind::X, 1), var(kz, 2)));
  }
  for (VarKind kz : kinds) {
    std::string zs = std::string(1, kind_letter(kz)) + "2";
    out.emplace_back("family 5: y1^{p-1}[y1," + zs + "]",
                     var(VarKind::Y, 1).pow(p - 1) *
                         graded_commutator(var(VarKind::Y, 1), var(kz, 2)));
  }
  for (VarKind k1 : kinds)
    for (VarKind k2 : kinds)
      for (VarKind k3 : kinds) {
        std::string name = std::string("family 6: [") + kind_letter(k1) + "1," + kind_letter(k2) +
                           "2," + kind_letter(k3) + "3]";
        out.emplace_back(name, left_normed_commutator({var(k1, 1), var(k2, 2), var(k3, 3)}));
      }
  for (std::uint32_t mask = 0; mask < (1u << (k + 1)); ++mask) {
    GPolynomial w = GPolynomial::unit(cfg);
    std::string name = "family 7: ";
    int wn = 0, yn = 0;
    for (int i = 0; i <= k; ++i) {
      VarKind kz = (mask & (1u << i)) ? VarKind::Y : VarKind::W;
      int idx = (kz == VarKind::W) ? ++wn : ++yn;
      w = w * var(kz, idx);
      name += kind_letter(kz) + std::to_string(idx);
    }
    out.emplace_back(name, w);
  }
  out.emplace_back("v1^{pq} - v1^p",
                   var(VarKind::V, 1).pow(static_cast<std::uint64_t>(pq)) -
                       var(VarKind::V, 1).pow(p));
  out.emplace_back("x1^{p+1}", var(VarKind::X, 1).pow(p + 1));
  out.emplace_back("y1^{p+1}", var(VarKind::Y, 1).pow(p + 1));
  return out;
}

std::vector<VerdictReport> check_grassmann_props(const FieldConfig& cfg, int n, int richness,
                                                 int trials, std::uint64_t seed) {
  const int p = cfg.p();
  const std::int64_t pq = static_cast<std::int64_t>(p) * cfg.q();
  std::vector<VerdictReport> out;

  auto make_report = [&](const std::string& name) {
    VerdictReport rep;
    rep.name = name;
    rep.poly = name;
    rep.p = p;
    rep.q = cfg.q();
    rep.k = 0;
    rep.nL = n;
    rep.nR = 0;
    rep.trials_requested = trials;
    rep.seed = seed;
    return rep;
  };

  {
    VerdictReport rep = make_report("t^p on the non-unital part");
    for (int trial = 0; trial < trials && !rep.counterexample; ++trial) {
      SplitMix64 rng(seed ^ (0xa0761d65ULL + 0x9e3779b9ULL * static_cast<std::uint64_t>(trial)));
      Multivector b = sample_multivector(cfg, n, richness, rng, /*zero_scalar_term=*/true);
      ++rep.trials_run;
      if (!b.pow(p).is_zero()) {
        rep.counterexample = true;
        rep.witness_value = b.to_string();
      }
    }
    out.push_back(rep);
  }
  {
    VerdictReport rep = make_report("(a*1 + b)^p = a^p * 1");
    for (int trial = 0; trial < trials && !rep.counterexample; ++trial) {
      SplitMix64 rng(seed ^ (0xe7037ed1ULL + 0x9e3779b9ULL * static_cast<std::uint64_t>(trial)));
      Multivector b = sample_multivector(cfg, n, richness, rng, /*zero_scalar_term=*/true);
      FieldElement a = nonzero_coefficient(cfg, rng);
      Multivector full = Multivector::scalar(cfg, n, a) + b;
      Multivector expected = Multivector::scalar(cfg, n, a.pow(p));
      ++rep.trials_run;
      if (full.pow(p) != expected) {
        rep.counterexample = true;
        rep.witness_value = full.to_string();
      }
    }
    out.push_back(rep);
  }
  {
    VerdictReport rep = make_report("t^{pq} - t^p");
    for (int trial = 0; trial < trials && !rep.counterexample; ++trial) {
      SplitMix64 rng(seed ^ (0x8ebc6af1ULL + 0x9e3779b9ULL * static_cast<std::uint64_t>(trial)));
      Multivector a = sample_multivector(cfg, n, richness, rng);
      ++rep.trials_run;
      if (a.pow(static_cast<std::uint64_t>(pq)) != a.pow(p)) {
        rep.counterexample = true;
        rep.witness_value = a.to_string();
      }
    }
    out.push_back(rep);
  }
  {
    VerdictReport rep = make_report("t^2 (not an identity)");
    for (int trial = 0; trial < trials && !rep.counterexample; ++trial) {
      SplitMix64 rng(seed ^ (0x589965cdULL + 0x9e3779b9ULL * static_cast<std::uint64_t>(trial)));
      Multivector a = sample_multivector(cfg, n, richness, rng);
      ++rep.trials_run;
      if (!a.pow(2).is_zero()) {
        rep.counterexample = true;
        rep.witness_value = a.to_string();
      }
    }
    out.push_back(rep);
  }
  return out;
}

}  // namespace gts
