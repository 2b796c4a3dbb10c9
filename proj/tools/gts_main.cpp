// Command-line frontend: identity verification, normal forms, the calculus
// checks, witness construction, the builtin corpus, dimension counts and
// monomial comparison. Text output by default, JSON with --format json.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "gts/verifier.hpp"
#include "gts/witness.hpp"

using nlohmann::json;

namespace {

struct Options {
  int p = 3;
  int m = 1;
  int k = 2;
  int trunc_left = 10;
  int trunc_right = 10;
  std::uint64_t seed = 0;
  int trials = 500;
  int richness = 4;
  std::string format = "text";
  long max_steps = 1'000'000;

  const gts::FieldConfig& field() const { return gts::FieldConfig::get(p, m); }
  gts::SamplerConfig sampler() const {
    gts::SamplerConfig sc;
    sc.nL = trunc_left;
    sc.nR = trunc_right;
    sc.k = k;
    sc.richness = richness;
    sc.trials = trials;
    sc.seed = seed;
    return sc;
  }
  bool json_out() const { return format == "json"; }
};

json report_to_json(const gts::VerdictReport& rep) {
  json j{{"schema", "1"},
         {"name", rep.name},
         {"poly", rep.poly},
         {"p", rep.p},
         {"q", rep.q},
         {"k", rep.k},
         {"trunc", {rep.nL, rep.nR}},
         {"trials", rep.trials_requested},
         {"trials_run", rep.trials_run},
         {"seed", rep.seed},
         {"verdict", rep.verdict()}};
  if (rep.witness) {
    json w;
    for (const auto& [z, img] : rep.witness->images) w[z.to_string()] = img.to_string();
    j["witness"] = w;
    j["witness_value"] = rep.witness_value;
  }
  return j;
}

void print_report(const gts::VerdictReport& rep, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(rep).dump() << "\n";
    return;
  }
  std::cout << rep.name << ": " << rep.verdict() << " (" << rep.trials_run << "/"
            << rep.trials_requested << " trials, truncation " << rep.nL << "|" << rep.nR
            << ", seed " << rep.seed << "; sampled evidence, not a proof)\n";
  if (rep.witness) {
    std::cout << "  witness: " << rep.witness->to_string() << "\n";
    std::cout << "  value:   " << rep.witness_value << "\n";
  }
}

std::vector<std::string> read_poly_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gts::Error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r\n");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

int cmd_verify(const Options& opt, const std::string& poly, const std::string& file) {
  std::vector<std::string> inputs;
  if (!poly.empty()) inputs.push_back(poly);
  if (!file.empty()) {
    auto lines = read_poly_lines(file);
    inputs.insert(inputs.end(), lines.begin(), lines.end());
  }
  if (inputs.empty()) throw gts::Error("verify: need --poly or --file");
  bool any_counterexample = false;
  for (const auto& text : inputs) {
    gts::GPolynomial f = gts::parse_polynomial(text, opt.field());
    gts::VerdictReport rep = gts::check_identity(f, opt.sampler(), text);
    print_report(rep, opt.json_out());
    any_counterexample = any_counterexample || rep.counterexample;
  }
  return any_counterexample ? 1 : 0;
}

int cmd_nf(const Options& opt, const std::string& poly) {
  gts::GPolynomial f = gts::parse_polynomial(poly, opt.field());
  gts::ReduceConfig rc{opt.k, opt.max_steps};
  gts::NormalForm nf = gts::sse_reduce(f, rc);
  std::string lt = nf.summands.empty() ? "" : gts::leading_term(nf).to_string();
  if (opt.json_out()) {
    json j{{"schema", "1"}, {"input", poly}, {"p", opt.p}, {"q", opt.field().q()}, {"k", opt.k}};
    j["nf"] = nf.to_string();
    j["f0"] = nf.f0.to_string();
    json summands = json::array();
    for (const auto& [fi, ui] : nf.summands)
      summands.push_back(json{{"coeff", fi.to_string()}, {"monomial", ui.to_string()}});
    j["summands"] = summands;
    if (!lt.empty()) j["lt"] = lt;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << nf.to_string() << "\n";
    if (!lt.empty()) std::cout << "LT = " << lt << "\n";
  }
  return 0;
}

int cmd_calculus(const Options& opt, const std::string& item, int j, int n, int t) {
  gts::CalculusResult res = gts::verify_calculus(item, j, n, t, opt.k, opt.field());
  if (opt.json_out()) {
    json out{{"schema", "1"},
             {"item", res.item},
             {"params", {{"j", j}, {"n", n}, {"t", t}, {"k", opt.k}, {"p", opt.p}}},
             {"lhs", res.lhs.to_string()},
             {"rhs", res.rhs.to_string()},
             {"verdict", res.pass ? "pass" : "fail"}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "item " << res.item << " (j=" << j << ", n=" << n << ", t=" << t
              << ", k=" << opt.k << ", p=" << opt.p << "): " << (res.pass ? "pass" : "FAIL")
              << "\n  lhs = " << res.lhs.to_string() << "\n  rhs = " << res.rhs.to_string()
              << "\n";
  }
  return res.pass ? 0 : 1;
}

int cmd_witness(const Options& opt, const std::string& poly) {
  gts::SseMonomial u = gts::parse_sse_monomial(poly);
  if (auto why = u.sse_violation(opt.p, opt.k))
    throw gts::Error("witness: input is not a normal-form monomial: " + *why);
  gts::SuitableAssignment s = gts::build_suitable(u, opt.k, opt.field());
  gts::ApplyOutcome out = gts::apply_suitable(u, s);
  if (opt.json_out()) {
    json j{{"schema", "1"},
           {"u", u.to_string()},
           {"assignment", s.to_string()},
           {"alpha", out.alpha.to_string()},
           {"blade", out.blade.to_string()},
           {"complete", out.complete},
           {"verdict", out.ok ? "pass" : "fail"}};
    if (!out.detail.empty()) j["detail"] = out.detail;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "u = " << u.to_string() << "\n";
    std::cout << "assignment: " << s.to_string() << "\n";
    if (out.ok)
      std::cout << "phi(u) = " << out.alpha.to_string() << " * " << out.blade.to_string()
                << (out.complete ? " (complete)" : "") << "\n";
    else
      std::cout << "violation: " << out.detail << "\n";
  }
  return out.ok ? 0 : 1;
}

int cmd_corpus(const Options& opt) {
  auto corpus = gts::corpus_builtin(opt.field(), opt.k);
  bool any_counterexample = false;
  for (const auto& [name, f] : corpus) {
    gts::VerdictReport rep = gts::check_identity(f, opt.sampler(), name);
    print_report(rep, opt.json_out());
    any_counterexample = any_counterexample || rep.counterexample;
  }
  if (!opt.json_out())
    std::cout << (any_counterexample ? "corpus: counterexamples found" : "corpus: all clear")
              << "\n";
  return any_counterexample ? 1 : 0;
}

int cmd_dim(const Options& opt, int m) {
  const std::int64_t d = gts::sse_dimension(m, opt.p, opt.field().q(), opt.k);
  if (opt.json_out()) {
    json j{{"schema", "1"}, {"m", m},       {"p", opt.p},
           {"q", opt.field().q()}, {"k", opt.k}, {"dimension", d}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "dimension bound in " << m << " variables of each kind: " << d << "\n";
  }
  return 0;
}

int cmd_compare(const Options& opt, const std::string& m1, const std::string& m2) {
  gts::SseMonomial a = gts::parse_sse_monomial(m1);
  gts::SseMonomial b = gts::parse_sse_monomial(m2);
  gts::Ordering ord = gts::sse_compare(a, b);
  const char* text = ord == gts::Ordering::Less ? "Less"
                     : ord == gts::Ordering::Greater ? "Greater"
                                                     : "Equal";
  if (opt.json_out()) {
    json j{{"schema", "1"}, {"m1", a.to_string()}, {"m2", b.to_string()}, {"result", text}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact computer algebra for graded Grassmann tensor squares"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--p", opt.p, "field characteristic (odd prime)");
  app.add_option("--m", opt.m, "field extension degree");
  app.add_option("--k", opt.k, "number of k-star-odd generators");
  app.add_option("--trunc-left", opt.trunc_left, "left factor truncation");
  app.add_option("--trunc-right", opt.trunc_right, "right factor truncation");
  app.add_option("--seed", opt.seed, "master seed");
  app.add_option("--trials", opt.trials, "sampled trials per polynomial");
  app.add_option("--richness", opt.richness, "max blades per sampled element");
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-steps", opt.max_steps, "rewrite step budget");

  std::string poly, file, item, m1, m2;
  int jj = 0, nn = 0, tt = 1, mm = 1;

  CLI::App* verify = app.add_subcommand("verify", "sampled identity check of a polynomial");
  verify->add_option("--poly", poly, "inline polynomial");
  verify->add_option("--file", file, "file with one polynomial per line, # comments");

  CLI::App* nf = app.add_subcommand("nf", "structured normal form of a polynomial");
  nf->add_option("--poly", poly, "inline polynomial")->required();

  CLI::App* calculus = app.add_subcommand("calculus", "closed-form power/bracket checks");
  calculus->add_option("--item", item, "item id, e.g. 5.1")->required();
  calculus->add_option("--j", jj, "left index offset");
  calculus->add_option("--n", nn, "right index offset");
  calculus->add_option("--t", tt, "multiplicity");

  CLI::App* witness = app.add_subcommand("witness", "suitable assignment and evaluation");
  witness->add_option("--poly", poly, "normal-form monomial")->required();

  app.add_subcommand("corpus", "run the builtin identity corpus");

  CLI::App* dim = app.add_subcommand("dim", "spanning-set size of the relatively free algebra");
  dim->add_option("--m", mm, "variables per kind")->required();

  CLI::App* compare = app.add_subcommand("compare", "compare two normal-form monomials");
  compare->add_option("--m1", m1, "first monomial")->required();
  compare->add_option("--m2", m2, "second monomial")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, poly, file);
    if (nf->parsed()) return cmd_nf(opt, poly);
    if (calculus->parsed()) return cmd_calculus(opt, item, jj, nn, tt);
    if (witness->parsed()) return cmd_witness(opt, poly);
    if (app.get_subcommand("corpus")->parsed()) return cmd_corpus(opt);
    if (dim->parsed()) return cmd_dim(opt, mm);
    if (compare->parsed()) return cmd_compare(opt, m1, m2);
  } catch (const gts::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
