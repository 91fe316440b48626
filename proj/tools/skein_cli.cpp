// Command line front end.  Exit codes: 0 pass, 1 check failure, 2 usage or
// parse error.

#include <CLI11.hpp>

#include <iostream>
#include <regex>

#include "skein/annulus.hpp"
#include "skein/bracket.hpp"
#include "skein/certificate.hpp"
#include "skein/expr.hpp"
#include "skein/json_io.hpp"
#include "skein/suite.hpp"

using namespace skein;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

Vec2 parse_vec(const std::string& text) {
  static const std::regex re(R"(^\s*[\(\[]?\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*[\)\]]?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw DomainError("expected a vector like 1,-2 but got '" + text + "'");
  try {
    return Vec2{std::stoll(m[1]), std::stoll(m[2])};
  } catch (const std::out_of_range&) {
    throw DomainError("vector entry out of range in '" + text + "'");
  }
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("expected a partition like 3,1,1 but got '" + text + "'");
    }
  }
  return parts;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string describe(const Certificate& c, const std::string& indent = "") {
  std::string out = indent + "(" + to_string(c.x) + ", " + to_string(c.y) + ") ";
  if (const auto* b = std::get_if<BaseNode>(&c.node)) return out + to_string(b->kind) + "\n";
  const auto& s = std::get<SplitNode>(c.node);
  out += "split a=" + to_string(s.a) + " b=" + to_string(s.b) + "\n";
  for (const auto& k : s.children) out += describe(k, indent + "  ");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Kauffman skein algebra of the torus"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int status = kPass;

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  std::string nf_expr, nf_ctx = "torus";
  nf->add_option("expr", nf_expr)->required();
  nf->add_option("--context", nf_ctx)->check(CLI::IsMember({"torus", "annulus", "bracket"}));
  nf->callback([&] {
    const Value v = evaluate(nf_expr, context_from_string(nf_ctx));
    emit(opt, to_json(v), to_string(v));
  });

  auto* comm = app.add_subcommand("comm", "Commutator [D_x, D_y] against the presentation relation");
  std::string cx, cy;
  comm->add_option("x", cx)->required();
  comm->add_option("y", cy)->required();
  comm->callback([&] {
    const CurveClass x = CurveClass::canonicalize(parse_vec(cx)), y = CurveClass::canonicalize(parse_vec(cy));
    const SkeinElement c = commutator(generator(x), generator(y));
    const SkeinElement rhs = relation_rhs(x, y);
    const bool ok = c == rhs;
    emit(opt, {{"commutator", to_json(c)}, {"relation_rhs", to_json(rhs)}, {"matches", ok}},
         c.to_string() + (ok ? "" : "\nmismatch with relation: " + rhs.to_string()));
    if (!ok) status = kCheckFailed;
  });

  auto* certify = app.add_subcommand("certify", "Build and validate a certificate for the pair (x, y)");
  std::string kx, ky, emit_kind;
  certify->add_option("x", kx)->required();
  certify->add_option("y", ky)->required();
  certify->add_option("--emit", emit_kind, "Print the full certificate")->check(CLI::IsMember({"json", "tree"}));
  certify->callback([&] {
    const Vec2 x = parse_vec(kx), y = parse_vec(ky);
    const Certificate c = build_certificate(x, y);
    const ValidationResult r = check_certificate(c);
    if (!r.ok) status = kCheckFailed;
    Json summary = {{"x", to_json(x)},
                    {"y", to_json(y)},
                    {"valid", r.ok},
                    {"depth", depth(c)},
                    {"nodes", node_count(c)},
                    {"strictly_decreasing", strictly_decreasing(c)}};
    if (!r.ok) summary["failure"] = r.path + ": " + r.reason;
    if (emit_kind == "json") {
      summary["certificate"] = to_json(c);
      std::cout << summary.dump(2) << "\n";
      return;
    }
    std::string text = std::string(r.ok ? "valid" : "INVALID (" + r.path + ": " + r.reason + ")") +
                       " certificate, depth " + std::to_string(depth(c)) + ", " + std::to_string(node_count(c)) +
                       " nodes";
    if (emit_kind == "tree") text += "\n" + describe(c);
    emit(opt, summary, text);
  });

  auto* project = app.add_subcommand("project", "D_{(a,b)} applied to the empty link in the annulus");
  std::int64_t pa = 0, pb = 0;
  project->add_option("a", pa)->required();
  project->add_option("b", pb)->required();
  project->callback([&] {
    const AnnulusElement e = project_empty({pa, pb});
    emit(opt, to_json(e), e.to_string());
  });

  auto* eig = app.add_subcommand("eig", "Eigenvalue of D_{1,0} on the closed idempotent of a partition");
  std::string part;
  eig->add_option("partition", part, "Comma separated parts, e.g. 3,1,1")->required();
  eig->callback([&] {
    const Partition lam(parse_partition(part));
    const RatFunc ev = meridian_eigenvalue(lam);
    Json j = {{"partition", lam.parts()}, {"eigenvalue", to_json(ev)}};
    std::string text = ev.to_string();
    const auto& p = lam.parts();
    const bool is_hook = !p.empty() && std::all_of(p.begin() + 1, p.end(), [](int x) { return x == 1; });
    if (is_hook) {
      const Hook h{p[0] - 1, static_cast<int>(p.size()) - 1};
      const bool ok = hook_eigenvalue_closed_form(h) == ev;
      j["hook_closed_form_matches"] = ok;
      if (!ok) {
        status = kCheckFailed;
        text += "\nhook closed form disagrees";
      }
    }
    emit(opt, j, text);
  });

  auto* chebc = app.add_subcommand("cheb", "Chebyshev polynomial T_n or S_n");
  int cn = 0;
  std::string kind = "T";
  chebc->add_option("n", cn)->required()->check(CLI::NonNegativeNumber);
  chebc->add_option("--kind", kind)->check(CLI::IsMember({"T", "S"}));
  chebc->callback([&] {
    const ChebPoly p = cheb(cn, kind == "T" ? ChebKind::T : ChebKind::S);
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
    emit(opt, {{"kind", kind}, {"n", cn}, {"coeffs", coeffs}}, p.to_string());
  });

  auto* mapb = app.add_subcommand("map-bracket", "Image of a torus expression in the bracket algebra");
  std::string mexpr;
  mapb->add_option("expr", mexpr)->required();
  mapb->callback([&] {
    const Value v = evaluate(mexpr, Context::torus);
    const BracketElement b = phi_map(std::get<SkeinElement>(v));
    emit(opt, to_json(b), b.to_string());
  });

  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool timings = false;
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", seed);
  verify->add_flag("--timings", timings, "Include per-check timings (makes output run-dependent)");
  verify->callback([&] {
    const SuiteReport r = run_suite(suite, seed);
    if (opt.json()) {
      Json j = r.to_json(timings);
      j["suite"] = suite;
      j["seed"] = seed;
      j["prng"] = "splitmix64";
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "suite " << suite << ", seed " << seed << ", prng splitmix64\n" << r.to_text(timings);
    }
    if (!r.ok()) status = kCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return status;
}
