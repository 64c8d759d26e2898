#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hfischer/verify.hpp"

namespace hfischer::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

CliffordPoly load_poly(const std::string& path, std::istream& in) {
  return poly_from_json(parse_json_text(read_input(path, in), path == "-" ? "stdin" : path));
}

void emit(const Json& j, const std::string& output, std::ostream& out) {
  const std::string text = dump(j);
  if (output.empty() || output == "-") {
    out << text;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + output);
  file << text;
}

GradeSet parse_grades(const std::string& text, int m) {
  std::vector<int> grades;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int s = -1;
    try {
      s = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || s < 0 || s > m) {
      throw UsageError("--S expects comma-separated grades in [0, " + std::to_string(m) + "], got \"" + text + "\"");
    }
    grades.push_back(s);
  }
  if (grades.empty()) throw UsageError("--S must name at least one grade");
  return GradeSet::of(grades);
}

struct BasisArgs {
  std::string kind;
  int m = 0;
  int s = -1;
  std::string grades;
  int k = 0;
  std::string output;
};

int run_basis(const BasisArgs& a, std::ostream& out) {
  check_dimension(a.m);
  const SpaceKind kind = parse_space_kind(a.kind);
  GradeSet grades;
  if (!a.grades.empty()) {
    grades = parse_grades(a.grades, a.m);
  } else if (a.s >= 0) {
    if (a.s > a.m) throw UsageError("--s must lie in [0, m]");
    grades = GradeSet::single(a.s);
  } else if (kind == SpaceKind::MonoLeft || kind == SpaceKind::MonoRight || kind == SpaceKind::TwoSided) {
    grades = GradeSet::full(a.m);
  } else {
    throw UsageError("--kind " + a.kind + " needs --s or --S");
  }
  if (a.k < 0 || a.k > kMaxDegree) throw UsageError("--k must lie in [0, " + std::to_string(kMaxDegree) + "]");
  const SubspaceBasis& basis = space_basis(kind, a.m, grades, a.k);
  Json basis_json = Json::array();
  for (const auto& v : basis.vectors()) basis_json.push_back(to_json(v));
  emit(Json{{"kind", space_kind_name(kind)},
            {"m", a.m},
            {"S", grades.grades()},
            {"k", a.k},
            {"dim", basis.dim()},
            {"basis", std::move(basis_json)}},
       a.output, out);
  return kExitOk;
}

struct ApplyArgs {
  std::string op;
  std::string word;
  std::string input = "-";
  std::string output;
};

int run_apply(const ApplyArgs& a, std::istream& in, std::ostream& out) {
  if (a.op.empty() == a.word.empty()) throw UsageError("apply needs exactly one of --op and --word");
  const CliffordPoly p = load_poly(a.input, in);
  CliffordPoly result(p.dimension());
  if (!a.word.empty()) {
    result = word_apply(OmegaWord::parse(a.word), p);
  } else {
    result = apply(derived_operator(a.op), p);
  }
  emit(to_json(result), a.output, out);
  return kExitOk;
}

struct DecomposeArgs {
  std::string theorem;
  std::string input = "-";
  std::string mode;
  std::string grades;
  std::string side = "left";
  std::string output;
};

int run_decompose(const DecomposeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const CliffordPoly p = load_poly(a.input, in);
  const int m = p.dimension();
  if (a.side != "left" && a.side != "right") throw UsageError("--side must be left or right");
  DecomposeRequest request{a.theorem, a.mode, std::nullopt, a.side == "left" ? MonogenicSide::Left : MonogenicSide::Right};
  if (!a.grades.empty()) request.grades = parse_grades(a.grades, m);
  const DecompositionResult result = decompose_named(p, request);
  Json j = to_json(result);
  emit(Json{{"theorem", a.theorem}, {"result", std::move(j)}}, a.output, out);
  if (!result.exact()) {
    err << "input is not contained in the decomposed space; see residual\n";
    return kExitViolation;
  }
  return kExitOk;
}

struct VerifyArgs {
  int m = 3;
  int k_max = 4;
  std::string theorems = "all";
  double budget = -1;
  std::uint64_t seed = kDefaultSeed;
  int samples = 2;
  unsigned threads = 0;
  std::string output;
};

double default_budget() {
  if (const char* env = std::getenv("HFISCHER_BUDGET_SECONDS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0) return v;
    throw UsageError("HFISCHER_BUDGET_SECONDS must be a non-negative number");
  }
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.m = a.m;
  options.k_max = a.k_max;
  options.theorems.clear();
  std::stringstream ss(a.theorems);
  std::string item;
  while (std::getline(ss, item, ',')) options.theorems.push_back(item);
  options.budget_seconds = a.budget >= 0 ? a.budget : default_budget();
  options.seed = a.seed;
  options.samples = a.samples;
  options.threads = a.threads;
  VerifyOutcome outcome;
  try {
    outcome = verify_report(options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(to_json(outcome), a.output, out);
  if (outcome.failures() > 0) {
    err << outcome.failures() << " certification(s) failed\n";
    return kExitViolation;
  }
  if (outcome.budget_exceeded) {
    err << "budget exceeded; " << outcome.skipped << " certification(s) skipped\n";
    return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fischer decompositions for Clifford-algebra-valued polynomials", "hfischer"};
  app.require_subcommand(1);

  BasisArgs basis;
  auto* basis_cmd = app.add_subcommand("basis", "Canonical basis of a polynomial solution space");
  basis_cmd->add_option("--kind", basis.kind, "hodge|harmonic|infra|mono-left|mono-right|two-sided|mono-S")
      ->required();
  basis_cmd->add_option("--m", basis.m, "Dimension of R^m")->required();
  basis_cmd->add_option("--s", basis.s, "Grade");
  basis_cmd->add_option("--S", basis.grades, "Grade set, e.g. 1,3");
  basis_cmd->add_option("--k", basis.k, "Polynomial degree")->required();
  basis_cmd->add_option("--output", basis.output, "Output file (default stdout)");

  ApplyArgs apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator or an Omega-word to a polynomial");
  apply_cmd->add_option("--op", apply_args.op, "Operator name, e.g. laplacian or X-tilde");
  apply_cmd->add_option("--word", apply_args.word, "Word in w (x^) and d (x.), rightmost acts first");
  apply_cmd->add_option("--input", apply_args.input, "Polynomial JSON file, - for stdin");
  apply_cmd->add_option("--output", apply_args.output, "Output file (default stdout)");

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Split a polynomial along a decomposition");
  dec_cmd->add_option("--theorem", dec.theorem, "h|homma|monogenic|mt|infra|infra-harmonic|classical")->required();
  dec_cmd->add_option("--input", dec.input, "Polynomial JSON file, - for stdin");
  dec_cmd->add_option("--mode", dec.mode, "harmonic|monogenic|infra (classical only)");
  dec_cmd->add_option("--S", dec.grades, "Grade set for monogenic / mt, e.g. 1,3");
  dec_cmd->add_option("--side", dec.side, "left|right (monogenic / mt)");
  dec_cmd->add_option("--output", dec.output, "Output file (default stdout)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Certify the decompositions over a bigrade sweep");
  ver_cmd->add_option("--m", ver.m, "Dimension of R^m")->required();
  ver_cmd->add_option("--kmax", ver.k_max, "Largest degree")->required();
  ver_cmd->add_option("--theorems", ver.theorems, "Comma-separated selection or all");
  ver_cmd->add_option("--budget-seconds", ver.budget,
                      "Time budget; default from HFISCHER_BUDGET_SECONDS, 0 for none");
  ver_cmd->add_option("--seed", ver.seed, "Seed for random round trips");
  ver_cmd->add_option("--samples", ver.samples, "Random round trips per bigrade")->check(CLI::Range(0, 1000));
  ver_cmd->add_option("--threads", ver.threads, "Worker threads (0 = hardware)");
  ver_cmd->add_option("--output", ver.output, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (basis_cmd->parsed()) return run_basis(basis, out);
    if (apply_cmd->parsed()) return run_apply(apply_args, in, out);
    if (dec_cmd->parsed()) return run_decompose(dec, in, out, err);
    return run_verify(ver, out, err);
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    if (e.witness()) err << "witness: " << to_json(*e.witness()).dump() << "\n";
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hfischer::cli
