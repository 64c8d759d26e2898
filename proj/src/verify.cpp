#include "hfischer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

namespace hfischer {

namespace {

CliffordPoly times_norm_squared(const CliffordPoly& p) {
  CliffordPoly out(p.dimension());
  for (int j = 1; j <= p.dimension(); ++j) out += p.times_variable(j).times_variable(j);
  return out;
}

CliffordPoly zero_map(const CliffordPoly& p) { return CliffordPoly(p.dimension()); }

}  // namespace

std::vector<OperatorIdentity> anticommutator_relations() {
  using ops::dminus;
  using ops::dplus;
  using ops::xdot;
  using ops::xwedge;
  const auto anti = &OperatorSpec::anticommutator;
  return {
      {"{dplus,dplus}=0", anti(dplus(), dplus()), zero_map},
      {"{dminus,dminus}=0", anti(dminus(), dminus()), zero_map},
      {"{dplus,dminus}=-laplacian", anti(dplus(), dminus()),
       [](const CliffordPoly& p) { return -by_definition::laplacian(p); }},
      {"{xwedge,xwedge}=0", anti(xwedge(), xwedge()), zero_map},
      {"{xdot,xdot}=0", anti(xdot(), xdot()), zero_map},
      {"{xwedge,xdot}=-|x|^2", anti(xwedge(), xdot()), [](const CliffordPoly& p) { return -times_norm_squared(p); }},
      {"{xdot,dplus}=-A", anti(xdot(), dplus()),
       [](const CliffordPoly& p) { return -(by_definition::euler(p) + by_definition::ferm_plus(p)); }},
      {"{xwedge,dminus}=-B", anti(xwedge(), dminus()),
       [](const CliffordPoly& p) { return -(by_definition::euler(p) + by_definition::ferm_minus(p)); }},
      {"{xdot,dminus}=0", anti(xdot(), dminus()), zero_map},
      {"{xwedge,dplus}=0", anti(xwedge(), dplus()), zero_map},
  };
}

TheoremReport check_identities(const std::string& theorem, const std::vector<OperatorIdentity>& identities, int m,
                               int s, int k) {
  TheoremReport report;
  report.theorem = theorem;
  report.m = m;
  report.grades = GradeSet::single(s);
  report.k = k;
  const MonomialBasis basis(m, report.grades, k);
  report.target_dim = basis.size();
  report.rank = basis.size();
  report.direct_sum = true;
  report.fills = true;
  for (const auto& id : identities) {
    std::size_t agree = 0;
    for (const auto& key : basis.keys()) {
      const CliffordPoly e = CliffordPoly::monomial(key.alpha, key.blade);
      if (apply(id.lhs, e) == id.rhs(e)) {
        ++agree;
      } else if (report.message.empty()) {
        report.in_kernel = false;
        report.message = id.name + " fails";
        report.witness = e;
      }
    }
    report.components.push_back({id.name, agree});
  }
  return report;
}

CliffordPoly random_poly(int m, GradeSet grades, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::bernoulli_distribution keep(0.5);
  CliffordPoly out(m);
  const MonomialBasis basis(m, grades, k);
  for (const auto& key : basis.keys()) {
    if (!keep(rng)) continue;
    Rational q(num(rng), den(rng));
    q.canonicalize();
    out.add_term(key, q);
  }
  return out;
}

std::size_t VerifyOutcome::failures() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.ok(); }));
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"lemma", "h",          "homma",          "monogenic", "mt",
                                              "infra", "infra-harmonic", "classical", "two-sided"};
  return names;
}

namespace {

struct Job {
  std::string theorem;
  int m;
  GradeSet grades;
  int k;
  std::function<std::vector<TheoremReport>()> run;
};

TheoremReport renamed(TheoremReport r, std::string name) {
  r.theorem = std::move(name);
  return r;
}

// Random polynomials must decompose with zero residual and reconstruct exactly.
void round_trips(TheoremReport& report, GradeSet grades, int samples, std::uint64_t seed,
                 const std::function<DecompositionResult(const CliffordPoly&)>& decompose) {
  if (!report.ok()) return;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    const CliffordPoly p = random_poly(report.m, grades, report.k, rng);
    try {
      const DecompositionResult d = decompose(p);
      if (!d.exact() || d.reconstruct() != p) {
        report.message = "random round trip leaves a residual";
        report.witness = p;
        return;
      }
    } catch (const TheoremViolation& e) {
      report.message = std::string("random round trip: ") + e.what();
      report.witness = p;
      return;
    }
  }
}

std::uint64_t job_seed(std::uint64_t seed, const std::string& theorem, int m, GradeSet grades, int k) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (char c : theorem) mix(static_cast<unsigned char>(c));
  mix(static_cast<std::uint64_t>(m));
  mix(grades.bits());
  mix(static_cast<std::uint64_t>(k));
  return h;
}

std::vector<Job> plan(const VerifyOptions& o, const std::vector<std::string>& theorems) {
  std::vector<Job> jobs;
  const int m = o.m;
  auto per_bigrade = [&](const std::string& name, auto make) {
    for (int k = 0; k <= o.k_max; ++k) {
      for (int s = 0; s <= m; ++s) jobs.push_back({name, m, GradeSet::single(s), k, [=] { return make(s, k); }});
    }
  };
  auto one = [](TheoremReport r) { return std::vector<TheoremReport>{std::move(r)}; };
  const int samples = o.samples;
  const std::uint64_t seed = o.seed;

  for (const auto& name : theorems) {
    if (name == "lemma") {
      per_bigrade(name, [=](int s, int k) { return one(check_identities("lemma", anticommutator_relations(), m, s, k)); });
    } else if (name == "h") {
      per_bigrade(name, [=](int s, int k) {
        Refinement r = fischer_h_frame(m, s, k);
        round_trips(r.report, GradeSet::single(s), samples, job_seed(seed, "h", m, GradeSet::single(s), k),
                    fischer_h_decompose);
        return one(renamed(std::move(r.report), "h"));
      });
    } else if (name == "homma") {
      per_bigrade(name, [=](int s, int k) { return one(homma_refine(m, s, k).report); });
    } else if (name == "infra") {
      per_bigrade(name, [=](int s, int k) { return one(inframonogenic_refine(m, s, k).report); });
    } else if (name == "infra-harmonic") {
      per_bigrade(name, [=](int s, int k) { return one(harmonic_infra_intersection(m, s, k).report); });
    } else if (name == "two-sided") {
      per_bigrade(name, [=](int s, int k) {
        TheoremReport r;
        r.theorem = "two-sided";
        r.m = m;
        r.grades = GradeSet::single(s);
        r.k = k;
        try {
          const auto& b = space_basis(SpaceKind::TwoSided, m, r.grades, k);
          r.components.push_back({b.label(), b.dim()});
          r.target_dim = hodge(m, s, k).dim();
          r.rank = b.dim();
          r.direct_sum = true;
          r.fills = b.dim() == r.target_dim;
        } catch (const TheoremViolation& e) {
          r.in_kernel = false;
          r.message = e.what();
          r.witness = e.witness();
        }
        return one(std::move(r));
      });
    } else if (name == "monogenic") {
      for (int k = 0; k <= o.k_max; ++k) {
        jobs.push_back({name, m, GradeSet::full(m), k, [=] {
                          return std::vector<TheoremReport>{
                              monogenic_refine(m, k, GradeSet::full(m), MonogenicSide::Left).report,
                              monogenic_refine(m, k, GradeSet::full(m), MonogenicSide::Right).report};
                        }});
      }
    } else if (name == "mt") {
      for (int k = 0; k <= o.k_max; ++k) {
        for (std::uint32_t bits = 1; bits < (1U << (m + 1)); ++bits) {
          const GradeSet grades = GradeSet::from_bits(bits);
          jobs.push_back({name, m, grades, k, [=] {
                            return std::vector<TheoremReport>{
                                renamed(monogenic_refine(m, k, grades, MonogenicSide::Left).report, "mt"),
                                renamed(monogenic_refine(m, k, grades, MonogenicSide::Right).report, "mt-right")};
                          }});
        }
      }
    } else if (name == "classical") {
      for (TowerMode mode : {TowerMode::Harmonic, TowerMode::Infra}) {
        const std::string label = "classical-" + std::string(tower_mode_name(mode));
        per_bigrade(label, [=](int s, int k) {
          Refinement r = classical_tower(m, s, k, mode);
          round_trips(r.report, GradeSet::single(s), samples, job_seed(seed, label, m, GradeSet::single(s), k),
                      [mode](const CliffordPoly& p) { return classical_fischer_decompose(p, mode); });
          return one(std::move(r.report));
        });
      }
      for (int k = 0; k <= o.k_max; ++k) {
        jobs.push_back({"classical-monogenic", m, GradeSet::full(m), k, [=] {
                          Refinement r = classical_tower(m, 0, k, TowerMode::Monogenic);
                          round_trips(r.report, GradeSet::full(m), samples,
                                      job_seed(seed, "classical-monogenic", m, GradeSet::full(m), k),
                                      [](const CliffordPoly& p) {
                                        return classical_fischer_decompose(p, TowerMode::Monogenic);
                                      });
                          return one(std::move(r.report));
                        }});
      }
    }
  }
  return jobs;
}

std::vector<int> sort_key(GradeSet g) { return g.grades(); }

}  // namespace

VerifyOutcome verify_report(const VerifyOptions& options) {
  if (options.m < 1 || options.m > kMaxDimension) {
    throw std::invalid_argument("m must lie in [1, " + std::to_string(kMaxDimension) + "]");
  }
  if (options.k_max < 0 || options.k_max > kMaxDegree) {
    throw std::invalid_argument("k_max must lie in [0, " + std::to_string(kMaxDegree) + "]");
  }
  VerifyOutcome out;
  out.options = options;
  for (const auto& name : options.theorems) {
    if (name == "all") {
      out.theorems = theorem_names();
      break;
    }
    if (std::find(theorem_names().begin(), theorem_names().end(), name) == theorem_names().end()) {
      throw std::invalid_argument("unknown theorem: " + name);
    }
    if (std::find(out.theorems.begin(), out.theorems.end(), name) == out.theorems.end()) out.theorems.push_back(name);
  }

  const std::vector<Job> jobs = plan(options, out.theorems);
  std::vector<std::optional<std::vector<TheoremReport>>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> over_budget{false};
  const auto start = std::chrono::steady_clock::now();

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      if (options.budget_seconds > 0) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed.count() > options.budget_seconds) {
          over_budget = true;
          continue;
        }
      }
      const Job& job = jobs[i];
      try {
        results[i] = job.run();
      } catch (const std::exception& e) {
        TheoremReport r;
        r.theorem = job.theorem;
        r.m = job.m;
        r.grades = job.grades;
        r.k = job.k;
        r.in_kernel = false;
        r.message = std::string("error: ") + e.what();
        if (const auto* v = dynamic_cast<const TheoremViolation*>(&e)) r.witness = v->witness();
        results[i] = std::vector<TheoremReport>{std::move(r)};
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : results) {
    if (!r) {
      ++out.skipped;
      continue;
    }
    for (auto& report : *r) out.reports.push_back(std::move(report));
  }
  out.budget_exceeded = over_budget;
  std::stable_sort(out.reports.begin(), out.reports.end(), [](const TheoremReport& a, const TheoremReport& b) {
    return std::tuple(a.theorem, a.m, sort_key(a.grades), a.grades.bits(), a.k) <
           std::tuple(b.theorem, b.m, sort_key(b.grades), b.grades.bits(), b.k);
  });
  return out;
}

Json to_json(const VerifyOutcome& outcome) {
  Json by_theorem = Json::object();
  for (const auto& r : outcome.reports) {
    Json& entry = by_theorem[r.theorem];
    if (entry.is_null()) entry = Json{{"passed", 0}, {"failed", 0}};
    entry[r.ok() ? "passed" : "failed"] = entry[r.ok() ? "passed" : "failed"].get<int>() + 1;
  }
  Json reports = Json::array();
  for (const auto& r : outcome.reports) reports.push_back(to_json(r));
  const std::size_t failed = outcome.failures();
  return Json{{"m", outcome.options.m},
              {"k_max", outcome.options.k_max},
              {"theorems", outcome.theorems},
              {"seed", outcome.options.seed},
              {"samples", outcome.options.samples},
              {"checked", outcome.reports.size()},
              {"passed", outcome.reports.size() - failed},
              {"failed", failed},
              {"skipped", outcome.skipped},
              {"budget_exceeded", outcome.budget_exceeded},
              {"ok", outcome.ok()},
              {"summary", std::move(by_theorem)},
              {"reports", std::move(reports)}};
}

}  // namespace hfischer
