#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "truncdet/report_json.hpp"

using namespace truncdet;

namespace {

constexpr int kExitOk = 0;           // command ran, verification (if any) passed
constexpr int kExitFailed = 1;       // a verification check came back false
constexpr int kExitUsage = 2;        // bad parameters
constexpr int kExitInconclusive = 3; // a resource cap stopped the computation

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

struct IdealArgs {
  int m = 0, n = 0, r = 0, k = 0;
  std::string format = "text";
  std::string output;
};

int run_ideal(const IdealArgs& a) {
  const MatrixShape shape{a.m, a.n, a.r, a.k};
  shape.validate();
  const GeneratorSet gens = generate_ideal(shape);
  emit(a.format == "json" ? dump_json(ideal_json(gens)) : ideal_text(gens), a.output);
  return kExitOk;
}

struct GbArgs {
  int m = 0, k = 0;
  std::uint64_t max_steps = ReductionCaps{}.max_steps;
  std::size_t max_terms = ReductionCaps{}.max_terms;
  std::string output;
};

int run_gb_check(const GbArgs& a) {
  if (a.m < 1) throw std::invalid_argument("m >= 1 required");
  if (a.k < 1) throw std::invalid_argument("k >= 1 required");
  const GBReport report = gb_check(a.m, a.k, ReductionCaps{a.max_steps, a.max_terms});
  emit(dump_json(gb_report_json(report)), a.output);
  if (report.verified()) return kExitOk;
  return report.inconclusive() ? kExitInconclusive : kExitFailed;
}

struct HilbertArgs {
  int m = 0, k = 0, degree = 8;
  std::string output;
};

int run_hilbert(const HilbertArgs& a) {
  if (a.m < 1) throw std::invalid_argument("m >= 1 required");
  if (a.k < 1) throw std::invalid_argument("k >= 1 required");
  emit(dump_json(hilbert_json(a.m, a.k, a.degree)), a.output);
  return kExitOk;
}

struct CensusArgs {
  int m = 0, n = 0, r = 0, k = 0;
  std::string output;
};

int run_census(const CensusArgs& a) {
  MatrixShape{a.m, a.n, a.r, a.k}.validate();
  emit(dump_json(census_json(census_general(a.m, a.n, a.r, a.k))), a.output);
  return kExitOk;
}

struct CountArgs {
  int m = 0, n = 0, r = 0, k = 0;
  std::uint32_t q = 0;
  bool ring_level = false;
  std::uint64_t cap = 1ull << 26;
  unsigned threads = 0;
  std::string output;
};

int run_count(const CountArgs& a) {
  const MatrixShape shape{a.m, a.n, a.r, a.k};
  const CountResult result = a.ring_level ? count_points_ringlevel(shape, a.q, a.cap)
                                          : count_points(shape, a.q, a.cap, a.threads);
  emit(dump_json(count_json(result)), a.output);
  return kExitOk;
}

struct WitnessArgs {
  std::string kind;
  int m = 0, n = 0, r = 0, k = 0;
  int s = 0, alpha = 1;
  std::uint32_t q = 0; // 0 selects the rationals
  std::uint32_t seed = 1;
  std::uint64_t cap = 1ull << 26;
  std::string output;
};

int run_witness(const WitnessArgs& a) {
  const FieldRef field = a.q == 0 ? FieldRef::rationals() : FieldRef::prime(a.q);
  if (a.kind == "separation") {
    const SeparationWitness wit = separation_witness(a.m, a.n, a.k, a.s, a.alpha, field);
    emit(dump_json(separation_json(wit)), a.output);
    return wit.membership && wit.ap_nonzero ? kExitOk : kExitFailed;
  }
  if (a.kind == "intersection") {
    const IntersectionWitness wit = intersection_witness(a.m, a.n, a.k, field);
    emit(dump_json(intersection_json(wit)), a.output);
    return wit.membership && wit.locus_a_ok && wit.locus_b_ok ? kExitOk : kExitFailed;
  }
  // lift: take the first nonzero member of the (m-1,n-1,r-1,k) variety over
  // F_q and push it through a seeded random border with unit corner.
  if (a.q == 0) throw std::invalid_argument("--q is required for --kind lift");
  const MatrixShape base{a.m - 1, a.n - 1, a.r - 1, a.k};
  base.validate();
  const std::vector<PointAssignment> members = collect_points(base, a.q, 2, a.cap);
  const PointAssignment& z = members.size() > 1 ? members[1] : members[0];

  std::mt19937 rng(a.seed);
  auto random_series = [&](bool unit) {
    std::vector<Scalar> c;
    for (int l = 0; l < a.k; ++l) c.push_back(field.from_int(rng() % a.q));
    if (unit && c[0].is_zero()) c[0] = field.one();
    return ScalarSeries(std::move(c));
  };
  BorderSeries border;
  for (int j = 0; j < a.n; ++j) border.row.push_back(random_series(j == a.n - 1));
  for (int i = 0; i < a.m - 1; ++i) border.col.push_back(random_series(false));

  const PointAssignment lifted = lift_point(z, border);
  const bool base_member = evaluate_membership(z, generate_ideal(base, field));
  const bool lifted_member = evaluate_membership(lifted, generate_ideal(lifted.shape, field));
  emit(dump_json(lift_json(z, lifted, base_member, lifted_member)), a.output);
  return base_member == lifted_member ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinantal ideals of generic matrices over F[t]/(t^k)"};
  app.require_subcommand(1);

  IdealArgs ideal_args;
  CLI::App* ideal_cmd = app.add_subcommand("ideal", "export the generators of I^{m,n}_{r,k}");
  ideal_cmd->add_option("--m", ideal_args.m, "matrix rows")->required();
  ideal_cmd->add_option("--n", ideal_args.n, "matrix columns")->required();
  ideal_cmd->add_option("--r", ideal_args.r, "minor size")->required();
  ideal_cmd->add_option("--k", ideal_args.k, "truncation order")->required();
  ideal_cmd->add_option("--format", ideal_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ideal_cmd->add_option("--output", ideal_args.output, "write here instead of stdout");

  GbArgs gb_args;
  CLI::App* gb_cmd = app.add_subcommand("gb-check", "verify d_0..d_{k-1} is a Groebner basis");
  gb_cmd->add_option("--m", gb_args.m, "matrix size (square, r = m)")->required();
  gb_cmd->add_option("--k", gb_args.k, "truncation order")->required();
  gb_cmd->add_option("--max-steps", gb_args.max_steps, "division step cap");
  gb_cmd->add_option("--max-terms", gb_args.max_terms, "intermediate term cap");
  gb_cmd->add_option("--output", gb_args.output, "write here instead of stdout");

  HilbertArgs hilbert_args;
  CLI::App* hilbert_cmd =
      app.add_subcommand("hilbert", "f-vector, Hilbert function and degree for r = m = n");
  hilbert_cmd->add_option("--m", hilbert_args.m, "matrix size")->required();
  hilbert_cmd->add_option("--k", hilbert_args.k, "truncation order")->required();
  hilbert_cmd->add_option("--degree", hilbert_args.degree, "tabulate H(0..d)");
  hilbert_cmd->add_option("--output", hilbert_args.output, "write here instead of stdout");

  CensusArgs census_args;
  CLI::App* census_cmd = app.add_subcommand("census", "irreducible component census");
  census_cmd->add_option("--m", census_args.m, "matrix rows")->required();
  census_cmd->add_option("--n", census_args.n, "matrix columns")->required();
  census_cmd->add_option("--r", census_args.r, "minor size")->required();
  census_cmd->add_option("--k", census_args.k, "truncation order")->required();
  census_cmd->add_option("--output", census_args.output, "write here instead of stdout");

  CountArgs count_args;
  CLI::App* count_cmd = app.add_subcommand("count", "exhaustive F_q point count");
  count_cmd->add_option("--m", count_args.m, "matrix rows")->required();
  count_cmd->add_option("--n", count_args.n, "matrix columns")->required();
  count_cmd->add_option("--r", count_args.r, "minor size")->required();
  count_cmd->add_option("--k", count_args.k, "truncation order")->required();
  count_cmd->add_option("--q", count_args.q, "field size (prime)")->required();
  count_cmd->add_flag("--ring-level", count_args.ring_level,
                      "enumerate matrices over F_q[t]/(t^k) instead of evaluating generators");
  count_cmd->add_option("--cap", count_args.cap, "candidate budget");
  count_cmd->add_option("--threads", count_args.threads, "worker count (0 = hardware)");
  count_cmd->add_option("--output", count_args.output, "write here instead of stdout");

  WitnessArgs witness_args;
  CLI::App* witness_cmd = app.add_subcommand("witness", "component witness points and checks");
  witness_cmd->add_option("--kind", witness_args.kind, "separation, intersection or lift")
      ->required()
      ->check(CLI::IsMember({"separation", "intersection", "lift"}));
  witness_cmd->add_option("--m", witness_args.m, "matrix rows")->required();
  witness_cmd->add_option("--n", witness_args.n, "matrix columns")->required();
  witness_cmd->add_option("--r", witness_args.r, "minor size (lift only)");
  witness_cmd->add_option("--k", witness_args.k, "truncation order")->required();
  witness_cmd->add_option("--s", witness_args.s, "stratum index (separation)");
  witness_cmd->add_option("--alpha", witness_args.alpha, "level offset (separation)");
  witness_cmd->add_option("--q", witness_args.q, "field size, 0 = rationals");
  witness_cmd->add_option("--seed", witness_args.seed, "border seed (lift)");
  witness_cmd->add_option("--cap", witness_args.cap, "candidate budget (lift)");
  witness_cmd->add_option("--output", witness_args.output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (ideal_cmd->parsed()) return run_ideal(ideal_args);
    if (gb_cmd->parsed()) return run_gb_check(gb_args);
    if (hilbert_cmd->parsed()) return run_hilbert(hilbert_args);
    if (census_cmd->parsed()) return run_census(census_args);
    if (count_cmd->parsed()) return run_count(count_args);
    if (witness_cmd->parsed()) return run_witness(witness_args);
  } catch (const cap_exceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const budget_exceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
