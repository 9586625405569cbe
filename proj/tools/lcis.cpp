// Command-line front end: run the LCIS algorithms on sequence files, count
// significant pairs, generate instances, run differential verification
// campaigns, and emit benchmark CSV.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcis/core.hpp"
#include "lcis/fast.hpp"
#include "lcis/genlb.hpp"
#include "lcis/io.hpp"
#include "lcis/oracle.hpp"

namespace {

constexpr const char* kCsvHeader =
    "n,seed,family,alphabet,algo,lcis,match_pairs,sig_pairs,wall_time_ns,probe_count";

struct run_args {
  std::string a_file, b_file;
  std::string algo = "fast";
  bool witness = false;
};

struct sig_args {
  std::string a_file, b_file;
  bool per_symbol = false;
};

struct gen_args {
  std::string family;
  std::string out_a, out_b;
  std::uint64_t n = 0;
  std::uint64_t alphabet = 0;
  std::uint64_t seed = 1;
  std::uint32_t k = 1;
};

struct verify_args {
  std::uint64_t max_n = 64;
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
};

struct bench_args {
  std::string sizes = "1024,4096,16384";
  std::string families = "random";
  std::string algos = "fast,dp";
  std::uint64_t alphabet = 0;  // 0 = sqrt(n)
  std::uint64_t seed = 42;
  std::string csv_path;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::pair<lcis::sequence, lcis::sequence> load_compressed(const std::string& a_file,
                                                          const std::string& b_file) {
  auto ra = lcis::read_sequence_file(a_file);
  auto rb = lcis::read_sequence_file(b_file);
  return lcis::compress(ra, rb);
}

int cmd_run(const run_args& args) {
  auto [a, b] = load_compressed(args.a_file, args.b_file);
  std::uint64_t len = 0;
  if (args.algo == "fast") {
    len = lcis::lcis_fast(a, b);
  } else if (args.algo == "dp") {
    if (args.witness) {
      auto t = lcis::lcis_dp(a, b);
      len = static_cast<std::uint64_t>(t.final_length());
      std::cout << len << '\n';
      auto values = lcis::symbol_values(a, b);
      for (const auto& p : lcis::witness_chain(t))
        std::cout << p.x << ' ' << p.y << ' ' << values[p.symbol - 1] << '\n';
      return 0;
    }
    len = lcis::lcis_dp_length(a, b);
  } else if (args.algo == "brute") {
    len = lcis::lcis_bruteforce(a, b);
  } else {
    std::cerr << "unknown algorithm: " << args.algo << '\n';
    return 2;
  }
  std::cout << len << '\n';
  return 0;
}

int cmd_sig(const sig_args& args) {
  auto [a, b] = load_compressed(args.a_file, args.b_file);
  auto counts = lcis::significant_count(a, b);
  std::cout << counts.total << '\n';
  if (args.per_symbol) {
    auto values = lcis::symbol_values(a, b);
    for (std::size_t sym = 1; sym < counts.per_symbol.size(); ++sym)
      if (counts.per_symbol[sym] > 0)
        std::cout << values[sym - 1] << ',' << counts.per_symbol[sym] << '\n';
  }
  return 0;
}

int cmd_gen(const gen_args& args) {
  std::vector<std::int64_t> ra, rb;
  if (args.family == "random") {
    std::tie(ra, rb) = lcis::gen_random(args.n, args.alphabet ? args.alphabet : 2 * args.n + 1,
                                        args.seed);
  } else if (args.family == "adversarial") {
    auto adv = lcis::build_padded(args.k);
    ra = std::move(adv.a);
    rb = std::move(adv.b);
    std::cout << adv.certified_marker_pairs() << '\n';
  } else {
    std::cerr << "unknown family: " << args.family << '\n';
    return 2;
  }
  lcis::write_sequence_file(args.out_a, ra);
  lcis::write_sequence_file(args.out_b, rb);
  return 0;
}

struct verify_state {
  std::uint64_t failures = 0;

  void fail(const std::string& what) {
    ++failures;
    std::cout << "FAIL " << what << '\n';
  }
};

void verify_instance(verify_state& st, const std::vector<std::int64_t>& ra,
                     const std::vector<std::int64_t>& rb, const std::string& label) {
  auto [a, b] = lcis::compress(ra, rb);
  std::uint64_t dp = 0, fast = 0;
  try {
    dp = lcis::lcis_dp_length(a, b);
    lcis::fast_options opt;
    opt.debug_checks = true;  // staircase + end-state assertions
    fast = lcis::lcis_fast_run(a, b, opt).length;
  } catch (const std::logic_error& e) {
    st.fail(label + " invariant: " + e.what());
    return;
  }
  if (dp != fast) {
    std::string diag = label + " dp=" + std::to_string(dp) + " fast=" + std::to_string(fast);
    // localize with the exhaustive oracle when the instance is small enough
    if (a.size() <= 14 && b.size() <= 14) {
      auto brute = lcis::lcis_bruteforce(a, b);
      diag += " brute=" + std::to_string(brute);
    }
    st.fail(diag);
    return;
  }
  if (a.size() <= 12 && b.size() <= 12) {
    auto brute = lcis::lcis_bruteforce(a, b);
    if (brute != dp) st.fail(label + " brute=" + std::to_string(brute) + " dp=" + std::to_string(dp));
  }
}

int cmd_verify(const verify_args& args) {
  verify_state st;
  std::mt19937_64 rng(args.seed);
  for (std::uint64_t trial = 0; trial < args.trials; ++trial) {
    std::uint64_t inst_seed = rng();
    std::size_t n = args.max_n == 0 ? 0 : inst_seed % (args.max_n + 1);
    std::uint64_t alphabet = 1 + rng() % (2 * std::max<std::size_t>(n, 1));
    auto [ra, rb] = lcis::gen_random(n, alphabet, inst_seed);
    verify_instance(st, ra, rb,
                    "random trial=" + std::to_string(trial) + " n=" + std::to_string(n) +
                        " alphabet=" + std::to_string(alphabet) +
                        " seed=" + std::to_string(inst_seed));
  }
  for (std::uint32_t k = 1; k <= 6; ++k) {
    auto adv = lcis::build_padded(k);
    verify_instance(st, adv.a, adv.b, "adversarial k=" + std::to_string(k));
    auto [a, b] = lcis::compress(adv.a, adv.b);
    auto sig = lcis::significant_pairs(a, b);
    std::uint64_t tau_total = 0;
    for (std::uint32_t r = 1; r <= k; ++r)
      tau_total += sig.of(a.symbol(adv.block_ends_a[0] - (r - 1))).size();
    if (tau_total != adv.certified_marker_pairs())
      st.fail("adversarial k=" + std::to_string(k) + " marker pairs=" +
              std::to_string(tau_total) + " want=" + std::to_string(adv.certified_marker_pairs()));
  }
  if (st.failures) {
    std::cout << st.failures << " failure(s)\n";
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

struct bench_instance {
  std::string family;
  std::uint64_t n = 0, seed = 0, alphabet = 0;
  lcis::sequence a, b;
};

int cmd_bench(const bench_args& args) {
  std::vector<bench_instance> instances;
  for (const auto& fam : split_list(args.families)) {
    for (const auto& size_str : split_list(args.sizes)) {
      std::uint64_t size = std::stoull(size_str);
      bench_instance inst;
      inst.family = fam;
      if (fam == "random") {
        inst.seed = args.seed + instances.size();
        inst.alphabet = args.alphabet
                            ? args.alphabet
                            : std::max<std::uint64_t>(1, std::uint64_t(std::sqrt(double(size))));
        auto [ra, rb] = lcis::gen_random(size, inst.alphabet, inst.seed);
        std::tie(inst.a, inst.b) = lcis::compress(ra, rb);
      } else if (fam == "adversarial") {
        std::uint32_t k = 1;
        while (k < 12 && lcis::build_padded(k + 1).a.size() <= size) ++k;
        auto adv = lcis::build_padded(k);
        std::tie(inst.a, inst.b) = lcis::compress(adv.a, adv.b);
        inst.alphabet = std::max(inst.a.max_symbol(), inst.b.max_symbol());
      } else {
        std::cerr << "unknown family: " << fam << '\n';
        return 2;
      }
      inst.n = std::max(inst.a.size(), inst.b.size());
      instances.push_back(std::move(inst));
    }
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!args.csv_path.empty()) {
    file.open(args.csv_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open CSV output: " << args.csv_path << '\n';
      return 2;
    }
    out = &file;
  }
  *out << kCsvHeader << '\n';

  auto algos = split_list(args.algos);
  for (const auto& inst : instances) {
    std::uint64_t match = lcis::matching_pair_count(inst.a, inst.b);
    std::uint64_t sig = lcis::significant_count(inst.a, inst.b).total;
    for (const auto& algo : algos) {
      std::uint64_t len = 0, probes = 0;
      auto t0 = std::chrono::steady_clock::now();
      if (algo == "fast") {
        lcis::fast_stats stats;
        len = lcis::lcis_fast(inst.a, inst.b, &stats);
        probes = stats.probe_count;
      } else if (algo == "dp") {
        len = lcis::lcis_dp_length(inst.a, inst.b);
      } else if (algo == "brute") {
        len = lcis::lcis_bruteforce(inst.a, inst.b);
      } else {
        std::cerr << "unknown algorithm: " << algo << '\n';
        return 2;
      }
      auto t1 = std::chrono::steady_clock::now();
      std::uint64_t ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      *out << inst.n << ',' << inst.seed << ',' << inst.family << ',' << inst.alphabet << ','
           << algo << ',' << len << ',' << match << ',' << sig << ',' << ns << ',' << probes
           << '\n';
    }
  }
  if (out == &file) {
    file.flush();
    if (!file) {
      std::cerr << "write failed: " << args.csv_path << '\n';
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"longest common increasing subsequence toolkit"};
  app.require_subcommand(1);

  run_args rargs;
  auto* run = app.add_subcommand("run", "compute LCIS length of two sequence files");
  run->add_option("a_file", rargs.a_file)->required();
  run->add_option("b_file", rargs.b_file)->required();
  run->add_option("--algo", rargs.algo, "fast, dp or brute")
      ->check(CLI::IsMember({"fast", "dp", "brute"}));
  run->add_flag("--witness", rargs.witness, "print a realizing chain (dp only)");

  sig_args sargs;
  auto* sig = app.add_subcommand("sig", "count significant pairs");
  sig->add_option("a_file", sargs.a_file)->required();
  sig->add_option("b_file", sargs.b_file)->required();
  sig->add_flag("--per-symbol", sargs.per_symbol, "also print symbol,count lines");

  gen_args gargs;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", gargs.family, "random or adversarial")
      ->required()
      ->check(CLI::IsMember({"random", "adversarial"}));
  gen->add_option("--n", gargs.n, "sequence length (random)");
  gen->add_option("--alphabet", gargs.alphabet, "alphabet size (random; default 2n+1)");
  gen->add_option("--seed", gargs.seed, "random seed");
  gen->add_option("--k", gargs.k, "recursion depth (adversarial)");
  gen->add_option("out_a", gargs.out_a)->required();
  gen->add_option("out_b", gargs.out_b)->required();

  verify_args vargs;
  auto* verify = app.add_subcommand("verify", "differential verification campaign");
  verify->add_option("--max-n", vargs.max_n, "largest random instance size");
  verify->add_option("--trials", vargs.trials, "number of random instances");
  verify->add_option("--seed", vargs.seed, "campaign seed");

  bench_args bargs;
  auto* bench = app.add_subcommand("bench", "benchmark and emit CSV");
  bench->add_option("--sizes", bargs.sizes, "comma-separated instance sizes");
  bench->add_option("--families", bargs.families, "comma-separated families");
  bench->add_option("--algo", bargs.algos, "comma-separated algorithms");
  bench->add_option("--alphabet", bargs.alphabet, "alphabet size (0 = sqrt(n))");
  bench->add_option("--seed", bargs.seed, "base seed");
  bench->add_option("--csv", bargs.csv_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(rargs);
    if (sig->parsed()) return cmd_sig(sargs);
    if (gen->parsed()) return cmd_gen(gargs);
    if (verify->parsed()) return cmd_verify(vargs);
    if (bench->parsed()) return cmd_bench(bargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
