// assort: sort integer files in place associatively, generate and verify
// workloads, predict pass counts, and run benchmark matrices to CSV.

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "assort/assort.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_malformed = 1;
constexpr int exit_duplicate = 2;
constexpr int exit_capacity = 3;

int exit_code_for(const assort::SortError& e) {
  switch (e.kind()) {
    case assort::ErrorKind::duplicate_key:
      return exit_duplicate;
    case assort::ErrorKind::capacity_exceeded:
      return exit_capacity;
    default:
      return exit_malformed;
  }
}

enum class Format { text, bin };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "bin") return Format::bin;
  throw assort::SortError::malformed_input("unknown format '" + name + "'");
}

template <class F>
auto dispatch_width(unsigned width, F&& f) {
  switch (width) {
    case 8:
      return f.template operator()<std::uint8_t>();
    case 16:
      return f.template operator()<std::uint16_t>();
    case 32:
      return f.template operator()<std::uint32_t>();
    case 64:
      return f.template operator()<std::uint64_t>();
    default:
      throw assort::SortError::malformed_input("word width must be 8, 16, 32 or 64");
  }
}

template <assort::UnsignedWord W>
std::vector<W> read_text_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw assort::SortError::malformed_input("cannot open " + path);
  std::vector<W> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in.peek() == EOF) break;  // tolerate one trailing blank line
      throw assort::SortError::malformed_input(path + ":" + std::to_string(line_no) +
                                               ": empty line");
    }
    std::uint64_t v = 0;
    const char* begin = line.data();
    const char* end = begin + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end)
      throw assort::SortError::malformed_input(path + ":" + std::to_string(line_no) +
                                               ": not an unsigned integer: '" + line + "'");
    if (v > std::uint64_t(assort::word_max<W>))
      throw assort::SortError::malformed_input(path + ":" + std::to_string(line_no) + ": " +
                                               std::to_string(v) + " does not fit a " +
                                               std::to_string(assort::word_bits<W>) +
                                               "-bit word");
    values.push_back(W(v));
  }
  return values;
}

// Binary layout: raw little-endian fixed-width words, no header.
template <assort::UnsignedWord W>
std::vector<W> read_binary_values(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw assort::SortError::malformed_input("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() % sizeof(W) != 0)
    throw assort::SortError::malformed_input(path + ": size is not a multiple of " +
                                             std::to_string(sizeof(W)) + " bytes");
  std::vector<W> values(bytes.size() / sizeof(W));
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < sizeof(W); ++b)
      v |= std::uint64_t(bytes[i * sizeof(W) + b]) << (8 * b);
    values[i] = W(v);
  }
  return values;
}

template <assort::UnsignedWord W>
std::vector<W> read_values(const std::string& path, Format format) {
  return format == Format::text ? read_text_values<W>(path) : read_binary_values<W>(path);
}

template <assort::UnsignedWord W>
void write_values(const std::string& path, Format format, const std::vector<W>& values) {
  std::ofstream out(path, format == Format::bin ? std::ios::binary : std::ios::out);
  if (!out) throw assort::SortError::malformed_input("cannot write " + path);
  if (format == Format::text) {
    for (const W v : values) out << std::uint64_t(v) << '\n';
  } else {
    for (const W v : values) {
      for (std::size_t b = 0; b < sizeof(W); ++b)
        out.put(char((std::uint64_t(v) >> (8 * b)) & 0xff));
    }
  }
}

void write_stats_file(const std::string& path, const std::string& variant, unsigned width,
                      std::size_t n, const assort::SortStats& stats) {
  std::ofstream out(path);
  if (!out) throw assort::SortError::malformed_input("cannot write " + path);
  out << "variant=" << variant << '\n'
      << "word_width=" << width << '\n'
      << "n=" << n << '\n'
      << "passes=" << stats.passes << '\n'
      << "swaps=" << stats.swaps << '\n'
      << "moves=" << stats.moves << '\n'
      << "reads=" << stats.reads << '\n';
}

std::string format_beta(double beta) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", beta);
  return buf;
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), char('0' + int(v % 10)));
    v /= 10;
  }
  return s;
}

// ---- sort -----------------------------------------------------------------

struct SortArgs {
  std::string input;
  std::string output;
  std::string stats_path;
  std::string format = "text";
  std::string variant = "auto";
  unsigned width = 64;
};

// The read-only variant wins below range/n <= 10; above it the bitwise
// machinery of the modifiable variant pays off.
template <assort::UnsignedWord W>
bool auto_prefers_readonly(const std::vector<W>& values) {
  if (values.size() <= 1) return true;
  W lo = values[0];
  W hi = lo;
  for (const W v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const unsigned __int128 range = (unsigned __int128)(hi - lo) + 1;
  return range <= (unsigned __int128)(values.size()) * 10;
}

int run_sort(const SortArgs& args) {
  const Format format = parse_format(args.format);
  return dispatch_width(args.width, [&]<typename W>() {
    std::vector<W> values = read_values<W>(args.input, format);
    std::string used = args.variant;
    if (used == "auto") used = auto_prefers_readonly(values) ? "readonly" : "modifiable";
    assort::SortStats stats;
    if (used == "readonly") {
      stats = assort::sort_readonly(values);
    } else if (used == "modifiable") {
      stats = assort::sort_full_universe(values);
    } else {
      throw assort::SortError::malformed_input("unknown variant '" + args.variant + "'");
    }
    write_values(args.output, format, values);
    if (!args.stats_path.empty())
      write_stats_file(args.stats_path, used, args.width, values.size(), stats);
    return exit_ok;
  });
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string dist = "uniform_distinct";
  std::size_t n = 0;
  double beta = 2.0;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "text";
  std::string unit = "key";
  std::string variant = "readonly";
  unsigned width = 64;
};

template <assort::UnsignedWord W>
assort::Workload<W> make_workload(const GenArgs& args) {
  const assort::RangeUnit unit =
      args.unit == "record" ? assort::RangeUnit::record : assort::RangeUnit::key;
  if (args.dist == "uniform_distinct")
    return assort::gen_uniform_distinct<W>(args.n, args.beta, unit, args.seed);
  if (args.dist == "consecutive_sorted")
    return assort::gen_consecutive_sorted<W>(args.n);
  if (args.dist == "worst_singleton")
    return assort::gen_worst_singleton<W>(args.n, args.variant == "modifiable"
                                                      ? assort::SortVariant::modifiable
                                                      : assort::SortVariant::readonly);
  if (args.dist == "full_universe") return assort::gen_full_universe<W>(args.n, args.seed);
  throw assort::SortError::malformed_input("unknown distribution '" + args.dist + "'");
}

int run_gen(const GenArgs& args) {
  const Format format = parse_format(args.format);
  return dispatch_width(args.width, [&]<typename W>() {
    auto workload = make_workload<W>(args);
    write_values(args.output, format, workload.values);
    return exit_ok;
  });
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string against;
  std::string format = "text";
  unsigned width = 64;
};

int run_verify(const VerifyArgs& args) {
  const Format format = parse_format(args.format);
  return dispatch_width(args.width, [&]<typename W>() {
    std::vector<W> output = read_values<W>(args.input, format);
    std::vector<W> input = read_values<W>(args.against, format);
    const auto report = assort::verify<W>(output, input);
    if (report.ok) {
      std::cout << "ok: " << output.size() << " values\n";
      return exit_ok;
    }
    if (report.failure == assort::VerifyReport::Failure::not_ascending)
      std::cout << "fail: not ascending at index " << report.index << '\n';
    else
      std::cout << "fail: multiset mismatch at sorted index " << report.index << '\n';
    return exit_malformed;
  });
}

// ---- predict ----------------------------------------------------------------

int run_predict(std::size_t n, double beta) {
  std::cout << assort::predict_passes_uniform(n, beta) << '\n';
  return exit_ok;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::vector<double> betas;
  std::string dist = "uniform_distinct";
  std::vector<std::string> algos;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  std::string csv;
  unsigned width = 64;
  std::string unit = "key";
};

struct RunRecord {
  std::string algo;
  std::string dist;
  std::size_t n = 0;
  unsigned __int128 m = 0;
  double beta = 0;
  unsigned w = 0;
  assort::SortStats stats;
  std::uint64_t wall_nanos = 0;
  std::uint64_t seed = 0;
  bool ok = false;
};

template <assort::UnsignedWord W>
RunRecord bench_one(const std::string& algo, const assort::Workload<W>& workload,
                    std::uint64_t seed) {
  RunRecord row;
  row.algo = algo;
  row.n = workload.values.size();
  row.m = workload.values.empty() ? 0 : (unsigned __int128)(workload.range_minus_one) + 1;
  row.beta = workload.beta;
  row.w = assort::word_bits<W>;
  row.seed = seed;

  std::vector<W> values = workload.values;  // each rep works on a fresh clone
  std::vector<W> sorted;
  bool in_place = true;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (algo == "assoc-ro") {
      row.stats = assort::sort_readonly(values);
    } else if (algo == "assoc-mod") {
      row.stats = assort::sort_sequential(values);
    } else if (algo == "assoc-rec") {
      row.stats = assort::sort_recursive(values);
    } else if (algo == "assoc-full") {
      row.stats = assort::sort_full_universe(values);
    } else if (algo == "counting") {
      in_place = false;
      W lo = values.empty() ? W{0} : values[0];
      W hi = lo;
      for (const W v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      sorted = assort::counting_sort<W>(values, lo, hi);
    } else if (algo == "radix") {
      in_place = false;
      sorted = assort::lsd_radix_sort<W>(values);
    } else if (algo == "std") {
      in_place = false;
      sorted = assort::comparison_oracle_sort<W>(values);
    } else {
      throw assort::SortError::malformed_input("unknown algo '" + algo + "'");
    }
  } catch (const assort::SortError& e) {
    row.wall_nanos = std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count());
    std::cerr << algo << " n=" << row.n << ": " << e.what() << '\n';
    row.ok = false;
    return row;
  }
  const auto t1 = std::chrono::steady_clock::now();
  row.wall_nanos =
      std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());

  const std::vector<W>& result = in_place ? values : sorted;
  row.ok = assort::verify<W>(result, workload.values).ok;
  return row;
}

void write_csv_row(std::ostream& out, const RunRecord& row) {
  out << row.algo << ',' << row.dist << ',' << row.n << ',' << u128_to_string(row.m) << ','
      << format_beta(row.beta) << ',' << row.w << ',' << row.stats.passes << ','
      << row.stats.swaps << ',' << row.stats.moves << ',' << row.stats.reads << ','
      << row.wall_nanos << ',' << row.seed << ',' << (row.ok ? "true" : "false") << '\n';
}

int run_bench(const BenchArgs& args) {
  std::ofstream csv(args.csv);
  if (!csv) throw assort::SortError::malformed_input("cannot write " + args.csv);
  csv << "algo,dist,n,m,beta,w,passes,swaps,moves,reads,wall_nanos,seed,ok\n";

  bool all_ok = true;
  dispatch_width(args.width, [&]<typename W>() {
    for (const std::size_t n : args.sizes) {
      for (const double beta : args.betas) {
        for (std::size_t rep = 0; rep < args.reps; ++rep) {
          std::uint64_t mix = args.seed ^ (0x9e3779b97f4a7c15ull * (n + 1)) ^
                              (std::uint64_t(beta * 4096.0) << 17) ^
                              (rep * 0x2545f4914f6cdd1dull);
          const std::uint64_t run_seed = assort::detail::splitmix64(mix);
          GenArgs gen;
          gen.dist = args.dist;
          gen.n = n;
          gen.beta = beta;
          gen.seed = run_seed;
          gen.unit = args.unit;
          auto workload = make_workload<W>(gen);
          for (const std::string& algo : args.algos) {
            RunRecord row = bench_one<W>(algo, workload, run_seed);
            row.dist = args.dist;
            all_ok = all_ok && row.ok;
            write_csv_row(csv, row);
          }
        }
      }
    }
    return 0;
  });
  return all_ok ? exit_ok : exit_malformed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"in-place associative sorting toolkit"};
  app.require_subcommand(1);

  SortArgs sort_args;
  auto* sort_cmd = app.add_subcommand("sort", "sort an integer file");
  sort_cmd->add_option("--input", sort_args.input, "input file")->required();
  sort_cmd->add_option("--format", sort_args.format, "text|bin");
  sort_cmd->add_option("--variant", sort_args.variant, "readonly|modifiable|auto");
  sort_cmd->add_option("--word-width", sort_args.width, "8|16|32|64");
  sort_cmd->add_option("--output", sort_args.output, "output file")->required();
  sort_cmd->add_option("--stats", sort_args.stats_path, "write key=value run stats");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate a workload file");
  gen_cmd->add_option("--dist", gen_args.dist,
                      "uniform_distinct|consecutive_sorted|worst_singleton|full_universe");
  gen_cmd->add_option("--n", gen_args.n, "number of values")->required();
  gen_cmd->add_option("--beta", gen_args.beta, "range-to-capacity ratio");
  gen_cmd->add_option("--seed", gen_args.seed, "rng seed");
  gen_cmd->add_option("--output", gen_args.output, "output file")->required();
  gen_cmd->add_option("--format", gen_args.format, "text|bin");
  gen_cmd->add_option("--unit", gen_args.unit, "key|record");
  gen_cmd->add_option("--variant", gen_args.variant,
                      "readonly|modifiable (worst_singleton stride)");
  gen_cmd->add_option("--word-width", gen_args.width, "8|16|32|64");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check a sorted file against its source");
  verify_cmd->add_option("--input", verify_args.input, "sorted file")->required();
  verify_cmd->add_option("--against", verify_args.against, "original file")->required();
  verify_cmd->add_option("--format", verify_args.format, "text|bin");
  verify_cmd->add_option("--word-width", verify_args.width, "8|16|32|64");

  std::size_t predict_n = 0;
  double predict_beta = 2.0;
  auto* predict_cmd = app.add_subcommand("predict", "expected pass count for uniform data");
  predict_cmd->add_option("--n", predict_n, "number of values")->required();
  predict_cmd->add_option("--beta", predict_beta, "range-to-capacity ratio")->required();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark matrix to CSV");
  bench_cmd->add_option("--n", bench_args.sizes, "sizes")->required()->delimiter(',');
  bench_cmd->add_option("--beta", bench_args.betas, "ratios")->required()->delimiter(',');
  bench_cmd->add_option("--dist", bench_args.dist, "distribution");
  bench_cmd->add_option("--algos", bench_args.algos,
                        "assoc-ro|assoc-mod|assoc-rec|assoc-full|counting|radix|std")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench_args.reps, "repetitions");
  bench_cmd->add_option("--seed", bench_args.seed, "rng seed");
  bench_cmd->add_option("--csv", bench_args.csv, "output CSV path")->required();
  bench_cmd->add_option("--word-width", bench_args.width, "8|16|32|64");
  bench_cmd->add_option("--unit", bench_args.unit, "key|record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_malformed;
  }

  try {
    if (*sort_cmd) return run_sort(sort_args);
    if (*gen_cmd) return run_gen(gen_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*predict_cmd) return run_predict(predict_n, predict_beta);
    if (*bench_cmd) return run_bench(bench_args);
  } catch (const assort::SortError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_malformed;
  }
  return exit_malformed;
}
