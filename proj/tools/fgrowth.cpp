// fgrowth: exact growth computations for Thompson's group F over {x0, x1}.
//
// Commands:
//   length    geodesic length of a word
//   count     print f(n) (and optionally g(n)) by one of three methods
//   validate  cross-check the methods against each other
//   analyze   growth-rate bounds, ratios, doubling and amplitude estimates
//   emit      write a series as an OEIS-style b-file
//
// Exit codes: 0 success, 1 cross-check disagreement or internal failure,
// 2 usage or parse error, 3 resource limit, 4 series not submultiplicative,
// 5 I/O failure.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "thompsonf/algorithm_a.hpp"
#include "thompsonf/algorithm_b.hpp"
#include "thompsonf/series_analysis.hpp"

namespace {

using thompsonf::GrowthSeries;
using thompsonf::Int;

constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kParseError = 2;
constexpr int kResourceLimit = 3;
constexpr int kNotSubmultiplicative = 4;
constexpr int kIoError = 5;

enum class Method { a, b, oracle };
enum class Format { table, csv, bfile };

struct RunConfig {
  std::size_t max_n = 22;
  Method method = Method::b;
  bool geodesics = false;
  unsigned precision = 20;
  Format format = Format::table;
  unsigned threads = 1;
  std::size_t memory_budget = 0;  // bytes; 0 means unlimited
};

// rough per-entry footprints for translating a byte budget into element caps
constexpr std::size_t kBytesPerBfsElement = 256;
constexpr std::size_t kBytesPerDpState = 128;

std::size_t dp_state_budget(const RunConfig& cfg) {
  if (cfg.memory_budget == 0) return 0;
  return std::max<std::size_t>(1, cfg.memory_budget / kBytesPerDpState);
}

thompsonf::BfsOptions oracle_options(const RunConfig& cfg) {
  thompsonf::BfsOptions opts;
  if (cfg.memory_budget > 0)
    opts.element_budget = std::max<std::size_t>(1, cfg.memory_budget / kBytesPerBfsElement);
  return opts;
}

void warn_deep_walk(std::size_t max_n) {
  if (max_n > 16)
    std::cerr << "note: --method a beyond n = 16 enumerates billions of words; "
                 "expect a long run\n";
}

void note_threads(const RunConfig& cfg) {
  if (cfg.threads > 1 && cfg.method != Method::a)
    std::cerr << "note: --threads parallelizes --method a only\n";
}

GrowthSeries compute_series(const RunConfig& cfg) {
  if (cfg.geodesics && cfg.method != Method::a)
    throw std::invalid_argument("--geodesics requires --method a");
  switch (cfg.method) {
    case Method::b:
      return thompsonf::growth_series(cfg.max_n, false, dp_state_budget(cfg));
    case Method::a: {
      warn_deep_walk(cfg.max_n);
      thompsonf::SphereCounts counts = thompsonf::count_spheres(cfg.max_n, cfg.threads);
      if (cfg.geodesics) return counts.geodesics;
      return counts.elements;
    }
    case Method::oracle:
      return thompsonf::bfs_sphere_counts(cfg.max_n, oracle_options(cfg));
  }
  throw std::logic_error("compute_series: unreachable method");
}

int run_length(const std::string& text) {
  thompsonf::Word w = thompsonf::parse_word(text);
  std::cout << thompsonf::geodesic_length(w) << '\n';
  return kOk;
}

int run_count(const RunConfig& cfg) {
  if (cfg.geodesics && cfg.method != Method::a) {
    std::cerr << "error: --geodesics requires --method a\n";
    return kParseError;
  }
  if (cfg.geodesics && cfg.format == Format::bfile) {
    std::cerr << "error: a b-file holds one series; use `emit --geodesics` for g(n)\n";
    return kParseError;
  }
  note_threads(cfg);

  auto header = [&] {
    if (cfg.format == Format::table)
      std::cout << (cfg.geodesics ? "# n f(n) g(n)\n" : "# n f(n)\n");
    else if (cfg.format == Format::csv)
      std::cout << (cfg.geodesics ? "n,f,g\n" : "n,f\n");
  };
  char sep = cfg.format == Format::csv ? ',' : ' ';

  if (cfg.method == Method::b) {
    header();
    thompsonf::stream_growth(
        cfg.max_n,
        [&](std::size_t n, const Int& fn) {
          std::cout << n << sep << fn << '\n';
          std::cout.flush();  // each value is final as soon as its level closes
        },
        false, dp_state_budget(cfg));
    return kOk;
  }

  GrowthSeries elements;
  GrowthSeries geodesics;
  if (cfg.method == Method::a) {
    warn_deep_walk(cfg.max_n);
    thompsonf::SphereCounts counts = thompsonf::count_spheres(cfg.max_n, cfg.threads);
    elements = std::move(counts.elements);
    geodesics = std::move(counts.geodesics);
  } else {
    elements = thompsonf::bfs_sphere_counts(cfg.max_n, oracle_options(cfg));
  }
  header();
  for (std::size_t n = 0; n <= cfg.max_n; ++n) {
    std::cout << n << sep << elements.values[n];
    if (cfg.geodesics) std::cout << sep << geodesics.values[n];
    std::cout << '\n';
  }
  return kOk;
}

int run_validate(std::size_t n_a, std::size_t n_oracle, const RunConfig& cfg) {
  if (n_a > 16) {
    std::cerr << "error: --max-n-a is capped at 16\n";
    return kParseError;
  }
  if (n_oracle > 10) {
    std::cerr << "error: --max-n-oracle is capped at 10\n";
    return kParseError;
  }
  std::size_t n_b = std::max(n_a, n_oracle);
  GrowthSeries from_b = thompsonf::growth_series(n_b);
  thompsonf::SphereCounts from_a = thompsonf::count_spheres(n_a, cfg.threads);
  GrowthSeries from_oracle = thompsonf::bfs_sphere_counts(n_oracle, oracle_options(cfg));

  bool agree = true;
  std::string first_diff;
  std::cout << "# n algorithm_b algorithm_a oracle status\n";
  for (std::size_t n = 0; n <= n_b; ++n) {
    const Int& b = from_b.values[n];
    std::cout << n << ' ' << b << ' ';
    bool row_ok = true;
    if (n <= n_a) {
      const Int& a = from_a.elements.values[n];
      std::cout << a << ' ';
      if (a != b) {
        row_ok = false;
        if (first_diff.empty())
          first_diff = "algorithm_a vs algorithm_b at n = " + std::to_string(n) + ": " +
                       a.str() + " vs " + b.str();
      }
    } else {
      std::cout << "- ";
    }
    if (n <= n_oracle) {
      const Int& o = from_oracle.values[n];
      std::cout << o << ' ';
      if (o != b) {
        row_ok = false;
        if (first_diff.empty())
          first_diff = "oracle vs algorithm_b at n = " + std::to_string(n) + ": " +
                       o.str() + " vs " + b.str();
      }
    } else {
      std::cout << "- ";
    }
    std::cout << (row_ok ? "ok" : "MISMATCH") << '\n';
    agree = agree && row_ok;
  }
  if (!agree) {
    std::cerr << "error: first disagreement: " << first_diff << '\n';
    return kDisagreement;
  }
  std::cout << "# all methods agree\n";
  return kOk;
}

int run_analyze(const RunConfig& cfg, const std::string& input_path) {
  if (cfg.format == Format::bfile) {
    std::cerr << "error: analyze prints table or csv\n";
    return kParseError;
  }
  GrowthSeries series;
  if (!input_path.empty()) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open '" << input_path << "'\n";
      return kIoError;
    }
    try {
      series = thompsonf::read_bfile(
          in, cfg.geodesics ? thompsonf::SeriesKind::geodesics
                            : thompsonf::SeriesKind::elements);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kParseError;
    }
  } else {
    series = compute_series(cfg);
  }
  if (series.values.size() < 2) {
    std::cerr << "error: analyze needs at least two series terms\n";
    return kParseError;
  }

  auto bounds = thompsonf::fekete_bounds(series, cfg.precision);
  if (cfg.format == Format::csv) {
    std::cout << "n,f,fekete_upper,ratio\n";
    for (const thompsonf::BoundsReport& row : bounds)
      std::cout << row.n << ',' << series.values[row.n] << ',' << row.upper.str() << ','
                << row.ratio.str() << '\n';
    return kOk;
  }
  std::cout << "# n f fekete_upper ratio doubling\n";
  for (const thompsonf::BoundsReport& row : bounds) {
    std::cout << row.n << ' ' << series.values[row.n] << ' ' << row.upper.str() << ' '
              << row.ratio.str() << ' ';
    if (row.doubling.has_value())
      std::cout << row.doubling->str();
    else
      std::cout << '-';
    std::cout << '\n';
  }
  thompsonf::Decimal lower = thompsonf::lower_bound_constant(cfg.precision);
  std::cout << "# lower bound (3+sqrt(5))/2 = " << lower.str() << '\n';
  std::cout << "# upper-lower gap at n = " << bounds.back().n << ": "
            << thompsonf::abs_difference(bounds.back().upper, lower).str() << '\n';
  if (series.kind == thompsonf::SeriesKind::elements && series.values.size() >= 50) {
    thompsonf::AmplitudeFit fit = thompsonf::amplitude_fit(series, lower);
    std::cout << "# amplitude estimate f(N)/rate^N at N = " << series.values.size() - 1
              << ": " << fit.amplitude.str() << '\n';
  }
  return kOk;
}

int run_emit(const RunConfig& cfg, const std::string& out_path) {
  note_threads(cfg);
  GrowthSeries series = compute_series(cfg);
  try {
    thompsonf::write_bfile(series, out_path);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spherical and geodesic growth of Thompson's group F on {x0, x1}"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string word_text;
  std::string out_path;
  std::string input_path;
  std::size_t n_a = 12;
  std::size_t n_oracle = 8;

  const std::map<std::string, Method> method_map{
      {"a", Method::a}, {"b", Method::b}, {"oracle", Method::oracle}};
  const std::map<std::string, Format> format_map{
      {"table", Format::table}, {"csv", Format::csv}, {"bfile", Format::bfile}};

  auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", cfg.method,
                    "a = geodesic word walk, b = column transfer (default), "
                    "oracle = breadth-first ball")
        ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
    cmd->add_option("--max-n", cfg.max_n, "largest length to compute (default 22)");
    cmd->add_flag("--geodesics", cfg.geodesics,
                  "work with geodesic-word counts g(n) (requires --method a)");
    cmd->add_option("--threads", cfg.threads, "worker threads for --method a (default 1)");
    cmd->add_option("--memory-budget", cfg.memory_budget,
                    "approximate memory cap in bytes (0 = unlimited)");
  };

  CLI::App* length = app.add_subcommand(
      "length", "geodesic length of a word in letters a, A, b, B (or x0, x0^-1, ...)");
  length->add_option("word", word_text, "the word; an empty string is the identity")
      ->required();

  CLI::App* count = app.add_subcommand("count", "print the growth series");
  add_method(count);
  count->add_option("--format", cfg.format, "table (default), csv, or bfile")
      ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));

  CLI::App* validate =
      app.add_subcommand("validate", "cross-check the two algorithms and the oracle");
  validate->add_option("--max-n-a", n_a,
                       "range for the geodesic word walk (default 12, cap 16)");
  validate->add_option("--max-n-oracle", n_oracle,
                       "range for the breadth-first oracle (default 8, cap 10)");
  validate->add_option("--threads", cfg.threads, "worker threads for the word walk");

  CLI::App* analyze =
      app.add_subcommand("analyze", "growth-rate bounds, ratios, and estimates");
  analyze->add_option("bfile", input_path,
                      "read the series from a b-file instead of computing it");
  add_method(analyze);
  analyze->add_option("--precision", cfg.precision, "decimal digits (default 20)");
  analyze->add_option("--format", cfg.format, "table (default) or csv")
      ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));

  CLI::App* emit = app.add_subcommand("emit", "write the series as an OEIS-style b-file");
  add_method(emit);
  emit->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code == 0) return kOk;
    return kParseError;
  }

  try {
    if (app.got_subcommand(length)) return run_length(word_text);
    if (app.got_subcommand(count)) return run_count(cfg);
    if (app.got_subcommand(validate)) return run_validate(n_a, n_oracle, cfg);
    if (app.got_subcommand(analyze)) return run_analyze(cfg, input_path);
    if (app.got_subcommand(emit)) return run_emit(cfg, out_path);
  } catch (const thompsonf::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const thompsonf::SubmultiplicativityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotSubmultiplicative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kDisagreement;
  }
  return kOk;
}
