#pragma once

// Command-line front end. run() takes explicit streams so tests can drive it.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pushall/pushall.hpp"
#include "pushall/sweeps.hpp"

namespace pushall::cli {

using json = nlohmann::json;

enum Exit : int { kOk = 0, kNo = 1, kUsage = 2 };

struct SizeTiming {
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_seconds = 0;
  double max_seconds = 0;
  std::size_t sortable = 0;
};

struct BenchReport {
  std::vector<SizeTiming> sizes;
  std::optional<double> exponent;  // least-squares slope of log(mean) on log(n)
  double elapsed_seconds = 0;
};

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  // Fisher-Yates, drawing from the top down
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(v[i - 1], v[pick(rng)]);
  }
  return Permutation(std::move(v));
}

inline std::optional<double> fit_exponent(const std::vector<SizeTiming>& t) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : t)
    if (s.samples > 0 && s.mean_seconds > 0 && s.n > 0) pts.emplace_back(std::log(double(s.n)), std::log(s.mean_seconds));
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (auto [x, y] : pts) mx += x, my += y;
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0, sxx = 0;
  for (auto [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

// Times is_pushall_sortable on uniform random permutations. Generator:
// std::mt19937_64 seeded once; sizes are drawn in the order given.
inline BenchReport bench(const std::vector<std::size_t>& sizes, std::size_t samples, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  BenchReport r;
  std::mt19937_64 rng(seed);
  for (std::size_t n : sizes) {
    SizeTiming t{n, samples, 0, 0, 0};
    double total = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      const Permutation sigma = random_permutation(n, rng);
      const auto t0 = clock::now();
      const bool ok = is_pushall_sortable(sigma);
      const double dt = std::chrono::duration<double>(clock::now() - t0).count();
      total += dt;
      t.max_seconds = std::max(t.max_seconds, dt);
      t.sortable += ok;
    }
    if (samples) t.mean_seconds = total / samples;
    r.sizes.push_back(t);
  }
  if (samples) r.exponent = fit_exponent(r.sizes);
  r.elapsed_seconds = std::chrono::duration<double>(clock::now() - start).count();
  return r;
}

namespace detail {

inline json perm_json(const Permutation& p) { return json(p.values()); }

inline json product_json(const ColoringSetProduct& prod) {
  json blocks = json::array();
  for (const auto& b : prod.blocks()) {
    json cols = json::array();
    for (const auto& c : b.colorings) cols.push_back(c.str());
    blocks.push_back({{"perm", perm_json(b.perm)}, {"colorings", cols}});
  }
  return {{"blocks", blocks}, {"count", prod.count().str()}};
}

// Non-empty lines with '#' comments and surrounding blanks removed.
inline std::vector<std::string> read_batch(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    const auto b = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

struct LineResult {
  std::string text;
  int code = kOk;
};

// Evaluates f on every line across worker threads; results keep input order.
inline std::vector<LineResult> map_lines(const std::vector<std::string>& lines, std::size_t threads,
                                         const std::function<LineResult(const std::string&)>& f) {
  std::vector<LineResult> out(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < lines.size();) {
      try {
        out[i] = f(lines[i]);
      } catch (const std::exception& e) {
        out[i] = {lines[i] + " ERROR " + e.what(), kUsage};
      }
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, lines.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

inline int worst(const std::vector<LineResult>& rs) {
  int code = kOk;
  for (const auto& r : rs) code = std::max(code, r.code);
  return code;
}

struct BatchOptions {
  std::string source;  // file name, "-" for the input stream
  std::size_t threads = 1;
};

inline int run_batch(const BatchOptions& opt, std::istream& in, std::ostream& out, std::ostream& err,
                     const std::function<LineResult(const std::string&)>& f) {
  std::vector<std::string> lines;
  if (opt.source == "-") {
    lines = read_batch(in);
  } else {
    std::ifstream file(opt.source);
    if (!file) {
      err << "error: cannot open " << opt.source << "\n";
      return kUsage;
    }
    lines = read_batch(file);
  }
  const auto results = map_lines(lines, opt.threads, f);
  for (const auto& r : results) out << r.text << "\n";
  return worst(results);
}

inline const std::vector<std::pair<std::string, std::string>>& basis_checks() {
  static const std::vector<std::pair<std::string, std::string>> m = {
      {"B+", "basis-Bplus"}, {"B1", "b1-theorem"}, {"B2", "basis-B2"},
      {"B3", "basis-B3"},    {"B", "basis-B"},     {"132-213", "basis-132-213"}};
  return m;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide and explore 2-stack pushall sortability"};
  app.name("pushall");
  app.require_subcommand(1);

  std::string perm_text, coloring_text, check, basis_name;
  bool want_word = false, as_json = false, materialize = false, count_only = false, list_checks = false,
       export_bases = false;
  std::size_t max_n = 0, samples = 20, threads = 1;
  std::uint64_t seed = 42;
  std::vector<std::size_t> sizes{250, 500, 1000};
  std::optional<std::string> batch;

  auto add_batch = [&](CLI::App* sub) {
    sub->add_option("--batch", batch, "read permutations from FILE, one per line ('-' for stdin)");
    sub->add_option("--threads", threads, "worker threads for batch mode")->check(CLI::Range(1, 256));
  };

  auto* decide = app.add_subcommand("decide", "decide pushall sortability");
  decide->add_option("perm", perm_text, "permutation, e.g. 2431 or \"2 4 3 1\"");
  decide->add_flag("--word", want_word, "also print a sorting word");
  decide->add_flag("--json", as_json);
  add_batch(decide);

  auto* colorings = app.add_subcommand("colorings", "describe the set of valid colorings");
  colorings->add_option("perm", perm_text);
  colorings->add_flag("--materialize", materialize, "list every coloring");
  colorings->add_flag("--count", count_only, "print only the number of colorings");
  colorings->add_flag("--json", as_json);
  add_batch(colorings);

  auto* sort_word = app.add_subcommand("sort-word", "synthesize a pushall sorting word");
  sort_word->add_option("perm", perm_text)->required();
  sort_word->add_option("--coloring", coloring_text, "use this coloring instead of the first valid one");
  sort_word->add_flag("--json", as_json);

  auto* sweep = app.add_subcommand("sweep", "exhaustive cross-check over S_1..S_max_n");
  sweep->add_option("--max-n", max_n);
  sweep->add_option("--check", check);
  sweep->add_flag("--list", list_checks, "list the available checks");
  sweep->add_flag("--json", as_json);

  auto* bench_cmd = app.add_subcommand("bench", "time the decider on random permutations");
  bench_cmd->add_option("--sizes", sizes)->delimiter(',');
  bench_cmd->add_option("--samples", samples);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify-basis", "regenerate the stored bases with the oracle");
  verify->add_option("--name", basis_name, "B+, B1, B2, B3, B or 132-213 (default: all)");
  verify->add_option("--max-n", max_n, "largest size to mine (default: per basis)");
  verify->add_flag("--export", export_bases, "print the stored bases as JSON and exit");

  auto* count_class = app.add_subcommand("count-class", "count sortable permutations of each size");
  count_class->add_option("--max-n", max_n)->required()->check(CLI::Range(0, 9));
  count_class->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const detail::BatchOptions batch_opt{batch.value_or(""), threads};
  auto need_perm = [&](CLI::App* sub) {
    if (!batch && perm_text.empty()) throw CLI::ValidationError(sub->get_name(), "a permutation or --batch is required");
  };

  try {
    if (*decide) {
      need_perm(decide);
      auto one = [&](const std::string& text) -> detail::LineResult {
        const Permutation sigma = parse(text);
        std::optional<StackWord> w;
        bool ok;
        if (want_word) {
          w = find_sorting_word(sigma);
          ok = w.has_value();
        } else {
          ok = is_pushall_sortable(sigma);
        }
        std::string line;
        if (as_json) {
          json j{{"perm", detail::perm_json(sigma)}, {"pushall", ok}};
          if (w) j["word"] = w->str();
          line = j.dump();
        } else {
          line = batch ? sigma.str() + " " : "";
          line += ok ? "PUSHALL" : "NOT-PUSHALL";
          if (w) line += (batch ? " " : "\n") + w->str();
        }
        return {line, ok ? kOk : kNo};
      };
      if (batch) return detail::run_batch(batch_opt, in, out, err, one);
      auto r = one(perm_text);
      out << r.text << "\n";
      return r.code;
    }

    if (*colorings) {
      need_perm(colorings);
      auto one = [&](const std::string& text) -> detail::LineResult {
        const Permutation sigma = parse(text);
        const auto prod = enumerate_colorings(sigma);
        std::string line;
        if (count_only) {
          line = (batch ? sigma.str() + " " : "") + prod.count().str();
        } else if (materialize) {
          json cols = json::array();
          std::string plain;
          prod.for_each([&](const Bicoloring& b) {
            cols.push_back(b.str());
            plain += (plain.empty() ? "" : (batch ? " " : "\n")) + b.str();
          });
          line = as_json ? json{{"perm", detail::perm_json(sigma)}, {"colorings", cols}}.dump()
                         : (batch ? sigma.str() + (plain.empty() ? "" : " ") : "") + plain;
        } else {
          line = detail::product_json(prod).dump();
        }
        return {line, kOk};
      };
      if (batch) return detail::run_batch(batch_opt, in, out, err, one);
      auto r = one(perm_text);
      if (!r.text.empty()) out << r.text << "\n";
      return r.code;
    }

    if (*sort_word) {
      const Permutation sigma = parse(perm_text);
      std::optional<Bicoloring> b;
      if (!coloring_text.empty()) {
        b = Bicoloring::parse(coloring_text);
        if (b->size() != sigma.size()) {
          err << "error: coloring length " << b->size() << " does not match permutation size " << sigma.size()
              << "\n";
          return kUsage;
        }
      } else {
        auto cur = enumerate_colorings(sigma).cursor();
        if (!cur.done()) b = cur.current();
      }
      std::optional<StackWord> w;
      if (b) w = sorting_word(sigma, *b);
      if (as_json) {
        json j{{"perm", detail::perm_json(sigma)}};
        j["coloring"] = b ? json(b->str()) : json(nullptr);
        j["word"] = w ? json(w->str()) : json(nullptr);
        out << j.dump() << "\n";
      } else if (w) {
        out << w->str() << "\n";
      } else {
        out << (coloring_text.empty() ? "NOT-PUSHALL" : "INVALID-COLORING") << "\n";
      }
      return w ? kOk : kNo;
    }

    if (*sweep) {
      if (list_checks) {
        for (const auto& name : check_names())
          out << name << " (max-n " << check_cap(name) << "): " << check_description(name) << "\n";
        return kOk;
      }
      if (check.empty() || max_n == 0) throw CLI::ValidationError("sweep", "--check and --max-n are required");
      const auto t0 = std::chrono::steady_clock::now();
      const CheckResult r = run_check(check, max_n);
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (as_json) {
        out << json{{"command", "sweep"},
                    {"check", r.name},
                    {"max_n", r.max_n},
                    {"inputs", r.inputs},
                    {"elapsed_seconds", dt},
                    {"pass", r.pass},
                    {"counterexample", r.pass ? json(nullptr) : json(r.counterexample)}}
                   .dump()
            << "\n";
      } else if (r.pass) {
        out << "PASS " << r.name << " max-n=" << r.max_n << " inputs=" << r.inputs << "\n";
      } else {
        out << "FAIL " << r.name << " max-n=" << r.max_n << " inputs=" << r.inputs << " counterexample " << r.counterexample
            << "\n";
      }
      return r.pass ? kOk : kNo;
    }

    if (*bench_cmd) {
      const BenchReport r = bench(sizes, samples, seed);
      if (as_json) {
        json rows = json::array();
        for (const auto& t : r.sizes)
          rows.push_back({{"n", t.n},
                          {"samples", t.samples},
                          {"mean_seconds", t.mean_seconds},
                          {"max_seconds", t.max_seconds},
                          {"sortable", t.sortable}});
        out << json{{"command", "bench"},
                    {"inputs", samples * sizes.size()},
                    {"seed", seed},
                    {"elapsed_seconds", r.elapsed_seconds},
                    {"sizes", rows},
                    {"exponent", r.exponent ? json(*r.exponent) : json(nullptr)}}
                   .dump()
            << "\n";
        return kOk;
      }
      if (samples == 0) {
        out << "no samples\n";
        return kOk;
      }
      char buf[160];
      out << "n,samples,mean_seconds,max_seconds,sortable\n";
      for (const auto& t : r.sizes) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%.6g,%.6g,%zu\n", t.n, t.samples, t.mean_seconds, t.max_seconds,
                      t.sortable);
        out << buf;
      }
      if (r.exponent) {
        std::snprintf(buf, sizeof buf, "exponent %.3f\n", *r.exponent);
        out << buf;
      }
      return kOk;
    }

    if (*verify) {
      if (export_bases) {
        json j = json::object();
        for (const PatternBasis* b : all_bases()) {
          json pats = json::array();
          for (const auto& p : b->patterns) pats.push_back(p.str());
          j[b->name] = pats;
        }
        out << j.dump(2) << "\n";
        return kOk;
      }
      bool found = basis_name.empty(), all_pass = true;
      for (const auto& [name, key] : detail::basis_checks()) {
        if (!basis_name.empty() && basis_name != name) continue;
        found = true;
        const std::size_t n = max_n ? std::min(max_n, check_cap(key)) : check_cap(key);
        const CheckResult r = run_check(key, n);
        all_pass = all_pass && r.pass;
        out << (r.pass ? "PASS " : "FAIL ") << name << " up to size " << n;
        if (!r.pass) out << ": " << r.counterexample;
        out << "\n";
      }
      if (!found) {
        err << "error: unknown basis '" << basis_name << "'\n";
        return kUsage;
      }
      return all_pass ? kOk : kNo;
    }

    if (*count_class) {
      json rows = json::array();
      for (std::size_t n = 1; n <= max_n; ++n) {
        std::size_t total = 0, sortable = 0;
        for_each_permutation(n, [&](const Permutation& s) {
          ++total;
          sortable += is_pushall_sortable(s);
        });
        if (as_json) rows.push_back({{"n", n}, {"sortable", sortable}, {"total", total}});
        else out << n << " " << sortable << " " << total << "\n";
      }
      if (as_json) out << json{{"command", "count-class"}, {"counts", rows}}.dump() << "\n";
      return kOk;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"pushall"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace pushall::cli
