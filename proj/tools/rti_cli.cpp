// Interactive front end for the streaming index engine.
//
// Text protocol on stdin/stdout:
//   alphabet <chars>   declare the character alphabet (before first feed)
//   feed <symbols>     prepend symbols left-to-right
//   query <pattern>    print sorted occurrence positions (empty line if none)
//   check <pattern>    verify query against the built-in oracle
//   stats              print key=value report
//   quit
//
// Flags: --params d=..,dprime=..,delta=..,tau=..,n0=.. --bench <file>
//        --seed <u64> --fuzz <n>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rti/engine.hpp"

using rti::Engine;
using rti::ParamOverrides;
using rti::Position;
using rti::Symbol;

namespace {

struct Session {
  ParamOverrides overrides;
  uint64_t n0 = 1024;
  std::string alphabet;                 // index -> character
  std::vector<int> char_to_symbol;      // 256 entries, -1 = unmapped
  std::unique_ptr<Engine> engine;

  Session() : char_to_symbol(256, -1) {}

  void set_alphabet(const std::string& chars) {
    if (engine && engine->reads() > 0) {
      throw std::runtime_error("alphabet cannot change after feeding");
    }
    if (chars.size() < 2) throw std::runtime_error("alphabet needs >= 2 characters");
    std::fill(char_to_symbol.begin(), char_to_symbol.end(), -1);
    for (size_t i = 0; i < chars.size(); ++i) {
      unsigned char c = chars[i];
      if (char_to_symbol[c] != -1) {
        throw std::runtime_error("duplicate alphabet character");
      }
      char_to_symbol[c] = static_cast<int>(i);
    }
    alphabet = chars;
    engine = std::make_unique<Engine>(static_cast<uint32_t>(chars.size()), n0,
                                      overrides);
  }

  std::vector<Symbol> map(const std::string& s) const {
    if (!engine) throw std::runtime_error("no alphabet declared");
    std::vector<Symbol> out;
    out.reserve(s.size());
    for (unsigned char c : s) {
      int v = char_to_symbol[c];
      if (v < 0) throw std::runtime_error(std::string("character '") + char(c) +
                                          "' not in alphabet");
      out.push_back(static_cast<Symbol>(v));
    }
    return out;
  }
};

void print_positions(const std::vector<Position>& v, std::ostream& os) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  os << '\n';
}

int run_protocol(Session& s, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cmd, arg;
    ls >> cmd;
    if (cmd.empty()) continue;
    try {
      if (cmd == "alphabet") {
        ls >> arg;
        s.set_alphabet(arg);
      } else if (cmd == "feed") {
        ls >> arg;
        for (Symbol a : s.map(arg)) s.engine->prepend(a);
      } else if (cmd == "query") {
        ls >> arg;
        print_positions(s.engine->query(s.map(arg)), out);
      } else if (cmd == "check") {
        ls >> arg;
        auto p = s.map(arg);
        auto got = s.engine->query(p);
        auto want = s.engine->oracle_query(p);
        if (got == want) {
          out << "OK\n";
        } else {
          out << "MISMATCH\n";
          out << "index: ";
          print_positions(got, out);
          out << "oracle: ";
          print_positions(want, out);
        }
      } else if (cmd == "stats") {
        if (!s.engine) throw std::runtime_error("no alphabet declared");
        auto st = s.engine->stats();
        out << "reads=" << st.reads << '\n'
            << "sigma=" << st.params.sigma << '\n'
            << "n_assumed=" << st.params.n_assumed << '\n'
            << "d=" << st.params.d << '\n'
            << "dprime=" << st.params.d_prime << '\n'
            << "delta=" << st.params.delta << '\n'
            << "tau=" << st.params.tau << '\n'
            << "rebuilds=" << st.rebuilds << '\n'
            << "rebuilding=" << (st.rebuilding ? 1 : 0) << '\n'
            << "long_nodes=" << st.long_nodes << '\n'
            << "long_elements=" << st.long_elements << '\n'
            << "medium_nodes=" << st.medium_nodes << '\n'
            << "medium_elements=" << st.medium_elements << '\n'
            << "short_nodes=" << st.short_nodes << '\n'
            << "short_grams=" << st.short_grams << '\n'
            << "long_horizon=" << st.long_horizon << '\n'
            << "medium_horizon=" << st.medium_horizon << '\n'
            << "ops_min=" << st.ops_min << '\n'
            << "ops_median=" << st.ops_median << '\n'
            << "ops_p99=" << st.ops_p99 << '\n'
            << "ops_max=" << st.ops_max << '\n';
      } else if (cmd == "quit") {
        return 0;
      } else {
        out << "error: unknown command '" << cmd << "'\n";
      }
    } catch (const std::exception& e) {
      out << "error: " << e.what() << '\n';
    }
  }
  return 0;
}

// Streams a file (first line: alphabet characters, remaining lines: text)
// and writes a per-prepend CSV to stdout.
int run_bench(Session& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return 1;
  }
  std::string chars;
  if (!std::getline(in, chars)) {
    std::cerr << "error: empty bench file\n";
    return 1;
  }
  s.set_alphabet(chars);
  std::string text, line;
  while (std::getline(in, line)) text += line;
  auto symbols = s.map(text);
  std::cout << "i,ops,nanos\n";
  uint64_t prev_ops = 0;
  for (size_t i = 0; i < symbols.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    s.engine->prepend(symbols[i]);
    auto t1 = std::chrono::steady_clock::now();
    uint64_t ops = s.engine->op_history().back();
    (void)prev_ops;
    std::cout << (i + 1) << ',' << ops << ','
              << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                     .count()
              << '\n';
  }
  return 0;
}

// Random prepend/query/check operations verified against the oracle.
int run_fuzz(Session& s, uint64_t n_ops, uint64_t seed) {
  std::mt19937_64 rng(seed);
  uint32_t sigma = 2 + static_cast<uint32_t>(rng() % 3);
  std::string chars;
  for (uint32_t i = 0; i < sigma; ++i) chars += static_cast<char>('a' + i);
  s.set_alphabet(chars);
  std::vector<Symbol> raw;
  uint64_t mismatches = 0, queries = 0;
  for (uint64_t t = 0; t < n_ops; ++t) {
    if (raw.empty() || rng() % 4 != 0) {
      Symbol a = static_cast<Symbol>(rng() % sigma);
      s.engine->prepend(a);
      raw.push_back(a);
      continue;
    }
    size_t m = 1 + rng() % std::min<size_t>(raw.size(), 2 * s.engine->params().tau);
    std::vector<Symbol> p(m);
    if (rng() % 2 == 0) {
      Position j = m + rng() % (raw.size() - m + 1);
      for (size_t k = 0; k < m; ++k) p[k] = raw[j - 1 - k];
    } else {
      for (auto& x : p) x = static_cast<Symbol>(rng() % sigma);
    }
    ++queries;
    if (s.engine->query(p) != s.engine->oracle_query(p)) {
      ++mismatches;
      std::cerr << "fuzz mismatch at op " << t << " (|p|=" << m
                << ", reads=" << raw.size() << ")\n";
    }
  }
  std::cout << "fuzz: " << n_ops << " ops, " << queries << " queries, "
            << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

bool apply_params(Session& s, const std::string& spec) {
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) return false;
    std::string key = item.substr(0, eq);
    uint64_t value = std::stoull(item.substr(eq + 1));
    if (key == "d") s.overrides.d = static_cast<uint32_t>(value);
    else if (key == "dprime") s.overrides.d_prime = static_cast<uint32_t>(value);
    else if (key == "delta") s.overrides.delta = static_cast<uint32_t>(value);
    else if (key == "tau") s.overrides.tau = static_cast<uint32_t>(value);
    else if (key == "n0") s.n0 = value;
    else return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming text index"};
  std::string params_spec, bench_path;
  uint64_t seed = 1, fuzz_ops = 0;
  app.add_option("--params", params_spec,
                 "override d=..,dprime=..,delta=..,tau=..,n0=..");
  app.add_option("--bench", bench_path, "stream a file, emit per-prepend CSV");
  app.add_option("--seed", seed, "fuzz RNG seed");
  app.add_option("--fuzz", fuzz_ops, "self-check N random ops vs the oracle");
  CLI11_PARSE(app, argc, argv);

  Session s;
  if (!params_spec.empty() && !apply_params(s, params_spec)) {
    std::cerr << "error: bad --params spec\n";
    return 2;
  }
  try {
    if (fuzz_ops > 0) return run_fuzz(s, fuzz_ops, seed);
    if (!bench_path.empty()) return run_bench(s, bench_path);
    return run_protocol(s, std::cin, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
