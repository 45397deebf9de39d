// Command-line front end: registry verification and dumping, certificate
// classification, Markov equation utilities, Auroux invariant and counting,
// and the seeded scramble/classify/replay self-test.
//
// Exit codes: 0 success, 1 verification failure (stage-tagged diagnostics on
// stderr), 2 malformed input or usage error.

#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "torusfib/json_io.hpp"
#include "torusfib/selftest.hpp"

using namespace torusfib;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const CanonicalRow& row_by_id(int id) {
  const auto& reg = canonical_registry();
  if (id < 1 || id > static_cast<int>(reg.size()))
    throw std::invalid_argument("row must be between 1 and " +
                                std::to_string(reg.size()));
  return reg[static_cast<std::size_t>(id - 1)];
}

markov::MarkovTriple parse_triple(const std::string& text) {
  json j = json::parse(text);
  return j.get<markov::MarkovTriple>();
}

int cmd_verify_table(const std::string& format) {
  json report = json::array();
  for (const CanonicalRow& row : canonical_registry()) {
    bool ok = is_extremal_rational(row.factorization());
    if (format == "json") {
      report.push_back(json{{"row", row.row_id}, {"ok", ok}});
    } else {
      std::cout << "row " << row.row_id << ": " << (ok ? "OK" : "FAIL") << "\n";
    }
    if (!ok) return 1;  // unreachable: the registry validates at load
  }
  if (format == "json") std::cout << report.dump() << "\n";
  return 0;
}

int cmd_registry_dump(const std::string& format) {
  const auto& reg = canonical_registry();
  if (format == "json") {
    std::cout << json(reg).dump() << "\n";
  } else {
    for (const CanonicalRow& row : reg) {
      std::cout << "row " << row.row_id << ": powers (" << row.powers[0]
                << "," << row.powers[1] << "," << row.powers[2] << ") cycles "
                << row.cycles[0].str() << " " << row.cycles[1].str() << " "
                << row.cycles[2].str() << " boundary " << row.boundary.str()
                << "\n";
    }
  }
  return 0;
}

int cmd_classify(const std::string& input, const std::string& format) {
  Factorization f = json::parse(read_input(input)).get<Factorization>();
  f.validate();
  Certificate cert = classify(f);
  if (!verify_certificate(f, cert)) {
    std::cerr << "[replay] certificate failed independent replay\n";
    return 1;
  }
  if (format == "json") {
    std::cout << json(cert).dump() << "\n";
  } else {
    std::cout << "row " << cert.row_id << ", " << cert.word.size()
              << " mutation(s), digest " << cert.digest << "\n";
    std::cout << json(cert).dump(2) << "\n";
  }
  return 0;
}

int cmd_markov_solve(int row_id, long bound, const std::string& format) {
  markov::MarkovType ty = markov::type_for_row(row_by_id(row_id));
  auto sols = markov::enumerate_solutions(ty, bound);
  if (format == "json") {
    std::cout << json(sols).dump() << "\n";
  } else {
    for (const auto& t : sols)
      std::cout << t.x << " " << t.y << " " << t.z << "\n";
  }
  return 0;
}

int cmd_markov_reduce(int row_id, const std::string& triple_text,
                      const std::string& format) {
  markov::MarkovType ty = markov::type_for_row(row_by_id(row_id));
  markov::MarkovTriple t = parse_triple(triple_text);
  if (!markov::is_solution(t, ty))
    throw std::invalid_argument("triple is not a positive solution of row " +
                                std::to_string(row_id));
  markov::ReduceResult red = markov::reduce_to_minimum(t, ty);
  markov::ReduceResult norm = markov::normalize_minimum(red.t, red.ty);
  std::vector<int> word = red.word;
  word.insert(word.end(), norm.word.begin(), norm.word.end());
  json out{{"minimum", norm.t},
           {"powers", norm.ty},
           {"word", word}};
  if (format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "minimum [" << norm.t.x << "," << norm.t.y << "," << norm.t.z
              << "] via " << word.size() << " mutation(s)\n"
              << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_markov_orbit(int row_id, int depth, const std::string& format) {
  markov::MarkovType ty = markov::type_for_row(row_by_id(row_id));
  markov::MarkovState start = markov::canonical_minimum({ty.l, ty.m, ty.n});
  std::set<markov::MarkovState> seen{start};
  std::deque<std::pair<markov::MarkovState, std::vector<int>>> queue{
      {start, {}}};
  json out = json::array();
  while (!queue.empty()) {
    auto [state, word] = queue.front();
    queue.pop_front();
    out.push_back(json{{"triple", state.t}, {"powers", state.ty},
                       {"word", word}});
    if (static_cast<int>(word.size()) >= depth) continue;
    for (int which : {1, 2, 3}) {
      markov::MarkovState next = markov::mutate(state.t, state.ty, which);
      if (!seen.insert(next).second) continue;
      std::vector<int> next_word = word;
      next_word.push_back(which);
      queue.emplace_back(next, next_word);
    }
  }
  if (format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& entry : out)
      std::cout << entry["triple"].dump() << " powers "
                << entry["powers"].dump() << " word " << entry["word"].dump()
                << "\n";
  }
  return 0;
}

int cmd_auroux_invariant(const std::string& input, const std::string& format) {
  auto p = json::parse(read_input(input)).get<auroux::PrimitivePair>();
  p = auroux::make_pair(p.c1, p.c2);
  auroux::AurouxInvariant inv = auroux::auroux_invariant(p);
  if (format == "json") {
    std::cout << json{{"n", int_to_json(inv.n)}, {"k", int_to_json(inv.k)}}.dump()
              << "\n";
  } else {
    std::cout << "n = " << inv.n << ", k = " << inv.k << " (mod " << inv.n
              << ")\n";
  }
  return 0;
}

int cmd_auroux_equiv(const std::string& first, const std::string& second,
                     const std::string& format) {
  auto p1 = json::parse(read_input(first)).get<auroux::PrimitivePair>();
  auto p2 = json::parse(read_input(second)).get<auroux::PrimitivePair>();
  p1 = auroux::make_pair(p1.c1, p1.c2);
  p2 = auroux::make_pair(p2.c1, p2.c2);
  auto [eq, witness] = auroux::equivalent(p1, p2);
  json out{{"equivalent", eq}};
  if (witness) out["witness"] = *witness;
  if (format == "json") {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (eq ? "equivalent" : "inequivalent") << "\n"
              << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_auroux_count(long long n, bool table, const std::string& format) {
  if (table) {
    json rows = json::array();
    for (long long i = 1; i <= n; ++i) {
      if (format == "json")
        rows.push_back(json::array({i, auroux::count_classes(i)}));
      else
        std::cout << i << "\t" << auroux::count_classes(i) << "\n";
    }
    if (format == "json") std::cout << rows.dump() << "\n";
  } else {
    std::cout << auroux::count_classes(n) << "\n";
  }
  return 0;
}

int cmd_fuzz(int type, int trials, std::uint64_t seed, int moves,
             int conj_power, const std::string& format) {
  std::vector<const CanonicalRow*> rows;
  if (type == 0) {
    for (const CanonicalRow& row : canonical_registry()) rows.push_back(&row);
  } else {
    rows.push_back(&row_by_id(type));
  }
  int failures = 0;
  json report = json::array();
  for (const CanonicalRow* row : rows) {
    // per-row stream derived from the seed so rows are independent
    Rng rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(
                                                row->row_id)));
    int row_failures = 0;
    for (int i = 0; i < trials; ++i) {
      FuzzTrial t = fuzz_trial(*row, i, rng, moves, conj_power);
      if (!t.ok) ++row_failures;
      if (format == "json") {
        json entry{{"row", t.row_id}, {"trial", t.trial}, {"ok", t.ok}};
        if (!t.ok) entry["failure"] = t.failure;
        report.push_back(entry);
      } else if (!t.ok) {
        std::cout << "row " << t.row_id << " trial " << t.trial << ": FAIL "
                  << t.failure << "\n";
      }
    }
    failures += row_failures;
    if (format != "json")
      std::cout << "row " << row->row_id << ": " << trials << " trial(s), "
                << row_failures << " failure(s) (seed " << seed << ")\n";
  }
  if (format == "json") std::cout << report.dump() << "\n";
  if (failures > 0) {
    std::cerr << "[fuzz] " << failures << " failure(s); reproduce with --seed "
              << seed << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monodromy factorization toolkit for genus-1 Lefschetz "
               "fibrations over the disc"};
  app.require_subcommand(0, 1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("TORUSFIB_FORMAT");

  std::function<int()> action;

  app.add_subcommand("verify-table", "check all 14 canonical rows")
      ->callback([&] { action = [&] { return cmd_verify_table(format); }; });

  {
    CLI::App* registry = app.add_subcommand("registry", "registry access");
    registry->require_subcommand(1);
    registry->add_subcommand("dump", "emit the canonical registry")
        ->callback([&] { action = [&] { return cmd_registry_dump(format); }; });
  }

  {
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a factorization (JSON)");
    auto input = std::make_shared<std::string>("-");
    classify_cmd->add_option("input", *input, "input file, or - for stdin");
    classify_cmd->callback([&, input] {
      action = [&, input] { return cmd_classify(*input, format); };
    });
  }

  {
    CLI::App* mk = app.add_subcommand("markov", "Markov equation utilities");
    mk->require_subcommand(1);

    CLI::App* solve = mk->add_subcommand("solve", "enumerate solutions");
    auto srow = std::make_shared<int>(1);
    auto bound = std::make_shared<long>(100);
    solve->add_option("--row", *srow, "registry row (1-14)")->required();
    solve->add_option("--bound", *bound, "max coordinate");
    solve->callback([&, srow, bound] {
      action = [&, srow, bound] {
        return cmd_markov_solve(*srow, *bound, format);
      };
    });

    CLI::App* reduce = mk->add_subcommand("reduce", "reduce to the canonical minimum");
    auto rrow = std::make_shared<int>(1);
    auto triple = std::make_shared<std::string>();
    reduce->add_option("--row", *rrow, "registry row (1-14)")->required();
    reduce->add_option("--triple", *triple, "solution as [x,y,z]")->required();
    reduce->callback([&, rrow, triple] {
      action = [&, rrow, triple] {
        return cmd_markov_reduce(*rrow, *triple, format);
      };
    });

    CLI::App* orbit = mk->add_subcommand("orbit", "mutation orbit of the canonical minimum");
    auto orow = std::make_shared<int>(1);
    auto depth = std::make_shared<int>(3);
    orbit->add_option("--row", *orow, "registry row (1-14)")->required();
    orbit->add_option("--depth", *depth, "maximum word length");
    orbit->callback([&, orow, depth] {
      action = [&, orow, depth] {
        return cmd_markov_orbit(*orow, *depth, format);
      };
    });
  }

  {
    CLI::App* ax = app.add_subcommand("auroux", "two-fiber fibration tools");
    ax->require_subcommand(1);

    CLI::App* inv = ax->add_subcommand("invariant", "Auroux invariant of a pair");
    auto pair_in = std::make_shared<std::string>("-");
    inv->add_option("pair", *pair_in, "pair as [[p,q],[p,q]], file, or -");
    inv->callback([&, pair_in] {
      action = [&, pair_in] {
        // accept inline JSON as well as file/stdin
        std::string text = *pair_in;
        if (!text.empty() && text.front() == '[') {
          json j = json::parse(text);
          auto p = j.get<auroux::PrimitivePair>();
          p = auroux::make_pair(p.c1, p.c2);
          auto r = auroux::auroux_invariant(p);
          if (format == "json")
            std::cout << json{{"n", int_to_json(r.n)}, {"k", int_to_json(r.k)}}
                             .dump()
                      << "\n";
          else
            std::cout << "n = " << r.n << ", k = " << r.k << " (mod " << r.n
                      << ")\n";
          return 0;
        }
        return cmd_auroux_invariant(text, format);
      };
    });

    CLI::App* eq = ax->add_subcommand("equiv", "decide equivalence of two pairs");
    auto first = std::make_shared<std::string>();
    auto second = std::make_shared<std::string>();
    eq->add_option("first", *first, "first pair (inline JSON or file)")
        ->required();
    eq->add_option("second", *second, "second pair (inline JSON or file)")
        ->required();
    eq->callback([&, first, second] {
      action = [&, first, second] {
        auto load = [](const std::string& text) {
          json j = (!text.empty() && text.front() == '[')
                       ? json::parse(text)
                       : json::parse(read_input(text));
          auto p = j.get<auroux::PrimitivePair>();
          return auroux::make_pair(p.c1, p.c2);
        };
        auto p1 = load(*first);
        auto p2 = load(*second);
        auto [eqv, witness] = auroux::equivalent(p1, p2);
        json out{{"equivalent", eqv}};
        if (witness) out["witness"] = *witness;
        if (format == "json")
          std::cout << out.dump() << "\n";
        else
          std::cout << (eqv ? "equivalent" : "inequivalent") << "\n"
                    << out.dump(2) << "\n";
        return 0;
      };
    });

    CLI::App* count = ax->add_subcommand("count", "count equivalence classes");
    auto n = std::make_shared<long long>(1);
    auto table = std::make_shared<bool>(false);
    count->add_option("n", *n, "pairing value (or table limit)")->required();
    count->add_flag("--table", *table, "emit a table for 1..n");
    count->callback([&, n, table] {
      action = [&, n, table] { return cmd_auroux_count(*n, *table, format); };
    });
  }

  {
    CLI::App* fz = app.add_subcommand(
        "fuzz", "seeded scramble/classify/replay self-test");
    auto type = std::make_shared<int>(0);
    auto trials = std::make_shared<int>(50);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto moves = std::make_shared<int>(30);
    auto conj = std::make_shared<int>(9);
    fz->add_option("--type", *type, "registry row, 0 = all");
    fz->add_option("--trials", *trials, "trials per row");
    fz->add_option("--seed", *seed, "random seed");
    fz->add_option("--moves", *moves, "max Hurwitz moves per scramble");
    fz->add_option("--conj-power", *conj, "max boundary twist power");
    fz->callback([&, type, trials, seed, moves, conj] {
      action = [&, type, trials, seed, moves, conj] {
        return cmd_fuzz(*type, *trials, *seed, *moves, *conj, format);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!action) {
    std::cout << app.help();
    return 2;
  }

  try {
    return action();
  } catch (const classify_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
