#include "ck/cli.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ck/arborescence.hpp"
#include "ck/bounds.hpp"
#include "ck/identities.hpp"
#include "ck/random.hpp"

namespace ck::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

RingPtr parse_ring(const std::string& selector) {
  if (selector == "int") return integers();
  if (selector.rfind("mod:", 0) == 0) {
    unsigned long m = 0;
    try {
      std::size_t used = 0;
      m = std::stoul(selector.substr(4), &used);
      if (used != selector.size() - 4) throw std::invalid_argument(selector);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad modulus in ring '" + selector + "'");
    }
    return integers_mod(m);
  }
  throw std::invalid_argument("unknown ring '" + selector +
                              "' (expected int or mod:<m>)");
}

Matrix random_square(RandomSource& rng, const RingPtr& ring, int n,
                     long long lo, long long hi) {
  return Matrix::build(ring, n, n, [&](int, int) {
    return ring->from_int(rng.int_in(lo, hi));
  });
}

EndoMap random_n_fixing(RandomSource& rng, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n - 1; ++i) {
    images[i] = static_cast<int>(rng.int_in(1, n));
  }
  images[n - 1] = n;
  return EndoMap(std::move(images));
}

// ------------------------------------------------------------------- det

struct DetOptions {
  std::string file;
  std::string algo = "both";
  std::string ring = "int";
  bool as_json = false;
};

int run_det(const DetOptions& opt, std::ostream& out) {
  const RingPtr ring = parse_ring(opt.ring);
  const Matrix a = read_matrix_file(opt.file, ring);
  if (opt.algo != "both") {
    const RingValue d =
        opt.algo == "leibniz" ? leibniz_det(a) : chio_det(a);
    if (opt.as_json) {
      out << json{{"algo", opt.algo}, {"det", d.str()}}.dump() << "\n";
    } else {
      out << d.str() << "\n";
    }
    return kExitOk;
  }
  const RingValue l = leibniz_det(a);
  const RingValue c = chio_det(a);
  const bool agree = l == c;
  if (opt.as_json) {
    out << json{{"algo", "both"},
                {"leibniz", l.str()},
                {"chio", c.str()},
                {"agree", agree}}
               .dump()
        << "\n";
  } else if (agree) {
    out << l.str() << "\n";
  } else {
    out << "leibniz: " << l.str() << "\n";
    out << "chio: " << c.str() << "\n";
  }
  return agree ? kExitOk : kExitFail;
}

// -------------------------------------------------------------- condense

struct CondenseOptions {
  std::string file;
  std::string ring = "int";
  int n = 0;
  bool as_json = false;
};

int run_condense(const CondenseOptions& opt, std::ostream& out) {
  Matrix a = [&] {
    if (opt.ring == "poly") {
      if (!opt.file.empty()) {
        throw std::invalid_argument(
            "condense: --ring poly is symbolic; use --n, not --file");
      }
      if (opt.n < 2) {
        throw std::invalid_argument("condense: --ring poly requires --n >= 2");
      }
      return generic_matrix(opt.n);
    }
    if (opt.file.empty()) {
      throw std::invalid_argument("condense: --file is required");
    }
    return read_matrix_file(opt.file, parse_ring(opt.ring));
  }();
  const auto [condensed, factor] = chio_condense(a);
  if (opt.as_json) {
    json rows = json::array();
    for (int i = 1; i <= condensed.rows(); ++i) {
      json row = json::array();
      for (int j = 1; j <= condensed.cols(); ++j) {
        row.push_back(condensed.at(i, j).str());
      }
      rows.push_back(std::move(row));
    }
    out << json{{"rows", condensed.rows()},
                {"cols", condensed.cols()},
                {"entries", rows},
                {"factor", factor.str()}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << condensed.rows() << " " << condensed.cols() << "\n";
  if (opt.ring == "poly") {
    for (int i = 1; i <= condensed.rows(); ++i) {
      for (int j = 1; j <= condensed.cols(); ++j) {
        out << "(" << i << "," << j << ") = " << condensed.at(i, j).str()
            << "\n";
      }
    }
  } else {
    out << condensed.str();
  }
  out << "factor: " << factor.str() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string theorem;
  int n = 0;
  std::string mode = "symbolic";
  int trials = 100;
  std::uint64_t seed = 0;
  std::string ring = "int";
  bool ring_given = false;
  bool as_json = false;
};

void emit_report(const CondensationReport& report, bool as_json,
                 std::ostream& out) {
  if (!as_json) {
    out << report_line(report) << "\n";
    return;
  }
  json obj{{"theorem", report.theorem},
           {"n", report.n},
           {"ring", report.ring_desc},
           {"ok", report.verdict}};
  obj["f"] = report.map ? json(report.map->str()) : json(nullptr);
  if (!report.verdict) {
    obj["lhs"] = report.lhs.str();
    obj["rhs"] = report.rhs.str();
  }
  out << obj.dump() << "\n";
}

CondensationReport verify_mtt_case(const WeightedDigraph& g) {
  return make_report("mtt", g.n(), std::nullopt, count_arborescences(g),
                     brute_arborescence_sum(g));
}

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  const bool symbolic = opt.mode == "symbolic";
  if (symbolic && opt.ring_given && opt.ring != "poly") {
    throw std::invalid_argument(
        "verify: symbolic mode runs over the polynomial ring; drop --ring "
        "or pass --ring poly");
  }
  if (!symbolic && opt.ring == "poly") {
    throw std::invalid_argument("verify: --ring poly implies --mode symbolic");
  }
  const int n = opt.n;
  const int oracle_cap = bounds::max_n();

  // Symbolic certificates grow super-exponentially with n; these caps keep
  // them in the seconds range.
  int lo = 2;
  int hi = 0;
  if (symbolic) {
    if (opt.theorem == "chio" || opt.theorem == "chio-gen") {
      hi = 4;
    } else if (opt.theorem == "supergen") {
      hi = 3;
    } else {
      lo = 1;
      hi = 3;
    }
  } else {
    if (opt.theorem == "mtt") lo = 1;
    hi = oracle_cap;
  }
  if (n < lo || n > hi) {
    throw std::invalid_argument(
        "verify: --n out of range for " + opt.theorem + " --mode " + opt.mode +
        " (allowed " + std::to_string(lo) + ".." + std::to_string(hi) + ")");
  }
  if (opt.trials < 0) throw std::invalid_argument("verify: negative --trials");

  bool all_ok = true;
  const auto emit = [&](const CondensationReport& report) {
    all_ok = all_ok && report.verdict;
    emit_report(report, opt.as_json, out);
  };

  if (symbolic) {
    if (opt.theorem == "chio") {
      emit(verify_chio(generic_matrix(n)));
    } else if (opt.theorem == "chio-gen") {
      const Matrix a = generic_matrix(n);
      for_each_n_fixing(n,
                        [&](const EndoMap& f) { emit(verify_chio_gen(f, a)); });
    } else if (opt.theorem == "supergen") {
      const auto [a, b] = generic_matrix_pair(n);
      emit(verify_supergen(a, b));
    } else {
      emit(verify_mtt_case(WeightedDigraph(generic_matrix(n, "w"))));
    }
    return all_ok ? kExitOk : kExitFail;
  }

  const RingPtr ring = parse_ring(opt.ring);
  for (int t = 0; t < opt.trials; ++t) {
    RandomSource rng = RandomSource::for_case(opt.seed, t);
    if (opt.theorem == "chio") {
      emit(verify_chio(random_square(rng, ring, n, -9, 9)));
    } else if (opt.theorem == "chio-gen") {
      const EndoMap f = random_n_fixing(rng, n);
      emit(verify_chio_gen(f, random_square(rng, ring, n, -9, 9)));
    } else if (opt.theorem == "supergen") {
      const Matrix a = random_square(rng, ring, n, -5, 5);
      const Matrix b = random_square(rng, ring, n, -5, 5);
      emit(verify_supergen(a, b));
    } else {
      emit(verify_mtt_case(
          WeightedDigraph(random_square(rng, ring, n, -9, 9))));
    }
  }
  return all_ok ? kExitOk : kExitFail;
}

// --------------------------------------------------------- arborescences

struct ArbOptions {
  std::string graph;
  std::string ring = "int";
  int root = 0;  // 0: default root n
  bool as_json = false;
};

// Parent list over the original labels, non-root vertices ascending.
std::string tree_parent_list(const RootedTree& tree, int root) {
  const int n = tree.n();
  const auto relabel = [&](int k) {
    return k == root ? n : (k == n ? root : k);
  };
  std::string list;
  for (int u = 1; u <= n; ++u) {
    if (u == root) continue;
    const int parent = relabel(tree.parent(relabel(u)));
    if (!list.empty()) list += ',';
    list += std::to_string(parent);
  }
  return list.empty() ? "-" : list;
}

int run_arb(const ArbOptions& opt, bool enumerate, std::ostream& out) {
  if (opt.ring == "poly") {
    throw std::invalid_argument("arborescences: graph files are integer-only");
  }
  const WeightedDigraph g = read_digraph_file(opt.graph, parse_ring(opt.ring));
  const int root = opt.root == 0 ? g.n() : opt.root;
  if (root < 1 || root > g.n()) {
    throw std::invalid_argument("arborescences: --root out of range");
  }
  const WeightedDigraph rooted = relabel_root(g, root);
  if (!enumerate) {
    const RingValue count = count_arborescences(rooted);
    if (opt.as_json) {
      out << json{{"root", root}, {"count", count.str()}}.dump() << "\n";
    } else {
      out << count.str() << "\n";
    }
    return kExitOk;
  }
  for (const auto& [tree, weight] : enumerate_arborescences(rooted)) {
    if (opt.as_json) {
      out << json{{"root", root},
                  {"tree", tree_parent_list(tree, root)},
                  {"weight", weight.str()}}
                 .dump()
          << "\n";
    } else {
      out << "tree: " << tree_parent_list(tree, root)
          << " weight: " << weight.str() << "\n";
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------ fuzz

struct FuzzOptions {
  std::uint64_t seed = 0;
  long long cases = 1000;
  bool as_json = false;
};

RingValue random_entry(RandomSource& rng, const RingPtr& ring,
                       const PolynomialRing* poly) {
  if (poly == nullptr) return ring->from_int(rng.int_in(-9, 9));
  RingValue v = ring->from_int(rng.int_in(-3, 3));
  for (std::size_t k = 0; k < poly->n_vars(); ++k) {
    v = v + ring->from_int(rng.int_in(-1, 1)) * poly->indeterminate(k);
  }
  return v;
}

int run_fuzz(const FuzzOptions& opt, std::ostream& out) {
  static constexpr unsigned long kPrimes[] = {2, 3, 5, 7, 11, 13};
  if (opt.cases < 0) throw std::invalid_argument("fuzz: negative --cases");
  long long failures = 0;
  for (long long i = 0; i < opt.cases; ++i) {
    RandomSource rng = RandomSource::for_case(opt.seed, i);
    RingPtr ring;
    const PolynomialRing* poly = nullptr;
    switch ((i / 2) % 3) {
      case 0:
        ring = integers();
        break;
      case 1:
        ring = integers_mod(kPrimes[(i / 6) % 6]);
        break;
      default: {
        auto p = (i / 6) % 2 == 0 ? polynomials({"s"})
                                  : polynomials({"s", "t"});
        poly = p.get();
        ring = p;
        break;
      }
    }
    const bool check_det = i % 2 == 0;
    bool ok = true;
    int n = 0;
    if (check_det) {
      n = static_cast<int>(rng.int_in(0, 5));
      const bool zero_row = n > 0 && i % 10 == 0;
      const bool zero_pivot = n > 0 && i % 6 == 0;
      const int dead_row =
          zero_row ? static_cast<int>(rng.int_in(1, n)) : 0;
      const Matrix a = Matrix::build(ring, n, n, [&](int r, int c) {
        if (r == dead_row) return ring->zero();
        if (zero_pivot && r == n && c == n) return ring->zero();
        return random_entry(rng, ring, poly);
      });
      ok = leibniz_det(a) == chio_det(a);
    } else {
      n = static_cast<int>(rng.int_in(1, 5));
      const Matrix w = Matrix::build(ring, n, n, [&](int, int) {
        return random_entry(rng, ring, poly);
      });
      const WeightedDigraph g(w);
      ok = count_arborescences(g) == brute_arborescence_sum(g);
    }
    if (!ok) {
      ++failures;
      if (opt.as_json) {
        out << json{{"case", i},
                    {"check", check_det ? "det" : "mtt"},
                    {"ring", ring->description()},
                    {"n", n},
                    {"ok", false}}
                   .dump()
            << "\n";
      } else {
        out << "fuzz case=" << i << " check=" << (check_det ? "det" : "mtt")
            << " ring=" << ring->description() << " n=" << n << " FAIL\n";
      }
    }
  }
  if (opt.as_json) {
    out << json{{"cases", opt.cases},
                {"failures", failures},
                {"seed", opt.seed}}
               .dump()
        << "\n";
  } else {
    out << "fuzz cases=" << opt.cases << " failures=" << failures
        << " seed=" << opt.seed << "\n";
  }
  return failures == 0 ? kExitOk : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact determinants, pivotal condensation, and arborescence counting "
      "over integers, Z/m, and multivariate polynomials"};
  app.require_subcommand(1);

  DetOptions det_opt;
  auto* det = app.add_subcommand("det", "determinant of a matrix file");
  det->add_option("--file", det_opt.file, "matrix file")->required();
  det->add_option("--algo", det_opt.algo, "leibniz, chio, or both")
      ->check(CLI::IsMember({"leibniz", "chio", "both"}));
  det->add_option("--ring", det_opt.ring, "int or mod:<m>");
  det->add_flag("--json", det_opt.as_json, "one JSON object per line");

  CondenseOptions cond_opt;
  auto* condense = app.add_subcommand(
      "condense", "one pivotal condensation step, matrix and scale factor");
  condense->add_option("--file", cond_opt.file, "matrix file");
  condense->add_option("--ring", cond_opt.ring, "int, mod:<m>, or poly");
  condense->add_option("--n", cond_opt.n,
                       "size of the generic matrix (with --ring poly)");
  condense->add_flag("--json", cond_opt.as_json, "one JSON object per line");

  VerifyOptions ver_opt;
  auto* verify = app.add_subcommand(
      "verify", "machine-check a determinant identity, case by case");
  verify->add_option("--theorem", ver_opt.theorem, "which identity")
      ->required()
      ->check(CLI::IsMember({"chio", "chio-gen", "supergen", "mtt"}));
  verify->add_option("--n", ver_opt.n, "matrix size")->required();
  verify->add_option("--mode", ver_opt.mode, "symbolic or random")
      ->check(CLI::IsMember({"symbolic", "random"}));
  verify->add_option("--trials", ver_opt.trials, "random cases to run");
  verify->add_option("--seed", ver_opt.seed, "base seed, split per case");
  auto* ver_ring =
      verify->add_option("--ring", ver_opt.ring, "ring for random mode");
  verify->add_flag("--json", ver_opt.as_json, "one JSON object per line");

  ArbOptions arb_opt;
  auto* arb = app.add_subcommand("arborescences",
                                 "count or list spanning arborescences");
  arb->require_subcommand(1);
  auto* arb_count = arb->add_subcommand("count", "weighted count");
  auto* arb_enum = arb->add_subcommand("enumerate", "one line per tree");
  for (auto* sub : {arb_count, arb_enum}) {
    sub->add_option("--graph", arb_opt.graph, "graph file")->required();
    sub->add_option("--root", arb_opt.root, "root vertex (default n)");
    sub->add_option("--ring", arb_opt.ring, "int or mod:<m>");
    sub->add_flag("--json", arb_opt.as_json, "one JSON object per line");
  }

  FuzzOptions fuzz_opt;
  auto* fuzz = app.add_subcommand(
      "fuzz", "differential testing across random rings and sizes");
  fuzz->add_option("--seed", fuzz_opt.seed, "base seed, split per case");
  fuzz->add_option("--cases", fuzz_opt.cases, "number of cases");
  fuzz->add_flag("--json", fuzz_opt.as_json, "one JSON object per line");

  std::vector<std::string> argv_strings = args;
  argv_strings.insert(argv_strings.begin(), "condensation-kit");
  std::vector<const char*> argv;
  argv.reserve(argv_strings.size());
  for (const auto& s : argv_strings) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }
  ver_opt.ring_given = ver_ring->count() > 0;

  try {
    if (det->parsed()) return run_det(det_opt, out);
    if (condense->parsed()) return run_condense(cond_opt, out);
    if (verify->parsed()) return run_verify(ver_opt, out);
    if (arb->parsed()) return run_arb(arb_opt, arb_enum->parsed(), out);
    return run_fuzz(fuzz_opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace ck::cli
