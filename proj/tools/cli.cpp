#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kronvp/character_oracle.hpp"
#include "kronvp/error.hpp"
#include "kronvp/fnm.hpp"
#include "kronvp/holes.hpp"
#include "kronvp/invariants.hpp"
#include "kronvp/kron224.hpp"
#include "kronvp/linalg.hpp"
#include "kronvp/lr_resultant.hpp"
#include "kronvp/quasi_fit.hpp"
#include "kronvp/vecpart.hpp"

namespace kronvp::cli {

namespace {

using json = nlohmann::ordered_json;

// Integers up to 2^53 - 1 survive a round trip through a double; larger
// ones become decimal strings.
json big(const BigInt& v) {
  static const BigInt limit = (BigInt(1) << 53) - 1;
  if (v <= limit && v >= -limit) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

json parts_json(const Partition& p) { return json(p.trimmed().parts()); }

json triple_json(const KroneckerTriple& t) {
  return json{{"lam", parts_json(t.lam)}, {"mu", parts_json(t.mu)}, {"nu", parts_json(t.nu)}};
}

json matrix_columns(const IntMatrix& a) {
  json cols = json::array();
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    json c = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) c.push_back(a(i, j));
    cols.push_back(std::move(c));
  }
  return cols;
}

// Recursively sorts object keys so every document has a stable key order.
json sorted(const json& j) {
  if (j.is_object()) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    json out = json::object();
    for (const auto& k : keys) out[k] = sorted(j.at(k));
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(sorted(e));
    return out;
  }
  return j;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), '[', ' ');
  std::replace(s.begin(), s.end(), ']', ' ');
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t\n"));
    tok.erase(tok.find_last_not_of(" \t\n") + 1);
    if (tok.empty()) continue;
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidToken, "'" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorCode::InvalidToken, "'" + tok + "'");
    out.push_back(v);
  }
  return out;
}

struct Common {
  std::string format = "json";
  std::string out_path;
  int threads = 1;
  Part weight_cap = kDefaultCharWeightCap;
};

struct Args {
  std::string mu, nu, lam;
  int n = 2, m = 2;
  std::int64_t kmax = 10;
  bool fit = false;
  std::string method = "kron224";
  std::int64_t weight = 0;
  std::string face;
  std::string matrix_path, b;
  std::int64_t u = 0, t = 0, s = 0;
  std::int64_t lam2 = 0, mu2 = 0, nu2 = 0;
  int max_period = 0, max_degree = -1;
  Part oracle_weight = 16;
  std::size_t random_triples = 10000;
  std::int64_t holes_weight = 24;
  bool expansion = false;
};

KroneckerTriple triple_from(const Args& a, LengthBounds bounds) {
  if (a.mu.empty() || a.nu.empty() || a.lam.empty())
    throw UsageError("--mu, --nu and --lam are required");
  return validate_triple(parse_partition(a.mu), parse_partition(a.nu), parse_partition(a.lam), bounds);
}

// Bounds that accept the given partitions as they are (the oracles take any length).
LengthBounds unbounded(const Args& a) {
  auto len = [](const std::string& text) { return text.empty() ? 0 : parse_partition(text).parts().size(); };
  const std::size_t n = std::max({len(a.mu), len(a.nu), len(a.lam), std::size_t{1}});
  return {n, n, n};
}

// Output document plus an optional CSV rendering.
struct Output {
  json doc;
  std::function<void(std::ostream&)> csv;
};

Output cmd_kron(const Args& a) {
  const Kron224Result r = kron224_terms(triple_from(a, LengthBounds{4, 4, 4}));
  json terms = json::array();
  for (const TermContribution& c : r.terms) {
    terms.push_back({{"sign", c.term.sign},
                     {"b", c.term.b},
                     {"a", c.term.a},
                     {"gated", c.gated},
                     {"ps22_args", {c.ps22_args[0], c.ps22_args[1]}},
                     {"value", big(c.value)}});
  }
  return {{{"triple", triple_json(r.canonical)}, {"normalized", r.normalized}, {"g", big(r.g)}, {"terms", terms}}, {}};
}

Output cmd_atomic(const Args& a) {
  if (a.n == 2 && a.m == 2) {
    const KroneckerTriple t = canonical_sort(triple_from(a, LengthBounds{4, 4, 4}));
    const AtomicShift shift = atomic_shift(2, 2);
    const IntVector b = shift.evaluate(t);
    return {{{"triple", triple_json(t)},
             {"n", 2},
             {"m", 2},
             {"shift", std::vector<std::int64_t>(b.data(), b.data() + b.size())},
             {"rows", shift.rows},
             {"atomic", big(atomic224(t))}},
            {}};
  }
  const LengthBounds bounds{static_cast<std::size_t>(a.n), static_cast<std::size_t>(a.m),
                            static_cast<std::size_t>(a.n * a.m)};
  const KroneckerTriple t = triple_from(a, bounds);
  const AtomicShift shift = atomic_shift(a.n, a.m);
  const IntVector b = shift.evaluate(t);
  return {{{"triple", triple_json(t)},
           {"n", a.n},
           {"m", a.m},
           {"shift", std::vector<std::int64_t>(b.data(), b.data() + b.size())},
           {"rows", shift.rows},
           {"atomic", big(atomic_nm(a.n, a.m, t))}},
          {}};
}

Output cmd_oracle(const Args& a, const Common& c) {
  if (a.expansion || (a.mu.empty() && a.nu.empty())) {
    if (a.lam.empty()) throw UsageError("--lam is required");
    const Partition lam = parse_partition(a.lam);
    const SchurExpansion ex = kron_oracle_schur(lam, a.n, a.m, c.weight_cap);
    json entries = json::array();
    for (const auto& [key, g] : ex)
      entries.push_back({{"mu", parts_json(key.first)}, {"nu", parts_json(key.second)}, {"g", big(g)}});
    return {{{"lam", parts_json(lam)}, {"n", a.n}, {"m", a.m}, {"method", "schur"}, {"expansion", entries}}, {}};
  }
  const KroneckerTriple t = triple_from(a, unbounded(a));
  return {{{"triple", triple_json(t)}, {"method", "character"}, {"g", big(kron_oracle_char(t, c.weight_cap))}}, {}};
}

Output cmd_bravyi(const Args& a) {
  const KroneckerTriple t = canonical_sort(triple_from(a, LengthBounds{4, 4, 4}));
  const BravyiReport r = bravyi_check(t);
  return {{{"triple", triple_json(t)},
           {"first", r.first},
           {"second", r.second},
           {"third", r.third},
           {"atomic_equals_kron_sufficient", atomic_is_kron_sufficient(t)}},
          {}};
}

Output cmd_reduced(const Args& a) {
  return {{{"lam2", a.lam2}, {"mu2", a.mu2}, {"nu2", a.nu2}, {"value", big(reduced_kron_2row(a.lam2, a.mu2, a.nu2))}},
          {}};
}

Output cmd_stable(const Args& a) {
  json values = json::array();
  for (std::int64_t k = 1; k <= a.kmax; ++k) {
    const auto [g, at] = stable_triple_kron(a.u, a.t, a.s, k);
    values.push_back({{"k", k}, {"g", big(g)}, {"atomic", big(at)}});
  }
  return {{{"u", a.u}, {"t", a.t}, {"s", a.s}, {"triple", triple_json(stable_triple(a.u, a.t, a.s, 1))}, {"values", values}},
          {}};
}

Output cmd_dilate(const Args& a, const Common& c) {
  const DilationMethod method = parse_dilation_method(a.method);
  LengthBounds bounds{4, 4, 4};
  if (method == DilationMethod::AtomicNM)
    bounds = {static_cast<std::size_t>(a.n), static_cast<std::size_t>(a.m), static_cast<std::size_t>(a.n * a.m)};
  if (method == DilationMethod::Oracle) bounds = unbounded(a);
  KroneckerTriple t = triple_from(a, bounds);
  if (method == DilationMethod::Kron224 || method == DilationMethod::Atomic224) t = canonical_sort(t);
  const std::vector<BigInt> seq = dilate_sequence(t, a.kmax, method, c.threads, c.weight_cap);

  json doc{{"triple", triple_json(t)}, {"method", dilation_method_name(method)}, {"kmax", a.kmax}};
  json jseq = json::array();
  for (const BigInt& v : seq) jseq.push_back(big(v));
  doc["sequence"] = jseq;
  if (a.fit) {
    const int dn = method == DilationMethod::AtomicNM ? a.n : 2;
    const int dm = method == DilationMethod::AtomicNM ? a.m : 2;
    const int max_degree = a.max_degree >= 0 ? a.max_degree : static_cast<int>(degree_bound(dn, dm));
    int max_period = a.max_period;
    if (max_period <= 0) {
      // largest period up to 12 that the sequence length supports
      max_period = 12;
      while (max_period > 1 && required_samples(max_period, max_degree) > seq.size()) --max_period;
    }
    const Quasipolynomial q = fit_quasipolynomial(seq, max_period, max_degree);
    json cons = json::array();
    for (const auto& poly : q.constituents) {
      json p = json::array();
      for (const Rational& r : poly) p.push_back(to_fraction_string(r));
      cons.push_back(std::move(p));
    }
    doc["fit"] = {{"period", q.period}, {"degree", q.degree()}, {"constituents", cons},
                  {"max_period", max_period}, {"max_degree", max_degree}};
  }
  auto csv = [seq](std::ostream& os) {
    os << "k,value\n";
    for (std::size_t i = 0; i < seq.size(); ++i) os << i + 1 << ',' << seq[i] << '\n';
  };
  return {doc, csv};
}

json matrix_stats(const IntMatrix& a, std::int64_t degree) {
  const Eigen::Index rank = exact_rank(a);
  return {{"rows", a.rows()},
          {"cols", a.cols()},
          {"max_entry", a.size() ? a.maxCoeff() : 0},
          {"rank", rank},
          {"degree_bound", degree}};
}

Output cmd_matrix(const Args& a) {
  const FnmMatrix f = build_fnm_matrix(a.n, a.m);
  json doc{{"n", a.n}, {"m", a.m}};
  if (a.face.empty()) {
    doc["rows"] = f.matrix.rows;
    doc["columns"] = matrix_columns(f.matrix.columns);
    doc["column_labels"] = f.column_labels;
    doc["stats"] = matrix_stats(f.matrix.columns, degree_bound(a.n, a.m));
    return {doc, {}};
  }
  std::set<int> zero;
  std::stringstream ss(a.face);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto it = std::find(f.matrix.rows.begin(), f.matrix.rows.end(), tok);
    if (it != f.matrix.rows.end()) {
      zero.insert(static_cast<int>(it - f.matrix.rows.begin()));
      continue;
    }
    const std::vector<std::int64_t> idx = parse_int_list(tok);
    if (idx.size() != 1) throw Error(ErrorCode::InvalidToken, "'" + tok + "'");
    zero.insert(static_cast<int>(idx[0]));
  }
  const VPMatrix r = face_restrict(f.matrix, zero);
  doc["face"] = std::vector<int>(zero.begin(), zero.end());
  doc["rows"] = r.rows;
  doc["columns"] = matrix_columns(r.columns);
  const Eigen::Index rank = exact_rank(r.columns);
  doc["stats"] = matrix_stats(r.columns, static_cast<std::int64_t>(r.columns.cols() - rank));
  return {doc, {}};
}

Output cmd_vpcount(const Args& a) {
  if (a.matrix_path.empty() || a.b.empty()) throw UsageError("--matrix and --b are required");
  std::ifstream in(a.matrix_path);
  if (!in) throw UsageError("cannot read matrix file " + a.matrix_path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::InvalidMatrix, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.contains("rows") || !doc.contains("columns"))
    throw Error(ErrorCode::InvalidMatrix, "matrix file needs \"rows\" and \"columns\"");
  VPMatrix mat;
  try {
    mat = make_vp_matrix(doc["rows"].get<std::vector<std::string>>(),
                         doc["columns"].get<std::vector<std::vector<std::int64_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidMatrix, e.what());
  }
  const std::vector<std::int64_t> b = parse_int_list(a.b);
  return {{{"rows", mat.rows}, {"b", b}, {"count", big(vp_count(mat, b))}}, {}};
}

Output cmd_lr(const Args& a) {
  const SignedMatrix s = build_lr_matrix(a.n, a.m);
  const LRRankStats st = lr_rank_stats(a.n, a.m);
  json tu;
  try {
    tu = is_totally_unimodular(s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLargeForExhaustiveCheck) throw;
    tu = nullptr;
  }
  return {{{"n", a.n},
           {"m", a.m},
           {"rows", s.rows},
           {"columns", matrix_columns(s.entries)},
           {"rank", st.rank},
           {"corank", st.corank},
           {"totally_unimodular", tu}},
          {}};
}

Output cmd_holes(const Args& a, const Common& c) {
  const HolesGrid grid = holes_grid(a.weight, c.threads);
  json points = json::array();
  for (const HolePoint& p : grid.points) points.push_back({{"i", p.i}, {"j", p.j}, {"k", p.k}, {"g", big(p.g)}});
  auto csv = [grid](std::ostream& os) {
    os << "i,j,k,g\n";
    for (const HolePoint& p : grid.points) os << p.i << ',' << p.j << ',' << p.k << ',' << p.g << '\n';
  };
  return {{{"weight", grid.weight}, {"points", points}}, csv};
}

Output cmd_verify(const Args& a, const Common& c, std::ostream& err) {
  VerifyOptions opts;
  opts.oracle_weight = a.oracle_weight;
  opts.random_triples = a.random_triples;
  opts.holes_weight = a.holes_weight;
  opts.threads = c.threads;
  json checks = json::array();
  bool all = true;
  for (const CheckResult& r : run_invariants(opts, [&](const CheckResult& r) {
         err << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
       })) {
    all = all && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
  }
  return {{{"passed", all}, {"checks", checks}}, {}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kronecker coefficients via vector partition functions", "kronvp"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  Args a;
  app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", common.out_path, "write output to this file");
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--weight-cap", common.weight_cap, "oracle weight cap")->check(CLI::NonNegativeNumber);

  auto triple_opts = [&](CLI::App* sc) {
    sc->add_option("--mu", a.mu, "comma-separated parts");
    sc->add_option("--nu", a.nu, "comma-separated parts");
    sc->add_option("--lam", a.lam, "comma-separated parts");
  };
  auto dims = [&](CLI::App* sc, bool required) {
    auto* n = sc->add_option("--n", a.n, "first alphabet size");
    auto* m = sc->add_option("--m", a.m, "second alphabet size");
    if (required) {
      n->required();
      m->required();
    }
  };

  auto* kron = app.add_subcommand("kron", "Kronecker coefficient, lengths (2,2,4)");
  triple_opts(kron);
  auto* atomic = app.add_subcommand("atomic", "atomic Kronecker coefficient");
  triple_opts(atomic);
  dims(atomic, false);
  auto* oracle = app.add_subcommand("oracle", "brute-force Kronecker coefficients");
  triple_opts(oracle);
  dims(oracle, false);
  oracle->add_flag("--expansion", a.expansion, "full expansion of s_lam[XY] for --lam");
  auto* bravyi = app.add_subcommand("bravyi", "Bravyi inequalities");
  triple_opts(bravyi);
  auto* reduced = app.add_subcommand("reduced", "reduced coefficient for one-part reduced partitions");
  reduced->add_option("--lam", a.lam2, "second part of lam")->required();
  reduced->add_option("--mu", a.mu2, "second part of mu")->required();
  reduced->add_option("--nu", a.nu2, "second part of nu")->required();
  auto* stable = app.add_subcommand("stable", "dilations of a stable triple");
  stable->add_option("--u", a.u)->required();
  stable->add_option("--t", a.t)->required();
  stable->add_option("--s", a.s)->required();
  stable->add_option("--kmax", a.kmax, "largest dilation");
  auto* dilate = app.add_subcommand("dilate", "dilated sequence and quasipolynomial fit");
  triple_opts(dilate);
  dims(dilate, false);
  dilate->add_option("--kmax", a.kmax, "largest dilation");
  dilate->add_flag("--fit", a.fit, "fit a quasipolynomial");
  dilate->add_option("--method", a.method, "kron224, atomic224, atomic_nm or oracle");
  dilate->add_option("--max-period", a.max_period, "largest period tried");
  dilate->add_option("--max-degree", a.max_degree, "largest degree tried");
  auto* matrix = app.add_subcommand("matrix", "vector partition matrix A_{n,m}");
  dims(matrix, true);
  matrix->add_option("--face", a.face, "rows set to zero, by index or label");
  auto* vpcount = app.add_subcommand("vpcount", "count vector partitions");
  vpcount->add_option("--matrix", a.matrix_path, "JSON file {\"rows\": [...], \"columns\": [[...]]}")->required();
  vpcount->add_option("--b", a.b, "right-hand side, JSON array or comma list")->required();
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson resultant matrix");
  dims(lr, true);
  auto* holes = app.add_subcommand("holes", "grid of two-row Kronecker coefficients");
  holes->add_option("--weight", a.weight, "weight N")->required();
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--oracle-weight", a.oracle_weight, "largest weight of exhaustive oracle sweeps");
  verify->add_option("--random", a.random_triples, "number of random triples");
  verify->add_option("--holes-weight", a.holes_weight, "largest holes grid weight");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Output o;
    CLI::App* sc = app.get_subcommands().front();
    const std::string name = sc->get_name();
    if (name == "kron") o = cmd_kron(a);
    else if (name == "atomic") o = cmd_atomic(a);
    else if (name == "oracle") o = cmd_oracle(a, common);
    else if (name == "bravyi") o = cmd_bravyi(a);
    else if (name == "reduced") o = cmd_reduced(a);
    else if (name == "stable") o = cmd_stable(a);
    else if (name == "dilate") o = cmd_dilate(a, common);
    else if (name == "matrix") o = cmd_matrix(a);
    else if (name == "vpcount") o = cmd_vpcount(a);
    else if (name == "lr") o = cmd_lr(a);
    else if (name == "holes") o = cmd_holes(a, common);
    else if (name == "verify") o = cmd_verify(a, common, err);

    if (common.format == "csv" && !o.csv) throw UsageError("--format csv is available for holes and dilate only");
    std::ofstream file;
    std::ostream* dest = &out;
    if (!common.out_path.empty()) {
      file.open(common.out_path);
      if (!file) throw UsageError("cannot write " + common.out_path);
      dest = &file;
    }
    if (common.format == "csv") o.csv(*dest);
    else *dest << sorted(o.doc).dump(2) << "\n";
    if (name == "verify" && !o.doc["passed"].get<bool>()) return 1;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kronvp::cli
