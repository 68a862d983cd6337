#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "qtutte/conversion.hpp"
#include "qtutte/enumeration.hpp"
#include "qtutte/error.hpp"
#include "qtutte/independence.hpp"
#include "qtutte/q_calculus.hpp"
#include "qtutte/qmatroid.hpp"
#include "qtutte/serialization.hpp"
#include "qtutte/subspace_lattice.hpp"
#include "qtutte/tutte_partition.hpp"

namespace qtutte::cli {

using nlohmann::json;

namespace {

// Thrown for bad flags or unreadable inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string out_file;
  std::string in_file;
  std::string partition_file;
  int q = 2;
  int k = 3;
  bool symbolic = false;
  std::string uniform;     // "R,N"
  std::string prime_free;  // "R,N"
  int n_max = 12;
  int h_max = 8;
  int a_max = -1;
  int b_max = -1;
  bool theorem4 = false;
  bool vandermonde = false;
  bool conjecture2 = false;
  std::string exponent_mode = "extended";
  std::string mode = "minimal";
  int threads = 1;
  std::uint64_t budget = 0;
  std::size_t limit = 1;
  bool iso = false;
  bool entries = false;
  bool timing = false;
  long flat = -1;
  long z = -1;
  long w = -1;
  std::string kind;
  long param = -1;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json result;
  bool pass = true;
  std::string summary;
  std::vector<std::string> text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content << '\n';
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::pair<int, int> parse_pair(const std::string& s, const char* flag) {
  int a = 0;
  int b = 0;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> a >> comma >> b) || comma != ',' || a < 0 || b < 0 ||
      !(in >> std::ws).eof()) {
    throw UsageError(std::string(flag) + " expects two non-negative integers R,N");
  }
  return {a, b};
}

json qpoly_json(const QPoly& p) {
  return p.is_zero() ? json::array({0}) : json(p.coeffs());
}

std::vector<std::string> poly_text(const std::string& label, const BiPoly& p) {
  std::vector<std::string> lines{label + ": " + p.to_string()};
  for (const auto& row : p.display_rows()) lines.push_back("  " + row);
  return lines;
}

// Matroid loaded from --in, or built from --uniform/--prime-free at --q.
struct Source {
  std::optional<QMatroid> matroid;
  std::optional<std::pair<int, int>> uniform;
  std::optional<std::pair<int, int>> prime_free;
};

QMatroid load_matroid(const Options& o, Report& r) {
  if (o.in_file.empty()) throw UsageError("--in FILE is required");
  const std::string text = read_file(o.in_file);
  r.inputs["in"] = json::parse(text, nullptr, false);
  return matroid_from_json(text);
}

Source load_source(const Options& o, Report& r) {
  Source s;
  const int given = !o.in_file.empty() + !o.uniform.empty() + !o.prime_free.empty();
  if (given != 1) {
    throw UsageError("give exactly one of --in, --uniform R,N, --prime-free R,N");
  }
  if (!o.in_file.empty()) {
    if (o.symbolic) {
      throw UsageError(
          "--symbolic needs a formula input (--uniform or --prime-free); a "
          "matroid read from a file exists only at its own q");
    }
    s.matroid = load_matroid(o, r);
    return s;
  }
  if (!o.uniform.empty()) {
    s.uniform = parse_pair(o.uniform, "--uniform");
    r.inputs["uniform"] = {s.uniform->first, s.uniform->second};
  } else {
    s.prime_free = parse_pair(o.prime_free, "--prime-free");
    r.inputs["prime_free"] = {s.prime_free->first, s.prime_free->second};
  }
  r.inputs["symbolic"] = o.symbolic;
  if (!o.symbolic) {
    r.inputs["q"] = o.q;
    const auto [rho, nu] = s.uniform ? *s.uniform : *s.prime_free;
    auto lat = shared_lattice(o.q, rho + nu);
    if (s.uniform) {
      s.matroid = uniform(lat, rho);
    } else {
      // First flat of height nu in canonical order serves as the clopen flat.
      s.matroid = qtutte::prime_free(lat, lat->by_height(nu).front());
    }
  }
  return s;
}

BiPoly source_rgf(const Source& s) {
  if (s.matroid) return rgf(*s.matroid);
  if (s.uniform) return rgf_uniform_symbolic(s.uniform->first, s.uniform->second);
  return rgf_prime_free_symbolic(s.prime_free->first, s.prime_free->second);
}

json status_json(FlatId x, const FlatStatus& s) {
  return {{"flat", x},          {"rank", s.rank},       {"nullity", s.nullity},
          {"independent", s.independent}, {"spanning", s.spanning},
          {"closed", s.closed}, {"open", s.open},       {"clopen", s.clopen},
          {"basis", s.basis},   {"circuit", s.circuit}, {"copoint", s.copoint}};
}

json part_list(const TuttePartition& p) {
  return json::parse(partition_to_json(p))["parts"];
}

// ---- commands -----------------------------------------------------------

void cmd_lattice_info(const Options& o, Report& r) {
  r.inputs["q"] = o.q;
  r.inputs["k"] = o.k;
  auto lat = shared_lattice(o.q, o.k);
  std::vector<std::size_t> heights;
  for (int d = 0; d <= o.k; ++d) heights.push_back(lat->by_height(d).size());
  r.result = {{"q", o.q},
              {"k", o.k},
              {"flats", lat->size()},
              {"heights", heights},
              {"covers", lat->covers().size()},
              {"diamonds", lat->diamonds().size()}};
  std::string counts;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    counts += (i ? " " : "") + std::to_string(heights[i]);
  }
  r.summary = std::to_string(lat->size()) + " flats";
  r.text = {"L(" + std::to_string(o.q) + "," + std::to_string(o.k) + "): " +
                std::to_string(lat->size()) + " flats",
            "heights: " + counts,
            "covers: " + std::to_string(lat->covers().size()),
            "diamonds: " + std::to_string(lat->diamonds().size())};
}

void cmd_validate(const Options& o, Report& r) {
  if (o.in_file.empty()) throw UsageError("--in FILE is required");
  const std::string text = read_file(o.in_file);
  r.inputs["in"] = json::parse(text, nullptr, false);
  try {
    QMatroid m = matroid_from_json(text);
    IndependenceReport ind = independence_report(m);
    json axioms = json::object();
    for (const auto& a : ind.axioms) {
      axioms[a.axiom] = {{"pass", a.pass}, {"witness", a.witness}};
    }
    r.pass = ind.all_pass();
    r.result = {{"valid", true},
                {"rank", m.rank()},
                {"nullity", m.nullity()},
                {"independence", axioms}};
    r.summary = r.pass ? "valid q-matroid" : "independence axioms fail";
    r.text = {r.summary, "rank " + std::to_string(m.rank()) + ", nullity " +
                             std::to_string(m.nullity())};
  } catch (const AxiomViolation& e) {
    r.pass = false;
    r.result = {{"valid", false},
                {"axiom", e.axiom()},
                {"witness", e.witness()},
                {"message", e.what()}};
    r.summary = std::string("invalid: ") + e.what();
    r.text = {r.summary};
  }
}

void cmd_rgf(const Options& o, Report& r) {
  Source s = load_source(o, r);
  BiPoly p = source_rgf(s);
  r.result = json::parse(poly_to_json(p));
  r.summary = p.to_string();
  r.text = poly_text("rgf", p);
  if (!o.out_file.empty()) write_file(o.out_file, poly_to_json(p));
}

void cmd_tutte(const Options& o, Report& r) {
  Source s = load_source(o, r);
  const BiPoly g = source_rgf(s);
  const BiPoly sub = tutte_by_subtraction(g);
  const BiPoly via_beta = tutte_by_beta(g);
  const bool agree = sub == via_beta;
  const bool round_trip = rgf_from_tutte(sub) == g;
  r.pass = agree && round_trip;
  r.result = {{"tutte", json::parse(poly_to_json(sub))},
              {"beta_agrees", agree},
              {"round_trip", round_trip}};
  if (!agree) r.result["tutte_by_beta"] = json::parse(poly_to_json(via_beta));
  r.summary = sub.to_string();
  r.text = poly_text("tutte", sub);
  r.text.push_back(std::string("beta agrees: ") + (agree ? "yes" : "NO"));
  r.text.push_back(std::string("round trip: ") + (round_trip ? "yes" : "NO"));
  if (!o.out_file.empty()) write_file(o.out_file, poly_to_json(sub));
}

void emit_matroid(const Options& o, Report& r, const QMatroid& m,
                  const std::string& label) {
  const std::string text = matroid_to_json(m);
  r.result = json::parse(text);
  r.summary = label + ": rank " + std::to_string(m.rank()) + ", nullity " +
              std::to_string(m.nullity());
  r.text = {r.summary, text};
  if (!o.out_file.empty()) write_file(o.out_file, text);
}

void cmd_dual(const Options& o, Report& r) {
  emit_matroid(o, r, dual(load_matroid(o, r)), "dual");
}

void cmd_minor(const Options& o, Report& r) {
  QMatroid m = load_matroid(o, r);
  if (o.z < 0 || o.w < 0) throw UsageError("--z and --w are required");
  r.inputs["z"] = o.z;
  r.inputs["w"] = o.w;
  emit_matroid(o, r,
               minor(m, static_cast<FlatId>(o.z), static_cast<FlatId>(o.w)),
               "minor");
}

void cmd_status(const Options& o, Report& r) {
  QMatroid m = load_matroid(o, r);
  const SubspaceLattice& lat = m.lattice();
  json flats = json::array();
  if (o.flat >= 0) {
    r.inputs["flat"] = o.flat;
    if (static_cast<std::size_t>(o.flat) >= lat.size()) {
      throw UsageError("--flat out of range");
    }
    const auto x = static_cast<FlatId>(o.flat);
    flats.push_back(status_json(x, flat_status(m, x)));
  } else {
    for (FlatId x = 0; x < lat.size(); ++x) {
      flats.push_back(status_json(x, flat_status(m, x)));
    }
  }
  CircuitsAndCopoints cc = circuits_and_copoints(m);
  const auto b = bases(m);
  const auto c = clopen_flats(m);
  r.result = {{"flats", flats},
              {"circuits", cc.circuits},
              {"copoints", cc.copoints},
              {"bases", b},
              {"clopen", c}};
  r.summary = std::to_string(cc.circuits.size()) + " circuits, " +
              std::to_string(cc.copoints.size()) + " copoints, " +
              std::to_string(b.size()) + " bases";
  r.text = {r.summary};
  for (const auto& f : flats) {
    std::string line = "flat " + std::to_string(f["flat"].get<int>()) +
                       ": rank " + std::to_string(f["rank"].get<int>());
    for (const char* flag : {"independent", "spanning", "closed", "open",
                             "clopen", "basis", "circuit", "copoint"}) {
      if (f[flag].get<bool>()) line += std::string(" ") + flag;
    }
    r.text.push_back(line);
  }
}

void cmd_enumerate(const Options& o, Report& r) {
  r.inputs["q"] = o.q;
  r.inputs["k"] = o.k;
  r.inputs["iso"] = o.iso;
  EnumerationOptions eo;
  eo.threads = o.threads;
  if (o.budget != 0) eo.max_results = o.budget;
  auto ms = enumerate_matroids(shared_lattice(o.q, o.k), o.iso, eo);
  json list = json::array();
  for (const auto& m : ms) list.push_back(json::parse(matroid_to_json(m)));
  r.result = {{"count", ms.size()}, {"matroids", list}};
  r.summary = std::to_string(ms.size()) + " matroids";
  r.text = {r.summary};
  for (const auto& m : ms) r.text.push_back(matroid_to_json(m));
  if (!o.out_file.empty()) write_file(o.out_file, list.dump());
}

void cmd_build(const Options& o, Report& r) {
  r.inputs["q"] = o.q;
  r.inputs["k"] = o.k;
  r.inputs["kind"] = o.kind;
  r.inputs["param"] = o.param;
  auto lat = shared_lattice(o.q, o.k);
  auto id = [&](const char* what) {
    if (o.param < 0 || static_cast<std::size_t>(o.param) >= lat->size()) {
      throw UsageError(std::string("--param must be a flat id (") + what + ")");
    }
    return static_cast<FlatId>(o.param);
  };
  if (o.kind == "uniform") {
    emit_matroid(o, r, uniform(lat, static_cast<int>(o.param)), "uniform");
  } else if (o.kind == "prime-free") {
    emit_matroid(o, r, qtutte::prime_free(lat, id("clopen flat")), "prime-free");
  } else if (o.kind == "parallel-line") {
    FlatId line = o.param >= 0 ? id("line") : 0;
    if (o.param < 0) {
      if (o.k != 3) throw UsageError("default line needs --k 3");
      line = lat->span_id(GfMatrix{{0, 1, 0}, {0, 0, 1}});
    }
    emit_matroid(o, r, parallel_line(lat, line), "parallel-line");
  } else {
    throw UsageError("--kind must be uniform, prime-free or parallel-line");
  }
}

void cmd_identities(const Options& o, Report& r) {
  const bool all = !o.theorem4 && !o.vandermonde && !o.conjecture2;
  r.inputs["n_max"] = o.n_max;
  r.inputs["h_max"] = o.h_max;
  r.inputs["exponent_mode"] = o.exponent_mode;
  ExponentMode mode;
  if (o.exponent_mode == "extended") {
    mode = ExponentMode::kExtendedPascal;
  } else if (o.exponent_mode == "shifted") {
    mode = ExponentMode::kShiftedNegative;
  } else {
    throw UsageError("--exponent-mode must be extended or shifted");
  }
  r.result = json::object();
  int hard_fail = 0;
  if (all || o.theorem4) {
    json rows = json::array();
    int ok = 0;
    for (int n = 0; n <= o.n_max; ++n) {
      IdentityCheck c = check_theorem4(n);
      ok += c.pass;
      hard_fail += !c.pass;
      rows.push_back({{"n", n}, {"pass", c.pass}, {"residual", qpoly_json(c.residual)}});
    }
    r.result["theorem4"] = rows;
    r.text.push_back("theorem4: " + std::to_string(ok) + "/" +
                     std::to_string(o.n_max + 1) + " pass");
  }
  if (all || o.vandermonde) {
    json rows = json::array();
    int ok = 0;
    int total = 0;
    for (int h = 0; h <= o.h_max; ++h) {
      for (int rr = 0; rr <= h; ++rr) {
        IdentityCheck c = check_vandermonde(h, rr);
        ok += c.pass;
        ++total;
        hard_fail += !c.pass;
        rows.push_back({{"h", h}, {"r", rr}, {"pass", c.pass},
                        {"residual", qpoly_json(c.residual)}});
      }
    }
    r.result["vandermonde"] = rows;
    r.text.push_back("vandermonde: " + std::to_string(ok) + "/" +
                     std::to_string(total) + " pass");
  }
  if (all || o.conjecture2) {
    // Evidence only: failures are listed, never fatal.
    json rows = json::array();
    int ok = 0;
    int total = 0;
    for (int n = 0; n <= o.n_max; ++n) {
      for (int s = 0; s < std::max(n, 1); ++s) {
        IdentityCheck c = check_conjecture2(n, s, mode);
        ok += c.pass;
        ++total;
        rows.push_back({{"n", n}, {"s", s}, {"pass", c.pass},
                        {"residual", qpoly_json(c.residual)}});
      }
    }
    r.result["conjecture2"] = rows;
    r.text.push_back("conjecture2 (" + o.exponent_mode + "): " +
                     std::to_string(ok) + "/" + std::to_string(total) +
                     " vanish");
  }
  r.pass = hard_fail == 0;
  r.summary = r.pass ? "all proved identities hold"
                     : std::to_string(hard_fail) + " proved identities fail";
}

void cmd_kernel(const Options& o, Report& r) {
  const int a = o.a_max < 0 ? 6 : o.a_max;
  const int b = o.b_max < 0 ? 6 : o.b_max;
  r.inputs["a_max"] = a;
  r.inputs["b_max"] = b;
  InverseReport rep = inverse_check(a, b);
  json failures = json::array();
  for (const auto& f : rep.failures) {
    failures.push_back({{"product", f.product}, {"a", f.a}, {"b", f.b},
                        {"e", f.e}, {"f", f.f}, {"value", qpoly_json(f.value)}});
  }
  r.pass = rep.pass();
  r.result = {{"checked", rep.checked}, {"failures", failures}};
  r.summary = std::to_string(rep.checked) + " products checked, " +
              std::to_string(rep.failures.size()) + " failures";
  r.text = {r.summary};
}

void cmd_nmatrix(const Options& o, Report& r) {
  const int a_max = o.a_max < 0 ? 5 : o.a_max;
  const int b_max = o.b_max < 0 ? 5 : o.b_max;
  r.inputs["a_max"] = a_max;
  r.inputs["b_max"] = b_max;
  json rows = json::array();
  int failed = 0;
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      NMatrix n = n_matrix(a, b);
      json row = {{"a", a},
                  {"b", b},
                  {"total", qpoly_json(n.total)},
                  {"total_ok", n.total_ok},
                  {"pass", n.pass()}};
      if (a > b) row["sums_over_i_vanish"] = n.sums_over_i_vanish;
      if (a < b) row["sums_over_j_vanish"] = n.sums_over_j_vanish;
      if (a == b) row["square_divisibility"] = n.square_divisibility;
      if (o.entries) {
        json grid = json::array();
        for (const auto& line : n.entries) {
          json g = json::array();
          for (const auto& e : line) g.push_back(qpoly_json(e));
          grid.push_back(g);
        }
        row["entries"] = grid;
      }
      failed += !n.pass();
      rows.push_back(row);
      if (!n.pass()) {
        r.text.push_back("N(" + std::to_string(a) + "," + std::to_string(b) +
                         ") fails");
      }
    }
  }
  r.pass = failed == 0;
  r.result = rows;
  r.summary = std::to_string(rows.size() - failed) + "/" +
              std::to_string(rows.size()) + " matrices pass";
  r.text.insert(r.text.begin(), r.summary);
}

void cmd_partition_find(const Options& o, Report& r) {
  QMatroid m = load_matroid(o, r);
  PartitionMode mode;
  if (o.mode == "minimal") {
    mode = PartitionMode::kMinimal;
  } else if (o.mode == "maximal") {
    mode = PartitionMode::kMaximal;
  } else if (o.mode == "all") {
    mode = PartitionMode::kAll;
  } else {
    throw UsageError("--mode must be minimal, maximal or all");
  }
  r.inputs["mode"] = o.mode;
  r.inputs["limit"] = o.limit;
  PartitionOptions po;
  po.max_partitions = o.limit;
  if (o.budget != 0) {
    po.node_budget = o.budget;
    r.inputs["budget"] = o.budget;
  }
  PartitionSearchResult res = partition_search(m, mode, po);
  const BiPoly tutte = tutte_by_subtraction(rgf(m));
  json list = json::array();
  for (const auto& p : res.partitions) {
    const BiPoly poly = partition_polynomial(p);
    list.push_back({{"parts", part_list(p)},
                    {"part_count", p.parts.size()},
                    {"polynomial", poly.to_string()},
                    {"is_tutte", poly == tutte}});
  }
  r.result = {{"certified", res.certified},
              {"nodes", res.nodes},
              {"tutte", tutte.to_string()},
              {"partitions", list}};
  const auto& first = res.partitions.front();
  r.summary = std::to_string(res.partitions.size()) + " partition(s); first has " +
              std::to_string(first.parts.size()) + " parts";
  r.text = {r.summary, "tutte: " + tutte.to_string(),
            std::string("certified: ") + (res.certified ? "yes" : "no")};
  for (const auto& p : list) {
    r.text.push_back(std::to_string(p["part_count"].get<int>()) + " parts: " +
                     p["polynomial"].get<std::string>());
  }
  if (!o.out_file.empty()) write_file(o.out_file, partition_to_json(first));
}

void cmd_partition_check(const Options& o, Report& r) {
  QMatroid m = load_matroid(o, r);
  if (o.partition_file.empty()) throw UsageError("--partition FILE is required");
  const std::string text = read_file(o.partition_file);
  r.inputs["partition"] = json::parse(text, nullptr, false);
  TuttePartition p = partition_from_json(text, m.lattice().q());
  try {
    const bool tutte = is_tutte_partition(m, p);
    r.pass = tutte;
    r.result = {{"valid", true},
                {"is_tutte", tutte},
                {"polynomial", partition_polynomial(p).to_string()},
                {"tutte", tutte_by_subtraction(rgf(m)).to_string()},
                {"mergeable_pairs", mergeable_pairs(m, p)}};
    r.summary = tutte ? "Tutte partition" : "partition polynomial differs";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidPartition) throw;
    r.pass = false;
    r.result = {{"valid", false}, {"message", e.what()}};
    r.summary = std::string("invalid partition: ") + e.what();
  }
  r.text = {r.summary};
}

// ---- output -------------------------------------------------------------

void emit(const Report& r, const Options& o, double elapsed_ms,
          std::ostream& out) {
  if (o.format == "text") {
    for (const auto& line : r.text) out << line << '\n';
    if (r.text.empty() && r.result.is_array() && r.result.empty()) out << "[]\n";
    out << "pass: " << (r.pass ? "yes" : "no") << '\n';
    if (o.timing) out << "elapsed_ms: " << elapsed_ms << '\n';
    return;
  }
  json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["inputs_digest"] = fnv1a_hex(r.command + r.inputs.dump());
  j["result"] = r.result;
  j["pass"] = r.pass;
  j["summary"] = r.summary;
  if (o.timing) j["elapsed_ms"] = elapsed_ms;
  out << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"q-matroid toolkit: lattices, rank generating functions, "
               "Tutte q-polynomials and partitions"};
  app.name("qtutte");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    c->add_flag("--timing", o.timing, "report elapsed time");
  };
  auto lattice_flags = [&](CLI::App* c) {
    c->add_option("--q", o.q, "field order")->required();
    c->add_option("--k", o.k, "lattice height")->required();
  };
  auto in_flag = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--in", o.in_file, "matroid JSON file");
    if (required) opt->required();
  };
  auto out_flag = [&](CLI::App* c) {
    c->add_option("--out", o.out_file, "write the payload to FILE");
  };
  auto formula_flags = [&](CLI::App* c) {
    c->add_option("--uniform", o.uniform, "U_{R,N} instead of --in");
    c->add_option("--prime-free", o.prime_free, "Z_{R,N} instead of --in");
    c->add_flag("--symbolic", o.symbolic, "keep q symbolic (formula inputs)");
    c->add_option("--q", o.q, "field order for formula inputs");
  };

  using Handler = std::function<void(const Options&, Report&)>;
  std::vector<std::pair<CLI::App*, Handler>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& help, Handler h) {
    CLI::App* c = parent->add_subcommand(name, help);
    common(c);
    leaves.emplace_back(c, std::move(h));
    return c;
  };

  CLI::App* lattice = app.add_subcommand("lattice", "subspace lattices");
  lattice->require_subcommand(1);
  lattice_flags(leaf(lattice, "info", "flat counts per height", cmd_lattice_info));

  CLI::App* matroid = app.add_subcommand("matroid", "q-matroid operations");
  matroid->require_subcommand(1);
  in_flag(leaf(matroid, "validate", "check rank and independence axioms",
               cmd_validate),
          true);
  {
    CLI::App* c = leaf(matroid, "rgf", "rank generating function", cmd_rgf);
    in_flag(c, false);
    formula_flags(c);
    out_flag(c);
  }
  {
    CLI::App* c = leaf(matroid, "tutte", "Tutte q-polynomial", cmd_tutte);
    in_flag(c, false);
    formula_flags(c);
    out_flag(c);
  }
  {
    CLI::App* c = leaf(matroid, "dual", "dual matroid", cmd_dual);
    in_flag(c, true);
    out_flag(c);
  }
  {
    CLI::App* c = leaf(matroid, "minor", "minor on [z, w]", cmd_minor);
    in_flag(c, true);
    out_flag(c);
    c->add_option("--z", o.z, "lower flat id")->required();
    c->add_option("--w", o.w, "upper flat id")->required();
  }
  {
    CLI::App* c = leaf(matroid, "status", "flat flags, circuits, copoints",
                       cmd_status);
    in_flag(c, true);
    c->add_option("--flat", o.flat, "report one flat only");
  }
  {
    CLI::App* c = leaf(matroid, "enumerate", "all q-matroids on L(q,k)",
                       cmd_enumerate);
    lattice_flags(c);
    out_flag(c);
    c->add_flag("--iso", o.iso, "one per isomorphism class");
    c->add_option("--threads", o.threads, "worker threads");
    c->add_option("--budget", o.budget, "maximum raw matroids");
  }
  {
    CLI::App* c = leaf(matroid, "build", "uniform, prime-free or parallel-line",
                       cmd_build);
    lattice_flags(c);
    out_flag(c);
    c->add_option("--kind", o.kind, "uniform | prime-free | parallel-line")
        ->required();
    c->add_option("--param", o.param,
                  "rank (uniform), clopen flat id (prime-free) or line id");
  }

  CLI::App* verify = app.add_subcommand("verify", "identity and kernel checks");
  verify->require_subcommand(1);
  {
    CLI::App* c = leaf(verify, "identities", "q-binomial identities",
                       cmd_identities);
    c->add_flag("--theorem4", o.theorem4, "alternating q-binomial sum");
    c->add_flag("--vandermonde", o.vandermonde, "q-Vandermonde convolution");
    c->add_flag("--conjecture2", o.conjecture2, "shifted alternating sums");
    c->add_option("--n-max", o.n_max, "largest n");
    c->add_option("--h-max", o.h_max, "largest h for the convolution");
    c->add_option("--exponent-mode", o.exponent_mode, "extended | shifted");
  }
  {
    CLI::App* c = leaf(verify, "kernel", "alpha/beta inversion", cmd_kernel);
    c->add_option("--a-max", o.a_max, "largest a");
    c->add_option("--b-max", o.b_max, "largest b");
  }
  {
    CLI::App* c = leaf(verify, "nmatrix", "N-matrix sum checks", cmd_nmatrix);
    c->add_option("--a-max", o.a_max, "largest a");
    c->add_option("--b-max", o.b_max, "largest b");
    c->add_flag("--entries", o.entries, "include the matrices");
  }

  CLI::App* partition = app.add_subcommand("partition", "Tutte partitions");
  partition->require_subcommand(1);
  {
    CLI::App* c = leaf(partition, "find", "exact cover by prime-free intervals",
                       cmd_partition_find);
    in_flag(c, true);
    out_flag(c);
    c->add_option("--mode", o.mode, "minimal | maximal | all");
    c->add_option("--budget", o.budget, "search node budget");
    c->add_option("--limit", o.limit, "partitions to report (0: all)");
  }
  {
    CLI::App* c = leaf(partition, "check", "is this a Tutte partition",
                       cmd_partition_check);
    in_flag(c, true);
    c->add_option("--partition", o.partition_file, "partition JSON")->required();
  }

  std::vector<const char*> argv{"qtutte"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (auto& [sub, handler] : leaves) {
    if (!sub->parsed()) continue;
    Report r;
    r.command = sub->get_parent()->get_name() + " " + sub->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
      handler(o, r);
    } catch (const UsageError& e) {
      err << "qtutte: " << e.what() << '\n' << sub->help();
      return kUsage;
    } catch (const Error& e) {
      err << "qtutte: " << error_code_name(e.code()) << ": " << e.what() << '\n';
      return kUsage;
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    emit(r, o, ms, out);
    return r.pass ? kOk : kCheckFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace qtutte::cli
