#include "tck/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>

#include "tck/curves.hpp"
#include "tck/grobner.hpp"
#include "tck/hilbert.hpp"
#include "tck/json.hpp"
#include "tck/mora.hpp"
#include "tck/poly_io.hpp"
#include "tck/resolution.hpp"

namespace tck {

namespace {

struct RunConfig {
  std::vector<long long> m;
  std::vector<int> abd;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool generic = false;
  bool paper = false;
  std::string complex_file;
  int max_degree = 10;
  int a_max = 3;
  std::vector<int> d_list{1, 2, 3, 5, 7};
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CurveSpec spec_of(const RunConfig& cfg) {
  const bool has_m = !cfg.m.empty(), has_abd = !cfg.abd.empty();
  if (has_m == has_abd) throw UsageError("exactly one of --m and --abd is required");
  if (has_m) {
    if (cfg.m.size() != 4) throw UsageError("--m takes four comma-separated integers");
    return validate_spec({cfg.m[0], cfg.m[1], cfg.m[2], cfg.m[3]});
  }
  if (cfg.abd.size() != 3) throw UsageError("--abd takes three comma-separated integers");
  return spec_from_abd(cfg.abd[0], cfg.abd[1], cfg.abd[2]);
}

bool json_out(const RunConfig& cfg) { return cfg.format == "json"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

template <typename T>
std::string join_sizes(const std::vector<T>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

void print_complex(std::ostream& out, const FreeComplex& c) {
  for (std::size_t j = 0; j < c.levels.size(); ++j) {
    out << "level " << j << " shifts: " << join_ints(c.levels[j]) << '\n';
  }
  for (std::size_t j = 0; j < c.maps.size(); ++j) {
    const auto& m = c.maps[j];
    out << "map " << j + 1 << " (" << m.rows() << "x" << m.cols() << "):\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << "  [";
      for (std::size_t k = 0; k < m.cols(); ++k) out << (k ? ", " : "") << to_string(m(r, k));
      out << "]\n";
    }
  }
}

FreeComplex build_complex(const RunConfig& cfg, const CurveSpec& spec) {
  if (cfg.generic) return schreyer_resolution(tangent_cone_generators(spec), cm_order());
  return explicit_resolution(spec);
}

// --- subcommands ---------------------------------------------------------------

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  auto spec = spec_of(cfg);
  if (json_out(cfg)) {
    emit(out, to_json(spec));
  } else {
    out << "m = " << join_ints({spec.m.begin(), spec.m.end()}, ",") << '\n'
        << "a = " << spec.a << '\n'
        << "b = " << spec.b << '\n'
        << "d = " << spec.d << '\n';
  }
  return kExitOk;
}

int cmd_generators(const RunConfig& cfg, std::ostream& out) {
  auto g = curve_generators(spec_of(cfg));
  if (json_out(cfg)) {
    emit(out, to_json(g));
    return kExitOk;
  }
  auto labels = g.labels();
  auto all = g.all();
  for (std::size_t k = 0; k < all.size(); ++k) out << labels[k] << ": " << to_string(all[k]) << '\n';
  return kExitOk;
}

int cmd_std_basis(const RunConfig& cfg, std::ostream& out) {
  auto g = curve_generators(spec_of(cfg));
  auto labels = g.labels();
  auto report = is_standard_basis(g.all(), ds_order());
  if (json_out(cfg)) {
    emit(out, to_json(report, labels));
  } else {
    out << "standard basis (ds, x0>x1>x2>y): " << (report.verdict ? "yes" : "no") << " (" << report.pairs.size()
        << " pairs)\n";
    for (const auto& p : report.pairs) {
      out << "spoly(" << labels[p.i] << ", " << labels[p.j] << ") = " << to_string(p.spoly) << '\n';
      for (const auto& s : p.trace.steps) {
        std::string who = s.reducer < labels.size() ? labels[s.reducer] : "T" + std::to_string(s.reducer - labels.size());
        out << "  by " << who << " (ecart " << s.reducer_ecart << " vs " << s.current_ecart
            << (s.pooled ? ", pooled" : "") << ") -> " << to_string(s.after) << '\n';
      }
      out << "  NF = " << to_string(p.trace.result) << '\n';
    }
  }
  return report.verdict ? kExitOk : kExitVerifyFailed;
}

int cmd_tangent_cone(const RunConfig& cfg, std::ostream& out) {
  auto gs = tangent_cone_generators(spec_of(cfg));
  if (json_out(cfg)) {
    Json arr = Json::array();
    for (const auto& g : gs) arr.push_back(to_string(g));
    emit(out, {{"tangent_cone", arr}});
  } else {
    for (const auto& g : gs) out << to_string(g) << '\n';
  }
  return kExitOk;
}

int cmd_cm_check(const RunConfig& cfg, std::ostream& out) {
  auto cert = cohen_macaulay_certificate(spec_of(cfg));
  if (json_out(cfg)) {
    emit(out, to_json(cert));
  } else {
    auto lms = [](const std::vector<Monomial>& ms) {
      std::string s;
      for (const auto& m : ms) s += (s.empty() ? "" : ", ") + to_string(m);
      return s;
    };
    out << "order: degrevlex x1>x2>y>x0\n"
        << "leading monomials: " << lms(cert.leading_monomials) << '\n'
        << "groebner basis: " << (cert.is_groebner ? "yes" : "no") << '\n'
        << "x0-free: " << (cert.x0_free ? "yes" : "no") << '\n'
        << "cohen-macaulay: " << (cert.conclusion ? "yes" : "no") << '\n'
        << "literal reading degrevlex x0>y>x1>x2: leading monomials " << lms(cert.literal_leading_monomials)
        << "; x0-free " << (cert.literal_x0_free ? "yes" : "no") << '\n';
  }
  return cert.conclusion ? kExitOk : kExitVerifyFailed;
}

int cmd_resolution(const RunConfig& cfg, std::ostream& out) {
  if (cfg.generic && cfg.paper) throw UsageError("--paper and --generic are exclusive");
  auto c = build_complex(cfg, spec_of(cfg));
  if (json_out(cfg)) {
    emit(out, complex_to_json(c));
  } else {
    print_complex(out, c);
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  FreeComplex c;
  WitnessSeeds seeds;
  std::optional<CurveSpec> spec;
  if (!cfg.m.empty() || !cfg.abd.empty()) spec = spec_of(cfg);
  if (!cfg.complex_file.empty()) {
    std::ifstream in(cfg.complex_file);
    if (!in) throw UsageError("cannot open " + cfg.complex_file);
    Json j;
    try {
      in >> j;
    } catch (const Json::parse_error& e) {
      throw Error(Errc::Parse, std::string("complex file: ") + e.what());
    }
    c = complex_from_json(j);
  } else if (spec) {
    c = build_complex(cfg, *spec);
  } else {
    throw UsageError("verify needs --complex-file or a curve (--m/--abd)");
  }
  if (spec && !cfg.generic) seeds = named_witnesses(*spec);

  bool is_complex = verify_complex(c);
  std::optional<ExactnessReport> report;
  if (is_complex) report = exactness_certificate(c, seeds);
  const bool ok = is_complex && report->verdict;

  if (json_out(cfg)) {
    Json j = {{"complex", is_complex}};
    if (report) j["exactness"] = to_json(*report);
    j["verdict"] = ok;
    emit(out, j);
  } else {
    out << "complex: " << (is_complex ? "yes" : "no") << '\n';
    if (report) {
      out << "ranks: " << join_sizes(report->ranks) << '\n';
      for (std::size_t i = 0; i < report->rank_conditions.size(); ++i) {
        out << "rank F_" << i + 1 << " = r_" << i + 1 << " + r_" << i + 2 << ": "
            << (report->rank_conditions[i] ? "yes" : "no") << '\n';
      }
      for (const auto& s : report->sequences) {
        out << "I(phi_" << s.map_index << ") regular sequence of length " << s.required_length << ": ";
        if (s.found) {
          std::string seq;
          for (const auto& f : s.sequence) seq += (seq.empty() ? "" : ", ") + to_string(f);
          out << "{" << seq << "}\n";
        } else {
          out << "not found\n";
        }
      }
    }
    out << "exact: " << (ok ? "yes" : "no") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  auto t = betti_numbers(build_complex(cfg, spec_of(cfg)));
  if (json_out(cfg)) {
    emit(out, to_json(t));
  } else {
    out << join_sizes(t.beta) << '\n';
    for (std::size_t j = 0; j < t.shifts.size(); ++j) out << "shifts " << j << ": " << join_ints(t.shifts[j]) << '\n';
  }
  return kExitOk;
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_degree < 0) throw UsageError("--max must be non-negative");
  auto spec = spec_of(cfg);
  auto f = hilbert_table(spec, cfg.max_degree, "formula");
  auto c = hilbert_table(spec, cfg.max_degree, "complex");
  auto o = hilbert_table(spec, cfg.max_degree, "oracle");
  bool agree = f.values == c.values && c.values == o.values;
  if (json_out(cfg)) {
    Json rows = Json::array();
    for (int i = 0; i <= cfg.max_degree; ++i) {
      rows.push_back({{"degree", i}, {"formula", f.values[i]}, {"complex", c.values[i]}, {"oracle", o.values[i]}});
    }
    emit(out, {{"spec", to_json(spec)}, {"rows", rows}, {"agree", agree}, {"stabilizes_at", stabilization_index(o)}});
  } else {
    out << std::setw(6) << "degree" << std::setw(9) << "formula" << std::setw(9) << "complex" << std::setw(9)
        << "oracle" << '\n';
    for (int i = 0; i <= cfg.max_degree; ++i) {
      out << std::setw(6) << i << std::setw(9) << f.values[i] << std::setw(9) << c.values[i] << std::setw(9)
          << o.values[i] << '\n';
    }
    out << "agree: " << (agree ? "yes" : "no") << '\n';
  }
  return agree ? kExitOk : kExitVerifyFailed;
}

struct GridRow {
  CurveSpec spec;
  bool generators = false;
  bool minimal = false;
  bool std_basis = false;
  bool tangent_cone = false;
  bool cm = false;
  bool exact = false;
  bool betti = false;
  bool hilbert = false;

  bool ok() const { return generators && minimal && std_basis && tangent_cone && cm && exact && betti && hilbert; }
};

GridRow grid_row(const CurveSpec& spec) {
  GridRow row{spec};
  const auto ord = default_global_order();
  const auto gens = curve_generators(spec).all();
  row.generators = ideal_equal(gens, toric_ideal(spec.m).generators, ord);
  row.minimal = true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != k) rest.push_back(gens[j]);
    }
    row.minimal = row.minimal && !ideal_contains(buchberger(rest, ord), gens[k]);
  }
  row.std_basis = is_standard_basis(gens, ds_order()).verdict;
  std::vector<Polynomial> least;
  for (const auto& g : standard_basis(gens, ds_order()).elements) least.push_back(least_homogeneous_form(g));
  const auto tc = tangent_cone_generators(spec);
  row.tangent_cone = ideal_equal(tc, least, ord);
  row.cm = cohen_macaulay_certificate(spec).conclusion;
  const auto explicit_res = explicit_resolution(spec);
  row.exact = verify_complex(explicit_res) && exactness_certificate(explicit_res, named_witnesses(spec)).verdict;
  const auto expected = expected_betti(spec);
  row.betti = betti_numbers(schreyer_resolution(tc, cm_order())) == expected && betti_numbers(explicit_res) == expected;
  row.hilbert = true;
  for (int i = 0; i <= 20; ++i) {
    auto f = hilbert_formula(spec, i);
    row.hilbert = row.hilbert && f == hilbert_from_complex(explicit_res, i) && f == hilbert_semigroup_oracle(spec, i);
  }
  return row;
}

int cmd_grid(const RunConfig& cfg, std::ostream& out) {
  if (cfg.a_max < 1) throw UsageError("--a-max must be at least 1");
  std::vector<CurveSpec> specs;
  for (int a = 1; a <= cfg.a_max; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int d : cfg.d_list) {
        if (d < 1) throw UsageError("--d-list entries must be positive");
        if (std::gcd(3 * a + b, d) != 1) continue;
        specs.push_back(spec_from_abd(a, b, d));
      }
    }
  }
  std::vector<std::future<GridRow>> jobs;
  for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, grid_row, s));
  std::vector<GridRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());

  bool all_ok = std::all_of(rows.begin(), rows.end(), [](const GridRow& r) { return r.ok(); });
  if (json_out(cfg)) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"spec", to_json(r.spec)},
                     {"generators", r.generators},
                     {"minimal", r.minimal},
                     {"std_basis", r.std_basis},
                     {"tangent_cone", r.tangent_cone},
                     {"cohen_macaulay", r.cm},
                     {"exact", r.exact},
                     {"betti", r.betti},
                     {"hilbert", r.hilbert}});
    }
    emit(out, {{"rows", arr}, {"all_pass", all_ok}});
  } else {
    auto yn = [](bool v) { return v ? "ok" : "FAIL"; };
    for (const auto& r : rows) {
      out << to_string(r.spec) << ": generators " << yn(r.generators) << ", minimal " << yn(r.minimal)
          << ", std-basis " << yn(r.std_basis) << ", tangent-cone " << yn(r.tangent_cone) << ", cm " << yn(r.cm)
          << ", exact " << yn(r.exact) << ", betti " << yn(r.betti) << ", hilbert " << yn(r.hilbert) << '\n';
    }
    out << rows.size() << " specs, " << (all_ok ? "all pass" : "failures present") << '\n';
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Tangent cones of monomial curves in arithmetic progression", "tangentcone-kit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "degrees m0,m1,m2,m3")->delimiter(',');
    sub->add_option("--abd", cfg.abd, "parameters a,b,d (m0 = 3a+b)")->delimiter(',');
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized internals (default paths are deterministic)");
  };

  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const RunConfig&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };

  add("info", "echo the curve and its a, b, d", cmd_info);
  add("generators", "binomial generators of the defining ideal", cmd_generators);
  add("std-basis", "standard-basis verification with reduction chains", cmd_std_basis);
  add("tangent-cone", "generators of the tangent cone ideal", cmd_tangent_cone);
  add("cm-check", "Cohen-Macaulay certificate", cmd_cm_check);
  auto* res = add("resolution", "free resolution of the tangent cone", cmd_resolution);
  res->add_flag("--paper", cfg.paper, "explicit resolution (default)");
  res->add_flag("--generic", cfg.generic, "minimalized Schreyer resolution");
  auto* ver = add("verify", "complex check and exactness certificate", cmd_verify);
  ver->add_option("--complex-file", cfg.complex_file, "FreeComplex JSON to verify");
  ver->add_flag("--generic", cfg.generic, "verify the Schreyer resolution instead");
  auto* bet = add("betti", "Betti numbers", cmd_betti);
  bet->add_flag("--generic", cfg.generic, "read them off the Schreyer resolution");
  auto* hil = add("hilbert", "Hilbert function by three routes", cmd_hilbert);
  hil->add_option("--max", cfg.max_degree, "largest degree");
  auto* grid = add("grid", "acceptance sweep over a grid of curves", cmd_grid);
  grid->add_option("--a-max", cfg.a_max, "largest a");
  grid->add_option("--d-list", cfg.d_list, "common differences")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    if (is_spec_error(e.code()) || e.code() == Errc::Parse) return kExitInvalid;
    return kExitVerifyFailed;
  }
  return kExitInvalid;
}

}  // namespace tck
