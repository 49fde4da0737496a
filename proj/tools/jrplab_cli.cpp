// Command-line front end: generators, partitioners, verifiers and the
// simulators wired into reproducible experiments. Every output file embeds
// the config echo and library version; default runs are byte-reproducible.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jrplab/generators.hpp"
#include "jrplab/io.hpp"
#include "jrplab/numeric.hpp"
#include "jrplab/offline.hpp"
#include "jrplab/regression.hpp"
#include "jrplab/stretch.hpp"
#include "jrplab/usc.hpp"

using namespace jrplab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int max_exhaustive_n() {
  if (const char* env = std::getenv("JRPLAB_MAX_N")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 20;
}

struct NRange {
  int lo = 4;
  int hi = 4;
};

NRange parse_range(const std::string& s) {
  NRange r;
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(s);
  } else {
    r.lo = std::stoi(s.substr(0, dots));
    r.hi = std::stoi(s.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw Error(ErrorKind::domain, "bad --n range: " + s);
  return r;
}

json config_echo(const std::string& command, const json& args) {
  return json{{"command", command}, {"args", args}};
}

void emit(const json& payload, const json& config, const std::string& out_path) {
  json doc{{"jrplab_version", kLibraryVersion}, {"config", config}, {"result", payload}};
  if (out_path.empty())
    std::cout << doc.dump(2) << "\n";
  else
    write_json_file(doc, out_path);
}

Partition partition_for(const InstanceFile& inst) {
  const ServiceFunctionSpec& f = inst.spec;
  switch (f.kind()) {
    case FnKind::mla_tree:
      return mla_partition(f.as_mla()->tree).partition;
    case FnKind::symmetric:
      return symmetric_partition(f.n(), f.as_symmetric()->values);
    case FnKind::weighted_symmetric:
      return weighted_partition(f.as_weighted()->instance).partition;
    case FnKind::explicit_table:
      return subadditive_to_disjoint(f);
    case FnKind::disjoint:
      return f.as_disjoint()->partition;
  }
  throw Error(ErrorKind::domain, "unknown function kind");
}

// 10*sqrt(n) + 2 as a certified rational upper bound, for report columns.
Rat mla_bound_upper(int n) {
  return Rat(10) * sqrt_bounds(Rat(n), 9).second + Rat(2);
}

struct CsvRow {
  int n;
  std::string kind;
  Rat stretch;
  Rat bound;
};

void write_csv(const std::vector<CsvRow>& rows, const json& config,
               const std::string& out_path, bool timings, long wall_ms) {
  std::ostringstream os;
  os << "# jrplab " << kLibraryVersion << "\n";
  os << "# config " << config.dump() << "\n";
  os << "n,kind,stretch_num,stretch_den,bound_num,bound_den,wall_ms\n";
  for (const CsvRow& r : rows)
    os << r.n << "," << r.kind << "," << r.stretch.num() << "," << r.stretch.den() << ","
       << r.bound.num() << "," << r.bound.den() << "," << (timings ? wall_ms : 0) << "\n";
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorKind::validation, "cannot open for writing: " + out_path);
    f << os.str();
  }
}

int cmd_validate(const std::string& in, const std::string& out) {
  InstanceFile inst = read_instance(in);
  ValidationReport rep = check_monotone_subadditive(inst.spec);
  json payload{{"passed", rep.passed}, {"detail", rep.detail}};
  if (rep.witness_a) payload["witness_a"] = set_to_indices(*rep.witness_a);
  if (rep.witness_b) payload["witness_b"] = set_to_indices(*rep.witness_b);
  if (!rep.values.empty()) {
    json vals = json::array();
    for (const Rat& v : rep.values) vals.push_back(v.str());
    payload["values"] = vals;
  }
  emit(payload, config_echo("validate", json{{"in", in}}), out);
  return rep.passed ? kExitOk : kExitViolation;
}

int cmd_partition(const std::string& in, const std::string& out, const std::string& verify) {
  InstanceFile inst = read_instance(in);
  Partition p = partition_for(inst);
  json payload = serialize_partition(p);
  int rc = kExitOk;
  if (verify != "none") {
    if (inst.spec.n() > max_exhaustive_n())
      throw Error(ErrorKind::size, "verification exceeds JRPLAB_MAX_N");
    StretchReport rep =
        verify == "exhaustive" ? stretch_exhaustive(inst.spec, p) : stretch(inst.spec, p);
    payload["verified_stretch"] = stretch_report_json(rep);
    bool ok = rep.finite;
    if (ok) {
      const unsigned long n = static_cast<unsigned long>(inst.spec.n());
      switch (inst.spec.kind()) {
        case FnKind::mla_tree:
          ok = leq_affine_sqrt(rep.ratio, Rat(10), n, Rat(2));
          break;
        case FnKind::symmetric:
          ok = rep.ratio <= Rat(2) * Rat(static_cast<long>(ceil_sqrt_ul(n)));
          break;
        case FnKind::weighted_symmetric:
          ok = rep.ratio * rep.ratio <= regression::kWeightedC2() * Rat(static_cast<long>(n));
          break;
        default:
          ok = true;  // no fixed bound for the generic pipeline here
      }
    }
    payload["bound_ok"] = ok;
    if (!ok) rc = kExitViolation;
  }
  emit(payload, config_echo("partition", json{{"in", in}, {"verify", verify}}), out);
  return rc;
}

int cmd_stretch(const std::string& fn_path, const std::string& partition_path,
                const std::string& out) {
  InstanceFile inst = read_instance(fn_path);
  Partition p = parse_partition(read_json_file(partition_path));
  if (inst.spec.n() > max_exhaustive_n())
    throw Error(ErrorKind::size, "stretch exceeds JRPLAB_MAX_N");
  StretchReport rep = stretch(inst.spec, p);
  emit(stretch_report_json(rep),
       config_echo("stretch", json{{"fn", fn_path}, {"partition", partition_path}}), out);
  return kExitOk;
}

int cmd_simulate(const std::string& fn_path, const std::string& partition_path,
                 const std::string& out, const std::string& horizon) {
  InstanceFile inst = read_instance(fn_path);
  if (!inst.requests) throw Error(ErrorKind::domain, "instance file carries no requests");
  Partition p = partition_path.empty() ? partition_for(inst)
                                       : parse_partition(read_json_file(partition_path));
  const Rat h = horizon.empty() ? Rat(1048576) : Rat::parse(horizon);
  ServiceSchedule sched = reduce_and_run(inst.spec, p, *inst.requests, h);
  emit(schedule_json(sched),
       config_echo("simulate", json{{"fn", fn_path},
                                    {"partition", partition_path},
                                    {"horizon", h.str()}}),
       out);
  return sched.unserved.empty() ? kExitOk : kExitViolation;
}

int cmd_opt(const std::string& in, const std::string& out) {
  InstanceFile inst = read_instance(in);
  if (!inst.requests) throw Error(ErrorKind::domain, "instance file carries no requests");
  auto [value, sched] = offline_opt(inst.spec, *inst.requests);
  json payload{{"opt_num", value.num().get_str()},
               {"opt_den", value.den().get_str()},
               {"schedule", schedule_json(sched)}};
  emit(payload, config_echo("opt", json{{"in", in}}), out);
  return kExitOk;
}

int cmd_generate(const std::string& kind, int n, long tau, int k, std::uint64_t seed,
                 int num_requests, const std::string& out) {
  json config = config_echo("generate", json{{"kind", kind},
                                             {"n", n},
                                             {"tau", tau},
                                             {"k", k},
                                             {"seed", seed},
                                             {"requests", num_requests}});
  if (kind == "jia") {
    SetSystem sys = gen_jia_tight(k, Rat(1, 1000000));
    json sets = json::array();
    for (const auto& s : sys.sets) sets.push_back(s);
    json costs = json::array();
    for (const Quad& c : sys.costs) costs.push_back(c.str());
    emit(json{{"schema", "jrplab-setsystem/1"},
              {"universe", sys.universe},
              {"sets", sets},
              {"costs", costs}},
         config, out);
    return kExitOk;
  }

  std::optional<InstanceFile> inst;
  if (kind == "star-mla") {
    inst.emplace(InstanceFile{ServiceFunctionSpec::make_mla(gen_star_mla(n)), std::nullopt});
  } else if (kind == "ceiling") {
    inst.emplace(InstanceFile{gen_ceiling_symmetric(n), std::nullopt});
  } else if (kind == "touitou") {
    TouitouInstance t = gen_touitou(n, tau);
    std::cout << "w=" << t.w_approx.str() << " eps=" << t.eps.str()
              << " alg_ref=" << t.alg_ref().str() << " opt_ref=" << t.opt_ref().str() << "\n";
    inst.emplace(InstanceFile{ServiceFunctionSpec::make_mla(t.tree), t.stream});
  } else if (kind == "random-mla") {
    inst.emplace(InstanceFile{ServiceFunctionSpec::make_mla(gen_random_mla(n, seed)), std::nullopt});
  } else if (kind == "random-symmetric") {
    inst.emplace(InstanceFile{gen_random_symmetric(n, seed), std::nullopt});
  } else if (kind == "random-subadditive") {
    inst.emplace(InstanceFile{gen_random_subadditive(n, seed), std::nullopt});
  } else if (kind == "random-weighted") {
    inst.emplace(InstanceFile{
        ServiceFunctionSpec::make_weighted(gen_random_weighted(n, 64, seed)), std::nullopt});
  } else {
    throw Error(ErrorKind::domain, "unknown generator kind: " + kind);
  }
  if (num_requests > 0)
    inst->requests = gen_random_stream(inst->spec.n(), num_requests, seed + 1);
  if (out.empty())
    std::cout << serialize_instance(*inst).dump(2) << "\n";
  else
    write_instance(*inst, out);
  return kExitOk;
}

int cmd_experiment(const std::string& suite, const NRange& range, std::uint64_t seed,
                   const std::string& out, bool timings) {
  std::vector<CsvRow> rows;
  bool ok = true;
  json config = config_echo("experiment", json{{"suite", suite},
                                               {"n", std::to_string(range.lo) + ".." +
                                                         std::to_string(range.hi)},
                                               {"seed", seed}});

  if (suite == "mla-bound") {
    for (int n = range.lo; n <= range.hi; ++n) {
      Rat worst = 0;
      for (int rep = 0; rep < 10; ++rep) {
        MlaInstance t = gen_random_mla(n, seed + 1000 * n + rep);
        auto res = mla_partition(t);
        StretchReport sr = stretch(ServiceFunctionSpec::make_mla(t), res.partition);
        if (!sr.finite || !leq_affine_sqrt(sr.ratio, Rat(10), n, Rat(2))) ok = false;
        if (sr.finite) worst = max(worst, sr.ratio);
      }
      rows.push_back({n, "mla", worst, mla_bound_upper(n)});
    }
  } else if (suite == "symmetric-bound") {
    for (int n = range.lo; n <= range.hi; ++n) {
      Rat worst = 0;
      const Rat bound = Rat(2) * Rat(static_cast<long>(ceil_sqrt_ul(n)));
      for (int rep = 0; rep < 10; ++rep) {
        ServiceFunctionSpec f = gen_random_symmetric(n, seed + 1000 * n + rep);
        StretchReport sr = stretch(f, symmetric_partition(n, f.as_symmetric()->values));
        if (!sr.finite || sr.ratio > bound) ok = false;
        if (sr.finite) worst = max(worst, sr.ratio);
      }
      rows.push_back({n, "symmetric", worst, bound});
    }
  } else if (suite == "weighted-bound") {
    for (int n = range.lo; n <= range.hi; ++n) {
      Rat worst = 0;
      for (int rep = 0; rep < 10; ++rep) {
        WeightedInstance w = gen_random_weighted(n, 64, seed + 1000 * n + rep);
        auto res = weighted_partition(w);
        StretchReport sr = stretch(ServiceFunctionSpec::make_weighted(w), res.partition);
        if (!sr.finite ||
            sr.ratio * sr.ratio > regression::kWeightedC2() * Rat(n))
          ok = false;
        if (sr.finite) worst = max(worst, sr.ratio);
      }
      rows.push_back({n, "weighted", worst,
                      Rat(4) * sqrt_bounds(Rat(n), 9).second});
    }
  } else if (suite == "usc-stretch") {
    for (int n = std::max(range.lo, 2); n <= std::min(range.hi, 10); ++n) {
      Rat worst = 0;
      const Rat ln_lo = ln_bounds(static_cast<unsigned long>(n)).first;
      for (int rep = 0; rep < 5; ++rep) {
        ServiceFunctionSpec f = gen_random_subadditive(n, seed + 1000 * n + rep);
        StretchReport sr = stretch(f, subadditive_to_disjoint(f));
        if (!sr.finite || sr.ratio * sr.ratio > Rat(16) * Rat(n) * ln_lo) ok = false;
        if (sr.finite) worst = max(worst, sr.ratio);
      }
      rows.push_back({n, "usc", worst, Rat(4) * sqrt_bounds(Rat(n) * ln_lo, 9).second});
    }
  } else if (suite == "touitou-ratio") {
    for (int n = range.lo; n <= range.hi; n *= 4) {
      TouitouInstance t = gen_touitou(n, 1, Rat(0), 9);
      const Rat ratio = t.alg_ref() / t.opt_ref();
      const Rat threshold_sq =
          Rat(n) * (ln_bounds(static_cast<unsigned long>(n)).first - Rat(1, 1000000));
      const Rat lhs = Rat(1) + Rat(n - 1) * t.w_approx;
      if (lhs * lhs < threshold_sq) ok = false;
      rows.push_back({n, "touitou", ratio, sqrt_bounds(threshold_sq, 9).first / Rat(2)});
      if (n > range.hi / 4) break;
    }
  } else if (suite == "online-competitive") {
    for (int n = range.lo; n <= std::min(range.hi, 6); ++n) {
      Rat worst = 0;
      for (int rep = 0; rep < 20; ++rep) {
        const std::uint64_t s = seed + 1000 * n + rep;
        auto parts = gen_random_partition(n, 2, s);
        Partition g;
        g.n = n;
        g.parts = parts;
        std::mt19937_64 eng(s ^ 0x9e3779b97f4a7c15ull);
        for (size_t i = 0; i < parts.size(); ++i)
          g.costs.push_back(Rat(1 + static_cast<long>(eng() % 8)));
        RequestStream stream = gen_random_stream(n, 5, s + 7);
        ServiceSchedule sched = run_disjoint_online(g, stream);
        auto [opt, opt_sched] = offline_opt(ServiceFunctionSpec::make_disjoint(g), stream);
        Ratio cr = competitive_ratio(sched.total_g(), opt);
        if (cr.infinite || cr.value > Rat(2)) ok = false;
        if (!cr.infinite) worst = max(worst, cr.value);
      }
      rows.push_back({n, "online", worst, Rat(2)});
    }
  } else {
    throw Error(ErrorKind::domain, "unknown suite: " + suite);
  }

  write_csv(rows, config, out, timings, 0);
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"competitive-analysis lab for online joint replenishment under delay"};
  app.require_subcommand(1);

  std::string in, out, fn_path, partition_path, verify = "fast", horizon, suite, kind,
              range_str = "4..4";
  std::uint64_t seed = 1;
  int n = 4, k = 4, num_requests = 0;
  long tau = 1;
  bool timings = false;

  auto* validate = app.add_subcommand("validate", "audit monotonicity and subadditivity");
  validate->add_option("--in", in)->required();
  validate->add_option("--out", out);

  auto* partition = app.add_subcommand("partition", "run the kind-appropriate partitioner");
  partition->add_option("--in", in)->required();
  partition->add_option("--out", out);
  partition->add_option("--verify", verify)->check(CLI::IsMember({"none", "fast", "exhaustive"}));

  auto* stretch_cmd = app.add_subcommand("stretch", "exact stretch of a partition");
  stretch_cmd->add_option("--fn", fn_path)->required();
  stretch_cmd->add_option("--partition", partition_path)->required();
  stretch_cmd->add_option("--out", out);

  auto* simulate = app.add_subcommand("simulate", "run the online reduction on a stream");
  simulate->add_option("--fn", fn_path)->required();
  simulate->add_option("--partition", partition_path);
  simulate->add_option("--out", out);
  simulate->add_option("--horizon", horizon);

  auto* opt_cmd = app.add_subcommand("opt", "brute-force offline optimum");
  opt_cmd->add_option("--in", in)->required();
  opt_cmd->add_option("--out", out);

  auto* generate = app.add_subcommand("generate", "emit a named instance");
  generate->add_option("--kind", kind)->required();
  generate->add_option("--n", n);
  generate->add_option("--tau", tau);
  generate->add_option("--k", k);
  generate->add_option("--seed", seed);
  generate->add_option("--requests", num_requests);
  generate->add_option("--out", out);

  auto* experiment = app.add_subcommand("experiment", "sweep sizes and emit a CSV");
  experiment->add_option("--suite", suite)->required();
  experiment->add_option("--n", range_str);
  experiment->add_option("--seed", seed);
  experiment->add_option("--out", out);
  experiment->add_flag("--timings", timings,
                       "real wall times in the CSV (breaks byte-reproducibility)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(in, out);
    if (partition->parsed()) return cmd_partition(in, out, verify);
    if (stretch_cmd->parsed()) return cmd_stretch(fn_path, partition_path, out);
    if (simulate->parsed()) return cmd_simulate(fn_path, partition_path, out, horizon);
    if (opt_cmd->parsed()) return cmd_opt(in, out);
    if (generate->parsed()) return cmd_generate(kind, n, tau, k, seed, num_requests, out);
    if (experiment->parsed())
      return cmd_experiment(suite, parse_range(range_str), seed, out, timings);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::parse || e.kind() == ErrorKind::domain ||
                   e.kind() == ErrorKind::size
               ? kExitUsage
               : kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
