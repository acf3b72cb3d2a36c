#include "plab/cli.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "plab/descriptors.hpp"
#include "plab/error.hpp"
#include "plab/random.hpp"

namespace plab::cli {
namespace {

constexpr const char* kReportSchema = "plab-report/1";
constexpr const char* kCsvHeader = "experiment_id,measurement_id,op,status,value,radius,mode,pass,runtime_ms";

struct Outcome {
  Json result;
  std::optional<Error> error;
  std::string failure;  // non-empty when a check did not hold
  double runtime_ms = 0.0;
};

int exit_for(const Error& e) { return e.code() == ErrorCode::BudgetExceeded ? kBudget : kValidation; }

std::string csv_field(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

// Applies {"path": json-pointer, "eq" | "le" | "ge" | "lt" | "gt": x}.
std::string check_expectation(const Json& result, const Json& expect) {
  const auto path = expect.value("path", std::string("/value"));
  Json::json_pointer ptr;
  try {
    ptr = Json::json_pointer(path);
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::ParseError, "bad expectation path '" + path + "'");
  }
  if (!result.contains(ptr)) return "expected field " + path + " is missing";
  const auto& v = result.at(ptr);
  for (const auto& [key, want] : expect.items()) {
    if (key == "path") continue;
    bool ok = false;
    if (key == "eq") {
      ok = v == want;
    } else {
      require(v.is_number() && want.is_number(), ErrorCode::ParseError, "ordered expectation on non-number");
      const double a = v.get<double>(), b = want.get<double>();
      if (key == "le") ok = a <= b;
      else if (key == "ge") ok = a >= b;
      else if (key == "lt") ok = a < b;
      else if (key == "gt") ok = a > b;
      else fail(ErrorCode::ParseError, "unknown expectation '" + key + "'");
    }
    if (!ok) return path + " = " + v.dump() + " fails " + key + " " + want.dump();
  }
  return "";
}

void validate_manifest(const Json& manifest) {
  require(manifest.is_object(), ErrorCode::ParseError, "manifest must be a JSON object");
  require(manifest.contains("id") && manifest["id"].is_string(), ErrorCode::ParseError, "manifest needs a string 'id'");
  require(manifest.contains("measurements") && manifest["measurements"].is_array(), ErrorCode::ParseError,
          "manifest needs a 'measurements' array");
  std::set<std::string> ids;
  for (const auto& m : manifest["measurements"]) {
    require(m.is_object() && m.contains("id") && m["id"].is_string() && m.contains("op"), ErrorCode::ParseError,
            "every measurement needs a string 'id' and an 'op'");
    require(ids.insert(m["id"].get<std::string>()).second, ErrorCode::ParseError,
            "duplicate measurement id '" + m["id"].get<std::string>() + "'");
  }
  if (manifest.contains("seed"))
    require(manifest["seed"].is_number_unsigned() ||
                (manifest["seed"].is_number_integer() && manifest["seed"].get<std::int64_t>() >= 0),
            ErrorCode::ParseError, "'seed' must be a non-negative integer");
}

Outcome measure(const Json& m, std::optional<std::uint64_t> seed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    MeasureContext ctx;
    if (seed) ctx.seed = derive_seed(*seed, m["id"].get<std::string>());
    require(ctx.seed.has_value() || !needs_seed(m), ErrorCode::ParameterOutOfRange,
            "randomized measurement needs a seed (manifest 'seed' or --seed)");
    out.result = run_measurement(m, ctx);
    if (out.result.contains("pass") && out.result["pass"] == false) out.failure = "check did not hold";
    if (m.contains("expect")) {
      const auto& ex = m["expect"];
      const auto list = ex.is_array() ? ex : Json::array({ex});
      for (const auto& e : list) {
        const auto why = check_expectation(out.result, e);
        if (!why.empty() && out.failure.empty()) out.failure = why;
      }
    }
  } catch (const Error& e) {
    out.error = e;
  }
  out.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  require(static_cast<bool>(f), ErrorCode::ParameterOutOfRange, "cannot write " + p.string());
  f << text;
}

}  // namespace

RunResult run_manifest(const Json& manifest, const RunOptions& options) {
  validate_manifest(manifest);
  const auto& ms = manifest["measurements"];
  std::optional<std::uint64_t> seed = options.seed;
  if (!seed && manifest.contains("seed")) seed = manifest["seed"].get<std::uint64_t>();

  std::vector<Outcome> outcomes(ms.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ms.size(); i = next++) outcomes[i] = measure(ms[i], seed);
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(ms.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RunResult run;
  const auto id = manifest["id"].get<std::string>();
  const bool record_runtime = manifest.value("record_runtime", false);
  Json config = manifest;
  config.erase("workers");
  if (options.seed) config["seed"] = *options.seed;
  Json rows = Json::array();
  std::ostringstream csv, msg;
  csv << kCsvHeader << '\n';
  std::size_t ok = 0, failed = 0, errors = 0;
  bool budget = false, validation = false;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& m = ms[i];
    const auto& o = outcomes[i];
    const auto mid = m["id"].get<std::string>();
    Json row = {{"id", mid}, {"op", m["op"]}};
    std::string status = "ok";
    if (o.error) {
      status = "error";
      ++errors;
      (o.error->code() == ErrorCode::BudgetExceeded ? budget : validation) = true;
      row["error"] = {{"code", std::string(to_string(o.error->code()))}, {"message", o.error->what()}};
      msg << "measurement " << mid << ": " << o.error->what() << '\n';
    } else {
      row["result"] = o.result;
      if (!o.failure.empty()) {
        status = "failed";
        ++failed;
        row["failure"] = o.failure;
        msg << "measurement " << mid << ": FAILED: " << o.failure << '\n';
      } else {
        ++ok;
      }
    }
    row["status"] = status;
    rows.push_back(row);
    const Json& r = o.error ? Json() : o.result;
    auto field = [&](const char* key) { return r.is_object() && r.contains(key) ? csv_field(r[key]) : std::string(); };
    csv << id << ',' << mid << ',' << m["op"].get<std::string>() << ',' << status << ',' << field("value") << ','
        << field("radius") << ',' << field("mode") << ',' << field("pass") << ',';
    if (record_runtime) csv << static_cast<std::uint64_t>(o.runtime_ms);
    csv << '\n';
  }
  run.report = {{"schema", kReportSchema},
                {"experiment", id},
                {"config", config},
                {"measurements", rows},
                {"summary", {{"total", ms.size()}, {"ok", ok}, {"failed", failed}, {"errors", errors}}}};
  run.csv = csv.str();
  run.messages = msg.str();
  run.exit_code = validation ? kValidation : budget ? kBudget : failed > 0 ? kCheckFailed : kOk;

  if (options.write_files) {
    const std::filesystem::path dir(options.out_dir);
    const auto outputs = manifest.value("outputs", Json::object());
    write_file(dir / outputs.value("report", id + ".json"), run.report.dump(2) + "\n");
    write_file(dir / outputs.value("csv", id + ".csv"), run.csv);
  }
  return run;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Descriptor text, or @file.
Json json_arg(const std::string& text) { return desc::parse(!text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text); }

struct FnFlags {
  std::string fn, json;
  std::optional<unsigned> m, k, r, d, n, width, index;

  void attach(CLI::App* app) {
    app->add_option("--fn", fn, "function family (gip, rw, ffm, parity, and, majority, dictator)");
    app->add_option("--f", json, "function descriptor JSON or @file");
    app->add_option("--m", m);
    app->add_option("--k", k);
    app->add_option("--r", r);
    app->add_option("--d", d);
    app->add_option("--n", n);
    app->add_option("--width", width, "field width for ffm");
    app->add_option("--index", index);
  }

  Json descriptor() const {
    if (!json.empty()) return json_arg(json);
    require(!fn.empty(), ErrorCode::ParseError, "give --fn or --f");
    Json j = {{"family", fn}};
    if (m) j["m"] = *m;
    if (k) j["k"] = *k;
    if (r) j["r"] = *r;
    if (d) j["d"] = *d;
    if (n) j["n"] = *n;
    if (index) j["index"] = *index;
    if (width) j["field"] = {{"width", *width}};
    return j;
  }
};

int print_result(std::ostream& out, const Json& result) {
  out << result.dump(2) << '\n';
  return result.contains("pass") && result["pass"] == false ? kCheckFailed : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"plab: correlation-bound and PRG experiments over GF(2)"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;

  FnFlags eval_fn;
  std::string input;
  auto* eval = app.add_subcommand("eval", "evaluate a Boolean function on one input");
  eval_fn.attach(eval);
  eval->add_option("--input", input, "input bits, x_0 first")->required();

  std::string f_json, g_json, class_json;
  std::uint64_t samples = 0, budget = kDefaultClassBudget;
  auto* corr = app.add_subcommand("corr", "correlation of f with g or with an adversary class");
  corr->add_option("--f", f_json, "function descriptor")->required();
  corr->add_option("--g", g_json, "second function descriptor");
  corr->add_option("--class", class_json, "adversary class descriptor");
  corr->add_option("--samples", samples, "Monte Carlo samples (0 = exact)");
  corr->add_option("--budget", budget, "class evaluation budget");
  corr->add_option("--seed", seed);

  unsigned nk = 2, nb = 1;
  auto* norm = app.add_subcommand("norm", "k-party norm R_k");
  norm->add_option("--f", f_json)->required();
  norm->add_option("--k", nk);
  norm->add_option("--b", nb)->required();
  norm->add_option("--samples", samples);
  norm->add_option("--seed", seed);

  std::string dist_a, dist_b;
  auto* tv = app.add_subcommand("tv", "total variation distance");
  tv->add_option("--dist-a", dist_a, "uniform:n | point:v | point:n:v")->required();
  tv->add_option("--dist-b", dist_b)->required();

  std::string gen_json, format = "bits";
  std::uint64_t count = 16, start = 0;
  bool random_seeds = false;
  auto* gen = app.add_subcommand("prg-gen", "stream generator outputs, one per line");
  gen->add_option("--generator", gen_json, "generator descriptor or recipe")->required();
  gen->add_option("--count", count);
  gen->add_option("--start", start, "first seed (sequential mode)");
  gen->add_flag("--random", random_seeds, "draw seeds at random (needs --seed)");
  gen->add_option("--format", format)->check(CLI::IsMember({"bits", "hex"}));
  gen->add_option("--seed", seed);

  unsigned pn = 14, pd = 2, pt = 4, programs = 1;
  double peps = 0.25;
  bool bp2 = false;
  auto* ptest = app.add_subcommand("prg-test", "fooling error of a generator, or the 2BP lifting check");
  ptest->add_option("--generator", gen_json);
  ptest->add_option("--f", f_json);
  ptest->add_flag("--bp2", bp2, "run the 2BP lifting check on random programs");
  ptest->add_option("--n", pn);
  ptest->add_option("--d", pd);
  ptest->add_option("--t", pt);
  ptest->add_option("--eps", peps);
  ptest->add_option("--programs", programs);
  ptest->add_option("--samples", samples);
  ptest->add_option("--seed", seed);

  unsigned dc = 0, ds = 0, dr = 0, dk = 0;
  auto* design = app.add_subcommand("design", "build a combinatorial design");
  design->add_option("--count", dc)->required();
  design->add_option("--universe", ds)->required();
  design->add_option("--set-size", dr)->required();
  design->add_option("--max-intersection", dk)->required();

  std::string ekind, eseed;
  unsigned en = 8, ek = 5, em = 1, er = 1;
  std::optional<std::uint64_t> cycle;
  double eeps = 0.25;
  auto* extest = app.add_subcommand("extractor-test", "worst-case TV over bit-fixing sources");
  extest->add_option("--kind", ekind)->required()->check(CLI::IsMember({"lhl", "kz", "parity_blocks", "toeplitz"}));
  extest->add_option("--n", en);
  extest->add_option("--k", ek);
  extest->add_option("--m", em);
  extest->add_option("--r", er);
  extest->add_option("--cycle", cycle);
  extest->add_option("--eps", eeps);
  extest->add_option("--toeplitz-seed", eseed, "bit string of length 2n");

  std::string manifest_path, out_dir = ".";
  auto* run = app.add_subcommand("run", "execute a manifest");
  run->add_option("manifest", manifest_path)->required();
  run->add_option("--workers", workers);
  run->add_option("--seed", seed);
  run->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  MeasureContext ctx;
  ctx.seed = seed;
  try {
    if (*eval) {
      const auto f = desc::function_from_json(eval_fn.descriptor());
      const auto x = BitVec::from_string(input);
      require(x.size() == f.arity(), ErrorCode::ArityMismatch,
              "input has " + std::to_string(x.size()) + " bits, function takes " + std::to_string(f.arity()));
      out << (f.eval(x) ? 1 : 0) << '\n';
      return kOk;
    }
    if (*corr) {
      Json m = {{"f", json_arg(f_json)}};
      if (!class_json.empty()) {
        m["op"] = "corr_class_max";
        m["class"] = json_arg(class_json);
        m["budget"] = budget;
      } else {
        require(!g_json.empty(), ErrorCode::ParseError, "give --g or --class");
        m["g"] = json_arg(g_json);
        m["op"] = samples > 0 ? "corr_mc" : "corr_exact";
        if (samples > 0) m["samples"] = samples;
      }
      return print_result(out, run_measurement(m, ctx));
    }
    if (*norm) {
      Json m = {{"op", "kparty_norm"}, {"f", json_arg(f_json)}, {"k", nk}, {"b", nb}, {"samples", samples}};
      return print_result(out, run_measurement(m, ctx));
    }
    if (*tv) {
      const auto a = desc::distribution_from_string(dist_a, 0);
      const auto b = desc::distribution_from_string(dist_b, a.bits);
      const auto a2 = dist_a.rfind("point:", 0) == 0 ? desc::distribution_from_string(dist_a, b.bits) : a;
      out << Json(tv_distance(a2, b)).dump() << '\n';
      return kOk;
    }
    if (*gen) {
      const auto g = desc::generator_from_json(json_arg(gen_json));
      require(!random_seeds || seed.has_value(), ErrorCode::ParameterOutOfRange, "--random needs --seed");
      Rng rng(seed.value_or(0));
      for (std::uint64_t i = 0; i < count; ++i) {
        const BitVec s = random_seeds ? random_bitvec(rng, g.seed_length())
                                      : BitVec(g.seed_length(), g.seed_length() >= 64 ? start + i
                                                                                      : (start + i) & low_mask(g.seed_length()));
        const auto y = g(s);
        out << (format == "hex" ? y.to_hex() : y.to_string()) << '\n';
      }
      return kOk;
    }
    if (*ptest) {
      if (bp2) {
        Json m = {{"op", "bp2_lifting"}, {"n", pn}, {"d", pd}, {"t", pt}, {"eps", peps}, {"programs", programs}};
        return print_result(out, run_measurement(m, ctx));
      }
      require(!gen_json.empty() && !f_json.empty(), ErrorCode::ParseError, "give --generator and --f, or --bp2");
      Json m = {{"op", "fooling_error"}, {"generator", json_arg(gen_json)}, {"f", json_arg(f_json)}};
      if (samples > 0) m["samples"] = samples;
      return print_result(out, run_measurement(m, ctx));
    }
    if (*design) {
      Json m = {{"op", "design"}, {"count", dc}, {"universe", ds}, {"set_size", dr}, {"max_intersection", dk}};
      return print_result(out, run_measurement(m, ctx));
    }
    if (*extest) {
      Json m;
      if (ekind == "lhl") {
        m = {{"op", "lhl_certify"}, {"n", en}, {"k", ek}, {"m", em}, {"eps", eeps}};
      } else {
        m = {{"op", "extractor_tv"}, {"kind", ekind}, {"n", en}, {"k", ek}, {"m", em}};
        if (ekind == "parity_blocks") m["r"] = er;
        if (ekind == "toeplitz") m["seed"] = eseed;
        if (cycle) m["cycle"] = *cycle;
      }
      return print_result(out, run_measurement(m, ctx));
    }
    if (*run) {
      RunOptions opts;
      opts.workers = workers;
      opts.seed = seed;
      opts.out_dir = out_dir;
      const auto res = run_manifest(desc::parse(read_file(manifest_path)), opts);
      const auto& s = res.report["summary"];
      out << res.report["experiment"].get<std::string>() << ": " << s["ok"] << " ok, " << s["failed"]
          << " failed, " << s["errors"] << " errors\n";
      err << res.messages;
      return res.exit_code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  }
  return kOk;
}

}  // namespace plab::cli
