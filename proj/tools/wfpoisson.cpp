// wfpoisson: command-line front end over the wfp C API.
//
// Exit status: 0 success, 1 math-level failure (singular point, vector not
// in the image, non-Poisson verdict under --expect-poisson), 2 usage error.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wfp/wfp.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct ExprDeleter {
  void operator()(wfp_expr* e) const { wfp_expr_free(e); }
};
struct BivectorDeleter {
  void operator()(wfp_bivector* b) const { wfp_bivector_free(b); }
};
struct TrajectoryDeleter {
  void operator()(wfp_trajectory* t) const { wfp_trajectory_free(t); }
};
struct StringDeleter {
  void operator()(char* s) const { wfp_string_free(s); }
};

using ExprPtr = std::unique_ptr<wfp_expr, ExprDeleter>;
using BivectorPtr = std::unique_ptr<wfp_bivector, BivectorDeleter>;
using TrajectoryPtr = std::unique_ptr<wfp_trajectory, TrajectoryDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries the exit status out of a failed step.
struct Failure {
  int code;
  std::string message;
};

int exit_code(wfp_status status) {
  switch (status) {
    case WFP_ERR_SINGULAR_POINT:
    case WFP_ERR_NOT_IN_IMAGE:
    case WFP_ERR_NON_FINITE:
    case WFP_ERR_DEGENERATE_CHART:
    case WFP_ERR_INTERNAL:
      return kExitMath;
    default:
      return kExitUsage;
  }
}

void check(wfp_status status, const std::string& context) {
  if (status == WFP_OK) return;
  throw Failure{exit_code(status), context + ": " + wfp_last_error()};
}

std::string take(char* raw) {
  StringPtr owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

struct Options {
  std::optional<std::string> model;
  std::optional<std::string> s;
  std::optional<std::string> c1, c2, k, h;
  std::optional<std::string> point;
  std::optional<std::string> chart;
  double dt = 1e-3;
  int steps = 1000;
  std::string format = "text";
  bool expect_poisson = false;
};

ExprPtr parse_expr(const std::string& text, const std::string& flag,
                   const std::optional<std::string>& s) {
  wfp_expr* raw = nullptr;
  check(wfp_expr_parse(text.c_str(), &raw), flag);
  ExprPtr e(raw);
  if (s) {
    wfp_expr* bound = nullptr;
    check(wfp_expr_bind_s(e.get(), s->c_str(), &bound), "--s");
    e.reset(bound);
  }
  return e;
}

BivectorPtr build_bivector(const Options& o, bool need_casimirs = true) {
  if (o.model && (o.c1 || o.c2)) {
    throw Failure{kExitUsage, "give either --model or --c1/--c2, not both"};
  }
  ExprPtr k;
  if (o.k) k = parse_expr(*o.k, "--k", o.s);
  wfp_bivector* raw = nullptr;
  if (o.model) {
    check(wfp_bivector_from_model(o.model->c_str(), o.s ? o.s->c_str() : nullptr, k.get(), &raw),
          "--model " + *o.model);
    return BivectorPtr(raw);
  }
  if (!o.c1 || !o.c2) {
    if (!need_casimirs) return nullptr;
    throw Failure{kExitUsage, "either --model or both --c1 and --c2 are required"};
  }
  ExprPtr c1 = parse_expr(*o.c1, "--c1", o.s);
  ExprPtr c2 = parse_expr(*o.c2, "--c2", o.s);
  char* warnings = nullptr;
  check(wfp_bivector_from_casimirs(c1.get(), c2.get(), k.get(), &raw, &warnings), "--k");
  const std::string text = take(warnings);
  if (!text.empty()) std::cerr << "warning: " << text;
  return BivectorPtr(raw);
}

wfp_point parse_point(const Options& o) {
  if (!o.point) throw Failure{kExitUsage, "--point is required"};
  std::vector<double> values;
  std::stringstream in(*o.point);
  std::string item;
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0') {
      throw Failure{kExitUsage, "--point: '" + item + "' is not a number"};
    }
    values.push_back(v);
  }
  if (values.size() != 4) throw Failure{kExitUsage, "--point: expected x,y,z,t"};
  wfp_point p{values[0], values[1], values[2], values[3], 0.0};
  if (o.s) p.s = std::strtod(o.s->c_str(), nullptr);
  return p;
}

ordered_json point_json(const wfp_point& p) { return {p.x, p.y, p.z, p.t}; }

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* var_name(wfp_var v) {
  static constexpr std::array<const char*, 4> kNames{"x", "y", "z", "t"};
  return kNames[static_cast<std::size_t>(v)];
}

wfp_var parse_var(const std::string& name) {
  if (name == "x") return WFP_VAR_X;
  if (name == "y") return WFP_VAR_Y;
  if (name == "z") return WFP_VAR_Z;
  if (name == "t") return WFP_VAR_T;
  throw Failure{kExitUsage, "--chart: unknown coordinate '" + name + "'"};
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

int run_bivector(const Options& o) {
  BivectorPtr b = build_bivector(o);
  if (o.format == "json") {
    char* raw = nullptr;
    check(wfp_bivector_to_json(b.get(), &raw), "bivector");
    std::cout << take(raw) << '\n';
    return 0;
  }
  static constexpr std::array<char, 4> kNames{'x', 'y', 'z', 't'};
  if (o.k) std::cout << "k = " << *o.k << '\n';
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      wfp_expr* raw = nullptr;
      check(wfp_bivector_component(b.get(), i, j, &raw), "bivector");
      ExprPtr e(raw);
      char* text = nullptr;
      check(wfp_expr_to_string(e.get(), &text), "bivector");
      std::cout << '{' << kNames[i] << ',' << kNames[j] << "} = " << take(text) << '\n';
    }
  }
  return 0;
}

int run_jacobi(const Options& o) {
  BivectorPtr b = build_bivector(o);
  char* raw = nullptr;
  check(wfp_jacobi_json(b.get(), &raw), "jacobi");
  const std::string payload = take(raw);
  const auto doc = ordered_json::parse(payload);
  const bool poisson = doc["poisson"].get<bool>();
  if (o.format == "json") {
    std::cout << payload << '\n';
  } else {
    std::cout << "Poisson: " << (poisson ? "true" : "false") << '\n';
    if (!poisson) {
      std::cout << "witness: J" << doc["witness"]["triple"].get<std::string>() << " = "
                << doc["witness"]["value"].get<std::string>() << '\n';
    }
  }
  return (!poisson && o.expect_poisson) ? kExitMath : 0;
}

int run_casimir_check(const Options& o) {
  BivectorPtr b = build_bivector(o);
  std::vector<std::pair<std::string, ExprPtr>> functions;
  for (int which : {1, 2}) {
    wfp_expr* raw = nullptr;
    check(wfp_bivector_casimir(b.get(), which, &raw), "casimir-check");
    functions.emplace_back("C" + std::to_string(which), ExprPtr(raw));
  }
  if (o.h) functions.emplace_back("h", parse_expr(*o.h, "--h", o.s));

  ordered_json doc = ordered_json::object();
  for (const auto& [name, e] : functions) {
    int ok = 0;
    check(wfp_casimir_check(b.get(), e.get(), &ok), "casimir-check");
    doc[name] = ok != 0;
  }
  if (o.format == "json") {
    emit(doc);
  } else {
    for (const auto& [name, value] : doc.items()) {
      std::cout << name << ": " << (value.get<bool>() ? "true" : "false") << '\n';
    }
  }
  return 0;
}

int run_rank(const Options& o) {
  BivectorPtr b = build_bivector(o);
  const wfp_point p = parse_point(o);
  int rank = 0;
  check(wfp_rank_at(b.get(), &p, &rank), "rank at --point");
  if (o.format == "json") {
    emit({{"point", point_json(p)}, {"rank", rank}});
  } else {
    std::cout << "rank: " << rank << '\n';
  }
  return 0;
}

int run_locus(const Options& o) {
  BivectorPtr b = build_bivector(o);
  const wfp_point p = parse_point(o);
  int critical = 0;
  check(wfp_critical_at(b.get(), &p, &critical), "locus at --point");
  if (o.format == "json") {
    emit({{"point", point_json(p)}, {"critical", critical != 0}});
  } else {
    std::cout << "critical: " << (critical != 0 ? "true" : "false") << '\n';
  }
  return 0;
}

int run_leaf_form(const Options& o) {
  BivectorPtr b = build_bivector(o);
  const wfp_point p = parse_point(o);

  wfp_var a = WFP_VAR_Y;
  wfp_var c = WFP_VAR_Z;
  bool chosen = false;
  if (o.chart) {
    const auto comma = o.chart->find(',');
    if (comma == std::string::npos) throw Failure{kExitUsage, "--chart: expected a,b"};
    a = parse_var(o.chart->substr(0, comma));
    c = parse_var(o.chart->substr(comma + 1));
    chosen = true;
  } else if (o.model) {
    int has_chart = 0;
    check(wfp_model_leaf_chart(o.model->c_str(), &has_chart, &a, &c), "--model");
    chosen = has_chart != 0;
  }
  if (!chosen) check(wfp_best_chart(b.get(), &p, &a, &c), "leaf-form at --point");

  wfp_leaf_form chart_form{};
  check(wfp_leaf_form_chart(b.get(), &p, a, c, &chart_form), "leaf-form at --point");
  wfp_leaf_form euclid{};
  check(wfp_leaf_form_euclidean(b.get(), &p, &euclid), "leaf-form at --point");

  std::optional<double> closed;
  if (o.model && !o.k) {
    double value = 0.0;
    if (wfp_model_leaf_closed_form(o.model->c_str(), o.s ? o.s->c_str() : nullptr, &p, &value) ==
        WFP_OK) {
      closed = value;
    }
  }

  if (o.format == "json") {
    ordered_json doc;
    doc["point"] = point_json(p);
    doc["chart"] = {var_name(a), var_name(c)};
    doc["coefficient"] = chart_form.coefficient;
    doc["dual"] = chart_form.dual;
    doc["consistent"] = chart_form.consistent != 0;
    doc["euclidean"] = euclid.coefficient;
    doc["euclidean_dual"] = euclid.dual;
    doc["closed_form"] = closed ? ordered_json(*closed) : ordered_json(nullptr);
    emit(doc);
  } else {
    std::cout << "coefficient: " << number(chart_form.coefficient) << " (against d"
              << var_name(a) << "^d" << var_name(c) << ")\n";
    std::cout << "dual: " << number(chart_form.dual) << '\n';
    std::cout << "euclidean: " << number(euclid.coefficient) << '\n';
    if (closed) std::cout << "closed form: " << number(*closed) << '\n';
  }
  return 0;
}

int run_flow(const Options& o) {
  BivectorPtr b = build_bivector(o);
  const wfp_point p = parse_point(o);
  if (!o.h) throw Failure{kExitUsage, "--h is required"};
  ExprPtr h = parse_expr(*o.h, "--h", o.s);
  wfp_trajectory* raw = nullptr;
  check(wfp_flow(b.get(), h.get(), &p, o.dt, o.steps, &raw), "flow");
  TrajectoryPtr tr(raw);

  if (o.format == "csv") {
    char* csv = nullptr;
    check(wfp_trajectory_to_csv(tr.get(), &csv), "flow");
    std::cout << take(csv);
    return 0;
  }
  double drift[3] = {0, 0, 0};
  check(wfp_trajectory_drift(tr.get(), drift), "flow");
  wfp_point last{};
  check(wfp_trajectory_point(tr.get(), wfp_trajectory_length(tr.get()) - 1, &last, nullptr),
        "flow");
  if (o.format == "json") {
    ordered_json doc;
    doc["steps"] = o.steps;
    doc["dt"] = o.dt;
    doc["start"] = point_json(p);
    doc["end"] = point_json(last);
    doc["drift"] = {{"C1", drift[0]}, {"C2", drift[1]}, {"H", drift[2]}};
    emit(doc);
  } else {
    std::cout << "end: " << number(last.x) << ',' << number(last.y) << ',' << number(last.z)
              << ',' << number(last.t) << '\n';
    std::cout << "drift C1: " << number(drift[0]) << '\n';
    std::cout << "drift C2: " << number(drift[1]) << '\n';
    std::cout << "drift H: " << number(drift[2]) << '\n';
  }
  return 0;
}

int run_list_models(const Options& o) {
  char* raw = nullptr;
  check(wfp_catalogue_json(&raw), "list-models");
  const std::string payload = take(raw);
  if (o.format == "json") {
    std::cout << payload << '\n';
    return 0;
  }
  for (const auto& m : ordered_json::parse(payload)["models"]) {
    std::cout << m["name"].get<std::string>() << ": (" << m["casimirs"]["c1"].get<std::string>()
              << ", " << m["casimirs"]["c2"].get<std::string>() << ")\n";
  }
  return 0;
}

void add_source_options(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "lefschetz, fold, cusp, birth, merge, flip or wrinkle");
  sub->add_option("--s", o.s, "move parameter (integer, rational a/b or decimal)");
  sub->add_option("--c1", o.c1, "first Casimir");
  sub->add_option("--c2", o.c2, "second Casimir");
  sub->add_option("--k", o.k, "conformal factor (polynomial)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson bivectors from Casimir pairs on R^4"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "print toolkit and schema versions");

  Options o;
  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    bool point, h, flow, chart, expect, formats_csv, source;
  };
  const std::array<Entry, 8> entries{{
      {"bivector", "print the bivector built from the Casimir pair", run_bivector, false, false,
       false, false, false, false, true},
      {"jacobi", "check the Jacobi identity exactly", run_jacobi, false, false, false, false,
       true, false, true},
      {"casimir-check", "check that C1, C2 (and --h) are Casimirs", run_casimir_check, false,
       true, false, false, false, false, true},
      {"rank", "numeric rank at a point", run_rank, true, false, false, false, false, false,
       true},
      {"leaf-form", "leaf symplectic form coefficient at a point", run_leaf_form, true, false,
       false, true, false, false, true},
      {"flow", "RK4 Hamiltonian flow", run_flow, true, true, true, false, false, true, true},
      {"locus", "whether a point lies on the critical locus", run_locus, true, false, false,
       false, false, false, true},
      {"list-models", "model catalogue", run_list_models, false, false, false, false, false,
       false, false},
  }};

  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->set_help_flag("--help", "print this help message and exit");
    if (e.source) add_source_options(sub, o);
    if (e.point) sub->add_option("--point", o.point, "x,y,z,t");
    if (e.h) sub->add_option("--h", o.h, "Hamiltonian (polynomial)");
    if (e.flow) {
      sub->add_option("--dt", o.dt, "step size")->capture_default_str();
      sub->add_option("--steps", o.steps, "number of RK4 steps")->capture_default_str();
    }
    if (e.chart) sub->add_option("--chart", o.chart, "coordinate pair a,b for the area form");
    if (e.expect) sub->add_flag("--expect-poisson", o.expect_poisson, "exit 1 if not Poisson");
    std::vector<std::string> formats{"text", "json"};
    if (e.formats_csv) formats.emplace_back("csv");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    subs.emplace_back(sub, &e);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (show_version) {
    std::cout << "wfpoisson " << wfp_version() << " (schema " << wfp_schema_version() << ")\n";
    return 0;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    try {
      return entry->run(o);
    } catch (const Failure& f) {
      std::cerr << "error: " << f.message << '\n';
      return f.code;
    }
  }
  std::cerr << app.help();
  return kExitUsage;
}
