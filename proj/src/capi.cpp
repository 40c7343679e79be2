#include "wfp/wfp.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "wfp/leaves.hpp"
#include "wfp/models.hpp"
#include "wfp/serialize.hpp"

struct wfp_expr {
  wfp::Expr value;
};

struct wfp_bivector {
  wfp::Bivector value;
};

struct wfp_trajectory {
  wfp::Trajectory value;
};

namespace {

thread_local std::string last_error;

wfp_status fail(wfp_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
wfp_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return WFP_OK;
  } catch (const wfp::ParseError& e) {
    return fail(WFP_ERR_SYNTAX, e.what());
  } catch (const wfp::OverflowError& e) {
    return fail(WFP_ERR_OVERFLOW, e.what());
  } catch (const wfp::UnknownModel& e) {
    return fail(WFP_ERR_UNKNOWN_MODEL, e.what());
  } catch (const wfp::MissingParameter& e) {
    return fail(WFP_ERR_MISSING_PARAMETER, e.what());
  } catch (const wfp::SingularPoint& e) {
    return fail(WFP_ERR_SINGULAR_POINT, e.what());
  } catch (const wfp::NotInImage& e) {
    return fail(WFP_ERR_NOT_IN_IMAGE, e.what());
  } catch (const wfp::NonFinite& e) {
    return fail(WFP_ERR_NON_FINITE, e.what());
  } catch (const wfp::DegenerateChart& e) {
    return fail(WFP_ERR_DEGENERATE_CHART, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(WFP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(WFP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WFP_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wfp::Point4 point(const wfp_point* p) {
  require(p != nullptr, "point must not be NULL");
  wfp::Point4 out;
  out.coords = {p->x, p->y, p->z, p->t};
  out.s = p->s;
  return out;
}

std::optional<wfp::Rational> parameter(const char* s) {
  if (s == nullptr) return std::nullopt;
  return wfp::parse_rational(s);
}

wfp::Var var(wfp_var v) {
  require(v >= WFP_VAR_X && v <= WFP_VAR_T, "variable out of range");
  return static_cast<wfp::Var>(v);
}

wfp_var c_var(wfp::Var v) { return static_cast<wfp_var>(wfp::index(v)); }

void copy4(const wfp::Tuple4<wfp::Contravariant, double>& in, double out[4]) {
  for (std::size_t i = 0; i < 4; ++i) out[i] = in[i];
}

void copy4(const wfp::Tuple4<wfp::Covariant, double>& in, double out[4]) {
  for (std::size_t i = 0; i < 4; ++i) out[i] = in[i];
}

void export_form(const wfp::LeafForm& form, wfp_leaf_form* out) {
  out->coefficient = form.coefficient;
  out->dual = form.dual;
  out->consistent = form.consistent ? 1 : 0;
  copy4(form.u, out->u);
  copy4(form.v, out->v);
  copy4(form.alpha, out->alpha);
  copy4(form.beta, out->beta);
}

}  // namespace

extern "C" {

const char* wfp_version(void) { return wfp::kToolkitVersion.data(); }
const char* wfp_schema_version(void) { return wfp::kSchemaVersion.data(); }

const char* wfp_status_name(wfp_status status) {
  switch (status) {
    case WFP_OK: return "ok";
    case WFP_ERR_SYNTAX: return "syntax error";
    case WFP_ERR_OVERFLOW: return "overflow";
    case WFP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WFP_ERR_UNKNOWN_MODEL: return "unknown model";
    case WFP_ERR_MISSING_PARAMETER: return "missing parameter";
    case WFP_ERR_SINGULAR_POINT: return "singular point";
    case WFP_ERR_NOT_IN_IMAGE: return "not in image";
    case WFP_ERR_NON_FINITE: return "non-finite";
    case WFP_ERR_DEGENERATE_CHART: return "degenerate chart";
    case WFP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wfp_last_error(void) { return last_error.c_str(); }

void wfp_string_free(char* s) { std::free(s); }

wfp_status wfp_expr_parse(const char* text, wfp_expr** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "text and out must not be NULL");
    *out = new wfp_expr{wfp::parse(text)};
  });
}

void wfp_expr_free(wfp_expr* e) { delete e; }

wfp_status wfp_expr_to_string(const wfp_expr* e, char** out) {
  return guard([&] {
    require(e != nullptr && out != nullptr, "expression and out must not be NULL");
    *out = dup(e->value.to_string());
  });
}

wfp_status wfp_expr_differentiate(const wfp_expr* e, wfp_var v, wfp_expr** out) {
  return guard([&] {
    require(e != nullptr && out != nullptr, "expression and out must not be NULL");
    *out = new wfp_expr{wfp::differentiate(e->value, var(v))};
  });
}

wfp_status wfp_expr_evaluate(const wfp_expr* e, const wfp_point* p, double* out) {
  return guard([&] {
    require(e != nullptr && out != nullptr, "expression and out must not be NULL");
    *out = wfp::evaluate(e->value, point(p));
  });
}

wfp_status wfp_expr_equals(const wfp_expr* a, const wfp_expr* b, int* out) {
  return guard([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wfp::equals(a->value, b->value) ? 1 : 0;
  });
}

wfp_status wfp_expr_bind_s(const wfp_expr* e, const char* s, wfp_expr** out) {
  return guard([&] {
    require(e != nullptr && s != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wfp_expr{e->value.substitute_parameter(wfp::parse_rational(s))};
  });
}

wfp_status wfp_bivector_from_casimirs(const wfp_expr* c1, const wfp_expr* c2, const wfp_expr* k,
                                      wfp_bivector** out, char** warnings) {
  return guard([&] {
    require(c1 != nullptr && c2 != nullptr && out != nullptr, "c1, c2 and out must not be NULL");
    wfp::Diagnostics diagnostics;
    std::optional<wfp::Expr> factor;
    if (k != nullptr) factor = k->value;
    auto b = wfp::flaschka_ratiu(wfp::CasimirPair{c1->value, c2->value}, factor, &diagnostics);
    if (warnings != nullptr) {
      std::string joined;
      for (const auto& w : diagnostics.warnings) joined += w + "\n";
      *warnings = joined.empty() ? nullptr : dup(joined);
    }
    *out = new wfp_bivector{std::move(b)};
  });
}

wfp_status wfp_bivector_from_model(const char* model, const char* s, const wfp_expr* k,
                                   wfp_bivector** out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "model and out must not be NULL");
    const auto spec = wfp::model(std::string_view(model), parameter(s));
    std::optional<wfp::Expr> factor;
    if (k != nullptr) factor = k->value;
    *out = new wfp_bivector{wfp::flaschka_ratiu(spec.casimirs, factor)};
  });
}

wfp_status wfp_bivector_expected(const char* model, const char* s, wfp_bivector** out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "model and out must not be NULL");
    *out = new wfp_bivector{
        wfp::expected_bivector(wfp::model_from_name(model), parameter(s))};
  });
}

wfp_status wfp_bivector_from_json(const char* json, wfp_bivector** out) {
  return guard([&] {
    require(json != nullptr && out != nullptr, "json and out must not be NULL");
    *out = new wfp_bivector{wfp::bivector_from_json(json)};
  });
}

void wfp_bivector_free(wfp_bivector* b) { delete b; }

wfp_status wfp_bivector_to_json(const wfp_bivector* b, char** out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    *out = dup(wfp::bivector_to_json(b->value));
  });
}

wfp_status wfp_bivector_component(const wfp_bivector* b, int i, int j, wfp_expr** out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    require(i >= 0 && i < 4 && j >= 0 && j < 4, "component index out of range");
    *out = new wfp_expr{b->value(static_cast<std::size_t>(i), static_cast<std::size_t>(j))};
  });
}

wfp_status wfp_bivector_casimir(const wfp_bivector* b, int which, wfp_expr** out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    require(which == 1 || which == 2, "which must be 1 or 2");
    require(b->value.casimirs().has_value(), "bivector was not built from a Casimir pair");
    const auto& cas = *b->value.casimirs();
    *out = new wfp_expr{which == 1 ? cas.c1 : cas.c2};
  });
}

wfp_status wfp_bivector_equals(const wfp_bivector* a, const wfp_bivector* b, int* out) {
  return guard([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "arguments must not be NULL");
    *out = a->value == b->value ? 1 : 0;
  });
}

wfp_status wfp_jacobi_json(const wfp_bivector* b, char** out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    *out = dup(wfp::jacobi_to_json(b->value));
  });
}

wfp_status wfp_is_poisson(const wfp_bivector* b, int* out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    *out = wfp::is_poisson(b->value).poisson ? 1 : 0;
  });
}

wfp_status wfp_casimir_check(const wfp_bivector* b, const wfp_expr* c, int* out) {
  return guard([&] {
    require(b != nullptr && c != nullptr && out != nullptr, "arguments must not be NULL");
    *out = wfp::casimir_check(b->value, c->value) ? 1 : 0;
  });
}

wfp_status wfp_rank_at(const wfp_bivector* b, const wfp_point* p, int* out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    *out = wfp::rank_at(b->value, point(p));
  });
}

wfp_status wfp_hamiltonian_field(const wfp_bivector* b, const wfp_expr* h, wfp_expr* out[4]) {
  return guard([&] {
    require(b != nullptr && h != nullptr && out != nullptr, "arguments must not be NULL");
    const auto field = wfp::hamiltonian_field(b->value, h->value);
    for (std::size_t i = 0; i < 4; ++i) out[i] = new wfp_expr{field[i]};
  });
}

wfp_status wfp_linear_part_json(const wfp_bivector* b, char** out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    *out = dup(wfp::linear_part_to_json(wfp::linear_part(b->value)));
  });
}

wfp_status wfp_critical_at(const wfp_bivector* b, const wfp_point* p, int* out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    *out = wfp::CriticalLocus(b->value.with_conformal(std::nullopt))(point(p)) ? 1 : 0;
  });
}

wfp_status wfp_solve_anchor(const wfp_bivector* b, const wfp_point* p, const double u[4],
                            double alpha[4]) {
  return guard([&] {
    require(b != nullptr && u != nullptr && alpha != nullptr, "arguments must not be NULL");
    wfp::NumVector4 vec;
    for (std::size_t i = 0; i < 4; ++i) vec[i] = u[i];
    copy4(wfp::solve_anchor(b->value, point(p), vec), alpha);
  });
}

wfp_status wfp_leaf_form_euclidean(const wfp_bivector* b, const wfp_point* p,
                                   wfp_leaf_form* out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    export_form(wfp::leaf_form_coefficient(b->value, point(p)), out);
  });
}

wfp_status wfp_leaf_form_chart(const wfp_bivector* b, const wfp_point* p, wfp_var a, wfp_var c,
                               wfp_leaf_form* out) {
  return guard([&] {
    require(b != nullptr && out != nullptr, "bivector and out must not be NULL");
    export_form(wfp::leaf_form_coefficient(b->value, point(p), {var(a), var(c)}), out);
  });
}

wfp_status wfp_best_chart(const wfp_bivector* b, const wfp_point* p, wfp_var* a, wfp_var* c) {
  return guard([&] {
    require(b != nullptr && a != nullptr && c != nullptr, "arguments must not be NULL");
    const auto chart = wfp::best_chart(b->value, point(p));
    *a = c_var(chart.first);
    *c = c_var(chart.second);
  });
}

wfp_status wfp_flow(const wfp_bivector* b, const wfp_expr* h, const wfp_point* p0, double dt,
                    int steps, wfp_trajectory** out) {
  return guard([&] {
    require(b != nullptr && h != nullptr && out != nullptr, "arguments must not be NULL");
    *out = new wfp_trajectory{wfp::flow(b->value, h->value, point(p0), dt, steps)};
  });
}

void wfp_trajectory_free(wfp_trajectory* tr) { delete tr; }

size_t wfp_trajectory_length(const wfp_trajectory* tr) {
  return tr == nullptr ? 0 : tr->value.points.size();
}

wfp_status wfp_trajectory_point(const wfp_trajectory* tr, size_t n, wfp_point* p,
                                double conserved[3]) {
  return guard([&] {
    require(tr != nullptr && p != nullptr, "arguments must not be NULL");
    require(n < tr->value.points.size(), "trajectory index out of range");
    const auto& q = tr->value.points[n];
    *p = wfp_point{q.coords[0], q.coords[1], q.coords[2], q.coords[3], q.s};
    if (conserved != nullptr) {
      for (std::size_t i = 0; i < 3; ++i) conserved[i] = tr->value.conserved[n][i];
    }
  });
}

wfp_status wfp_trajectory_drift(const wfp_trajectory* tr, double drift[3]) {
  return guard([&] {
    require(tr != nullptr && drift != nullptr, "arguments must not be NULL");
    for (std::size_t i = 0; i < 3; ++i) drift[i] = tr->value.drift[i];
  });
}

wfp_status wfp_trajectory_to_csv(const wfp_trajectory* tr, char** out) {
  return guard([&] {
    require(tr != nullptr && out != nullptr, "arguments must not be NULL");
    *out = dup(wfp::to_csv(tr->value));
  });
}

wfp_status wfp_catalogue_json(char** out) {
  return guard([&] {
    require(out != nullptr, "out must not be NULL");
    *out = dup(wfp::catalogue_to_json());
  });
}

wfp_status wfp_model_leaf_chart(const char* model, int* has_chart, wfp_var* a, wfp_var* c) {
  return guard([&] {
    require(model != nullptr && has_chart != nullptr && a != nullptr && c != nullptr,
            "arguments must not be NULL");
    const auto spec = wfp::model_symbolic(wfp::model_from_name(model));
    *has_chart = spec.leaf_chart ? 1 : 0;
    if (spec.leaf_chart) {
      *a = c_var(spec.leaf_chart->first);
      *c = c_var(spec.leaf_chart->second);
    }
  });
}

wfp_status wfp_model_leaf_closed_form(const char* model, const char* s, const wfp_point* p,
                                      double* out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "model and out must not be NULL");
    const auto spec = wfp::model(std::string_view(model), parameter(s));
    require(spec.expected_leaf_coefficient.has_value(),
            "model has no closed-form leaf coefficient");
    *out = spec.expected_leaf_coefficient->evaluate(point(p));
  });
}

}  // extern "C"
