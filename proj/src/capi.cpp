#include "surf4/surf4.h"

#include <new>
#include <string>
#include <vector>

#include "surf4/bounds.hpp"
#include "surf4/errors.hpp"
#include "surf4/fn_systems.hpp"
#include "surf4/invariants.hpp"
#include "surf4/json_io.hpp"
#include "surf4/oracle.hpp"
#include "surf4/picard.hpp"
#include "surf4/ruled.hpp"
#include "surf4/verify.hpp"

struct surf4_surface {
  surf4::SurfaceModel model;
};

struct surf4_divisor {
  surf4::SurfaceModel model;  // the lattice the class lives on
  surf4::DivisorClass cls;
};

struct surf4_result {
  std::string json;
};

namespace {

// Runs fn inside an exception barrier and maps C++ errors to codes.
template <typename Fn>
surf4_status guarded(Fn&& fn) {
  try {
    fn();
    return SURF4_OK;
  } catch (const surf4::DimensionError&) {
    return SURF4_ERR_DIMENSION;
  } catch (const surf4::ParityError&) {
    return SURF4_ERR_PARITY;
  } catch (const std::overflow_error&) {
    return SURF4_ERR_OVERFLOW;
  } catch (const std::domain_error&) {
    return SURF4_ERR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return SURF4_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return SURF4_ERR_INTERNAL;
  } catch (...) {
    return SURF4_ERR_INTERNAL;
  }
}

surf4_status make_result(const surf4::ojson& j, surf4_result** out) {
  *out = new surf4_result{j.dump()};
  return SURF4_OK;
}

}  // namespace

extern "C" {

const char* surf4_status_str(surf4_status s) {
  switch (s) {
    case SURF4_OK: return "ok";
    case SURF4_ERR_ARGUMENT: return "invalid argument";
    case SURF4_ERR_DOMAIN: return "domain error";
    case SURF4_ERR_DIMENSION: return "lattice dimension mismatch";
    case SURF4_ERR_PARITY: return "parity error (half-integer genus)";
    case SURF4_ERR_OVERFLOW: return "integer overflow";
    case SURF4_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* surf4_version(void) { return "1.0.0"; }

surf4_status surf4_surface_new(int64_t n, int64_t r, surf4_surface** out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new surf4_surface{surf4::SurfaceModel(n, r)}; });
}

void surf4_surface_free(surf4_surface* s) { delete s; }

surf4_status surf4_divisor_new(const surf4_surface* s, int64_t a, int64_t b,
                               const int64_t* m, size_t m_len,
                               surf4_divisor** out) {
  if (!s || !out || (m_len > 0 && !m)) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    if (static_cast<int64_t>(m_len) != s->model.r)
      throw surf4::DimensionError("m_len must equal r of the surface");
    std::vector<int64_t> coeffs(m, m + m_len);
    *out = new surf4_divisor{s->model,
                             surf4::DivisorClass(a, b, std::move(coeffs))};
  });
}

surf4_status surf4_divisor_hyperplane(const surf4_surface* s, int64_t a,
                                      int64_t b, surf4_divisor** out) {
  if (!s || !out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    *out = new surf4_divisor{
        s->model, surf4::DivisorClass::hyperplane(a, b, s->model.r)};
  });
}

surf4_status surf4_divisor_canonical(const surf4_surface* s,
                                     surf4_divisor** out) {
  if (!s || !out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded(
      [&] { *out = new surf4_divisor{s->model, canonical_class(s->model)}; });
}

void surf4_divisor_free(surf4_divisor* d) { delete d; }

surf4_status surf4_intersect(const surf4_divisor* d1, const surf4_divisor* d2,
                             int64_t* out) {
  if (!d1 || !d2 || !out) return SURF4_ERR_ARGUMENT;
  return guarded([&] {
    if (d1->model != d2->model)
      throw surf4::DimensionError("divisor classes live on different surfaces");
    *out = surf4::intersect(d1->cls, d2->cls, d1->model);
  });
}

surf4_status surf4_adjunction_genus(const surf4_divisor* d, int64_t* out) {
  if (!d || !out) return SURF4_ERR_ARGUMENT;
  return guarded([&] { *out = surf4::adjunction_genus(d->cls, d->model); });
}

surf4_status surf4_degree(int64_t a, int64_t b, int64_t n, int64_t r,
                          int64_t* out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  return guarded([&] { *out = surf4::degree(a, b, n, r); });
}

surf4_status surf4_sectional_genus(int64_t a, int64_t b, int64_t n,
                                   int64_t* out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  return guarded([&] { *out = surf4::sectional_genus(a, b, n); });
}

surf4_status surf4_double_point_residual(int64_t a, int64_t b, int64_t n,
                                         int64_t r, int64_t* out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  return guarded([&] { *out = surf4::double_point_residual(a, b, n, r); });
}

surf4_status surf4_invariants(int64_t a, int64_t b, int64_t n, int64_t r,
                              surf4_result** out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    make_result(surf4::to_json(surf4::compute_invariants(a, b, n, r)), out);
  });
}

surf4_status surf4_castelnuovo_p3(int64_t d, int64_t pi, int* holds) {
  if (!holds) return SURF4_ERR_ARGUMENT;
  return guarded([&] { *holds = surf4::castelnuovo_p3(d, pi).holds ? 1 : 0; });
}

surf4_status surf4_max_genus_g(int64_t d, int64_t* out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  return guarded([&] { *out = surf4::max_genus_g(d); });
}

surf4_status surf4_strict_eighth_bound(int64_t d, int64_t pi, int* holds) {
  if (!holds) return SURF4_ERR_ARGUMENT;
  return guarded(
      [&] { *holds = surf4::strict_eighth_bound(d, pi).holds ? 1 : 0; });
}

surf4_status surf4_acm_exclusion(int64_t d, int64_t pi, int* excluded) {
  if (!excluded) return SURF4_ERR_ARGUMENT;
  return guarded(
      [&] { *excluded = surf4::acm_exclusion(d, pi).holds ? 1 : 0; });
}

surf4_status surf4_classify_ruled(int64_t a, surf4_result** out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    make_result(surf4::ruled_table_json(a, surf4::classify_ruled(a)), out);
  });
}

surf4_status surf4_classify_fn_systems(int64_t n_lo, int64_t n_hi, int strict,
                                       surf4_result** out) {
  if (!out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    make_result(
        surf4::to_json(surf4::classify_fn_systems(n_lo, n_hi, strict != 0)),
        out);
  });
}

namespace {

surf4::SearchBox box_from(const int64_t box[9]) {
  return {box[0], box[1], box[2], box[3], box[4], box[5], box[6], box[7],
          box[8]};
}

}  // namespace

surf4_status surf4_oracle_enumerate(const int64_t box[9], surf4_result** out) {
  if (!box || !out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    surf4::SearchBox b = box_from(box);
    make_result(surf4::oracle_json(b, surf4::oracle_enumerate(b)), out);
  });
}

surf4_status surf4_cross_validate(const int64_t box[9], int* pass,
                                  surf4_result** out) {
  if (!box || !pass || !out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    surf4::SearchBox b = box_from(box);
    surf4::CrossValidation cv = surf4::cross_validate(b);
    *pass = cv.pass ? 1 : 0;
    make_result(surf4::to_json(b, cv), out);
  });
}

surf4_status surf4_verify_paper(int* all_pass, surf4_result** out) {
  if (!all_pass || !out) return SURF4_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    surf4::VerificationReport report = surf4::build_verification_report();
    *all_pass = report.all_pass() ? 1 : 0;
    make_result(surf4::to_json(report), out);
  });
}

const char* surf4_result_json(const surf4_result* r) {
  return r ? r->json.c_str() : nullptr;
}

void surf4_result_free(surf4_result* r) { delete r; }

}  // extern "C"
