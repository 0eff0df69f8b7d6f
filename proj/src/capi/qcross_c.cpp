#include "qcross/qcross.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "algebra/mpoly_json.hpp"
#include "app/operations.hpp"
#include "error.hpp"
#include "verify/verify.hpp"

struct qcross_poly {
  qcross::MPoly value;
};

namespace {

thread_local std::string last_error;

qcross_status status_of(qcross::ErrorCode code) {
  using qcross::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return QCROSS_E_INVALID_ARGUMENT;
    case ErrorCode::NotDivisible: return QCROSS_E_NOT_DIVISIBLE;
    case ErrorCode::NotInvertible: return QCROSS_E_NOT_INVERTIBLE;
    case ErrorCode::NonConvergence: return QCROSS_E_NON_CONVERGENCE;
    case ErrorCode::Parse: return QCROSS_E_PARSE;
    case ErrorCode::InvalidHistoire: return QCROSS_E_INVALID_HISTOIRE;
    case ErrorCode::InvalidPath: return QCROSS_E_INVALID_PATH;
    case ErrorCode::HeightMismatch: return QCROSS_E_HEIGHT_MISMATCH;
    case ErrorCode::NotInC: return QCROSS_E_NOT_IN_C;
    case ErrorCode::TooLarge: return QCROSS_E_TOO_LARGE;
    case ErrorCode::GuardExceeded: return QCROSS_E_GUARD_EXCEEDED;
    case ErrorCode::ParityMismatch: return QCROSS_E_PARITY_MISMATCH;
  }
  return QCROSS_E_INTERNAL;
}

template <class Fn>
qcross_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return QCROSS_OK;
  } catch (const qcross::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QCROSS_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QCROSS_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw qcross::Error(qcross::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qcross_poly* wrap(qcross::MPoly p) { return new qcross_poly{std::move(p)}; }

}  // namespace

extern "C" {

const char* qcross_version(void) { return QCROSS_VERSION; }

const char* qcross_status_name(qcross_status status) {
  switch (status) {
    case QCROSS_OK: return "Ok";
    case QCROSS_E_INVALID_ARGUMENT: return "InvalidArgument";
    case QCROSS_E_NOT_DIVISIBLE: return "NotDivisible";
    case QCROSS_E_NOT_INVERTIBLE: return "NotInvertible";
    case QCROSS_E_NON_CONVERGENCE: return "NonConvergence";
    case QCROSS_E_PARSE: return "Parse";
    case QCROSS_E_INVALID_HISTOIRE: return "InvalidHistoire";
    case QCROSS_E_INVALID_PATH: return "InvalidPath";
    case QCROSS_E_HEIGHT_MISMATCH: return "HeightMismatch";
    case QCROSS_E_NOT_IN_C: return "NotInC";
    case QCROSS_E_TOO_LARGE: return "TooLarge";
    case QCROSS_E_GUARD_EXCEEDED: return "GuardExceeded";
    case QCROSS_E_PARITY_MISMATCH: return "ParityMismatch";
    case QCROSS_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* qcross_last_error(void) { return last_error.c_str(); }

void qcross_string_free(char* s) { std::free(s); }

qcross_status qcross_poly_parse(const char* text, qcross_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(qcross::MPoly::parse(text));
  });
}

void qcross_poly_free(qcross_poly* p) { delete p; }

qcross_status qcross_poly_to_string(const qcross_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(p->value.to_string());
  });
}

qcross_status qcross_poly_to_json(const qcross_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(qcross::to_json(p->value).dump());
  });
}

int qcross_poly_equal(const qcross_poly* lhs, const qcross_poly* rhs) {
  if (lhs == nullptr || rhs == nullptr) return lhs == rhs;
  return lhs->value == rhs->value ? 1 : 0;
}

qcross_status qcross_poly_add(const qcross_poly* lhs, const qcross_poly* rhs, qcross_poly** out) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(out, "out");
    *out = wrap(lhs->value + rhs->value);
  });
}

qcross_status qcross_poly_mul(const qcross_poly* lhs, const qcross_poly* rhs, qcross_poly** out) {
  return guarded([&] {
    require(lhs, "lhs");
    require(rhs, "rhs");
    require(out, "out");
    *out = wrap(lhs->value * rhs->value);
  });
}

qcross_status qcross_moments(const char* family, int n, const char* method, unsigned jobs, int unsafe_n,
                             qcross_poly** out) {
  return guarded([&] {
    require(family, "family");
    require(method, "method");
    require(out, "out");
    *out = wrap(qcross::compute_moment(qcross::parse_family(family), n, qcross::parse_moment_method(method),
                                       jobs == 0 ? 1 : jobs, unsafe_n != 0));
  });
}

qcross_status qcross_formula(const char* name, int n, int k, int unsafe_n, qcross_poly** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = wrap(qcross::compute_formula(name, n, k, unsafe_n != 0));
  });
}

qcross_status qcross_expand(const char* family, int order, const char* method, int symbolic, int unsafe_n,
                            qcross_poly** out) {
  return guarded([&] {
    require(family, "family");
    require(method, "method");
    require(out, "out");
    *out = wrap(
        qcross::compute_expansion(qcross::parse_family(family), order, method, symbolic != 0, unsafe_n != 0));
  });
}

qcross_status qcross_verify(const char* suite, int max_n, unsigned jobs, int timings, int* passed, char** text,
                            char** json) {
  return guarded([&] {
    require(suite, "suite");
    require(passed, "passed");
    const auto report = qcross::run_verify(suite, max_n, jobs == 0 ? 1 : jobs);
    *passed = report.ok() ? 1 : 0;
    if (text != nullptr) *text = dup(report.to_text(timings != 0));
    if (json != nullptr) *json = dup(report.to_json(timings != 0));
  });
}

qcross_status qcross_decompose(const char* path_text, const char* family, char** json) {
  return guarded([&] {
    require(path_text, "path");
    require(json, "json");
    std::optional<qcross::Family> f;
    if (family != nullptr) f = qcross::parse_family(family);
    *json = dup(qcross::decompose_path(path_text, f).dump(2));
  });
}

qcross_status qcross_histoire(const char* family, const char* object_text, char** json) {
  return guarded([&] {
    require(family, "family");
    require(object_text, "object");
    require(json, "json");
    *json = dup(qcross::histoire_of_text(qcross::parse_family(family), object_text).dump(2));
  });
}

qcross_status qcross_object(const char* family, const char* path_text, char** json) {
  return guarded([&] {
    require(family, "family");
    require(path_text, "path");
    require(json, "json");
    *json = dup(qcross::object_of_text(qcross::parse_family(family), path_text).dump(2));
  });
}

qcross_status qcross_theta(const char* word, char** json) {
  return guarded([&] {
    require(word, "word");
    require(json, "json");
    *json = dup(qcross::theta_of_text(word).dump(2));
  });
}

qcross_status qcross_table(const char* kind, int from, int max_n, const char* format, int unsafe_n, char** out) {
  return guarded([&] {
    require(kind, "kind");
    require(format, "format");
    require(out, "out");
    *out = dup(qcross::emit_table(kind, from, max_n, format, unsafe_n != 0));
  });
}

}  // extern "C"
