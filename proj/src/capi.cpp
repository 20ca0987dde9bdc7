#include <cstring>
#include <new>
#include <string>

#include "definetti/definetti.h"
#include "errors.hpp"
#include "jobs.hpp"

using namespace definetti;

struct dft_table {
  AnyTable value;
};

struct dft_report {
  Outcome outcome;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
dft_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DFT_OK;
  } catch (const Json::parse_error& e) {
    g_last_error = e.what();
    return DFT_ERR_PARSE;
  } catch (const Json::exception& e) {
    g_last_error = e.what();
    return DFT_ERR_INVALID_ARGUMENT;
  } catch (const InputError& e) {
    g_last_error = e.what();
    return DFT_ERR_INVALID_ARGUMENT;
  } catch (const CapacityError& e) {
    g_last_error = e.what();
    return DFT_ERR_CAPACITY;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DFT_ERR_CAPACITY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DFT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DFT_ERR_INTERNAL;
  }
}

void require_out(const void* out) {
  if (out == nullptr) throw InputError("output pointer is null");
}

const AnyTable& table_ref(const dft_table* t) {
  if (t == nullptr) throw InputError("table handle is null");
  return t->value;
}

std::string text_arg(const char* s, const char* what) {
  if (s == nullptr) throw InputError(std::string(what) + " is null");
  return s;
}

CumulantKind kind_of(dft_kind kind) {
  switch (kind) {
    case DFT_CLASSICAL:
      return CumulantKind::Classical;
    case DFT_FREE:
      return CumulantKind::Free;
    case DFT_BOOLEAN:
      return CumulantKind::Boolean;
  }
  throw InputError("unknown cumulant kind");
}

dft_report* make_report(JobResult r) {
  return new dft_report{r.outcome, r.report.dump(2)};
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* dft_version(void) { return DEFINETTI_VERSION; }

const char* dft_last_error(void) { return g_last_error.c_str(); }

void dft_string_free(char* s) { delete[] s; }

dft_status dft_table_from_json(const char* json, dft_table** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    Json j = Json::parse(text_arg(json, "json"));
    *out = new dft_table{table_from_json(j)};
  });
}

dft_status dft_table_to_json(const dft_table* table, char** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = copy_string(table_to_json(table_ref(table)).dump(2));
  });
}

void dft_table_free(dft_table* table) { delete table; }

dft_status dft_table_info(const dft_table* table, int* is_moment, dft_kind* kind, int* n, int* max_order) {
  return guarded([&] {
    const AnyTable& t = table_ref(table);
    if (is_moment) *is_moment = t.is_moment() ? 1 : 0;
    if (kind && !t.is_moment()) *kind = static_cast<dft_kind>(static_cast<int>(*t.cumulant_kind));
    if (n) *n = t.table.alphabet();
    if (max_order) *max_order = t.table.max_order();
  });
}

dft_status dft_transform(const dft_table* in, dft_kind kind, dft_direction direction, dft_table** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    const AnyTable& t = table_ref(in);
    const CumulantKind k = kind_of(kind);
    if (direction == DFT_MOMENTS_TO_CUMULANTS) {
      *out = new dft_table{AnyTable::from(cumulants_from_moments(t.moments(), k))};
    } else if (direction == DFT_CUMULANTS_TO_MOMENTS) {
      CumulantTable c = t.cumulants();
      if (c.kind != k) throw InputError("table holds " + kind_name(c.kind) + " cumulants, not " + kind_name(k));
      *out = new dft_table{AnyTable::from(moments_from_cumulants(c))};
    } else {
      throw InputError("unknown transform direction");
    }
  });
}

dft_status dft_build_independent(const dft_table* const* marginals, size_t count, dft_table** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    if (marginals == nullptr && count > 0) throw InputError("marginal array is null");
    std::vector<CumulantTable> tables;
    for (size_t i = 0; i < count; ++i) tables.push_back(table_ref(marginals[i]).cumulants());
    *out = new dft_table{AnyTable::from(build_independent_moments(tables))};
  });
}

dft_status dft_partitions(int k, const char* family, dft_report** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = make_report(run_partitions(k, FamilyTag::parse(text_arg(family, "family"))));
  });
}

dft_status dft_independence_test(const dft_table* moments, dft_kind kind, const char* tol, dft_report** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = make_report(run_independence(table_ref(moments).moments(), kind_of(kind), parse_rational(text_arg(tol, "tol"))));
  });
}

dft_status dft_classify(const dft_table* cumulants, const char* tol, dft_report** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = make_report(run_classify(table_ref(cumulants).cumulants(), parse_rational(text_arg(tol, "tol"))));
  });
}

dft_status dft_symmetry_check(const dft_table* moments, const char* config_json, dft_report** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    SymmetryConfig config = symmetry_config_from_json(Json::parse(text_arg(config_json, "config")));
    *out = make_report(run_symmetry(table_ref(moments).moments(), config));
  });
}

dft_status dft_quantum_invariance(const dft_table* moments, const char* schema, int K, int degree_bound,
                                  dft_report** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    MomentFunctional m = table_ref(moments).moments();
    algebra::RelationSchema s{algebra::RelationSchema::parse_name(text_arg(schema, "schema")), m.alphabet()};
    if (degree_bound < 0) throw InputError("degree bound must be nonnegative");
    *out = make_report(run_quantum_invariance(m, s, K, degree_bound));
  });
}

dft_status dft_verify(const char* request_json, dft_report** out) {
  return guarded([&] {
    require_out(out);
    *out = nullptr;
    *out = make_report(run_verify(Json::parse(text_arg(request_json, "request"))));
  });
}

dft_outcome dft_report_outcome(const dft_report* report) {
  if (report == nullptr) return DFT_INCONCLUSIVE;
  return static_cast<dft_outcome>(report->outcome);
}

const char* dft_report_json(const dft_report* report) { return report == nullptr ? "" : report->json.c_str(); }

void dft_report_free(dft_report* report) { delete report; }

}  // extern "C"
