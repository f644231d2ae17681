#include "wakimoto/wakimoto.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "reports.hpp"
#include "wakimoto/errors.hpp"

struct wkm_chi {
  wakimoto::ChiSeries series;
};

namespace {

thread_local std::string last_error;

wkm_status fail(wkm_status code, const std::string& message) {
  last_error = message;
  return code;
}

// Runs body, mapping exceptions onto status codes.
template <class F>
wkm_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return WKM_OK;
  } catch (const wakimoto::ParseError& e) {
    return fail(WKM_ERR_PARSE, e.what());
  } catch (const wakimoto::DomainError& e) {
    return fail(WKM_ERR_DOMAIN, e.what());
  } catch (const wakimoto::InternalError& e) {
    return fail(WKM_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(WKM_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wakimoto::Rational parse_nonnegative(const char* text, const char* what, const char* fallback) {
  const wakimoto::Rational r = wakimoto::Rational::parse(text ? text : fallback);
  if (r.sign() < 0) throw wakimoto::DomainError(std::string(what) + " must be >= 0");
  return r;
}

wakimoto::ClosureConfig to_cfg(const wkm_config* c) {
  wkm_config defaults;
  wkm_config_default(&defaults);
  if (!c) c = &defaults;
  wakimoto::ClosureConfig cfg;
  cfg.weight_cutoff = parse_nonnegative(c->weight_cutoff, "weight cutoff", defaults.weight_cutoff);
  cfg.excursion = parse_nonnegative(c->excursion, "excursion", defaults.excursion);
  if (c->charge_lo > c->charge_hi) throw wakimoto::DomainError("charge window is empty");
  cfg.charge_window = std::make_pair(c->charge_lo, c->charge_hi);
  return cfg;
}

}  // namespace

extern "C" {

void wkm_config_default(wkm_config* cfg) {
  if (!cfg) return;
  cfg->weight_cutoff = "4";
  cfg->charge_lo = -3;
  cfg->charge_hi = 3;
  cfg->excursion = "2";
  cfg->seed = 0;
}

wkm_status wkm_chi_parse(const char* json, wkm_chi** out) {
  if (!json || !out) return fail(WKM_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new wkm_chi{wakimoto::parse_chi(json)}; });
}

void wkm_chi_free(wkm_chi* chi) { delete chi; }

wkm_status wkm_chi_to_json(const wkm_chi* chi, char** out) {
  if (!chi || !out) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_out(wakimoto::chi_to_json(chi->series)); });
}

wkm_status wkm_chi_pole_order(const wkm_chi* chi, int64_t* out) {
  if (!chi || !out) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = wakimoto::pole_order(chi->series); });
}

wkm_status wkm_chi_ell(const wkm_chi* chi, int* has_ell, int64_t* out) {
  if (!chi || !has_ell || !out) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto ell = wakimoto::ell_of(chi->series);
    *has_ell = ell ? 1 : 0;
    *out = ell.value_or(0);
  });
}

wkm_status wkm_classify(const wkm_chi* chi, char** out_json) {
  if (!chi || !out_json) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto verdict = wakimoto::classify(chi->series);
    *out_json = copy_out(wakimoto::reports::dump(wakimoto::reports::classify_json(chi->series, verdict)));
  });
}

wkm_status wkm_verify(const wkm_chi* chi, const wkm_config* cfg, char** out_json, int* all_passed) {
  if (!chi || !out_json) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto verdict = wakimoto::classify(chi->series);
    const auto report = wakimoto::verify_certificate(chi->series, verdict, to_cfg(cfg));
    if (all_passed) *all_passed = report.all_passed() ? 1 : 0;
    *out_json = copy_out(wakimoto::reports::dump(wakimoto::reports::verify_json(chi->series, verdict, report)));
  });
}

wkm_status wkm_schur(int r, const char* const* xs, size_t n_xs, char** out_json) {
  if (!out_json || (n_xs > 0 && !xs)) return fail(WKM_ERR_ARGUMENT, "null argument");
  if (r < 0) return fail(WKM_ERR_DOMAIN, "Schur index must be >= 0");
  return guarded([&] {
    std::vector<wakimoto::Rational> values;
    for (size_t i = 0; i < n_xs; ++i) {
      if (!xs[i]) throw wakimoto::ParseError("xs[" + std::to_string(i) + "]: null entry");
      try {
        values.push_back(wakimoto::Rational::parse(xs[i]));
      } catch (const wakimoto::ParseError& e) {
        throw wakimoto::ParseError("xs[" + std::to_string(i) + "]: " + e.what());
      }
    }
    *out_json = copy_out(wakimoto::reports::dump(wakimoto::reports::schur_json(r, values)));
  });
}

wkm_status wkm_enumerate(const char* max_weight, int ambient, char** out_json) {
  if (!max_weight || !out_json) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto w = parse_nonnegative(max_weight, "max weight", "0");
    *out_json = copy_out(wakimoto::reports::dump(wakimoto::reports::enumerate_json(w, ambient != 0)));
  });
}

wkm_status wkm_probe_wakimoto(const wkm_chi* chi, const wkm_config* cfg, char** out_json) {
  if (!chi || !out_json) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto evidence = wakimoto::wakimoto_probe(chi->series, to_cfg(cfg));
    *out_json = copy_out(wakimoto::reports::dump(wakimoto::reports::probe_json(chi->series, evidence)));
  });
}

wkm_status wkm_relations(const wkm_chi* chi, const wkm_config* cfg, char** out_json, int* all_passed) {
  if (!chi || !out_json) return fail(WKM_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const std::uint64_t seed = cfg ? cfg->seed : 0;
    const auto doc = wakimoto::reports::relations_json(chi->series, to_cfg(cfg), seed);
    if (all_passed) *all_passed = doc["passed"].get<bool>() ? 1 : 0;
    *out_json = copy_out(wakimoto::reports::dump(doc));
  });
}

void wkm_string_free(char* s) { std::free(s); }

const char* wkm_last_error(void) { return last_error.c_str(); }

const char* wkm_version(void) { return "0.1.0"; }

}  // extern "C"
