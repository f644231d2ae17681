/* C interface to the wakimoto engine.
 *
 * Every call returns a wkm_status. On failure the message is available from
 * wkm_last_error() on the same thread until the next call. Strings returned
 * through char** are owned by the caller and released with wkm_string_free.
 * Rationals cross this boundary as "p/q" strings.
 */
#ifndef WAKIMOTO_WAKIMOTO_H
#define WAKIMOTO_WAKIMOTO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WKM_BUILDING_LIBRARY)
#    define WKM_API __declspec(dllexport)
#  else
#    define WKM_API __declspec(dllimport)
#  endif
#else
#  define WKM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wkm_status {
  WKM_OK = 0,
  WKM_ERR_PARSE = 1,    /* malformed chi JSON or rational */
  WKM_ERR_DOMAIN = 2,   /* argument outside the operation's domain */
  WKM_ERR_INTERNAL = 3, /* an internal consistency check failed */
  WKM_ERR_ARGUMENT = 4  /* null pointer or invalid option */
} wkm_status;

typedef struct wkm_chi wkm_chi;

typedef struct wkm_config {
  const char* weight_cutoff; /* rational string, default "4" */
  int charge_lo;             /* Weyl charge window, default -3 */
  int charge_hi;             /* default 3 */
  const char* excursion;     /* rational string, default "2" */
  uint64_t seed;             /* default 0 */
} wkm_config;

WKM_API void wkm_config_default(wkm_config* cfg);

WKM_API wkm_status wkm_chi_parse(const char* json, wkm_chi** out);
WKM_API void wkm_chi_free(wkm_chi* chi);
WKM_API wkm_status wkm_chi_to_json(const wkm_chi* chi, char** out);
WKM_API wkm_status wkm_chi_pole_order(const wkm_chi* chi, int64_t* out);
/* *has_ell is set to 0 when chi has no integer-residue shape. */
WKM_API wkm_status wkm_chi_ell(const wkm_chi* chi, int* has_ell, int64_t* out);

WKM_API wkm_status wkm_classify(const wkm_chi* chi, char** out_json);
/* *all_passed (optional) receives 1 when every replayed check passed. */
WKM_API wkm_status wkm_verify(const wkm_chi* chi, const wkm_config* cfg, char** out_json, int* all_passed);
WKM_API wkm_status wkm_schur(int r, const char* const* xs, size_t n_xs, char** out_json);
WKM_API wkm_status wkm_enumerate(const char* max_weight, int ambient, char** out_json);
WKM_API wkm_status wkm_probe_wakimoto(const wkm_chi* chi, const wkm_config* cfg, char** out_json);
WKM_API wkm_status wkm_relations(const wkm_chi* chi, const wkm_config* cfg, char** out_json, int* all_passed);

WKM_API void wkm_string_free(char* s);
WKM_API const char* wkm_last_error(void);
WKM_API const char* wkm_version(void);

#ifdef __cplusplus
}
#endif

#endif /* WAKIMOTO_WAKIMOTO_H */
