/*---------------------------------------------------------------------------*/
/* Copyright 2026 ssburgers contributors                                     */
/* SPDX-License-Identifier: Apache-2.0                                       */
/*---------------------------------------------------------------------------*/
/*!
 * \file ssburgers.h
 * C interface to the lattice stochastic Burgers simulator and its
 * verification suites.
 *
 * Every function returns an ssb_status. On failure, ssb_last_error() gives a
 * message for the calling thread that stays valid until the next call into
 * the library from that thread. Strings returned through out-parameters are
 * owned by the caller and released with ssb_string_free.
 */
/*---------------------------------------------------------------------------*/
#ifndef SSBURGERS_SSBURGERS_H
#define SSBURGERS_SSBURGERS_H

#include <stddef.h>
#include <stdint.h>

#if defined(SSB_BUILDING_LIBRARY)
#    define SSB_API __attribute__((visibility("default")))
#else
#    define SSB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssb_status
{
    SSB_OK = 0,
    SSB_INVALID_ARGUMENT = 1, /* null pointer, bad size */
    SSB_VALIDATION = 2,       /* configuration rejected; see ssb_last_error */
    SSB_UNKNOWN_SUITE = 3,
    SSB_IO = 4,
    SSB_TRAJECTORY = 5, /* a trajectory produced non-finite values */
    SSB_INTERNAL = 6
} ssb_status;

typedef enum ssb_nonlinearity
{
    SSB_SASAMOTO_SPOHN = 0,
    SSB_NAIVE = 1
} ssb_nonlinearity;

typedef struct ssb_config ssb_config;
typedef struct ssb_report ssb_report;

SSB_API char const* ssb_version(void);
SSB_API char const* ssb_last_error(void);
SSB_API void ssb_string_free(char* s);

/*---------------------------------------------------------------------------*/
/* Configuration                                                             */
/*---------------------------------------------------------------------------*/

/* Number of suites and their names, index 0 .. count-1. */
SSB_API size_t ssb_suite_count(void);
SSB_API char const* ssb_suite_name(size_t index);

/* Default configuration of a suite as JSON text. */
SSB_API ssb_status ssb_config_defaults(char const* suite, char** json_out);

/*
 * Parse and validate a JSON configuration for a suite. Missing keys take the
 * suite defaults; unknown keys and every out-of-range value are reported
 * together in the error message, one per line.
 */
SSB_API ssb_status ssb_config_parse(char const* suite, char const* json,
                                    ssb_config** out);
SSB_API void ssb_config_destroy(ssb_config* cfg);

/* Canonical configuration (all keys, sorted) and its 16-digit hash. */
SSB_API ssb_status ssb_config_canonical(ssb_config const* cfg, char** json_out);
SSB_API ssb_status ssb_config_hash(ssb_config const* cfg, char** hash_out);

/*---------------------------------------------------------------------------*/
/* Suites                                                                    */
/*---------------------------------------------------------------------------*/

/*
 * Run a suite. threads = 0 uses the hardware concurrency; the report does
 * not depend on the thread count.
 */
SSB_API ssb_status ssb_run_suite(ssb_config const* cfg, unsigned threads,
                                 ssb_report** out);
SSB_API void ssb_report_destroy(ssb_report* report);

SSB_API int ssb_report_passed(ssb_report const* report);
SSB_API uint64_t ssb_report_steps(ssb_report const* report);
SSB_API ssb_status ssb_report_json(ssb_report const* report, char** out);
SSB_API ssb_status ssb_report_csv(ssb_report const* report, char** out);
SSB_API size_t ssb_report_artifact_count(ssb_report const* report);
SSB_API ssb_status ssb_report_artifact(ssb_report const* report, size_t index,
                                       char** name_out, char** content_out);

/*---------------------------------------------------------------------------*/
/* Lattice primitives                                                        */
/*---------------------------------------------------------------------------*/

/* drift_out[j] = (1/2) Lap u_j + gamma B_j(u) on the torus of size sites. */
SSB_API ssb_status ssb_drift(double const* u, size_t sites, double gamma,
                             ssb_nonlinearity kind, double* drift_out);

/* w_j for site j (reduced mod sites). */
SSB_API ssb_status ssb_local_current(double const* u, size_t sites, long j,
                                     ssb_nonlinearity kind, double* out);

/* Draw sites i.i.d. N(0,1) values from stream (seed, replicate). */
SSB_API ssb_status ssb_sample_invariant(uint64_t seed, uint64_t replicate,
                                        size_t sites, double* out);

/* Torus size rule 8 ceil(sqrt n) R. */
SSB_API size_t ssb_required_sites(uint64_t n, double support_radius);

#ifdef __cplusplus
}
#endif

#endif /* SSBURGERS_SSBURGERS_H */
