/* Copyright 2026 The phaseshift Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the phaseshift library.
 *
 * Objects are opaque handles returned through out-parameters and released
 * with the matching *_free. Every fallible call returns a ps_status;
 * on failure ps_last_error() describes the problem (per thread, valid until
 * the next failing call on that thread). Strings returned through char**
 * are heap allocated and must be released with ps_string_free.
 *
 * Basis indices are 0-based; for qubit registers index n = i1 i2 ... iN in
 * binary with qubit 1 the most significant bit. Angles are in radians.
 */

#ifndef PHASESHIFT_H
#define PHASESHIFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PHASESHIFT_BUILDING)
#define PS_API __declspec(dllexport)
#else
#define PS_API __declspec(dllimport)
#endif
#else
#define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes for the command line tool. */
typedef enum ps_status {
  PS_OK = 0,
  PS_ERR_PARSE = 1,
  PS_ERR_VALIDATION = 2,
  PS_ERR_RANGE = 3,
  PS_ERR_VERIFICATION = 4,
  PS_ERR_INTERNAL = 5
} ps_status;

typedef struct ps_state ps_state;
typedef struct ps_circuit ps_circuit;

/* One reconstructed element. Standard errors are zero for exact evaluation. */
typedef struct ps_element {
  size_t n;
  size_t m;
  double re;
  double im;
  double re_stderr;
  double im_stderr;
  double expectations[6];
  uint64_t total_shots;
} ps_element;

PS_API const char* ps_version(void);
PS_API const char* ps_last_error(void);
PS_API void ps_string_free(char* str);

/* ---- states ---------------------------------------------------------- */

PS_API ps_status ps_state_ginibre(size_t dim, size_t rank, uint64_t seed, ps_state** out);
PS_API ps_status ps_state_ghz(size_t num_qubits, ps_state** out);
PS_API ps_status ps_state_plus(size_t dim, ps_state** out);
PS_API ps_status ps_state_mixed(size_t dim, ps_state** out);
PS_API ps_status ps_state_basis(size_t dim, size_t index, ps_state** out);
PS_API ps_status ps_state_gaussian_grid(size_t grid_points, double x_min, double x_max,
                                        double center, double width, ps_state** out);
/* re_im holds 2*dim*dim doubles: row-major (re, im) pairs. Validated at tol. */
PS_API ps_status ps_state_from_entries(size_t dim, const double* re_im, double tol, ps_state** out);
/* Accepts density, state-vector and grid JSON documents. */
PS_API ps_status ps_state_from_json(const char* text, ps_state** out);
PS_API ps_status ps_state_load(const char* path, ps_state** out);
PS_API void ps_state_free(ps_state* state);

PS_API size_t ps_state_dim(const ps_state* state);
/* 1 for grid states, 0 otherwise. */
PS_API int ps_state_is_grid(const ps_state* state);
PS_API ps_status ps_state_residuals(const ps_state* state, double* hermiticity, double* trace,
                                    double* min_eigenvalue);
PS_API ps_status ps_state_element(const ps_state* state, size_t i, size_t j, double* re, double* im);
/* Density (or grid) state file. */
PS_API ps_status ps_state_to_json(const ps_state* state, char** out);

/* ---- protocol -------------------------------------------------------- */

PS_API ps_status ps_k_expectation(const ps_state* state, size_t n, size_t m, double theta,
                                  double phi, double* out);
/* shots == 0 selects exact expectations; n == m measures the diagonal. */
PS_API ps_status ps_measure(const ps_state* state, size_t n, size_t m, uint64_t shots,
                            uint64_t seed, ps_element* out);
PS_API ps_status ps_measure_json(const ps_state* state, size_t n, size_t m, uint64_t shots,
                                 uint64_t seed, char** out);
/* JSON density document of the reconstruction; frobenius_error may be NULL. */
PS_API ps_status ps_reconstruct_full_json(const ps_state* state, char** out, double* frobenius_error);

/* ---- circuits -------------------------------------------------------- */

PS_API ps_status ps_circuit_phase_shift(size_t num_qubits, size_t n, double theta, ps_circuit** out);
PS_API ps_status ps_circuit_measurement(size_t num_qubits, size_t n, size_t m, double theta,
                                        double phi, ps_circuit** out);
PS_API ps_status ps_circuit_parse(const char* text, ps_circuit** out);
PS_API void ps_circuit_free(ps_circuit* circuit);
PS_API size_t ps_circuit_num_qubits(const ps_circuit* circuit);
PS_API size_t ps_circuit_num_gates(const ps_circuit* circuit);
PS_API ps_status ps_circuit_to_text(const ps_circuit* circuit, char** out);
/* Post-selection success probability (1 when the circuit does not post-select). */
PS_API ps_status ps_circuit_simulate(const ps_state* state, const ps_circuit* circuit,
                                     double* probability);

/* ---- sampling -------------------------------------------------------- */

/* csv != 0 yields "M,rmse_real,rmse_imag,mean_stderr" rows, otherwise JSON. */
PS_API ps_status ps_sweep(const ps_state* state, size_t n, size_t m, const uint64_t* shot_grid,
                          size_t grid_size, size_t repeats, uint64_t seed, int csv, char** out);

/* ---- applications ---------------------------------------------------- */

/* shots == 0 selects exact expectations. stderr_out may be NULL. */
PS_API ps_status ps_ghz_fidelity(const ps_state* state, uint64_t shots, uint64_t seed,
                                 double* fidelity, double* stderr_out);
PS_API ps_status ps_ghz_fidelity_json(const ps_state* state, uint64_t shots, uint64_t seed, char** out);
PS_API ps_status ps_bell_witness(const ps_state* state, uint64_t shots, uint64_t seed,
                                 double* value, double* stderr_out);
PS_API ps_status ps_l1_coherence(const ps_state* state, uint64_t shots, uint64_t seed, double* value);

/* ---- continuous-variable grids ---------------------------------------- */

/* Element (a, b) of a grid state; JSON adds positions and rho(x_a, x_b) = stored / dx. */
PS_API ps_status ps_cv_reconstruct_json(const ps_state* state, size_t a, size_t b, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PHASESHIFT_H */
