#ifndef FIBWALK_H
#define FIBWALK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum FibwalkStatus {
  FibwalkStatus_Ok = 0,
  /**
   * A pointer argument was null or an enum value was out of range.
   */
  FibwalkStatus_InvalidArgument = 1,
  /**
   * A digit word failed validation for the requested system.
   */
  FibwalkStatus_InvalidWord = 2,
  /**
   * No builtin automaton has the requested name.
   */
  FibwalkStatus_UnknownName = 3,
  /**
   * A formula failed to parse or evaluate.
   */
  FibwalkStatus_EvalError = 4,
  /**
   * An internal invariant failed; the library state is still usable.
   */
  FibwalkStatus_Internal = 5,
} FibwalkStatus;

/**
 * Numeration system selector.
 */
typedef enum FibwalkSystem {
  FibwalkSystem_Zeck = 0,
  FibwalkSystem_Cg = 1,
} FibwalkSystem;

/**
 * Shift operator selector.
 */
typedef enum FibwalkShift {
  FibwalkShift_Single = 0,
  FibwalkShift_Double = 1,
  FibwalkShift_CgDouble = 2,
} FibwalkShift;

/**
 * Opaque handle to a synchronized relation automaton.
 */
typedef struct FibwalkAutomaton FibwalkAutomaton;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Encode `n`, least significant digit first. The result must be freed
 * with `fibwalk_string_free`.
 */
enum FibwalkStatus fibwalk_encode(enum FibwalkSystem system, uint64_t n, char **out);

/**
 * Decode an LSD-first digit word.
 */
enum FibwalkStatus fibwalk_decode(enum FibwalkSystem system, const char *word, uint64_t *out);

/**
 * Apply a shift operator.
 */
enum FibwalkStatus fibwalk_shift(enum FibwalkShift op, uint64_t n, uint64_t *out);

/**
 * `⌊nφ⌋`.
 */
uint64_t fibwalk_floor_phi(uint64_t n);

/**
 * `⌊nφ²⌋`.
 */
uint64_t fibwalk_floor_phi2(uint64_t n);

/**
 * `⌊n/φ⌋`.
 */
uint64_t fibwalk_floor_inv_phi(uint64_t n);

/**
 * Cap the number of states automaton constructions may allocate.
 */
void fibwalk_set_state_budget(uintptr_t limit);

/**
 * Look up a builtin automaton by name. The handle must be freed with
 * `fibwalk_automaton_free`.
 */
enum FibwalkStatus fibwalk_builtin(const char *name, struct FibwalkAutomaton **out);

/**
 * Number of tracks the automaton reads.
 */
uintptr_t fibwalk_automaton_tracks(const struct FibwalkAutomaton *auto_);

/**
 * Decide whether a tuple of integers is in the relation. `values` must
 * hold exactly one integer per track.
 */
enum FibwalkStatus fibwalk_automaton_member(const struct FibwalkAutomaton *auto_,
                                            const uint64_t *values,
                                            uintptr_t len,
                                            bool *out);

/**
 * Serialize the automaton to the text format. Free with
 * `fibwalk_string_free`.
 */
enum FibwalkStatus fibwalk_automaton_serialize(const struct FibwalkAutomaton *auto_, char **out);

/**
 * Render the automaton as a DOT graph. Free with `fibwalk_string_free`.
 */
enum FibwalkStatus fibwalk_automaton_dot(const struct FibwalkAutomaton *auto_, char **out);

/**
 * Release an automaton handle. Null is accepted and ignored.
 */
void fibwalk_automaton_free(struct FibwalkAutomaton *auto_);

/**
 * Decide a closed formula against the builtin environment; `out` gets the
 * truth value.
 */
enum FibwalkStatus fibwalk_eval(const char *formula, bool *out);

/**
 * Release a string returned by this library. Null is accepted.
 */
void fibwalk_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBWALK_H */
