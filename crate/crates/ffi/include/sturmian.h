#ifndef STURMIAN_H
#define STURMIAN_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum SturmianStatus {
  STURMIAN_STATUS_OK = 0,
  STURMIAN_STATUS_NULL_POINTER = 1,
  STURMIAN_STATUS_INVALID_UTF8 = 2,
  STURMIAN_STATUS_PARSE = 3,
  STURMIAN_STATUS_PRECONDITION = 4,
  STURMIAN_STATUS_NOT_BASIS = 5,
  STURMIAN_STATUS_NOT_COPRIME = 6,
  STURMIAN_STATUS_INTERNAL = 7,
} SturmianStatus;

/**
 * Opaque word of the braid group B4.
 */
typedef struct SturmianBraid SturmianBraid;

/**
 * Opaque reduced word of F2.
 */
typedef struct SturmianWord SturmianWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *sturmian_last_error_message(void);

/**
 * Parses a word over `a b A B` (`1` is the empty word).
 *
 * # Safety
 * `text` must be null or a valid C string; `out` must be null or writable.
 */
enum SturmianStatus sturmian_word_parse(const char *text, struct SturmianWord **out);

/**
 * # Safety
 * `word` must be null or a handle from this library not yet freed.
 */
void sturmian_word_free(struct SturmianWord *word);

/**
 * Writes a newly allocated string; free it with [`sturmian_string_free`].
 *
 * # Safety
 * `word` must be a live handle or null; `out` must be null or writable.
 */
enum SturmianStatus sturmian_word_to_string(const struct SturmianWord *word, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not yet freed.
 */
void sturmian_string_free(char *s);

/**
 * Number of letters of the reduced word, or 0 for a null handle.
 *
 * # Safety
 * `word` must be a live handle or null.
 */
uintptr_t sturmian_word_len(const struct SturmianWord *word);

/**
 * # Safety
 * `x`, `y` must be live handles or null; `out` must be null or writable.
 */
enum SturmianStatus sturmian_word_multiply(const struct SturmianWord *x,
                                           const struct SturmianWord *y,
                                           struct SturmianWord **out);

/**
 * # Safety
 * `x` must be a live handle or null; `out` must be null or writable.
 */
enum SturmianStatus sturmian_word_inverse(const struct SturmianWord *x, struct SturmianWord **out);

/**
 * Christoffel word of the coprime pair `(p, q)`.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum SturmianStatus sturmian_christoffel(int64_t p, int64_t q, struct SturmianWord **out);

/**
 * Chain-based basis test.
 *
 * # Safety
 * `u`, `v` must be live handles or null; `out` must be null or writable.
 */
enum SturmianStatus sturmian_is_basis(const struct SturmianWord *u,
                                      const struct SturmianWord *v,
                                      bool *out);

/**
 * Basis test by the commutator criterion.
 *
 * # Safety
 * `u`, `v` must be live handles or null; `out` must be null or writable.
 */
enum SturmianStatus sturmian_nielsen_dehn(const struct SturmianWord *u,
                                          const struct SturmianWord *v,
                                          bool *out);

/**
 * # Safety
 * `w` must be a live handle or null; `out` must be null or writable.
 */
enum SturmianStatus sturmian_is_primitive(const struct SturmianWord *w, bool *out);

/**
 * Palindromic conjugate of a cyclically reduced basis with odd lengths.
 *
 * # Safety
 * `u`, `v` must be live handles or null; the out pointers must be null or
 * writable.
 */
enum SturmianStatus sturmian_palindromize(const struct SturmianWord *u,
                                          const struct SturmianWord *v,
                                          struct SturmianWord **out_u,
                                          struct SturmianWord **out_v);

/**
 * Parses B4 braid text such as `"1 -2 3 4"`; the empty string is the identity.
 *
 * # Safety
 * `text` must be null or a valid C string; `out` must be null or writable.
 */
enum SturmianStatus sturmian_braid_parse(const char *text, struct SturmianBraid **out);

/**
 * # Safety
 * `braid` must be null or a handle from this library not yet freed.
 */
void sturmian_braid_free(struct SturmianBraid *braid);

/**
 * Equality in B4, or modulo its center when `mod_center` is set.
 *
 * # Safety
 * `x`, `y` must be live handles or null; `out` must be null or writable.
 */
enum SturmianStatus sturmian_braid_equal(const struct SturmianBraid *x,
                                         const struct SturmianBraid *y,
                                         bool mod_center,
                                         bool *out);

/**
 * Images of `a` and `b` under the automorphism of F2 attached to the braid,
 * composed with the swap `a ↔ b` on the right when `omega` is set.
 *
 * # Safety
 * `braid` must be a live handle or null; the out pointers must be null or
 * writable.
 */
enum SturmianStatus sturmian_braid_f_image(const struct SturmianBraid *braid,
                                           bool omega,
                                           struct SturmianWord **out_a,
                                           struct SturmianWord **out_b);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STURMIAN_H */
