#ifndef POLYOMINO_H
#define POLYOMINO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PolyominoStatus {
  POLYOMINO_STATUS_OK = 0,
  POLYOMINO_STATUS_NULL_POINTER = 1,
  POLYOMINO_STATUS_INVALID_UTF8 = 2,
  POLYOMINO_STATUS_PARSE = 3,
  POLYOMINO_STATUS_BUDGET = 4,
  POLYOMINO_STATUS_DOMAIN = 5,
  POLYOMINO_STATUS_PANIC = 6,
} PolyominoStatus;

typedef enum PolyominoPrimality {
  POLYOMINO_PRIMALITY_NOT_PRIME = 0,
  POLYOMINO_PRIMALITY_PRIME = 1,
  POLYOMINO_PRIMALITY_INDETERMINATE = 2,
} PolyominoPrimality;

// Opaque cell collection.
typedef struct PolyominoCells PolyominoCells;

// Owned integer sequence; coefficient `k` of a polynomial sits at `data[k]`.
typedef struct PolyominoSeq {
  int64_t *data;
  uintptr_t len;
} PolyominoSeq;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the next failing call.
const char *polyomino_last_error(void);

// Parses `{{i,j},...}` or a JSON cell list into a new handle.
//
// # Safety
// `text` must be a nul-terminated string and `out` a valid pointer.
enum PolyominoStatus polyomino_cells_parse(const char *text, struct PolyominoCells **out);

// # Safety
// `h` must come from [`polyomino_cells_parse`] and not be used afterwards; null is ignored.
void polyomino_cells_free(struct PolyominoCells *h);

// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum PolyominoStatus polyomino_cells_rank(const struct PolyominoCells *h, uintptr_t *out);

// Canonical `{{i,j},...}` text of the collection.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum PolyominoStatus polyomino_cells_format(const struct PolyominoCells *h, char **out);

// Inner 2-minors, one per line.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum PolyominoStatus polyomino_ideal(const struct PolyominoCells *h, char **out);

// Reduced Gröbner basis of the inner 2-minor ideal, one element per line.
//
// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum PolyominoStatus polyomino_groebner(const struct PolyominoCells *h,
                                        uint64_t max_pairs,
                                        char **out);

// h-polynomial and Krull dimension of the coordinate ring.
//
// # Safety
// `h` must be a live handle; `out` and `krull_dim` valid pointers.
enum PolyominoStatus polyomino_h_polynomial(const struct PolyominoCells *h,
                                            struct PolyominoSeq *out,
                                            uintptr_t *krull_dim);

// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum PolyominoStatus polyomino_rook_polynomial(const struct PolyominoCells *h,
                                               struct PolyominoSeq *out);

// # Safety
// `h` must be a live handle and `out` a valid pointer.
enum PolyominoStatus polyomino_switching_rook_polynomial(const struct PolyominoCells *h,
                                                         struct PolyominoSeq *out);

// Primality of the inner 2-minor ideal; `certificate` (may be null) receives the certificate name.
//
// # Safety
// `h` must be a live handle, `out` a valid pointer, `certificate` valid or null.
enum PolyominoStatus polyomino_is_prime(const struct PolyominoCells *h,
                                        enum PolyominoPrimality *out,
                                        char **certificate);

// # Safety
// `s` must come from this library and not be used afterwards; null is ignored.
void polyomino_string_free(char *s);

// # Safety
// `seq` must come from this library and not be used afterwards.
void polyomino_seq_free(struct PolyominoSeq seq);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYOMINO_H */
