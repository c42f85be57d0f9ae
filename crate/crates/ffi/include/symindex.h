#ifndef SYMINDEX_H
#define SYMINDEX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SymindexStatus {
  SYMINDEX_STATUS_OK = 0,
  SYMINDEX_STATUS_NULL_ARGUMENT = 1,
  SYMINDEX_STATUS_INVALID_UTF8 = 2,
  SYMINDEX_STATUS_UNKNOWN_SPACE = 3,
  SYMINDEX_STATUS_NOT_IRREDUCIBLE = 4,
  SYMINDEX_STATUS_CATALOG_LOAD = 5,
  SYMINDEX_STATUS_INDEX_UNKNOWN = 6,
  SYMINDEX_STATUS_UNSUPPORTED = 7,
  SYMINDEX_STATUS_BUFFER_TOO_SMALL = 8,
} SymindexStatus;

// Outcome of the necessary-condition check for a totally geodesic embedding.
typedef enum SymindexVerdict {
  SYMINDEX_VERDICT_PASS = 0,
  SYMINDEX_VERDICT_FAIL = 1,
  SYMINDEX_VERDICT_INDETERMINATE = 2,
} SymindexVerdict;

// A resolved space name, possibly a product.
typedef struct SymindexSpace SymindexSpace;

// An index table together with its catalog.
typedef struct SymindexTable SymindexTable;

// Index data of one irreducible space.
typedef struct SymindexIndex {
  uint64_t dim;
  uint32_t rank;
  uint64_t index;
  uint64_t reflective_index;
  bool exceptional;
} SymindexIndex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. Valid until the next
// call into this library on the same thread; empty after a success.
const char *symindex_last_error(void);

// The embedded table.
//
// # Safety
// `out` must be valid for writes.
enum SymindexStatus symindex_table_builtin(struct SymindexTable **out);

// A table over a catalog read from `path`.
//
// # Safety
// `path` must be a NUL-terminated string and `out` valid for writes.
enum SymindexStatus symindex_table_from_catalog(const char *path, struct SymindexTable **out);

// # Safety
// `table` must be null or a handle from this library not yet freed.
void symindex_table_free(struct SymindexTable *table);

// Resolve a name such as `Sp(2,2)/Sp2xSp2` or `S^5 x S^3`.
//
// # Safety
// `table` must be a live handle, `name` a NUL-terminated string and `out`
// valid for writes.
enum SymindexStatus symindex_space_lookup(const struct SymindexTable *table,
                                          const char *name,
                                          struct SymindexSpace **out);

// # Safety
// `space` must be null or a handle from this library not yet freed.
void symindex_space_free(struct SymindexSpace *space);

// Copy the canonical name into `buf`, NUL-terminated. `needed` receives
// the size including the terminator, also on `BUFFER_TOO_SMALL`.
//
// # Safety
// `space` must be a live handle, `buf` valid for `len` bytes (or null
// when `len` is 0), and `needed` null or valid for writes.
enum SymindexStatus symindex_space_name(const struct SymindexSpace *space,
                                        char *buf,
                                        uintptr_t len,
                                        uintptr_t *needed);

// # Safety
// `space` must be a live handle.
uint64_t symindex_space_dim(const struct SymindexSpace *space);

// # Safety
// `space` must be a live handle.
uint32_t symindex_space_rank(const struct SymindexSpace *space);

// Index data of an irreducible space.
//
// # Safety
// Both handles must be live and `out` valid for writes.
enum SymindexStatus symindex_index(const struct SymindexTable *table,
                                   const struct SymindexSpace *space,
                                   struct SymindexIndex *out);

// Necessary conditions for `sub` to sit totally geodesically in the
// irreducible `ambient`. On `FAIL` and `INDETERMINATE` the reason is left in
// `symindex_last_error`.
//
// # Safety
// All handles must be live and `out` valid for writes.
enum SymindexStatus symindex_obstruction_check(const struct SymindexTable *table,
                                               const struct SymindexSpace *sub,
                                               const struct SymindexSpace *ambient,
                                               enum SymindexVerdict *out);

// Run the case elimination for Sp(2r)/Sp(r)Sp(r) and report how many
// candidates survive. Zero survivors establishes index 4r.
//
// # Safety
// `survivors` must be valid for writes.
enum SymindexStatus symindex_eliminate_sp(uint32_t r,
                                          bool external_assumptions,
                                          uintptr_t *survivors);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMINDEX_H */
