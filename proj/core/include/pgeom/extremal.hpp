#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgeom/embed.hpp"
#include "pgeom/geometry.hpp"
#include "pgeom/numeric.hpp"

namespace pgeom {

enum class SearchStatus { exact, lower_bound };

constexpr const char* to_string(SearchStatus s) { return s == SearchStatus::exact ? "exact" : "lower-bound"; }

/// Limits for the exact searches. Exceeding any of them downgrades the result
/// to a lower bound instead of aborting.
struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  std::optional<std::chrono::milliseconds> max_time;
  /// 1 = deterministic single-worker search.
  unsigned threads = 1;
};

struct ExtremalResult {
  std::uint64_t value = 0;
  Geometry witness;
  SearchStatus status = SearchStatus::exact;
  std::uint64_t nodes = 0;
};

struct DensityRow {
  int n = 0;
  std::uint64_t ex = 0;
  std::uint64_t total = 0;
  Rational density;
  Rational limit;
  SearchStatus status = SearchStatus::exact;
};

/// True iff s contains no copy of h. Throws Error(field_mismatch).
bool is_free(const Geometry& s, const Geometry& h);

/**
 * ex_q(h; n): the largest h-free subset of PG(n-1, q).
 *
 * Branch-and-bound over point indices in increasing order (include before
 * exclude), bound = |S| + remaining points. Adding point p to a free set S
 * only needs the embeddings whose image uses p, so each node runs an anchored
 * search. Since PGL(n, q) is transitive on points, point 0 is always included
 * first. The returned witness is re-checked with an unanchored search.
 *
 * Throws Error(empty_geometry) when rank(h) = 0 and Error(invalid_argument) for n < 1.
 */
ExtremalResult ex_exact(const Geometry& h, int n, const Budget& budget = {});

/// |G(n-1, q, m-1)|, the Bose-Burton extremal value for PG(m-1, q).
std::uint64_t bose_burton_value(int m, int n, const Field& f);

/// A rank-m flat F with rank(F ∩ g) <= m - c, or nullopt after every rank-m flat.
std::optional<Flat> find_sparse_flat(const Geometry& g, int m, int c);

/// One row per n in [n_min, n_max]; an empty range yields an empty table.
std::vector<DensityRow> density_table(const Geometry& h, int n_min, int n_max, const Budget& budget = {});

}  // namespace pgeom
