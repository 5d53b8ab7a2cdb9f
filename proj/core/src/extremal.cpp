#include "pgeom/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "pgeom/error.hpp"

namespace pgeom {
namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  std::atomic<std::uint64_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::uint64_t max_nodes = 0;
  std::optional<Clock::time_point> deadline;
};

struct Task {
  PointMask mask;
  std::uint64_t count = 0;
  std::size_t next = 0;
};

void raise_best(std::atomic<std::uint64_t>& best, std::uint64_t value) {
  std::uint64_t cur = best.load(std::memory_order_relaxed);
  while (cur < value && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

class Worker {
 public:
  Worker(const Embedder& embedder, const ProjectiveSpace& space, Shared& shared)
      : embedder_(embedder), space_(space), shared_(shared), ground_(space.size()) {}

  void run(const Task& task) {
    current_ = task.mask;
    count_ = task.count;
    note_incumbent();
    dfs(task.next);
  }

  std::uint64_t best() const { return best_; }
  const PointMask& witness() const { return witness_; }

 private:
  void note_incumbent() {
    if (count_ > best_) {
      best_ = count_;
      witness_ = current_;
    }
    raise_best(shared_.best, count_);
  }

  bool charge_node() {
    if (shared_.exhausted.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > shared_.max_nodes || (shared_.deadline && (n & 1023) == 0 && Clock::now() > *shared_.deadline)) {
      shared_.exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void dfs(std::size_t i) {
    if (!charge_node()) return;
    if (count_ + (ground_ - i) <= shared_.best.load(std::memory_order_relaxed)) return;
    if (i == ground_) return;
    const auto p = static_cast<PointIndex>(i);
    current_.set(i);
    if (!embedder_.exists_through(space_, current_, p)) {
      ++count_;
      note_incumbent();
      dfs(i + 1);
      --count_;
    }
    current_.reset(i);
    dfs(i + 1);
  }

  const Embedder& embedder_;
  const ProjectiveSpace& space_;
  Shared& shared_;
  std::size_t ground_;
  PointMask current_;
  std::uint64_t count_ = 0;
  std::uint64_t best_ = 0;
  PointMask witness_;
};

// Breadth-first expansion of the include/exclude tree into independent subtrees.
std::vector<Task> split(const Embedder& embedder, const ProjectiveSpace& space, Task root, std::size_t want) {
  std::vector<Task> frontier{std::move(root)};
  while (frontier.size() < want) {
    std::vector<Task> next;
    bool grew = false;
    for (auto& t : frontier) {
      if (t.next >= space.size()) {
        next.push_back(std::move(t));
        continue;
      }
      grew = true;
      const auto p = static_cast<PointIndex>(t.next);
      Task with = t;
      with.mask.set(p);
      if (!embedder.exists_through(space, with.mask, p)) {
        ++with.count;
        ++with.next;
        next.push_back(std::move(with));
      }
      ++t.next;
      next.push_back(std::move(t));
    }
    frontier = std::move(next);
    if (!grew) break;
  }
  return frontier;
}

}  // namespace

bool is_free(const Geometry& s, const Geometry& h) { return !contains(s, h).has_value(); }

ExtremalResult ex_exact(const Geometry& h, int n, const Budget& budget) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "ex_exact needs n >= 1");
  if (geometry_rank(h) < 1) throw Error(ErrorCode::empty_geometry, "forbidden geometry has rank 0");

  const auto space = projective_space(h.field(), n);
  const Embedder embedder(h, true);

  Shared shared;
  shared.max_nodes = budget.max_nodes;
  if (budget.max_time) shared.deadline = Clock::now() + *budget.max_time;

  Task root{PointMask(space->size()), 0, 0};
  root.mask.set(0);
  if (embedder.exists_through(*space, root.mask, 0)) {
    // a single point already contains h
    return ExtremalResult{0, Geometry(space, {}), SearchStatus::exact, 1};
  }
  root.count = 1;
  root.next = 1;

  std::uint64_t best = 0;
  PointMask witness;
  const unsigned threads = std::max(1u, budget.threads);
  if (threads == 1) {
    Worker worker(embedder, *space, shared);
    worker.run(root);
    best = worker.best();
    witness = worker.witness();
  } else {
    const auto tasks = split(embedder, *space, std::move(root), 8 * static_cast<std::size_t>(threads));
    std::atomic<std::size_t> cursor{0};
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(embedder, *space, shared);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = cursor.fetch_add(1); i < tasks.size(); i = cursor.fetch_add(1)) workers[t].run(tasks[i]);
        });
      }
    }
    for (const auto& w : workers) {
      if (w.best() > best) {
        best = w.best();
        witness = w.witness();
      }
    }
  }

  Geometry result = Geometry::from_mask(space, witness);
  if (!is_free(result, h)) throw std::logic_error("ex_exact produced a witness that contains the forbidden geometry");
  const SearchStatus status = shared.exhausted.load() ? SearchStatus::lower_bound : SearchStatus::exact;
  return ExtremalResult{best, std::move(result), status, std::min(shared.nodes.load(), shared.max_nodes)};
}

std::uint64_t bose_burton_value(int m, int n, const Field& f) {
  if (m < 1 || m > n) throw Error(ErrorCode::invalid_argument, "bose_burton_value needs 1 <= m <= n");
  return g_size(n, f.q(), m - 1);
}

std::optional<Flat> find_sparse_flat(const Geometry& g, int m, int c) {
  if (c < 1 || c >= m || m > g.ambient())
    throw Error(ErrorCode::invalid_argument, "find_sparse_flat needs 1 <= c < m <= ambient");
  const Field& f = g.field();
  FlatCursor cursor(f, g.ambient(), m);
  while (auto flat = cursor.next()) {
    Matrix hits(0, g.ambient());
    for (PointIndex p : flat_point_indices(g.space(), *flat))
      if (g.has(p)) hits.append_row(g.space().coords(p));
    if (matrix_rank(std::move(hits), f) <= m - c) return flat;
  }
  return std::nullopt;
}

std::vector<DensityRow> density_table(const Geometry& h, int n_min, int n_max, const Budget& budget) {
  std::vector<DensityRow> rows;
  if (n_min > n_max) return rows;
  const int c = critical_exponent(h);
  const Rational limit = density_limit(h.field().q(), c);
  for (int n = n_min; n <= n_max; ++n) {
    const ExtremalResult r = ex_exact(h, n, budget);
    DensityRow row;
    row.n = n;
    row.ex = r.value;
    row.total = pg_size(n, h.field().q());
    row.density = Rational(BigInt(static_cast<unsigned long>(row.ex)), BigInt(static_cast<unsigned long>(row.total)));
    row.density.canonicalize();
    row.limit = limit;
    row.status = r.status;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pgeom
