#include "crossratio/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "crossratio/planarity.hpp"

namespace crossratio {

std::string_view to_string(SearchMode m) {
  return m == SearchMode::kBranching ? "branching" : "exhaustive";
}

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::kCrEquals: return "cr =";
    case Claim::kCrExceeds: return "cr >";
    case Claim::kCrAtLeast: return "cr >=";
    case Claim::kParallelLemma: return "forced crossing implies crossings >=";
  }
  return "?";
}

std::string Certificate::summary() const {
  std::ostringstream os;
  os << to_string(claim) << ' ' << value;
  if (!forced.empty()) os << " with " << forced.size() << " forced pair(s)";
  os << (holds ? " [certified]" : " [refuted]");
  os << "; schemes with fewer than " << log.exhausted_below << " pairs exhausted, "
     << log.planarity_tests << " planarity tests (" << to_string(mode) << ")";
  if (witness) os << "; witness with " << witness_crossings << " crossings";
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

// Crossing pairs plus the order of partners along every base edge.
struct State {
  std::vector<EdgePair> pairs;
  std::vector<std::vector<EdgeId>> order;

  [[nodiscard]] std::string key() const {
    std::string k;
    auto put = [&k](std::uint32_t x) { k.append(reinterpret_cast<const char*>(&x), sizeof x); };
    for (const EdgePair& p : pairs) put(p.first), put(p.second);
    for (EdgeId e = 0; e < order.size(); ++e) {
      if (order[e].size() < 2) continue;
      put(kNoEdge);
      put(e);
      for (EdgeId f : order[e]) put(f);
    }
    return k;
  }

  [[nodiscard]] CrossingScheme scheme() const {
    CrossingScheme s;
    s.pairs = pairs;
    for (EdgeId e = 0; e < order.size(); ++e) {
      if (order[e].size() >= 2) s.order[e] = order[e];
    }
    return s;
  }

  void add(EdgeId e, std::size_t pos_e, EdgeId f, std::size_t pos_f) {
    pairs.insert(std::upper_bound(pairs.begin(), pairs.end(), EdgePair(e, f)), EdgePair(e, f));
    order[e].insert(order[e].begin() + static_cast<long>(pos_e), f);
    order[f].insert(order[f].begin() + static_cast<long>(pos_f), e);
  }
};

struct Skeleton {
  Graph graph;
  /// (base edge, position along it) per skeleton edge
  std::vector<std::pair<EdgeId, std::uint32_t>> segment;
};

Skeleton planarize_state(const Graph& g, const State& s) {
  Skeleton out;
  const std::size_t n = g.vertex_count();
  out.graph = Graph(n + s.pairs.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId cur = g.edge(e).u;
    std::uint32_t pos = 0;
    for (EdgeId f : s.order[e]) {
      const auto it = std::lower_bound(s.pairs.begin(), s.pairs.end(), EdgePair(e, f));
      const auto x = static_cast<VertexId>(n + (it - s.pairs.begin()));
      out.graph.add_edge(cur, x);
      out.segment.emplace_back(e, pos++);
      cur = x;
    }
    out.graph.add_edge(cur, g.edge(e).v);
    out.segment.emplace_back(e, pos);
  }
  return out;
}

struct Stats {
  std::vector<std::uint64_t> tests_per_size;
  std::uint64_t tests = 0;
  std::uint64_t nodes = 0;

  void count_test(std::size_t size) {
    if (tests_per_size.size() <= size) tests_per_size.resize(size + 1, 0);
    ++tests_per_size[size];
    ++tests;
  }
  void merge(const Stats& o) {
    if (tests_per_size.size() < o.tests_per_size.size()) tests_per_size.resize(o.tests_per_size.size(), 0);
    for (std::size_t i = 0; i < o.tests_per_size.size(); ++i) tests_per_size[i] += o.tests_per_size[i];
    tests += o.tests;
    nodes += o.nodes;
  }
};

class Search {
 public:
  Search(const Graph& g, const std::vector<EdgePair>& forced, const SearchOptions& options)
      : g_(g), options_(options) {
    root_.order.resize(g.edge_count());
    std::set<EdgePair> seen;
    for (const EdgePair& p : forced) {
      if (!g.has_edge(p.first) || !g.has_edge(p.second)) throw GraphError("forced pair names an unknown edge");
      if (g.adjacent(p.first, p.second)) throw GraphError("forced pair is not independent");
      if (!seen.insert(p).second) throw GraphError("forced pair repeated");
      root_.add(p.first, root_.order[p.first].size(), p.second, root_.order[p.second].size());
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
        if (g.independent(e, f) && !seen.contains(EdgePair(e, f))) candidates_.emplace_back(e, f);
      }
    }
  }

  [[nodiscard]] std::size_t forced_size() const { return root_.pairs.size(); }
  [[nodiscard]] const std::vector<EdgePair>& candidates() const { return candidates_; }

  /// A planar scheme with exactly `size` pairs, or none; adds to `stats`.
  std::optional<State> level(std::size_t size, Stats& stats) {
    if (size < forced_size()) return std::nullopt;
    return options_.mode == SearchMode::kBranching ? branching_level(size, stats)
                                                   : exhaustive_level(size, stats);
  }

 private:
  void charge() {
    if (++spent_ > options_.budget) throw BudgetExceeded("planarity-test budget exhausted");
  }

  // --- branching -------------------------------------------------------

  struct Option {
    EdgeId e;
    std::uint32_t pos_e;
    EdgeId f;
    std::uint32_t pos_f;
    auto operator<=>(const Option&) const = default;
  };

  struct Probe {
    bool planar = false;
    std::vector<Option> options;
    std::size_t lower_bound = 0;
  };

  Probe probe(const State& s, std::size_t size, Stats& stats) {
    Skeleton sk = planarize_state(g_, s);
    charge();
    stats.count_test(s.pairs.size());
    PlanarityResult r = test_planarity(sk.graph, {.kuratowski = true});
    Probe out;
    out.planar = r.planar;
    if (r.planar || s.pairs.size() >= size) return out;

    std::set<EdgePair> present(s.pairs.begin(), s.pairs.end());
    std::vector<std::pair<EdgeId, std::uint32_t>> ksegs;
    for (EdgeId k : r.kuratowski) ksegs.push_back(sk.segment[k]);
    std::sort(ksegs.begin(), ksegs.end());
    for (std::size_t i = 0; i < ksegs.size(); ++i) {
      for (std::size_t j = i + 1; j < ksegs.size(); ++j) {
        const auto [e, pe] = ksegs[i];
        const auto [f, pf] = ksegs[j];
        if (e == f || g_.adjacent(e, f) || present.contains(EdgePair(e, f))) continue;
        out.options.push_back({e, pe, f, pf});
      }
    }

    out.lower_bound = 1;
    const std::size_t room = size - s.pairs.size();
    if (options_.lower_bound_pruning && room >= 1) {
      // edge-disjoint Kuratowski subgraphs each need their own new pair
      std::vector<bool> removed(g_.edge_count(), false);
      std::vector<EdgeId> kedges = r.kuratowski;
      while (out.lower_bound <= room) {
        for (EdgeId k : kedges) removed[sk.segment[k].first] = true;
        Graph rest(sk.graph.vertex_count());
        std::vector<EdgeId> back;
        for (EdgeId k = 0; k < sk.graph.edge_count(); ++k) {
          if (removed[sk.segment[k].first]) continue;
          rest.add_edge(sk.graph.edge(k).u, sk.graph.edge(k).v);
          back.push_back(k);
        }
        charge();
        ++stats.tests;
        PlanarityResult rr = test_planarity(rest, {.kuratowski = true});
        if (rr.planar) break;
        ++out.lower_bound;
        kedges.clear();
        for (EdgeId k : rr.kuratowski) kedges.push_back(back[k]);
      }
    }
    return out;
  }

  bool dfs(State& s, std::size_t size, std::unordered_set<std::string>& seen, Stats& stats,
           std::optional<State>& found, const std::atomic<bool>& cancelled) {
    if (cancelled.load(std::memory_order_relaxed)) return false;
    ++stats.nodes;
    Probe p = probe(s, size, stats);
    if (p.planar) {
      found = s;
      return true;
    }
    if (s.pairs.size() >= size || s.pairs.size() + p.lower_bound > size) return false;
    for (const Option& o : p.options) {
      State next = s;
      next.add(o.e, o.pos_e, o.f, o.pos_f);
      if (!seen.insert(next.key()).second) continue;
      if (dfs(next, size, seen, stats, found, cancelled)) return true;
    }
    return false;
  }

  std::optional<State> branching_level(std::size_t size, Stats& stats) {
    ++stats.nodes;
    Probe root = probe(root_, size, stats);
    if (root.planar) return root_;
    if (root_.pairs.size() >= size || root_.pairs.size() + root.lower_bound > size) return std::nullopt;
    return run_tasks(root.options.size(), stats, [&](std::size_t i, Stats& st, const std::atomic<bool>& cancel) {
      State next = root_;
      const Option& o = root.options[i];
      next.add(o.e, o.pos_e, o.f, o.pos_f);
      std::unordered_set<std::string> seen{next.key()};
      std::optional<State> found;
      dfs(next, size, seen, st, found, cancel);
      return found;
    });
  }

  // --- exhaustive ------------------------------------------------------

  bool test_all_orders(State& s, std::vector<EdgeId>& multi, std::size_t idx, Stats& stats,
                       std::optional<State>& found, const std::atomic<bool>& cancelled) {
    if (idx == multi.size()) {
      if (cancelled.load(std::memory_order_relaxed)) return false;
      charge();
      stats.count_test(s.pairs.size());
      ++stats.nodes;
      if (is_planar(planarize_state(g_, s).graph)) {
        found = s;
        return true;
      }
      return false;
    }
    auto& ord = s.order[multi[idx]];
    std::sort(ord.begin(), ord.end());
    do {
      if (test_all_orders(s, multi, idx + 1, stats, found, cancelled)) return true;
    } while (std::next_permutation(ord.begin(), ord.end()));
    return false;
  }

  bool combos(State& s, std::size_t from, std::size_t left, Stats& stats, std::optional<State>& found,
              const std::atomic<bool>& cancelled) {
    if (left == 0) {
      std::vector<EdgeId> multi;
      for (EdgeId e = 0; e < s.order.size(); ++e) {
        if (s.order[e].size() >= 2) multi.push_back(e);
      }
      State t = s;
      return test_all_orders(t, multi, 0, stats, found, cancelled);
    }
    for (std::size_t i = from; i + left <= candidates_.size(); ++i) {
      if (cancelled.load(std::memory_order_relaxed)) return false;
      State next = s;
      const EdgePair& p = candidates_[i];
      next.add(p.first, next.order[p.first].size(), p.second, next.order[p.second].size());
      if (combos(next, i + 1, left - 1, stats, found, cancelled)) return true;
    }
    return false;
  }

  std::optional<State> exhaustive_level(std::size_t size, Stats& stats) {
    const std::size_t extra = size - forced_size();
    if (extra == 0) {
      std::optional<State> found;
      std::atomic<bool> never{false};
      State s = root_;
      combos(s, 0, 0, stats, found, never);
      return found;
    }
    if (candidates_.size() < extra) return std::nullopt;
    return run_tasks(candidates_.size() - extra + 1, stats,
                     [&](std::size_t i, Stats& st, const std::atomic<bool>& cancel) {
                       State s = root_;
                       const EdgePair& p = candidates_[i];
                       s.add(p.first, s.order[p.first].size(), p.second, s.order[p.second].size());
                       std::optional<State> found;
                       combos(s, i + 1, extra - 1, st, found, cancel);
                       return found;
                     });
  }

  // --- task runner -----------------------------------------------------

  // Runs independent subtrees in index order on a worker pool. The result is
  // that of the lowest-index subtree with a hit; statistics count only the
  // subtrees up to it, so certificates do not depend on scheduling.
  template <typename Task>
  std::optional<State> run_tasks(std::size_t count, Stats& stats, Task task) {
    struct Slot {
      std::optional<State> found;
      Stats stats;
      std::atomic<bool> cancel{false};
    };
    std::vector<Slot> slots(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i > best.load()) return;
        try {
          slots[i].found = task(i, slots[i].stats, slots[i].cancel);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          best.store(0);
          for (Slot& s : slots) s.cancel.store(true);
          return;
        }
        if (slots[i].found) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          for (std::size_t j = i + 1; j < count; ++j) slots[j].cancel.store(true);
        }
      }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options_.threads, static_cast<unsigned>(count)));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    const std::size_t last = best.load();
    for (std::size_t i = 0; i < count && i <= last; ++i) stats.merge(slots[i].stats);
    if (last < count) return slots[last].found;
    return std::nullopt;
  }

  const Graph& g_;
  const SearchOptions& options_;
  State root_;
  std::vector<EdgePair> candidates_;
  std::atomic<std::uint64_t> spent_{0};
};

void fill_witness(Certificate& c, const Graph& g, const CrossingScheme& s) {
  const Planarization p = planarize(g, s);
  TopologicalDrawing d = realize(g, s, planar_embedding(p.skeleton));
  c.witness_crossings = crossing_count(d);
  c.witness_scheme = s;
  c.witness = std::move(d);
}

void fill_log(Certificate& c, const Stats& stats) {
  c.log.tests_per_size = stats.tests_per_size;
  c.log.planarity_tests = stats.tests;
  c.log.search_nodes = stats.nodes;
}

bool hint_closes(const SearchOptions& o, const Graph& g, const std::vector<EdgePair>& forced, std::size_t size) {
  if (!o.witness_hint || !(o.witness_hint->base() == g)) return false;
  if (!validate(*o.witness_hint).valid() || crossing_count(*o.witness_hint) != size) return false;
  const CrossingScheme s = scheme_of(*o.witness_hint);
  return std::all_of(forced.begin(), forced.end(), [&s](const EdgePair& p) {
    return std::binary_search(s.pairs.begin(), s.pairs.end(), p);
  });
}

// Runs sizes |forced| .. last; stops at the first planar scheme.
std::optional<State> run_levels(const Graph& g, const std::vector<EdgePair>& forced, std::size_t last,
                                const SearchOptions& options, Certificate& c, Stats& stats,
                                bool use_hint) {
  Search search(g, forced, options);
  c.log.exhausted_below = search.forced_size();
  if (options.mode == SearchMode::kExhaustive) {
    c.log.estimate = exhaustive_estimate(g, last, forced);
    if (c.log.estimate > options.budget) {
      throw BudgetExceeded("exhaustive search needs " + std::to_string(c.log.estimate) +
                           " planarity tests, above the budget of " + std::to_string(options.budget));
    }
  }
  for (std::size_t size = search.forced_size(); size <= last; ++size) {
    if (use_hint && hint_closes(options, g, forced, size)) {
      c.witness = options.witness_hint;
      c.witness_scheme = scheme_of(*options.witness_hint);
      c.witness_crossings = size;
      c.value = size;
      return std::nullopt;
    }
    if (auto found = search.level(size, stats)) return found;
    c.log.exhausted_below = size + 1;
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t exhaustive_estimate(const Graph& g, std::size_t k, const std::vector<EdgePair>& forced) {
  SearchOptions o;
  Search search(g, forced, o);
  const auto& cand = search.candidates();
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  // degree of each base edge in the pair graph, seeded by the forced pairs
  std::vector<std::uint32_t> degree(g.edge_count(), 0);
  for (const EdgePair& p : forced) ++degree[p.first], ++degree[p.second];
  std::uint64_t base = 1;
  for (std::uint32_t d : degree) {
    for (std::uint32_t i = 2; i <= d; ++i) base *= i;
  }
  std::uint64_t total = 0;
  // schemes = sum over pair sets of prod(deg!); counted by DFS with a cap
  std::function<void(std::size_t, std::size_t, std::uint64_t)> walk = [&](std::size_t from, std::size_t left,
                                                                         std::uint64_t weight) {
    if (total >= kCap) return;
    total += weight;
    if (left == 0) return;
    for (std::size_t i = from; i < cand.size() && total < kCap; ++i) {
      const EdgePair& p = cand[i];
      const std::uint64_t w = weight * (++degree[p.first]) * (++degree[p.second]);
      walk(i + 1, left - 1, w);
      --degree[p.first], --degree[p.second];
    }
  };
  if (k >= forced.size()) walk(0, k - forced.size(), base);
  return std::min(total, kCap);
}

Certificate exact_cr(const Graph& g, std::size_t k_max, const std::vector<EdgePair>& forced,
                     const SearchOptions& options) {
  const auto start = Clock::now();
  Certificate c;
  c.forced = forced;
  std::sort(c.forced.begin(), c.forced.end());
  c.mode = options.mode;
  c.threads = options.threads;
  Stats stats;
  const auto found = run_levels(g, c.forced, k_max, options, c, stats, true);
  fill_log(c, stats);
  c.holds = true;
  if (found) {
    c.claim = Claim::kCrEquals;
    c.value = found->pairs.size();
    fill_witness(c, g, found->scheme());
  } else if (c.witness) {
    c.claim = Claim::kCrEquals;
  } else {
    c.claim = Claim::kCrExceeds;
    c.value = k_max;
  }
  c.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return c;
}

Certificate certify_lower(const Graph& g, std::size_t k, const std::vector<EdgePair>& forced,
                          const SearchOptions& options) {
  const auto start = Clock::now();
  Certificate c;
  c.forced = forced;
  std::sort(c.forced.begin(), c.forced.end());
  c.claim = Claim::kCrAtLeast;
  c.value = k;
  c.mode = options.mode;
  c.threads = options.threads;
  Stats stats;
  std::optional<State> found;
  if (k > 0) found = run_levels(g, c.forced, k - 1, options, c, stats, false);
  if (k == 0) c.log.exhausted_below = 0;
  fill_log(c, stats);
  c.holds = !found;
  if (found) fill_witness(c, g, found->scheme());
  c.log.exhausted_below = found ? found->pairs.size() : std::max(k, c.forced.size());
  c.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return c;
}

Certificate verify_parallel_lemma(const Graph& g, EdgeId e1, EdgeId e2, std::size_t ell,
                                  const SearchOptions& options) {
  if (!g.has_edge(e1) || !g.has_edge(e2) || g.adjacent(e1, e2)) {
    throw GraphError("the lemma needs two independent edges");
  }
  auto two_paths = [&g](const Edge& e) {
    std::size_t count = 0;
    for (VertexId m = 0; m < g.vertex_count(); ++m) {
      if (m != e.u && m != e.v && g.multiplicity(e.u, m) > 0 && g.multiplicity(m, e.v) > 0) ++count;
    }
    return count;
  };
  if (ell == 0) throw GraphError("the lemma needs ell >= 1");
  for (EdgeId e : {e1, e2}) {
    if (two_paths(g.edge(e)) < ell - 1) {
      throw GraphError("edge " + std::to_string(e) + " lacks " + std::to_string(ell - 1) + " paths of length two");
    }
  }
  Certificate c = certify_lower(g, ell, {EdgePair(e1, e2)}, options);
  c.claim = Claim::kParallelLemma;
  return c;
}

}  // namespace crossratio
