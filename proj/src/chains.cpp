#include "cobweb/chains.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace cobweb {

GuardRefusal::GuardRefusal(BigCount predicted, std::uint64_t limit)
    : std::runtime_error("enumeration would visit " + to_decimal(predicted) +
                         " chains, above the limit of " +
                         std::to_string(limit) +
                         "; use the closed-form count instead"),
      predicted_(std::move(predicted)),
      limit_(limit) {}

VerificationFailure::VerificationFailure(std::uint32_t k, std::uint32_t n,
                                         QuotientOutcome outcome)
    : std::runtime_error(
          "chain quotient mismatch at k=" + std::to_string(k) +
          " n=" + std::to_string(n) + ": layer chains " +
          to_decimal(outcome.layer_chains) + " / per-copy chains " +
          to_decimal(outcome.per_copy) + " = " + to_decimal(outcome.quotient) +
          " remainder " + to_decimal(outcome.remainder) + ", fibonomial " +
          to_decimal(outcome.fibonomial)),
      outcome_(std::move(outcome)) {}

BigCount count_from_root_formula(std::uint32_t n) {
  if (n == 0) {
    throw std::invalid_argument("root chains need a target level n >= 1");
  }
  return fib_factorial(n);
}

BigCount count_layer_chains_formula(std::uint32_t k, std::uint32_t n) {
  if (k == 0 || k >= n) {
    throw std::invalid_argument("layer chains need 1 <= k < n, got k=" +
                                std::to_string(k) + " n=" + std::to_string(n));
  }
  return falling_f_factorial(n, n - k);
}

namespace {

// Depth-first walk over the cover relation. Candidates for the next step are
// all vertices on higher levels up to the target; is_cover decides.
class CoverWalk {
 public:
  CoverWalk(const CobwebPoset& poset, std::uint32_t target)
      : poset_(poset), target_(target) {}

  template <typename Fn>
  void for_each_cover(const Vertex& v, Fn&& fn) const {
    for (std::uint32_t level = v.level + 1; level <= target_; ++level) {
      const std::uint64_t size = poset_.level_size(level);
      for (std::uint64_t i = 0; i < size; ++i) {
        const Vertex w{level, i};
        if (poset_.is_cover(v, w)) {
          fn(w);
        }
      }
    }
  }

  std::uint64_t count(const Vertex& v) const {
    if (v.level == target_) {
      return 1;
    }
    std::uint64_t total = 0;
    for_each_cover(v, [&](const Vertex& w) { total += count(w); });
    return total;
  }

  void stream(std::vector<Vertex>& path, const ChainVisitor& visit) const {
    const Vertex v = path.back();
    if (v.level == target_) {
      visit(path);
      return;
    }
    for_each_cover(v, [&](const Vertex& w) {
      path.push_back(w);
      stream(path, visit);
      path.pop_back();
    });
  }

 private:
  const CobwebPoset& poset_;
  std::uint32_t target_;
};

void check_guard(std::uint32_t k, std::uint32_t n, std::uint64_t limit) {
  BigCount predicted = falling_f_factorial(n, n - k);
  if (predicted > limit) {
    throw GuardRefusal(std::move(predicted), limit);
  }
}

void check_target(const CobwebPoset& poset, const Vertex& from,
                  std::uint32_t to_level) {
  poset.require(from);
  if (to_level < from.level || to_level > poset.depth()) {
    throw std::invalid_argument(
        "target level " + std::to_string(to_level) + " must lie in " +
        std::to_string(from.level) + ".." + std::to_string(poset.depth()));
  }
}

std::uint64_t parallel_count(const CoverWalk& walk, const Vertex& from,
                             unsigned threads) {
  std::vector<Vertex> branches;
  walk.for_each_cover(from, [&](const Vertex& w) { branches.push_back(w); });
  if (branches.empty()) {
    return walk.count(from);
  }
  const auto workers = static_cast<std::size_t>(
      std::min<std::size_t>(std::max(threads, 1u), branches.size()));
  if (workers == 1) {
    return walk.count(from);
  }
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < branches.size(); b += workers) {
        partial[w] += walk.count(branches[b]);
      }
    });
  }
  pool.clear();
  std::uint64_t total = 0;
  for (auto p : partial) {
    total += p;
  }
  return total;
}

BigCount enumerate_from(const CobwebPoset& poset, const Vertex& from,
                        std::uint32_t to_level,
                        const EnumerationOptions& options) {
  check_target(poset, from, to_level);
  check_guard(from.level, to_level, options.limit);
  const CoverWalk walk(poset, to_level);
  return parallel_count(walk, from, options.threads);
}

void stream_from(const CobwebPoset& poset, const Vertex& from,
                 std::uint32_t to_level, const ChainVisitor& visit,
                 std::uint64_t limit) {
  check_target(poset, from, to_level);
  check_guard(from.level, to_level, limit);
  const CoverWalk walk(poset, to_level);
  std::vector<Vertex> path{from};
  path.reserve(to_level - from.level + 1);
  walk.stream(path, visit);
}

void check_layer(const LayerSpec& spec) {
  if (spec.to_level <= spec.from.level) {
    throw std::invalid_argument("layer target level " +
                                std::to_string(spec.to_level) +
                                " must exceed start level " +
                                std::to_string(spec.from.level));
  }
}

}  // namespace

BigCount enumerate_from_root(const CobwebPoset& poset, std::uint32_t n,
                             const EnumerationOptions& options) {
  if (n == 0) {
    throw std::invalid_argument("root chains need a target level n >= 1");
  }
  return enumerate_from(poset, Vertex{1, 0}, n, options);
}

BigCount enumerate_layer_chains(const CobwebPoset& poset, const LayerSpec& spec,
                                const EnumerationOptions& options) {
  check_layer(spec);
  return enumerate_from(poset, spec.from, spec.to_level, options);
}

void stream_from_root(const CobwebPoset& poset, std::uint32_t n,
                      const ChainVisitor& visit, std::uint64_t limit) {
  if (n == 0) {
    throw std::invalid_argument("root chains need a target level n >= 1");
  }
  stream_from(poset, Vertex{1, 0}, n, visit, limit);
}

void stream_layer_chains(const CobwebPoset& poset, const LayerSpec& spec,
                         const ChainVisitor& visit, std::uint64_t limit) {
  check_layer(spec);
  stream_from(poset, spec.from, spec.to_level, visit, limit);
}

QuotientOutcome evaluate_quotient(std::uint32_t k, std::uint32_t n,
                                  CountMode mode,
                                  const EnumerationOptions& options) {
  QuotientOutcome out;
  if (mode == CountMode::formula) {
    out.layer_chains = count_layer_chains_formula(k, n);
  } else {
    if (k == 0 || k >= n) {
      throw std::invalid_argument("quotient needs 1 <= k < n");
    }
    const CobwebPoset poset(n);
    out.layer_chains =
        enumerate_layer_chains(poset, LayerSpec{Vertex{k, 0}, n}, options);
  }
  // Each P_m-shaped bundle above the fixed vertex carries m_F! maximal chains.
  out.per_copy = fib_factorial(n - k);
  boost::multiprecision::divide_qr(out.layer_chains, out.per_copy, out.quotient,
                                   out.remainder);
  out.fibonomial = fibonomial_factorial_ratio(n, k);
  return out;
}

BigCount obs3_quotient(std::uint32_t k, std::uint32_t n, CountMode mode,
                       const EnumerationOptions& options) {
  QuotientOutcome out = evaluate_quotient(k, n, mode, options);
  if (!out.holds()) {
    throw VerificationFailure(k, n, std::move(out));
  }
  return out.quotient;
}

namespace {

constexpr std::uint64_t kMaxEnumeratedLevel = 24;
constexpr std::uint64_t kAutoEnumeratedLevel = 20;

std::uint64_t count_subsets_by_mask(std::uint64_t size, std::uint64_t choose) {
  std::uint64_t hits = 0;
  const std::uint64_t end = std::uint64_t{1} << size;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (static_cast<std::uint64_t>(std::popcount(mask)) == choose) {
      ++hits;
    }
  }
  return hits;
}

}  // namespace

BigCount induced_copy_count(std::uint32_t k, std::uint32_t n,
                            std::span<const std::uint64_t> profile,
                            CopyCountMethod method) {
  if (k == 0 || k >= n) {
    throw std::invalid_argument("copy count needs 1 <= k < n");
  }
  if (profile.size() != n - k) {
    throw std::invalid_argument("profile must have n - k = " +
                                std::to_string(n - k) + " entries, got " +
                                std::to_string(profile.size()));
  }
  if (n > CobwebPoset::max_depth) {
    throw std::invalid_argument("level n beyond supported depth");
  }
  std::vector<std::uint64_t> sizes;
  sizes.reserve(profile.size());
  for (std::size_t j = 0; j < profile.size(); ++j) {
    const auto level = static_cast<FIndex>(k + j + 1);
    const auto size = fib(level).convert_to<std::uint64_t>();
    if (profile[j] > size) {
      throw std::invalid_argument(
          "profile entry " + std::to_string(j) + " asks for " +
          std::to_string(profile[j]) + " vertices of level " +
          std::to_string(level) + ", which has " + std::to_string(size));
    }
    sizes.push_back(size);
  }

  bool enumerate = method == CopyCountMethod::enumerate;
  if (method == CopyCountMethod::automatic) {
    enumerate = std::all_of(sizes.begin(), sizes.end(), [](std::uint64_t s) {
      return s <= kAutoEnumeratedLevel;
    });
  }
  BigCount total = 1;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (enumerate) {
      if (sizes[j] > kMaxEnumeratedLevel) {
        throw std::invalid_argument("level too large for subset enumeration");
      }
      total *= count_subsets_by_mask(sizes[j], profile[j]);
    } else {
      total *= binomial(sizes[j], profile[j]);
    }
  }
  return total;
}

}  // namespace cobweb
