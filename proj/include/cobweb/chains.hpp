#ifndef COBWEB_CHAINS_HPP
#define COBWEB_CHAINS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cobweb/fibcalc.hpp"
#include "cobweb/poset.hpp"

namespace cobweb {

/// Default cap on the number of chains an enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 100'000'000;

/// Saturated chain: one vertex per level over a contiguous level range,
/// consecutive entries are cover pairs.
struct Chain {
  std::vector<Vertex> vertices;
};

/// Chains from a fixed vertex at level k up to level n = k + m.
struct LayerSpec {
  Vertex from;
  std::uint32_t to_level = 0;

  std::uint32_t m() const noexcept { return to_level - from.level; }
};

struct EnumerationOptions {
  std::uint64_t limit = kDefaultEnumerationLimit;
  /// Workers splitting the first-level branches; the count never depends on it.
  unsigned threads = 1;
};

/// Enumeration refused because the predicted chain count exceeds the limit.
class GuardRefusal : public std::runtime_error {
 public:
  GuardRefusal(BigCount predicted, std::uint64_t limit);

  const BigCount& predicted() const noexcept { return predicted_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  BigCount predicted_;
  std::uint64_t limit_;
};

using ChainVisitor = std::function<void(std::span<const Vertex>)>;

// Closed forms.

/// n_F!, the number of maximal chains from the root to level n.
/// Throws std::invalid_argument for n = 0.
BigCount count_from_root_formula(std::uint32_t n);

/// falling_f_factorial(n, n - k). Throws std::invalid_argument unless
/// 1 <= k < n.
BigCount count_layer_chains_formula(std::uint32_t k, std::uint32_t n);

// Enumeration oracles. These walk the poset's cover relation depth-first
// (levels ascending, next vertex by ascending index) and count leaves; they
// never consult the closed forms except to apply the guard.

BigCount enumerate_from_root(const CobwebPoset& poset, std::uint32_t n,
                             const EnumerationOptions& options = {});

BigCount enumerate_layer_chains(const CobwebPoset& poset, const LayerSpec& spec,
                                const EnumerationOptions& options = {});

/// Streams every chain from the root to level n, in traversal order.
void stream_from_root(const CobwebPoset& poset, std::uint32_t n,
                      const ChainVisitor& visit,
                      std::uint64_t limit = kDefaultEnumerationLimit);

void stream_layer_chains(const CobwebPoset& poset, const LayerSpec& spec,
                         const ChainVisitor& visit,
                         std::uint64_t limit = kDefaultEnumerationLimit);

// Fibonomial as a chain quotient.

enum class CountMode { formula, enumerate };

/// Numbers behind one evaluation of the chain-quotient identity.
struct QuotientOutcome {
  BigCount layer_chains;   ///< C: chains from a level-k vertex to level n
  BigCount per_copy;       ///< D: (n-k)_F!
  BigCount quotient;       ///< floor(C / D)
  BigCount remainder;      ///< C mod D
  BigCount fibonomial;     ///< fibonomial(n, k), evaluated independently

  bool holds() const { return remainder == 0 && quotient == fibonomial; }
};

/// Thrown by obs3_quotient when the identity fails; carries all numbers.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(std::uint32_t k, std::uint32_t n, QuotientOutcome outcome);

  const QuotientOutcome& outcome() const noexcept { return outcome_; }

 private:
  QuotientOutcome outcome_;
};

/// Evaluates C, D and C / D without throwing on a mismatch. In enumerate mode
/// C is counted on P_n from vertex (k, 0). Throws std::invalid_argument unless
/// 1 <= k < n, and GuardRefusal when enumeration is refused.
QuotientOutcome evaluate_quotient(std::uint32_t k, std::uint32_t n,
                                  CountMode mode,
                                  const EnumerationOptions& options = {});

/// Returns C / D after checking the division is exact and equals
/// fibonomial(n, k); throws VerificationFailure otherwise.
BigCount obs3_quotient(std::uint32_t k, std::uint32_t n, CountMode mode,
                       const EnumerationOptions& options = {});

// Induced-copy diagnostic.

enum class CopyCountMethod { automatic, enumerate, product };

/// Ways to pick, at each level k+1..n, a subset of the ambient level whose
/// size is given by profile[j] (j = 0 is level k+1). Enumeration brute-forces
/// subsets per level and is limited to levels of at most 24 vertices;
/// automatic picks it when every level has at most 20.
///
/// Throws std::invalid_argument unless 1 <= k < n, profile.size() == n - k
/// and profile[j] <= F_{k+j+1}.
BigCount induced_copy_count(std::uint32_t k, std::uint32_t n,
                            std::span<const std::uint64_t> profile,
                            CopyCountMethod method = CopyCountMethod::automatic);

// Sweeps.

enum class Observation { obs1, obs2, obs3 };

std::string observation_id(Observation obs);

/// Parses "1", "2", "3", "obs1", "obs2" or "obs3".
std::optional<Observation> parse_observation(std::string_view text);

struct VerificationCase {
  Observation observation = Observation::obs1;
  std::uint32_t k = 1;
  std::uint32_t n = 1;
  /// Obs2: the fixed start vertex. Obs3: unset.
  std::optional<Vertex> start;
  /// Obs3 only.
  std::optional<CountMode> mode;
  BigCount formula;
  BigCount oracle;
  bool pass = true;
};

class VerificationReport {
 public:
  VerificationReport(Observation observation, std::uint32_t max_n)
      : observation_(observation), max_n_(max_n) {}

  void add(VerificationCase c);

  Observation observation() const noexcept { return observation_; }
  std::uint32_t max_n() const noexcept { return max_n_; }
  const std::vector<VerificationCase>& cases() const noexcept { return cases_; }
  const std::vector<VerificationCase>& counterexamples() const noexcept {
    return counterexamples_;
  }
  bool passed() const noexcept { return counterexamples_.empty(); }

 private:
  Observation observation_;
  std::uint32_t max_n_;
  std::vector<VerificationCase> cases_;
  std::vector<VerificationCase> counterexamples_;
};

/// Obs1: root chains for n = 1..max_n. Obs2: every (k, n, start vertex) with
/// 1 <= k < n <= max_n. Obs3: the quotient identity in enumerate mode for
/// n <= max_n and formula mode for n <= 3 max_n.
///
/// Mismatches are recorded, not thrown. GuardRefusal propagates.
VerificationReport verify_observation(Observation obs, std::uint32_t max_n,
                                      const EnumerationOptions& options = {});

/// Line-oriented key=value rendering, one line per case followed by a
/// summary line. Obs2 cases are folded per (k, n).
std::string to_structured(const VerificationReport& report);

}  // namespace cobweb

#endif  // COBWEB_CHAINS_HPP
