#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace arbor {

/// Limits for an exact search. Zero / empty means unlimited.
struct SearchBudget {
  std::optional<std::chrono::milliseconds> time;
  std::uint64_t nodes = 0;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget millis(long ms) { return {std::chrono::milliseconds(ms), 0}; }
  static SearchBudget node_count(std::uint64_t n) { return {std::nullopt, n}; }
};

/// Tracks consumption of a SearchBudget during one search.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Charges one search node; returns false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.nodes != 0 && nodes_ > budget_.nodes) exhausted_ = true;
    if (budget_.time && (nodes_ & 0x3FF) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.time) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

enum class ProofMode {
  exhausted_search,  // every smaller value was refuted by search
  bound_met,         // a lower bound equals the certificate's value
  budget_exhausted,  // only the interval [lower, upper] is known
};

const char* to_string(ProofMode m);

/// Result of an exact computation. When `exact()` is false only the interval
/// [lower, upper] is known and `certificate` (if any) realizes `upper`.
template <typename Certificate>
struct ExactResult {
  int lower = 0;
  int upper = 0;
  ProofMode mode = ProofMode::exhausted_search;
  std::optional<Certificate> certificate;

  bool exact() const { return mode != ProofMode::budget_exhausted && lower == upper; }
  int value() const { return upper; }
};

}  // namespace arbor
