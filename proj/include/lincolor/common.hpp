#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lincolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotATreeError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct BudgetExceededError : Error {
    std::uint64_t nodes;
    explicit BudgetExceededError(std::uint64_t nodes_searched)
        : Error("search budget exceeded after " + std::to_string(nodes_searched) + " nodes"),
          nodes(nodes_searched) {}
};

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::optional<double> max_ms = std::nullopt;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool budget_hit = false;
};

// Budget bookkeeping shared by the exhaustive searches. Wall-clock is only
// sampled every 64k nodes to keep the hot loops cheap.
class BudgetMeter {
  public:
    explicit BudgetMeter(SearchBudget budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    // Returns false once the budget is exhausted.
    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) return false;
        if (budget_.max_ms && (nodes_ & 0xffffu) == 0) {
            auto now = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(now - start_).count();
            if (ms > *budget_.max_ms) return false;
        }
        return true;
    }

    void tick_or_throw() {
        if (!tick()) throw BudgetExceededError(nodes_);
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// Seeded generator with a platform-independent bounded draw (std::mt19937_64
// is fully specified by the standard, the distributions are not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw PreconditionError("Rng::below: bound must be positive");
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  private:
    std::uint64_t state_;
};

}  // namespace lincolor
