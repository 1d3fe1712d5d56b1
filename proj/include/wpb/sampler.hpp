#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wpb/eval_point.hpp"

namespace wpb {

/// splitmix64 stream.  Self-contained so that point streams are reproducible
/// across compilers and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [1, hi] by rejection; hi >= 1.
    long bounded(long hi) {
        auto range = static_cast<std::uint64_t>(hi);
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return static_cast<long>(v % range) + 1;
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

/// Mix a base seed with per-trial coordinates into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag, long n, long trial);

struct SamplerConfig {
    std::uint64_t seed = 1;
    long max_numerator = 9;
    long max_denominator = 9;
    /// Nonzero: every sampled symbol v satisfies 0 < v <= magnitude_cap
    /// (interval backend; signs suppressed so series/product bounds behave).
    Rational magnitude_cap = 0;
    long max_retries = 20000;
};

using PolePredicate = std::function<std::optional<std::string>(const EvalPoint&)>;

/// Draw a pole-free point for the given root symbols.  Deterministic in
/// (config.seed, symbols): identical seeds yield identical point streams.
/// The predicate returns the name of a vanishing denominator factor to
/// reject a candidate, or nullopt to accept.  Throws SamplerError once
/// max_retries candidates have been rejected.
EvalPoint sample_point(const SamplerConfig& config,
                       const std::vector<std::string>& symbols,
                       const PolePredicate& reject = {});

} // namespace wpb
