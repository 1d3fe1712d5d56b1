#include "wpb/sampler.hpp"

namespace wpb {

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag, long n, long trial) {
    // FNV-1a over the tag, then splitmix whitening of all coordinates.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    Rng mix(seed ^ h);
    mix.next();
    std::uint64_t a = mix.next() + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n + 1);
    Rng mix2(a);
    return mix2.next() + 0x94d049bb133111ebULL * static_cast<std::uint64_t>(trial + 1);
}

EvalPoint sample_point(const SamplerConfig& config,
                       const std::vector<std::string>& symbols,
                       const PolePredicate& reject) {
    Rng rng(config.seed);
    std::string last_reason = "predicate rejected every candidate";
    for (long attempt = 0; attempt < config.max_retries; ++attempt) {
        EvalPoint p;
        for (const auto& name : symbols) {
            long num = rng.bounded(config.max_numerator);
            long den = rng.bounded(config.max_denominator);
            Rational v = make_rational(num, den);
            if (config.magnitude_cap != 0) {
                // v in (0, cap]: scale num/(num+den) into the cap.
                v = Rational(num) / Rational(num + den) * config.magnitude_cap;
                v.canonicalize();
            } else if (rng.coin()) {
                v = -v;
            }
            p.set(name, ExactScalar(v));
        }
        if (!reject) return p;
        auto why = reject(p);
        if (!why) return p;
        last_reason = *why;
    }
    throw SamplerError("sample_point: max_retries (" + std::to_string(config.max_retries) +
                       ") exhausted; last rejection: " + last_reason);
}

} // namespace wpb
