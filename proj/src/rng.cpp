#include "cardsim/rng.hpp"

#include <bit>
#include <cmath>

namespace cardsim::rng {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;

// SplitMix64 finalizer (Stafford mix13).
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

constexpr uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

struct KeyPair {
    uint64_t k;
    uint64_t g;
};

KeyPair fold(KeyPair in, uint64_t a, uint64_t b, uint64_t c) {
    KeyPair out;
    out.k = mix64(mix64(mix64(in.k ^ a) + b * kGolden) ^ c);
    out.g = mix64(mix64(mix64(in.g + a) ^ (b + kGolden)) + c);
    return out;
}

}  // namespace

uint64_t Stream::fix_gamma(uint64_t g) {
    g |= 1ull;
    // Gammas with too few bit transitions give weak low-entropy sequences
    // (same fixup as SplittableRandom).
    if (std::popcount(g ^ (g >> 1)) < 24) g ^= 0xaaaaaaaaaaaaaaaaull;
    return g;
}

Stream Stream::derive(uint64_t master_seed, std::span<const PathSeg> path) {
    KeyPair kp{mix64(master_seed ^ kGolden), mix64(master_seed + 0x6a09e667f3bcc909ull)};
    for (const PathSeg& seg : path) {
        kp = fold(kp, fnv1a(seg.kind), seg.id, fnv1a(seg.purpose));
    }
    return Stream(kp.k, kp.g);
}

Stream Stream::fork(std::string_view kind, uint64_t id, std::string_view purpose) const {
    KeyPair kp = fold({key_, gamma_}, fnv1a(kind), id, fnv1a(purpose));
    return Stream(kp.k, kp.g);
}

Stream Stream::fork_index(uint64_t a, uint64_t b) const {
    KeyPair kp = fold({key_, gamma_}, a * 0xff51afd7ed558ccdull, a, b);
    return Stream(kp.k, kp.g);
}

uint64_t Stream::next_u64() {
    counter_ += 1;
    return mix64(key_ + counter_ * gamma_);
}

double Stream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Stream::uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

uint64_t Stream::uniform_index(uint64_t n) {
    if (n == 0) throw ParamError("uniform_index: n must be > 0");
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

bool Stream::bernoulli(double p) { return next_double() < p; }

double Stream::gaussian(double mean, double std_dev) {
    if (std_dev < 0.0) throw ParamError("gaussian: negative std");
    if (std_dev == 0.0) {
        next_u64();  // keep the draw count shape-independent of parameters
        next_u64();
        return mean;
    }
    // Box-Muller, cosine branch; u1 in (0,1] avoids log(0).
    double u1 = 1.0 - next_double();
    double u2 = next_double();
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    return mean + z * std_dev;
}

double Stream::truncated_gaussian(double mean, double std_dev, double lo, double hi) {
    if (!(lo < hi)) throw ParamError("truncated_gaussian: lo must be < hi");
    if (std_dev < 0.0) throw ParamError("truncated_gaussian: negative std");
    if (std_dev == 0.0) {
        double v = mean;
        return v < lo ? lo : (v > hi ? hi : v);
    }
    for (int attempt = 0; attempt < 100; ++attempt) {
        double v = gaussian(mean, std_dev);
        if (v >= lo && v <= hi) return v;
    }
    double v = gaussian(mean, std_dev);
    return v < lo ? lo : (v > hi ? hi : v);
}

double Stream::lognormal_from_median(double median, double log_std) {
    if (median <= 0.0) throw ParamError("lognormal_from_median: median must be > 0");
    return median * std::exp(gaussian(0.0, log_std));
}

double Stream::exponential(double rate) {
    if (rate <= 0.0) throw ParamError("exponential: rate must be > 0");
    return -std::log(1.0 - next_double()) / rate;
}

uint64_t Stream::poisson(double mean) {
    if (mean < 0.0) throw ParamError("poisson: negative mean");
    uint64_t total = 0;
    // Sum of independent Poissons is Poisson; chunking keeps Knuth's product
    // method away from underflow at large means.
    while (mean > 30.0) {
        total += poisson(30.0);
        mean -= 30.0;
    }
    if (mean == 0.0) return total;
    double limit = std::exp(-mean);
    double prod = 1.0;
    uint64_t k = 0;
    do {
        ++k;
        prod *= next_double();
    } while (prod > limit);
    return total + (k - 1);
}

size_t Stream::categorical(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ParamError("categorical: negative weight");
        total += w;
    }
    if (total <= 0.0) throw ParamError("categorical: weights sum to zero");
    double target = next_double() * total;
    double acc = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (target < acc) return i;
    }
    return weights.size() - 1;
}

IndividualDistribution individualize(const PopulationDistribution& pop, Stream& s) {
    if (pop.std_dev < 0.0) throw ParamError("individualize: negative std");
    if (pop.spread_fraction < 0.0 || pop.spread_fraction > 1.0)
        throw ParamError("individualize: spread_fraction outside [0,1]");
    double between_std = std::sqrt(pop.spread_fraction) * pop.std_dev;
    double within_std = std::sqrt(1.0 - pop.spread_fraction) * pop.std_dev;
    return IndividualDistribution{s.gaussian(pop.mean, between_std), within_std};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw ParamError("inverse_normal_cdf: p outside (0,1)");

    // Acklam's rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Two Newton refinements against erfc-based CDF.
    for (int i = 0; i < 2; ++i) {
        double e = normal_cdf(x) - p;
        double density = 0.3989422804014326779 * std::exp(-0.5 * x * x);
        if (density <= 0.0) break;
        x -= e / density;
    }
    return x;
}

}  // namespace cardsim::rng
