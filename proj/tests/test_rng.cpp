#include "doctest.h"

#include <cmath>
#include <algorithm>
#include <vector>

#include "cardsim/rng.hpp"

using namespace cardsim::rng;

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

double mean_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v) {
    double m = mean_of(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// Kolmogorov-Smirnov statistic against the standard normal CDF.
double ks_vs_normal(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    double d = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        double f = normal_cdf(v[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

// Simpson quadrature oracle for the half-normal mean:
// E[X | X >= 0] for X ~ N(0,1) = int_0^inf x phi(x) / int_0^inf phi(x).
double half_normal_mean_by_quadrature() {
    auto phi = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); };
    const int steps = 20000;
    const double hi = 12.0;
    const double h = hi / steps;
    double num = 0, den = 0;
    for (int i = 0; i <= steps; ++i) {
        double x = i * h;
        double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        num += w * x * phi(x);
        den += w * phi(x);
    }
    return num / den;
}

}  // namespace

TEST_SUITE("rng") {

TEST_CASE("identical seed and path give identical sequences") {
    auto a = Stream::derive(42, {PathSeg{"consumer", 7, "income"}});
    auto b = Stream::derive(42, {PathSeg{"consumer", 7, "income"}});
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct entity ids give uncorrelated uniforms") {
    auto a = Stream::derive(42, {PathSeg{"consumer", 7, "income"}});
    auto b = Stream::derive(42, {PathSeg{"consumer", 8, "income"}});
    const int n = 100000;
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = a.next_double();
        ys[i] = b.next_double();
    }
    CHECK(std::abs(pearson(xs, ys)) < 0.01);
}

TEST_CASE("distinct purposes and distinct seeds give distinct streams") {
    auto a = Stream::derive(42, {PathSeg{"consumer", 7, "income"}});
    auto b = Stream::derive(42, {PathSeg{"consumer", 7, "fico"}});
    auto c = Stream::derive(1, {PathSeg{"consumer", 7, "income"}});
    auto d = Stream::derive(2, {PathSeg{"consumer", 7, "income"}});
    CHECK(a.next_u64() != b.next_u64());
    CHECK(c.next_u64() != d.next_u64());
}

TEST_CASE("fork matches derive with the extended path") {
    auto parent = Stream::derive(9, {PathSeg{"consumer", 3, ""}});
    auto via_fork = parent.fork("card", 2, "pan");
    parent.next_u64();  // draws must not affect children
    auto via_fork_after = parent.fork("card", 2, "pan");
    auto direct = Stream::derive(9, {PathSeg{"consumer", 3, ""}, PathSeg{"card", 2, "pan"}});
    uint64_t v = direct.next_u64();
    CHECK(via_fork.next_u64() == v);
    CHECK(via_fork_after.next_u64() == v);
}

TEST_CASE("gaussian degenerate and moment checks") {
    auto s = Stream::derive(5, {PathSeg{"test", 0, "gauss"}});
    for (int i = 0; i < 10; ++i) CHECK(s.gaussian(5.0, 0.0) == 5.0);

    const int n = 1000000;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = s.gaussian(712.0, 60.0);
    CHECK(mean_of(v) == doctest::Approx(712.0).epsilon(0.0003));  // +-0.2
    CHECK(std::abs(mean_of(v) - 712.0) < 0.2);
    CHECK(std::abs(stddev_of(v) - 60.0) < 0.2);

    CHECK_THROWS_AS(s.gaussian(0.0, -1.0), ParamError);
}

TEST_CASE("gaussian passes a KS test") {
    auto s = Stream::derive(11, {PathSeg{"test", 0, "ks"}});
    std::vector<double> v(100000);
    for (auto& x : v) x = s.gaussian(0.0, 1.0);
    CHECK(ks_vs_normal(std::move(v)) < 0.01);
}

TEST_CASE("truncated gaussian respects bounds") {
    auto s = Stream::derive(13, {PathSeg{"test", 0, "trunc"}});
    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10000; ++i) CHECK(s.truncated_gaussian(0.0, 1.0, 0.0, inf) >= 0.0);
    CHECK(s.truncated_gaussian(5.0, 0.0, 0.0, 10.0) == 5.0);
    CHECK_THROWS_AS(s.truncated_gaussian(0.0, 1.0, 3.0, 3.0), ParamError);
}

TEST_CASE("half-normal mean matches the quadrature oracle") {
    double oracle = half_normal_mean_by_quadrature();
    CHECK(oracle == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-9));

    auto s = Stream::derive(17, {PathSeg{"test", 0, "halfnormal"}});
    const double inf = std::numeric_limits<double>::infinity();
    const int n = 100000;
    double sum = 0;
    for (int i = 0; i < n; ++i) sum += s.truncated_gaussian(0.0, 1.0, 0.0, inf);
    CHECK(std::abs(sum / n - oracle) < 0.01);
}

TEST_CASE("individualize endpoints") {
    PopulationDistribution pop{100.0, 20.0, 0.0};
    auto s = Stream::derive(19, {PathSeg{"test", 0, "indiv"}});
    auto d0 = individualize(pop, s);
    CHECK(d0.indiv_mean == 100.0);  // no between-individual variance
    CHECK(d0.indiv_std == 20.0);

    pop.spread_fraction = 1.0;
    auto d1 = individualize(pop, s);
    CHECK(d1.indiv_std == 0.0);
    auto ev = Stream::derive(19, {PathSeg{"test", 1, "events"}});
    double first = ev.gaussian(d1.indiv_mean, d1.indiv_std);
    for (int i = 0; i < 5; ++i) CHECK(ev.gaussian(d1.indiv_mean, d1.indiv_std) == first);
}

TEST_CASE("variance decomposition at spread 0.5 within Monte Carlo tolerance") {
    // Oracle: law of total variance. 1000 individuals x 1000 events.
    PopulationDistribution pop{100.0, 20.0, 0.5};
    const int individuals = 1000, events = 1000;
    auto root = Stream::derive(24, {PathSeg{"test", 0, "vardecomp"}});
    std::vector<double> means(individuals);
    double pooled_m = 0, pooled_m2 = 0;
    double within_var_sum = 0;
    for (int i = 0; i < individuals; ++i) {
        auto si = root.fork("individual", static_cast<uint64_t>(i));
        auto d = individualize(pop, si);
        double m = 0, m2 = 0;
        for (int e = 0; e < events; ++e) {
            double x = si.gaussian(d.indiv_mean, d.indiv_std);
            m += x;
            m2 += x * x;
            pooled_m += x;
            pooled_m2 += x * x;
        }
        m /= events;
        means[i] = m;
        within_var_sum += (m2 - events * m * m) / (events - 1);
    }
    const double total = static_cast<double>(individuals) * events;
    pooled_m /= total;
    double pooled_var = (pooled_m2 - total * pooled_m * pooled_m) / (total - 1);
    double pooled_std = std::sqrt(pooled_var);
    double between_std = stddev_of(means);

    CHECK(std::abs(pooled_std - 20.0) < 0.5);
    // Var of individual means includes the within-noise term sigma_w^2/events.
    double expected_between = std::sqrt(0.5 * 400.0 + 0.5 * 400.0 / events);
    CHECK(std::abs(between_std - expected_between) < 0.5);
    CHECK(std::abs(between_std - std::sqrt(200.0)) < 0.5);

    // Law of total variance at 3 sigma of the pooled variance estimator.
    double mean_within = within_var_sum / individuals;
    double reconstructed = (between_std * between_std - mean_within / events) + mean_within;
    double est_sd = std::sqrt(2.0 / (total - 1)) * pooled_var;
    CHECK(std::abs(pooled_var - reconstructed) < 3.0 * est_sd + 3.0 * std::sqrt(2.0 / (individuals - 1)) * 200.0);
}

TEST_CASE("no per-event redraw from population parameters") {
    // spread 0.9: one individual's event std must be well below the population std.
    PopulationDistribution pop{100.0, 20.0, 0.9};
    auto s = Stream::derive(29, {PathSeg{"test", 0, "noredraw"}});
    auto d = individualize(pop, s);
    std::vector<double> v(20000);
    for (auto& x : v) x = s.gaussian(d.indiv_mean, d.indiv_std);
    CHECK(stddev_of(v) < 0.5 * pop.std_dev);
}

TEST_CASE("poisson mean and exponential sanity") {
    auto s = Stream::derive(31, {PathSeg{"test", 0, "poisson"}});
    const int n = 20000;
    double lam = 47.5;  // exercises the chunked path
    double sum = 0;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(s.poisson(lam));
    double se = std::sqrt(lam / n);
    CHECK(std::abs(sum / n - lam) < 4 * se);
    CHECK(s.poisson(0.0) == 0);

    double esum = 0;
    for (int i = 0; i < n; ++i) esum += s.exponential(2.0);
    CHECK(std::abs(esum / n - 0.5) < 4 * 0.5 / std::sqrt(n));
}

TEST_CASE("inverse normal cdf inverts the cdf") {
    for (double p : {1e-9, 1e-4, 0.02425, 0.3, 0.5, 0.84, 0.99, 1.0 - 1e-9}) {
        double x = inverse_normal_cdf(p);
        CHECK(normal_cdf(x) == doctest::Approx(p).epsilon(1e-10));
    }
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), ParamError);
}

TEST_CASE("categorical and uniform_index behave") {
    auto s = Stream::derive(37, {PathSeg{"test", 0, "cat"}});
    std::vector<double> w{0.0, 3.0, 1.0};
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 40000; ++i) counts[s.categorical(w)]++;
    CHECK(counts[0] == 0);
    CHECK(std::abs(counts[1] / 40000.0 - 0.75) < 0.01);
    CHECK_THROWS_AS(s.categorical(std::vector<double>{0.0, 0.0}), ParamError);
    CHECK_THROWS_AS(s.uniform_index(0), ParamError);
    for (int i = 0; i < 100; ++i) CHECK(s.uniform_index(7) < 7);
}

}  // TEST_SUITE
