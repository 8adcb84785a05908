#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "cardsim/correlate.hpp"

using namespace cardsim;
using namespace cardsim::correlate;

namespace {

// Independent eigenvalue oracle: cyclic Jacobi rotations on a symmetric
// matrix, no Eigen involved.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-18) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

double min_eigenvalue_oracle(const Eigen::MatrixXd& m) {
    std::vector<std::vector<double>> a(static_cast<size_t>(m.rows()),
                                       std::vector<double>(static_cast<size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
    auto ev = jacobi_eigenvalues(std::move(a));
    return *std::min_element(ev.begin(), ev.end());
}

double empirical_rho(const Eigen::MatrixXd& data, int i, int j) {
    Eigen::VectorXd a = data.col(i).array() - data.col(i).mean();
    Eigen::VectorXd b = data.col(j).array() - data.col(j).mean();
    return a.dot(b) / std::sqrt(a.squaredNorm() * b.squaredNorm());
}

double spearman(std::span<const double> x, std::span<const double> y) {
    auto ranks = [](std::span<const double> v) {
        std::vector<size_t> order(v.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return v[a] < v[b] || (v[a] == v[b] && a < b);
        });
        std::vector<double> r(v.size());
        for (size_t k = 0; k < order.size(); ++k) r[order[k]] = static_cast<double>(k);
        return r;
    };
    auto rx = ranks(x), ry = ranks(y);
    double n = static_cast<double>(x.size());
    double mean = (n - 1) / 2.0;
    double sxy = 0, sxx = 0;
    for (size_t k = 0; k < x.size(); ++k) {
        sxy += (rx[k] - mean) * (ry[k] - mean);
        sxx += (rx[k] - mean) * (rx[k] - mean);
    }
    return sxy / sxx;
}

Eigen::MatrixXd gaussian_columns(int n, int k, uint64_t seed) {
    auto s = rng::Stream::derive(seed, {rng::PathSeg{"test", 0, "columns"}});
    Eigen::MatrixXd m(n, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r) m(r, c) = s.gaussian(0.0, 1.0);
    return m;
}

}  // namespace

TEST_SUITE("correlate") {

TEST_CASE("single specified pair over 3 attributes is already PSD") {
    CorrelationSpec spec;
    spec.attribute_names = {"A", "B", "C"};
    spec.add("A", "B", 0.5);
    auto res = complete_to_psd(spec);
    Eigen::MatrixXd expected(3, 3);
    expected << 1, 0.5, 0, 0.5, 1, 0, 0, 0, 1;
    CHECK((res.matrix - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(res.max_deviation < 1e-12);
}

TEST_CASE("empty spec completes to the identity") {
    CorrelationSpec spec;
    spec.attribute_names = {"A", "B", "C", "D"};
    auto res = complete_to_psd(spec);
    CHECK((res.matrix - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("contradictory triple is repaired to PSD and flagged") {
    CorrelationSpec spec;
    spec.attribute_names = {"A", "B", "C"};
    spec.add("A", "B", 0.9);
    spec.add("B", "C", 0.9);
    spec.add("A", "C", -0.9);

    auto res = repair_to_psd(spec);
    CHECK(min_eigenvalue_oracle(res.matrix) >= -1e-8);
    CHECK(res.max_deviation > 0.0);
    // Eigenvalue clipping of this triple lands on +-0.5 entries.
    CHECK(res.matrix(0, 1) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(res.max_deviation == doctest::Approx(0.4).epsilon(1e-9));

    // Movement beyond 0.2 is a config-time contradiction.
    CHECK_THROWS_WITH_AS(complete_to_psd(spec),
                         doctest::Contains("contradictory"), CalibrationError);
}

TEST_CASE("mild spec survives the contradiction gate") {
    CorrelationSpec spec;
    spec.attribute_names = {"A", "B", "C"};
    spec.add("A", "B", 0.6);
    spec.add("B", "C", 0.6);
    spec.add("A", "C", 0.0);
    auto res = complete_to_psd(spec);
    CHECK(min_eigenvalue_oracle(res.matrix) >= -1e-8);
    CHECK(res.max_deviation <= 0.05);
}

TEST_CASE("impose_correlation with target equal to empirical is the identity") {
    auto data = gaussian_columns(5000, 4, 101);
    auto m = AttributeMatrix::from_data({"a", "b", "c", "d"}, data);
    Eigen::MatrixXd z = data;
    for (int c = 0; c < 4; ++c) z.col(c) = (z.col(c).array() - m.means(c)) / m.stds(c);
    Eigen::MatrixXd emp = (z.transpose() * z) / 4999.0;
    auto out = impose_correlation(m, emp);
    CHECK((out.data - data).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("impose_correlation hits the target and preserves moments") {
    auto data = gaussian_columns(10000, 2, 7);
    auto m = AttributeMatrix::from_data({"x", "y"}, data);
    Eigen::MatrixXd target(2, 2);
    target << 1.0, 0.5, 0.5, 1.0;
    auto out = impose_correlation(m, target);
    CHECK(std::abs(empirical_rho(out.data, 0, 1) - 0.5) < 1e-6);
    for (int c = 0; c < 2; ++c) {
        CHECK(std::abs(out.data.col(c).mean() - data.col(c).mean()) < 1e-6);
        auto recomputed = AttributeMatrix::from_data({"t"}, out.data.col(c));
        CHECK(std::abs(recomputed.stds(0) - m.stds(c)) / m.stds(c) < 1e-6);
    }
}

TEST_CASE("identity target decorrelates") {
    auto data = gaussian_columns(8000, 3, 9);
    // Give the input some correlation first.
    data.col(1) = 0.7 * data.col(0) + 0.3 * data.col(1);
    auto m = AttributeMatrix::from_data({"a", "b", "c"}, data);
    auto out = impose_correlation(m, Eigen::MatrixXd::Identity(3, 3));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(std::abs(empirical_rho(out.data, i, j)) < 1e-6);
}

TEST_CASE("impose_correlation is idempotent") {
    auto data = gaussian_columns(6000, 3, 13);
    auto m = AttributeMatrix::from_data({"a", "b", "c"}, data);
    Eigen::MatrixXd target(3, 3);
    target << 1, 0.4, 0.1, 0.4, 1, -0.2, 0.1, -0.2, 1;
    auto once = impose_correlation(m, target);
    auto twice = impose_correlation(AttributeMatrix::from_data(once.names, once.data), target);
    CHECK((twice.data - once.data).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("impose_correlation error paths") {
    auto data = gaussian_columns(100, 2, 17);
    data.col(1).setConstant(3.0);
    auto m = AttributeMatrix::from_data({"good", "flat"}, data);
    CHECK_THROWS_WITH_AS(impose_correlation(m, Eigen::MatrixXd::Identity(2, 2)),
                         doctest::Contains("flat"), DataError);

    auto ok = AttributeMatrix::from_data({"a", "b"}, gaussian_columns(100, 2, 19));
    Eigen::MatrixXd bad(2, 2);
    bad << 1.0, 1.2, 1.2, 1.0;  // eigenvalues -0.2, 2.2
    CHECK_THROWS_AS(impose_correlation(ok, bad), DataError);

    auto tiny = AttributeMatrix::from_data({"a", "b"}, gaussian_columns(2, 2, 23));
    CHECK_THROWS_AS(impose_correlation(tiny, Eigen::MatrixXd::Identity(2, 2)), DataError);
}

TEST_CASE("monotone_couple endpoints") {
    auto s = rng::Stream::derive(31, {rng::PathSeg{"test", 0, "couple"}});
    const int n = 10000;
    std::vector<double> driver(n);
    for (auto& d : driver) d = s.gaussian(50.0, 10.0);
    rng::PopulationDistribution resp{10.0, 2.0, 0.5};

    auto ind = monotone_couple(driver, resp, 0.0, s);
    CHECK(std::abs(spearman(driver, ind)) < 0.03);

    auto full = monotone_couple(driver, resp, 1.0, s);
    CHECK(spearman(driver, full) == doctest::Approx(1.0));
}

TEST_CASE("monotone_couple mid strength hits the band and keeps moments") {
    auto s = rng::Stream::derive(37, {rng::PathSeg{"test", 0, "couple06"}});
    const int n = 10000;
    std::vector<double> driver(n);
    for (auto& d : driver) d = s.gaussian(0.0, 1.0);
    rng::PopulationDistribution resp{100.0, 15.0, 0.5};
    auto out = monotone_couple(driver, resp, 0.6, s);
    double rho = spearman(driver, out);
    CHECK(rho > 0.4);
    CHECK(rho < 0.8);
    double m = 0;
    for (double v : out) m += v;
    m /= n;
    double var = 0;
    for (double v : out) var += (v - m) * (v - m);
    double sd = std::sqrt(var / (n - 1));
    CHECK(std::abs(m - 100.0) < 3.0 * 15.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sd - 15.0) < 3.0 * 15.0 / std::sqrt(2.0 * n));
}

TEST_CASE("monotone_couple marginal multiset is strength-invariant") {
    const int n = 2000;
    std::vector<double> d1(n), d2(n);
    auto ds = rng::Stream::derive(41, {rng::PathSeg{"test", 0, "drivers"}});
    for (auto& v : d1) v = ds.next_double();
    for (auto& v : d2) v = ds.next_double();
    rng::PopulationDistribution resp{5.0, 1.0, 0.5};

    auto sa = rng::Stream::derive(43, {rng::PathSeg{"test", 0, "marg"}});
    auto sb = rng::Stream::derive(43, {rng::PathSeg{"test", 0, "marg"}});
    auto a = monotone_couple(d1, resp, 0.3, sa);
    auto b = monotone_couple(d2, resp, 0.9, sb);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

}  // TEST_SUITE
