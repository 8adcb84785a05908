#include "cardsim/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cardsim::correlate {

void CorrelationSpec::add(int i, int j, double rho) {
    if (i == j) throw DataError("correlation spec: diagonal entries are implicit");
    if (rho < -1.0 || rho > 1.0)
        throw DataError("correlation spec: rho outside [-1,1] for (" +
                        attribute_names[static_cast<size_t>(i)] + ", " +
                        attribute_names[static_cast<size_t>(j)] + ")");
    for (const Entry& e : entries) {
        if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) {
            if (e.rho != rho) throw DataError("correlation spec: conflicting duplicate entry");
            return;
        }
    }
    entries.push_back(Entry{i, j, rho});
}

void CorrelationSpec::add(const std::string& a, const std::string& b, double rho) {
    int i = index_of(a);
    int j = index_of(b);
    if (i < 0) throw DataError("correlation spec: unknown attribute '" + a + "'");
    if (j < 0) throw DataError("correlation spec: unknown attribute '" + b + "'");
    add(i, j, rho);
}

int CorrelationSpec::index_of(const std::string& name) const {
    for (size_t k = 0; k < attribute_names.size(); ++k)
        if (attribute_names[k] == name) return static_cast<int>(k);
    return -1;
}

PsdResult repair_to_psd(const CorrelationSpec& spec) {
    const int n = static_cast<int>(spec.attribute_names.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (const auto& e : spec.entries) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n)
            throw DataError("correlation spec: entry index out of range");
        m(e.i, e.j) = e.rho;
        m(e.j, e.i) = e.rho;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.eigenvalues().minCoeff() < 0.0) {
        Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
        m = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
        Eigen::VectorXd scale = m.diagonal().cwiseSqrt().cwiseInverse();
        m = scale.asDiagonal() * m * scale.asDiagonal();
        m = 0.5 * (m + m.transpose().eval());
        m.diagonal().setOnes();
    }

    PsdResult res{std::move(m), 0.0};
    for (const auto& e : spec.entries) {
        double dev = std::abs(res.matrix(e.i, e.j) - e.rho);
        if (dev > res.max_deviation) res.max_deviation = dev;
    }
    return res;
}

PsdResult complete_to_psd(const CorrelationSpec& spec) {
    PsdResult res = repair_to_psd(spec);
    if (res.max_deviation > 0.2) {
        for (const auto& e : spec.entries) {
            double dev = std::abs(res.matrix(e.i, e.j) - e.rho);
            if (dev == res.max_deviation)
                throw CalibrationError(
                    "correlation spec is contradictory: PSD repair moved (" +
                    spec.attribute_names[static_cast<size_t>(e.i)] + ", " +
                    spec.attribute_names[static_cast<size_t>(e.j)] + ") by " +
                    std::to_string(dev));
        }
    }
    return res;
}

AttributeMatrix AttributeMatrix::from_data(std::vector<std::string> names, Eigen::MatrixXd data) {
    AttributeMatrix m;
    m.names = std::move(names);
    const auto n = static_cast<double>(data.rows());
    m.means = data.colwise().mean();
    m.stds.resize(data.cols());
    for (Eigen::Index c = 0; c < data.cols(); ++c) {
        double var = (data.col(c).array() - m.means(c)).square().sum() / (n - 1.0);
        m.stds(c) = std::sqrt(var);
    }
    m.data = std::move(data);
    return m;
}

AttributeMatrix impose_correlation(const AttributeMatrix& input, const Eigen::MatrixXd& target) {
    const Eigen::Index n = input.data.rows();
    const Eigen::Index k = input.data.cols();
    if (n <= k) throw DataError("impose_correlation: need more individuals than attributes");
    if (target.rows() != k || target.cols() != k)
        throw DataError("impose_correlation: target dimension mismatch");

    for (Eigen::Index c = 0; c < k; ++c) {
        if (!(input.stds(c) > 0.0))
            throw DataError("impose_correlation: degenerate column '" +
                            input.names[static_cast<size_t>(c)] + "' has zero variance");
    }

    // Standardize.
    Eigen::MatrixXd z = input.data;
    for (Eigen::Index c = 0; c < k; ++c)
        z.col(c) = (z.col(c).array() - input.means(c)) / input.stds(c);

    Eigen::MatrixXd empirical = (z.transpose() * z) / static_cast<double>(n - 1);
    Eigen::LLT<Eigen::MatrixXd> llt_emp(empirical);
    if (llt_emp.info() != Eigen::Success)
        throw DataError("impose_correlation: empirical correlation is not positive definite");

    // Factor of the target: Cholesky when PD, eigenvalue square root otherwise.
    Eigen::MatrixXd target_factor;
    Eigen::LLT<Eigen::MatrixXd> llt_tgt(target);
    if (llt_tgt.info() == Eigen::Success) {
        target_factor = llt_tgt.matrixL();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(target);
        if (es.eigenvalues().minCoeff() < -1e-8)
            throw DataError("impose_correlation: target matrix is not positive semidefinite");
        target_factor =
            es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
    }

    // Whiten then recolor: z * L_emp^-T * L_tgt^T.
    Eigen::MatrixXd whitened =
        llt_emp.matrixL().transpose().solve<Eigen::OnTheRight>(z);
    Eigen::MatrixXd recolored = whitened * target_factor.transpose();

    AttributeMatrix out;
    out.names = input.names;
    out.means = input.means;
    out.stds = input.stds;
    out.data.resize(n, k);
    for (Eigen::Index c = 0; c < k; ++c)
        out.data.col(c) = recolored.col(c).array() * input.stds(c) + input.means(c);
    return out;
}

std::vector<double> monotone_couple(std::span<const double> driver,
                                    const rng::PopulationDistribution& response_dist,
                                    double strength, rng::Stream& s) {
    if (strength < 0.0 || strength > 1.0)
        throw rng::ParamError("monotone_couple: strength outside [0,1]");
    const size_t n = driver.size();
    std::vector<double> sample(n);
    for (size_t i = 0; i < n; ++i)
        sample[i] = s.gaussian(response_dist.mean, response_dist.std_dev);
    std::sort(sample.begin(), sample.end());

    // Normal scores of the driver ranks; ties broken by index for determinism.
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return driver[a] < driver[b] || (driver[a] == driver[b] && a < b);
    });
    std::vector<double> score(n);
    const double noise_scale = std::sqrt(1.0 - strength * strength);
    for (size_t r = 0; r < n; ++r) {
        size_t i = order[r];
        double z_driver =
            rng::inverse_normal_cdf((static_cast<double>(r) + 0.5) / static_cast<double>(n));
        double z_noise = noise_scale > 0.0 ? s.gaussian(0.0, 1.0) : 0.0;
        score[i] = strength * z_driver + noise_scale * z_noise;
    }

    std::vector<size_t> score_order(n);
    std::iota(score_order.begin(), score_order.end(), size_t{0});
    std::sort(score_order.begin(), score_order.end(), [&](size_t a, size_t b) {
        return score[a] < score[b] || (score[a] == score[b] && a < b);
    });

    std::vector<double> out(n);
    for (size_t r = 0; r < n; ++r) out[score_order[r]] = sample[r];
    return out;
}

}  // namespace cardsim::correlate
