#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cardsim/rng.hpp"

namespace cardsim::correlate {

class CalibrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Partial target pairwise-correlation matrix: only the specified pairs are
// present; unspecified entries are treated as 0 before PSD repair.
struct CorrelationSpec {
    std::vector<std::string> attribute_names;
    struct Entry {
        int i;
        int j;
        double rho;
    };
    std::vector<Entry> entries;

    void add(int i, int j, double rho);
    void add(const std::string& a, const std::string& b, double rho);
    int index_of(const std::string& name) const;  // -1 when absent
};

struct PsdResult {
    Eigen::MatrixXd matrix;
    // Largest |result - requested| over the specified entries after repair.
    double max_deviation = 0.0;
};

// Fills unspecified entries with 0, then repairs to the nearest PSD surrogate
// by eigenvalue clipping at 0 followed by rescaling to unit diagonal.
PsdResult repair_to_psd(const CorrelationSpec& spec);

// repair_to_psd plus the config-time contradiction gate: throws
// CalibrationError naming the worst pair when repair moves a specified entry
// by more than 0.2.
PsdResult complete_to_psd(const CorrelationSpec& spec);

// Columns of per-individual attribute values with recorded moments.
struct AttributeMatrix {
    std::vector<std::string> names;
    Eigen::MatrixXd data;  // n_individuals x n_attributes
    Eigen::VectorXd means;
    Eigen::VectorXd stds;  // sample convention (n-1)

    static AttributeMatrix from_data(std::vector<std::string> names, Eigen::MatrixXd data);
};

// Standardizes columns, whitens by the inverse Cholesky factor of the
// empirical correlation, recolors by a factor of the target, and restores the
// original means/stds. With a strictly positive-definite target the output's
// empirical correlation equals the target to floating-point accuracy.
AttributeMatrix impose_correlation(const AttributeMatrix& input, const Eigen::MatrixXd& target);

// Rank-based coupling of a fresh marginal to an existing driver column.
// Output is an i.i.d. N(mean, std^2) sample from response_dist rearranged so
// its ranks follow strength*z_driver + sqrt(1-strength^2)*z_noise (Gaussian
// copula blend). strength=1 gives Spearman rho exactly 1.
std::vector<double> monotone_couple(std::span<const double> driver,
                                    const rng::PopulationDistribution& response_dist,
                                    double strength, rng::Stream& s);

}  // namespace cardsim::correlate
