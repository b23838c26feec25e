#pragma once

#include <optional>
#include <string>
#include <vector>

namespace l1forge {

/// Cohen's kappa over two equal-length categorical label sequences:
/// kappa = (p_o - p_e) / (1 - p_e), expected agreement from the two
/// annotators' marginal label distributions. Throws Error on empty or
/// mismatched input and when p_e = 1 (both annotators constant on the same
/// label), where kappa is undefined.
double cohen_kappa(const std::vector<std::string>& labels_a,
                   const std::vector<std::string>& labels_b);

struct KappaDetail {
    double observed = 0.0;
    double expected = 0.0;
};
KappaDetail kappa_components(const std::vector<std::string>& labels_a,
                             const std::vector<std::string>& labels_b);

struct AgreementReport {
    std::vector<std::string> annotators;
    // symmetric; nullopt where kappa is undefined
    std::vector<std::vector<std::optional<double>>> kappa;
    std::vector<std::vector<double>> observed;
    std::vector<std::vector<double>> expected;

    std::string to_json() const;
    std::string to_table() const;
};

/// Pairwise kappa matrix over two or more annotators with equal-length
/// label sequences.
AgreementReport pairwise_kappa(const std::vector<std::string>& annotator_names,
                               const std::vector<std::vector<std::string>>& annotations);

}  // namespace l1forge
