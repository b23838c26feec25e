#include "l1forge/kappa.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "l1forge/errors.hpp"

namespace l1forge {

KappaDetail kappa_components(const std::vector<std::string>& labels_a,
                             const std::vector<std::string>& labels_b) {
    if (labels_a.empty() || labels_a.size() != labels_b.size()) {
        throw Error("kappa needs two non-empty label sequences of equal length");
    }
    const double n = static_cast<double>(labels_a.size());

    std::size_t agree = 0;
    std::map<std::string, std::size_t> marg_a, marg_b;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        if (labels_a[i] == labels_b[i]) ++agree;
        ++marg_a[labels_a[i]];
        ++marg_b[labels_b[i]];
    }

    KappaDetail detail;
    detail.observed = static_cast<double>(agree) / n;
    for (const auto& [label, count_a] : marg_a) {
        const auto it = marg_b.find(label);
        if (it == marg_b.end()) continue;
        detail.expected +=
            (static_cast<double>(count_a) / n) * (static_cast<double>(it->second) / n);
    }
    return detail;
}

double cohen_kappa(const std::vector<std::string>& labels_a,
                   const std::vector<std::string>& labels_b) {
    const KappaDetail d = kappa_components(labels_a, labels_b);
    if (d.expected >= 1.0) {
        throw Error("kappa undefined: expected agreement is 1 "
                    "(both annotators constant on the same label)");
    }
    return (d.observed - d.expected) / (1.0 - d.expected);
}

AgreementReport pairwise_kappa(const std::vector<std::string>& annotator_names,
                               const std::vector<std::vector<std::string>>& annotations) {
    if (annotations.size() < 2) throw Error("pairwise agreement needs at least 2 annotators");
    if (annotator_names.size() != annotations.size()) {
        throw Error("annotator name count does not match annotation count");
    }
    const std::size_t len = annotations.front().size();
    for (const auto& labels : annotations) {
        if (labels.size() != len) throw Error("annotators labeled different numbers of items");
    }
    if (len == 0) throw Error("annotations are empty");

    const std::size_t k = annotations.size();
    AgreementReport report;
    report.annotators = annotator_names;
    report.kappa.assign(k, std::vector<std::optional<double>>(k));
    report.observed.assign(k, std::vector<double>(k, 1.0));
    report.expected.assign(k, std::vector<double>(k, 0.0));

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            const KappaDetail d = kappa_components(annotations[i], annotations[j]);
            report.observed[i][j] = report.observed[j][i] = d.observed;
            report.expected[i][j] = report.expected[j][i] = d.expected;
            if (d.expected < 1.0) {
                const double value = (d.observed - d.expected) / (1.0 - d.expected);
                report.kappa[i][j] = report.kappa[j][i] = value;
            }
        }
    }
    return report;
}

std::string AgreementReport::to_json() const {
    nlohmann::ordered_json j;
    j["annotators"] = annotators;
    auto matrix = nlohmann::ordered_json::array();
    for (const auto& row : kappa) {
        auto jrow = nlohmann::ordered_json::array();
        for (const auto& value : row) {
            if (value) {
                jrow.push_back(*value);
            } else {
                jrow.push_back(nullptr);
            }
        }
        matrix.push_back(std::move(jrow));
    }
    j["kappa"] = std::move(matrix);
    j["observed"] = observed;
    j["expected"] = expected;
    return j.dump(2);
}

std::string AgreementReport::to_table() const {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    std::size_t width = 8;
    for (const auto& name : annotators) width = std::max(width, name.size() + 2);
    out << std::left << std::setw(static_cast<int>(width)) << "";
    for (const auto& name : annotators) {
        out << std::setw(static_cast<int>(width)) << name;
    }
    out << '\n';
    for (std::size_t i = 0; i < annotators.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(width)) << annotators[i];
        for (std::size_t j = 0; j < annotators.size(); ++j) {
            if (kappa[i][j]) {
                out << std::setw(static_cast<int>(width)) << *kappa[i][j];
            } else {
                out << std::setw(static_cast<int>(width)) << "n/a";
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace l1forge
