// SPDX-License-Identifier: Apache-2.0
//
// beamtrain - statistically-ranked RF beam training for sparse MIMO channels
// Copyright (C) 2026 beamtrain authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "beamtrain/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "beamtrain/errors.hpp"

namespace beamtrain {

BeamPmf::BeamPmf(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw ValidationError("BeamPmf: need at least one beam");
    }
    if (labels_.size() != probs_.size()) {
        throw ValidationError("BeamPmf: " + std::to_string(labels_.size()) + " labels for " +
                              std::to_string(probs_.size()) + " probabilities");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        const double p = probs_[i];
        if (!(p > 0.0) || p > 1.0) {
            throw ValidationError("BeamPmf: probability of beam '" + labels_[i] + "' is " +
                                  std::to_string(p) + ", must be in (0, 1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
        throw ValidationError("BeamPmf: probabilities sum to " + std::to_string(sum) +
                              ", expected 1 within " + std::to_string(kPmfSumTolerance));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw ValidationError("BeamPmf: duplicate beam label '" + l + "'");
        }
    }
}

BeamPmf BeamPmf::uniform(std::size_t n, std::string_view prefix) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::string(prefix) + std::to_string(i + 1));
    }
    return BeamPmf(std::move(labels), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::size_t BeamPmf::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    throw ValidationError("BeamPmf: no beam labelled '" + std::string(label) + "'");
}

double entropy(const BeamPmf& pmf) {
    double e = 0.0;
    for (double p : pmf.probs()) {
        e -= p * std::log10(p);
    }
    return e;
}

double relative_entropy(const BeamPmf& pmf) {
    if (pmf.size() < 2) {
        throw ValidationError("relative_entropy: undefined for a single beam (log10 1 = 0)");
    }
    return entropy(pmf) / std::log10(static_cast<double>(pmf.size()));
}

Ranking rank(const BeamPmf& pmf) {
    Ranking r;
    r.order.resize(pmf.size());
    std::iota(r.order.begin(), r.order.end(), std::size_t{0});
    std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
        return pmf.prob(a) > pmf.prob(b);
    });
    r.ranks.assign(pmf.size(), 0);
    for (std::size_t k = 0; k < r.order.size(); ++k) {
        r.ranks[r.order[k]] = static_cast<int>(k) + 1;
    }
    return r;
}

std::size_t cumulative_cut(const Ranking& ranking, const BeamPmf& pmf, double threshold) {
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw ValidationError("cumulative_cut: threshold " + std::to_string(threshold) +
                              " outside (0, 1]");
    }
    if (ranking.order.size() != pmf.size()) {
        throw ValidationError("cumulative_cut: ranking size does not match PMF");
    }
    double cum = 0.0;
    for (std::size_t k = 0; k < ranking.order.size(); ++k) {
        cum += pmf.prob(ranking.order[k]);
        if (cum >= threshold - 1e-12) return k + 1;
    }
    return pmf.size();
}

RankedPmf::RankedPmf(BeamPmf p) : pmf(std::move(p)), ranking(rank(pmf)) {}

} // namespace beamtrain
