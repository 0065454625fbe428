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

#include "beamtrain/hierarchy.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "beamtrain/errors.hpp"

namespace beamtrain {

namespace {

// "T5" -> "T"; all-digit or empty labels fall back to "G".
std::string label_prefix(const std::string& label) {
    std::string p;
    for (char c : label) {
        if (std::isdigit(static_cast<unsigned char>(c))) break;
        p.push_back(c);
    }
    return p.empty() ? std::string("G") : p;
}

void check_partition(std::size_t n, const Partition& groups) {
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    for (const auto& g : groups) {
        if (g.empty()) throw ValidationError("partition: empty group");
        for (std::size_t i : g) {
            if (i >= n) {
                throw ValidationError("partition: index " + std::to_string(i) +
                                      " out of range for " + std::to_string(n) + " beams");
            }
            if (seen[i]) {
                throw ValidationError("partition: index " + std::to_string(i) +
                                      " appears in two groups");
            }
            seen[i] = true;
            ++covered;
        }
    }
    if (covered != n) {
        throw ValidationError("partition: covers " + std::to_string(covered) + " of " +
                              std::to_string(n) + " beams");
    }
}

} // namespace

BeamHierarchy aggregate(const BeamPmf& fine, const Partition& groups) {
    check_partition(fine.size(), groups);

    const std::string prefix = label_prefix(fine.label(0));
    std::vector<std::string> broadLabels;
    std::vector<double> broadProbs;
    std::vector<BeamPmf> conditionals;
    broadLabels.reserve(groups.size());
    broadProbs.reserve(groups.size());
    conditionals.reserve(groups.size());

    for (std::size_t g = 0; g < groups.size(); ++g) {
        double mass = 0.0;
        for (std::size_t i : groups[g]) mass += fine.prob(i);
        broadLabels.push_back(prefix + "0" + std::to_string(g + 1));
        broadProbs.push_back(mass);

        std::vector<std::string> condLabels;
        std::vector<double> condProbs;
        condLabels.reserve(groups[g].size());
        condProbs.reserve(groups[g].size());
        for (std::size_t i : groups[g]) {
            condLabels.push_back(fine.label(i));
            condProbs.push_back(fine.prob(i) / mass);
        }
        conditionals.emplace_back(std::move(condLabels), std::move(condProbs));
    }

    return BeamHierarchy{groups, fine, BeamPmf(std::move(broadLabels), std::move(broadProbs)),
                         std::move(conditionals)};
}

Partition contiguous_blocks(std::size_t n, std::size_t numGroups, std::size_t shift) {
    if (numGroups == 0 || n % numGroups != 0) {
        throw ValidationError("contiguous_blocks: " + std::to_string(numGroups) +
                              " groups do not divide " + std::to_string(n) + " beams");
    }
    const std::size_t size = n / numGroups;
    Partition groups(numGroups);
    for (std::size_t g = 0; g < numGroups; ++g) {
        for (std::size_t k = 0; k < size; ++k) {
            groups[g].push_back((shift + g * size + k) % n);
        }
    }
    return groups;
}

Partition min_entropy_grouping(const BeamPmf& pmf, std::size_t numGroups) {
    if (numGroups == 0 || pmf.size() % numGroups != 0) {
        throw ValidationError("min_entropy_grouping: " + std::to_string(numGroups) +
                              " groups do not divide " + std::to_string(pmf.size()) + " beams");
    }
    const std::size_t size = pmf.size() / numGroups;
    Partition best;
    double bestEntropy = 0.0;
    for (std::size_t shift = 0; shift < size; ++shift) {
        Partition candidate = contiguous_blocks(pmf.size(), numGroups, shift);
        const double e = entropy(aggregate(pmf, candidate).broad);
        if (best.empty() || e < bestEntropy) {
            best = std::move(candidate);
            bestEntropy = e;
        }
    }
    return best;
}

} // namespace beamtrain
