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

#include "beamtrain/history.hpp"

#include "beamtrain/errors.hpp"

namespace beamtrain {

BeamHistory BeamHistory::empty(std::vector<std::string> txLabels,
                               std::vector<std::string> rxLabels) {
    BeamHistory h;
    h.txCounts.assign(txLabels.size(), 0);
    h.rxCounts.assign(rxLabels.size(), 0);
    h.txLabels = std::move(txLabels);
    h.rxLabels = std::move(rxLabels);
    return h;
}

BeamHistory update_history(const BeamHistory& history, std::size_t txIdx, std::size_t rxIdx) {
    if (txIdx >= history.txCounts.size()) {
        throw ValidationError("update_history: Tx index " + std::to_string(txIdx) +
                              " out of range");
    }
    if (rxIdx >= history.rxCounts.size()) {
        throw ValidationError("update_history: Rx index " + std::to_string(rxIdx) +
                              " out of range");
    }
    BeamHistory next = history;
    ++next.txCounts[txIdx];
    ++next.rxCounts[rxIdx];
    ++next.totalObservations;
    return next;
}

BeamPmf empirical_pmf(const std::vector<std::string>& labels,
                      const std::vector<std::uint64_t>& counts, double smoothing) {
    if (labels.size() != counts.size()) {
        throw ValidationError("empirical_pmf: label/count size mismatch");
    }
    if (smoothing < 0.0) {
        throw ValidationError("empirical_pmf: negative smoothing");
    }
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0 && smoothing == 0.0) {
        throw ValidationError("empirical_pmf: no observations and no smoothing prior");
    }
    const double denom =
        static_cast<double>(total) + smoothing * static_cast<double>(counts.size());
    std::vector<double> probs;
    probs.reserve(counts.size());
    for (auto c : counts) {
        probs.push_back((static_cast<double>(c) + smoothing) / denom);
    }
    return BeamPmf(labels, std::move(probs));
}

BeamPmf tx_pmf(const BeamHistory& history, double smoothing) {
    return empirical_pmf(history.txLabels, history.txCounts, smoothing);
}

BeamPmf rx_pmf(const BeamHistory& history, double smoothing) {
    return empirical_pmf(history.rxLabels, history.rxCounts, smoothing);
}

} // namespace beamtrain
