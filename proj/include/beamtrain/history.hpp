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

#ifndef BEAMTRAIN_HISTORY_HPP
#define BEAMTRAIN_HISTORY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "beamtrain/pmf.hpp"

namespace beamtrain {

/// Per-beam success tallies for both link ends. One observation is one
/// successful Tx-Rx pair identification, so the per-side counts each sum to
/// totalObservations.
struct BeamHistory {
    std::vector<std::string> txLabels;
    std::vector<std::string> rxLabels;
    std::vector<std::uint64_t> txCounts;
    std::vector<std::uint64_t> rxCounts;
    std::uint64_t totalObservations = 0;

    static BeamHistory empty(std::vector<std::string> txLabels, std::vector<std::string> rxLabels);
};

/// Returns `history` with one more observed success at (txIdx, rxIdx).
BeamHistory update_history(const BeamHistory& history, std::size_t txIdx, std::size_t rxIdx);

/// Additively-smoothed frequency estimate: p_i = (count_i + s) / (total + N*s).
/// s = 0 with no data is an error; s = 0 with a zero count produces a zero
/// probability, which BeamPmf rejects.
BeamPmf empirical_pmf(const std::vector<std::string>& labels,
                      const std::vector<std::uint64_t>& counts, double smoothing);

/// Default add-one smoothing: a fresh history degrades to the uniform PMF.
inline constexpr double kDefaultHistorySmoothing = 1.0;

BeamPmf tx_pmf(const BeamHistory& history, double smoothing = kDefaultHistorySmoothing);
BeamPmf rx_pmf(const BeamHistory& history, double smoothing = kDefaultHistorySmoothing);

} // namespace beamtrain

#endif
