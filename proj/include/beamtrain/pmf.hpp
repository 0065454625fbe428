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

#ifndef BEAMTRAIN_PMF_HPP
#define BEAMTRAIN_PMF_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace beamtrain {

/// Absolute tolerance on |sum(probs) - 1| accepted by BeamPmf.
inline constexpr double kPmfSumTolerance = 1e-9;

/// Probability mass function over labelled beams.
///
/// Immutable after construction. Every probability must lie in (0, 1], the
/// probabilities must sum to 1 within kPmfSumTolerance, and labels must be
/// unique and non-empty.
class BeamPmf {
  public:
    BeamPmf(std::vector<std::string> labels, std::vector<double> probs);

    /// Uniform PMF over n beams labelled prefix+"1" .. prefix+"n".
    static BeamPmf uniform(std::size_t n, std::string_view prefix = "B");

    std::size_t size() const { return probs_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& probs() const { return probs_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    double prob(std::size_t i) const { return probs_.at(i); }

    /// Index of the beam with the given label; throws ValidationError if absent.
    std::size_t index_of(std::string_view label) const;

  private:
    std::vector<std::string> labels_;
    std::vector<double> probs_;
};

/// Per-beam ranking by descending probability, ties broken by ascending index.
/// order[k] is the index of the (k+1)-th most probable beam; ranks[i] is the
/// 1-based rank of beam i.
struct Ranking {
    std::vector<std::size_t> order;
    std::vector<int> ranks;
};

/// Beam entropy: -sum p_i log10 p_i. In [0, log10 N].
double entropy(const BeamPmf& pmf);

/// entropy(pmf) / log10(N), in [0, 1]. Log-base invariant. Requires N >= 2.
double relative_entropy(const BeamPmf& pmf);

/// Descending-probability ranking (stable: equal probabilities keep index order).
Ranking rank(const BeamPmf& pmf);

/// Smallest k such that the top-k ranked probabilities sum to >= threshold.
/// threshold must lie in (0, 1]; returns N when rounding keeps the full sum
/// fractionally below the threshold.
std::size_t cumulative_cut(const Ranking& ranking, const BeamPmf& pmf, double threshold);

/// Ranked convenience bundle used by the search strategies.
struct RankedPmf {
    BeamPmf pmf;
    Ranking ranking;

    explicit RankedPmf(BeamPmf p);
};

} // namespace beamtrain

#endif
