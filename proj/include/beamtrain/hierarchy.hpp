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

#ifndef BEAMTRAIN_HIERARCHY_HPP
#define BEAMTRAIN_HIERARCHY_HPP

#include <cstddef>
#include <vector>

#include "beamtrain/pmf.hpp"

namespace beamtrain {

/// Disjoint covering groups of fine-beam indices.
using Partition = std::vector<std::vector<std::size_t>>;

/// Two-level grouping of fine beams into broad beams.
///
/// broad.prob(g) is the mass of group g; conditionals[g] is the fine PMF
/// renormalised within group g (exact division, not rounded table values),
/// so broad.prob(g) * conditionals[g].prob(k) recovers the fine probability.
struct BeamHierarchy {
    Partition groups;
    BeamPmf fine;
    BeamPmf broad;
    std::vector<BeamPmf> conditionals;
};

/// Group fine beams per `groups` (must partition {0..N-1}); broad labels are
/// synthesised as prefix + "0" + group number ("T01", "T02", ...).
BeamHierarchy aggregate(const BeamPmf& fine, const Partition& groups);

/// Equal-size contiguous blocks of n indices in numGroups groups, with the
/// block boundaries cyclically shifted right by `shift` positions.
Partition contiguous_blocks(std::size_t n, std::size_t numGroups, std::size_t shift = 0);

/// Among the N/numGroups cyclic shifts of equal-size contiguous blocks, the
/// partition whose broad PMF has minimum entropy; ties go to the smaller shift.
/// numGroups must divide N.
Partition min_entropy_grouping(const BeamPmf& pmf, std::size_t numGroups);

} // namespace beamtrain

#endif
