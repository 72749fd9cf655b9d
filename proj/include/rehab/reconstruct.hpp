#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rehab/core.hpp"

namespace rehab::reconstruct {

struct ReconstructionConfig {
  // A moving-empty-hand run becomes reach when a grasping segment begins
  // within this window of the run's start, reposition otherwise.
  double terminal_grasp_window_s = 2.0;
  double segment_duration_s = 8.0 / 15.0;

  void validate() const;
};

// Joint (motion, grasp) state index: 0 = (no, no), 1 = (no, yes),
// 2 = (yes, no), 3 = (yes, yes).
int joint_state_index(const SegmentState& s);
SegmentState joint_state_from_index(int idx);
inline constexpr int kJointStates = 4;

// First-order chain over the joint (motion, grasp) states, starting in
// (no-motion, no-grasp).
struct TransitionModel {
  std::array<std::array<double, kJointStates>, kJointStates> p{};

  void validate() const;  // rows sum to 1 +/- 1e-9, entries >= 0
};

// Per-segment primitives from a Decomposed-mode track: (yes, yes) ->
// transport, (no, yes) -> stabilize, (no, no) -> idle; each maximal
// (yes, no) run resolves to reach or reposition as one unit via the
// terminal-grasp window. Output length equals input length; the caller
// de-duplicates.
PrimitiveSequence states_to_primitives(const StateTrack& track,
                                       const ReconstructionConfig& cfg);

// Ground-truth motion/grasp per segment, read from the annotation label at
// each segment's midpoint frame.
StateTrack annotation_states(const FrameAnnotation& ann, const SegmentGrid& grid);

// Upper-bound baseline: reconstructs the sequence from ground-truth
// midpoint states, then de-duplicates.
PrimitiveSequence omniscient_baseline(const FrameAnnotation& ann,
                                      const SegmentGrid& grid,
                                      const ReconstructionConfig& cfg);

// Deterministic joint-state path of the chain: mt19937_64 seeded as given,
// one draw per transition via (rng() >> 11) * 2^-53 walked over the row
// CDF, so sequences are bit-identical across platforms.
std::vector<int> sample_states(const TransitionModel& model,
                               std::size_t segment_count, std::uint64_t seed);

// Video-blind baseline: samples a state path and reconstructs it like any
// predicted track, then de-duplicates.
PrimitiveSequence markov_baseline(const TransitionModel& model,
                                  std::size_t segment_count, std::uint64_t seed,
                                  const ReconstructionConfig& cfg);

// Maximum-likelihood transition probabilities from consecutive segment
// pairs across the corpus; states never left get a self-loop row.
TransitionModel estimate_transitions(const std::vector<StateTrack>& tracks);

}  // namespace rehab::reconstruct
