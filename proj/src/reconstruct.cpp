#include "rehab/reconstruct.hpp"

#include <cmath>
#include <random>

#include "rehab/util.hpp"

namespace rehab::reconstruct {

void ReconstructionConfig::validate() const {
  if (terminal_grasp_window_s <= 0.0)
    fail(ErrorCategory::Config, "terminal grasp window must be positive");
  if (segment_duration_s <= 0.0)
    fail(ErrorCategory::Config, "segment duration must be positive");
}

int joint_state_index(const SegmentState& s) {
  return (s.active ? 2 : 0) | (s.grasp ? 1 : 0);
}

SegmentState joint_state_from_index(int idx) {
  return SegmentState{(idx & 2) != 0, (idx & 1) != 0};
}

void TransitionModel::validate() const {
  for (int i = 0; i < kJointStates; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < kJointStates; ++j) {
      if (p[i][j] < 0.0)
        fail(ErrorCategory::Precondition, "transition matrix entry < 0");
      row_sum += p[i][j];
    }
    if (std::abs(row_sum - 1.0) > 1e-9)
      fail(ErrorCategory::Precondition,
           "transition matrix row " + std::to_string(i) + " does not sum to 1");
  }
}

PrimitiveSequence states_to_primitives(const StateTrack& track,
                                       const ReconstructionConfig& cfg) {
  if (track.mode != TrackMode::Decomposed)
    fail(ErrorCategory::Precondition,
         "states_to_primitives requires a Decomposed-mode track");
  cfg.validate();

  const auto& segs = track.segments;
  PrimitiveSequence out;
  out.items.resize(segs.size(), Primitive::Idle);

  for (std::size_t i = 0; i < segs.size();) {
    const SegmentState s = segs[i];
    if (s.active && !s.grasp) {
      // Maximal moving-empty-hand run; one label for the whole run.
      std::size_t run_end = i;
      while (run_end < segs.size() && segs[run_end].active && !segs[run_end].grasp)
        ++run_end;
      const double run_start_s = static_cast<double>(i) * cfg.segment_duration_s;
      bool terminal_grasp = false;
      for (std::size_t k = run_end; k < segs.size(); ++k) {
        if (!segs[k].grasp) continue;
        const double grasp_start_s =
            static_cast<double>(k) * cfg.segment_duration_s;
        terminal_grasp =
            grasp_start_s - run_start_s <= cfg.terminal_grasp_window_s + 1e-9;
        break;
      }
      const Primitive label =
          terminal_grasp ? Primitive::Reach : Primitive::Reposition;
      for (std::size_t k = i; k < run_end; ++k) out.items[k] = label;
      i = run_end;
    } else {
      if (s.active && s.grasp) out.items[i] = Primitive::Transport;
      else if (!s.active && s.grasp) out.items[i] = Primitive::Stabilize;
      else out.items[i] = Primitive::Idle;
      ++i;
    }
  }
  return out;
}

StateTrack annotation_states(const FrameAnnotation& ann, const SegmentGrid& grid) {
  grid.validate();
  if (ann.duration_s() + 1e-9 < grid.segment_count() * grid.segment_duration_s())
    fail(ErrorCategory::Precondition,
         "annotation shorter than the video's segment span");
  StateTrack track;
  track.hand = ann.hand;
  track.mode = TrackMode::Decomposed;
  track.segments.reserve(static_cast<std::size_t>(grid.segment_count()));
  for (int s = 0; s < grid.segment_count(); ++s) {
    const Primitive p = ann.label_at(grid.midpoint_frame(s));
    track.segments.push_back(primitive_state(p));
  }
  return track;
}

PrimitiveSequence omniscient_baseline(const FrameAnnotation& ann,
                                      const SegmentGrid& grid,
                                      const ReconstructionConfig& cfg) {
  ReconstructionConfig effective = cfg;
  effective.segment_duration_s = grid.segment_duration_s();
  const StateTrack track = annotation_states(ann, grid);
  return dedup(states_to_primitives(track, effective));
}

std::vector<int> sample_states(const TransitionModel& model,
                               std::size_t segment_count, std::uint64_t seed) {
  if (segment_count < 1)
    fail(ErrorCategory::Precondition, "segment count must be >= 1");
  model.validate();

  std::mt19937_64 rng(seed);
  auto next_uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<int> states;
  states.reserve(segment_count);
  int state = 0;  // (no-motion, no-grasp)
  states.push_back(state);
  for (std::size_t i = 1; i < segment_count; ++i) {
    const double u = next_uniform();
    double cdf = 0.0;
    int next = kJointStates - 1;
    for (int j = 0; j < kJointStates; ++j) {
      cdf += model.p[static_cast<std::size_t>(state)][static_cast<std::size_t>(j)];
      if (u < cdf) {
        next = j;
        break;
      }
    }
    state = next;
    states.push_back(state);
  }
  return states;
}

PrimitiveSequence markov_baseline(const TransitionModel& model,
                                  std::size_t segment_count, std::uint64_t seed,
                                  const ReconstructionConfig& cfg) {
  const std::vector<int> path = sample_states(model, segment_count, seed);
  StateTrack track;
  track.mode = TrackMode::Decomposed;
  track.segments.reserve(path.size());
  for (int s : path) track.segments.push_back(joint_state_from_index(s));
  return dedup(states_to_primitives(track, cfg));
}

TransitionModel estimate_transitions(const std::vector<StateTrack>& tracks) {
  if (tracks.empty())
    fail(ErrorCategory::Precondition, "transition estimation needs >= 1 track");
  std::array<std::array<double, kJointStates>, kJointStates> counts{};
  for (const StateTrack& track : tracks) {
    for (std::size_t i = 1; i < track.segments.size(); ++i) {
      const int from = joint_state_index(track.segments[i - 1]);
      const int to = joint_state_index(track.segments[i]);
      counts[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] += 1.0;
    }
  }
  TransitionModel model;
  for (int i = 0; i < kJointStates; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < kJointStates; ++j) row_sum += counts[i][j];
    if (row_sum == 0.0) {
      model.p[i][i] = 1.0;  // never-left states self-loop
    } else {
      for (int j = 0; j < kJointStates; ++j) model.p[i][j] = counts[i][j] / row_sum;
    }
  }
  return model;
}

}  // namespace rehab::reconstruct
