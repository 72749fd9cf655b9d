#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rehab/core.hpp"

namespace rehab::metrics {

// Minimum number of unit-cost insertions, deletions and substitutions
// turning one sequence into the other.
std::size_t levenshtein(const PrimitiveSequence& g, const PrimitiveSequence& p);

// (1 - L/max(len G, len P)) * 100, in [0, 100]. Both-empty input is the
// degenerate identical case and scores 100.
double edit_score(const PrimitiveSequence& g, const PrimitiveSequence& p);

// L / len(G); requires non-empty ground truth.
double action_error_rate(const PrimitiveSequence& g, const PrimitiveSequence& p);

// Sum over the five primitives of |c(p,G) - c(p,P)|, normalized by len(G);
// requires non-empty ground truth.
double relative_counting_error(const PrimitiveSequence& g,
                               const PrimitiveSequence& p);

// Corpus-level counting error per primitive: sum over videos of the
// absolute count error, normalized by that primitive's total ground-truth
// count. Primitives absent from the whole ground-truth corpus are omitted.
std::map<Primitive, double> per_primitive_rce(
    const std::vector<PrimitiveSequence>& corpus_g,
    const std::vector<PrimitiveSequence>& corpus_p);

enum class Channel { Motion, Grasp };

// F1 of the predicted binary channel against ground truth, "yes" positive.
double segment_f1(const StateTrack& gt, const StateTrack& pred, Channel ch);

// len(dedup(p)) / len(dedup(g)); requires non-empty ground truth.
double oversegmentation_ratio(const PrimitiveSequence& g,
                              const PrimitiveSequence& p);

struct MetricReport {
  double edit_score = 0.0;
  double action_error_rate = 0.0;
  double relative_counting_error = 0.0;
  std::map<Primitive, std::size_t> gt_counts;
  std::map<Primitive, std::size_t> pred_counts;
  std::optional<double> motion_f1;
  std::optional<double> grasp_f1;
  std::optional<double> oversegmentation_ratio;
};

// Per-video report over de-duplicated sequences; the binary-channel F1
// entries are filled when both tracks are supplied.
MetricReport evaluate_video(const PrimitiveSequence& g,
                            const PrimitiveSequence& p,
                            const StateTrack* gt_track = nullptr,
                            const StateTrack* pred_track = nullptr);

}  // namespace rehab::metrics
