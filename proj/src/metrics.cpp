#include "rehab/metrics.hpp"

#include <algorithm>
#include <cstdlib>

#include "rehab/util.hpp"

namespace rehab::metrics {

std::size_t levenshtein(const PrimitiveSequence& g, const PrimitiveSequence& p) {
  const auto& a = g.items;
  const auto& b = p.items;
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();

  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> curr(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

double edit_score(const PrimitiveSequence& g, const PrimitiveSequence& p) {
  const std::size_t longest = std::max(g.size(), p.size());
  if (longest == 0) return 100.0;
  const double dist = static_cast<double>(levenshtein(g, p));
  return (1.0 - dist / static_cast<double>(longest)) * 100.0;
}

double action_error_rate(const PrimitiveSequence& g, const PrimitiveSequence& p) {
  if (g.empty())
    fail(ErrorCategory::Precondition, "undefined AER: empty ground truth");
  return static_cast<double>(levenshtein(g, p)) / static_cast<double>(g.size());
}

double relative_counting_error(const PrimitiveSequence& g,
                               const PrimitiveSequence& p) {
  if (g.empty())
    fail(ErrorCategory::Precondition, "undefined RCE: empty ground truth");
  std::size_t total_error = 0;
  for (Primitive prim : kAllPrimitives) {
    const auto cg = static_cast<long>(count(prim, g));
    const auto cp = static_cast<long>(count(prim, p));
    total_error += static_cast<std::size_t>(std::labs(cg - cp));
  }
  return static_cast<double>(total_error) / static_cast<double>(g.size());
}

std::map<Primitive, double> per_primitive_rce(
    const std::vector<PrimitiveSequence>& corpus_g,
    const std::vector<PrimitiveSequence>& corpus_p) {
  if (corpus_g.size() != corpus_p.size())
    fail(ErrorCategory::Precondition, "per-primitive RCE: corpora not aligned");
  std::map<Primitive, double> out;
  for (Primitive prim : kAllPrimitives) {
    std::size_t total_gt = 0;
    std::size_t total_error = 0;
    for (std::size_t v = 0; v < corpus_g.size(); ++v) {
      const auto cg = static_cast<long>(count(prim, corpus_g[v]));
      const auto cp = static_cast<long>(count(prim, corpus_p[v]));
      total_gt += static_cast<std::size_t>(cg);
      total_error += static_cast<std::size_t>(std::labs(cg - cp));
    }
    if (total_gt > 0)
      out[prim] = static_cast<double>(total_error) / static_cast<double>(total_gt);
  }
  return out;
}

namespace {

bool channel_value(const SegmentState& s, Channel ch) {
  return ch == Channel::Motion ? s.active : s.grasp;
}

}  // namespace

double segment_f1(const StateTrack& gt, const StateTrack& pred, Channel ch) {
  if (gt.size() != pred.size())
    fail(ErrorCategory::Precondition, "segment F1: track length mismatch");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const bool g = channel_value(gt.segments[i], ch);
    const bool p = channel_value(pred.segments[i], ch);
    if (g && p) ++tp;
    else if (!g && p) ++fp;
    else if (g && !p) ++fn;
  }
  const double precision = (tp + fp) ? static_cast<double>(tp) / (tp + fp) : 0.0;
  const double recall = (tp + fn) ? static_cast<double>(tp) / (tp + fn) : 0.0;
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double oversegmentation_ratio(const PrimitiveSequence& g,
                              const PrimitiveSequence& p) {
  const auto dg = dedup(g);
  if (dg.empty())
    fail(ErrorCategory::Precondition,
         "oversegmentation ratio: empty de-duplicated ground truth");
  const auto dp = dedup(p);
  return static_cast<double>(dp.size()) / static_cast<double>(dg.size());
}

MetricReport evaluate_video(const PrimitiveSequence& g,
                            const PrimitiveSequence& p,
                            const StateTrack* gt_track,
                            const StateTrack* pred_track) {
  MetricReport r;
  r.edit_score = edit_score(g, p);
  r.action_error_rate = action_error_rate(g, p);
  r.relative_counting_error = relative_counting_error(g, p);
  for (Primitive prim : kAllPrimitives) {
    r.gt_counts[prim] = count(prim, g);
    r.pred_counts[prim] = count(prim, p);
  }
  if (!dedup(g).empty()) r.oversegmentation_ratio = oversegmentation_ratio(g, p);
  if (gt_track && pred_track && gt_track->size() == pred_track->size() &&
      gt_track->size() > 0) {
    r.motion_f1 = segment_f1(*gt_track, *pred_track, Channel::Motion);
    r.grasp_f1 = segment_f1(*gt_track, *pred_track, Channel::Grasp);
  }
  return r;
}

}  // namespace rehab::metrics
