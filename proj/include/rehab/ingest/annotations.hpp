#pragma once

#include <string>

#include "rehab/core.hpp"

namespace rehab::ingest {

// Annotation CSV rows: frame_index, primitive, hand (header optional).
// Frames for the target hand must densely cover 0..N-1 with exactly one
// label each.
FrameAnnotation load_annotation_csv(const std::string& path, Hand target,
                                    double native_fps);

std::string annotation_to_csv(const FrameAnnotation& ann);

}  // namespace rehab::ingest
