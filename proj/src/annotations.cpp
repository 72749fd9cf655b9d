#include "rehab/ingest/annotations.hpp"

#include <map>
#include <sstream>

#include "rehab/util.hpp"

namespace rehab::ingest {

FrameAnnotation load_annotation_csv(const std::string& path, Hand target,
                                    double native_fps) {
  const auto rows = parse_csv(read_file(path));
  FrameAnnotation ann;
  ann.hand = target;
  ann.native_fps = native_fps;

  std::map<long, Primitive> by_frame;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() < 3)
      fail(ErrorCategory::Parse,
           path + ": row " + std::to_string(r + 1) + " needs 3 columns");
    if (r == 0 && !parse_primitive_name(row[1]) && to_lower(row[0]) != "0")
      continue;  // header row
    const auto hand = parse_hand(row[2]);
    if (!hand)
      fail(ErrorCategory::Parse, path + ": bad hand '" + row[2] + "'");
    if (*hand != target) continue;
    long frame = 0;
    try {
      frame = std::stol(row[0]);
    } catch (const std::exception&) {
      fail(ErrorCategory::Parse, path + ": bad frame index '" + row[0] + "'");
    }
    const auto prim = parse_primitive_name(row[1]);
    if (!prim)
      fail(ErrorCategory::Parse, path + ": bad primitive '" + row[1] + "'");
    if (by_frame.count(frame))
      fail(ErrorCategory::Parse,
           path + ": duplicate label for frame " + std::to_string(frame));
    by_frame[frame] = *prim;
  }

  if (by_frame.empty())
    fail(ErrorCategory::Parse,
         path + ": no labels for hand " + std::string(to_string(target)));

  const long max_frame = by_frame.rbegin()->first;
  ann.labels.reserve(static_cast<std::size_t>(max_frame) + 1);
  for (long f = 0; f <= max_frame; ++f) {
    auto it = by_frame.find(f);
    if (it == by_frame.end())
      fail(ErrorCategory::Parse,
           path + ": missing label for frame " + std::to_string(f));
    ann.labels.push_back(it->second);
  }
  return ann;
}

std::string annotation_to_csv(const FrameAnnotation& ann) {
  std::ostringstream out;
  out << "frame_index,primitive,hand\n";
  for (std::size_t f = 0; f < ann.labels.size(); ++f) {
    out << f << "," << to_string(ann.labels[f]) << "," << to_string(ann.hand)
        << "\n";
  }
  return out.str();
}

}  // namespace rehab::ingest
