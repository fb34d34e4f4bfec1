// Copyright 2026 The gecsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gecsynth/edit.h"

#include <stdexcept>

namespace gecsynth {

EditSpan noop_edit(int annotator) {
  return EditSpan{-1, -1, {}, "noop", annotator};
}

std::vector<std::string> apply_edits(std::span<const std::string> source,
                                     std::span<const EditSpan> edits) {
  std::vector<std::string> out;
  out.reserve(source.size());
  int cursor = 0;
  const int size = static_cast<int>(source.size());
  for (const EditSpan& edit : edits) {
    if (edit.is_noop()) continue;
    if (edit.start < cursor || edit.end < edit.start || edit.end > size) {
      throw std::out_of_range("edit [" + std::to_string(edit.start) + ", " +
                              std::to_string(edit.end) +
                              ") is out of order or out of range");
    }
    out.insert(out.end(), source.begin() + cursor, source.begin() + edit.start);
    out.insert(out.end(), edit.replacement.begin(), edit.replacement.end());
    cursor = edit.end;
  }
  out.insert(out.end(), source.begin() + cursor, source.end());
  return out;
}

}  // namespace gecsynth
