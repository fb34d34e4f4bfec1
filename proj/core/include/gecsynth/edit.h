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

#ifndef GECSYNTH_EDIT_H_
#define GECSYNTH_EDIT_H_

#include <span>
#include <string>
#include <vector>

namespace gecsynth {

// A token-level edit: source tokens [start, end) become `replacement`.
// start == end is an insertion; an empty replacement is a deletion. The
// noop edit (start == end == -1) marks a sentence with nothing to correct.
struct EditSpan {
  int start = 0;
  int end = 0;
  std::vector<std::string> replacement;
  std::string error_type;
  int annotator = 0;

  bool is_noop() const { return start == -1 && end == -1; }

  friend bool operator==(const EditSpan&, const EditSpan&) = default;
};

EditSpan noop_edit(int annotator = 0);

// Applies sorted, non-overlapping edits to `source`. Throws std::out_of_range
// for edits outside the source or out of order.
std::vector<std::string> apply_edits(std::span<const std::string> source,
                                     std::span<const EditSpan> edits);

}  // namespace gecsynth

#endif  // GECSYNTH_EDIT_H_
