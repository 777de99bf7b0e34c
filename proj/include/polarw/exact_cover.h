// Copyright 2026 The polarw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLARW_EXACT_COVER_H
#define POLARW_EXACT_COVER_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace polarw {

/// Knuth's Algorithm X over a dancing-links matrix.
///
/// The search is deterministic: the next column is the one with the fewest
/// remaining rows (ties go to the lowest column index) and candidate rows are
/// tried in ascending row index. Each exact cover is reported exactly once, with
/// its rows listed in the order they were chosen.
class ExactCover {
   public:
    /// Return false to stop the search.
    using Visitor = std::function<bool(std::span<const size_t> rows)>;

    ExactCover(size_t num_columns, const std::vector<std::vector<size_t>> &rows);

    size_t num_columns() const {
        return num_columns_;
    }
    size_t num_rows() const {
        return row_start_.size();
    }

    /// Column the search branches on first, or num_columns() if there are none.
    size_t first_branch_column() const;
    /// Rows covering column `c`, ascending.
    std::vector<size_t> rows_in_column(size_t c) const;

    /// Runs the search with `forced` rows already selected. Returns false if the
    /// visitor stopped it early. Forced rows that overlap produce no solutions.
    bool search(const Visitor &visit, std::span<const size_t> forced = {});

   private:
    struct Node {
        size_t left, right, up, down, column, row;
    };

    void cover(size_t c);
    void uncover(size_t c);
    size_t choose_column() const;
    bool recurse(const Visitor &visit);

    size_t num_columns_;
    std::vector<Node> nodes_;
    std::vector<size_t> sizes_;
    std::vector<size_t> row_start_;
    std::vector<size_t> chosen_;
};

}  // namespace polarw

#endif
