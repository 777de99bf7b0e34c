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

#include "polarw/exact_cover.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace polarw {

namespace {
constexpr size_t ROOT = 0;
constexpr size_t NO_NODE = std::numeric_limits<size_t>::max();
}  // namespace

ExactCover::ExactCover(size_t num_columns, const std::vector<std::vector<size_t>> &rows)
    : num_columns_(num_columns), sizes_(num_columns, 0) {
    // Node 0 is the root, nodes 1..num_columns are the column headers.
    nodes_.reserve(1 + num_columns);
    for (size_t k = 0; k <= num_columns; k++) {
        size_t left = k == 0 ? num_columns : k - 1;
        size_t right = k == num_columns ? 0 : k + 1;
        size_t column = k == 0 ? NO_NODE : k - 1;
        nodes_.push_back({left, right, k, k, column, NO_NODE});
    }

    for (size_t r = 0; r < rows.size(); r++) {
        std::vector<size_t> cols = rows[r];
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
            throw std::invalid_argument("exact cover row " + std::to_string(r) + " repeats a column");
        }
        if (cols.empty()) {
            row_start_.push_back(NO_NODE);
            continue;
        }
        size_t first = nodes_.size();
        row_start_.push_back(first);
        for (size_t k = 0; k < cols.size(); k++) {
            size_t c = cols[k];
            if (c >= num_columns) {
                throw std::invalid_argument("exact cover row " + std::to_string(r) + " names a missing column");
            }
            size_t header = c + 1;
            size_t self = nodes_.size();
            size_t left = k == 0 ? first + cols.size() - 1 : self - 1;
            size_t right = k + 1 == cols.size() ? first : self + 1;
            nodes_.push_back({left, right, nodes_[header].up, header, c, r});
            nodes_[nodes_[header].up].down = self;
            nodes_[header].up = self;
            sizes_[c]++;
        }
    }
}

void ExactCover::cover(size_t c) {
    size_t h = c + 1;
    nodes_[nodes_[h].right].left = nodes_[h].left;
    nodes_[nodes_[h].left].right = nodes_[h].right;
    for (size_t i = nodes_[h].down; i != h; i = nodes_[i].down) {
        for (size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
            nodes_[nodes_[j].down].up = nodes_[j].up;
            nodes_[nodes_[j].up].down = nodes_[j].down;
            sizes_[nodes_[j].column]--;
        }
    }
}

void ExactCover::uncover(size_t c) {
    size_t h = c + 1;
    for (size_t i = nodes_[h].up; i != h; i = nodes_[i].up) {
        for (size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
            sizes_[nodes_[j].column]++;
            nodes_[nodes_[j].down].up = j;
            nodes_[nodes_[j].up].down = j;
        }
    }
    nodes_[nodes_[h].right].left = h;
    nodes_[nodes_[h].left].right = h;
}

size_t ExactCover::choose_column() const {
    size_t best = NO_NODE;
    size_t best_size = NO_NODE;
    // Headers stay linked in ascending order, so strict '<' keeps the lowest index on ties.
    for (size_t h = nodes_[ROOT].right; h != ROOT; h = nodes_[h].right) {
        if (sizes_[h - 1] < best_size) {
            best = h - 1;
            best_size = sizes_[h - 1];
        }
    }
    return best;
}

size_t ExactCover::first_branch_column() const {
    size_t c = choose_column();
    return c == NO_NODE ? num_columns_ : c;
}

std::vector<size_t> ExactCover::rows_in_column(size_t c) const {
    std::vector<size_t> out;
    size_t h = c + 1;
    for (size_t i = nodes_[h].down; i != h; i = nodes_[i].down) {
        out.push_back(nodes_[i].row);
    }
    return out;
}

bool ExactCover::recurse(const Visitor &visit) {
    if (nodes_[ROOT].right == ROOT) {
        return visit(chosen_);
    }
    size_t c = choose_column();
    if (sizes_[c] == 0) {
        return true;
    }
    cover(c);
    bool keep_going = true;
    for (size_t r = nodes_[c + 1].down; r != c + 1 && keep_going; r = nodes_[r].down) {
        chosen_.push_back(nodes_[r].row);
        for (size_t j = nodes_[r].right; j != r; j = nodes_[j].right) {
            cover(nodes_[j].column);
        }
        keep_going = recurse(visit);
        for (size_t j = nodes_[r].left; j != r; j = nodes_[j].left) {
            uncover(nodes_[j].column);
        }
        chosen_.pop_back();
    }
    uncover(c);
    return keep_going;
}

bool ExactCover::search(const Visitor &visit, std::span<const size_t> forced) {
    auto is_linked = [&](size_t c) {
        size_t h = c + 1;
        return nodes_[nodes_[h].left].right == h;
    };

    size_t applied = 0;
    bool feasible = true;
    for (size_t r : forced) {
        if (r >= row_start_.size()) {
            throw std::invalid_argument("forced row out of range");
        }
        size_t start = row_start_[r];
        if (start == NO_NODE) {
            continue;
        }
        size_t j = start;
        do {
            if (!is_linked(nodes_[j].column)) {
                feasible = false;
            }
            j = nodes_[j].right;
        } while (j != start && feasible);
        if (!feasible) {
            break;
        }
        j = start;
        do {
            cover(nodes_[j].column);
            j = nodes_[j].right;
        } while (j != start);
        chosen_.push_back(r);
        applied++;
    }

    bool keep_going = feasible ? recurse(visit) : true;

    for (size_t k = applied; k-- > 0;) {
        size_t start = row_start_[chosen_.back()];
        size_t j = nodes_[start].left;
        while (j != start) {
            uncover(nodes_[j].column);
            j = nodes_[j].left;
        }
        uncover(nodes_[start].column);
        chosen_.pop_back();
    }
    return keep_going;
}

}  // namespace polarw
