// Copyright 2026 The sixq authors
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

#ifndef SIXQ_TABLES_HPP
#define SIXQ_TABLES_HPP

#include <string>
#include <vector>

#include "sixq/linalg.hpp"

namespace sixq::tables {

// Coefficient labels used by the reference tables, in column order, and the
// canonical two-qubit amplitude each one denotes:
//   a = c00,  m = c10,  g = c01,  b = c11.
// (The tables write mu for the |10> amplitude and beta for |11>.)
inline constexpr char kCoeffLabels[4] = {'a', 'm', 'g', 'b'};
inline constexpr int kCoeffToCanonical[4] = {0, 2, 1, 3};

/// A state-column entry: a linear map from the four input amplitudes to a
/// named frame of kets. coeffs is frame.size() x 4, column order as in
/// kCoeffLabels, entries scaled so the largest magnitude is 1.
struct Cell {
  std::vector<std::string> frame;
  ComplexMatrix coeffs;
};

enum class DiffKind { Match, GlobalPhase, SignFlip, Mismatch };

std::string diff_kind_name(DiffKind kind);

struct CellDiff {
  DiffKind kind = DiffKind::Match;
  std::vector<std::string> flipped;  // "label:ket" of sign-flipped terms
  std::string detail;
};

struct FixtureRow {
  std::string table;
  int row = 0;
  char variant = '.';
  std::string outcome;
  Cell cell;
  std::string note;  // non-empty documents an expected deviation
};

/// Classifies a regenerated cell against a reference cell.
CellDiff diff_cells(const Cell& regenerated, const Cell& reference);

struct RowReport {
  FixtureRow fixture;
  Cell regenerated;
  CellDiff diff;
  /// The outcome column agrees with the constructed measurement element.
  bool outcome_consistent = true;

  bool documented() const { return !fixture.note.empty(); }
  bool acceptable() const {
    return outcome_consistent &&
           (diff.kind == DiffKind::Match || diff.kind == DiffKind::GlobalPhase ||
            documented());
  }
};

struct TableReport {
  std::string table;
  std::vector<RowReport> rows;
  bool all_acceptable() const;
  int undocumented_deviations() const;
};

/// The checked-in reference text (data/reference_tables.txt, embedded at build
/// time).
const std::string& embedded_fixture();

std::vector<FixtureRow> parse_fixture(const std::string& text);

/// Recomputes one table from first principles and diffs it against the
/// reference rows. table_id in {"I", ..., "VII"}.
TableReport regenerate_table(const std::string& table_id);

std::vector<std::string> all_table_ids();
std::vector<TableReport> regenerate_all_tables();

std::string render_cell(const Cell& cell);

}  // namespace sixq::tables

#endif  // SIXQ_TABLES_HPP
