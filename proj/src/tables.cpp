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

#include "sixq/tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sixq/measurement.hpp"
#include "sixq/protocols.hpp"
#include "sixq/states.hpp"

namespace sixq::tables {

namespace {

constexpr double kCellTol = 1e-9;

int coeff_column(char label) {
  for (int i = 0; i < 4; ++i) {
    if (kCoeffLabels[i] == label) return i;
  }
  throw std::invalid_argument(std::string("unknown coefficient label: ") + label);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : line) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

// Frames the state columns are written in.
struct Frame {
  std::vector<std::string> names;
  std::vector<CVector> states;
};

const Frame& eta_frame() {
  static const Frame frame = [] {
    Frame f;
    for (int i = 1; i <= 4; ++i) {
      f.names.push_back("eta" + std::to_string(i));
      f.states.push_back(eta(i).amps());
    }
    return f;
  }();
  return frame;
}

const Frame& zeta_frame() {
  static const Frame frame = [] {
    Frame f;
    for (int i = 1; i <= 8; ++i) {
      f.names.push_back("zeta" + std::to_string(i));
      f.states.push_back(zeta_indexed(i).amps());
    }
    return f;
  }();
  return frame;
}

const Frame& bell_frame() {
  static const Frame frame = [] {
    Frame f;
    f.names = {"phi+", "phi-", "psi+", "psi-"};
    for (BellKind kind : {BellKind::PhiPlus, BellKind::PhiMinus,
                          BellKind::PsiPlus, BellKind::PsiMinus}) {
      f.states.push_back(bell(kind).amps());
    }
    return f;
  }();
  return frame;
}

const Frame& computational_frame(int k) {
  static const Frame frame1 = [] {
    Frame f;
    f.names = {"0", "1"};
    f.states = {{Complex{1.0, 0.0}, Complex{0.0, 0.0}},
                {Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
    return f;
  }();
  static const Frame frame2 = [] {
    Frame f;
    f.names = {"00", "01", "10", "11"};
    for (int i = 0; i < 4; ++i) {
      CVector v(4, Complex{0.0, 0.0});
      v[i] = 1.0;
      f.states.push_back(v);
    }
    return f;
  }();
  if (k == 1) return frame1;
  if (k == 2) return frame2;
  throw std::invalid_argument("computational_frame: k must be 1 or 2");
}

// How each table is reproduced.
struct TableRecipe {
  ProtocolKind kind;
  bool after_bob;                 // state column follows Bob's measurement
  const Frame& frame;
  // after_bob == false: Alice outcome comes from (row, variant).
  // after_bob == true: Bob outcome index = row - 1 and Alice's outcome is
  // the fixed exhibit row below (variant '.' uses exhibit_variant_fixed).
  int exhibit_alice_row = 0;      // 1-based reference row
  char exhibit_variant_fixed = '+';
};

const TableRecipe& recipe_for(const std::string& table_id) {
  static const TableRecipe table_i{ProtocolKind::Qsts1Bell, false, eta_frame()};
  static const TableRecipe table_ii{ProtocolKind::Qsts1Bell, true,
                                    computational_frame(2), 1, '+'};
  static const TableRecipe table_iii{ProtocolKind::Qsts1Computational, true,
                                     bell_frame(), 1, '+'};
  static const TableRecipe table_iv{ProtocolKind::Qsts2TableIV, false,
                                    zeta_frame()};
  static const TableRecipe table_v{ProtocolKind::Qsts2TableIV, true,
                                   bell_frame(), 3, '+'};
  static const TableRecipe table_vi{ProtocolKind::Qsts2TableVI, false,
                                    zeta_frame()};
  static const TableRecipe table_vii{ProtocolKind::Qsts2TableVI, true,
                                     bell_frame(), 5, '+'};
  if (table_id == "I") return table_i;
  if (table_id == "II") return table_ii;
  if (table_id == "III") return table_iii;
  if (table_id == "IV") return table_iv;
  if (table_id == "V") return table_v;
  if (table_id == "VI") return table_vi;
  if (table_id == "VII") return table_vii;
  throw std::invalid_argument("unknown table id: " + table_id);
}

std::size_t alice_index_of(int row, char variant) {
  return static_cast<std::size_t>(row - 1) * 2 + (variant == '-' ? 1 : 0);
}

Cell parse_cell(const std::string& text, const Frame& frame) {
  Cell cell;
  cell.frame = frame.names;
  cell.coeffs = ComplexMatrix(frame.names.size(), 4);
  std::istringstream stream(text);
  std::string term;
  while (stream >> term) {
    if (term.size() < 4 || (term[0] != '+' && term[0] != '-') || term[2] != ':') {
      throw std::invalid_argument("bad cell term: " + term);
    }
    double sign = term[0] == '+' ? 1.0 : -1.0;
    int column = coeff_column(term[1]);
    std::string ket = term.substr(3);
    auto it = std::find(cell.frame.begin(), cell.frame.end(), ket);
    if (it == cell.frame.end()) {
      throw std::invalid_argument("cell ket not in frame: " + ket);
    }
    std::size_t row = static_cast<std::size_t>(it - cell.frame.begin());
    cell.coeffs.at(row, column) += sign;
  }
  return cell;
}

// Expresses the receiver state reached from each probe input in the frame.
// Columns follow kCoeffLabels; the matrix is rescaled so max |entry| = 1.
Cell regenerate_cell(const TableRecipe& recipe, std::size_t alice_index,
                     std::size_t bob_index, const std::string& context) {
  Cell cell;
  cell.frame = recipe.frame.names;
  cell.coeffs = ComplexMatrix(recipe.frame.names.size(), 4);
  for (int column = 0; column < 4; ++column) {
    PureState probe =
        CoefficientQuad::basis(kCoeffToCanonical[column]).as_state();
    std::optional<PureState> state;
    if (recipe.after_bob) {
      PostBob post = post_bob_state(recipe.kind, probe, alice_index, bob_index);
      state = post.state;
    } else {
      PostAlice post = post_alice_state(recipe.kind, probe, alice_index);
      state = post.state;
    }
    if (!state.has_value()) {
      throw std::runtime_error(context + ": probe reaches the row with zero "
                                         "probability");
    }
    CVector remainder = state->amps();
    for (std::size_t k = 0; k < recipe.frame.states.size(); ++k) {
      Complex coeff = inner_product(recipe.frame.states[k], remainder);
      cell.coeffs.at(k, column) = coeff;
      // Subtract the projection so we can verify the frame spans the state.
      for (std::size_t x = 0; x < remainder.size(); ++x) {
        remainder[x] -= coeff * recipe.frame.states[k][x];
      }
    }
    if (norm(remainder) > kCellTol) {
      throw std::runtime_error(context + ": state leaves the table's frame");
    }
  }
  double scale = cell.coeffs.max_abs();
  if (scale > 0.0) {
    cell.coeffs = cell.coeffs.scaled_by(1.0 / scale);
  }
  return cell;
}

}  // namespace

CellDiff diff_cells(const Cell& regenerated, const Cell& fixture) {
  CellDiff diff;
  if (regenerated.frame != fixture.frame) {
    diff.kind = DiffKind::Mismatch;
    diff.detail = "frame mismatch";
    return diff;
  }
  const ComplexMatrix& o = regenerated.coeffs;
  const ComplexMatrix& f = fixture.coeffs;

  // Supports and magnitudes must agree; phases are compared afterwards.
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t r = 0; r < o.rows(); ++r) {
    for (std::size_t c = 0; c < o.cols(); ++c) {
      bool in_o = std::abs(o.at(r, c)) > kCellTol;
      bool in_f = std::abs(f.at(r, c)) > kCellTol;
      if (in_o != in_f) {
        diff.kind = DiffKind::Mismatch;
        diff.detail = "support differs at " + std::string(1, kCoeffLabels[c]) +
                      ":" + regenerated.frame[r];
        return diff;
      }
      if (in_o) support.push_back({r, c});
    }
  }
  if (support.empty()) {
    diff.kind = DiffKind::Match;
    return diff;
  }
  for (auto [r, c] : support) {
    if (std::abs(std::abs(o.at(r, c)) - std::abs(f.at(r, c))) > 1e-6) {
      diff.kind = DiffKind::Mismatch;
      diff.detail = "magnitude differs at " + std::string(1, kCoeffLabels[c]) +
                    ":" + regenerated.frame[r];
      return diff;
    }
  }

  // Candidate global phase from the first populated entry; also try its
  // negative and keep whichever leaves fewer flips.
  auto flips_for = [&](Complex phase) {
    std::vector<std::string> flipped;
    bool ok = true;
    for (auto [r, c] : support) {
      Complex ratio = o.at(r, c) / f.at(r, c);
      if (std::abs(ratio - phase) <= 1e-6) continue;
      if (std::abs(ratio + phase) <= 1e-6) {
        flipped.push_back(std::string(1, kCoeffLabels[c]) + ":" +
                          regenerated.frame[r]);
      } else {
        ok = false;
        break;
      }
    }
    return std::pair<bool, std::vector<std::string>>(ok, flipped);
  };

  Complex candidate = o.at(support[0].first, support[0].second) /
                      f.at(support[0].first, support[0].second);
  auto [ok_pos, flips_pos] = flips_for(candidate);
  auto [ok_neg, flips_neg] = flips_for(-candidate);
  if (!ok_pos && !ok_neg) {
    diff.kind = DiffKind::Mismatch;
    diff.detail = "entry ratios are not a single phase up to sign";
    return diff;
  }
  Complex phase = candidate;
  std::vector<std::string> flips = flips_pos;
  if (!ok_pos || (ok_neg && flips_neg.size() < flips_pos.size())) {
    phase = -candidate;
    flips = flips_neg;
  }

  if (!flips.empty()) {
    diff.kind = DiffKind::SignFlip;
    diff.flipped = flips;
    std::string joined;
    for (const std::string& f_name : flips) {
      if (!joined.empty()) joined += ", ";
      joined += f_name;
    }
    diff.detail = "sign flipped at " + joined;
    return diff;
  }
  if (std::abs(phase - Complex{1.0, 0.0}) <= 1e-6) {
    diff.kind = DiffKind::Match;
    return diff;
  }
  diff.kind = DiffKind::GlobalPhase;
  std::ostringstream detail;
  detail << "global phase " << phase.real();
  if (std::abs(phase.imag()) > 1e-12) detail << (phase.imag() < 0 ? "-" : "+")
                                             << std::abs(phase.imag()) << "i";
  diff.detail = detail.str();
  return diff;
}

namespace {

// Checks the reference measurement column against the constructed basis
// element (Alice tables) or the Bob basis label (Bob tables).
bool outcome_matches(const TableRecipe& recipe, const FixtureRow& row,
                     std::size_t alice_index, std::size_t bob_index) {
  if (recipe.after_bob) {
    const OrthonormalBasis* basis = bob_basis_of(recipe.kind);
    std::string label = basis->labels[bob_index];
    // Fixture uses bare computational/hadamard labels ("0", "h+", "00").
    return label == row.outcome || label == ("h" + row.outcome);
  }
  const OrthonormalBasis& basis = alice_basis(recipe.kind);
  const PureState& element = basis.elements[alice_index];
  CVector expected(element.dim(), Complex{0.0, 0.0});
  std::istringstream stream(row.outcome);
  std::string token;
  int terms = 0;
  while (stream >> token) {
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-')) return false;
    double sign = token[0] == '+' ? 1.0 : -1.0;
    std::size_t index = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (token[i] != '0' && token[i] != '1') return false;
      index = (index << 1) | static_cast<std::size_t>(token[i] - '0');
    }
    if (index >= expected.size()) return false;
    expected[index] += sign;
    ++terms;
  }
  if (terms == 0) return false;
  CVector normalized_expected = normalized(expected);
  return norm(add(normalized_expected,
                  scaled(element.amps(), Complex{-1.0, 0.0}))) <= kCellTol;
}

}  // namespace

std::string diff_kind_name(DiffKind kind) {
  switch (kind) {
    case DiffKind::Match:
      return "match";
    case DiffKind::GlobalPhase:
      return "global-phase";
    case DiffKind::SignFlip:
      return "sign-flip";
    case DiffKind::Mismatch:
      return "mismatch";
  }
  throw std::logic_error("diff_kind_name: unknown kind");
}

bool TableReport::all_acceptable() const {
  for (const RowReport& row : rows) {
    if (!row.acceptable()) return false;
  }
  return true;
}

int TableReport::undocumented_deviations() const {
  int count = 0;
  for (const RowReport& row : rows) {
    if (!row.acceptable()) ++count;
  }
  return count;
}

std::vector<FixtureRow> parse_fixture(const std::string& text) {
  std::vector<FixtureRow> rows;
  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts = split(line, '|');
    if (parts.size() != 6) {
      throw std::invalid_argument("fixture line " + std::to_string(line_number) +
                                  ": expected 6 fields");
    }
    FixtureRow row;
    row.table = parts[0];
    row.row = std::stoi(parts[1]);
    if (parts[2].size() != 1) {
      throw std::invalid_argument("fixture line " + std::to_string(line_number) +
                                  ": bad variant");
    }
    row.variant = parts[2][0];
    row.outcome = parts[3];
    row.cell = parse_cell(parts[4], recipe_for(row.table).frame);
    row.note = parts[5];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> all_table_ids() {
  return {"I", "II", "III", "IV", "V", "VI", "VII"};
}

TableReport regenerate_table(const std::string& table_id) {
  const TableRecipe& recipe = recipe_for(table_id);
  TableReport report;
  report.table = table_id;
  for (FixtureRow& fixture : parse_fixture(embedded_fixture())) {
    if (fixture.table != table_id) continue;
    std::size_t alice_index;
    std::size_t bob_index = 0;
    if (recipe.after_bob) {
      char variant =
          fixture.variant == '.' ? recipe.exhibit_variant_fixed : fixture.variant;
      alice_index = alice_index_of(recipe.exhibit_alice_row, variant);
      bob_index = static_cast<std::size_t>(fixture.row - 1);
    } else {
      alice_index = alice_index_of(fixture.row, fixture.variant);
    }
    std::string context = "table " + table_id + " row " +
                          std::to_string(fixture.row) + fixture.variant;
    RowReport row_report;
    row_report.regenerated = regenerate_cell(recipe, alice_index, bob_index,
                                             context);
    row_report.diff = diff_cells(row_report.regenerated, fixture.cell);
    row_report.outcome_consistent =
        outcome_matches(recipe, fixture, alice_index, bob_index);
    row_report.fixture = std::move(fixture);
    report.rows.push_back(std::move(row_report));
  }
  if (report.rows.empty()) {
    throw std::invalid_argument("no fixture rows for table " + table_id);
  }
  return report;
}

std::vector<TableReport> regenerate_all_tables() {
  std::vector<TableReport> reports;
  for (const std::string& id : all_table_ids()) {
    reports.push_back(regenerate_table(id));
  }
  return reports;
}

std::string render_cell(const Cell& cell) {
  std::string out;
  for (int column = 0; column < 4; ++column) {
    for (std::size_t r = 0; r < cell.frame.size(); ++r) {
      Complex z = cell.coeffs.at(r, column);
      if (std::abs(z) <= kCellTol) continue;
      std::string sign;
      if (std::abs(z.imag()) <= 1e-9) {
        sign = z.real() >= 0 ? "+" : "-";
      } else {
        sign = "~";  // complex coefficient; magnitude-only rendering
      }
      if (!out.empty()) out += ' ';
      out += sign + std::string(1, kCoeffLabels[column]) + ":" + cell.frame[r];
    }
  }
  return out;
}

}  // namespace sixq::tables
