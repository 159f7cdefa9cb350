#include <cmath>
#include <string>

#include <json.hpp>

#include "cascadia/analysis.hpp"
#include "cascadia/errors.hpp"

namespace cascadia {

void GameMatrix::validate() const {
  if (cells.size() != rows()) {
    throw InvalidParameter("game matrix has " + std::to_string(cells.size()) + " rows, expected " +
                           std::to_string(rows()));
  }
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (cells[r].size() != cols()) {
      throw InvalidParameter("game matrix row " + std::to_string(r) + " has " +
                             std::to_string(cells[r].size()) + " cells, expected " +
                             std::to_string(cols()));
    }
    for (const Payoff& p : cells[r]) {
      if (!std::isfinite(p.row) || !std::isfinite(p.col)) {
        throw InvalidParameter("game matrix payoffs must be finite");
      }
    }
  }
}

std::string game_matrix_to_json(const GameMatrix& m, int indent) {
  nlohmann::ordered_json j;
  j["row_strategies"] = m.row_strategies;
  j["col_strategies"] = m.col_strategies;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& row : m.cells) {
    auto out = nlohmann::ordered_json::array();
    for (const Payoff& p : row) out.push_back({p.row, p.col});
    cells.push_back(std::move(out));
  }
  j["cells"] = std::move(cells);
  return j.dump(indent) + "\n";
}

GameMatrix game_matrix_from_json(std::string_view text) {
  GameMatrix m;
  try {
    const auto j = nlohmann::json::parse(text);
    m.row_strategies = j.at("row_strategies").get<std::vector<std::string>>();
    m.col_strategies = j.at("col_strategies").get<std::vector<std::string>>();
    for (const auto& row : j.at("cells")) {
      auto& out = m.cells.emplace_back();
      for (const auto& cell : row) {
        if (!cell.is_array() || cell.size() != 2) {
          throw ParseError(0, "each game matrix cell must be a [p1, p2] pair");
        }
        out.push_back({cell[0].get<double>(), cell[1].get<double>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed game matrix JSON: ") + e.what());
  }
  try {
    m.validate();
  } catch (const InvalidParameter& e) {
    throw ParseError(0, e.what());
  }
  return m;
}

namespace {

bool row_best_response(const GameMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t other = 0; other < m.rows(); ++other) {
    if (m.cells[other][c].row > m.cells[r][c].row) return false;
  }
  return true;
}

bool col_best_response(const GameMatrix& m, std::size_t r, std::size_t c) {
  for (std::size_t other = 0; other < m.cols(); ++other) {
    if (m.cells[r][other].col > m.cells[r][c].col) return false;
  }
  return true;
}

}  // namespace

std::optional<Profile> find_dominant_strategy_equilibrium(const GameMatrix& m) {
  m.validate();
  std::optional<std::size_t> row;
  for (std::size_t r = 0; r < m.rows() && !row; ++r) {
    bool dominant = true;
    for (std::size_t c = 0; c < m.cols() && dominant; ++c) dominant = row_best_response(m, r, c);
    if (dominant) row = r;
  }
  std::optional<std::size_t> col;
  for (std::size_t c = 0; c < m.cols() && !col; ++c) {
    bool dominant = true;
    for (std::size_t r = 0; r < m.rows() && dominant; ++r) dominant = col_best_response(m, r, c);
    if (dominant) col = c;
  }
  if (!row || !col) return std::nullopt;
  return Profile{*row, *col};
}

std::vector<Profile> find_pure_nash(const GameMatrix& m) {
  m.validate();
  std::vector<Profile> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (row_best_response(m, r, c) && col_best_response(m, r, c)) out.push_back({r, c});
    }
  }
  return out;
}

}  // namespace cascadia
