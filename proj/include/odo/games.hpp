#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "odo/matrix_game.hpp"

namespace odo {

struct GameSpec {
  enum class Kind {
    kRandom,           // i.i.d. U(0,1) entries, rows x cols
    kRps,              // rock-paper-scissors, losses {0, 0.5, 1}
    kMatchingPennies,  // 2x2, losses {0, 1}
    kBiasedRps,        // RPS with per-matchup stakes
    kKuhn,             // 64x64 Kuhn poker in normal form
    kCsv,              // load from file
  };

  Kind kind = Kind::kRandom;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t seed = 0;
  std::vector<double> weights;  // biased RPS stakes, positive
  std::filesystem::path path;   // CSV source

  static Kind parse_kind(const std::string& name);
  static std::string kind_name(Kind kind);
};

// Deterministic for a fixed spec (random entries come from mt19937_64).
PayoffMatrix generate(const GameSpec& spec);

struct KuhnGame {
  PayoffMatrix matrix;
  // chip loss of the row player = scale * entry + offset
  double offset;
  double scale;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

// Normal form of three-card Kuhn poker: one deterministic plan per
// information-set assignment (64 per player), payoffs averaged over the six
// deals and affinely rescaled from [-2, 2] chips into [0, 1] losses.
KuhnGame kuhn_normal_form();

// Keeps a uniformly sampled subset of `size` columns; returns the restricted
// matrix and the kept column indices in ascending order.
std::pair<PayoffMatrix, std::vector<std::size_t>> restrict_columns(
    const PayoffMatrix& a, std::size_t size, std::uint64_t seed);

// Plain CSV, LF line endings, shortest round-trip decimal formatting, so
// save followed by load reproduces the matrix bit-for-bit.
void save_csv(const PayoffMatrix& a, const std::filesystem::path& path);
PayoffMatrix load_csv(const std::filesystem::path& path);

}  // namespace odo
