#pragma once

#include <string>
#include <vector>

#include "monocf/general.hpp"
#include "monocf/models.hpp"

namespace monocf {

struct ZooEntry {
  std::string name;
  ModelPtr model;
};

/// The fixed monotone test menagerie: ANDs, ORs, majorities, dictators, a few
/// structured DNFs and planted-threshold instances, everything with d <=
/// max_d. Each entry passes the exhaustive monotonicity audit.
std::vector<ZooEntry> standard_zoo(int max_d = 12);

/// Seeded random monotone DNFs, the fuzzing family. Dimensions are drawn from
/// [min_d, max_d], term counts from [1, 6], widths from [1, 4].
std::vector<ZooEntry> random_dnf_zoo(int count, int min_d, int max_d, std::uint64_t seed);

struct GeneralZooEntry {
  std::string name;
  GeneralModelPtr model;
};

/// Small general-feature models over spaces with |X| <= 4 and d <= 6.
std::vector<GeneralZooEntry> general_zoo();

}  // namespace monocf
