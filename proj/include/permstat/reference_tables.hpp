#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// The engine ships three embedded reference tables and re-derives every
/// cell from scratch on demand:
///   table1  - all 24 permutations of S_4 with columns
///             stat, inv, maj, den, mad, mak, hag
///   table2  - closed forms for the seven partial statistics on the
///             special permutations pi0, pi1, pi1inv, checked at n = 4..12
///   joint5  - the four joint distribution matrices (exc,stat),
///             (exc,stati), (des,stat), (des,stati) at n = 5
///
/// The reference data is known to disagree with the evaluators in a fixed
/// set of cells (the mad column of table1 matches neither descent-bottom
/// variant, and its mak column matches only the non-Mahonian index
/// variant). Those diffs are pinned in an expected-diff manifest: a
/// verification run that reproduces the manifest exactly is a
/// documented-discrepancy, anything else is a failure.

enum class VerifyStatus { match, documented_discrepancy, failure };

std::string_view to_string(VerifyStatus status);

struct CellDiff {
  std::string cell;     // e.g. "3241/mad"
  std::string variant;  // evaluator used, e.g. "mad_idx"
  std::int64_t expected = 0;
  std::int64_t computed = 0;

  bool operator==(const CellDiff&) const = default;
};

struct VerificationReport {
  std::string table;
  VerifyStatus status = VerifyStatus::failure;
  std::vector<CellDiff> diffs;
};

/// id is one of "table1", "table2", "joint5"; throws Errc::unknown_name.
VerificationReport verify_table(std::string_view id);

// --- embedded data, exposed for tests ---

struct Table1Row {
  std::string_view perm;
  // stat, inv, maj, den, mad, mak, hag
  std::array<std::int64_t, 7> values;
};

std::span<const Table1Row> table1_rows();

inline constexpr std::array<std::string_view, 7> kTable1Columns = {
    "stat", "inv", "maj", "den", "mad", "mak", "hag"};

struct Joint5Matrix {
  std::string_view eulerian;
  std::string_view mahonian;
  std::array<std::array<std::uint64_t, 11>, 5> cells;
};

std::span<const Joint5Matrix> joint5_matrices();

/// The checked-in expected diffs for table1 (all in the mad column).
std::span<const CellDiff> table1_expected_diffs();

}  // namespace permstat
