#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descent3/arith.hpp"
#include "descent3/classgroup.hpp"
#include "descent3/cubicforms.hpp"
#include "descent3/discriminants.hpp"
#include "descent3/genus1.hpp"
#include "descent3/mordell.hpp"

namespace descent3 {

/// r with enumerate_classes(D).size() = (3^r - 1)/2.
int r3_from_fields(const BigInt& D);

/// (d(S_lambda), d(S_lambda')): (r3, r3) for D < -4, (r3, r3 + 1) for D > 4.
/// Throws ExcludedDiscriminant for |D| <= 4.
std::pair<int, int> selmer_ranks(const BigInt& D, int r3);

/// Which branch of the parity-based bounds applied.
enum class ParityNote { OddMonicNegative, OddMonicPositive, EvenMonicNegative, EvenMonicPositive };

const char* parity_note_name(ParityNote n) noexcept;

/// Bounds on rank(E_D), conditional on finiteness of the 3-primary part of Sha.
struct RankBounds {
  int lb = 0;
  int ub = 0;
  ParityNote note = ParityNote::OddMonicNegative;
  bool conditional = true;
};

/// Throws InconsistentInputs unless 1 <= r3_monic <= r3, ExcludedDiscriminant for |D| <= 4.
RankBounds rank_bounds(const BigInt& D, int r3, int r3_monic);

/// (rank, dim Sha[3]) pairs with rank in [lb, ub], rank + dim = s, dim even.
struct ShaPair {
  int rank;
  int sha_dim;
  bool operator==(const ShaPair&) const = default;
};
std::vector<ShaPair> parity_consistent_pairs(int lb, int ub, int selmer_total);

struct ReportConfig {
  BigInt point_bound = 100000;      // search_monic_points bound
  HasseConfig hasse;                // monic form search, global search, local primes
  bool run_hasse = true;
  bool run_mod_3 = true;
  std::size_t max_span_points = 48;  // points fed to the span computations
};

struct Provenance {
  BigInt point_bound;
  BigInt monic_bound;
  BigInt global_bound;
  unsigned primes_max = 0;
  unsigned local_effort = 0;
  bool hasse_run = false;
  bool mod_3_run = false;
  std::string r3_source;
};

struct AnalysisReport {
  DiscriminantSeed seed;
  int r3 = 0;
  std::vector<BinaryCubicForm> classes;
  std::vector<MonicStatus> monic_flags;
  int r3_monic_lb = 0;              // F_3-rank spanned by monic points (max of both routes)
  int r3_monic_from_classes = 0;    // route via monic form representatives
  int r3_monic_from_points = 0;     // route via the point search
  bool r3_monic_exact = false;      // r3_monic_lb = r3
  int selmer_lambda = 0;
  int selmer_lambda_dual = 0;
  std::vector<CurvePoint> points;   // on Y^2 = X^3 - 432D
  int dim_quotient_lambda = 0;
  int dim_mod_3 = -1;               // -1 when not computed
  int rank_lb = 0;
  int rank_ub = 0;
  int rank_lb_unconditional = 0;
  int sha_lambda_rank_conditional = 0;
  ParityNote parity_note = ParityNote::OddMonicNegative;
  bool parity_conditional = true;
  std::vector<ShaPair> sha3_parity_pairs;
  std::vector<Genus1Verdict> hasse;
  std::optional<ClassGroupInfo> class_group;
  Provenance provenance;
  std::vector<std::string> diagnostics;
};

AnalysisReport build_report(const DiscriminantSeed& seed, const ReportConfig& cfg = {});

}  // namespace descent3
