#include "descent3/report.hpp"

#include <algorithm>

#include "descent3/error.hpp"

namespace descent3 {

int r3_from_fields(const BigInt& D) {
  auto classes = enumerate_classes(D);
  return *rank_from_class_count(classes.size());
}

std::pair<int, int> selmer_ranks(const BigInt& D, int r3) {
  if (D >= -4 && D <= 4) throw Error(Errc::ExcludedDiscriminant, "|D| <= 4");
  return D < 0 ? std::make_pair(r3, r3) : std::make_pair(r3, r3 + 1);
}

const char* parity_note_name(ParityNote n) noexcept {
  switch (n) {
    case ParityNote::OddMonicNegative: return "odd_monic_negative";
    case ParityNote::OddMonicPositive: return "odd_monic_positive";
    case ParityNote::EvenMonicNegative: return "even_monic_negative";
    case ParityNote::EvenMonicPositive: return "even_monic_positive";
  }
  return "unknown";
}

namespace {

RankBounds parity_bounds(const BigInt& D, int r3, int r3_monic) {
  RankBounds b;
  bool odd = (r3_monic % 2) == 1;
  if (D < 0) {
    b.ub = 2 * r3;
    b.lb = odd ? r3_monic + 1 : r3_monic;
    b.note = odd ? ParityNote::OddMonicNegative : ParityNote::EvenMonicNegative;
  } else {
    b.ub = 2 * r3 + 1;
    b.lb = odd ? r3_monic : r3_monic + 1;
    b.note = odd ? ParityNote::OddMonicPositive : ParityNote::EvenMonicPositive;
  }
  return b;
}

}  // namespace

RankBounds rank_bounds(const BigInt& D, int r3, int r3_monic) {
  if (D >= -4 && D <= 4) throw Error(Errc::ExcludedDiscriminant, "|D| <= 4");
  if (r3_monic < 1 || r3_monic > r3) {
    throw Error(Errc::InconsistentInputs,
                "r3_monic = " + std::to_string(r3_monic) + " outside [1, " + std::to_string(r3) + "]");
  }
  return parity_bounds(D, r3, r3_monic);
}

std::vector<ShaPair> parity_consistent_pairs(int lb, int ub, int selmer_total) {
  std::vector<ShaPair> out;
  for (int r = lb; r <= ub; ++r) {
    int sha = selmer_total - r;
    if (sha >= 0 && sha % 2 == 0) out.push_back({r, sha});
  }
  return out;
}

namespace {

void add_unique(std::vector<CurvePoint>& pts, const CurvePoint& P) {
  if (P.is_infinity()) return;
  for (const CurvePoint& Q : pts) {
    if (Q == P || Q == neg(P)) return;
  }
  pts.push_back(P);
}

}  // namespace

AnalysisReport build_report(const DiscriminantSeed& seed, const ReportConfig& cfg) {
  AnalysisReport rep;
  rep.seed = seed;
  const BigInt& D = seed.D;
  rep.provenance.point_bound = cfg.point_bound;
  rep.provenance.monic_bound = cfg.hasse.monic_bound;
  rep.provenance.global_bound = cfg.hasse.global_bound;
  rep.provenance.primes_max = cfg.hasse.primes_max;
  rep.provenance.local_effort = cfg.hasse.local_effort;
  rep.provenance.hasse_run = cfg.run_hasse;
  rep.provenance.mod_3_run = cfg.run_mod_3;
  rep.provenance.r3_source = "cubic form class enumeration";

  rep.classes = enumerate_classes(D);
  rep.r3 = *rank_from_class_count(rep.classes.size());
  auto [sl, sld] = selmer_ranks(D, rep.r3);
  rep.selmer_lambda = sl;
  rep.selmer_lambda_dual = sld;

  if (D < 0) {
    rep.class_group = class_group_imaginary(D);
    if (rep.class_group->three_rank != rep.r3) {
      rep.diagnostics.push_back("class group 3-rank " + std::to_string(rep.class_group->three_rank) +
                                " differs from cubic field count rank " + std::to_string(rep.r3));
    }
  }

  // Route A: monic representatives of the form classes.
  std::vector<CurvePoint> class_points;
  for (const BinaryCubicForm& F : rep.classes) {
    MonicSearchResult m = monic_representative(F, cfg.hasse.monic_bound);
    rep.monic_flags.push_back(m.status);
    if (m.status == MonicStatus::NotFoundWithinBound) continue;
    DepressedCubic dc = depress(m.monic.b, m.monic.c, m.monic.d);
    add_unique(class_points, point_from_depressed(dc, seed));
  }
  rep.r3_monic_from_classes = span_mod_lambda(class_points, D, rep.r3).dim;

  // Route B: direct search on the two denominator lattices.
  std::vector<CurvePoint> search_points = search_monic_points(seed, cfg.point_bound);
  rep.r3_monic_from_points = span_mod_lambda(search_points, D, rep.r3).dim;
  if (rep.r3_monic_from_classes != rep.r3_monic_from_points) {
    rep.diagnostics.push_back("monic rank from form classes (" + std::to_string(rep.r3_monic_from_classes) +
                              ") differs from point search (" + std::to_string(rep.r3_monic_from_points) +
                              "); the larger value is used");
  }
  rep.r3_monic_lb = std::max(rep.r3_monic_from_classes, rep.r3_monic_from_points);
  rep.r3_monic_exact = rep.r3_monic_lb == rep.r3;

  for (const CurvePoint& P : search_points) add_unique(rep.points, P);
  for (const CurvePoint& P : class_points) add_unique(rep.points, P);

  std::vector<CurvePoint> span_input(rep.points.begin(),
                                     rep.points.begin() + static_cast<std::ptrdiff_t>(
                                                              std::min(rep.points.size(), cfg.max_span_points)));
  SpanResult lam = span_mod_lambda(span_input, D, rep.r3);
  rep.dim_quotient_lambda = lam.dim;
  if (rep.dim_quotient_lambda > rep.selmer_lambda) {
    throw Error(Errc::InconsistentInputs, "quotient dimension exceeds the Selmer rank");
  }

  // A reducible seed cubic leaves no irreducible classes; the bounds then use r3_monic = 0.
  RankBounds rb = rep.r3 == 0 ? parity_bounds(D, 0, 0) : rank_bounds(D, rep.r3, std::max(1, rep.r3_monic_lb));
  rep.rank_ub = rb.ub;
  rep.parity_note = rb.note;
  rep.parity_conditional = true;
  if (cfg.run_mod_3) {
    // Points independent modulo lambda(E_D(Q)) are independent modulo 3E_D'(Q); try them first.
    std::vector<CurvePoint> ordered;
    for (std::size_t i : lam.basis) ordered.push_back(span_input[i]);
    for (std::size_t i = 0; i < span_input.size(); ++i) {
      if (std::find(lam.basis.begin(), lam.basis.end(), i) == lam.basis.end()) ordered.push_back(span_input[i]);
    }
    rep.dim_mod_3 = span_mod_3(ordered, D, rb.ub).dim;
  }
  rep.rank_lb_unconditional = std::max(rep.dim_mod_3, rep.dim_quotient_lambda);
  rep.rank_lb = std::max(rb.lb, rep.rank_lb_unconditional);
  rep.sha_lambda_rank_conditional = rep.r3 - rep.r3_monic_lb;
  rep.sha3_parity_pairs = parity_consistent_pairs(rep.rank_lb, rep.rank_ub, rep.selmer_lambda + rep.selmer_lambda_dual);

  if (cfg.run_hasse) {
    for (const BinaryCubicForm& F : rep.classes) {
      rep.hasse.push_back(hasse_verdict(make_space(F, seed), cfg.hasse, &rep.classes));
    }
  }
  return rep;
}

}  // namespace descent3
