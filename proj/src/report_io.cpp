#include "descent3/report_io.hpp"

#include <sstream>

#include "descent3/error.hpp"
#include "json.hpp"

namespace descent3 {

using nlohmann::json;

std::string monic_status_name(MonicStatus s) {
  switch (s) {
    case MonicStatus::FoundMonicAlready: return "FoundMonicAlready";
    case MonicStatus::Found: return "Found";
    case MonicStatus::NotFoundWithinBound: return "NotFoundWithinBound";
  }
  return "?";
}

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

MonicStatus parse_monic(const std::string& s) {
  if (s == "FoundMonicAlready") return MonicStatus::FoundMonicAlready;
  if (s == "Found") return MonicStatus::Found;
  if (s == "NotFoundWithinBound") return MonicStatus::NotFoundWithinBound;
  throw Error(Errc::ParseError, "monic status '" + s + "'");
}

Tri parse_tri(const std::string& s) {
  if (s == "Yes") return Tri::Yes;
  if (s == "No") return Tri::No;
  if (s == "Unknown") return Tri::Unknown;
  throw Error(Errc::ParseError, "status '" + s + "'");
}

VerdictKind parse_verdict(const std::string& s) {
  for (VerdictKind k : {VerdictKind::HasGlobalPoint, VerdictKind::LocallyInsolvable, VerdictKind::ViolationCandidate,
                        VerdictKind::CertifiedViolation}) {
    if (s == verdict_name(k)) return k;
  }
  throw Error(Errc::ParseError, "verdict '" + s + "'");
}

ParityNote parse_parity(const std::string& s) {
  for (ParityNote n : {ParityNote::OddMonicNegative, ParityNote::OddMonicPositive, ParityNote::EvenMonicNegative,
                       ParityNote::EvenMonicPositive}) {
    if (s == parity_note_name(n)) return n;
  }
  throw Error(Errc::ParseError, "parity note '" + s + "'");
}

json point_json(const CurvePoint& P) {
  if (P.is_infinity()) return "inf";
  return json{{"x", to_string(P.x())}, {"y", to_string(P.y())}};
}

CurvePoint point_from(const json& j, const BigInt& k) {
  if (j.is_string()) return CurvePoint::infinity(k);
  return CurvePoint::affine(k, parse_bigrat(j.at("x").get<std::string>()), parse_bigrat(j.at("y").get<std::string>()));
}

json proj_json(const ProjPoint& P) {
  return json{{"x", to_string(P.x)}, {"y", to_string(P.y)}, {"z", to_string(P.z)}};
}

ProjPoint proj_from(const json& j) {
  return {parse_bigint(j.at("x").get<std::string>()), parse_bigint(j.at("y").get<std::string>()),
          parse_bigint(j.at("z").get<std::string>())};
}

json local_json(const LocalResult& r) {
  json j{{"p", r.p == 0 ? std::string("inf") : to_string(r.p)}, {"status", tri_name(r.status)}, {"method", r.method}};
  if (r.witness) {
    j["witness"] = json{{"x", to_string(r.witness->x)},
                        {"y", to_string(r.witness->y)},
                        {"z", to_string(r.witness->z)},
                        {"level", r.witness->level}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

LocalResult local_from(const json& j) {
  LocalResult r;
  std::string p = j.at("p").get<std::string>();
  r.p = p == "inf" ? BigInt(0) : parse_bigint(p);
  r.status = parse_tri(j.at("status").get<std::string>());
  r.method = j.at("method").get<std::string>();
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    r.witness = LocalWitness{parse_bigint(w.at("x").get<std::string>()), parse_bigint(w.at("y").get<std::string>()),
                             parse_bigint(w.at("z").get<std::string>()), w.at("level").get<unsigned>()};
  }
  return r;
}

json verdict_json(const Genus1Verdict& v) {
  json local = json::array();
  for (const auto& r : v.local) local.push_back(local_json(r));
  return json{{"kind", verdict_name(v.kind)},
              {"form", to_string(v.form)},
              {"curve", "G(x,y) = z^3, G = " + to_string(v.form)},
              {"monic", monic_status_name(v.monic)},
              {"point", v.point ? proj_json(*v.point) : json(nullptr)},
              {"insolvable_prime", to_string(v.insolvable_prime)},
              {"local", local},
              {"monic_bound", to_string(v.monic_bound)},
              {"search_bound", to_string(v.search_bound)},
              {"class_enumerated", v.class_enumerated},
              {"theorem_conditional", v.theorem_conditional}};
}

Genus1Verdict verdict_from(const json& j) {
  Genus1Verdict v;
  v.kind = parse_verdict(j.at("kind").get<std::string>());
  v.form = parse_form(j.at("form").get<std::string>());
  v.monic = parse_monic(j.at("monic").get<std::string>());
  if (!j.at("point").is_null()) v.point = proj_from(j.at("point"));
  v.insolvable_prime = parse_bigint(j.at("insolvable_prime").get<std::string>());
  for (const auto& r : j.at("local")) v.local.push_back(local_from(r));
  v.monic_bound = parse_bigint(j.at("monic_bound").get<std::string>());
  v.search_bound = parse_bigint(j.at("search_bound").get<std::string>());
  v.class_enumerated = j.at("class_enumerated").get<bool>();
  v.theorem_conditional = j.at("theorem_conditional").get<bool>();
  return v;
}

json build_json(const AnalysisReport& r) {
  json j;
  j["seed"] = json{{"m", to_string(r.seed.m)}, {"n", to_string(r.seed.n)}, {"D", to_string(r.seed.D)}};
  j["r3"] = r.r3;
  json classes = json::array();
  for (const auto& F : r.classes) classes.push_back(to_string(F));
  j["classes"] = classes;
  json flags = json::array();
  for (auto s : r.monic_flags) flags.push_back(monic_status_name(s));
  j["monic_flags"] = flags;
  j["r3_monic_lb"] = r.r3_monic_lb;
  j["r3_monic_from_classes"] = r.r3_monic_from_classes;
  j["r3_monic_from_points"] = r.r3_monic_from_points;
  j["r3_monic_exact"] = r.r3_monic_exact;
  j["selmer_lambda"] = r.selmer_lambda;
  j["selmer_lambda_dual"] = r.selmer_lambda_dual;
  json pts = json::array();
  for (const auto& P : r.points) pts.push_back(point_json(P));
  j["points"] = pts;
  j["dim_quotient_lambda"] = r.dim_quotient_lambda;
  j["dim_mod_3"] = r.dim_mod_3;
  j["rank_lb"] = r.rank_lb;
  j["rank_ub"] = r.rank_ub;
  j["rank_lb_unconditional"] = r.rank_lb_unconditional;
  j["sha_lambda_rank_conditional"] = r.sha_lambda_rank_conditional;
  j["parity_note"] = parity_note_name(r.parity_note);
  j["parity_conditional"] = r.parity_conditional;
  j["conditionality"] = "rank_lb, parity_note and sha3_parity_pairs are conditional on finiteness of Sha[3^inf]";
  json pairs = json::array();
  for (const auto& p : r.sha3_parity_pairs) pairs.push_back(json{{"rank", p.rank}, {"sha_dim", p.sha_dim}});
  j["sha3_parity_pairs"] = pairs;
  json hasse = json::array();
  for (const auto& v : r.hasse) hasse.push_back(verdict_json(v));
  j["hasse"] = hasse;
  if (r.class_group) {
    json forms = json::array();
    for (const auto& f : r.class_group->forms) {
      forms.push_back("[" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + "]");
    }
    j["class_group"] = json{{"h", std::to_string(r.class_group->h)},
                            {"invariants", r.class_group->invariants},
                            {"three_rank", r.class_group->three_rank},
                            {"forms", forms}};
  } else {
    j["class_group"] = nullptr;
  }
  const Provenance& pv = r.provenance;
  j["provenance"] = json{{"point_bound", to_string(pv.point_bound)},   {"monic_bound", to_string(pv.monic_bound)},
                         {"global_bound", to_string(pv.global_bound)}, {"primes_max", pv.primes_max},
                         {"local_effort", pv.local_effort},            {"hasse_run", pv.hasse_run},
                         {"mod_3_run", pv.mod_3_run},                  {"r3_source", pv.r3_source}};
  j["diagnostics"] = r.diagnostics;
  return j;
}

ReducedForm parse_reduced(const std::string& s) {
  BinaryCubicForm tmp = parse_form(s.substr(0, s.size() - 1) + ",0]");
  return {tmp.a.get_si(), tmp.b.get_si(), tmp.c.get_si()};
}

}  // namespace

std::string report_to_json(const AnalysisReport& r, int indent) { return build_json(r).dump(indent); }

AnalysisReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    AnalysisReport r;
    const json& s = j.at("seed");
    r.seed = DiscriminantSeed{parse_bigint(s.at("m").get<std::string>()), parse_bigint(s.at("n").get<std::string>()),
                              parse_bigint(s.at("D").get<std::string>())};
    r.r3 = j.at("r3").get<int>();
    for (const auto& f : j.at("classes")) r.classes.push_back(parse_form(f.get<std::string>()));
    for (const auto& f : j.at("monic_flags")) r.monic_flags.push_back(parse_monic(f.get<std::string>()));
    r.r3_monic_lb = j.at("r3_monic_lb").get<int>();
    r.r3_monic_from_classes = j.at("r3_monic_from_classes").get<int>();
    r.r3_monic_from_points = j.at("r3_monic_from_points").get<int>();
    r.r3_monic_exact = j.at("r3_monic_exact").get<bool>();
    r.selmer_lambda = j.at("selmer_lambda").get<int>();
    r.selmer_lambda_dual = j.at("selmer_lambda_dual").get<int>();
    const BigInt k = -432 * r.seed.D;
    for (const auto& p : j.at("points")) r.points.push_back(point_from(p, k));
    r.dim_quotient_lambda = j.at("dim_quotient_lambda").get<int>();
    r.dim_mod_3 = j.at("dim_mod_3").get<int>();
    r.rank_lb = j.at("rank_lb").get<int>();
    r.rank_ub = j.at("rank_ub").get<int>();
    r.rank_lb_unconditional = j.at("rank_lb_unconditional").get<int>();
    r.sha_lambda_rank_conditional = j.at("sha_lambda_rank_conditional").get<int>();
    r.parity_note = parse_parity(j.at("parity_note").get<std::string>());
    r.parity_conditional = j.at("parity_conditional").get<bool>();
    for (const auto& p : j.at("sha3_parity_pairs")) {
      r.sha3_parity_pairs.push_back({p.at("rank").get<int>(), p.at("sha_dim").get<int>()});
    }
    for (const auto& v : j.at("hasse")) r.hasse.push_back(verdict_from(v));
    if (!j.at("class_group").is_null()) {
      const json& cg = j.at("class_group");
      ClassGroupInfo info;
      info.h = std::stoull(cg.at("h").get<std::string>());
      info.invariants = cg.at("invariants").get<std::vector<std::uint64_t>>();
      info.three_rank = cg.at("three_rank").get<int>();
      for (const auto& f : cg.at("forms")) info.forms.push_back(parse_reduced(f.get<std::string>()));
      r.class_group = info;
    }
    const json& pv = j.at("provenance");
    r.provenance.point_bound = parse_bigint(pv.at("point_bound").get<std::string>());
    r.provenance.monic_bound = parse_bigint(pv.at("monic_bound").get<std::string>());
    r.provenance.global_bound = parse_bigint(pv.at("global_bound").get<std::string>());
    r.provenance.primes_max = pv.at("primes_max").get<unsigned>();
    r.provenance.local_effort = pv.at("local_effort").get<unsigned>();
    r.provenance.hasse_run = pv.at("hasse_run").get<bool>();
    r.provenance.mod_3_run = pv.at("mod_3_run").get<bool>();
    r.provenance.r3_source = pv.at("r3_source").get<std::string>();
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string report_csv_header() {
  return "D,m,n,r3,r3_monic_lb,selmer_lambda,selmer_lambda_dual,dim_quotient_lambda,dim_mod_3,rank_lb,rank_ub,"
         "sha_lambda_rank_conditional,parity_note,sha3_parity_pairs,classes,hasse";
}

std::string report_to_csv(const AnalysisReport& r) {
  std::ostringstream os;
  os << to_string(r.seed.D) << ',' << to_string(r.seed.m) << ',' << to_string(r.seed.n) << ',' << r.r3 << ','
     << r.r3_monic_lb << ',' << r.selmer_lambda << ',' << r.selmer_lambda_dual << ',' << r.dim_quotient_lambda << ','
     << r.dim_mod_3 << ',' << r.rank_lb << ',' << r.rank_ub << ',' << r.sha_lambda_rank_conditional << ','
     << parity_note_name(r.parity_note) << ",\"";
  for (std::size_t i = 0; i < r.sha3_parity_pairs.size(); ++i) {
    os << (i ? ";" : "") << '(' << r.sha3_parity_pairs[i].rank << ' ' << r.sha3_parity_pairs[i].sha_dim << ')';
  }
  os << "\",\"";
  for (std::size_t i = 0; i < r.classes.size(); ++i) os << (i ? ";" : "") << to_string(r.classes[i]);
  os << "\",\"";
  for (std::size_t i = 0; i < r.hasse.size(); ++i) os << (i ? ";" : "") << verdict_name(r.hasse[i].kind);
  os << '"';
  return os.str();
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "D = " << to_string(r.seed.D) << "  (m, n) = (" << to_string(r.seed.m) << ", " << to_string(r.seed.n) << ")\n";
  os << "r3 = " << r.r3 << "  (" << r.classes.size() << " cubic form classes)\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    os << "  " << to_string(r.classes[i]) << "  " << monic_status_name(r.monic_flags[i]) << '\n';
  }
  if (r.class_group) {
    os << "class group: h = " << r.class_group->h << ", invariants";
    for (auto d : r.class_group->invariants) os << ' ' << d;
    os << ", 3-rank " << r.class_group->three_rank << '\n';
  }
  os << "r3(monic) >= " << r.r3_monic_lb << (r.r3_monic_exact ? " (exact)" : "") << "  [classes "
     << r.r3_monic_from_classes << ", points " << r.r3_monic_from_points << "]\n";
  os << "Selmer ranks: " << r.selmer_lambda << ", " << r.selmer_lambda_dual << '\n';
  os << "points found: " << r.points.size() << ", dim mod lambda = " << r.dim_quotient_lambda
     << ", dim mod 3 = " << r.dim_mod_3 << '\n';
  os << "rank bounds: " << r.rank_lb << " <= rank <= " << r.rank_ub << "  (unconditional lb "
     << r.rank_lb_unconditional << "; branch " << parity_note_name(r.parity_note)
     << ", conditional on finite Sha[3^inf])\n";
  os << "dim Sha[lambda] <= " << r.sha_lambda_rank_conditional << '\n';
  os << "parity-consistent (rank, dim Sha[3]):";
  for (const auto& p : r.sha3_parity_pairs) os << " (" << p.rank << ", " << p.sha_dim << ')';
  os << '\n';
  for (const auto& v : r.hasse) {
    os << "  G = " << to_string(v.form) << ": " << verdict_name(v.kind);
    if (v.point) os << ' ' << to_string(*v.point);
    if (v.kind == VerdictKind::LocallyInsolvable) os << " at p = " << to_string(v.insolvable_prime);
    if (v.theorem_conditional) os << " (via the non-monic criterion)";
    os << '\n';
  }
  for (const auto& d : r.diagnostics) os << "note: " << d << '\n';
  return os.str();
}

}  // namespace descent3
