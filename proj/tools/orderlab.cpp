// orderlab: exact-arithmetic experiments with left orders, elementary
// decompositions, circle actions, and singular-kernel probes.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "orderlab/decompose.hpp"
#include "orderlab/euler.hpp"
#include "orderlab/json_io.hpp"
#include "orderlab/navas.hpp"
#include "orderlab/oracle.hpp"
#include "orderlab/orbits.hpp"
#include "orderlab/realize.hpp"
#include "orderlab/witte.hpp"

using namespace orderlab;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct RunConfig {
  std::string subcommand;
  json configEcho = json::object();
  std::string outputPath;
  bool timings = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

int emit(const RunConfig& run, const json& result, const std::string& verdict,
         std::chrono::steady_clock::time_point started) {
  json envelope{{"toolVersion", kVersion},
                {"subcommand", run.subcommand},
                {"config", run.configEcho},
                {"result", result},
                {"verdict", verdict}};
  if (run.timings) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    envelope["wallTimeMs"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  const std::string text = envelope.dump(2) + "\n";
  if (run.outputPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(run.outputPath);
    if (!out) throw UsageError("cannot open output file: " + run.outputPath);
    out << text;
  }
  if (verdict == "pass") return kPass;
  if (verdict == "inconclusive") return kInconclusive;
  return kFail;
}

int printSchema(const std::string& name) {
  const std::string path = std::string(ORDERLAB_SCHEMA_DIR) + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) {
    std::cerr << "schema not found: " << path << "\n";
    return kUsage;
  }
  std::cout << in.rdbuf();
  return kPass;
}

json certificateToJson(const ViolationCertificate& cert,
                       const GroupModel& model) {
  json transcript = json::array();
  for (const auto& entry : cert.transcript)
    transcript.push_back({{"word", entry.word.str(model.names())},
                          {"sign", signStr(entry.answer)}});
  json core = json::array();
  for (const auto& [index, exponent] : cert.core)
    core.push_back({{"index", index}, {"exponent", exponent}});
  json out{{"kind", violationKindStr(cert.kind)},
           {"transcript", transcript},
           {"core", core},
           {"note", cert.note}};
  if (cert.identityMismatchIndex)
    out["identityMismatchIndex"] = *cert.identityMismatchIndex;
  if (cert.witness)
    out["witness"] = {{"p", cert.witness->p},
                      {"q", cert.witness->q},
                      {"m", cert.witness->m},
                      {"k", cert.witness->k}};
  return out;
}

json decompositionToJson(const Decomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(elementaryToJson(f));
  return json{{"factors", factors},
              {"count", d.count()},
              {"ring", d.ring == Ring::Integers ? "z" : "q"}};
}

GroupModel modelFromJson(const json& j) {
  if (!j.contains("names") || !j.contains("matrices"))
    throw UsageError("generators: expected keys 'names' and 'matrices'");
  std::vector<std::string> names = j.at("names").get<std::vector<std::string>>();
  std::vector<SpecialLinearElement> gens;
  for (const auto& m : j.at("matrices")) gens.emplace_back(matrixFromJson(m));
  return GroupModel(std::move(names), std::move(gens));
}

PositiveConeSpec coneFromJsonWithModel(const json& j, const GroupModel& model) {
  const std::string rule = j.value("rule", "exponent-sum");
  const bool reversed = j.value("reversed", false);
  if (rule == "exponent-sum") return PositiveConeSpec::exponentSum(reversed);
  if (rule == "abelian-lex")
    return PositiveConeSpec::abelianLex(model.generatorCount(), reversed);
  if (rule == "entry-lex") {
    std::vector<std::pair<int, int>> positions;
    for (const auto& p : j.at("positions"))
      positions.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return PositiveConeSpec::entryLex(std::move(positions), reversed);
  }
  if (rule == "even-length") return PositiveConeSpec::evenLength();
  if (rule == "list") {
    std::vector<GroupWord> positives;
    for (const auto& w : j.at("positive"))
      positives.push_back(GroupWord::parse(w.get<std::string>(), model.names()));
    const Sign def = signFromStr(j.value("default", "-"));
    return PositiveConeSpec::wordList(std::move(positives), def);
  }
  throw UsageError("unknown cone rule: " + rule);
}

LinePLMap lineMapFromJson(const json& j) {
  if (j.contains("translation"))
    return LinePLMap::translation(
        Rational::parse(j.at("translation").get<std::string>()));
  std::vector<LinePLMap::Knot> knots;
  for (const auto& k : j.at("knots"))
    knots.push_back({Rational::parse(k.at(0).get<std::string>()),
                     Rational::parse(k.at(1).get<std::string>())});
  Rational left = Rational::parse(j.value("leftSlope", "1"));
  Rational right = Rational::parse(j.value("rightSlope", "1"));
  return LinePLMap(std::move(knots), left, right);
}

CircleMap circleMapFromJson(const json& j) {
  if (j.contains("rotation"))
    return CircleMap(PLCircleHomeo::rotation(
        Rational::parse(j.at("rotation").get<std::string>())));
  if (j.contains("pl")) {
    const auto& pl = j.at("pl");
    std::vector<Rational> xs, ys;
    for (const auto& b : pl.at("breakpoints"))
      xs.push_back(Rational::parse(b.get<std::string>()));
    for (const auto& v : pl.at("values"))
      ys.push_back(Rational::parse(v.get<std::string>()));
    return CircleMap(PLCircleHomeo(std::move(xs), std::move(ys)));
  }
  if (j.contains("mobius")) {
    const auto& m = j.at("mobius");
    return CircleMap(MobiusMap(Int(m.at(0).at(0).get<long>()),
                               Int(m.at(0).at(1).get<long>()),
                               Int(m.at(1).at(0).get<long>()),
                               Int(m.at(1).at(1).get<long>())));
  }
  throw UsageError("generator entry needs 'rotation', 'pl', or 'mobius'");
}

std::vector<CircleMap> circleGeneratorsFromJson(const json& j) {
  std::vector<CircleMap> gens;
  for (const auto& g : j.at("generators")) gens.push_back(circleMapFromJson(g));
  if (gens.empty()) throw UsageError("no generators in file");
  return gens;
}

json pointToJson(const CirclePointValue& p) {
  if (p.isRational()) return p.rational().str();
  return "proj:" + p.projective().str();
}

SmoothCircleMap smoothMapFromJson(const json& j) {
  std::vector<double> c, d;
  if (j.contains("fourier")) {
    const auto& f = j.at("fourier");
    if (f.contains("c")) c = f.at("c").get<std::vector<double>>();
    if (f.contains("d")) d = f.at("d").get<std::vector<double>>();
  }
  auto num = [](const json& v) {
    return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
  };
  if (j.contains("rough")) {
    const auto& r = j.at("rough");
    SmoothCircleMap::Rough rough;
    rough.alpha = num(r.at("alpha"));
    rough.center = num(r.at("center"));
    rough.amplitude = num(r.at("amplitude"));
    if (r.contains("radius")) rough.radius = num(r.at("radius"));
    SmoothCircleMap out(std::move(c), std::move(d), rough);
    if (j.contains("offset")) out.setOffset(num(j.at("offset")));
    return out;
  }
  SmoothCircleMap out(std::move(c), std::move(d));
  if (j.contains("offset")) out.setOffset(num(j.at("offset")));
  return out;
}

int threadCap() {
  if (const char* env = std::getenv("ORDERLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1 && n <= 64) return n;
  }
  return 1;
}

int runDecompose(RunConfig& run, const std::string& inputPath,
                 const std::string& ring, bool minimal, int coeffBound,
                 int lengthBound,
                 std::chrono::steady_clock::time_point started) {
  SpecialLinearElement m{matrixFromJson(loadJsonFile(inputPath))};
  json result;
  if (ring == "z") {
    result["decomposition"] = decompositionToJson(decomposeOverIntegers(m));
  } else if (ring == "q") {
    result["decomposition"] = decompositionToJson(decomposeOverField(m));
  } else {
    throw UsageError("--ring must be z or q");
  }
  std::string verdict = "pass";
  if (minimal) {
    auto found = minimalDecomposition(m, coeffBound, lengthBound);
    result["minimalFound"] = found.has_value();
    if (found)
      result["minimal"] = decompositionToJson(*found);
    else
      verdict = "inconclusive";
  }
  return emit(run, result, verdict, started);
}

int runDecomposeStats(RunConfig& run, int n, int samples, int wordLength,
                      int coeffBound, std::uint64_t seed,
                      std::chrono::steady_clock::time_point started) {
  auto stats = decompositionStats(n, samples, wordLength, coeffBound, seed);
  json histogram = json::object();
  for (const auto& [count, freq] : stats.countHistogram)
    histogram[std::to_string(count)] = freq;
  json result{{"sampleSize", stats.sampleSize},
              {"countHistogram", histogram},
              {"maxCount", stats.maxCount},
              {"meanCount", stats.meanCount.str()}};
  return emit(run, result, "pass", started);
}

int runOrderCheck(RunConfig& run, const std::string& conePath, int ballRadius,
                  std::chrono::steady_clock::time_point started) {
  json coneJson = loadJsonFile(conePath);
  if (!coneJson.contains("generators"))
    throw UsageError("cone file needs a 'generators' object");
  GroupModel model = modelFromJson(coneJson.at("generators"));
  PositiveConeSpec cone = coneFromJsonWithModel(coneJson, model);
  auto report = checkConeAxioms(cone, model, model.ball(ballRadius));
  json result{{"partitionChecks", report.partitionChecks},
              {"closureChecks", report.closureChecks},
              {"passed", report.passed}};
  if (report.certificate)
    result["certificate"] = certificateToJson(*report.certificate, model);
  return emit(run, result, report.passed ? "pass" : "fail", started);
}

int runWitte(RunConfig& run, long k, const std::string& oracleSpec,
             long witnessBound, std::uint64_t seed,
             std::chrono::steady_clock::time_point started) {
  WitteSystem system = buildWitteSystem(k);
  auto makeOracle = [&]() -> std::unique_ptr<OrderOracle> {
    if (oracleSpec == "greedy")
      return std::make_unique<GreedyOracle>(system.model, seed);
    if (oracleSpec == "greedy-positive")
      return std::make_unique<GreedyOracle>(system.model, seed,
                                            GreedyOracle::Mode::AlwaysPositive);
    if (oracleSpec == "greedy-negative")
      return std::make_unique<GreedyOracle>(system.model, seed,
                                            GreedyOracle::Mode::AlwaysNegative);
    if (oracleSpec.rfind("cone:", 0) == 0) {
      json coneJson = loadJsonFile(oracleSpec.substr(5));
      return std::make_unique<ConeOracle>(
          coneFromJsonWithModel(coneJson, system.model), system.model);
    }
    if (oracleSpec.rfind("action:", 0) == 0) {
      json actionJson = loadJsonFile(oracleSpec.substr(7));
      std::vector<LinePLMap> maps;
      for (const auto& m : actionJson.at("maps"))
        maps.push_back(lineMapFromJson(m));
      return std::make_unique<ActionOracle>(system.model, std::move(maps));
    }
    throw UsageError("unknown oracle spec: " + oracleSpec);
  };

  auto oracle = makeOracle();
  WitteOutcome outcome = wittePipeline(system, *oracle, witnessBound);
  json result;
  std::string verdict;
  if (std::holds_alternative<ViolationCertificate>(outcome)) {
    const auto& cert = std::get<ViolationCertificate>(outcome);
    auto fresh = makeOracle();
    const ReplayReport replay = replayCertificate(cert, *fresh);
    result["outcome"] = "certificate";
    result["certificate"] = certificateToJson(cert, system.model);
    result["replayVerified"] = replay.verified;
    result["replayDetail"] = replay.detail;
    verdict = "fail";  // the candidate order was refuted
  } else {
    const auto& inc = std::get<WitteInconclusive>(outcome);
    json stages = json::array();
    for (const auto& stage : inc.stages)
      stages.push_back({{"stage", stage.stage}, {"outcome", stage.outcome}});
    result["outcome"] = "inconclusive";
    result["witnessBound"] = inc.witnessBound;
    result["stages"] = stages;
    verdict = "inconclusive";
  }
  return emit(run, result, verdict, started);
}

int runRealize(RunConfig& run, const std::string& conePath, int ballRadius,
               std::chrono::steady_clock::time_point started) {
  json coneJson = loadJsonFile(conePath);
  GroupModel model = modelFromJson(coneJson.at("generators"));
  PositiveConeSpec cone = coneFromJsonWithModel(coneJson, model);
  ConeOracle oracle(cone, model);

  std::vector<GroupWord> ball = model.ball(ballRadius);
  std::sort(ball.begin(), ball.end(),
            [&](const GroupWord& u, const GroupWord& v) {
              return oracle.sign(u.inverse() * v) == Sign::Positive;
            });
  try {
    auto realization = dynamicalRealization(ball, model);
    json words = json::array();
    json points = json::array();
    for (size_t i = 0; i < realization.orderedBall.size(); ++i) {
      words.push_back(realization.orderedBall[i].str(model.names()));
      points.push_back(realization.points[i].str());
    }
    json maps = json::array();
    for (const auto& m : realization.generatorMaps) {
      json knots = json::array();
      for (const auto& knot : m.knots())
        knots.push_back(json::array({knot.x.str(), knot.y.str()}));
      maps.push_back({{"knots", knots},
                      {"leftSlope", m.leftSlope().str()},
                      {"rightSlope", m.rightSlope().str()}});
    }
    json result{{"ball", words}, {"points", points}, {"generatorMaps", maps}};
    return emit(run, result, "pass", started);
  } catch (const std::invalid_argument& e) {
    json result{{"error", e.what()}};
    return emit(run, result, "fail", started);
  }
}

int runEuler(RunConfig& run, const std::string& gensPath, int ballRadius,
             std::chrono::steady_clock::time_point started) {
  auto gens = circleGeneratorsFromJson(loadJsonFile(gensPath));
  EulerCocycleTable table = buildEulerTable(gens, ballRadius);
  json values = json::array();
  bool inRange = true;
  for (const auto& [pair, z] : table.values) {
    values.push_back({{"g", table.context.name(pair.first)},
                      {"h", table.context.name(pair.second)},
                      {"z", z}});
    if (z != 0 && z != 1) inRange = false;
  }
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < table.context.size(); ++a)
    for (int b = 0; b < table.context.size(); ++b)
      for (int c = 0; c < table.context.size(); ++c)
        if (table.context.product(a, b) && table.context.product(b, c))
          triples.push_back({a, b, c});
  auto report = checkCocycleIdentity(table, triples);
  json result{{"elements", json::array()},
              {"values", values},
              {"cocycleCheckedTriples", report.checkedTriples},
              {"cocycleHolds", report.holds},
              {"valuesInRange", inRange}};
  for (int i = 0; i < table.context.size(); ++i)
    result["elements"].push_back(table.context.name(i));
  const bool pass = report.holds && inRange;
  return emit(run, result, pass ? "pass" : "fail", started);
}

int runCoboundary(RunConfig& run, const std::string& gensPath, int ballRadius,
                  long phiBound,
                  std::chrono::steady_clock::time_point started) {
  auto gens = circleGeneratorsFromJson(loadJsonFile(gensPath));
  auto phi = coboundarySearch(gens, ballRadius, phiBound);
  GroupContext ctx = GroupContext::fromCircleGenerators(gens, ballRadius);
  json result{{"found", phi.has_value()}};
  if (phi) {
    json values = json::array();
    for (int i = 0; i < ctx.size(); ++i)
      values.push_back({{"element", ctx.name(i)}, {"value", phi->value({i})}});
    result["phi"] = values;
    result["phiBoundUsed"] = phi->bound();
  } else {
    result["note"] =
        "no bounded primitive within the search bound; this does not prove "
        "the class is nonzero";
  }
  return emit(run, result, phi ? "pass" : "inconclusive", started);
}

int runOrbits(RunConfig& run, const std::string& gensPath, int maxOrbit,
              int maxWord, std::chrono::steady_clock::time_point started) {
  auto gens = circleGeneratorsFromJson(loadJsonFile(gensPath));
  auto orbit = finiteOrbitSearch(gens, maxOrbit, maxWord);
  json result{{"found", orbit.has_value()}};
  if (orbit) {
    json points = json::array();
    for (const auto& p : orbit->points) points.push_back(pointToJson(p));
    result["orbit"] = {{"seed", pointToJson(orbit->seed)},
                       {"size", orbit->points.size()},
                       {"points", points}};
  }
  return emit(run, result, orbit ? "pass" : "inconclusive", started);
}

int runHolder(RunConfig& run, const std::string& gensPath, int maxWord,
              std::chrono::steady_clock::time_point started) {
  auto gens = circleGeneratorsFromJson(loadJsonFile(gensPath));
  auto outcome = holderWitness(gens, maxWord);
  json result;
  std::string verdict;
  if (std::holds_alternative<HolderWitness>(outcome)) {
    const auto& w = std::get<HolderWitness>(outcome);
    result["outcome"] = "witness";
    result["word"] = w.word.str();
    result["fixedPoint"] = pointToJson(w.fixedPoint);
    verdict = "pass";
  } else if (std::holds_alternative<AbelianNotice>(outcome)) {
    result["outcome"] = "abelian";
    result["note"] = "generators commute; the fixed-point dichotomy is vacuous";
    verdict = "pass";
  } else {
    result["outcome"] = "not-found";
    result["maxWordLength"] = std::get<WitnessNotFound>(outcome).maxWordLength;
    verdict = "inconclusive";
  }
  return emit(run, result, verdict, started);
}

int runNavasCheck(RunConfig& run, const std::string& mapPath, int levels,
                  int baseN, double baseDelta,
                  std::chrono::steady_clock::time_point started) {
  SmoothCircleMap g = smoothMapFromJson(loadJsonFile(mapPath));
  ProbeConfig config;
  config.threads = threadCap();
  auto report =
      boundednessProbe(g, refinementSchedule(baseN, baseDelta, levels), config);
  json levelRows = json::array();
  for (const auto& level : report.levels)
    levelRows.push_back({{"n", level.level.n},
                         {"delta", level.level.delta},
                         {"sup", level.sup},
                         {"l2", level.l2}});
  std::string probeVerdict = report.stabilized ? "stabilized" : "growing";
  if (!report.stabilized && report.finalRatioSup < 0.8) probeVerdict = "unclear";
  json result{{"levels", levelRows},
              {"verdict", probeVerdict},
              {"finalRatioSup", report.finalRatioSup},
              {"finalRatioL2", report.finalRatioL2},
              {"growthFactorSup", report.growthFactorSup}};
  std::string verdict =
      report.stabilized ? "pass"
                        : (probeVerdict == "growing" ? "fail" : "inconclusive");
  return emit(run, result, verdict, started);
}

}  // namespace

int main(int argc, char** argv) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"orderlab: left orders, elementary decompositions, and circle "
               "actions with exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig run;
  std::string output;
  bool timings = false;
  app.add_option("--output", output, "write the JSON report to a file");
  app.add_flag("--timings", timings, "include wallTimeMs in the report");

  auto* decompose = app.add_subcommand(
      "decompose", "factor a special linear matrix into elementary matrices");
  std::string ring = "z", inputPath;
  bool minimal = false, decomposeSchema = false;
  int coeffBound = 1, lengthBound = 6;
  decompose->add_option("--ring", ring, "z or q");
  decompose->add_option("--input", inputPath, "matrix JSON file");
  decompose->add_flag("--minimal", minimal, "also run the BFS minimizer");
  decompose->add_option("--coeff-bound", coeffBound, "BFS coefficient bound");
  decompose->add_option("--length-bound", lengthBound, "BFS length bound");
  decompose->add_flag("--schema", decomposeSchema, "print the report schema");

  auto* stats = app.add_subcommand("decompose-stats",
                                   "decomposition counts over random samples");
  int statsN = 3, samples = 100, wordLength = 20, statsCoeffBound = 3;
  std::uint64_t seed = 0;
  bool statsSchema = false;
  stats->add_option("--n", statsN, "matrix dimension");
  stats->add_option("--samples", samples, "sample count");
  stats->add_option("--word-length", wordLength, "generator word length");
  stats->add_option("--coeff-bound", statsCoeffBound,
                    "generator coefficient bound");
  stats->add_option("--seed", seed, "random seed");
  stats->add_flag("--schema", statsSchema, "print the report schema");

  auto* orderCheck =
      app.add_subcommand("order-check", "verify cone axioms on a word ball");
  std::string conePath;
  int ballRadius = 4;
  bool orderSchema = false;
  orderCheck->add_option("--cone", conePath, "cone JSON file");
  orderCheck->add_option("--ball-radius", ballRadius, "word ball radius");
  orderCheck->add_flag("--schema", orderSchema, "print the report schema");

  auto* witte =
      app.add_subcommand("witte", "run the hexagon refutation pipeline");
  long witteK = 1, witnessBound = 50;
  std::string oracleSpec = "greedy";
  std::uint64_t witteSeed = 0;
  bool witteSchema = false;
  witte->add_option("--k", witteK, "parameter k of the six generators");
  witte->add_option("--oracle", oracleSpec,
                    "greedy | greedy-positive | greedy-negative | cone:FILE | "
                    "action:FILE");
  witte->add_option("--witness-bound", witnessBound, "power search bound");
  witte->add_option("--seed", witteSeed, "greedy oracle seed");
  witte->add_flag("--schema", witteSchema, "print the report schema");

  auto* realize = app.add_subcommand(
      "realize", "embed an ordered ball into Q with induced PL actions");
  std::string realizeCone;
  int realizeRadius = 3;
  bool realizeSchema = false;
  realize->add_option("--cone", realizeCone, "cone JSON file");
  realize->add_option("--ball-radius", realizeRadius, "word ball radius");
  realize->add_flag("--schema", realizeSchema, "print the report schema");

  auto* euler = app.add_subcommand("euler", "Euler cocycle table and identity");
  std::string eulerGens;
  int eulerBall = 3;
  bool eulerSchema = false;
  euler->add_option("--generators", eulerGens, "generator JSON file");
  euler->add_option("--ball", eulerBall, "ball radius");
  euler->add_flag("--schema", eulerSchema, "print the report schema");

  auto* coboundary = app.add_subcommand(
      "coboundary", "search for a bounded primitive of the Euler cocycle");
  std::string coboundaryGens;
  int coboundaryBall = 3;
  long phiBound = 2;
  bool coboundarySchema = false;
  coboundary->add_option("--generators", coboundaryGens, "generator JSON file");
  coboundary->add_option("--ball", coboundaryBall, "ball radius");
  coboundary->add_option("--phi-bound", phiBound, "max |phi| searched");
  coboundary->add_flag("--schema", coboundarySchema, "print the report schema");

  auto* orbits = app.add_subcommand("orbits", "finite orbit search");
  std::string orbitsGens;
  int maxOrbit = 16, orbitsMaxWord = 5;
  bool orbitsSchema = false;
  orbits->add_option("--generators", orbitsGens, "generator JSON file");
  orbits->add_option("--max-orbit", maxOrbit, "orbit size cap");
  orbits->add_option("--max-word", orbitsMaxWord, "seed word length cap");
  orbits->add_flag("--schema", orbitsSchema, "print the report schema");

  auto* holder = app.add_subcommand(
      "holder", "find a nonidentity element with a fixed point");
  std::string holderGens;
  int holderMaxWord = 4;
  bool holderSchema = false;
  holder->add_option("--generators", holderGens, "generator JSON file");
  holder->add_option("--max-word", holderMaxWord, "word length cap");
  holder->add_flag("--schema", holderSchema, "print the report schema");

  auto* navas = app.add_subcommand(
      "navas-check", "kernel boundedness probe across grid refinements");
  std::string mapPath;
  int levels = 5, baseN = 256;
  double baseDelta = 1.0 / 64;
  bool navasSchema = false;
  navas->add_option("--map", mapPath, "map JSON file");
  navas->add_option("--levels", levels, "refinement levels");
  navas->add_option("--base-n", baseN, "coarsest grid size");
  navas->add_option("--base-delta", baseDelta, "coarsest exclusion band");
  navas->add_flag("--schema", navasSchema, "print the report schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  run.outputPath = output;
  run.timings = timings;

  try {
    if (decompose->parsed()) {
      if (decomposeSchema) return printSchema("decompose");
      run.subcommand = "decompose";
      run.configEcho = {{"ring", ring},
                        {"input", inputPath},
                        {"minimal", minimal},
                        {"coeffBound", coeffBound},
                        {"lengthBound", lengthBound}};
      if (inputPath.empty()) throw UsageError("--input is required");
      return runDecompose(run, inputPath, ring, minimal, coeffBound,
                          lengthBound, started);
    }
    if (stats->parsed()) {
      if (statsSchema) return printSchema("decompose-stats");
      run.subcommand = "decompose-stats";
      run.configEcho = {{"n", statsN},
                        {"samples", samples},
                        {"wordLength", wordLength},
                        {"coeffBound", statsCoeffBound},
                        {"seed", seed}};
      return runDecomposeStats(run, statsN, samples, wordLength,
                               statsCoeffBound, seed, started);
    }
    if (orderCheck->parsed()) {
      if (orderSchema) return printSchema("order-check");
      run.subcommand = "order-check";
      run.configEcho = {{"cone", conePath}, {"ballRadius", ballRadius}};
      if (conePath.empty()) throw UsageError("--cone is required");
      return runOrderCheck(run, conePath, ballRadius, started);
    }
    if (witte->parsed()) {
      if (witteSchema) return printSchema("witte");
      run.subcommand = "witte";
      run.configEcho = {{"k", witteK},
                        {"oracle", oracleSpec},
                        {"witnessBound", witnessBound},
                        {"seed", witteSeed}};
      return runWitte(run, witteK, oracleSpec, witnessBound, witteSeed,
                      started);
    }
    if (realize->parsed()) {
      if (realizeSchema) return printSchema("realize");
      run.subcommand = "realize";
      run.configEcho = {{"cone", realizeCone}, {"ballRadius", realizeRadius}};
      if (realizeCone.empty()) throw UsageError("--cone is required");
      return runRealize(run, realizeCone, realizeRadius, started);
    }
    if (euler->parsed()) {
      if (eulerSchema) return printSchema("euler");
      run.subcommand = "euler";
      run.configEcho = {{"generators", eulerGens}, {"ball", eulerBall}};
      if (eulerGens.empty()) throw UsageError("--generators is required");
      return runEuler(run, eulerGens, eulerBall, started);
    }
    if (coboundary->parsed()) {
      if (coboundarySchema) return printSchema("coboundary");
      run.subcommand = "coboundary";
      run.configEcho = {{"generators", coboundaryGens},
                        {"ball", coboundaryBall},
                        {"phiBound", phiBound}};
      if (coboundaryGens.empty()) throw UsageError("--generators is required");
      return runCoboundary(run, coboundaryGens, coboundaryBall, phiBound,
                           started);
    }
    if (orbits->parsed()) {
      if (orbitsSchema) return printSchema("orbits");
      run.subcommand = "orbits";
      run.configEcho = {{"generators", orbitsGens},
                        {"maxOrbit", maxOrbit},
                        {"maxWord", orbitsMaxWord}};
      if (orbitsGens.empty()) throw UsageError("--generators is required");
      return runOrbits(run, orbitsGens, maxOrbit, orbitsMaxWord, started);
    }
    if (holder->parsed()) {
      if (holderSchema) return printSchema("holder");
      run.subcommand = "holder";
      run.configEcho = {{"generators", holderGens}, {"maxWord", holderMaxWord}};
      if (holderGens.empty()) throw UsageError("--generators is required");
      return runHolder(run, holderGens, holderMaxWord, started);
    }
    if (navas->parsed()) {
      if (navasSchema) return printSchema("navas-check");
      run.subcommand = "navas-check";
      run.configEcho = {{"map", mapPath},
                        {"levels", levels},
                        {"baseN", baseN},
                        {"baseDelta", baseDelta}};
      if (mapPath.empty()) throw UsageError("--map is required");
      return runNavasCheck(run, mapPath, levels, baseN, baseDelta, started);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
