// Copyright 2026 The stylonet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: acceptance --work DIR [--only N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../oracles.h"
#include "../test_data.h"
#include "stylonet/experiment.h"
#include "stylonet/fusion.h"
#include "stylonet/io.h"
#include "stylonet/learn.h"
#include "stylonet/metrics.h"
#include "stylonet/network.h"
#include "stylonet/random.h"
#include "stylonet/style.h"
#include "stylonet/synth.h"
#include "stylonet/text.h"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace stylonet;

// Tolerances and limits.
constexpr double kPipelineSeconds = 1.0;
constexpr double kAccessibilityTol = 1e-9;
constexpr double kWalkOracleTol = 1e-9;
constexpr double kGraphOracleTol = 1e-9;
constexpr double kGraphSeconds = 120.0;
constexpr double kIntermittencyLo = 0.9, kIntermittencyHi = 1.1;
constexpr double kSallyRelTol = 0.15;
constexpr double kAffineTol = 1e-12;
constexpr double kGammaFloor = 0.8;
constexpr double kEndToEndSeconds = 600.0;
constexpr double kInfoGainTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    if (o.pass) o.detail.clear();
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome pipeline_fidelity(const fs::path&) {
  Outcome o;
  const Timer timer;
  const Document doc = testdata::processed_poem();
  const WordNetwork net = build_adjacency_network(doc);
  const double secs = timer.seconds();
  require(o, doc.lemmas() == testdata::poem_stream(), "token stream differs");
  require(o, net.node_count() == 9, "nodes " + std::to_string(net.node_count()) + " != 9");
  require(o, net.edge_count() == 11, "edges " + std::to_string(net.edge_count()) + " != 11");
  require(o, secs < kPipelineSeconds, "took " + fmt(secs) + " s");
  if (o.pass) o.detail = "27 tokens, 9 nodes, 11 edges in " + fmt(secs) + " s";
  return o;
}

Outcome recurrence(const fs::path&) {
  Outcome o;
  const RecurrenceSeries s = recurrence_times(testdata::processed_poem(), "stone");
  const std::vector<std::size_t> gaps(s.times.begin(), s.times.end() - 1);
  require(o, gaps == std::vector<std::size_t>{1, 3, 3, 11, 1, 5}, "gaps differ");
  require(o, s.times.back() == 3, "T_N = " + std::to_string(s.times.back()));
  const std::size_t total = std::accumulate(s.times.begin(), s.times.end(), std::size_t{0});
  require(o, total == 27, "sum " + std::to_string(total));
  if (o.pass) o.detail = "T = {1,3,3,11,1,5}, T_N = 3, sum 27";
  return o;
}

Outcome accessibility_check(const fs::path&) {
  Outcome o;
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId j = 1; j <= 4; ++j) {
    e.emplace_back(0, j);
    for (NodeId m = 5; m <= 9; ++m) e.emplace_back(j, m);
  }
  const double alpha = accessibility(WordNetwork::from_edges(10, e), 0, 2);
  require(o, std::abs(alpha - 5.0) <= kAccessibilityTol, "alpha = " + fmt(alpha));

  Rng rng(20240601);
  double worst = 0;
  std::size_t walks = 0;
  for (int g = 0; g < 200; ++g) {
    const std::size_t n = 2 + rng.uniform_index(11);
    const WordNetwork net = oracle::random_graph(n, 0.15 + 0.5 * rng.uniform(), rng);
    const auto a = oracle::adjacency(net);
    for (unsigned h = 1; h <= 3; ++h) {
      for (NodeId i = 0; i < n; ++i) {
        const WalkDistribution d = saw_distribution(net, i, h);
        const double got = accessibility(net, i, h);
        const double want = oracle::saw_accessibility(a, i, h);
        worst = std::max(worst, std::abs(got - want));
        require(o, got >= 0.0 && got <= static_cast<double>(d.support()) + 1e-9,
                "bound violated on graph " + std::to_string(g));
        require(o, d.support() == oracle::saw(a, i, h).size(),
                "walk support differs on graph " + std::to_string(g));
        ++walks;
      }
    }
  }
  require(o, worst <= kWalkOracleTol, "oracle deviation " + fmt(worst));
  if (o.pass) {
    o.detail = "alpha = " + fmt(alpha) + "; " + std::to_string(walks) +
               " walks on 200 graphs, max deviation " + fmt(worst);
  }
  return o;
}

Outcome graph_oracles(const fs::path&) {
  Outcome o;
  const Timer timer;
  std::size_t graphs = 0;
  double worst = 0;
  const auto track = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const WordNetwork& net : oracle::all_connected_graphs(n)) {
      ++graphs;
      const auto a = oracle::adjacency(net);
      const auto b = betweenness(net);
      const auto ob = oracle::betweenness(a);
      const Clustering c = clustering(net);
      const auto oc = oracle::clustering(a);
      const PathLengths p = shortest_paths(net);
      const auto op = oracle::shortest_paths(a);
      const auto r = assortativity(net);
      const auto orr = oracle::assortativity(a);
      require(o, r.has_value() == orr.has_value(), "assortativity definedness differs");
      if (r && orr) track(*r, *orr);
      track(c.global, oc.global);
      require(o, p.network.has_value() == op.network.has_value(), "path definedness differs");
      if (p.network && op.network) track(*p.network, *op.network);
      for (NodeId i = 0; i < n; ++i) {
        track(b[i], ob[i]);
        track(c.local[i], oc.local[i]);
        require(o, p.node[i].has_value() == op.node[i].has_value(), "node path definedness");
        if (p.node[i] && op.node[i]) track(*p.node[i], *op.node[i]);
      }
    }
  }
  const double secs = timer.seconds();
  require(o, graphs == 1 + 1 + 4 + 38 + 728 + 26704, "graph count " + std::to_string(graphs));
  require(o, worst <= kGraphOracleTol, "deviation " + fmt(worst));
  require(o, secs < kGraphSeconds, "took " + fmt(secs) + " s");
  if (o.pass) {
    o.detail = std::to_string(graphs) + " labeled connected graphs, max deviation " + fmt(worst) +
               ", " + fmt(secs) + " s";
  }
  return o;
}

Outcome intermittency_check(const fs::path&) {
  Outcome o;
  SynthOptions opts;
  opts.classes = 2;
  opts.docs_per_class = 1;
  opts.tokens = 50000;
  opts.seed = 5;
  const SynthDocument sd = synthesize_corpus(opts).front();
  Document doc{sd.id, sd.label, tokenize(sd.text)};
  doc = shuffle_tokens(doc, 17);
  std::map<std::string, std::size_t> counts;
  for (const Token& t : doc.tokens) ++counts[t.lemma];
  double sum = 0;
  std::size_t words = 0;
  for (const auto& [w, n] : counts) {
    if (n < 30) continue;
    const auto i = intermittency(recurrence_times(doc, w), 30);
    if (!i) continue;
    sum += *i;
    ++words;
  }
  const double mean = words ? sum / static_cast<double>(words) : 0.0;
  require(o, doc.size() == 50000, "document has " + std::to_string(doc.size()) + " tokens");
  require(o, words > 0, "no word reaches 30 occurrences");
  require(o, mean >= kIntermittencyLo && mean <= kIntermittencyHi, "mean I = " + fmt(mean));
  if (o.pass) o.detail = "mean I = " + fmt(mean) + " over " + std::to_string(words) + " words";

  const fs::path sally = testdata::data_path("sally.txt");
  if (fs::exists(sally)) {
    const Document text{"sally", "", tokenize(read_file(sally))};
    const auto il = intermittency(recurrence_times(text, "long"));
    const auto ih = intermittency(recurrence_times(text, "hobson"));
    require(o, il && std::abs(*il - 1.02) <= kSallyRelTol * 1.02, "I(long) off");
    require(o, ih && std::abs(*ih - 3.40) <= kSallyRelTol * 3.40, "I(hobson) off");
    if (o.pass) o.detail += "; I(long) = " + fmt(*il) + ", I(hobson) = " + fmt(*ih);
  } else if (o.pass) {
    o.detail += "; novel text absent, reproduction skipped";
  }
  return o;
}

MembershipMatrix random_memberships(std::size_t n, std::size_t c, Rng& rng) {
  MembershipMatrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < c; ++j) s += m(i, j) = rng.uniform();
    for (std::size_t j = 0; j < c; ++j) m(i, j) /= s;
  }
  return m;
}

std::vector<std::size_t> row_argmax(const MembershipMatrix& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    out.push_back(static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin()));
  }
  return out;
}

Outcome fusion_endpoints(const fs::path&) {
  Outcome o;
  Rng rng(606);
  const MembershipMatrix t = random_memberships(1000, 8, rng);
  const MembershipMatrix r = random_memberships(1000, 8, rng);
  require(o, hybrid_decide(hybrid_combine(r, t, 0.0)) == row_argmax(t), "hybrid at 0");
  require(o, hybrid_decide(hybrid_combine(r, t, 1.0)) == row_argmax(r), "hybrid at 1");
  require(o, tiebreaker_decide(t, r, 0.0) == row_argmax(t), "tiebreaker at 0");
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const double l1 = rng.uniform(), l2 = rng.uniform(), s = rng.uniform();
    const double l = s * l1 + (1 - s) * l2;
    const MembershipMatrix a = hybrid_combine(r, t, l1), b = hybrid_combine(r, t, l2);
    const MembershipMatrix c = hybrid_combine(r, t, l);
    for (std::size_t i = 0; i < c.data().size(); ++i) {
      worst = std::max(worst, std::abs(s * a.data()[i] + (1 - s) * b.data()[i] - c.data()[i]));
    }
  }
  require(o, worst <= kAffineTol, "affinity deviation " + fmt(worst));
  if (o.pass) o.detail = "1000x8 endpoints exact, affinity deviation " + fmt(worst);
  return o;
}

Outcome gain_guarantee(const fs::path&) {
  Outcome o;
  Rng rng(707);
  double lowest = INFINITY;
  std::size_t sweeps = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t c = 2 + rng.uniform_index(6);
    std::vector<FusionRun> runs(1 + rng.uniform_index(10));
    for (FusionRun& run : runs) {
      const std::size_t n = 1 + rng.uniform_index(30);
      run.traditional = random_memberships(n, c, rng);
      run.network = random_memberships(n, c, rng);
      for (std::size_t i = 0; i < n; ++i) run.labels.push_back(rng.uniform_index(c));
    }
    const FusionConfig cfg{0.01 + 0.2 * rng.uniform(), 0.01 + 0.2 * rng.uniform()};
    for (FusionRule rule : {FusionRule::kHybrid, FusionRule::kTiebreaker}) {
      const GainReport g = sweep(rule, runs, cfg);
      if (!g.best_gain) continue;
      ++sweeps;
      lowest = std::min(lowest, *g.best_gain);
    }
  }
  require(o, sweeps > 0, "no sweep had a defined gain");
  require(o, lowest >= 1.0, "min gain " + fmt(lowest));
  if (o.pass) o.detail = std::to_string(sweeps) + " sweeps, min gain " + fmt(lowest);
  return o;
}

Outcome end_to_end(const fs::path& work) {
  Outcome o;
  const fs::path root = work / "desk";
  fs::remove_all(root);
  const Timer timer;
  RunConfig c;
  c.seed = 1;
  c.threads = worker_count();
  c.out = root / "corpus";
  cmd_synth(c);
  c.manifest = root / "corpus" / "manifest.csv";
  c.out = root / "features";
  cmd_features(c);
  c.features = root / "features";
  c.out = root / "classify";
  cmd_classify(c);
  const double secs = timer.seconds();

  const json j = json::parse(read_file(root / "classify" / "results.json"));
  std::ostringstream detail;
  bool interior_gain = false;
  for (const json& run : j["runs"]) {
    const std::string fam = run["traditional_family"];
    const double gt = run["traditional"]["gamma"], gr = run["network"]["gamma"];
    require(o, gt > kGammaFloor, fam + " gamma " + fmt(gt));
    require(o, gr > kGammaFloor, "net gamma " + fmt(gr));
    const json& h = run["hybrid"];
    double gain = 0, lambda = 0;
    if (!h["delta_gamma_max"].is_null()) {
      gain = h["delta_gamma_max"];
      lambda = h["best_parameter"];
      interior_gain = interior_gain || (gain > 1.0 && lambda > 0.0 && lambda < 1.0);
    }
    detail << fam << ": G_T " << fmt(gt) << " G_R " << fmt(gr) << " dG " << fmt(gain) << " at "
           << fmt(lambda) << "; ";
  }
  require(o, interior_gain, "no family pair gains at an interior lambda");
  require(o, secs < kEndToEndSeconds, "took " + fmt(secs) + " s");
  if (o.pass) o.detail = detail.str() + fmt(secs) + " s";
  return o;
}

LabeledDataset dataset(const std::vector<double>& x, const std::vector<std::size_t>& y) {
  LabeledDataset d;
  d.attributes = {"x"};
  d.classes = {"A", "B"};
  for (std::size_t i = 0; i < x.size(); ++i) d.add("r", y[i], std::vector<double>{x[i]});
  return d;
}

Outcome information_gain(const fs::path&) {
  Outcome o;
  const double perfect = info_gain(dataset({0, 0, 1, 1}, {0, 0, 1, 1}), "x", 2);
  const double constant = info_gain(dataset({3, 3, 3, 3}, {0, 0, 1, 1}), "x", 2);
  const double partial = info_gain(dataset({0, 0, 1, 1}, {0, 0, 0, 1}), "x", 2);
  const double h = -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25));
  require(o, std::abs(perfect - 1.0) <= kInfoGainTol, "perfect split " + fmt(perfect));
  require(o, std::abs(constant) <= kInfoGainTol, "constant " + fmt(constant));
  require(o, std::abs(partial - (h - 0.5)) <= kInfoGainTol, "partial " + fmt(partial));

  Rng rng(909);
  double leak_dev = 0, lowest = INFINITY;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t classes = 2 + rng.uniform_index(4);
    const std::size_t n = 5 + rng.uniform_index(60);
    LabeledDataset d;
    d.attributes = {"leak", "noise", "coarse"};
    for (std::size_t c = 0; c < classes; ++c) d.classes.push_back("c" + std::to_string(c));
    std::vector<double> counts(classes, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t y = rng.uniform_index(classes);
      counts[y] += 1;
      d.add("r", y, std::vector<double>{static_cast<double>(y), rng.normal(),
                                        static_cast<double>(rng.uniform_index(3))});
    }
    double entropy = 0;
    for (double k : counts)
      if (k > 0) entropy -= k / n * std::log2(k / n);
    leak_dev = std::max(leak_dev, std::abs(info_gain(d, "leak") - entropy));
    for (const auto& [name, omega] : info_gain_ranking(d)) lowest = std::min(lowest, omega);
  }
  require(o, leak_dev <= kInfoGainTol, "label leak deviates by " + fmt(leak_dev));
  require(o, lowest >= 0.0, "negative gain " + fmt(lowest));
  if (o.pass) {
    o.detail = "cases 1, 0, " + fmt(partial) + "; leak deviation " + fmt(leak_dev) +
               "; min gain over 500 datasets " + fmt(lowest);
  }
  return o;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), dir).generic_string()] = read_file(e.path());
  }
  return files;
}

Outcome determinism(const fs::path& work) {
  Outcome o;
  const fs::path root = work / "determinism";
  fs::remove_all(root);
  std::vector<std::map<std::string, std::string>> outputs;
  for (unsigned threads : {1u, 4u}) {
    // Identical paths in both runs; the directory is cleared in between.
    const fs::path run = root / "run";
    fs::remove_all(run);
    RunConfig c;
    c.seed = 3;
    c.threads = threads;
    c.synth.docs_per_class = 8;
    c.synth.tokens = 1500;
    c.shuffles = 6;
    c.folds = 4;
    c.k = {3, 5};
    c.out = run / "corpus";
    cmd_synth(c);
    c.manifest = run / "corpus" / "manifest.csv";
    c.out = run / "features";
    cmd_features(c);
    c.features = run / "features";
    c.out = run / "classify";
    cmd_classify(c);
    outputs.push_back(snapshot(run));
  }
  require(o, !outputs[0].empty(), "no outputs");
  require(o, outputs[0].size() == outputs[1].size(), "file sets differ");
  for (const auto& [name, bytes] : outputs[0]) {
    const auto it = outputs[1].find(name);
    if (it == outputs[1].end() || it->second != bytes) {
      require(o, false, name + " differs");
    }
  }
  if (o.pass) o.detail = std::to_string(outputs[0].size()) + " files identical at 1 and 4 threads";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome(const fs::path&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  fs::path work = fs::temp_directory_path() / "stylonet_acceptance";
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--work" && i + 1 < argc) {
      work = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--work DIR] [--only N]\n", argv[0]);
      return 2;
    }
  }
  fs::create_directories(work);

  const std::vector<Criterion> criteria = {
      {1, "pipeline fidelity", pipeline_fidelity},
      {2, "recurrence times", recurrence},
      {3, "accessibility", accessibility_check},
      {4, "graph metric oracles", graph_oracles},
      {5, "intermittency", intermittency_check},
      {6, "fusion endpoints", fusion_endpoints},
      {7, "gain guarantee", gain_guarantee},
      {8, "end-to-end experiment", end_to_end},
      {9, "information gain", information_gain},
      {10, "determinism", determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run(work);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
