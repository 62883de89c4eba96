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

#include "stylonet/experiment.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stylonet/error.h"
#include "stylonet/features.h"
#include "stylonet/fusion.h"
#include "stylonet/io.h"
#include "stylonet/learn.h"
#include "stylonet/metrics.h"
#include "stylonet/network.h"
#include "stylonet/parallel.h"
#include "stylonet/style.h"

namespace stylonet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

void validate_corpus_options(const RunConfig& c) {
  require(!c.manifest.empty(), "--manifest is required");
  require(c.stopwords == "file" || c.stopwords == "corpus",
          "--stopwords must be 'file' or 'corpus'");
  require(c.stopwords == "file" || c.stopword_list.empty(),
          "--stopword-list only applies to --stopwords file");
  require(!c.levels.empty(), "--h needs at least one level");
  for (unsigned h : c.levels) require(h >= 1, "--h levels must be >= 1");
  std::set<unsigned> unique(c.levels.begin(), c.levels.end());
  require(unique.size() == c.levels.size(), "--h levels must be distinct");
  require(!c.out.empty(), "--out is required");
}

json corpus_json(const RunConfig& c) {
  return {{"manifest", c.manifest.generic_string()},
          {"lexicon", c.lexicon.generic_string()},
          {"stopwords", c.stopwords},
          {"stopword_list", c.stopword_list.generic_string()},
          {"levels", c.levels}};
}

struct Corpus {
  std::vector<std::string> raw;
  std::vector<Document> docs;  // lemmatized, before stop-word removal
  StopwordPolicy stopwords;
};

Corpus load_corpus(const RunConfig& c, std::vector<std::string>& warnings) {
  const auto entries = read_manifest(c.manifest);
  if (entries.empty()) throw ArgumentError(c.manifest.string() + ": manifest lists no documents");
  LemmaLexicon lexicon;
  if (!c.lexicon.empty()) lexicon = read_lexicon(c.lexicon, &warnings);

  Corpus corpus;
  for (const ManifestEntry& e : entries) {
    std::string raw = read_file(e.path);
    Document doc;
    doc.id = e.id;
    doc.label = e.label;
    try {
      doc.tokens = tokenize(raw);
    } catch (const EncodingError& err) {
      throw EncodingError(e.path.string() + ": " + err.what(), err.byte_offset());
    }
    corpus.docs.push_back(lemmatize(doc, lexicon));
    corpus.raw.push_back(std::move(raw));
  }
  if (c.stopwords == "corpus") {
    corpus.stopwords = derive_corpus_stopwords(corpus.docs);
    if (corpus.stopwords.words.empty()) {
      warnings.push_back("no lemma occurs in every document; the stop-word list is empty");
    }
  } else if (!c.stopword_list.empty()) {
    corpus.stopwords = read_stopwords(c.stopword_list);
  } else {
    corpus.stopwords = default_english_stopwords();
  }
  return corpus;
}

std::string with_hash_line(const std::string& hash, const std::string& body) {
  return "# config-hash: " + hash + "\n" + body;
}

void write_json(const fs::path& path, const json& j, CommandReport& report) {
  write_file(path, j.dump(2) + "\n");
  report.written.push_back(path);
}

FeatureTable make_table(const std::vector<Document>& docs,
                        const std::vector<FeatureVector>& vectors,
                        std::vector<std::string> columns, const std::string& hash) {
  FeatureTable t;
  t.columns = std::move(columns);
  t.config_hash = hash;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    t.ids.push_back(docs[d].id);
    t.labels.push_back(docs[d].label);
    std::vector<std::optional<double>> row;
    row.reserve(t.columns.size());
    for (const std::string& col : t.columns) {
      const auto it = vectors[d].values.find(col);
      row.push_back(it == vectors[d].values.end() ? std::optional<double>(0.0) : it->second);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<std::string> sorted_keys(const FeatureVector& v) {
  std::vector<std::string> keys;
  for (const auto& [k, _] : v.values) keys.push_back(k);
  return keys;
}

std::string safe_name(const std::string& id) {
  std::string s = id;
  for (char& ch : s) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '-' || ch == '_' || ch == '.';
    if (!ok) ch = '_';
  }
  if (s.empty() || s == "." || s == "..") s = "_" + s;
  return s;
}

// Both tables must describe the same documents in the same order.
void check_alignment(const FeatureTable& a, const std::string& a_name,
                     const FeatureTable& b, const std::string& b_name) {
  if (a.ids.size() != b.ids.size()) {
    throw ArgumentError("column 'id': " + a_name + " has " + std::to_string(a.ids.size()) +
                        " rows but " + b_name + " has " + std::to_string(b.ids.size()));
  }
  for (std::size_t r = 0; r < a.ids.size(); ++r) {
    if (a.ids[r] != b.ids[r]) {
      throw ArgumentError("column 'id' differs at row " + std::to_string(r + 1) + ": '" +
                          a.ids[r] + "' in " + a_name + ", '" + b.ids[r] + "' in " + b_name);
    }
    if (a.labels[r] != b.labels[r]) {
      throw ArgumentError("column 'label' differs at row " + std::to_string(r + 1) + " (id '" +
                          a.ids[r] + "'): '" + a.labels[r] + "' in " + a_name + ", '" +
                          b.labels[r] + "' in " + b_name);
    }
  }
}

MembershipMatrix select_rows(const MembershipMatrix& m, const std::vector<std::size_t>& rows) {
  MembershipMatrix out(rows.size(), m.classes());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(m.row(rows[i]).begin(), m.row(rows[i]).end(), out.row(i).begin());
  }
  return out;
}

json gain_json(const GainReport& g) {
  json j;
  j["gamma_T"] = g.gamma_traditional;
  j["gamma_R"] = g.gamma_network;
  j["best_gamma"] = g.best_gamma;
  j["best_parameter"] = g.best_parameter ? json(*g.best_parameter) : json(nullptr);
  j["delta_gamma_max"] = g.best_gain ? json(*g.best_gain) : json(nullptr);
  j["delta_gamma_max_diff"] = g.best_gain ? json(*g.best_gain - 1.0) : json(nullptr);
  return j;
}

std::string format_curve(const GainReport& g) {
  std::string s = "x,gamma_hybrid,gamma_T,gamma_R,delta_gamma_ratio,delta_gamma_diff\n";
  const bool gain = !g.gain_ratio.empty();
  for (std::size_t i = 0; i < g.grid.size(); ++i) {
    s += format_double(g.grid[i]) + "," + format_double(g.gamma_fused[i]) + "," +
         format_double(g.gamma_traditional) + "," + format_double(g.gamma_network) + ",";
    if (gain) s += format_double(g.gain_ratio[i]) + "," + format_double(g.gain_diff[i]);
    else s += ",";
    s += "\n";
  }
  return s;
}

json omega_json(const std::vector<std::pair<std::string, double>>& ranking) {
  json arr = json::array();
  for (const auto& [name, omega] : ranking) arr.push_back({{"attribute", name}, {"omega", omega}});
  return arr;
}

}  // namespace

void validate_features(const RunConfig& c) {
  validate_corpus_options(c);
  require(c.eta >= 1, "--eta must be >= 1");
  require(c.shuffles >= 2, "--shuffles must be >= 2");
  require(c.min_occurrences >= 2, "--min-occurrences must be >= 2");
}

void validate_metrics_dump(const RunConfig& c) { validate_corpus_options(c); }

void validate_classify(const RunConfig& c) {
  const bool explicit_pair = !c.traditional.empty() || !c.network.empty();
  require(explicit_pair || !c.features.empty(),
          "classify needs --features or both --traditional and --network");
  require(!explicit_pair || (!c.traditional.empty() && !c.network.empty()),
          "--traditional and --network must be given together");
  require(!explicit_pair || c.features.empty(),
          "--features cannot be combined with --traditional/--network");
  if (!explicit_pair) {
    require(!c.pairs.empty(), "--pairs needs at least one family");
    for (const std::string& p : c.pairs) {
      require(p == "int" || p == "stop" || p == "bg" || p == "net",
              "--pairs: unknown family '" + p + "' (int, stop, bg, net)");
    }
  }
  require(c.classifier == "fknn" || c.classifier == "centroid",
          "--classifier must be 'fknn' or 'centroid'");
  require(!c.k.empty(), "--k needs at least one value");
  for (std::size_t k : c.k) require(k >= 1, "--k values must be >= 1");
  require(c.folds >= 2, "--folds must be >= 2");
  require(c.lambda_step > 0.0 && c.lambda_step <= 1.0, "--lambda-step must be in (0, 1]");
  require(c.theta_step > 0.0 && c.theta_step <= 1.0, "--theta-step must be in (0, 1]");
  require(!c.out.empty(), "--out is required");
}

void validate_synth(const RunConfig& c) {
  const SynthOptions& s = c.synth;
  require(s.classes >= 2, "synth: classification needs at least 2 classes");
  require(s.docs_per_class >= 1, "synth: --docs must be >= 1");
  require(s.tokens >= 2, "synth: --tokens must be >= 2");
  require(s.vocabulary >= 2, "synth: --vocabulary must be >= 2");
  require(!c.out.empty(), "--out is required");
}

std::string config_json(const RunConfig& c, const std::string& command) {
  json j;
  j["command"] = command;
  j["seed"] = c.seed;
  if (command == "features" || command == "metrics-dump") {
    j["corpus"] = corpus_json(c);
    if (command == "features") {
      j["eta"] = c.eta;
      j["shuffles"] = c.shuffles;
      j["min_occurrences"] = c.min_occurrences;
    }
  } else if (command == "classify") {
    j["features"] = c.features.generic_string();
    j["pairs"] = c.features.empty() ? json::array() : json(c.pairs);
    j["traditional"] = c.traditional.generic_string();
    j["network"] = c.network.generic_string();
    j["classifier"] = c.classifier;
    j["k"] = c.classifier == "fknn" ? json(c.k) : json::array();
    j["folds"] = c.folds;
    j["lambda_step"] = c.lambda_step;
    j["theta_step"] = c.theta_step;
  } else if (command == "synth") {
    const SynthOptions& s = c.synth;
    j["classes"] = s.classes;
    j["docs_per_class"] = s.docs_per_class;
    j["tokens"] = s.tokens;
    j["vocabulary"] = s.vocabulary;
    j["successors"] = s.successors;
    j["stopword_share"] = s.stopword_share;
    j["frequency"] = {s.frequency_tilt, s.frequency_spread};
    j["burst"] = {s.burst_strength, s.burst_spread};
    j["spelling"] = {s.spelling_tilt, s.spelling_spread};
    j["chain"] = {s.chain_base, s.chain_step, s.chain_spread};
  } else {
    throw ArgumentError("unknown command '" + command + "'");
  }
  return j.dump();
}

std::string config_hash(const RunConfig& c, const std::string& command) {
  return hex64(fnv1a64(config_json(c, command)));
}

CommandReport cmd_features(const RunConfig& config) {
  validate_features(config);
  CommandReport report;
  const std::string hash = config_hash(config, "features");
  const Corpus corpus = load_corpus(config, report.warnings);
  const std::size_t n = corpus.docs.size();

  FeatureOptions opts;
  opts.levels = config.levels;
  opts.eta = config.eta;
  opts.shuffles = config.shuffles;
  opts.seed = config.seed;
  opts.min_occurrences = config.min_occurrences;

  std::vector<FeatureVector> net(n), inter(n), stop(n), bigram(n);
  std::vector<std::vector<std::string>> doc_warnings(n);
  parallel_for(n, config.threads, [&](std::size_t d) {
    const Document& doc = corpus.docs[d];
    stop[d] = stopword_frequency_features(doc, corpus.stopwords);
    inter[d] = intermittency_features(doc, corpus.stopwords, config.min_occurrences);
    bigram[d] = char_bigram_features(corpus.raw[d]);
    try {
      NetworkFeatureReport r = network_features(remove_stopwords(doc, corpus.stopwords), opts);
      net[d] = std::move(r.features);
      doc_warnings[d] = std::move(r.warnings);
    } catch (const DegenerateInputError& e) {
      throw DegenerateInputError("document '" + doc.id + "': " + e.what());
    }
  });
  for (auto& w : doc_warnings) report.warnings.insert(report.warnings.end(), w.begin(), w.end());

  std::vector<std::string> net_columns;
  for (const std::string& name : network_measurement_names(opts)) {
    const std::string col = std::string(family_prefix(FeatureFamily::kNetwork)) + name;
    net_columns.insert(net_columns.end(), {col, col + "_norm", col + "_norm_err"});
  }
  std::set<std::string> bigram_columns;
  for (const FeatureVector& v : bigram) {
    for (const auto& [k, _] : v.values) bigram_columns.insert(k);
  }

  const std::vector<std::pair<std::string, FeatureTable>> tables = {
      {"net", make_table(corpus.docs, net, net_columns, hash)},
      {"int", make_table(corpus.docs, inter, sorted_keys(inter.front()), hash)},
      {"stop", make_table(corpus.docs, stop, sorted_keys(stop.front()), hash)},
      {"bg", make_table(corpus.docs, bigram, {bigram_columns.begin(), bigram_columns.end()},
                        hash)},
  };
  json families = json::object();
  for (const auto& [name, table] : tables) {
    const fs::path path = config.out / (name + ".csv");
    write_file(path, format_feature_table(table));
    report.written.push_back(path);
    std::size_t missing = 0;
    for (const auto& row : table.rows) {
      missing += static_cast<std::size_t>(std::count(row.begin(), row.end(), std::nullopt));
    }
    families[name] = {{"file", name + ".csv"},
                      {"columns", table.columns.size()},
                      {"missing_values", missing}};
  }

  json j;
  j["config"] = json::parse(config_json(config, "features"));
  j["config_hash"] = hash;
  j["documents"] = n;
  j["stopwords"] = corpus.stopwords.words.size();
  j["families"] = families;
  j["warnings"] = report.warnings;
  write_json(config.out / "features.json", j, report);
  return report;
}

CommandReport cmd_classify(const RunConfig& config) {
  validate_classify(config);
  CommandReport report;
  const std::string hash = config_hash(config, "classify");

  struct Pair {
    std::string traditional_name, network_name;
    fs::path traditional, network;
  };
  std::vector<Pair> pairs;
  if (!config.traditional.empty()) {
    pairs.push_back({"traditional", "network", config.traditional, config.network});
  } else {
    for (const std::string& fam : config.pairs) {
      pairs.push_back({fam, "net", config.features / (fam + ".csv"), config.features / "net.csv"});
    }
  }

  std::map<fs::path, FeatureTable> tables;
  for (const Pair& p : pairs) {
    for (const fs::path& path : {p.traditional, p.network}) {
      if (!tables.contains(path)) tables.emplace(path, read_feature_table(path));
    }
  }
  for (const Pair& p : pairs) {
    check_alignment(tables.at(p.traditional), p.traditional.string(), tables.at(p.network),
                    p.network.string());
    const std::string& ht = tables.at(p.traditional).config_hash;
    const std::string& hn = tables.at(p.network).config_hash;
    if (!ht.empty() && !hn.empty() && ht != hn) {
      report.warnings.push_back(p.traditional.string() + " and " + p.network.string() +
                                " were produced by different configurations");
    }
  }

  struct Family {
    LabeledDataset data;
    std::vector<std::string> dropped;
    std::vector<std::pair<std::string, double>> omega;
  };
  std::map<fs::path, Family> datasets;
  for (const auto& [path, table] : tables) {
    Family f;
    f.data = to_dataset(table, &f.dropped);
    if (f.data.dims() == 0) {
      throw DegenerateInputError(path.string() + ": no feature column without missing values");
    }
    f.omega = info_gain_ranking(f.data);
    datasets.emplace(path, std::move(f));
  }

  const std::vector<std::size_t> ks =
      config.classifier == "fknn" ? config.k : std::vector<std::size_t>{0};
  FusionConfig fusion;
  fusion.lambda_step = config.lambda_step;
  fusion.theta_step = config.theta_step;

  json runs = json::array();
  for (const Pair& p : pairs) {
    const Family& ft = datasets.at(p.traditional);
    const Family& fr = datasets.at(p.network);
    if (ft.data.classes != fr.data.classes) {
      throw ArgumentError("column 'label': class sets differ between " +
                          p.traditional.string() + " and " + p.network.string());
    }
    const FoldPlan plan = make_fold_plan(ft.data, config.folds, config.seed);
    report.warnings.insert(report.warnings.end(), plan.warnings.begin(), plan.warnings.end());
    std::vector<std::vector<std::size_t>> fold_rows(config.folds);
    for (std::size_t i = 0; i < plan.assignment.size(); ++i) {
      fold_rows[plan.assignment[i]].push_back(i);
    }

    for (std::size_t k : ks) {
      const auto classifier = make_classifier(config.classifier, k);
      const CvResult cvt = cross_validate(ft.data, *classifier, plan);
      const CvResult cvr = cross_validate(fr.data, *classifier, plan);
      std::vector<FusionRun> fusion_runs;
      for (const auto& rows : fold_rows) {
        if (rows.empty()) continue;
        FusionRun run{select_rows(cvt.memberships, rows), select_rows(cvr.memberships, rows), {}};
        for (std::size_t i : rows) run.labels.push_back(ft.data.labels[i]);
        fusion_runs.push_back(std::move(run));
      }

      std::string stem = p.traditional_name + "+" + p.network_name + "_" + config.classifier;
      if (k > 0) stem += "_k" + std::to_string(k);
      json run;
      run["traditional_family"] = p.traditional_name;
      run["network_family"] = p.network_name;
      run["classifier"] = config.classifier;
      run["k"] = k > 0 ? json(k) : json(nullptr);
      run["seed"] = config.seed;
      run["folds"] = config.folds;
      const auto family_json = [](const CvResult& cv, const Family& f, const fs::path& file) {
        return json{{"file", file.filename().string()},
                    {"gamma", cv.accuracy},
                    {"fold_accuracy", cv.fold_accuracy},
                    {"attributes", f.data.dims()},
                    {"dropped_missing", f.dropped},
                    {"dropped_constant", cv.dropped},
                    {"omega", omega_json(f.omega)}};
      };
      run["traditional"] = family_json(cvt, ft, p.traditional);
      run["network"] = family_json(cvr, fr, p.network);
      for (const FusionRule rule : {FusionRule::kHybrid, FusionRule::kTiebreaker}) {
        const std::string rule_name = rule == FusionRule::kHybrid ? "hybrid" : "tiebreaker";
        const GainReport g = sweep(rule, fusion_runs, fusion);
        const fs::path rel = fs::path("curves") / (stem + "_" + rule_name + ".csv");
        write_file(config.out / rel, with_hash_line(hash, format_curve(g)));
        report.written.push_back(config.out / rel);
        json gj = gain_json(g);
        gj["curve"] = rel.generic_string();
        run[rule_name] = gj;
      }
      runs.push_back(run);
    }
  }

  json j;
  j["config"] = json::parse(config_json(config, "classify"));
  j["config_hash"] = hash;
  j["runs"] = runs;
  j["warnings"] = report.warnings;
  write_json(config.out / "results.json", j, report);
  return report;
}

CommandReport cmd_synth(const RunConfig& config) {
  validate_synth(config);
  CommandReport report;
  SynthOptions opts = config.synth;
  opts.seed = config.seed;
  const auto docs = synthesize_corpus(opts);
  const auto entries = write_synthetic_corpus(config.out, docs);
  for (const ManifestEntry& e : entries) report.written.push_back(config.out / e.path);
  report.written.push_back(config.out / "manifest.csv");
  json j;
  j["config"] = json::parse(config_json(config, "synth"));
  j["config_hash"] = config_hash(config, "synth");
  j["documents"] = docs.size();
  j["manifest"] = "manifest.csv";
  write_json(config.out / "synth.json", j, report);
  return report;
}

CommandReport cmd_metrics_dump(const RunConfig& config) {
  validate_metrics_dump(config);
  CommandReport report;
  const std::string hash = config_hash(config, "metrics-dump");
  const Corpus corpus = load_corpus(config, report.warnings);
  const std::size_t n = corpus.docs.size();

  std::set<std::string> names;
  for (const Document& d : corpus.docs) {
    if (!names.insert(safe_name(d.id)).second) {
      throw ArgumentError("document ids '" + d.id + "' collide after file-name sanitizing");
    }
  }

  std::vector<json> summaries(n);
  parallel_for(n, config.threads, [&](std::size_t d) {
    const Document& doc = corpus.docs[d];
    WordNetwork net;
    try {
      net = build_adjacency_network(remove_stopwords(doc, corpus.stopwords));
    } catch (const DegenerateInputError& e) {
      throw DegenerateInputError("document '" + doc.id + "': " + e.what());
    }
    const NodeMetricTable t = compute_node_metrics(net, config.levels);
    const fs::path dir = config.out / safe_name(doc.id);

    std::ostringstream edges, nodes;
    write_edge_list(net, edges);
    write_node_table(net, nodes);
    write_file(dir / "edges.tsv", with_hash_line(hash, edges.str()));
    write_file(dir / "nodes.tsv", with_hash_line(hash, nodes.str()));

    const auto opt = [](const std::optional<double>& v) {
      return v ? format_double(*v) : std::string();
    };
    std::string csv = "lemma,count,degree,neighbor_degree,neighbor_degree_dev";
    for (unsigned h : t.levels) {
      const std::string s = std::to_string(h);
      csv += ",accessibility_h" + s + ",diversity_h" + s + ",walk_level_h" + s +
             ",distance_level_h" + s;
    }
    csv += ",betweenness,clustering,path_length\n";
    for (NodeId i = 0; i < net.node_count(); ++i) {
      csv += csv_escape(net.lemma(i)) + "," + std::to_string(net.count(i)) + "," +
             format_double(t.degrees.degree[i]) + "," + opt(t.degrees.neighbor_degree[i]) + "," +
             opt(t.degrees.neighbor_degree_dev[i]);
      for (std::size_t l = 0; l < t.levels.size(); ++l) {
        csv += "," + format_double(t.accessibility[l][i]) + "," +
               format_double(t.diversity[l][i]) + "," + std::to_string(t.walk_level[l][i]) +
               "," + std::to_string(t.distance_level[l][i]);
      }
      csv += "," + format_double(t.betweenness[i]) + "," +
             format_double(t.clustering.local[i]) + "," + opt(t.paths.node[i]) + "\n";
    }
    write_file(dir / "node_metrics.csv", with_hash_line(hash, csv));

    json s;
    s["id"] = doc.id;
    s["label"] = doc.label;
    s["directory"] = safe_name(doc.id);
    s["tokens"] = doc.size();
    s["nodes"] = net.node_count();
    s["edges"] = net.edge_count();
    s["assortativity"] = t.assortativity ? json(*t.assortativity) : json(nullptr);
    s["global_clustering"] = t.clustering.global;
    s["path_length"] = t.paths.network ? json(*t.paths.network) : json(nullptr);
    s["unreachable_fraction"] = t.paths.unreachable_fraction;
    summaries[d] = s;
  });
  for (const json& s : summaries) {
    const fs::path dir = config.out / s["directory"].get<std::string>();
    for (const char* f : {"edges.tsv", "nodes.tsv", "node_metrics.csv"}) {
      report.written.push_back(dir / f);
    }
  }

  json j;
  j["config"] = json::parse(config_json(config, "metrics-dump"));
  j["config_hash"] = hash;
  j["documents"] = summaries;
  j["warnings"] = report.warnings;
  write_json(config.out / "metrics.json", j, report);
  return report;
}

}  // namespace stylonet
